//! Seeded cross-checks between oracles.
//!
//! For each exact oracle, random word pairs are drawn, half of them equal by
//! construction (relator conjugates spliced into a copy). Whenever the exact
//! oracle answers `Equal`, every necessary oracle for the same group must
//! answer consistently.

use braidforge_core::oracles::{battery, OracleContext, Value};
use braidforge_core::presentations::{abelianize, braid_presentation, Presentation, SurfaceParams};
use braidforge_core::{format_word, parse_word_any, reduce, smith_normal_form, Alphabet, GenSym, IntMatrix, Word};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub trials: usize,
    /// Pairs the exact oracle called equal.
    pub exact_equal: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> CheckResult {
        CheckResult { name: name.to_string(), trials: 0, exact_equal: 0, failures: 0, first_failure: None }
    }

    fn fail(&mut self, detail: String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(detail);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct SoundnessReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

fn random_word(rng: &mut ChaCha8Rng, gens: &[GenSym], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| {
        let g = gens.choose(rng).expect("non-empty alphabet").clone();
        (g, if rng.gen_bool(0.5) { 1 } else { -1 })
    }))
}

/// `w` with relator conjugates and free cancellations spliced in.
fn equal_variant(rng: &mut ChaCha8Rng, w: &Word, gens: &[GenSym], relators: &[Word]) -> Word {
    let mut letters: Vec<(GenSym, i64)> = w.letters().map(|(s, e)| (s.clone(), e)).collect();
    for _ in 0..rng.gen_range(1..=2) {
        let at = rng.gen_range(0..=letters.len());
        let insert = if relators.is_empty() || rng.gen_bool(0.25) {
            let g = gens.choose(rng).expect("non-empty alphabet").clone();
            Word::from_letters([(g.clone(), 1), (g, -1)])
        } else {
            let r = relators.choose(rng).expect("non-empty").clone();
            let r = if rng.gen_bool(0.5) { r.inverse() } else { r };
            r.conjugate(&random_word(rng, gens, 2))
        };
        let tail = letters.split_off(at);
        letters.extend(insert.letters().map(|(s, e)| (s.clone(), e)));
        letters.extend(tail);
    }
    reduce(&letters.into_iter().collect::<Vec<_>>())
}

struct Group {
    name: &'static str,
    exact: OracleContext,
    necessary: Vec<OracleContext>,
    gens: Vec<GenSym>,
    relators: Vec<Word>,
    max_len: usize,
}

fn necessary_of(params: SurfaceParams) -> Vec<OracleContext> {
    battery(params).into_iter().filter(|c| c.tier() == braidforge_core::oracles::Tier::Necessary).collect()
}

fn groups() -> Vec<Group> {
    let from = |params: SurfaceParams| -> (Vec<GenSym>, Vec<Word>) {
        let p = braid_presentation(params);
        (p.generators().to_vec(), p.relators().to_vec())
    };
    let mut out = Vec::new();

    let free_gens: Vec<GenSym> = ["x1", "x2", "x3"].iter().map(|n| GenSym::named(n)).collect();
    out.push(Group {
        name: "free",
        exact: OracleContext::FreeGroup(Alphabet::new(free_gens.iter().cloned())),
        necessary: vec![OracleContext::Homology(abelianize(
            &Presentation::new("F3", free_gens.iter().cloned(), []).expect("valid"),
        ))],
        gens: free_gens,
        relators: Vec::new(),
        max_len: 12,
    });

    let disc = SurfaceParams::new(0, 1, 4);
    let (gens, relators) = from(disc);
    out.push(Group {
        name: "artin",
        exact: OracleContext::ClassicalBraid(4),
        necessary: necessary_of(disc),
        gens,
        relators,
        max_len: 6,
    });

    let genus2 = SurfaceParams::new(2, 0, 1);
    let (gens, relators) = from(genus2);
    out.push(Group {
        name: "dehn",
        exact: OracleContext::ClosedSurface(2),
        necessary: necessary_of(genus2),
        gens,
        relators,
        max_len: 12,
    });

    let torus = SurfaceParams::new(1, 0, 1);
    let (gens, relators) = from(torus);
    out.push(Group {
        name: "torus",
        exact: OracleContext::TorusZ2,
        necessary: necessary_of(torus),
        gens,
        relators,
        max_len: 12,
    });

    let annulus = SurfaceParams::new(0, 2, 2);
    let (gens, relators) = from(annulus);
    out.push(Group {
        name: "b2a",
        exact: OracleContext::B2A,
        necessary: necessary_of(annulus),
        gens,
        relators,
        max_len: 10,
    });

    let sphere1 = SurfaceParams::new(0, 0, 2);
    let (gens, _) = from(sphere1);
    let trivial =
        Presentation::new("trivial", gens.iter().cloned(), [parse_word_any("s1").expect("valid")]).expect("valid");
    out.push(Group {
        name: "trivial",
        exact: OracleContext::TrivialGroup,
        necessary: vec![OracleContext::Homology(abelianize(&trivial))],
        gens,
        relators: trivial.relators().to_vec(),
        max_len: 8,
    });
    out
}

fn oracle_checks(rng: &mut ChaCha8Rng, pairs: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for group in groups() {
        let mut res = CheckResult::new(&format!("exact-equal implies consistent: {}", group.name));
        for k in 0..pairs {
            let u = random_word(rng, &group.gens, group.max_len);
            let v = if k % 2 == 0 {
                equal_variant(rng, &u, &group.gens, &group.relators)
            } else {
                random_word(rng, &group.gens, group.max_len)
            };
            res.trials += 1;
            let exact = match group.exact.evaluate(&u, &v) {
                Ok(verdict) => verdict,
                Err(e) => {
                    res.fail(format!("{}: {e} on {u} vs {v}", group.exact.name()));
                    continue;
                }
            };
            if k % 2 == 0 && exact.value != Value::Equal {
                res.fail(format!("{} missed an equal pair: {u} vs {v}", group.exact.name()));
                continue;
            }
            if exact.value != Value::Equal {
                continue;
            }
            res.exact_equal += 1;
            for ctx in &group.necessary {
                match ctx.evaluate(&u, &v) {
                    Ok(n) if n.is_refuted() => res.fail(format!("{} refuted {u} = {v}: {n}", ctx.name())),
                    Ok(_) => {}
                    Err(e) => res.fail(format!("{}: {e}", ctx.name())),
                }
            }
        }
        out.push(res);
    }
    out
}

fn reduction_check(rng: &mut ChaCha8Rng, pairs: usize) -> CheckResult {
    let gens: Vec<GenSym> = ["a", "b", "c"].iter().map(|n| GenSym::named(n)).collect();
    let mut res = CheckResult::new("free reduction idempotent");
    for _ in 0..pairs {
        let raw: Vec<(GenSym, i64)> = (0..rng.gen_range(0..20))
            .map(|_| (gens.choose(rng).expect("non-empty").clone(), rng.gen_range(-2..=2)))
            .collect();
        res.trials += 1;
        let once = reduce(&raw);
        if reduce(once.syllables()) != once {
            res.fail(format!("{raw:?}"));
        }
    }
    res
}

fn smith_check(rng: &mut ChaCha8Rng, pairs: usize) -> CheckResult {
    let mut res = CheckResult::new("SNF witness U*A*V = D");
    for _ in 0..pairs {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows: Vec<Vec<BigInt>> =
            (0..r).map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect()).collect();
        let a = IntMatrix::from_rows(c, rows);
        res.trials += 1;
        if !smith_normal_form(&a).verify(&a) {
            res.fail(format!("{a:?}"));
        }
    }
    res
}

fn round_trip_check(rng: &mut ChaCha8Rng, pairs: usize) -> CheckResult {
    let gens: Vec<GenSym> = ["s1", "a2", "z3", "d", "A[1,2]", "x4"].iter().map(|n| GenSym::named(n)).collect();
    let mut res = CheckResult::new("parse/format round-trip");
    for _ in 0..pairs {
        let w = Word::from_syllables(
            (0..rng.gen_range(0..10)).map(|_| (gens.choose(rng).expect("non-empty").clone(), rng.gen_range(-4i64..=4))),
        );
        res.trials += 1;
        let text = format_word(&w);
        match parse_word_any(&text) {
            Ok(back) if back == w => {}
            other => res.fail(format!("{text} -> {other:?}")),
        }
    }
    res
}

pub fn run(seed: u64, pairs: usize) -> SoundnessReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = oracle_checks(&mut rng, pairs);
    checks.push(reduction_check(&mut rng, pairs));
    checks.push(smith_check(&mut rng, pairs));
    checks.push(round_trip_check(&mut rng, pairs));
    SoundnessReport { seed, checks }
}
