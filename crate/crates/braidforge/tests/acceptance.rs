//! The acceptance criteria. Each prints one PASS/FAIL line with its
//! elapsed time against a pinned limit; the test fails if any criterion does.

use std::time::{Duration, Instant};

use braidforge::cli::run;
use braidforge::soundness;
use braidforge_core::braidlab::{
    congruent_to_identity, expand, make_transvection, matrix_equals, ptr_word, swap_automorphism_check,
    torus_center_action, verify_aut_b2a_presentation, HomStatus, TransvectionOutcome, TransvectionParams,
};
use braidforge_core::enumeration::{pure_subgroup_table, reidemeister_schreier, DEFAULT_MAX_COSETS};
use braidforge_core::oracles::{artin_eq, b2a_eq, battery, check_equal, Value};
use braidforge_core::presentations::{
    abelianize, braid_presentation, purity_test, quotient_by_generator, Purity, SurfaceParams,
};
use braidforge_core::{parse_word_any, GenSym, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TRANSVECTION_SEED: u64 = 31_337;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn w(text: &str) -> Word {
    parse_word_any(text).expect("valid word")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn finite_orders() -> Outcome {
    for (n, expected) in [(3, "12"), (2, "2")] {
        let r = run(["braidforge", "enumerate", "--bn", "0", "0", &n.to_string(), "--max-cosets", "1000"]);
        ensure(r.exit_code == 0 && r.summary_value("index") == Some(expected), || {
            format!("n={n}: {}", r.payload.lines().last().unwrap_or(""))
        })?;
    }
    Ok("|B_3(S^2)| = 12, |B_2(S^2)| = 2".into())
}

fn torsion_criterion() -> Outcome {
    let mut cases = 0;
    for g in 0..=2 {
        for p in 0..=3 {
            if (g, p) == (0, 0) {
                continue;
            }
            let params = SurfaceParams::new(g, p, 2);
            let torsion = abelianize(&braid_presentation(params)).invariants.torsion_u64();
            let expected: Vec<u64> = if g >= 1 { vec![2] } else { vec![] };
            ensure(torsion == expected, || format!("{params}: torsion {torsion:?}"))?;
            let purity = purity_test(params).map_err(|e| format!("{params}: {e}"))?;
            let kills = matches!(&purity, Purity::Map(m) if m.kills_relators());
            ensure(kills == (torsion == [2]), || format!("{params}: purity map mismatch"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} surfaces"))
}

fn pure_torus_homology() -> Outcome {
    for n in [2u32, 3] {
        let t = pure_subgroup_table(SurfaceParams::new(1, 0, n), DEFAULT_MAX_COSETS).map_err(|e| e.to_string())?;
        let rp = reidemeister_schreier(&t).map_err(|e| e.to_string())?;
        let inv = abelianize(&rp.to_presentation("P_n(T)")).invariants;
        ensure(inv.free_rank == 2 * n as usize && inv.torsion.is_empty(), || format!("n={n}: H1 = {inv}"))?;
    }
    Ok("H1(P_2(T)) = Z^4, H1(P_3(T)) = Z^6".into())
}

fn htr_consequence() -> Outcome {
    for (n, p) in [(2u32, 3u32), (3, 4)] {
        let inv = abelianize(&braid_presentation(SurfaceParams::new(0, p, n))).invariants;
        ensure(inv.free_rank == p as usize && inv.torsion.is_empty(), || format!("n={n} p={p}: H1 = {inv}"))?;
    }
    Ok("H1(B_2(S_0,3)) = Z^3, H1(B_3(S_0,4)) = Z^4".into())
}

fn lanterns() -> Outcome {
    let disc = SurfaceParams::new(0, 1, 3);
    let lhs = expand(disc, &w("A[1,2] A[3,1] A[2,3]")).map_err(|e| e.to_string())?;
    let v = artin_eq(3, &lhs, &w("(s1 s2)^3")).map_err(|e| e.to_string())?;
    ensure(v.value == Value::Equal, || format!("disc lantern: {v}"))?;
    let annulus = SurfaceParams::new(0, 2, 2);
    let lhs = expand(annulus, &w("A[1,2] z[2,1] z[1,1]")).map_err(|e| e.to_string())?;
    let v = b2a_eq(&lhs, &w("z1 s1 z1 s1")).map_err(|e| e.to_string())?;
    ensure(v.value == Value::Equal, || format!("annulus lantern: {v}"))?;
    Ok("both Equal".into())
}

fn ptr_validation() -> Outcome {
    let mut exact = 0;
    let mut checked = 0;
    for n in 1..=4 {
        let params = SurfaceParams::new(0, 1, n);
        for i in 1..=n {
            let e = expand(params, &ptr_word(params, i).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let v = artin_eq(n, &e, &Word::identity()).map_err(|e| e.to_string())?;
            ensure(v.value == Value::Equal, || format!("artin n={n} i={i}: {v}"))?;
            exact += 1;
        }
    }
    for g in 0..=2 {
        for p in 0..=3 {
            for n in 1..=4 {
                let params = SurfaceParams::new(g, p, n);
                let ctxs = battery(params);
                for i in 1..=n {
                    let e =
                        expand(params, &ptr_word(params, i).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                    let v = check_equal(&ctxs, &e, &Word::identity()).map_err(|e| format!("{params}: {e}"))?;
                    ensure(!v.is_refuted(), || format!("{params} i={i}: {v}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{exact} exact in the disc, {checked} never refuted"))
}

fn transvection_tuples() -> Vec<TransvectionParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(TRANSVECTION_SEED);
    let mut out = vec![TransvectionParams { n: 2, x1: -1, y1: 0, x2: 0, y2: -1 }];
    while out.len() < 50 {
        let n = rng.gen_range(2..=3);
        let tp = if out.len() % 2 == 0 {
            TransvectionParams {
                n,
                x1: rng.gen_range(-2..=2),
                y1: rng.gen_range(-2..=2),
                x2: rng.gen_range(-2..=2),
                y2: rng.gen_range(-2..=2),
            }
        } else {
            // unipotent or, at n = 2, sign-flipped diagonals
            let diag = |rng: &mut ChaCha8Rng| if n == 2 && rng.gen_bool(0.5) { -1 } else { 0 };
            let (x1, y2) = (diag(&mut rng), diag(&mut rng));
            let off = rng.gen_range(-3..=3);
            if rng.gen_bool(0.5) {
                TransvectionParams { n, x1, y1: 0, x2: off, y2 }
            } else {
                TransvectionParams { n, x1, y1: off, x2: 0, y2 }
            }
        };
        out.push(tp);
    }
    out
}

fn transvection_law() -> Outcome {
    let (mut accepted, mut rejected) = (0, 0);
    let mut hyperelliptic = false;
    for tp in transvection_tuples() {
        let m = tp.matrix();
        ensure(congruent_to_identity(&m, tp.n), || format!("{tp:?}: M not = I mod n"))?;
        let unit = tp.determinant().abs() == 1;
        match make_transvection(tp) {
            TransvectionOutcome::Accepted { hom, matrix } => {
                ensure(unit, || format!("{tp:?} accepted with det {}", tp.determinant()))?;
                let action = torus_center_action(&hom).map_err(|e| format!("{tp:?}: {e}"))?;
                ensure(matrix_equals(&action, &matrix), || format!("{tp:?}: action {action:?} vs {matrix:?}"))?;
                hyperelliptic |= matrix == [[-1, 0], [0, -1]] && tp.n == 2;
                accepted += 1;
            }
            TransvectionOutcome::Rejected { det, .. } => {
                ensure(!unit, || format!("{tp:?} rejected with det {det}"))?;
                rejected += 1;
            }
        }
    }
    ensure(hyperelliptic, || "M = -I at n = 2 not accepted".into())?;
    let r = run(["braidforge", "transvection", "--n", "2", "--x1", "1", "--y1", "0", "--x2", "0", "--y2", "0"]);
    ensure(r.exit_code == 1 && r.summary_value("det") == Some("3"), || r.payload.clone())?;
    Ok(format!("{accepted} accepted, {rejected} rejected"))
}

fn aut_b2a() -> Outcome {
    let report = verify_aut_b2a_presentation();
    for (name, status) in &report.automorphisms {
        ensure(matches!(status, HomStatus::Verified), || format!("{name}: {status}"))?;
    }
    for (label, ok) in &report.relators {
        ensure(*ok, || format!("relator {label} failed"))?;
    }
    ensure(report.pi_s_powers.len() == 10 && report.pi_s_powers.iter().all(|(_, nt)| *nt), || {
        format!("(pi s*)^k: {:?}", report.pi_s_powers)
    })?;
    Ok(format!("{} relators Verified, (pi s*)^k != id for k <= 10", report.relators.len()))
}

fn swap_witness() -> Outcome {
    let r = swap_automorphism_check();
    ensure(matches!(r.relator_status, HomStatus::Verified), || format!("relator {}", r.relator_status))?;
    ensure(!r.rho_phi_zeta.is_identity(), || "rho(phi(z1)) is trivial".into())?;
    Ok(format!("rho(phi(z1)) = {}", r.rho_phi_zeta))
}

fn corollary_quotient() -> Outcome {
    let mut cases = 0;
    for g in 0..=2 {
        for p in 1..=3 {
            for n in 1..=4 {
                let q = quotient_by_generator(&braid_presentation(SurfaceParams::new(g, p, n)), &GenSym::zeta(p))
                    .map_err(|e| e.to_string())?;
                let target = braid_presentation(SurfaceParams::new(g, p - 1, n));
                ensure(q.equivalent_up_to_cyclic(&target), || format!("g={g} p={p} n={n}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} surfaces"))
}

fn soundness_suite() -> Outcome {
    let report = soundness::run(soundness::DEFAULT_SEED, 1000);
    for c in &report.checks {
        ensure(c.passed(), || format!("{}: {:?}", c.name, c.first_failure))?;
    }
    Ok(format!("{} checks x 1000 pairs, seed {}", report.checks.len(), report.seed))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("finite orders", 1, finite_orders),
        ("torsion criterion", 1, torsion_criterion),
        ("H1(P_n(T)) = Z^2n", 10, pure_torus_homology),
        ("HTR consequence", 1, htr_consequence),
        ("lantern identities", 1, lanterns),
        ("PTR validation", 30, ptr_validation),
        ("transvection law", 5, transvection_law),
        ("Aut(B_2(A)) presentation", 1, aut_b2a),
        ("non-characteristic witness", 1, swap_witness),
        ("boundary quotient", 1, corollary_quotient),
        ("oracle soundness", 30, soundness_suite),
    ];
    let mut failed = Vec::new();
    for (k, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = match &outcome {
            Ok(_) if elapsed <= limit => "PASS",
            _ => "FAIL",
        };
        let detail = match &outcome {
            Ok(d) if elapsed <= limit => d.clone(),
            Ok(d) => format!("{d}; over time limit"),
            Err(e) => e.clone(),
        };
        println!("{verdict} {:>2} {name} ({:.3}s / {}s): {detail}", k + 1, elapsed.as_secs_f64(), limit.as_secs());
        if verdict == "FAIL" {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
