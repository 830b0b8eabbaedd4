//! Finite presentations of surface braid groups and their abelianizations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::intlinalg::{smith_normal_form, AbelianInvariants, IntMatrix, SmithForm};
use crate::words::{commutator, Alphabet, GenSym, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    GeneratorNotFound(String),
    UnknownGenerator(String),
    DuplicateGenerator(String),
    WrongStrandCount(u32),
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::GeneratorNotFound(g) => write!(f, "GeneratorNotFound: {g}"),
            PresentationError::UnknownGenerator(g) => write!(f, "UnknownGenerator: {g}"),
            PresentationError::DuplicateGenerator(g) => write!(f, "DuplicateGenerator: {g}"),
            PresentationError::WrongStrandCount(n) => {
                write!(f, "WrongStrandCount: expected n = 2, got {n}")
            }
        }
    }
}

/// Genus, punctures and strand count of `B_n(Σ_{g,p})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceParams {
    pub g: u32,
    pub p: u32,
    pub n: u32,
}

impl SurfaceParams {
    pub fn new(g: u32, p: u32, n: u32) -> SurfaceParams {
        SurfaceParams { g, p, n }
    }

    /// Euler characteristic `2 - 2g - p`.
    pub fn chi(&self) -> i64 {
        2 - 2 * self.g as i64 - self.p as i64
    }

    /// `2g + p + n`.
    pub fn kappa(&self) -> i64 {
        2 * self.g as i64 + self.p as i64 + self.n as i64
    }

    pub fn is_sphere(&self) -> bool {
        self.g == 0 && self.p == 0
    }
}

impl fmt::Display for SurfaceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} p={} n={}", self.g, self.p, self.n)
    }
}

/// Generators plus relators; every relator is asserted equal to the identity.
///
/// Each relator carries a label (e.g. `BR2(1,2)`, `TR`) used in reports.
/// Labels are not part of equality.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    generators: Alphabet,
    relators: Vec<Word>,
    labels: Vec<String>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Presentation) -> bool {
        self.name == other.name && self.generators == other.generators && self.relators == other.relators
    }
}

impl Eq for Presentation {}

impl Presentation {
    /// Validates that generators are distinct and relators only use them.
    /// Relators that reduce to the identity are dropped.
    pub fn new<G, R>(name: &str, generators: G, relators: R) -> Result<Presentation, PresentationError>
    where
        G: IntoIterator<Item = GenSym>,
        R: IntoIterator<Item = Word>,
    {
        let mut p = Presentation::empty(name);
        for g in generators {
            if p.generators.contains(g.name()) {
                return Err(PresentationError::DuplicateGenerator(g.name().to_string()));
            }
            p.generators.insert(g);
        }
        for (k, r) in relators.into_iter().enumerate() {
            p.push_relator(r, format!("r{}", k + 1))?;
        }
        Ok(p)
    }

    fn empty(name: &str) -> Presentation {
        Presentation {
            name: name.to_string(),
            generators: Alphabet::default(),
            relators: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn push_relator(&mut self, r: Word, label: String) -> Result<(), PresentationError> {
        if let Some(bad) = r.symbols().find(|s| !self.generators.contains(s.name())) {
            return Err(PresentationError::UnknownGenerator(bad.name().to_string()));
        }
        if !r.is_identity() {
            self.relators.push(r);
            self.labels.push(label);
        }
        Ok(())
    }

    pub fn generators(&self) -> &[GenSym] {
        self.generators.symbols()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn labelled_relators(&self) -> impl Iterator<Item = (&str, &Word)> + '_ {
        self.labels.iter().map(String::as_str).zip(&self.relators)
    }

    /// Relator multiset equality after free reduction and cyclic rotation,
    /// together with equality of generator sets.
    pub fn equivalent_up_to_cyclic(&self, other: &Presentation) -> bool {
        let mut ga: Vec<&GenSym> = self.generators().iter().collect();
        let mut gb: Vec<&GenSym> = other.generators().iter().collect();
        ga.sort();
        gb.sort();
        if ga != gb {
            return false;
        }
        let canon = |p: &Presentation| {
            let mut v: Vec<Word> = p.relators.iter().map(Word::cyclic_canonical).filter(|w| !w.is_identity()).collect();
            v.sort();
            v
        };
        canon(self) == canon(other)
    }
}

fn gen(s: GenSym) -> Word {
    Word::generator(s)
}

/// The presentation of `B_n(Σ_{g,p})` with relator families BR1, BR2,
/// CR1, CR2, CR3, SCR and TR. TR keeps its full ζ-tail.
pub fn braid_presentation(params: SurfaceParams) -> Presentation {
    let SurfaceParams { g, p, n } = params;
    assert!(n >= 1, "braid groups need at least one strand");
    let mut pres = Presentation::empty(&format!("B_{n}(S_{g},{p})"));
    let sig: Vec<GenSym> = (1..n).map(GenSym::sigma).collect();
    let a: Vec<GenSym> = (1..=g).map(GenSym::a).collect();
    let b: Vec<GenSym> = (1..=g).map(GenSym::b).collect();
    let z: Vec<GenSym> = (1..=p).map(GenSym::zeta).collect();
    for s in sig.iter().chain(&a).chain(&b).chain(&z) {
        pres.generators.insert(s.clone());
    }
    let mut add = |w: Word, label: String| {
        pres.push_relator(w, label).expect("builder uses its own alphabet");
    };

    let s = |i: u32| gen(sig[i as usize - 1].clone());
    for i in 1..n {
        for j in i + 2..n {
            let lhs = &s(i) * &s(j);
            let rhs = &s(j) * &s(i);
            add(&lhs * &rhs.inverse(), format!("BR1({i},{j})"));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        let lhs = &(&s(i) * &s(j)) * &s(i);
        let rhs = &(&s(j) * &s(i)) * &s(j);
        add(&lhs * &rhs.inverse(), format!("BR2({i},{j})"));
    }
    if n >= 2 {
        let s1 = s(1);
        for i in 2..n {
            for (r, ar) in a.iter().enumerate() {
                add(commutator(&gen(ar.clone()), &s(i)), format!("CR1(a{},s{i})", r + 1));
            }
            for (r, br) in b.iter().enumerate() {
                add(commutator(&gen(br.clone()), &s(i)), format!("CR1(b{},s{i})", r + 1));
            }
            for (t, zt) in z.iter().enumerate() {
                add(commutator(&gen(zt.clone()), &s(i)), format!("CR1(z{},s{i})", t + 1));
            }
        }
        let cr2 = |x: &GenSym| {
            let x = gen(x.clone());
            commutator(&x, &(&(&s1 * &x) * &s1))
        };
        for (r, ar) in a.iter().enumerate() {
            add(cr2(ar), format!("CR2(a{})", r + 1));
        }
        for (r, br) in b.iter().enumerate() {
            add(cr2(br), format!("CR2(b{})", r + 1));
        }
        for (t, zt) in z.iter().enumerate() {
            add(cr2(zt), format!("CR2(z{})", t + 1));
        }
        let cr3 = |x: &GenSym, y: &GenSym| commutator(&gen(x.clone()), &gen(y.clone()).conjugate(&s1));
        for r in 0..g as usize {
            for s_ in r + 1..g as usize {
                add(cr3(&a[r], &a[s_]), format!("CR3(a{},a{})", r + 1, s_ + 1));
                add(cr3(&a[r], &b[s_]), format!("CR3(a{},b{})", r + 1, s_ + 1));
                add(cr3(&b[r], &a[s_]), format!("CR3(b{},a{})", r + 1, s_ + 1));
                add(cr3(&b[r], &b[s_]), format!("CR3(b{},b{})", r + 1, s_ + 1));
            }
        }
        for r in 0..g as usize {
            for (u, zu) in z.iter().enumerate() {
                add(cr3(&a[r], zu), format!("CR3(a{},z{})", r + 1, u + 1));
                add(cr3(&b[r], zu), format!("CR3(b{},z{})", r + 1, u + 1));
            }
        }
        for t in 0..p as usize {
            for u in t + 1..p as usize {
                add(cr3(&z[t], &z[u]), format!("CR3(z{},z{})", t + 1, u + 1));
            }
        }
        for r in 0..g as usize {
            let (ar, br) = (gen(a[r].clone()), gen(b[r].clone()));
            let lhs = &(&(&(&s1 * &br) * &s1) * &ar) * &s1;
            let rhs = &(&ar * &s1) * &br;
            add(&lhs * &rhs.inverse(), format!("SCR({})", r + 1));
        }
    }
    add(total_relator(params), "TR".to_string());
    pres
}

/// `(σ_1…σ_{n−1}σ_{n−1}…σ_1)(∏_r [b_r^{-1}, a_r])(∏_t ζ_t)`.
pub fn total_relator(params: SurfaceParams) -> Word {
    let mut w = Word::identity();
    for i in 1..params.n {
        w = &w * &gen(GenSym::sigma(i));
    }
    for i in (1..params.n).rev() {
        w = &w * &gen(GenSym::sigma(i));
    }
    for r in 1..=params.g {
        w = &w * &commutator(&gen(GenSym::b(r)).inverse(), &gen(GenSym::a(r)));
    }
    for t in 1..=params.p {
        w = &w * &gen(GenSym::zeta(t));
    }
    w
}

/// The two-generator form `⟨d, z | [z, d²]⟩` of `B_2(A)` together with the
/// substitution `d ↦ z1*s1`, `z ↦ z1` into the `{s1, z1}` generators.
#[derive(Clone, Debug)]
pub struct B2aPresentation {
    pub presentation: Presentation,
    pub substitution: Vec<(GenSym, Word)>,
}

impl B2aPresentation {
    /// Rewrites a word over `{d, z}` into `{s1, z1}`.
    pub fn to_sigma_form(&self, w: &Word) -> Word {
        w.substitute(|s| self.substitution.iter().find(|(k, _)| k == s).map(|(_, v)| v.clone()))
    }
}

pub fn b2a_presentation() -> B2aPresentation {
    let d = GenSym::named("d");
    let z = GenSym::named("z");
    let dd = Word::power_of(d.clone(), 2);
    let rel = commutator(&gen(z.clone()), &dd);
    let mut presentation = Presentation::new("B_2(A)", [d.clone(), z.clone()], []).expect("static presentation");
    presentation.push_relator(rel, "[z,d^2]".to_string()).expect("static presentation");
    let z1 = gen(GenSym::zeta(1));
    let s1 = gen(GenSym::sigma(1));
    B2aPresentation { presentation, substitution: alloc::vec![(d, &z1 * &s1), (z, z1)] }
}

/// `⟨σ_1, ζ_1 | [ζ_1, σ_1ζ_1σ_1]⟩`.
pub fn b2a_sigma_presentation() -> Presentation {
    let s1 = GenSym::sigma(1);
    let z1 = GenSym::zeta(1);
    let (s, z) = (gen(s1.clone()), gen(z1.clone()));
    let mut p = Presentation::new("B_2(A)", [s1, z1], []).expect("static presentation");
    p.push_relator(commutator(&z, &(&(&s * &z) * &s)), "[z1,s1*z1*s1]".to_string()).expect("static presentation");
    p
}

/// Adds `kill` as a relator and eliminates it: every occurrence is deleted
/// from every relator and relators that become trivial are dropped.
pub fn quotient_by_generator(p: &Presentation, kill: &GenSym) -> Result<Presentation, PresentationError> {
    if !p.generators.contains(kill.name()) {
        return Err(PresentationError::GeneratorNotFound(kill.name().to_string()));
    }
    let mut out = Presentation::empty(&format!("{}/<<{}>>", p.name, kill));
    for g in p.generators() {
        if g != kill {
            out.generators.insert(g.clone());
        }
    }
    for (label, r) in p.labelled_relators() {
        let w = r.substitute(|s| (s == kill).then(Word::identity));
        out.push_relator(w, label.to_string())?;
    }
    Ok(out)
}

/// Abelianization data of a presentation.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub generators: Alphabet,
    pub relation_matrix: IntMatrix,
    pub smith: SmithForm,
    pub invariants: AbelianInvariants,
}

impl Abelianization {
    /// Exponent-sum vector of `w`.
    pub fn class_of(&self, w: &Word) -> Result<Vec<i64>, PresentationError> {
        let mut v = alloc::vec![0i64; self.generators.len()];
        for (s, e) in w.syllables() {
            let k = self
                .generators
                .position(s.name())
                .ok_or_else(|| PresentationError::UnknownGenerator(s.name().to_string()))?;
            v[k] += e;
        }
        Ok(v)
    }

    pub fn class_big(&self, w: &Word) -> Result<Vec<BigInt>, PresentationError> {
        Ok(self.class_of(w)?.into_iter().map(BigInt::from).collect())
    }

    /// Is the class vector zero in `H_1`?
    pub fn is_zero(&self, class: &[BigInt]) -> bool {
        self.smith.row_lattice_contains(class)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        w.symbols().all(|s| self.generators.contains(s.name()))
    }

    /// Do `u` and `v` have the same image in `H_1`?
    pub fn same_class(&self, u: &Word, v: &Word) -> Result<bool, PresentationError> {
        let cu = self.class_big(u)?;
        let cv = self.class_big(v)?;
        let diff: Vec<BigInt> = cu.iter().zip(&cv).map(|(a, b)| a - b).collect();
        Ok(self.is_zero(&diff))
    }
}

pub fn abelianize(p: &Presentation) -> Abelianization {
    let generators = p.alphabet().clone();
    let cols = generators.len();
    let rows = p.relators().iter().map(|r| {
        let mut v = alloc::vec![0i64; cols];
        for (s, e) in r.syllables() {
            v[generators.position(s.name()).expect("validated relator")] += e;
        }
        v
    });
    let relation_matrix = IntMatrix::from_rows(cols, rows);
    let smith = smith_normal_form(&relation_matrix);
    let invariants = AbelianInvariants::from_smith(&smith);
    Abelianization { generators, relation_matrix, smith, invariants }
}

/// The induced permutation on two strands as a map `H_1 → Z/2`.
#[derive(Clone, Debug)]
pub struct PurityMap {
    pub presentation: Presentation,
    /// `(generator, value in Z/2)` in generator order.
    pub torsion_projection: Vec<(GenSym, u8)>,
    /// Class (in generator coordinates) of the torsion generator of `H_1`.
    pub torsion_generator: Vec<BigInt>,
}

impl PurityMap {
    pub fn project(&self, w: &Word) -> u8 {
        let mut total = 0i64;
        for (s, e) in w.syllables() {
            if let Some((_, v)) = self.torsion_projection.iter().find(|(g, _)| g == s) {
                total += *v as i64 * e;
            }
        }
        total.rem_euclid(2) as u8
    }

    /// Every relator projects to zero.
    pub fn kills_relators(&self) -> bool {
        self.presentation.relators().iter().all(|r| self.project(r) == 0)
    }
}

#[derive(Clone, Debug)]
pub enum Purity {
    Map(PurityMap),
    /// `H_1` torsion is not exactly `Z/2`.
    NotApplicable(AbelianInvariants),
}

/// For `n = 2`: if the torsion of `H_1(B_2(Σ))` is exactly `Z/2`, returns
/// the projection `σ_1 ↦ 1`, all other generators `↦ 0`, after checking it
/// kills every relator and sends the Smith torsion generator to `1`.
pub fn purity_test(params: SurfaceParams) -> Result<Purity, PresentationError> {
    if params.n != 2 {
        return Err(PresentationError::WrongStrandCount(params.n));
    }
    let presentation = braid_presentation(params);
    let ab = abelianize(&presentation);
    let two = BigInt::from(2);
    if ab.invariants.torsion != [two.clone()] {
        return Ok(Purity::NotApplicable(ab.invariants));
    }
    let j = ab.smith.diagonal().iter().position(|d| *d == two).expect("torsion entry present");
    let torsion_generator: Vec<BigInt> = ab.smith.v_inv.row(j).to_vec();
    let s1 = GenSym::sigma(1);
    let torsion_projection: Vec<(GenSym, u8)> =
        presentation.generators().iter().map(|g| (g.clone(), (*g == s1) as u8)).collect();
    let map = PurityMap { presentation, torsion_projection, torsion_generator };
    let image_of_generator: BigInt =
        map.torsion_projection.iter().zip(&map.torsion_generator).map(|((_, v), c)| BigInt::from(*v) * c).sum();
    assert!(map.kills_relators(), "σ1-parity does not kill the relators of {params}");
    assert!(image_of_generator.mod_floor(&two).is_one(), "σ1-parity misses the torsion generator of {params}");
    Ok(Purity::Map(map))
}

/// Exponent sums of each relator, keyed by label.
pub fn relator_exponent_sums(p: &Presentation) -> BTreeMap<String, Vec<i64>> {
    let ab_gens = p.alphabet();
    p.labelled_relators()
        .map(|(label, r)| {
            let v = ab_gens.symbols().iter().map(|g| r.exponent_sum(g.name())).collect();
            (label.to_string(), v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word_any;

    fn w(t: &str) -> Word {
        parse_word_any(t).unwrap()
    }

    fn names(p: &Presentation) -> Vec<&str> {
        p.generators().iter().map(|g| g.name()).collect()
    }

    #[test]
    fn sphere_three_strands() {
        let p = braid_presentation(SurfaceParams::new(0, 0, 3));
        assert_eq!(names(&p), ["s1", "s2"]);
        assert_eq!(p.relators(), [w("s1 s2 s1 s2^-1 s1^-1 s2^-1"), w("s1 s2 s2 s1")]);
        assert_eq!(p.labels(), ["BR2(1,2)", "TR"]);
    }

    #[test]
    fn torus_two_strands() {
        let p = braid_presentation(SurfaceParams::new(1, 0, 2));
        assert_eq!(names(&p), ["s1", "a1", "b1"]);
        assert!(p.relators().contains(&w("s1 b1 s1 a1 s1 (a1 s1 b1)^-1")));
        assert!(p.relators().contains(&w("s1 s1 [b1^-1, a1]")));
    }

    #[test]
    fn annulus_two_strands() {
        let p = braid_presentation(SurfaceParams::new(0, 2, 2));
        assert_eq!(names(&p), ["s1", "z1", "z2"]);
        assert_eq!(p.relators(), [w("[z1, s1 z1 s1]"), w("[z2, s1 z2 s1]"), w("[z1, s1^-1 z2 s1]"), w("s1 s1 z1 z2"),]);
    }

    #[test]
    fn one_strand_has_no_sigmas() {
        let p = braid_presentation(SurfaceParams::new(2, 0, 1));
        assert_eq!(names(&p), ["a1", "a2", "b1", "b2"]);
        assert_eq!(p.relators(), [w("[b1^-1,a1][b2^-1,a2]")]);
        let trivial = braid_presentation(SurfaceParams::new(0, 0, 1));
        assert!(trivial.generators().is_empty() && trivial.relators().is_empty());
    }

    #[test]
    fn relator_counts_match_index_ranges() {
        // g=2, p=2, n=4: BR1 1, BR2 2, CR1 2*(2+2+2), CR2 6,
        // CR3 4*1 + 2*2*2 + 1, SCR 2, TR 1
        let p = braid_presentation(SurfaceParams::new(2, 2, 4));
        assert_eq!(p.relators().len(), 1 + 2 + 12 + 6 + 13 + 2 + 1);
    }

    #[test]
    fn b2a_forms() {
        let b = b2a_presentation();
        assert_eq!(b.presentation.relators(), [w("z^-1 d^-2 z d^2")]);
        let sub = b.to_sigma_form(&b.presentation.relators()[0]);
        let target = b2a_sigma_presentation().relators()[0].clone();
        assert_eq!(sub.cyclic_canonical(), target.cyclic_canonical());
        let ab = abelianize(&b.presentation);
        assert_eq!(ab.invariants.free_rank, 2);
        assert!(ab.invariants.torsion.is_empty());
    }

    #[test]
    fn quotient_examples() {
        let annulus = braid_presentation(SurfaceParams::new(0, 2, 2));
        let q = quotient_by_generator(&annulus, &GenSym::zeta(2)).unwrap();
        assert!(q.relators().contains(&w("s1 s1 z1")));
        assert!(q.equivalent_up_to_cyclic(&braid_presentation(SurfaceParams::new(0, 1, 2))));

        let disk = braid_presentation(SurfaceParams::new(0, 1, 2));
        let q = quotient_by_generator(&disk, &GenSym::zeta(1)).unwrap();
        assert_eq!(q.relators(), [w("s1 s1")]);

        let free = Presentation::new("F", [GenSym::named("x"), GenSym::named("y")], [w("x^3")]).unwrap();
        let q = quotient_by_generator(&free, &GenSym::named("y")).unwrap();
        assert_eq!(q.relators(), free.relators());
        assert_eq!(q.generators().len(), 1);

        assert_eq!(
            quotient_by_generator(&free, &GenSym::named("q")),
            Err(PresentationError::GeneratorNotFound("q".into()))
        );
    }

    #[test]
    fn abelianize_examples() {
        let ab = abelianize(&braid_presentation(SurfaceParams::new(1, 0, 2)));
        assert_eq!(ab.invariants.free_rank, 2);
        assert_eq!(ab.invariants.torsion_u64(), [2]);

        let ab = abelianize(&braid_presentation(SurfaceParams::new(0, 4, 3)));
        assert_eq!(ab.invariants.free_rank, 4);
        assert!(ab.invariants.torsion.is_empty());

        let ab = abelianize(&braid_presentation(SurfaceParams::new(0, 1, 3)));
        assert_eq!(ab.class_of(&w("(s1 s2)^3")).unwrap(), [3, 3, 0]);
        assert!(ab.same_class(&w("(s1 s2)^3"), &w("s1^6")).unwrap());
        assert!(!ab.same_class(&w("(s1 s2)^3"), &w("s1^4")).unwrap());
        assert_eq!(ab.class_of(&w("q1")), Err(PresentationError::UnknownGenerator("q1".into())));
    }

    #[test]
    fn exponent_sums_by_family() {
        // all σ_i are identified in H_1, so merge their columns
        for (g, p, n) in [(1, 2, 3), (2, 1, 4), (0, 3, 2), (2, 3, 4)] {
            let params = SurfaceParams::new(g, p, n);
            let pres = braid_presentation(params);
            let gens = pres.generators();
            for (label, sums) in relator_exponent_sums(&pres) {
                let sigma: i64 =
                    gens.iter().zip(&sums).filter(|(x, _)| x.name().starts_with('s')).map(|(_, v)| v).sum();
                let rest: Vec<i64> =
                    gens.iter().zip(&sums).filter(|(x, _)| !x.name().starts_with('s')).map(|(_, v)| *v).collect();
                let (want_sigma, want_rest): (i64, Vec<i64>) = if label.starts_with("SCR") {
                    (2, alloc::vec![0; rest.len()])
                } else if label == "TR" {
                    let tail = gens
                        .iter()
                        .filter(|x| !x.name().starts_with('s'))
                        .map(|x| x.name().starts_with('z') as i64)
                        .collect();
                    (2 * (n as i64 - 1), tail)
                } else {
                    (0, alloc::vec![0; rest.len()])
                };
                assert_eq!((sigma, rest), (want_sigma, want_rest), "{label} in {params}");
            }
        }
    }

    #[test]
    fn purity_examples() {
        let Purity::Map(m) = purity_test(SurfaceParams::new(1, 0, 2)).unwrap() else {
            panic!("torus should have Z/2 torsion");
        };
        assert_eq!(m.torsion_projection, [(GenSym::sigma(1), 1), (GenSym::a(1), 0), (GenSym::b(1), 0)]);
        assert!(m.kills_relators());
        assert!(matches!(purity_test(SurfaceParams::new(0, 2, 2)).unwrap(), Purity::NotApplicable(_)));
        assert!(matches!(purity_test(SurfaceParams::new(2, 1, 2)).unwrap(), Purity::Map(_)));
        assert_eq!(purity_test(SurfaceParams::new(1, 0, 3)).unwrap_err(), PresentationError::WrongStrandCount(3));
    }

    #[test]
    fn params_accessors() {
        let p = SurfaceParams::new(1, 2, 3);
        assert_eq!(p.chi(), -2);
        assert_eq!(p.kappa(), 7);
        assert_eq!(p.chi() + p.kappa(), p.n as i64 + 2);
    }
}
