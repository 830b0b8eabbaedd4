//! Named braid elements, the X alphabets of the pure braid group,
//! forgetting maps, transvections and the automorphisms of `B_2(A)`.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::intlinalg::{rational_rank, IntMatrix};
use crate::oracles::{self, b2a_eq, battery, check_equal, OracleContext, OracleError, Value, Verdict, Witness};
use crate::perm::{induced_permutation, Perm};
use crate::presentations::{
    abelianize, b2a_presentation, b2a_sigma_presentation, braid_presentation, Presentation, SurfaceParams,
};
use crate::words::{commutator, GenSym, SymKind, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    IndexOutOfRange(String),
    UnknownGenerator(String),
    UnknownSymbol(String),
    SphereNotSupported,
    MissingImage(String),
    NoApplicableOracle,
    NotInSpan,
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::IndexOutOfRange(s) => write!(f, "IndexOutOfRange: {s}"),
            BraidError::UnknownGenerator(s) => write!(f, "UnknownGenerator: {s}"),
            BraidError::UnknownSymbol(s) => write!(f, "UnknownSymbol: {s}"),
            BraidError::SphereNotSupported => f.write_str("SphereNotSupported"),
            BraidError::MissingImage(s) => write!(f, "MissingImage: {s}"),
            BraidError::NoApplicableOracle => f.write_str("NoApplicableOracle"),
            BraidError::NotInSpan => f.write_str("NotInSpan"),
        }
    }
}

impl From<OracleError> for BraidError {
    fn from(e: OracleError) -> BraidError {
        match e {
            OracleError::UnknownGenerator(s) => BraidError::UnknownGenerator(s),
            OracleError::SphereNotSupported => BraidError::SphereNotSupported,
            OracleError::NoApplicableOracle => BraidError::NoApplicableOracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedSymbol {
    Sigma(u32),
    A(u32),
    B(u32),
    Zeta(u32),
    DeltaI(u32),
    Aij(u32, u32),
    AIr(u32, u32),
    BIr(u32, u32),
    ZetaIt(u32, u32),
    DeltaSq,
    DeltaZeta,
    DeltaA,
    DeltaB,
}

impl NamedSymbol {
    /// Reads `s<i>`, `a<r>`, `b<r>`, `z<t>`, `delta[i]`, `A[i,j]`, `a[i,r]`,
    /// `b[i,r]`, `z[i,t]`, `D2`, `Dz`, `Da`, `Db`.
    pub fn parse(text: &str) -> Result<NamedSymbol, BraidError> {
        let bad = || BraidError::UnknownSymbol(text.to_string());
        match text {
            "D2" => return Ok(NamedSymbol::DeltaSq),
            "Dz" => return Ok(NamedSymbol::DeltaZeta),
            "Da" => return Ok(NamedSymbol::DeltaA),
            "Db" => return Ok(NamedSymbol::DeltaB),
            _ => {}
        }
        let sym = GenSym::new(text).map_err(|_| bad())?;
        Ok(match sym.kind() {
            SymKind::Sigma(i) => NamedSymbol::Sigma(i),
            SymKind::A(r) => NamedSymbol::A(r),
            SymKind::B(r) => NamedSymbol::B(r),
            SymKind::Zeta(t) => NamedSymbol::Zeta(t),
            SymKind::FreeLetter(_) => return Err(bad()),
            SymKind::Abstract => match (sym.base(), sym.indices().as_slice()) {
                ("delta", [i]) => NamedSymbol::DeltaI(*i),
                ("A", [i, j]) => NamedSymbol::Aij(*i, *j),
                ("a", [i, r]) => NamedSymbol::AIr(*i, *r),
                ("b", [i, r]) => NamedSymbol::BIr(*i, *r),
                ("z", [i, t]) => NamedSymbol::ZetaIt(*i, *t),
                _ => return Err(bad()),
            },
        })
    }
}

impl fmt::Display for NamedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedSymbol::Sigma(i) => write!(f, "s{i}"),
            NamedSymbol::A(r) => write!(f, "a{r}"),
            NamedSymbol::B(r) => write!(f, "b{r}"),
            NamedSymbol::Zeta(t) => write!(f, "z{t}"),
            NamedSymbol::DeltaI(i) => write!(f, "delta[{i}]"),
            NamedSymbol::Aij(i, j) => write!(f, "A[{},{}]", i.min(j), i.max(j)),
            NamedSymbol::AIr(i, r) => write!(f, "a[{i},{r}]"),
            NamedSymbol::BIr(i, r) => write!(f, "b[{i},{r}]"),
            NamedSymbol::ZetaIt(i, t) => write!(f, "z[{i},{t}]"),
            NamedSymbol::DeltaSq => f.write_str("D2"),
            NamedSymbol::DeltaZeta => f.write_str("Dz"),
            NamedSymbol::DeltaA => f.write_str("Da"),
            NamedSymbol::DeltaB => f.write_str("Db"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedElement {
    pub symbol: NamedSymbol,
    pub params: SurfaceParams,
    pub word: Word,
}

fn sigma_run(from: u32, to: u32) -> Word {
    Word::from_letters((from..to).map(|i| (GenSym::sigma(i), 1)))
}

/// `δ_i = σ_1…σ_{i−1}`.
fn delta_i(i: u32) -> Word {
    sigma_run(1, i)
}

/// `(x σ_1…σ_{n−1})^n`.
fn twisted_power(x: Word, n: u32) -> Word {
    (&x * &sigma_run(1, n)).pow(n as i64)
}

fn out_of_range(symbol: NamedSymbol, params: SurfaceParams) -> BraidError {
    BraidError::IndexOutOfRange(format!("{symbol} for {params}"))
}

pub fn element(params: SurfaceParams, symbol: NamedSymbol) -> Result<NamedElement, BraidError> {
    let SurfaceParams { g, p, n } = params;
    let strand = |i: u32| i >= 1 && i <= n;
    let genus = |r: u32| r >= 1 && r <= g && n >= 1;
    let punct = |t: u32| t >= 1 && t <= p && n >= 1;
    let err = || out_of_range(symbol, params);
    let word = match symbol {
        NamedSymbol::Sigma(i) if i >= 1 && i < n => Word::generator(GenSym::sigma(i)),
        NamedSymbol::A(r) if genus(r) => Word::generator(GenSym::a(r)),
        NamedSymbol::B(r) if genus(r) => Word::generator(GenSym::b(r)),
        NamedSymbol::Zeta(t) if punct(t) => Word::generator(GenSym::zeta(t)),
        NamedSymbol::DeltaI(i) if strand(i) => delta_i(i),
        NamedSymbol::Aij(i, j) if strand(i) && strand(j) && i != j => {
            let (i, j) = (i.min(j), i.max(j));
            let left = Word::from_letters((i..j - 1).rev().map(|k| (GenSym::sigma(k), 1)));
            &(&left.inverse() * &Word::power_of(GenSym::sigma(j - 1), 2)) * &left
        }
        NamedSymbol::AIr(i, r) if strand(i) && genus(r) => Word::generator(GenSym::a(r)).conjugate(&delta_i(i)),
        NamedSymbol::BIr(i, r) if strand(i) && genus(r) => Word::generator(GenSym::b(r)).conjugate(&delta_i(i)),
        NamedSymbol::ZetaIt(i, t) if strand(i) && punct(t) => Word::generator(GenSym::zeta(t)).conjugate(&delta_i(i)),
        NamedSymbol::DeltaSq => sigma_run(1, n).pow(n as i64),
        NamedSymbol::DeltaZeta if punct(1) => twisted_power(Word::generator(GenSym::zeta(1)), n),
        NamedSymbol::DeltaA if genus(1) => twisted_power(Word::generator(GenSym::a(1)), n),
        NamedSymbol::DeltaB if genus(1) => twisted_power(Word::generator(GenSym::b(1)), n),
        _ => return Err(err()),
    };
    let symbol = match symbol {
        NamedSymbol::Aij(i, j) => NamedSymbol::Aij(i.min(j), i.max(j)),
        other => other,
    };
    Ok(NamedElement { symbol, params, word })
}

fn x_sym(base: &str, i: u32, k: u32) -> GenSym {
    if base == "A" {
        GenSym::indexed("A", &[i.min(k), i.max(k)])
    } else {
        GenSym::indexed(base, &[i, k])
    }
}

/// Reads an X-alphabet symbol as a named element symbol.
fn x_symbol_of(sym: &GenSym) -> Option<NamedSymbol> {
    if sym.kind() != SymKind::Abstract {
        return None;
    }
    match (sym.base(), sym.indices().as_slice()) {
        ("A", [i, j]) => Some(NamedSymbol::Aij(*i, *j)),
        ("a", [i, r]) => Some(NamedSymbol::AIr(*i, *r)),
        ("b", [i, r]) => Some(NamedSymbol::BIr(*i, *r)),
        ("z", [i, t]) => Some(NamedSymbol::ZetaIt(*i, *t)),
        _ => None,
    }
}

/// The generating set `X_i` with its expansion into ambient words.
#[derive(Debug, Clone)]
pub struct XAlphabet {
    pub params: SurfaceParams,
    pub i: u32,
    pub symbols: Vec<GenSym>,
    pub expansion: Vec<Word>,
}

impl XAlphabet {
    pub fn new(params: SurfaceParams, i: u32) -> Result<XAlphabet, BraidError> {
        if i < 1 || i > params.n {
            return Err(BraidError::IndexOutOfRange(format!("strand {i} for {params}")));
        }
        let mut symbols = Vec::new();
        symbols.extend((1..=params.n).filter(|&j| j != i).map(|j| x_sym("A", i, j)));
        symbols.extend((1..=params.p).map(|t| x_sym("z", i, t)));
        symbols.extend((1..=params.g).map(|r| x_sym("a", i, r)));
        symbols.extend((1..=params.g).map(|r| x_sym("b", i, r)));
        let expansion = symbols.iter().map(|s| expand_symbol(params, s)).collect::<Result<_, _>>()?;
        Ok(XAlphabet { params, i, symbols, expansion })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn position(&self, sym: &GenSym) -> Option<usize> {
        self.symbols.iter().position(|s| s == sym)
    }

    /// The abelianized (PTR) relation: 1 on the `A` and `ζ` symbols.
    pub fn hptr_row(&self) -> Vec<i64> {
        self.symbols.iter().map(|s| matches!(s.base(), "A" | "z") as i64).collect()
    }
}

fn expand_symbol(params: SurfaceParams, sym: &GenSym) -> Result<Word, BraidError> {
    let named = x_symbol_of(sym).ok_or_else(|| BraidError::UnknownGenerator(sym.name().to_string()))?;
    Ok(element(params, named)?.word)
}

/// Replaces every X-alphabet symbol by its ambient word. Ambient generators
/// of `B_n(Σ)` pass through.
pub fn expand(params: SurfaceParams, w: &Word) -> Result<Word, BraidError> {
    let ambient = braid_presentation(params);
    w.try_substitute(|s| {
        if ambient.alphabet().contains(s.name()) {
            Ok(Word::generator(s.clone()))
        } else {
            expand_symbol(params, s)
        }
    })
}

/// The (PTR) word over `X_i`.
pub fn ptr_word(params: SurfaceParams, i: u32) -> Result<Word, BraidError> {
    XAlphabet::new(params, i)?;
    let mut w = Word::identity();
    for j in (i + 1..=params.n).chain(1..i) {
        w = &w * &Word::generator(x_sym("A", i, j));
    }
    for r in 1..=params.g {
        let b = Word::power_of(x_sym("b", i, r), -1);
        let a = Word::generator(x_sym("a", i, r));
        w = &w * &commutator(&b, &a);
    }
    for t in 1..=params.p {
        w = &w * &Word::generator(x_sym("z", i, t));
    }
    Ok(w)
}

/// The three sides of (PSCR): `A_{i,i+1}`, `[b_{i,r}, a_{i+1,r}^-1]` and
/// `[b_{i+1,r}, A_{i,i+1}^-1 a_{i,r}^-1 A_{i,i+1}]`.
pub fn pscr_words(params: SurfaceParams, i: u32, r: u32) -> Result<(Word, Word, Word), BraidError> {
    if params.g < 1 || r < 1 || r > params.g || i < 1 || i >= params.n {
        return Err(BraidError::IndexOutOfRange(format!("i={i} r={r} for {params}")));
    }
    let a_ii = Word::generator(x_sym("A", i, i + 1));
    let rhs1 = commutator(&Word::generator(x_sym("b", i, r)), &Word::power_of(x_sym("a", i + 1, r), -1));
    let inner = Word::power_of(x_sym("a", i, r), -1).conjugate(&a_ii);
    let rhs2 = commutator(&Word::generator(x_sym("b", i + 1, r)), &inner);
    Ok((a_ii, rhs1, rhs2))
}

/// Deletes strand `i` from an X-alphabet word and renumbers the strands
/// above it.
pub fn forget_strand(params: SurfaceParams, i: u32, w: &Word) -> Result<Word, BraidError> {
    if i < 1 || i > params.n {
        return Err(BraidError::IndexOutOfRange(format!("strand {i} for {params}")));
    }
    let shift = |k: u32| if k > i { k - 1 } else { k };
    let mut out = Vec::new();
    for (s, e) in w.syllables() {
        let named = x_symbol_of(s).ok_or_else(|| BraidError::UnknownGenerator(s.name().to_string()))?;
        element(params, named)?;
        let kept = match named {
            NamedSymbol::Aij(a, b) if a != i && b != i => Some(x_sym("A", shift(a), shift(b))),
            NamedSymbol::AIr(k, r) if k != i => Some(x_sym("a", shift(k), r)),
            NamedSymbol::BIr(k, r) if k != i => Some(x_sym("b", shift(k), r)),
            NamedSymbol::ZetaIt(k, t) if k != i => Some(x_sym("z", shift(k), t)),
            _ => None,
        };
        if let Some(sym) = kept {
            out.push((sym, *e));
        }
    }
    Ok(Word::from_syllables(out))
}

/// The Goldberg factors of `w`, one `π_1(Σ)` word per strand.
pub fn goldberg_project(params: SurfaceParams, w: &Word) -> Result<Vec<Word>, BraidError> {
    Ok(oracles::goldberg_image(params, w)?.factors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Certified(usize),
    NotCertified { rank: usize },
}

/// Rank of the classes of `ys` in `H_1(U_i) = Z^{X_i} / (HPTR)`; certified
/// when they are linearly independent.
pub fn strongly_free_certificate(params: SurfaceParams, i: u32, ys: &[GenSym]) -> Result<Certificate, BraidError> {
    let x = XAlphabet::new(params, i)?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for y in ys {
        let k = x.position(y).ok_or_else(|| BraidError::IndexOutOfRange(format!("{y} is not in X_{i}")))?;
        let mut row = alloc::vec![0i64; x.len()];
        row[k] = 1;
        rows.push(row);
    }
    let h = x.hptr_row();
    let h_rank = h.iter().any(|&c| c != 0) as usize;
    rows.push(h);
    let rank = rational_rank(&IntMatrix::from_rows(x.len(), rows)) - h_rank;
    Ok(if rank == ys.len() { Certificate::Certified(rank) } else { Certificate::NotCertified { rank } })
}

/// A generator-image map from a presentation into a group checked by an
/// oracle battery.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    pub source: Presentation,
    pub target: Vec<OracleContext>,
    images: Vec<Word>,
}

impl Homomorphism {
    pub fn new<I>(source: Presentation, target: Vec<OracleContext>, images: I) -> Result<Homomorphism, BraidError>
    where
        I: IntoIterator<Item = (GenSym, Word)>,
    {
        let given: Vec<(GenSym, Word)> = images.into_iter().collect();
        let images = source
            .generators()
            .iter()
            .map(|g| {
                given
                    .iter()
                    .find(|(s, _)| s == g)
                    .map(|(_, w)| w.clone())
                    .ok_or_else(|| BraidError::MissingImage(g.name().to_string()))
            })
            .collect::<Result<_, _>>()?;
        for (s, _) in &given {
            if !source.alphabet().contains(s.name()) {
                return Err(BraidError::UnknownGenerator(s.name().to_string()));
            }
        }
        Ok(Homomorphism { source, target, images })
    }

    pub fn image(&self, g: &GenSym) -> Option<&Word> {
        self.source.alphabet().position(g.name()).map(|k| &self.images[k])
    }

    pub fn images(&self) -> impl Iterator<Item = (&GenSym, &Word)> + '_ {
        self.source.generators().iter().zip(&self.images)
    }

    /// Image of a word over the source generators; other symbols are kept.
    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|s| self.image(s).cloned())
    }

    /// Left-to-right composite: `self` first, then `next`.
    pub fn then(&self, next: &Homomorphism) -> Homomorphism {
        let images = self.images.iter().map(|w| next.apply(w)).collect();
        Homomorphism { source: self.source.clone(), target: next.target.clone(), images }
    }

    pub fn identity(source: Presentation, target: Vec<OracleContext>) -> Homomorphism {
        let images = source.generators().iter().map(|g| Word::generator(g.clone())).collect();
        Homomorphism { source, target, images }
    }

    /// Compares generator images with `other` over this map's battery.
    pub fn agrees_with(&self, other: &Homomorphism) -> Result<Vec<Verdict>, BraidError> {
        self.images.iter().zip(&other.images).map(|(u, v)| Ok(check_equal(&self.target, u, v)?)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomStatus {
    Verified,
    Consistent,
    Refuted { relator: String, witness: Witness },
}

impl fmt::Display for HomStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomStatus::Verified => f.write_str("verified"),
            HomStatus::Consistent => f.write_str("consistent"),
            HomStatus::Refuted { relator, witness } => write!(f, "refuted {relator} [{witness}]"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HomReport {
    pub relators: Vec<(String, Verdict)>,
    pub status: HomStatus,
}

/// Pushes every source relator through `h` and checks it against the
/// identity.
pub fn verify_homomorphism(h: &Homomorphism) -> Result<HomReport, BraidError> {
    let mut relators = Vec::new();
    let mut status = HomStatus::Verified;
    for (label, r) in h.source.labelled_relators() {
        let verdict = check_equal(&h.target, &h.apply(r), &Word::identity())?;
        match verdict.value {
            Value::NotEqual => {
                if !matches!(status, HomStatus::Refuted { .. }) {
                    status = HomStatus::Refuted {
                        relator: label.to_owned(),
                        witness: verdict.witness.clone().expect("refutations carry witnesses"),
                    };
                }
            }
            Value::ConsistentButUnverified => {
                if status == HomStatus::Verified {
                    status = HomStatus::Consistent;
                }
            }
            Value::Equal => {}
        }
        relators.push((label.to_owned(), verdict));
    }
    Ok(HomReport { relators, status })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransvectionParams {
    pub n: u32,
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

impl TransvectionParams {
    /// `M_φ = [[n·x1+1, n·x2], [n·y1, n·y2+1]]`.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        let n = self.n as i64;
        [[n * self.x1 + 1, n * self.x2], [n * self.y1, n * self.y2 + 1]]
    }

    pub fn determinant(&self) -> i64 {
        let m = self.matrix();
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn is_valid(&self) -> bool {
        self.determinant().abs() == 1
    }
}

#[derive(Debug, Clone)]
pub enum TransvectionOutcome {
    Accepted { hom: Homomorphism, matrix: [[i64; 2]; 2] },
    Rejected { det: i64, matrix: [[i64; 2]; 2] },
}

/// `σ_i ↦ σ_i`, `a_1 ↦ a_1 Δ_a^{x1} Δ_b^{y1}`, `b_1 ↦ b_1 Δ_a^{x2} Δ_b^{y2}`
/// on `B_n(T)`.
pub fn make_transvection(tp: TransvectionParams) -> TransvectionOutcome {
    let matrix = tp.matrix();
    if !tp.is_valid() {
        return TransvectionOutcome::Rejected { det: tp.determinant(), matrix };
    }
    let params = SurfaceParams::new(1, 0, tp.n);
    let source = braid_presentation(params);
    let da = element(params, NamedSymbol::DeltaA).expect("torus has Δ_a").word;
    let db = element(params, NamedSymbol::DeltaB).expect("torus has Δ_b").word;
    let twist = |x: i64, y: i64| &da.pow(x) * &db.pow(y);
    let images = source.generators().iter().map(|g| {
        let img = match g.kind() {
            SymKind::A(1) => &Word::generator(g.clone()) * &twist(tp.x1, tp.y1),
            SymKind::B(1) => &Word::generator(g.clone()) * &twist(tp.x2, tp.y2),
            _ => Word::generator(g.clone()),
        };
        (g.clone(), img)
    });
    let images: Vec<(GenSym, Word)> = images.collect();
    let hom = Homomorphism::new(source, battery(params), images).expect("every generator has an image");
    TransvectionOutcome::Accepted { hom, matrix }
}

/// Matrix of `h` on the span of `[Δ_a]`, `[Δ_b]` in `H_1(B_n(T))`, columns
/// being the coordinates of `h([Δ_a])` and `h([Δ_b])`. Each column is
/// checked exactly in `H_1`, torsion included.
pub fn torus_center_action(h: &Homomorphism) -> Result<[[BigInt; 2]; 2], BraidError> {
    let ab = abelianize(&h.source);
    let n = h.source.generators().iter().filter(|g| matches!(g.kind(), SymKind::Sigma(_))).count() as u32 + 1;
    let params = SurfaceParams::new(1, 0, n);
    let da = element(params, NamedSymbol::DeltaA)?.word;
    let db = element(params, NamedSymbol::DeltaB)?.word;
    let class = |w: &Word| ab.class_big(w).map_err(|e| BraidError::UnknownGenerator(e.to_string()));
    let free = ab.smith.free_coordinates();
    let free_part = |c: &[BigInt]| -> Vec<BigInt> {
        let coords = ab.smith.coordinates(c);
        free.iter().map(|&j| coords[j].clone()).collect()
    };
    let (ca, cb) = (class(&da)?, class(&db)?);
    let (fa, fb) = (free_part(&ca), free_part(&cb));
    if fa.len() != 2 {
        return Err(BraidError::NotInSpan);
    }
    let det = &fa[0] * &fb[1] - &fb[0] * &fa[1];
    if det.is_zero() {
        return Err(BraidError::NotInSpan);
    }
    let mut cols: Vec<[BigInt; 2]> = Vec::new();
    for w in [&da, &db] {
        let img = class(&h.apply(w))?;
        let fi = free_part(&img);
        let (alpha, ra) = (&fi[0] * &fb[1] - &fb[0] * &fi[1]).div_rem(&det);
        let (beta, rb) = (&fa[0] * &fi[1] - &fi[0] * &fa[1]).div_rem(&det);
        if !ra.is_zero() || !rb.is_zero() {
            return Err(BraidError::NotInSpan);
        }
        let diff: Vec<BigInt> = (0..img.len()).map(|k| &img[k] - &alpha * &ca[k] - &beta * &cb[k]).collect();
        if !ab.is_zero(&diff) {
            return Err(BraidError::NotInSpan);
        }
        cols.push([alpha, beta]);
    }
    let [c0, c1] = [cols[0].clone(), cols[1].clone()];
    Ok([[c0[0].clone(), c1[0].clone()], [c0[1].clone(), c1[1].clone()]])
}

/// `M ≡ I (mod n)`.
pub fn congruent_to_identity(m: &[[i64; 2]; 2], n: u32) -> bool {
    let n = n as i64;
    (m[0][0] - 1).rem_euclid(n) == 0
        && m[0][1].rem_euclid(n) == 0
        && m[1][0].rem_euclid(n) == 0
        && (m[1][1] - 1).rem_euclid(n) == 0
}

fn b2a_source() -> Presentation {
    b2a_presentation().presentation
}

fn b2a_map(d: &str, z: &str) -> Homomorphism {
    let parse = |t: &str| crate::words::parse_word_any(t).expect("fixed automorphism words parse");
    Homomorphism::new(
        b2a_source(),
        alloc::vec![OracleContext::B2A],
        [(GenSym::named("d"), parse(d)), (GenSym::named("z"), parse(z))],
    )
    .expect("both generators mapped")
}

/// `ζ*`, `δ*` (conjugation `x ↦ c^-1 x c`), `π`, `s*`, `τ*` on
/// `⟨d, z | [z, d^2]⟩`.
pub fn b2a_automorphisms() -> Vec<(&'static str, Homomorphism)> {
    alloc::vec![
        ("zeta_star", b2a_map("z^-1 d z", "z")),
        ("delta_star", b2a_map("d", "d^-1 z d")),
        ("pi", b2a_map("d^-1", "z d^-1")),
        ("s_star", b2a_map("d^-1", "z d^-2")),
        ("tau_star", b2a_map("d^-1", "z^-1")),
    ]
}

fn b2a_named(name: &str) -> Homomorphism {
    b2a_automorphisms().into_iter().find(|(n, _)| *n == name).map(|(_, h)| h).expect("known automorphism name")
}

fn compose(names: &[&str]) -> Homomorphism {
    names
        .iter()
        .fold(Homomorphism::identity(b2a_source(), alloc::vec![OracleContext::B2A]), |acc, n| acc.then(&b2a_named(n)))
}

fn b2a_same(f: &Homomorphism, g: &Homomorphism) -> bool {
    f.images().zip(g.images()).all(|((_, u), (_, v))| b2a_eq(u, v).map(|v| v.value == Value::Equal).unwrap_or(false))
}

#[derive(Debug, Clone)]
pub struct AutB2aReport {
    /// Each named map sends `[z, d^2]` to the identity.
    pub automorphisms: Vec<(&'static str, HomStatus)>,
    pub relators: Vec<(&'static str, bool)>,
    /// `(k, (π s*)^k ≠ id)`.
    pub pi_s_powers: Vec<(u32, bool)>,
}

impl AutB2aReport {
    pub fn all_verified(&self) -> bool {
        self.automorphisms.iter().all(|(_, s)| *s == HomStatus::Verified)
            && self.relators.iter().all(|(_, ok)| *ok)
            && self.pi_s_powers.iter().all(|(_, ok)| *ok)
    }
}

pub fn verify_aut_b2a_presentation() -> AutB2aReport {
    const Z: &str = "zeta_star";
    const D: &str = "delta_star";
    const P: &str = "pi";
    const S: &str = "s_star";
    const T: &str = "tau_star";
    let table: [(&'static str, &[&str], &[&str]); 12] = [
        ("delta*^2", &[D, D], &[]),
        ("zeta* pi = pi zeta* delta*", &[Z, P], &[P, Z, D]),
        ("(pi delta*)^2", &[P, D, P, D], &[]),
        ("[s*, zeta*]", &[S, Z], &[Z, S]),
        ("[s*, delta*]", &[S, D], &[D, S]),
        ("(tau* zeta*)^2", &[T, Z, T, Z], &[]),
        ("(tau* delta*)^2", &[T, D, T, D], &[]),
        ("s*^2", &[S, S], &[]),
        ("pi^2", &[P, P], &[]),
        ("tau*^2", &[T, T], &[]),
        ("(tau* s*)^2", &[T, S, T, S], &[]),
        ("(tau* pi)^2 = delta*", &[T, P, T, P], &[D]),
    ];
    let automorphisms = b2a_automorphisms()
        .into_iter()
        .map(|(name, h)| {
            let status = verify_homomorphism(&h).map(|r| r.status).unwrap_or(HomStatus::Consistent);
            (name, status)
        })
        .collect();
    let relators = table.iter().map(|(label, lhs, rhs)| (*label, b2a_same(&compose(lhs), &compose(rhs)))).collect();
    let id = compose(&[]);
    let ps = compose(&[P, S]);
    let mut power = id.clone();
    let mut pi_s_powers = Vec::new();
    for k in 1..=10 {
        power = power.then(&ps);
        pi_s_powers.push((k, !b2a_same(&power, &id)));
    }
    AutB2aReport { automorphisms, relators, pi_s_powers }
}

#[derive(Debug, Clone)]
pub struct SwapReport {
    pub relator_status: HomStatus,
    pub rho_zeta: Perm,
    pub rho_phi_zeta: Perm,
    pub involution: bool,
}

impl SwapReport {
    /// The relator survives and `P_2(A)` is moved.
    pub fn witnesses_non_characteristic(&self) -> bool {
        self.relator_status == HomStatus::Verified && self.rho_zeta.is_identity() && !self.rho_phi_zeta.is_identity()
    }
}

/// `σ_1 ↔ ζ_1` on `⟨σ_1, ζ_1 | [ζ_1, σ_1ζ_1σ_1]⟩`.
pub fn swap_automorphism_check() -> SwapReport {
    let source = b2a_sigma_presentation();
    let (s1, z1) = (GenSym::sigma(1), GenSym::zeta(1));
    let phi = Homomorphism::new(
        source,
        alloc::vec![OracleContext::B2A, OracleContext::Permutation(2)],
        [(s1.clone(), Word::generator(z1.clone())), (z1.clone(), Word::generator(s1.clone()))],
    )
    .expect("both generators mapped");
    let relator_status = verify_homomorphism(&phi).map(|r| r.status).unwrap_or(HomStatus::Consistent);
    let zeta = Word::generator(z1);
    let rho_zeta = induced_permutation(2, &zeta).expect("ζ_1 has a permutation");
    let rho_phi_zeta = induced_permutation(2, &phi.apply(&zeta)).expect("σ_1 has a permutation");
    let square = phi.then(&phi);
    let involution = square.images().all(|(g, w)| *w == Word::generator(g.clone()));
    SwapReport { relator_status, rho_zeta, rho_phi_zeta, involution }
}

pub fn matrix_equals(a: &[[BigInt; 2]; 2], b: &[[i64; 2]; 2]) -> bool {
    (0..2).all(|i| (0..2).all(|j| a[i][j] == BigInt::from(b[i][j])))
}
