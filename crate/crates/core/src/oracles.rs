//! Word-problem oracles.
//!
//! Exact oracles decide equality in their group. Necessary oracles map into
//! a quotient, so they can refute an equality but never certify one.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::perm::induced_permutation;
use crate::presentations::{Abelianization, SurfaceParams};
use crate::words::{Alphabet, GenSym, SymKind, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    UnknownGenerator(String),
    SphereNotSupported,
    NoApplicableOracle,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::UnknownGenerator(s) => write!(f, "UnknownGenerator: {s}"),
            OracleError::SphereNotSupported => f.write_str("SphereNotSupported"),
            OracleError::NoApplicableOracle => f.write_str("NoApplicableOracle"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Exact,
    Necessary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Equal,
    NotEqual,
    ConsistentButUnverified,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Value::Equal => "Equal",
            Value::NotEqual => "NotEqual",
            Value::ConsistentButUnverified => "ConsistentButUnverified",
        })
    }
}

/// The oracle that told two words apart, and what it saw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub oracle: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.oracle, self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: Value,
    pub witness: Option<Witness>,
    /// Oracles that ran without refuting.
    pub passed: Vec<String>,
    /// Contexts skipped because they do not accept the words.
    pub skipped: Vec<String>,
}

impl Verdict {
    fn from_bool(oracle: &str, tier: Tier, equal: bool, left: String, right: String) -> Verdict {
        if equal {
            let value = match tier {
                Tier::Exact => Value::Equal,
                Tier::Necessary => Value::ConsistentButUnverified,
            };
            Verdict { value, witness: None, passed: alloc::vec![oracle.to_string()], skipped: Vec::new() }
        } else {
            Verdict {
                value: Value::NotEqual,
                witness: Some(Witness { oracle: oracle.to_string(), left, right }),
                passed: Vec::new(),
                skipped: Vec::new(),
            }
        }
    }

    pub fn is_refuted(&self) -> bool {
        self.value == Value::NotEqual
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum OracleContext {
    FreeGroup(Alphabet),
    ClassicalBraid(u32),
    ClosedSurface(u32),
    TorusZ2,
    TrivialGroup,
    B2A,
    Permutation(u32),
    Homology(Abelianization),
    GoldbergProduct(SurfaceParams),
}

impl OracleContext {
    pub fn tier(&self) -> Tier {
        match self {
            OracleContext::Permutation(_) | OracleContext::Homology(_) | OracleContext::GoldbergProduct(_) => {
                Tier::Necessary
            }
            _ => Tier::Exact,
        }
    }

    pub fn name(&self) -> String {
        match self {
            OracleContext::FreeGroup(_) => "free".into(),
            OracleContext::ClassicalBraid(n) => format!("artin(n={n})"),
            OracleContext::ClosedSurface(g) => format!("dehn(g={g})"),
            OracleContext::TorusZ2 => "torus".into(),
            OracleContext::TrivialGroup => "trivial".into(),
            OracleContext::B2A => "b2a".into(),
            OracleContext::Permutation(n) => format!("perm(n={n})"),
            OracleContext::Homology(_) => "homology".into(),
            OracleContext::GoldbergProduct(p) => format!("goldberg({p})"),
        }
    }

    pub fn evaluate(&self, u: &Word, v: &Word) -> Result<Verdict, OracleError> {
        match self {
            OracleContext::FreeGroup(alpha) => free_eq(alpha, u, v),
            OracleContext::ClassicalBraid(n) => artin_eq(*n, u, v),
            OracleContext::ClosedSurface(g) => dehn_eq(*g, u, v),
            OracleContext::TorusZ2 => torus_eq(u, v),
            OracleContext::TrivialGroup => {
                Ok(Verdict::from_bool("trivial", Tier::Exact, true, String::new(), String::new()))
            }
            OracleContext::B2A => b2a_eq(u, v),
            OracleContext::Permutation(n) => perm_eq(*n, u, v),
            OracleContext::Homology(ab) => homology_eq(ab, u, v),
            OracleContext::GoldbergProduct(p) => goldberg_eq(*p, u, v),
        }
    }
}

fn unknown(s: &GenSym) -> OracleError {
    OracleError::UnknownGenerator(s.name().to_string())
}

pub fn free_eq(alpha: &Alphabet, u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    for s in u.symbols().chain(v.symbols()) {
        if !alpha.contains(s.name()) {
            return Err(unknown(s));
        }
    }
    Ok(Verdict::from_bool("free", Tier::Exact, u == v, u.to_string(), v.to_string()))
}

/// `σ_i ↦` its Artin automorphism of `⟨x_1..x_n⟩`, applied to every
/// current image (left-to-right composition).
fn artin_step(images: &mut [Word], i: u32, inverse: bool) {
    let xi = GenSym::free_letter(i);
    let xj = GenSym::free_letter(i + 1);
    let (img_i, img_j) = if inverse {
        (Word::generator(xj.clone()), Word::generator(xi.clone()).conjugate(&Word::generator(xj.clone())))
    } else {
        (Word::generator(xj.clone()).conjugate(&Word::power_of(xi.clone(), -1)), Word::generator(xi.clone()))
    };
    for w in images.iter_mut() {
        *w = w.substitute(|s| {
            if *s == xi {
                Some(img_i.clone())
            } else if *s == xj {
                Some(img_j.clone())
            } else {
                None
            }
        });
    }
}

/// Image of each free generator under the Artin action of `w`.
pub fn artin_action(n: u32, w: &Word) -> Result<Vec<Word>, OracleError> {
    let mut images: Vec<Word> = (1..=n).map(|j| Word::generator(GenSym::free_letter(j))).collect();
    let w = eliminate_zeta1(n, w)?;
    for (s, e) in w.letters() {
        match s.kind() {
            SymKind::Sigma(i) if i < n => artin_step(&mut images, i, e < 0),
            _ => return Err(unknown(s)),
        }
    }
    Ok(images)
}

/// `ζ_1 := (σ_1…σ_{n−1}σ_{n−1}…σ_1)^-1`.
fn eliminate_zeta1(n: u32, w: &Word) -> Result<Word, OracleError> {
    let z1 = GenSym::zeta(1);
    let mut loop_word = Word::identity();
    for i in (1..n).chain((1..n).rev()) {
        loop_word = &loop_word * &Word::generator(GenSym::sigma(i));
    }
    let z1_image = loop_word.inverse();
    for s in w.symbols() {
        match s.kind() {
            SymKind::Sigma(i) if i < n => {}
            SymKind::Zeta(1) => {}
            _ => return Err(unknown(s)),
        }
    }
    Ok(w.substitute(|s| (*s == z1).then(|| z1_image.clone())))
}

pub fn artin_eq(n: u32, u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    let iu = artin_action(n, u)?;
    let iv = artin_action(n, v)?;
    if let Some(j) = (0..iu.len()).find(|&j| iu[j] != iv[j]) {
        let name = format!("artin(x{})", j + 1);
        return Ok(Verdict::from_bool(&name, Tier::Exact, false, iu[j].to_string(), iv[j].to_string()));
    }
    Ok(Verdict::from_bool("artin", Tier::Exact, true, String::new(), String::new()))
}

/// Letters of a surface-group word as signed indices: `a_r ↦ 2r−1`,
/// `b_r ↦ 2r`.
fn surface_letters(g: u32, w: &Word) -> Result<Vec<i32>, OracleError> {
    let mut out = Vec::new();
    for (s, e) in w.letters() {
        let k = match s.kind() {
            SymKind::A(r) if r >= 1 && r <= g => 2 * r as i32 - 1,
            SymKind::B(r) if r >= 1 && r <= g => 2 * r as i32,
            _ => return Err(unknown(s)),
        };
        out.push(if e > 0 { k } else { -k });
    }
    Ok(out)
}

fn free_reduce(letters: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &x in letters.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    *letters = out;
}

/// All rotations of the surface relator `∏[b_r^-1, a_r]` and its inverse.
fn dehn_rotations(g: u32) -> Vec<Vec<i32>> {
    let mut rel = Vec::new();
    for r in 1..=g as i32 {
        let (a, b) = (2 * r - 1, 2 * r);
        rel.extend_from_slice(&[b, -a, -b, a]);
    }
    let inv: Vec<i32> = rel.iter().rev().map(|x| -x).collect();
    let mut rots = Vec::new();
    for base in [rel, inv] {
        for k in 0..base.len() {
            let mut r = base[k..].to_vec();
            r.extend_from_slice(&base[..k]);
            rots.push(r);
        }
    }
    rots
}

/// One pass of Dehn's algorithm; returns false when no long piece of a
/// relator occurs in `w`.
fn dehn_step(w: &mut Vec<i32>, rots: &[Vec<i32>]) -> bool {
    let len = rots[0].len();
    for start in 0..w.len() {
        for rot in rots {
            let k = w[start..].iter().zip(rot).take_while(|(a, b)| a == b).count();
            if 2 * k > len {
                let replacement: Vec<i32> = rot[k..].iter().rev().map(|x| -x).collect();
                w.splice(start..start + k, replacement);
                free_reduce(w);
                return true;
            }
        }
    }
    false
}

/// Dehn-reduced form of a word in `π_1(Σ_g)`, `g ≥ 2`.
pub fn dehn_reduce(g: u32, w: &Word) -> Result<Vec<i32>, OracleError> {
    let mut letters = surface_letters(g, w)?;
    free_reduce(&mut letters);
    let rots = dehn_rotations(g);
    while dehn_step(&mut letters, &rots) {}
    Ok(letters)
}

fn letters_to_word(letters: &[i32]) -> Word {
    Word::from_letters(letters.iter().map(|&x| {
        let r = x.unsigned_abs().div_ceil(2);
        let sym = if x.unsigned_abs() % 2 == 1 { GenSym::a(r) } else { GenSym::b(r) };
        (sym, x.signum() as i64)
    }))
}

pub fn dehn_eq(g: u32, u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    if g < 2 {
        return Err(OracleError::NoApplicableOracle);
    }
    let diff = u * &v.inverse();
    let rest = dehn_reduce(g, &diff)?;
    Ok(Verdict::from_bool(
        "dehn",
        Tier::Exact,
        rest.is_empty(),
        format!("u*v^-1 -> {}", letters_to_word(&rest)),
        "e".into(),
    ))
}

fn torus_vector(w: &Word) -> Result<(i64, i64), OracleError> {
    let (mut x, mut y) = (0, 0);
    for (s, e) in w.syllables() {
        match s.kind() {
            SymKind::A(1) => x += e,
            SymKind::B(1) => y += e,
            _ => return Err(unknown(s)),
        }
    }
    Ok((x, y))
}

/// `π_1(T) = Z^2` on exponent sums of `a1`, `b1`.
pub fn torus_eq(u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    let (cu, cv) = (torus_vector(u)?, torus_vector(v)?);
    Ok(Verdict::from_bool(
        "torus",
        Tier::Exact,
        cu == cv,
        format!("({}, {})", cu.0, cu.1),
        format!("({}, {})", cv.0, cv.1),
    ))
}

/// Canonical form of an element of `⟨d, z | [z, d^2]⟩`: the central power
/// `k` of `d^2` and an alternating word in `z^m` and single `d` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct B2aNormalForm {
    pub k: i64,
    pub word: Word,
}

impl fmt::Display for B2aNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, w={})", self.k, self.word)
    }
}

/// Accepts `d`, `z` and the ambient annulus generators `s1 = z^-1 d`,
/// `z1 = z`, `z2 = (s1^2 z1)^-1`.
pub fn b2a_normal_form(w: &Word) -> Result<B2aNormalForm, OracleError> {
    let d = GenSym::named("d");
    let z = GenSym::named("z");
    let s1 = Word::from_syllables([(z.clone(), -1), (d.clone(), 1)]);
    let z2 = (&s1.pow(2) * &Word::generator(z.clone())).inverse();
    let w = w.try_substitute(|s| match (s.name(), s.kind()) {
        ("d", _) | ("z", _) => Ok(Word::generator(s.clone())),
        (_, SymKind::Sigma(1)) => Ok(s1.clone()),
        (_, SymKind::Zeta(1)) => Ok(Word::generator(z.clone())),
        (_, SymKind::Zeta(2)) => Ok(z2.clone()),
        _ => Err(unknown(s)),
    })?;
    let mut k: i64 = 0;
    // syllables with d-exponents always 1
    let mut stack: Vec<(bool, i64)> = Vec::new();
    for (s, e) in w.syllables() {
        if *s == d {
            k += e.div_euclid(2);
            if e.rem_euclid(2) == 1 {
                if let Some((true, _)) = stack.last() {
                    stack.pop();
                    k += 1;
                } else {
                    stack.push((true, 1));
                }
            }
        } else {
            match stack.last_mut() {
                Some((false, m)) => {
                    *m += e;
                    if *m == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((false, *e)),
            }
        }
        // a popped z-syllable may expose two adjacent d letters
        while stack.len() >= 2 && stack[stack.len() - 1].0 && stack[stack.len() - 2].0 {
            stack.truncate(stack.len() - 2);
            k += 1;
        }
    }
    let word = Word::from_syllables(stack.into_iter().map(|(is_d, e)| (if is_d { d.clone() } else { z.clone() }, e)));
    Ok(B2aNormalForm { k, word })
}

pub fn b2a_eq(u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    let (nu, nv) = (b2a_normal_form(u)?, b2a_normal_form(v)?);
    Ok(Verdict::from_bool("b2a", Tier::Exact, nu == nv, nu.to_string(), nv.to_string()))
}

pub fn perm_eq(n: u32, u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    let pu = induced_permutation(n as usize, u).map_err(OracleError::UnknownGenerator)?;
    let pv = induced_permutation(n as usize, v).map_err(OracleError::UnknownGenerator)?;
    Ok(Verdict::from_bool("perm", Tier::Necessary, pu == pv, pu.to_string(), pv.to_string()))
}

pub fn homology_eq(ab: &Abelianization, u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    let err = |e: crate::presentations::PresentationError| match e {
        crate::presentations::PresentationError::UnknownGenerator(s) => OracleError::UnknownGenerator(s),
        other => OracleError::UnknownGenerator(other.to_string()),
    };
    let same = ab.same_class(u, v).map_err(err)?;
    let show = |w: &Word| -> Result<String, OracleError> {
        let c = ab.class_of(w).map_err(err)?;
        Ok(format!("{c:?}"))
    };
    Ok(Verdict::from_bool("homology", Tier::Necessary, same, show(u)?, show(v)?))
}

/// Image of a word in `π_1(Σ)^n ⋊ S_n`: the strand sitting at each position
/// and the `π_1` word traced by each strand, indexed by starting position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldbergImage {
    pub positions: Vec<usize>,
    pub factors: Vec<Word>,
}

/// Projects an ambient or X-alphabet word. `σ_i` swaps the strands at
/// positions `i` and `i+1`; `a_r`, `b_r`, `ζ_t` move the strand at position
/// 1; `a[i,r]`, `b[i,r]`, `z[i,t]` move the strand at position `i`;
/// `A[i,j]` is trivial.
pub fn goldberg_image(params: SurfaceParams, w: &Word) -> Result<GoldbergImage, OracleError> {
    if params.is_sphere() {
        return Err(OracleError::SphereNotSupported);
    }
    let n = params.n as usize;
    let mut positions: Vec<usize> = (0..n).collect();
    let mut raw: Vec<Vec<(GenSym, i64)>> = alloc::vec![Vec::new(); n];
    let in_g = |r: u32| r >= 1 && r <= params.g;
    let in_p = |t: u32| t >= 1 && t <= params.p;
    let strand = |i: u32| i >= 1 && i as usize <= n;
    for (s, e) in w.syllables() {
        match s.kind() {
            SymKind::Sigma(i) if (i as usize) < n => {
                if e % 2 != 0 {
                    positions.swap(i as usize - 1, i as usize);
                }
            }
            SymKind::A(r) if in_g(r) && n >= 1 => raw[positions[0]].push((s.clone(), *e)),
            SymKind::B(r) if in_g(r) && n >= 1 => raw[positions[0]].push((s.clone(), *e)),
            SymKind::Zeta(t) if in_p(t) && n >= 1 => raw[positions[0]].push((s.clone(), *e)),
            SymKind::Abstract => {
                let idx = s.indices();
                match (s.base(), idx.as_slice()) {
                    ("A", [i, j]) if strand(*i) && strand(*j) && i != j => {}
                    ("a", [i, r]) if strand(*i) && in_g(*r) => {
                        raw[positions[*i as usize - 1]].push((GenSym::a(*r), *e))
                    }
                    ("b", [i, r]) if strand(*i) && in_g(*r) => {
                        raw[positions[*i as usize - 1]].push((GenSym::b(*r), *e))
                    }
                    ("z", [i, t]) if strand(*i) && in_p(*t) => {
                        raw[positions[*i as usize - 1]].push((GenSym::zeta(*t), *e))
                    }
                    _ => return Err(unknown(s)),
                }
            }
            _ => return Err(unknown(s)),
        }
    }
    Ok(GoldbergImage { positions, factors: raw.into_iter().map(Word::from_syllables).collect() })
}

/// Decides equality in `π_1(Σ_{g,p})`.
pub fn surface_group_eq(g: u32, p: u32, u: &Word, v: &Word) -> Result<bool, OracleError> {
    if g == 0 && p == 0 {
        return Err(OracleError::SphereNotSupported);
    }
    if p == 0 {
        return Ok(if g == 1 {
            torus_vector(u)? == torus_vector(v)?
        } else {
            dehn_reduce(g, &(u * &v.inverse()))?.is_empty()
        });
    }
    Ok(free_surface_form(g, p, u)? == free_surface_form(g, p, v)?)
}

/// Rewrites over the free basis `a_r, b_r, ζ_1..ζ_{p−1}` using
/// `ζ_p = (∏[b_r^-1, a_r] ζ_1…ζ_{p−1})^-1`.
fn free_surface_form(g: u32, p: u32, w: &Word) -> Result<Word, OracleError> {
    let mut tail = Word::identity();
    for r in 1..=g {
        tail = &tail * &crate::words::commutator(&Word::power_of(GenSym::b(r), -1), &Word::generator(GenSym::a(r)));
    }
    for t in 1..p {
        tail = &tail * &Word::generator(GenSym::zeta(t));
    }
    let zp = tail.inverse();
    for s in w.symbols() {
        match s.kind() {
            SymKind::A(r) | SymKind::B(r) if r >= 1 && r <= g => {}
            SymKind::Zeta(t) if t >= 1 && t <= p => {}
            _ => return Err(unknown(s)),
        }
    }
    let last = GenSym::zeta(p);
    Ok(w.substitute(|s| (*s == last).then(|| zp.clone())))
}

pub fn goldberg_eq(params: SurfaceParams, u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    let iu = goldberg_image(params, u)?;
    let iv = goldberg_image(params, v)?;
    if iu.positions != iv.positions {
        let show = |im: &GoldbergImage| format!("{:?}", im.positions.iter().map(|x| x + 1).collect::<Vec<_>>());
        return Ok(Verdict::from_bool("goldberg(positions)", Tier::Necessary, false, show(&iu), show(&iv)));
    }
    for k in 0..iu.factors.len() {
        if !surface_group_eq(params.g, params.p, &iu.factors[k], &iv.factors[k])? {
            return Ok(Verdict::from_bool(
                &format!("goldberg(factor {})", k + 1),
                Tier::Necessary,
                false,
                iu.factors[k].to_string(),
                iv.factors[k].to_string(),
            ));
        }
    }
    Ok(Verdict::from_bool("goldberg", Tier::Necessary, true, String::new(), String::new()))
}

/// Runs every context that accepts the words. A refutation wins; otherwise
/// an exact certificate gives `Equal`.
pub fn check_equal(ctxs: &[OracleContext], u: &Word, v: &Word) -> Result<Verdict, OracleError> {
    let mut passed = Vec::new();
    let mut skipped = Vec::new();
    let mut exact = false;
    let mut refuted: Option<Witness> = None;
    for ctx in ctxs {
        match ctx.evaluate(u, v) {
            Ok(verdict) => match verdict.value {
                Value::NotEqual => {
                    if refuted.is_none() {
                        refuted = verdict.witness;
                    }
                }
                Value::Equal => {
                    exact = true;
                    passed.push(ctx.name());
                }
                Value::ConsistentButUnverified => passed.push(ctx.name()),
            },
            Err(e) => skipped.push(format!("{}: {e}", ctx.name())),
        }
    }
    if refuted.is_none() && passed.is_empty() {
        return Err(OracleError::NoApplicableOracle);
    }
    let value = if refuted.is_some() {
        Value::NotEqual
    } else if exact {
        Value::Equal
    } else {
        Value::ConsistentButUnverified
    };
    Ok(Verdict { value, witness: refuted, passed, skipped })
}

/// The oracle battery applicable to `B_n(Σ_{g,p})`.
pub fn battery(params: SurfaceParams) -> Vec<OracleContext> {
    let mut out = Vec::new();
    if params.g == 0 && params.p == 1 {
        out.push(OracleContext::ClassicalBraid(params.n));
    }
    if params.g == 0 && params.p == 2 && params.n == 2 {
        out.push(OracleContext::B2A);
    }
    if params.n == 1 {
        match (params.g, params.p) {
            (1, 0) => out.push(OracleContext::TorusZ2),
            (g, 0) if g >= 2 => out.push(OracleContext::ClosedSurface(g)),
            _ => {}
        }
    }
    out.push(OracleContext::Permutation(params.n));
    out.push(OracleContext::Homology(crate::presentations::abelianize(&crate::presentations::braid_presentation(
        params,
    ))));
    if !params.is_sphere() {
        out.push(OracleContext::GoldbergProduct(params));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{abelianize, b2a_presentation, b2a_sigma_presentation, braid_presentation};
    use crate::words::{commutator, parse_word_any};

    fn w(t: &str) -> Word {
        parse_word_any(t).unwrap()
    }

    #[test]
    fn free_examples() {
        let alpha = Alphabet::new([GenSym::named("x1"), GenSym::named("x2")]);
        assert_eq!(free_eq(&alpha, &w("x1 x2 x2^-1"), &w("x1")).unwrap().value, Value::Equal);
        assert_eq!(free_eq(&alpha, &w("x1 x2"), &w("x2 x1")).unwrap().value, Value::NotEqual);
        assert_eq!(free_eq(&alpha, &w("e"), &w("e")).unwrap().value, Value::Equal);
        assert!(free_eq(&alpha, &w("y"), &w("e")).is_err());
    }

    #[test]
    fn artin_examples() {
        assert_eq!(artin_eq(3, &w("s1 s2 s1"), &w("s2 s1 s2")).unwrap().value, Value::Equal);
        let v = artin_eq(3, &w("s1"), &w("s2")).unwrap();
        assert_eq!(v.value, Value::NotEqual);
        assert_eq!(v.witness.unwrap().oracle, "artin(x1)");
        let lantern = w("s1^2 s1^-1 s2^2 s1 s2^2");
        assert_eq!(artin_eq(3, &lantern, &w("(s1 s2)^3")).unwrap().value, Value::Equal);
        assert_eq!(artin_eq(3, &w("s1 s3"), &w("e")), Err(OracleError::UnknownGenerator("s3".into())));
        // images under σ_1 and σ_1^-1
        let im = artin_action(2, &w("s1")).unwrap();
        assert_eq!(im, [w("x1 x2 x1^-1"), w("x1")]);
        assert!(artin_action(2, &w("s1 s1^-1")).unwrap() == [w("x1"), w("x2")]);
    }

    #[test]
    fn artin_validates_disc_presentations() {
        for n in 1..=4 {
            let p = braid_presentation(SurfaceParams::new(0, 1, n));
            for r in p.relators() {
                assert_eq!(artin_eq(n, r, &Word::identity()).unwrap().value, Value::Equal, "{r}");
            }
        }
    }

    #[test]
    fn dehn_examples() {
        let rel = w("[b1^-1,a1][b2^-1,a2]");
        assert_eq!(dehn_eq(2, &rel, &w("e")).unwrap().value, Value::Equal);
        assert_eq!(dehn_eq(2, &w("a1 b1"), &w("b1 a1")).unwrap().value, Value::NotEqual);
        assert_eq!(dehn_eq(2, &w("a1"), &w("a1")).unwrap().value, Value::Equal);
        assert_eq!(
            dehn_eq(2, &w("a2 b2 a1 rel_a"), &w("e")).unwrap_err(),
            OracleError::UnknownGenerator("rel_a".into())
        );
        // conjugates and rotations of the relator are trivial
        let u = w("a1 b2^-1");
        assert_eq!(dehn_eq(2, &rel.conjugate(&u), &w("e")).unwrap().value, Value::Equal);
        assert_eq!(dehn_eq(2, &rel.inverse().pow(2), &w("e")).unwrap().value, Value::Equal);
        assert_eq!(dehn_eq(3, &w("[b1^-1,a1][b2^-1,a2][b3^-1,a3]"), &w("e")).unwrap().value, Value::Equal);
        assert_eq!(dehn_eq(1, &w("a1"), &w("a1")), Err(OracleError::NoApplicableOracle));
    }

    #[test]
    fn torus_examples() {
        assert_eq!(torus_eq(&w("a1 b1"), &w("b1 a1")).unwrap().value, Value::Equal);
        assert_eq!(torus_eq(&w("a1"), &w("b1")).unwrap().value, Value::NotEqual);
    }

    #[test]
    fn b2a_examples() {
        assert_eq!(b2a_eq(&w("z d^2 z^-1"), &w("d^2")).unwrap().value, Value::Equal);
        let nf = b2a_normal_form(&w("d z d^-1")).unwrap();
        assert_eq!(nf, B2aNormalForm { k: -1, word: w("d z d") });
        assert_eq!(b2a_eq(&w("d z d^-1"), &w("z")).unwrap().value, Value::NotEqual);
        assert_eq!(b2a_eq(&w("d^4 z d^-2"), &w("d^2 z")).unwrap().value, Value::Equal);
        assert_eq!(b2a_normal_form(&w("d z z^-1 d")).unwrap(), B2aNormalForm { k: 1, word: Word::identity() });
        assert_eq!(b2a_eq(&w("d z d z^-1"), &w("e")).unwrap().value, Value::NotEqual);
    }

    #[test]
    fn b2a_validates_both_forms() {
        let b2a = b2a_presentation();
        for r in b2a.presentation.relators() {
            assert_eq!(b2a_eq(r, &Word::identity()).unwrap().value, Value::Equal);
        }
        for r in b2a_sigma_presentation().relators() {
            assert_eq!(b2a_eq(r, &Word::identity()).unwrap().value, Value::Equal);
        }
        for r in braid_presentation(SurfaceParams::new(0, 2, 2)).relators() {
            assert_eq!(b2a_eq(r, &Word::identity()).unwrap().value, Value::Equal);
        }
        // d = z1 s1 and z = z1
        assert_eq!(b2a_eq(&w("z1 s1"), &w("d")).unwrap().value, Value::Equal);
        assert_eq!(b2a_eq(&w("s1 z1 s1 z1"), &w("d^2")).unwrap().value, Value::Equal);
    }

    #[test]
    fn goldberg_projection() {
        let torus2 = SurfaceParams::new(1, 0, 2);
        let v = goldberg_eq(torus2, &w("A[1,2]"), &w("e")).unwrap();
        assert_eq!(v.value, Value::ConsistentButUnverified);
        assert_eq!(goldberg_eq(torus2, &w("a[1,1]"), &w("b[1,1]")).unwrap().value, Value::NotEqual);
        let rhs = commutator(&w("b[1,1]"), &w("a[2,1]^-1"));
        assert_eq!(goldberg_eq(torus2, &rhs, &w("A[1,2]")).unwrap().value, Value::ConsistentButUnverified);
        let im = goldberg_image(SurfaceParams::new(1, 0, 3), &w("a[2,1]")).unwrap();
        assert_eq!(im.factors, [w("e"), w("a1"), w("e")]);
        assert_eq!(goldberg_eq(SurfaceParams::new(0, 0, 3), &w("e"), &w("e")), Err(OracleError::SphereNotSupported));
    }

    #[test]
    fn goldberg_kills_relators() {
        for g in 0..=2 {
            for p in 0..=3 {
                if g == 0 && p == 0 {
                    continue;
                }
                for n in 1..=4 {
                    let params = SurfaceParams::new(g, p, n);
                    for (label, r) in braid_presentation(params).labelled_relators() {
                        let v = goldberg_eq(params, r, &Word::identity()).unwrap();
                        assert_eq!(v.value, Value::ConsistentButUnverified, "{params} {label}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn surface_group_words() {
        // ζ_2 = ([b1^-1,a1] ζ_1)^-1 in π_1(Σ_{1,2})
        assert!(surface_group_eq(1, 2, &w("z2"), &w("z1^-1 [b1^-1,a1]^-1")).unwrap());
        assert!(!surface_group_eq(1, 1, &w("a1 b1"), &w("b1 a1")).unwrap());
        assert!(surface_group_eq(0, 1, &w("z1"), &w("e")).unwrap());
    }

    #[test]
    fn check_equal_precedence() {
        let params = SurfaceParams::new(0, 1, 3);
        let ctxs = battery(params);
        let v = check_equal(&ctxs, &w("s1 s2 s1"), &w("s2 s1 s2")).unwrap();
        assert_eq!(v.value, Value::Equal);
        assert!(v.passed.len() >= 3);

        let v = check_equal(&ctxs, &w("s1"), &w("e")).unwrap();
        assert_eq!(v.value, Value::NotEqual);
        let wit = v.witness.unwrap();
        assert!(wit.oracle.starts_with("artin"));

        let perm_only = [OracleContext::Permutation(3)];
        let v = check_equal(&perm_only, &w("s1"), &w("s2")).unwrap();
        assert_eq!(v.witness.unwrap(), Witness { oracle: "perm".into(), left: "(1 2)".into(), right: "(2 3)".into() });

        let hom = [OracleContext::Homology(abelianize(&braid_presentation(SurfaceParams::new(1, 0, 2))))];
        let v = check_equal(&hom, &w("a1 b1"), &w("b1 a1")).unwrap();
        assert_eq!(v.value, Value::ConsistentButUnverified);

        let v = check_equal(&[OracleContext::B2A, OracleContext::TorusZ2], &w("d"), &w("d")).unwrap();
        assert_eq!(v.skipped.len(), 1);
        assert_eq!(
            check_equal(&[OracleContext::TorusZ2], &w("s1"), &w("e")).unwrap_err(),
            OracleError::NoApplicableOracle
        );
    }
}
