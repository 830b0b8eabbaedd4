//! Permutations of `{1..n}` and the induced permutation of a braid word.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::words::{GenSym, SymKind, Word};

/// A permutation stored as its image list on `0..n`. Products compose left
/// to right: `(p * q)(i) = q(p(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    /// Swaps `i` and `j` (zero-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Perm::identity(self.degree());
        // orders are at most lcm of cycle lengths; exponents here are small
        let reps = k.unsigned_abs() % order(&base);
        for _ in 0..reps {
            out = out.then(&base);
        }
        out
    }
}

fn order(p: &Perm) -> u64 {
    let mut seen = alloc::vec![false; p.degree()];
    let mut acc: u64 = 1;
    for start in 0..p.degree() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p.image(i);
            len += 1;
        }
        acc = lcm(acc, len);
    }
    acc
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Cycle notation with one-based points, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = alloc::vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.image(i);
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// The induced permutation of a single generator on `n` strands:
/// `σ_i ↦ (i, i+1)`, `d ↦ (1 2)`, every other braid or X-alphabet symbol
/// `↦` identity. Returns `Err(name)` for symbols it does not know.
pub fn generator_permutation(n: usize, sym: &GenSym) -> Result<Perm, String> {
    match sym.kind() {
        SymKind::Sigma(i) if (i as usize) < n => Ok(Perm::transposition(n, i as usize - 1, i as usize)),
        SymKind::Sigma(_) | SymKind::FreeLetter(_) => Err(sym.name().to_string()),
        SymKind::A(_) | SymKind::B(_) | SymKind::Zeta(_) => Ok(Perm::identity(n)),
        SymKind::Abstract => match (sym.base(), sym.indices().as_slice()) {
            ("d", []) if n >= 2 => Ok(Perm::transposition(n, 0, 1)),
            ("z", []) => Ok(Perm::identity(n)),
            ("A", [i, j]) if valid_strand(n, *i) && valid_strand(n, *j) && i != j => Ok(Perm::identity(n)),
            ("a" | "b" | "z", [i, _]) if valid_strand(n, *i) => Ok(Perm::identity(n)),
            _ => Err(sym.name().to_string()),
        },
    }
}

fn valid_strand(n: usize, i: u32) -> bool {
    i >= 1 && i as usize <= n
}

/// `ρ(w)` as a left-to-right product of generator permutations.
pub fn induced_permutation(n: usize, w: &Word) -> Result<Perm, String> {
    let mut acc = Perm::identity(n);
    for (s, e) in w.syllables() {
        acc = acc.then(&generator_permutation(n, s)?.pow(*e));
    }
    Ok(acc)
}
