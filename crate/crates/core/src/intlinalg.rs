//! Exact integer matrices: Smith normal form with unimodular witnesses,
//! rational rank, and invariants of finitely generated abelian groups.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, entries: alloc::vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows<R, T>(cols: usize, rows: R) -> IntMatrix
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut entries = Vec::new();
        let mut count = 0;
        for row in rows {
            let before = entries.len();
            entries.extend(row.into_iter().map(Into::into));
            assert_eq!(entries.len() - before, cols, "row {count} has the wrong length");
            count += 1;
        }
        IntMatrix { rows: count, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut out = alloc::vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * &self[(i, j)];
            }
        }
        out
    }

    /// Determinant by fraction-free elimination. Square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k * row[src]`
    fn add_row(&mut self, src: usize, dst: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// `col[dst] += k * col[src]`
    fn add_col(&mut self, src: usize, dst: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with a
/// nonnegative divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`; row `j` is the class of the `j`-th invariant factor
    /// in the original coordinates.
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d_1, d_2, ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks `u * a * v = d`, the divisibility chain and unimodularity.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        if self.u.mul(a).mul(&self.v) != self.d {
            return false;
        }
        if self.v.mul(&self.v_inv) != IntMatrix::identity(self.v.rows) {
            return false;
        }
        for i in 0..self.d.rows {
            for j in 0..self.d.cols {
                if i != j && !self.d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(|x| x.is_negative()) {
            return false;
        }
        for w in diag.windows(2) {
            if w[0].is_zero() {
                if !w[1].is_zero() {
                    return false;
                }
            } else if !w[1].is_multiple_of(&w[0]) {
                return false;
            }
        }
        let unit = |m: &IntMatrix| m.determinant().abs().is_one();
        unit(&self.u) && unit(&self.v)
    }

    /// Is `vec` (indexed by columns of the original matrix) in the row
    /// lattice of that matrix?
    pub fn row_lattice_contains(&self, vec: &[BigInt]) -> bool {
        let y = self.v.left_mul_vec(vec);
        let diag = self.diagonal();
        y.iter().enumerate().all(|(j, yj)| match diag.get(j) {
            Some(dj) if !dj.is_zero() => yj.is_multiple_of(dj),
            _ => yj.is_zero(),
        })
    }

    /// Coordinates of `vec` in the Smith basis of `Z^cols / rowspace`.
    pub fn coordinates(&self, vec: &[BigInt]) -> Vec<BigInt> {
        self.v.left_mul_vec(vec)
    }

    /// Indices `j` of the free coordinates (zero or absent invariant factor).
    pub fn free_coordinates(&self) -> Vec<usize> {
        let diag = self.diagonal();
        (0..self.d.cols).filter(|&j| diag.get(j).is_none_or(|d| d.is_zero())).collect()
    }
}

/// Smith normal form with the deterministic pivot rule: smallest nonzero
/// magnitude in the remaining block, ties broken by row-major position.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                return SmithForm { d, u, v, v_inv };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..r {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &pivot);
                d.add_row(t, i, &q);
                u.add_row(t, i, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..c {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &pivot);
                d.add_col(t, j, &q);
                v.add_col(t, j, &q);
                v_inv.add_row(j, t, &-&q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&pivot));
            if let Some((i, _)) = offender {
                let one = BigInt::one();
                d.add_row(i, t, &one);
                u.add_row(i, t, &one);
                continue;
            }
            if pivot.is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    SmithForm { d, u, v, v_inv }
}

fn min_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            let mag = x.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                best = Some(((i, j), mag));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(a: &IntMatrix) -> usize {
    let mut m = a.clone();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(p) = (rank..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(p, rank);
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let v = (&m[(i, j)] * &m[(rank, col)] - &m[(i, col)] * &m[(rank, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, col)] = BigInt::zero();
        }
        prev = m[(rank, col)].clone();
        rank += 1;
    }
    rank
}

/// `Z^free_rank + Z/t_1 + ... + Z/t_k` with `t_1 | t_2 | ...`, all `t_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn from_smith(s: &SmithForm) -> AbelianInvariants {
        let diag = s.diagonal();
        let nonzero = diag.iter().filter(|x| !x.is_zero()).count();
        AbelianInvariants {
            free_rank: s.d.cols - nonzero,
            torsion: diag.into_iter().filter(|x| *x > BigInt::one()).collect(),
        }
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|t| u64::try_from(t).unwrap_or(u64::MAX)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for t in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// Invariants of `Z^cols / rowspace(relation_matrix)`.
pub fn abelian_invariants(relation_matrix: &IntMatrix) -> AbelianInvariants {
    AbelianInvariants::from_smith(&smith_normal_form(relation_matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(cols, rows.iter().map(|r| r.iter().copied()))
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        let a = m(2, &[&[2, 0], &[0, 0]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.diagonal(), big(&[2, 0]));

        let htr = m(5, &[&[4, 1, 1, 1, 1]]);
        let s = smith_normal_form(&htr);
        assert!(s.verify(&htr));
        assert_eq!(s.d, m(5, &[&[1, 0, 0, 0, 0]]));

        let z = m(2, &[&[0, 0], &[0, 0]]);
        let s = smith_normal_form(&z);
        assert!(s.verify(&z));
        assert_eq!(abelian_invariants(&z).free_rank, 2);
    }

    #[test]
    fn snf_divisibility_fixup() {
        // diag(2, 3) is diagonal but not a divisibility chain
        let a = m(2, &[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.diagonal(), big(&[1, 6]));
    }

    #[test]
    fn snf_negative_and_wide() {
        let a = m(3, &[&[-6, 4, 0], &[10, -8, 14], &[0, 0, 0], &[3, 3, 3]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(abelian_invariants(&a), AbelianInvariants { free_rank: 0, torsion: big(&[2, 222]) });
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(abelian_invariants(&m(1, &[&[2]])), AbelianInvariants { free_rank: 0, torsion: big(&[2]) });
        assert_eq!(
            abelian_invariants(&m(5, &[&[4, 1, 1, 1, 1]])),
            AbelianInvariants { free_rank: 4, torsion: Vec::new() }
        );
        // no relators at all
        let empty = IntMatrix::zeros(0, 3);
        assert_eq!(abelian_invariants(&empty).free_rank, 3);
        assert_eq!(abelian_invariants(&IntMatrix::zeros(0, 0)).to_string(), "0");
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&IntMatrix::identity(3)), 3);
        assert_eq!(rational_rank(&m(2, &[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rational_rank(&IntMatrix::zeros(2, 2)), 0);
    }

    #[test]
    fn lattice_membership() {
        let a = m(3, &[&[2, 0, 0], &[0, 0, 0]]);
        let s = smith_normal_form(&a);
        assert!(s.row_lattice_contains(&big(&[4, 0, 0])));
        assert!(!s.row_lattice_contains(&big(&[1, 0, 0])));
        assert!(!s.row_lattice_contains(&big(&[0, 1, 0])));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(2, &[&[1, 2], &[3, 4]]).determinant(), BigInt::from(-2));
        assert_eq!(m(3, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).determinant(), BigInt::from(-1));
        assert_eq!(m(2, &[&[2, 4], &[1, 2]]).determinant(), BigInt::zero());
    }
}
