//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers. The central
//! routine is [`smith_normal_form`], which every quotient computation in the
//! crate (cokernels, cohomology groups, abelianizations, modular image tests)
//! is built on.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Index, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },
    #[error("determinant is {0}, expected 1")]
    NotUnimodular(BigInt),
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from equally long rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged row in IntMatrix::from_rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Builds a `rows x cols` matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Dimension {
                expected: format!("{} entries", rows * cols),
                got: format!("{} entries", entries.len()),
            });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }

    /// Entries reduced into `[0, m)`. `m = 0` leaves the matrix untouched.
    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        if m.is_zero() {
            return self.clone();
        }
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x.mod_floor(m)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `A ≡ B (mod m)` entrywise; exact equality when `m = 0`.
    pub fn congruent(&self, other: &IntMatrix, m: &BigInt) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| if m.is_zero() { a == b } else { (a - b).mod_floor(m).is_zero() })
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Dimension {
                expected: format!("{} rows on the right", self.cols),
                got: format!("{}", rhs.rows),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix acting on a column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "vector length must match row count");
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += c * a;
            }
        }
        out
    }

    /// Non-negative integer power of a square matrix.
    pub fn pow(&self, mut n: u64) -> IntMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Dimension {
                expected: "square matrix".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let s = &self.entries[src * self.cols + j] * k;
            self.entries[dst * self.cols + j] += s;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let s = &self.entries[i * self.cols + src] * k;
            self.entries[i * self.cols + dst] += s;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.entries[i * self.cols + j];
            *x = -&*x;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("incompatible matrix shapes")
    }
}

/// Lexicographic on `(rows, cols, entries)`.
impl Ord for IntMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for IntMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `U·M·V = D` with `U`, `V` unimodular and `D` diagonal, non-negative, and
/// satisfying the divisibility chain `d_0 | d_1 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn min_abs_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d.get(bi, bj).abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form with transforms. Pivots are taken of minimal absolute
/// value in the remaining block.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (r, c) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_abs_pivot(&d, t) else {
                return SnfResult { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..r {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !d.get(i, t).is_zero();
            }
            if dirty {
                continue;
            }
            for j in t + 1..c {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !(d.get(i, j) % &pivot).is_zero())
            });
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, d, v }
}

/// Invariant factors of `Z^ambient_rank / rowspace(M)`: torsion factors in
/// divisibility order, then one `0` per free factor. Factors equal to 1 are
/// dropped.
pub fn cokernel_invariants(m: &IntMatrix, ambient_rank: usize) -> Result<Vec<BigInt>, MatrixError> {
    cokernel_invariants_mod(m, ambient_rank, &BigInt::zero())
}

/// Invariant factors of `(Z/t)^ambient_rank / rowspace(M mod t)`; `t = 0`
/// gives the integral cokernel.
pub fn cokernel_invariants_mod(
    m: &IntMatrix,
    ambient_rank: usize,
    t: &BigInt,
) -> Result<Vec<BigInt>, MatrixError> {
    if m.cols() != ambient_rank {
        return Err(MatrixError::Dimension {
            expected: format!("{} columns", ambient_rank),
            got: format!("{}", m.cols()),
        });
    }
    let diag = smith_normal_form(m).diagonal();
    let t = t.abs();
    Ok((0..ambient_rank)
        .map(|i| {
            let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if t.is_zero() {
                d
            } else {
                d.gcd(&t)
            }
        })
        .filter(|x| !x.is_one())
        .collect())
}

/// Outcome of [`image_membership`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// `coeffs · M ≡ v`.
    Member(Vec<BigInt>),
    NotMember,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Decides whether the row vector `v` lies in the row space of `M` modulo
/// `t` (integrally when `t = 0`), returning a certificate when it does.
pub fn image_membership(m: &IntMatrix, v: &[BigInt], t: &BigInt) -> Result<Membership, MatrixError> {
    if v.len() != m.cols() {
        return Err(MatrixError::Dimension {
            expected: format!("vector of length {}", m.cols()),
            got: format!("{}", v.len()),
        });
    }
    let t = t.abs();
    let reduce = |x: BigInt| if t.is_zero() { x } else { x.mod_floor(&t) };

    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    // c·M = v  <=>  (c·U⁻¹)·D = v·V
    let w: Vec<BigInt> = snf.v.vec_mul(v).into_iter().map(reduce).collect();
    let mut y = vec![BigInt::zero(); m.rows()];
    for (j, wj) in w.iter().enumerate() {
        let dj = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        if t.is_zero() {
            if dj.is_zero() {
                if !wj.is_zero() {
                    return Ok(Membership::NotMember);
                }
            } else if (wj % &dj).is_zero() {
                y[j] = wj / &dj;
            } else {
                return Ok(Membership::NotMember);
            }
        } else {
            let g = dj.gcd(&t);
            if !(wj % &g).is_zero() {
                return Ok(Membership::NotMember);
            }
            let modulus = &t / &g;
            if j < y.len() && !modulus.is_one() {
                let unit = (&dj / &g).mod_floor(&modulus);
                let inv = mod_inverse(&unit, &modulus).expect("d/g is a unit modulo t/g");
                y[j] = ((wj / &g) * inv).mod_floor(&modulus);
            }
        }
    }
    let coeffs: Vec<BigInt> = snf.u.vec_mul(&y).into_iter().map(reduce).collect();
    let check: Vec<BigInt> = m.vec_mul(&coeffs).into_iter().map(reduce).collect();
    let target: Vec<BigInt> = v.iter().cloned().map(reduce).collect();
    assert_eq!(check, target, "image certificate failed to verify");
    Ok(Membership::Member(coeffs))
}

/// Inverse of `a` modulo `m > 1`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Order of an element of SL(2,Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementOrder {
    Finite(u32),
    Infinite,
}

/// Order of `a ∈ SL(2,Z)`. Finite orders are 1, 2, 3, 4 or 6; anything not
/// returning to the identity within 12 steps has infinite order.
pub fn sl2_element_order(a: &IntMatrix) -> Result<ElementOrder, MatrixError> {
    check_sl2(a)?;
    let mut p = a.clone();
    for n in 1..=12 {
        if p.is_identity() {
            return Ok(ElementOrder::Finite(n));
        }
        p = &p * a;
    }
    Ok(ElementOrder::Infinite)
}

/// Checks that `a` is a 2x2 integer matrix of determinant 1.
pub fn check_sl2(a: &IntMatrix) -> Result<(), MatrixError> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(MatrixError::Dimension {
            expected: "2x2".into(),
            got: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let det = a.determinant()?;
    if !det.is_one() {
        return Err(MatrixError::NotUnimodular(det));
    }
    Ok(())
}

/// Inverse of a 2x2 matrix of determinant 1.
pub fn sl2_inverse(a: &IntMatrix) -> IntMatrix {
    debug_assert!(a.rows() == 2 && a.cols() == 2);
    let e = |i, j| a.get(i, j).clone();
    IntMatrix::from_entries(2, 2, vec![e(1, 1), -e(0, 1), -e(1, 0), e(0, 0)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(m: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        s
    }

    #[test]
    fn snf_of_empty_matrix() {
        let s = check_snf(&IntMatrix::zeros(0, 0));
        assert_eq!(s.d.rows(), 0);
        assert_eq!(s.u.rows(), 0);
        assert_eq!(s.v.rows(), 0);
    }

    #[test]
    fn snf_of_identity() {
        let s = check_snf(&IntMatrix::identity(3));
        assert!(s.d.is_identity());
    }

    #[test]
    fn snf_of_cone_relation_block() {
        let m = IntMatrix::from_rows(&[
            [1, 2, 0, 0, 0],
            [1, 0, 2, 0, 0],
            [1, 0, 0, 2, 0],
            [1, 0, 0, 0, 3],
        ]);
        let s = check_snf(&m);
        assert_eq!(s.diagonal(), big(&[1, 1, 2, 2]));
    }

    #[test]
    fn snf_negative_and_rank_deficient() {
        let m = IntMatrix::from_rows(&[[-4, 6], [2, -3]]);
        let s = check_snf(&m);
        assert_eq!(s.diagonal(), big(&[1, 0]));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel_invariants(&IntMatrix::zeros(1, 3), 3).unwrap(), big(&[0, 0, 0]));
        assert_eq!(cokernel_invariants(&IntMatrix::from_rows(&[[5]]), 1).unwrap(), big(&[5]));
        let m = IntMatrix::from_rows(&[
            [1, 2, 0, 0, 0],
            [1, 0, 2, 0, 0],
            [1, 0, 0, 2, 0],
            [1, 0, 0, 0, 3],
        ]);
        assert_eq!(cokernel_invariants(&m, 5).unwrap(), big(&[2, 2, 0]));
        assert!(cokernel_invariants(&m, 4).is_err());
    }

    #[test]
    fn cokernel_mod_t() {
        let m = IntMatrix::from_rows(&[[6]]);
        assert_eq!(cokernel_invariants_mod(&m, 1, &BigInt::from(4)).unwrap(), big(&[2]));
        let wide = IntMatrix::from_rows(&[[6, 0]]);
        assert_eq!(cokernel_invariants_mod(&wide, 2, &BigInt::from(4)).unwrap(), big(&[2, 4]));
        assert!(cokernel_invariants_mod(&m, 1, &BigInt::from(5)).unwrap().is_empty());
    }

    #[test]
    fn membership_examples() {
        let m = IntMatrix::from_rows(&[[2]]);
        assert_eq!(
            image_membership(&m, &big(&[0]), &BigInt::zero()).unwrap(),
            Membership::Member(big(&[0]))
        );
        assert_eq!(
            image_membership(&m, &big(&[1]), &BigInt::zero()).unwrap(),
            Membership::NotMember
        );
        assert_eq!(
            image_membership(&m, &big(&[1]), &BigInt::from(5)).unwrap(),
            Membership::Member(big(&[3]))
        );
        assert!(image_membership(&m, &big(&[1, 2]), &BigInt::zero()).is_err());
    }

    #[test]
    fn membership_with_zero_columns() {
        // Row space of (2, 0) never reaches the second coordinate.
        let m = IntMatrix::from_rows(&[[2, 0]]);
        assert!(!image_membership(&m, &big(&[2, 1]), &BigInt::from(6)).unwrap().is_member());
        assert!(image_membership(&m, &big(&[4, 6]), &BigInt::from(6)).unwrap().is_member());
    }

    #[test]
    fn element_orders() {
        let cases = [
            (IntMatrix::from_rows(&[[0, 1], [-1, 0]]), ElementOrder::Finite(4)),
            (IntMatrix::from_rows(&[[1, 1], [-1, 0]]), ElementOrder::Finite(6)),
            (IntMatrix::from_rows(&[[0, 1], [-1, -1]]), ElementOrder::Finite(3)),
            (IntMatrix::from_rows(&[[-1, 0], [0, -1]]), ElementOrder::Finite(2)),
            (IntMatrix::identity(2), ElementOrder::Finite(1)),
            (IntMatrix::from_rows(&[[1, 1], [0, 1]]), ElementOrder::Infinite),
            (IntMatrix::from_rows(&[[2, 1], [1, 1]]), ElementOrder::Infinite),
        ];
        for (a, expected) in cases {
            assert_eq!(sl2_element_order(&a).unwrap(), expected, "{}", a);
        }
        assert!(matches!(
            sl2_element_order(&IntMatrix::from_rows(&[[1, 0], [0, 2]])),
            Err(MatrixError::NotUnimodular(_))
        ));
        assert!(sl2_element_order(&IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(&[[0, 2, 1], [3, 0, 0], [1, 1, 1]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-3));
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
    }
}
