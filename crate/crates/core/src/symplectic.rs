//! The standard symplectic form and two generating sets of Sp(2g, Z).
//!
//! Coordinates are ordered `(x_1, y_1, ..., x_g, y_g)` and matrices act on
//! column vectors, so a coordinate map `x_1 ↦ x_1 + y_1` becomes the matrix
//! whose first column is `e_1 + e_2`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactmat::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    Dimension { expected: usize, rows: usize, cols: usize },
    #[error("index ({i}, {j}) invalid for genus {g}")]
    BadIndex { i: usize, j: usize, g: usize },
}

/// Genus, modulus (0 = integral) and the form `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticContext {
    pub genus: usize,
    pub modulus: BigInt,
    pub form: IntMatrix,
}

impl SymplecticContext {
    pub fn new(genus: usize, modulus: BigInt) -> Result<Self, SymplecticError> {
        Ok(SymplecticContext {
            genus,
            form: standard_j(genus)?,
            modulus,
        })
    }

    pub fn is_symplectic(&self, m: &IntMatrix) -> Result<bool, SymplecticError> {
        is_symplectic(m, self.genus, &self.modulus)
    }
}

/// Block-diagonal form with `g` copies of `[[0, 1], [-1, 0]]`.
pub fn standard_j(g: usize) -> Result<IntMatrix, SymplecticError> {
    if g == 0 {
        return Err(SymplecticError::ZeroGenus);
    }
    let mut j = IntMatrix::zeros(2 * g, 2 * g);
    for k in 0..g {
        j.set(2 * k, 2 * k + 1, BigInt::from(1));
        j.set(2 * k + 1, 2 * k, BigInt::from(-1));
    }
    Ok(j)
}

/// `MᵀJM ≡ J (mod m)`; exact when `m = 0`.
pub fn is_symplectic(m: &IntMatrix, g: usize, modulus: &BigInt) -> Result<bool, SymplecticError> {
    let j = standard_j(g)?;
    if m.rows() != 2 * g || m.cols() != 2 * g {
        return Err(SymplecticError::Dimension {
            expected: 2 * g,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let lhs = &(&m.transpose() * &j) * m;
    Ok(lhs.congruent(&j, modulus))
}

/// The involution swapping `2k-1` and `2k` (1-based).
fn sigma(i: usize) -> usize {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

fn elementary(n: usize, i: usize, j: usize) -> IntMatrix {
    let mut e = IntMatrix::zeros(n, n);
    e.set(i - 1, j - 1, BigInt::from(1));
    e
}

fn add(a: &IntMatrix, b: &IntMatrix, k: i64) -> IntMatrix {
    let entries = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x + y * k)
        .collect();
    IntMatrix::from_entries(a.rows(), a.cols(), entries).unwrap()
}

/// The fundamental symplectic matrix `SE_ij` (1-based indices):
/// `I + e_ij` when `i = σ(j)`, otherwise `I + e_ij − (−1)^{i+j} e_{σ(j)σ(i)}`.
pub fn fundamental_se(i: usize, j: usize, g: usize) -> Result<IntMatrix, SymplecticError> {
    if g == 0 {
        return Err(SymplecticError::ZeroGenus);
    }
    let n = 2 * g;
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(SymplecticError::BadIndex { i, j, g });
    }
    let base = add(&IntMatrix::identity(n), &elementary(n, i, j), 1);
    if i == sigma(j) {
        return Ok(base);
    }
    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
    Ok(add(&base, &elementary(n, sigma(j), sigma(i)), -sign))
}

/// All `SE_ij` for `i ≠ j`, in row-major index order.
pub fn all_fundamental_se(g: usize) -> Result<Vec<IntMatrix>, SymplecticError> {
    let n = 2 * g;
    let mut out = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(fundamental_se(i, j, g)?);
            }
        }
    }
    if out.is_empty() {
        return Err(SymplecticError::ZeroGenus);
    }
    Ok(out)
}

/// Matrix whose column `k` is the image of basis vector `k`.
fn from_images(n: usize, images: &[Vec<(usize, i64)>]) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for (col, image) in images.iter().enumerate() {
        for &(row, coeff) in image {
            m.set(row, col, BigInt::from(coeff));
        }
    }
    m
}

fn identity_images(n: usize) -> Vec<Vec<(usize, i64)>> {
    (0..n).map(|k| vec![(k, 1)]).collect()
}

/// Burkhardt's generators.
///
/// For `g = 1` only the first two types make sense:
/// `x ↦ x + y` and `(x, y) ↦ (y, −x)`. For `g ≥ 2` the four types act on
/// the first two blocks, and the block swap is repeated for every adjacent
/// pair of blocks.
pub fn burkhardt_generators(g: usize) -> Result<Vec<IntMatrix>, SymplecticError> {
    if g == 0 {
        return Err(SymplecticError::ZeroGenus);
    }
    let n = 2 * g;
    let (x1, y1) = (0, 1);
    let mut out = Vec::new();

    // x1 -> x1 + y1
    let mut t1 = identity_images(n);
    t1[x1] = vec![(x1, 1), (y1, 1)];
    out.push(from_images(n, &t1));

    // x1 -> y1, y1 -> -x1
    let mut t2 = identity_images(n);
    t2[x1] = vec![(y1, 1)];
    t2[y1] = vec![(x1, -1)];
    out.push(from_images(n, &t2));

    if g >= 2 {
        let (x2, y2) = (2, 3);
        // x1 -> x1 - y2, x2 -> x2 - y1
        let mut t3 = identity_images(n);
        t3[x1] = vec![(x1, 1), (y2, -1)];
        t3[x2] = vec![(x2, 1), (y1, -1)];
        out.push(from_images(n, &t3));

        for k in 0..g - 1 {
            out.push(block_swap(n, k, k + 1));
        }
    }
    Ok(out)
}

fn block_swap(n: usize, a: usize, b: usize) -> IntMatrix {
    let mut images = identity_images(n);
    images[2 * a] = vec![(2 * b, 1)];
    images[2 * a + 1] = vec![(2 * b + 1, 1)];
    images[2 * b] = vec![(2 * a, 1)];
    images[2 * b + 1] = vec![(2 * a + 1, 1)];
    from_images(n, &images)
}

/// Embeds a 2x2 block acting on coordinates `(x_k, y_k)` (0-based block).
pub fn embed_block(g: usize, k: usize, block: &IntMatrix) -> IntMatrix {
    let mut m = IntMatrix::identity(2 * g);
    for i in 0..2 {
        for j in 0..2 {
            m.set(2 * k + i, 2 * k + j, block.get(i, j).clone());
        }
    }
    m
}

/// Power of a unipotent `SE_ij`, `SE_ij^q = I + q·(SE_ij − I)`, valid for any
/// integer `q` since `(SE_ij − I)² = 0`.
pub fn fundamental_se_power(i: usize, j: usize, g: usize, q: &BigInt) -> Result<IntMatrix, SymplecticError> {
    let se = fundamental_se(i, j, g)?;
    let id = IntMatrix::identity(2 * g);
    let entries = se
        .entries()
        .iter()
        .zip(id.entries())
        .map(|(s, e)| {
            let n = s - e;
            if n.is_zero() {
                e.clone()
            } else {
                e + n * q
            }
        })
        .collect();
    Ok(IntMatrix::from_entries(2 * g, 2 * g, entries).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn standard_form_shapes() {
        assert_eq!(standard_j(1).unwrap(), IntMatrix::from_rows(&[[0, 1], [-1, 0]]));
        assert_eq!(
            standard_j(2).unwrap(),
            IntMatrix::from_rows(&[[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        );
        let j3 = standard_j(3).unwrap();
        assert_eq!(&j3 * &j3, IntMatrix::identity(6).neg());
        assert_eq!(standard_j(0), Err(SymplecticError::ZeroGenus));
    }

    #[test]
    fn symplectic_checks() {
        let zero = BigInt::zero();
        assert!(is_symplectic(&standard_j(2).unwrap(), 2, &zero).unwrap());
        assert!(is_symplectic(&IntMatrix::from_rows(&[[1, 1], [0, 1]]), 1, &zero).unwrap());
        assert!(!is_symplectic(&IntMatrix::from_rows(&[[1, 0], [0, 2]]), 1, &zero).unwrap());
        // det 2 ≡ ... not 1 mod 3, but diag(2,2) has det 4 ≡ 1 mod 3
        assert!(is_symplectic(&IntMatrix::from_rows(&[[2, 0], [0, 2]]), 1, &BigInt::from(3)).unwrap());
        assert!(matches!(
            is_symplectic(&IntMatrix::identity(3), 1, &zero),
            Err(SymplecticError::Dimension { .. })
        ));
    }

    #[test]
    fn se_examples() {
        assert_eq!(fundamental_se(1, 2, 1).unwrap(), IntMatrix::from_rows(&[[1, 1], [0, 1]]));
        assert_eq!(
            fundamental_se(1, 3, 2).unwrap(),
            IntMatrix::from_rows(&[[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, -1, 0, 1]])
        );
        assert!(fundamental_se(2, 2, 1).is_err());
        assert!(fundamental_se(1, 5, 2).is_err());
    }

    #[test]
    fn se_powers_are_powers() {
        for q in [-3i64, -1, 0, 2, 5] {
            let p = fundamental_se_power(1, 3, 2, &BigInt::from(q)).unwrap();
            let se = fundamental_se(1, 3, 2).unwrap();
            let expected = if q >= 0 {
                se.pow(q as u64)
            } else {
                let inv = fundamental_se_power(1, 3, 2, &BigInt::from(-1)).unwrap();
                assert!((&inv * &se).is_identity());
                inv.pow((-q) as u64)
            };
            assert_eq!(p, expected);
        }
    }

    #[test]
    fn burkhardt_coordinate_maps() {
        let gens = burkhardt_generators(2).unwrap();
        assert_eq!(gens.len(), 4);
        // first type: x1 -> x1 + y1 means column 1 is e1 + e2
        assert_eq!(
            gens[0],
            IntMatrix::from_rows(&[[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        );
        assert_eq!(
            gens[3],
            IntMatrix::from_rows(&[[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
        );
        let g1 = burkhardt_generators(1).unwrap();
        assert_eq!(g1, vec![
            IntMatrix::from_rows(&[[1, 0], [1, 1]]),
            IntMatrix::from_rows(&[[0, -1], [1, 0]]),
        ]);
        assert_eq!(burkhardt_generators(4).unwrap().len(), 6);
    }

    #[test]
    fn generators_are_symplectic_mod_small_m() {
        for g in 1..=3 {
            let mut gens = all_fundamental_se(g).unwrap();
            gens.extend(burkhardt_generators(g).unwrap());
            for m in [2, 3, 4, 6] {
                let m = BigInt::from(m);
                for a in &gens {
                    assert!(is_symplectic(&a.reduce_mod(&m), g, &m).unwrap());
                }
            }
        }
    }

    #[test]
    fn g1_burkhardt_closure_mod_4_is_sl2() {
        let m = BigInt::from(4);
        let gens: Vec<_> = burkhardt_generators(1).unwrap().iter().map(|a| a.reduce_mod(&m)).collect();
        let mut seen = HashSet::new();
        let mut frontier = vec![IntMatrix::identity(2)];
        seen.insert(IntMatrix::identity(2));
        while let Some(x) = frontier.pop() {
            for a in &gens {
                let y = (&x * a).reduce_mod(&m);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(seen.len(), 48);
    }
}
