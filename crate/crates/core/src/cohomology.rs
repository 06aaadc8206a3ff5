//! Second cohomology of the base orbifold group with trivial coefficients,
//! computed from the trivialised differential of its standard resolution.
//!
//! A class is stored by its raw coefficients on `y*_0, y*_1, ..., y*_r`,
//! one pair per generator (one entry per fibre coordinate). The class of a
//! Seifert manifold is `((a, b), (−a_1, −b_1), ..., (−a_r, −b_r))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmat::{cokernel_invariants_mod, image_membership, IntMatrix};
use crate::seifert::SeifertData;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbSignature {
    pub genus: usize,
    pub orders: Vec<u64>,
}

impl OrbSignature {
    pub fn new(genus: usize, orders: &[u64]) -> Self {
        OrbSignature {
            genus,
            orders: orders.to_vec(),
        }
    }

    pub fn of(data: &SeifertData) -> Self {
        OrbSignature {
            genus: data.genus,
            orders: data.cone_orders(),
        }
    }

    pub fn order_product(&self) -> BigInt {
        self.orders.iter().map(|&m| BigInt::from(m)).product()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomClass {
    pub signature: OrbSignature,
    /// 0 for integral classes.
    pub modulus: BigInt,
    pub raw: Vec<(BigInt, BigInt)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("cohomology with twisted coefficients is not supported")]
    NontrivialMonodromy,
    #[error("classes live over different base orbifolds")]
    SignatureMismatch,
    #[error("class comparison needs a positive modulus")]
    ZeroModulus,
    #[error("a class over {cones} cone points needs {expected} coefficient pairs, got {got}")]
    Length { cones: usize, expected: usize, got: usize },
    #[error("{0} is not a permutation of the cone points")]
    BadPermutation(String),
}

impl CohomClass {
    pub fn new(signature: OrbSignature, modulus: BigInt, raw: Vec<(BigInt, BigInt)>) -> Result<Self, CohomologyError> {
        let expected = signature.orders.len() + 1;
        if raw.len() != expected {
            return Err(CohomologyError::Length {
                cones: signature.orders.len(),
                expected,
                got: raw.len(),
            });
        }
        Ok(CohomClass {
            signature,
            modulus: BigInt::zero(),
            raw,
        }
        .reduce(&modulus))
    }

    pub fn zero(signature: OrbSignature) -> Self {
        let n = signature.orders.len() + 1;
        CohomClass {
            signature,
            modulus: BigInt::zero(),
            raw: vec![(BigInt::zero(), BigInt::zero()); n],
        }
    }

    /// Reduces coefficients into `[0, t)`; `t = 0` leaves them unchanged.
    pub fn reduce(mut self, t: &BigInt) -> Self {
        if !t.is_zero() {
            for (p, q) in &mut self.raw {
                *p = p.mod_floor(t);
                *q = q.mod_floor(t);
            }
        }
        self.modulus = t.clone();
        self
    }

    /// Column action of a framing change `P` on every coefficient pair.
    pub fn reframe(&self, p: &IntMatrix) -> Self {
        let raw = self
            .raw
            .iter()
            .map(|(x, y)| {
                let v = p.mul_vec(&[x.clone(), y.clone()]);
                (v[0].clone(), v[1].clone())
            })
            .collect();
        CohomClass {
            signature: self.signature.clone(),
            modulus: BigInt::zero(),
            raw,
        }
        .reduce(&self.modulus)
    }

    /// Reorders cone coordinates so that position `j` holds old cone
    /// `order[j]`; the `y*_0` coordinate stays first.
    pub fn permute(&self, order: &[usize]) -> Result<Self, CohomologyError> {
        let r = self.signature.orders.len();
        let mut seen = vec![false; r];
        if order.len() != r || order.iter().any(|&i| i >= r || std::mem::replace(&mut seen[i], true)) {
            return Err(CohomologyError::BadPermutation(format!("{:?}", order)));
        }
        let mut raw = vec![self.raw[0].clone()];
        raw.extend(order.iter().map(|&i| self.raw[i + 1].clone()));
        Ok(CohomClass {
            signature: OrbSignature {
                genus: self.signature.genus,
                orders: order.iter().map(|&i| self.signature.orders[i]).collect(),
            },
            modulus: self.modulus.clone(),
            raw,
        })
    }
}

/// The `r × (r+1)` matrix whose row `i` is `e_0 + m_i e_i`.
pub fn boundary_matrix_d2(sig: &OrbSignature) -> IntMatrix {
    let r = sig.orders.len();
    let mut d = IntMatrix::zeros(r, r + 1);
    for (i, &m) in sig.orders.iter().enumerate() {
        d.set(i, 0, BigInt::one());
        d.set(i, i + 1, BigInt::from(m));
    }
    d
}

/// Invariant factors of `H²(Q; Z/t)` for one coefficient copy (`t = 0`
/// for integral coefficients), free factors reported as `0`.
pub fn h2_structure(sig: &OrbSignature, t: &BigInt) -> Vec<BigInt> {
    let r = sig.orders.len();
    cokernel_invariants_mod(&boundary_matrix_d2(sig), r + 1, t).expect("d² has r + 1 columns")
}

pub fn cocycle_of(data: &SeifertData) -> Result<CohomClass, CohomologyError> {
    if !data.has_trivial_monodromy() {
        return Err(CohomologyError::NontrivialMonodromy);
    }
    let mut raw = vec![data.obstruction.clone()];
    raw.extend(data.cone_points.iter().map(|c| (-&c.a, -&c.b)));
    Ok(CohomClass {
        signature: OrbSignature::of(data),
        modulus: BigInt::zero(),
        raw,
    })
}

/// Whether `c1 − c2` lies in the image of d² modulo `t`.
pub fn class_equal(c1: &CohomClass, c2: &CohomClass, t: &BigInt) -> Result<bool, CohomologyError> {
    if c1.signature != c2.signature {
        return Err(CohomologyError::SignatureMismatch);
    }
    if t.is_zero() {
        return Err(CohomologyError::ZeroModulus);
    }
    let d2 = boundary_matrix_d2(&c1.signature);
    for coord in 0..2 {
        let diff: Vec<BigInt> = c1
            .raw
            .iter()
            .zip(&c2.raw)
            .map(|(x, y)| {
                let (x, y) = if coord == 0 { (&x.0, &y.0) } else { (&x.1, &y.1) };
                (x - y).mod_floor(t)
            })
            .collect();
        let member = image_membership(&d2, &diff, t).expect("coefficient vector matches d²");
        if !member.is_member() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E(raw) = raw_0 ∏m_j − Σ_i raw_i ∏_{j≠i} m_j`, computed over the
/// integers from the stored coefficients.
pub fn euler_pairing(c: &CohomClass) -> (BigInt, BigInt) {
    let orders: Vec<BigInt> = c.signature.orders.iter().map(|&m| BigInt::from(m)).collect();
    let total: BigInt = orders.iter().product();
    let mut p = &c.raw[0].0 * &total;
    let mut q = &c.raw[0].1 * &total;
    for (i, (x, y)) in c.raw[1..].iter().enumerate() {
        let others: BigInt = orders
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, m)| m)
            .product();
        p -= x * &others;
        q -= y * &others;
    }
    (p, q)
}

pub fn kappa_act(c: &CohomClass, kappa: &BigInt) -> CohomClass {
    CohomClass {
        signature: c.signature.clone(),
        modulus: BigInt::zero(),
        raw: c.raw.iter().map(|(x, y)| (x * kappa, y * kappa)).collect(),
    }
    .reduce(&c.modulus)
}
