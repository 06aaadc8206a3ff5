//! Seifert invariants of a torus-fibred 4-manifold over an orientable
//! 2-orbifold.
//!
//! Conventions used throughout:
//!
//! * the fundamental group has generators `x_1..x_r, u_1, v_1, ..., u_g, v_g,
//!   l, h` with relators `x_i^{m_i} l^{a_i} h^{b_i}` and
//!   `x_1⋯x_r [u_1,v_1]⋯[u_g,v_g] = l^a h^b`;
//! * the rational Euler number is `(a + Σ a_i/m_i, b + Σ b_i/m_i)`;
//! * a framing change `P ∈ SL(2,Z)` acts on every pair `(a_i, b_i)` and on
//!   `(a, b)` as a column vector, and conjugates monodromy `A ↦ P A P⁻¹`, so
//!   the Euler number transforms as `e ↦ e·Pᵀ`;
//! * a coboundary move `(α, β)` at cone `i` replaces `x_i` by
//!   `x_i l^{-α} h^{-β}`: `(a_i, b_i) += m_i(α, β)` and `(a, b) -= (α, β)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactmat::{check_sl2, sl2_inverse, IntMatrix, MatrixError};
use crate::monodromy::{canonical_tuple, classify_monodromy, reduce_to_canonical, MonodromyClass, MonodromyError};
use crate::presentation::{GroupPresentation, SurfaceTail, Word};

/// Largest `lcm(m_i)` for which the e = (0,0) canonical form enumerates
/// SL(2, Z/L).
pub const FRAMING_LCM_LIMIT: u64 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConePoint {
    pub m: u64,
    pub a: BigInt,
    pub b: BigInt,
}

impl ConePoint {
    pub fn new(m: u64, a: i64, b: i64) -> Self {
        ConePoint {
            m,
            a: BigInt::from(a),
            b: BigInt::from(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    pub genus: usize,
    pub cone_points: Vec<ConePoint>,
    pub obstruction: (BigInt, BigInt),
    /// `(A_1, B_1, ..., A_g, B_g)`
    pub monodromy: Vec<IntMatrix>,
}

impl SeifertData {
    pub fn with_trivial_monodromy(genus: usize, cone_points: Vec<ConePoint>, obstruction: (i64, i64)) -> Self {
        SeifertData {
            genus,
            cone_points,
            obstruction: (BigInt::from(obstruction.0), BigInt::from(obstruction.1)),
            monodromy: vec![IntMatrix::identity(2); 2 * genus],
        }
    }

    pub fn has_trivial_monodromy(&self) -> bool {
        self.monodromy.iter().all(IntMatrix::is_identity)
    }

    pub fn cone_orders(&self) -> Vec<u64> {
        self.cone_points.iter().map(|c| c.m).collect()
    }

    /// `∏ m_i` (1 with no cone points).
    pub fn order_product(&self) -> BigInt {
        self.cone_points.iter().map(|c| BigInt::from(c.m)).product()
    }

    pub fn order_lcm(&self) -> u64 {
        self.cone_points.iter().fold(1u64, |acc, c| acc.lcm(&c.m))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagnosticCode {
    ConeOrder,
    ConeGcd,
    MonodromyLength,
    MonodromyNotSl2,
    CommutatorRelation,
}

impl DiagnosticCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            DiagnosticCode::ConeOrder => "cone_order",
            DiagnosticCode::ConeGcd => "cone_gcd",
            DiagnosticCode::MonodromyLength => "monodromy_length",
            DiagnosticCode::MonodromyNotSl2 => "monodromy_not_sl2",
            DiagnosticCode::CommutatorRelation => "commutator_relation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code.as_str(), self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("invalid Seifert data: {0}")]
    Invalid(Diagnostic),
    #[error("operation requires trivial monodromy")]
    NontrivialMonodromy,
    #[error("framing matrix: {0}")]
    Framing(MatrixError),
    #[error("{k} is not a unit modulo cone order {m}")]
    NotAUnit { k: BigInt, m: u64 },
    #[error("framing enumeration over SL(2, Z/{0}) exceeds the guard of {FRAMING_LCM_LIMIT}")]
    FramingGuard(u64),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error("malformed transform: {0}")]
    MalformedTransform(String),
    #[error("exponent {0} does not fit in a relator word")]
    ExponentOverflow(BigInt),
}

/// All violated conditions, in check order; empty when the data is valid.
pub fn validate(data: &SeifertData) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for (i, c) in data.cone_points.iter().enumerate() {
        if c.m < 2 {
            out.push(Diagnostic {
                code: DiagnosticCode::ConeOrder,
                message: format!("cone point {} has order {} < 2", i + 1, c.m),
            });
            continue;
        }
        let g = BigInt::from(c.m).gcd(&c.a).gcd(&c.b);
        if !g.is_one() {
            out.push(Diagnostic {
                code: DiagnosticCode::ConeGcd,
                message: format!("cone point {} ({},{},{}): gcd(m,a,b)={}", i + 1, c.m, c.a, c.b, g),
            });
        }
    }
    if data.monodromy.len() != 2 * data.genus {
        out.push(Diagnostic {
            code: DiagnosticCode::MonodromyLength,
            message: format!(
                "genus {} needs {} monodromy matrices, got {}",
                data.genus,
                2 * data.genus,
                data.monodromy.len()
            ),
        });
        return out;
    }
    let mut all_sl2 = true;
    for (i, a) in data.monodromy.iter().enumerate() {
        if let Err(e) = check_sl2(a) {
            all_sl2 = false;
            out.push(Diagnostic {
                code: DiagnosticCode::MonodromyNotSl2,
                message: format!("monodromy matrix {}: {}", i + 1, e),
            });
        }
    }
    if all_sl2 {
        let mut product = IntMatrix::identity(2);
        for pair in data.monodromy.chunks(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let comm = &(&(a * b) * &sl2_inverse(a)) * &sl2_inverse(b);
            product = &product * &comm;
        }
        if !product.is_identity() {
            out.push(Diagnostic {
                code: DiagnosticCode::CommutatorRelation,
                message: format!("product of commutators [A_j,B_j] is {}, not I", product),
            });
        }
    }
    out
}

fn ensure_valid(data: &SeifertData) -> Result<(), SeifertError> {
    match validate(data).into_iter().next() {
        Some(d) => Err(SeifertError::Invalid(d)),
        None => Ok(()),
    }
}

/// `2 − 2g − Σ (1 − 1/m_i)`; the base is hyperbolic iff this is negative.
pub fn orbifold_euler_char(data: &SeifertData) -> BigRational {
    let mut chi = BigRational::from_integer(BigInt::from(2) - BigInt::from(2 * data.genus));
    for c in &data.cone_points {
        chi -= BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(c.m));
    }
    chi
}

pub fn is_hyperbolic_base(data: &SeifertData) -> bool {
    orbifold_euler_char(data).is_negative()
}

/// Rational Euler number; only defined for trivial monodromy.
pub fn euler_number(data: &SeifertData) -> Result<(BigRational, BigRational), SeifertError> {
    if !data.has_trivial_monodromy() {
        return Err(SeifertError::NontrivialMonodromy);
    }
    let mut e0 = BigRational::from_integer(data.obstruction.0.clone());
    let mut e1 = BigRational::from_integer(data.obstruction.1.clone());
    for c in &data.cone_points {
        let m = BigInt::from(c.m);
        e0 += BigRational::new(c.a.clone(), m.clone());
        e1 += BigRational::new(c.b.clone(), m);
    }
    Ok((e0, e1))
}

fn apply_column(p: &IntMatrix, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    (
        p.get(0, 0) * x + p.get(0, 1) * y,
        p.get(1, 0) * x + p.get(1, 1) * y,
    )
}

/// Change of fibre framing by `P ∈ SL(2, Z)`.
pub fn reframe(data: &SeifertData, p: &IntMatrix) -> Result<SeifertData, SeifertError> {
    check_sl2(p).map_err(SeifertError::Framing)?;
    let p_inv = sl2_inverse(p);
    Ok(SeifertData {
        genus: data.genus,
        cone_points: data
            .cone_points
            .iter()
            .map(|c| {
                let (a, b) = apply_column(p, &c.a, &c.b);
                ConePoint { m: c.m, a, b }
            })
            .collect(),
        obstruction: apply_column(p, &data.obstruction.0, &data.obstruction.1),
        monodromy: data.monodromy.iter().map(|a| &(p * a) * &p_inv).collect(),
    })
}

/// Coboundary move at cone `index` (0-based).
pub fn coboundary_move(
    data: &SeifertData,
    index: usize,
    alpha: &BigInt,
    beta: &BigInt,
) -> Result<SeifertData, SeifertError> {
    let mut out = data.clone();
    let c = out
        .cone_points
        .get_mut(index)
        .ok_or_else(|| SeifertError::MalformedTransform(format!("no cone point {}", index)))?;
    let m = BigInt::from(c.m);
    c.a += alpha * &m;
    c.b += beta * &m;
    out.obstruction.0 -= alpha;
    out.obstruction.1 -= beta;
    Ok(out)
}

/// Multiplies every invariant pair by `k`, which must be a unit modulo each
/// cone order.
pub fn scale(data: &SeifertData, k: &BigInt) -> Result<SeifertData, SeifertError> {
    if !data.has_trivial_monodromy() {
        return Err(SeifertError::NontrivialMonodromy);
    }
    for c in &data.cone_points {
        if !k.gcd(&BigInt::from(c.m)).is_one() {
            return Err(SeifertError::NotAUnit { k: k.clone(), m: c.m });
        }
    }
    Ok(SeifertData {
        genus: data.genus,
        cone_points: data
            .cone_points
            .iter()
            .map(|c| ConePoint {
                m: c.m,
                a: &c.a * k,
                b: &c.b * k,
            })
            .collect(),
        obstruction: (&data.obstruction.0 * k, &data.obstruction.1 * k),
        monodromy: data.monodromy.clone(),
    })
}

/// The moves realising a normal form, replayable by [`apply_normalization`]:
/// reframe by `framing`, then apply `shifts[i]` as a coboundary move at cone
/// `i`, then reorder so that position `j` holds old cone `order[j]`, then (for
/// finite cyclic monodromy) act on the exponent vector by `base_change`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub framing: IntMatrix,
    pub shifts: Vec<(BigInt, BigInt)>,
    pub order: Vec<usize>,
    pub base_change: Option<IntMatrix>,
}

pub fn apply_normalization(data: &SeifertData, t: &Normalization) -> Result<SeifertData, SeifertError> {
    let r = data.cone_points.len();
    if t.shifts.len() != r || t.order.len() != r {
        return Err(SeifertError::MalformedTransform(format!(
            "expected {} shifts and order entries, got {} and {}",
            r,
            t.shifts.len(),
            t.order.len()
        )));
    }
    let mut seen = vec![false; r];
    for &i in &t.order {
        if i >= r || std::mem::replace(&mut seen[i], true) {
            return Err(SeifertError::MalformedTransform("order is not a permutation".into()));
        }
    }
    let mut out = reframe(data, &t.framing)?;
    for (i, (alpha, beta)) in t.shifts.iter().enumerate() {
        out = coboundary_move(&out, i, alpha, beta)?;
    }
    out.cone_points = t.order.iter().map(|&i| out.cone_points[i].clone()).collect();
    if let Some(base_change) = &t.base_change {
        match classify_monodromy(&out.monodromy)? {
            MonodromyClass::FiniteCyclic { generator, order, exponents } => {
                let m = BigInt::from(order);
                if base_change.rows() != exponents.len() || base_change.cols() != exponents.len() {
                    return Err(SeifertError::MalformedTransform("base change has the wrong size".into()));
                }
                let v: Vec<BigInt> = exponents.iter().map(|&e| BigInt::from(e)).collect();
                out.monodromy = base_change
                    .mul_vec(&v)
                    .iter()
                    .map(|e| generator.pow(e.mod_floor(&m).to_u64().expect("reduced")))
                    .collect();
            }
            _ => {
                return Err(SeifertError::MalformedTransform(
                    "base change given for non-cyclic monodromy".into(),
                ))
            }
        }
    }
    Ok(out)
}

/// Cone residues `(m, a mod m, b mod m)`.
fn cone_residues(data: &SeifertData) -> Vec<(u64, u64, u64)> {
    data.cone_points
        .iter()
        .map(|c| {
            let m = BigInt::from(c.m);
            (
                c.m,
                c.a.mod_floor(&m).to_u64().unwrap(),
                c.b.mod_floor(&m).to_u64().unwrap(),
            )
        })
        .collect()
}

/// Sorted reduced cone list after framing by `p = (p11, p12, p21, p22)`
/// given modulo a common multiple of all cone orders.
fn framed_key(cones: &[(u64, u64, u64)], p: [u64; 4]) -> Vec<(u64, u64, u64)> {
    let mut key: Vec<(u64, u64, u64)> = cones
        .iter()
        .map(|&(m, a, b)| {
            let a2 = (p[0] % m * a + p[1] % m * b) % m;
            let b2 = (p[2] % m * a + p[3] % m * b) % m;
            (m, a2, b2)
        })
        .collect();
    key.sort_unstable();
    key
}

fn residues_mod(p: &IntMatrix, l: u64) -> [u64; 4] {
    let l = BigInt::from(l);
    let r = |i, j| p.get(i, j).mod_floor(&l).to_u64().unwrap();
    [r(0, 0), r(0, 1), r(1, 0), r(1, 1)]
}

/// Integral lift of an element of SL(2, Z/L).
pub fn lift_sl2(p: [u64; 4], l: u64) -> IntMatrix {
    if l == 1 {
        return IntMatrix::identity(2);
    }
    let lb = BigInt::from(l);
    let (a, b, c, d) = (
        BigInt::from(p[0] % l),
        BigInt::from(p[1] % l),
        BigInt::from(p[2] % l),
        BigInt::from(p[3] % l),
    );
    let c1 = if c.is_zero() { lb.clone() } else { c.clone() };
    let mut a1 = a.clone();
    while !a1.gcd(&c1).is_one() {
        a1 += &lb;
    }
    // a1·x + c1·y = 1
    let eg = a1.extended_gcd(&c1);
    let (x, y) = if eg.gcd.is_negative() { (-eg.x, -eg.y) } else { (eg.x, eg.y) };
    let (d0, b0) = (x.clone(), -y.clone());
    let s = (&x * (&b - &b0) + &y * (&d - &d0)).mod_floor(&lb);
    let lifted = IntMatrix::from_entries(2, 2, vec![a1.clone(), &b0 + &s * &a1, c1.clone(), &d0 + &s * &c1]).unwrap();
    debug_assert!(check_sl2(&lifted).is_ok());
    debug_assert_eq!(residues_mod(&lifted, l), [p[0] % l, p[1] % l, p[2] % l, p[3] % l]);
    lifted
}

/// Every element of SL(2, Z/L), in lexicographic order of `(a, b, c, d)`.
pub fn sl2_mod_elements(l: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                if a.gcd(&c).gcd(&l) != 1 && l > 1 {
                    continue;
                }
                for d in 0..l {
                    if (a * d + l * l - b * c % l) % l == 1 % l {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Framing for the canonical form of trivial-monodromy data.
fn canonical_framing(data: &SeifertData) -> Result<IntMatrix, SeifertError> {
    let cones = cone_residues(data);
    let l = data.order_lcm();
    let (e0, e1) = euler_number(data)?;

    if e0.is_zero() && e1.is_zero() {
        if l > FRAMING_LCM_LIMIT {
            return Err(SeifertError::FramingGuard(l));
        }
        let mut best: Option<([u64; 4], Vec<(u64, u64, u64)>)> = None;
        for p in sl2_mod_elements(l) {
            let key = framed_key(&cones, p);
            if best.as_ref().is_none_or(|(_, k)| key < *k) {
                best = Some((p, key));
            }
        }
        let (p, _) = best.expect("SL(2, Z/L) is nonempty");
        return Ok(lift_sl2(p, l));
    }

    // e·P₀ᵀ = (0, c) with c > 0
    let denom = e0.denom().lcm(e1.denom());
    let p1 = e0.numer() * (&denom / e0.denom());
    let p2 = e1.numer() * (&denom / e1.denom());
    let eg = p1.extended_gcd(&p2);
    let (g, s, t) = if eg.gcd.is_negative() {
        (-eg.gcd, -eg.x, -eg.y)
    } else {
        (eg.gcd, eg.x, eg.y)
    };
    let p0 = IntMatrix::from_entries(2, 2, vec![&p2 / &g, -(&p1 / &g), s, t]).unwrap();

    // stabiliser of (0, c): [[1, 0], [t, 1]], periodic in t modulo L
    let mut best: Option<(IntMatrix, Vec<(u64, u64, u64)>)> = None;
    for shear in 0..l {
        let lower = IntMatrix::from_rows(&[[1, 0], [shear as i64, 1]]);
        let p = &lower * &p0;
        let key = framed_key(&cones, residues_mod(&p, l));
        if best.as_ref().is_none_or(|(_, k)| key < *k) {
            best = Some((p, key));
        }
    }
    Ok(best.expect("at least one shear").0)
}

/// Canonical form together with the moves that produce it.
pub fn normalize_with_transform(data: &SeifertData) -> Result<(SeifertData, Normalization), SeifertError> {
    ensure_valid(data)?;
    let class = classify_monodromy(&data.monodromy)?;
    let framing = if class.is_trivial() {
        canonical_framing(data)?
    } else {
        IntMatrix::identity(2)
    };
    let framed = reframe(data, &framing)?;
    let shifts: Vec<(BigInt, BigInt)> = framed
        .cone_points
        .iter()
        .map(|c| {
            let m = BigInt::from(c.m);
            (-c.a.div_floor(&m), -c.b.div_floor(&m))
        })
        .collect();
    let mut reduced: Vec<(ConePoint, usize)> = framed
        .cone_points
        .iter()
        .zip(&shifts)
        .enumerate()
        .map(|(i, (c, (alpha, beta)))| {
            let m = BigInt::from(c.m);
            (
                ConePoint {
                    m: c.m,
                    a: &c.a + alpha * &m,
                    b: &c.b + beta * &m,
                },
                i,
            )
        })
        .collect();
    reduced.sort();
    let order = reduced.into_iter().map(|(_, i)| i).collect();

    let base_change = match &class {
        MonodromyClass::FiniteCyclic { order, exponents, .. } => {
            Some(reduce_to_canonical(exponents, *order as u64, data.genus)?.transform)
        }
        _ => None,
    };
    let transform = Normalization {
        framing,
        shifts,
        order,
        base_change,
    };
    let canonical = apply_normalization(data, &transform)?;
    if let MonodromyClass::FiniteCyclic { generator, order, exponents } = &class {
        let content = reduce_to_canonical(exponents, *order as u64, data.genus)?.content;
        debug_assert_eq!(canonical.monodromy, canonical_tuple(generator, content, data.genus));
    }
    Ok((canonical, transform))
}

/// Canonical representative under framing changes, coboundary moves and
/// reordering of cone points. With nontrivial monodromy only the monodromy
/// tuple is brought to canonical form and the cone data is coboundary-reduced
/// and sorted.
pub fn normalize(data: &SeifertData) -> Result<SeifertData, SeifertError> {
    normalize_with_transform(data).map(|(d, _)| d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    H2xE2,
    SL2xE,
    NonGeometric,
    NotHyperbolicBase,
}

impl Geometry {
    pub fn tag(&self) -> &'static str {
        match self {
            Geometry::H2xE2 => "H2xE2",
            Geometry::SL2xE => "SL2xE",
            Geometry::NonGeometric => "NonGeometric",
            Geometry::NotHyperbolicBase => "NotHyperbolicBase",
        }
    }
}

pub fn classify_geometry(data: &SeifertData) -> Result<Geometry, SeifertError> {
    ensure_valid(data)?;
    if !is_hyperbolic_base(data) {
        return Ok(Geometry::NotHyperbolicBase);
    }
    Ok(match classify_monodromy(&data.monodromy)? {
        MonodromyClass::Trivial => {
            let (e0, e1) = euler_number(data)?;
            if e0.is_zero() && e1.is_zero() {
                Geometry::H2xE2
            } else {
                Geometry::SL2xE
            }
        }
        MonodromyClass::FiniteCyclic { .. } => Geometry::H2xE2,
        MonodromyClass::Infinite => Geometry::NonGeometric,
    })
}

fn small(x: &BigInt) -> Result<i64, SeifertError> {
    x.to_i64().ok_or_else(|| SeifertError::ExponentOverflow(x.clone()))
}

/// Presentation of the fundamental group on `x_1..x_r, u_1, v_1, ..., l, h`.
pub fn presentation(data: &SeifertData) -> Result<GroupPresentation, SeifertError> {
    ensure_valid(data)?;
    let r = data.cone_points.len();
    let g = data.genus;
    let (l, h) = (r + 2 * g, r + 2 * g + 1);
    let u = |j: usize| r + 2 * j;
    let v = |j: usize| r + 2 * j + 1;

    let mut generators: Vec<String> = (1..=r).map(|i| format!("x{}", i)).collect();
    for j in 1..=g {
        generators.push(format!("u{}", j));
        generators.push(format!("v{}", j));
    }
    generators.push("l".into());
    generators.push("h".into());

    let mut relators = Vec::new();
    for (i, c) in data.cone_points.iter().enumerate() {
        let m = i64::try_from(c.m).map_err(|_| SeifertError::ExponentOverflow(BigInt::from(c.m)))?;
        relators.push(Word::from_syllables(&[(i, m), (l, small(&c.a)?), (h, small(&c.b)?)]));
    }

    let long_index = relators.len();
    let mut long = Word::new();
    for i in 0..r {
        long.push(i, 1);
    }
    for j in 0..g {
        long.extend(&Word::commutator(u(j), v(j)));
    }
    long.push(l, -small(&data.obstruction.0)?);
    long.push(h, -small(&data.obstruction.1)?);
    relators.push(long);

    for i in 0..r {
        relators.push(Word::commutator(i, l));
        relators.push(Word::commutator(i, h));
    }
    relators.push(Word::commutator(l, h));

    // y (l, h) y⁻¹ = (l, h)·A, i.e. y l y⁻¹ = l^α h^γ and y h y⁻¹ = l^β h^δ
    for j in 0..g {
        for (gen, a) in [(u(j), &data.monodromy[2 * j]), (v(j), &data.monodromy[2 * j + 1])] {
            let (alpha, beta) = (small(a.get(0, 0))?, small(a.get(0, 1))?);
            let (gamma, delta) = (small(a.get(1, 0))?, small(a.get(1, 1))?);
            relators.push(Word::from_syllables(&[(gen, 1), (l, 1), (gen, -1), (l, -alpha), (h, -gamma)]));
            relators.push(Word::from_syllables(&[(gen, 1), (h, 1), (gen, -1), (l, -beta), (h, -delta)]));
        }
    }

    Ok(GroupPresentation {
        generators,
        relators,
        surface_tail: (g > 0).then(|| SurfaceTail {
            relator: long_index,
            pairs: (0..g).map(|j| (u(j), v(j))).collect(),
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn flexible_m() -> SeifertData {
        SeifertData::with_trivial_monodromy(2, vec![ConePoint::new(5, 1, 0), ConePoint::new(5, 4, 0)], (-1, 0))
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&flexible_m()).is_empty());

        let bad = SeifertData::with_trivial_monodromy(1, vec![ConePoint::new(4, 2, 2)], (0, 0));
        let diags = validate(&bad);
        assert_eq!(diags[0].code, DiagnosticCode::ConeGcd);
        assert!(diags[0].message.contains("gcd(m,a,b)=2"));

        let mut twisted = SeifertData::with_trivial_monodromy(1, vec![], (0, 0));
        twisted.monodromy = vec![IntMatrix::from_rows(&[[1, 1], [0, 1]]), IntMatrix::from_rows(&[[1, 0], [1, 1]])];
        assert_eq!(validate(&twisted)[0].code, DiagnosticCode::CommutatorRelation);

        let mut short = flexible_m();
        short.monodromy.pop();
        assert_eq!(validate(&short)[0].code, DiagnosticCode::MonodromyLength);

        let mut not_sl2 = SeifertData::with_trivial_monodromy(1, vec![], (0, 0));
        not_sl2.monodromy[0] = IntMatrix::from_rows(&[[2, 0], [0, 1]]);
        assert_eq!(validate(&not_sl2)[0].code, DiagnosticCode::MonodromyNotSl2);

        let order_one = SeifertData::with_trivial_monodromy(2, vec![ConePoint::new(1, 0, 0)], (0, 0));
        assert_eq!(validate(&order_one)[0].code, DiagnosticCode::ConeOrder);
    }

    #[test]
    fn orbifold_characteristic() {
        let surface = SeifertData::with_trivial_monodromy(2, vec![], (0, 0));
        assert_eq!(orbifold_euler_char(&surface), q(-2, 1));
        let tri = SeifertData::with_trivial_monodromy(
            0,
            vec![ConePoint::new(2, 1, 0), ConePoint::new(3, 1, 0), ConePoint::new(7, 1, 0)],
            (0, 0),
        );
        assert_eq!(orbifold_euler_char(&tri), q(-1, 42));
        let pillow = SeifertData::with_trivial_monodromy(0, vec![ConePoint::new(2, 1, 0); 4], (0, 0));
        assert!(orbifold_euler_char(&pillow).is_zero());
        assert!(!is_hyperbolic_base(&pillow));
        assert_eq!(orbifold_euler_char(&flexible_m()), q(-18, 5));
    }

    #[test]
    fn euler_number_examples() {
        let plain = SeifertData::with_trivial_monodromy(2, vec![], (3, 5));
        assert_eq!(euler_number(&plain).unwrap(), (q(3, 1), q(5, 1)));
        assert_eq!(euler_number(&flexible_m()).unwrap(), (q(0, 1), q(0, 1)));
        let mut twisted = flexible_m();
        twisted.monodromy[0] = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        assert_eq!(euler_number(&twisted), Err(SeifertError::NontrivialMonodromy));
    }

    #[test]
    fn reframe_examples() {
        let d = flexible_m();
        assert_eq!(reframe(&d, &IntMatrix::identity(2)).unwrap(), d);
        let p = IntMatrix::from_rows(&[[1, 0], [1, 1]]);
        let one = SeifertData::with_trivial_monodromy(1, vec![ConePoint::new(5, 1, 0)], (0, 0));
        assert_eq!(reframe(&one, &p).unwrap().cone_points[0], ConePoint::new(5, 1, 1));

        let plain = SeifertData::with_trivial_monodromy(2, vec![], (3, 5));
        let p = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        // e·Pᵀ = (3·2 + 5·1, 3·1 + 5·1)
        assert_eq!(euler_number(&reframe(&plain, &p).unwrap()).unwrap(), (q(11, 1), q(8, 1)));
        assert!(matches!(
            reframe(&plain, &IntMatrix::from_rows(&[[2, 0], [0, 1]])),
            Err(SeifertError::Framing(_))
        ));
    }

    #[test]
    fn scale_examples() {
        let d = flexible_m();
        assert_eq!(scale(&d, &BigInt::one()).unwrap(), d);
        let s = scale(&d, &BigInt::from(2)).unwrap();
        assert_eq!(s.cone_points, vec![ConePoint::new(5, 2, 0), ConePoint::new(5, 8, 0)]);
        assert_eq!(s.obstruction, (BigInt::from(-2), BigInt::zero()));
        assert!(validate(&s).is_empty());
        assert!(matches!(scale(&d, &BigInt::from(5)), Err(SeifertError::NotAUnit { m: 5, .. })));
    }

    #[test]
    fn coboundary_keeps_euler_number() {
        let d = flexible_m();
        let moved = coboundary_move(&d, 1, &BigInt::from(3), &BigInt::from(-2)).unwrap();
        assert_eq!(euler_number(&moved).unwrap(), euler_number(&d).unwrap());
        assert!(coboundary_move(&d, 5, &BigInt::one(), &BigInt::one()).is_err());
    }

    #[test]
    fn normalize_examples() {
        let scaled = SeifertData::with_trivial_monodromy(2, vec![ConePoint::new(5, 2, 0), ConePoint::new(5, 8, 0)], (-2, 0));
        let n = normalize(&scaled).unwrap();
        assert_eq!(normalize(&n).unwrap(), n);
        // (5,8,0) -> (5,3,0) by one coboundary move; e stays (0,0)
        let moved = SeifertData::with_trivial_monodromy(2, vec![ConePoint::new(5, 2, 0), ConePoint::new(5, 3, 0)], (-1, 0));
        assert_eq!(normalize(&moved).unwrap(), n);
        assert_eq!(euler_number(&n).unwrap(), (q(0, 1), q(0, 1)));

        let e22 = SeifertData::with_trivial_monodromy(2, vec![], (2, 2));
        let n = normalize(&e22).unwrap();
        assert_eq!(euler_number(&n).unwrap(), (q(0, 1), q(2, 1)));
        assert_eq!(n.obstruction, (BigInt::zero(), BigInt::from(2)));
    }

    #[test]
    fn normalize_transform_replays() {
        let d = SeifertData::with_trivial_monodromy(
            1,
            vec![ConePoint::new(3, 1, 1), ConePoint::new(2, 7, -4), ConePoint::new(3, -5, 2)],
            (4, -1),
        );
        let (n, t) = normalize_with_transform(&d).unwrap();
        assert_eq!(apply_normalization(&d, &t).unwrap(), n);
        let (e0, e1) = euler_number(&n).unwrap();
        assert!(e0.is_zero() && e1.is_positive());
    }

    #[test]
    fn normalize_guard() {
        let d = SeifertData::with_trivial_monodromy(
            2,
            vec![ConePoint::new(4, 1, 0), ConePoint::new(5, 1, 0), ConePoint::new(3, 1, 0)],
            (0, 0),
        );
        // e = 1/4 + 1/5 + 1/3 ≠ 0: no enumeration needed
        assert!(normalize(&d).is_ok());
        let flat = SeifertData::with_trivial_monodromy(
            2,
            vec![ConePoint::new(4, 1, 0), ConePoint::new(4, 3, 0), ConePoint::new(5, 1, 0), ConePoint::new(5, 4, 0), ConePoint::new(3, 1, 0), ConePoint::new(3, 2, 0)],
            (-3, 0),
        );
        assert_eq!(normalize(&flat), Err(SeifertError::FramingGuard(60)));
    }

    #[test]
    fn normalize_twisted_monodromy() {
        let s = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        let mut d = SeifertData::with_trivial_monodromy(2, vec![ConePoint::new(3, 4, 1)], (0, 0));
        d.monodromy = vec![s.clone(), s.pow(2), s.pow(3), IntMatrix::identity(2)];
        assert!(validate(&d).is_empty());
        let (n, t) = normalize_with_transform(&d).unwrap();
        assert_eq!(n.monodromy, canonical_tuple(&s, 1, 2));
        assert_eq!(n.cone_points, vec![ConePoint::new(3, 1, 1)]);
        assert_eq!(apply_normalization(&d, &t).unwrap(), n);
        assert_eq!(normalize(&n).unwrap(), n);
    }

    #[test]
    fn lift_matches_residues() {
        for l in [1u64, 2, 5, 6, 12] {
            for p in sl2_mod_elements(l) {
                let lifted = lift_sl2(p, l);
                assert!(check_sl2(&lifted).is_ok());
                if l > 1 {
                    assert_eq!(residues_mod(&lifted, l), p);
                }
            }
        }
        assert_eq!(sl2_mod_elements(5).len(), 120);
        assert_eq!(sl2_mod_elements(4).len(), 48);
    }

    #[test]
    fn geometry_examples() {
        assert_eq!(classify_geometry(&flexible_m()).unwrap(), Geometry::H2xE2);
        let rigid = SeifertData::with_trivial_monodromy(2, vec![ConePoint::new(3, 1, 1), ConePoint::new(3, 1, 1)], (0, 0));
        assert_eq!(classify_geometry(&rigid).unwrap(), Geometry::SL2xE);
        let mut wild = SeifertData::with_trivial_monodromy(
            1,
            vec![ConePoint::new(2, 1, 1), ConePoint::new(3, 1, 2), ConePoint::new(7, 1, 1)],
            (0, 0),
        );
        wild.monodromy[0] = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
        assert_eq!(classify_geometry(&wild).unwrap(), Geometry::NonGeometric);
        let torus = SeifertData::with_trivial_monodromy(1, vec![], (0, 0));
        assert_eq!(classify_geometry(&torus).unwrap(), Geometry::NotHyperbolicBase);
        let mut finite = flexible_m();
        finite.monodromy[0] = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        assert_eq!(classify_geometry(&finite).unwrap(), Geometry::H2xE2);
    }

    #[test]
    fn presentation_examples() {
        let torus = SeifertData::with_trivial_monodromy(1, vec![], (0, 0));
        let p = presentation(&torus).unwrap();
        assert_eq!(p.generators, vec!["u1", "v1", "l", "h"]);
        for r in &p.relators {
            for g in 0..4 {
                assert_eq!(r.exponent_sum(g), 0);
            }
        }

        let one = SeifertData::with_trivial_monodromy(2, vec![ConePoint::new(5, 1, 0)], (0, 0));
        let p = presentation(&one).unwrap();
        assert_eq!(p.format_word(&p.relators[0]), "x1^5 l");
        // r + 1 + (2r + 1) + 4g
        assert_eq!(p.relators.len(), 1 + 1 + 3 + 8);

        let mut twisted = SeifertData::with_trivial_monodromy(1, vec![], (0, 0));
        twisted.monodromy[0] = IntMatrix::from_rows(&[[0, 1], [-1, 0]]);
        let p = presentation(&twisted).unwrap();
        let texts: Vec<String> = p.relators.iter().map(|r| p.format_word(r)).collect();
        assert!(texts.contains(&"u1 l u1^-1 h".to_string()), "{:?}", texts);
        assert!(texts.contains(&"u1 h u1^-1 l^-1".to_string()), "{:?}", texts);
    }
}
