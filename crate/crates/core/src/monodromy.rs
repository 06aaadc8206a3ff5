//! Monodromy tuples: classification, exponent vectors and the reduction of a
//! finite cyclic tuple to a single nontrivial matrix.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactmat::{check_sl2, sl2_element_order, ElementOrder, IntMatrix, MatrixError};
use crate::symplectic::{all_fundamental_se, burkhardt_generators, fundamental_se_power};

/// Largest finite subgroup of SL(2, Z) has order 6; anything past this bound
/// is infinite.
const FINITE_CLOSURE_LIMIT: usize = 12;

/// Upper bound on `m^{2g}` for orbit enumeration.
pub const ORBIT_SPACE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonodromyError {
    #[error("monodromy tuple has odd length {0}")]
    OddLength(usize),
    #[error("monodromy matrix {index}: {source}")]
    NotSl2 { index: usize, source: MatrixError },
    #[error("finite monodromy group of order {0} is not cyclic")]
    NotCyclic(usize),
    #[error("unsupported modulus {0}; expected one of 2, 3, 4, 6")]
    UnsupportedModulus(u64),
    #[error("exponent vector has length {got}, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("orbit space {m}^{dim} exceeds the enumeration guard")]
    TooLarge { m: u64, dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonodromyClass {
    Trivial,
    /// Every matrix is `generator^exponent`; `generator` has the given order.
    FiniteCyclic {
        generator: IntMatrix,
        order: u32,
        exponents: Vec<u64>,
    },
    Infinite,
}

impl MonodromyClass {
    pub fn is_trivial(&self) -> bool {
        matches!(self, MonodromyClass::Trivial)
    }
}

/// Classifies a tuple `(A_1, B_1, ..., A_g, B_g)` of SL(2, Z) matrices.
///
/// For a finite cyclic closure the generator is the one of the two (or one)
/// generators whose upper-right entry is positive, so `[[0,1],[-1,0]]` and
/// `[[1,1],[-1,0]]` are picked over their inverses. That sign is preserved by
/// SL(2, Z) conjugation, so conjugating the tuple leaves the exponents fixed.
pub fn classify_monodromy(tuple: &[IntMatrix]) -> Result<MonodromyClass, MonodromyError> {
    if tuple.len() % 2 != 0 {
        return Err(MonodromyError::OddLength(tuple.len()));
    }
    for (index, a) in tuple.iter().enumerate() {
        check_sl2(a).map_err(|source| MonodromyError::NotSl2 { index, source })?;
    }
    if tuple.iter().all(IntMatrix::is_identity) {
        return Ok(MonodromyClass::Trivial);
    }
    for a in tuple {
        if sl2_element_order(a).expect("checked above") == ElementOrder::Infinite {
            return Ok(MonodromyClass::Infinite);
        }
    }

    let gens: Vec<&IntMatrix> = tuple.iter().filter(|a| !a.is_identity()).collect();
    let identity = IntMatrix::identity(2);
    let mut closure: HashSet<IntMatrix> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for a in &gens {
            let y = &x * *a;
            if closure.insert(y.clone()) {
                if closure.len() > FINITE_CLOSURE_LIMIT {
                    return Ok(MonodromyClass::Infinite);
                }
                queue.push_back(y);
            }
        }
    }

    let size = closure.len();
    let order_of = |a: &IntMatrix| match sl2_element_order(a).expect("closure stays in SL(2,Z)") {
        ElementOrder::Finite(n) => n as usize,
        ElementOrder::Infinite => 0,
    };
    let mut candidates: Vec<&IntMatrix> = closure.iter().filter(|a| order_of(a) == size).collect();
    if candidates.is_empty() {
        return Err(MonodromyError::NotCyclic(size));
    }
    candidates.sort();
    let generator = candidates
        .iter()
        .find(|q| q.get(0, 1).is_positive())
        .unwrap_or(&candidates[0])
        .to_owned()
        .clone();

    let powers: Vec<IntMatrix> = (0..size as u64).map(|e| generator.pow(e)).collect();
    let exponents = tuple
        .iter()
        .map(|a| powers.iter().position(|p| p == a).expect("closure is cyclic") as u64)
        .collect();
    Ok(MonodromyClass::FiniteCyclic {
        generator,
        order: size as u32,
        exponents,
    })
}

/// Result of [`reduce_to_canonical`]: `transform · exponents ≡ (content, 0, ..., 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalExponent {
    /// gcd of the entries and `m`, in `[0, m)`; zero only for the zero vector.
    pub content: u64,
    /// Element of Sp(2g, Z/m), entries reduced into `[0, m)`.
    pub transform: IntMatrix,
}

fn check_modulus(m: u64) -> Result<(), MonodromyError> {
    match m {
        2 | 3 | 4 | 6 => Ok(()),
        _ => Err(MonodromyError::UnsupportedModulus(m)),
    }
}

/// Tracks a vector together with the accumulated product of the symplectic
/// transvections applied to it.
struct Reducer {
    g: usize,
    vec: Vec<BigInt>,
    transform: IntMatrix,
}

impl Reducer {
    /// Applies `SE_ij^q` (1-based indices).
    fn apply(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let step = fundamental_se_power(i, j, self.g, q).expect("indices are in range");
        self.vec = step.mul_vec(&self.vec);
        self.transform = &step * &self.transform;
    }

    /// Euclid on coordinates `(a, b)` (0-based), moving the gcd into `a` and
    /// zeroing `b`. `add_to_a` / `add_to_b` are the SE index pairs that add
    /// `b` to `a` and `a` to `b` respectively. Both coordinates must be
    /// non-negative.
    fn euclid(&mut self, a: usize, b: usize, add_to_a: (usize, usize), add_to_b: (usize, usize)) {
        while !self.vec[b].is_zero() {
            let q = self.vec[a].div_floor(&self.vec[b]);
            self.apply(add_to_a.0, add_to_a.1, &-q);
            if self.vec[a].is_zero() {
                self.apply(add_to_a.0, add_to_a.1, &BigInt::one());
                self.apply(add_to_b.0, add_to_b.1, &-BigInt::one());
                break;
            }
            let q = self.vec[b].div_floor(&self.vec[a]);
            self.apply(add_to_b.0, add_to_b.1, &-q);
        }
    }
}

/// Moves an exponent vector over `Z/m` to `(c, 0, ..., 0)` by symplectic
/// transvections, with `c = gcd(entries, m)`.
pub fn reduce_to_canonical(exponents: &[u64], m: u64, g: usize) -> Result<CanonicalExponent, MonodromyError> {
    check_modulus(m)?;
    if g == 0 || exponents.len() != 2 * g {
        return Err(MonodromyError::Length {
            expected: 2 * g,
            got: exponents.len(),
        });
    }
    let modulus = BigInt::from(m);
    let lifted: Vec<BigInt> = exponents.iter().map(|&e| BigInt::from(e % m)).collect();
    let mut r = Reducer {
        g,
        vec: lifted.clone(),
        transform: IntMatrix::identity(2 * g),
    };

    // each (x_k, y_k) -> (gcd, 0)
    for k in 0..g {
        let (x, y) = (2 * k + 1, 2 * k + 2);
        r.euclid(x - 1, y - 1, (x, y), (y, x));
    }
    // fold x_k into x_1, keeping every y at zero
    for k in 1..g {
        let xk = 2 * k + 1;
        r.euclid(0, xk - 1, (1, xk), (xk, 1));
    }
    // (d, 0) ≡ (d, m): one more Euclid in the first block reaches gcd(d, m)
    r.vec[1] += &modulus;
    r.euclid(0, 1, (1, 2), (2, 1));

    let transform = r.transform.reduce_mod(&modulus);
    let image: Vec<BigInt> = transform.mul_vec(&lifted).iter().map(|x| x.mod_floor(&modulus)).collect();
    let content = image[0].to_u64().expect("reduced below m");
    assert!(image[1..].iter().all(Zero::is_zero), "symplectic reduction left a nonzero tail");
    assert_eq!(
        BigInt::from(content),
        lifted.iter().fold(modulus.clone(), |acc, x| acc.gcd(x)).mod_floor(&modulus),
        "canonical exponent differs from the content"
    );
    Ok(CanonicalExponent { content, transform })
}

/// Partition of `(Z/m)^{2g}` into orbits under all `SE_ij` and Burkhardt
/// generators reduced mod `m`. Each orbit is sorted and orbits are ordered by
/// their minimal element.
pub fn orbit_enumerate(m: u64, g: usize) -> Result<Vec<Vec<Vec<u64>>>, MonodromyError> {
    let dim = 2 * g;
    if m < 2 || g == 0 {
        return Err(MonodromyError::UnsupportedModulus(m));
    }
    let size = (m as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if size > ORBIT_SPACE_LIMIT as u128 {
        return Err(MonodromyError::TooLarge { m, dim });
    }
    let size = size as usize;

    let modulus = BigInt::from(m);
    let mut gens = all_fundamental_se(g).expect("g >= 1");
    gens.extend(burkhardt_generators(g).expect("g >= 1"));
    let gens: Vec<Vec<u64>> = gens
        .iter()
        .map(|a| a.reduce_mod(&modulus).entries().iter().map(|x| x.to_u64().unwrap()).collect())
        .collect();

    // big-endian base-m encoding so integer order is lexicographic order
    let decode = |mut code: usize| {
        let mut v = vec![0u64; dim];
        for slot in v.iter_mut().rev() {
            *slot = (code % m as usize) as u64;
            code /= m as usize;
        }
        v
    };
    let encode = |v: &[u64]| v.iter().fold(0usize, |acc, &x| acc * m as usize + x as usize);

    let mut label = vec![usize::MAX; size];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..size {
        if label[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        label[start] = id;
        let mut members = vec![start];
        let mut cursor = 0;
        while cursor < members.len() {
            let v = decode(members[cursor]);
            cursor += 1;
            for a in &gens {
                let w: Vec<u64> = (0..dim)
                    .map(|i| (0..dim).map(|j| a[i * dim + j] * v[j]).sum::<u64>() % m)
                    .collect();
                let code = encode(&w);
                if label[code] == usize::MAX {
                    label[code] = id;
                    members.push(code);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    // orbits were discovered in order of their smallest code
    Ok(orbits
        .into_iter()
        .map(|o| o.into_iter().map(decode).collect())
        .collect())
}

/// `(Q^c, I, ..., I)` for a tuple of length `2g`.
pub fn canonical_tuple(generator: &IntMatrix, content: u64, g: usize) -> Vec<IntMatrix> {
    let mut out = vec![IntMatrix::identity(2); 2 * g];
    if g > 0 {
        out[0] = generator.pow(content);
    }
    out
}
