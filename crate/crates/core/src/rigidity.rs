//! Decision procedure for isomorphism of profinite completions of
//! fundamental groups of two Seifert fibred 4-manifolds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::cohomology::{class_equal, cocycle_of, kappa_act};
use crate::seifert::{
    apply_normalization, euler_number, is_hyperbolic_base, normalize, normalize_with_transform, scale, validate,
    Diagnostic, Normalization, SeifertData, SeifertError,
};

pub const REASON_BASE: &str = "base orbifold";
pub const REASON_GEOMETRY: &str = "geometry mismatch";
pub const REASON_RIGID: &str = "SL2~xE profinitely rigid";
pub const REASON_NO_UNIT: &str = "no scaling unit matches";
pub const REASON_MONODROMY: &str = "nontrivial monodromy: open";

/// Scaling unit plus the moves taking `scale(M, k)` to the common
/// canonical form `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub k: BigInt,
    pub transform: Normalization,
    pub target: SeifertData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `k` is the smallest positive matching unit modulo `∏ m_i`.
    /// `matching_units` lists every matching residue modulo `unit_modulus`
    /// (the lcm of the cone orders), which determines the outcome.
    Isomorphic {
        k: BigInt,
        matching_units: Vec<u64>,
        unit_modulus: u64,
        witness: Witness,
    },
    Distinct { reason: &'static str },
    Undecided { reason: &'static str },
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Isomorphic { .. } => "Isomorphic",
            Verdict::Distinct { .. } => "Distinct",
            Verdict::Undecided { .. } => "Undecided",
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Verdict::Isomorphic { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RigidityError {
    #[error("{which} input is invalid: {diagnostic}")]
    Invalid { which: &'static str, diagnostic: Diagnostic },
    #[error("{0} input does not have a hyperbolic base orbifold")]
    NotHyperbolic(&'static str),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error("verdict carries no witness")]
    NoWitness,
    #[error("witness replay does not reproduce the target canonical form")]
    Mismatch,
}

fn check_input(data: &SeifertData, which: &'static str) -> Result<(), RigidityError> {
    if let Some(diagnostic) = validate(data).into_iter().next() {
        return Err(RigidityError::Invalid { which, diagnostic });
    }
    if !is_hyperbolic_base(data) {
        return Err(RigidityError::NotHyperbolic(which));
    }
    Ok(())
}

fn sorted_orders(data: &SeifertData) -> Vec<u64> {
    let mut v = data.cone_orders();
    v.sort_unstable();
    v
}

fn scaled(data: &SeifertData, k: &BigInt) -> Result<SeifertData, SeifertError> {
    if k.is_one() {
        Ok(data.clone())
    } else {
        scale(data, k)
    }
}

/// Applies the witness to `M` and checks the result against its target.
pub fn replay_witness(m: &SeifertData, verdict: &Verdict) -> Result<SeifertData, RigidityError> {
    let Verdict::Isomorphic { witness, .. } = verdict else {
        return Err(RigidityError::NoWitness);
    };
    let replayed = apply_normalization(&scaled(m, &witness.k)?, &witness.transform)?;
    if replayed != witness.target {
        return Err(RigidityError::Mismatch);
    }
    Ok(replayed)
}

fn isomorphic(m: &SeifertData, k: BigInt, matching_units: Vec<u64>, unit_modulus: u64) -> Result<Verdict, RigidityError> {
    let (target, transform) = normalize_with_transform(&scaled(m, &k)?)?;

    if m.has_trivial_monodromy() {
        let t = m.order_product();
        let source = kappa_act(&cocycle_of(m).expect("trivial monodromy"), &k)
            .reframe(&transform.framing)
            .permute(&transform.order)
            .expect("normalization order is a permutation");
        let dest = cocycle_of(&target).expect("trivial monodromy");
        assert!(
            class_equal(&source, &dest, &t).expect("same signature, t > 0"),
            "matched canonical forms with inequivalent Euler classes"
        );
    }

    let verdict = Verdict::Isomorphic {
        witness: Witness {
            k: k.clone(),
            transform,
            target,
        },
        k,
        matching_units,
        unit_modulus,
    };
    replay_witness(m, &verdict).expect("witness replays to the target");
    Ok(verdict)
}

pub fn compare(m: &SeifertData, n: &SeifertData) -> Result<Verdict, RigidityError> {
    check_input(m, "first")?;
    check_input(n, "second")?;

    if m.genus != n.genus || sorted_orders(m) != sorted_orders(n) {
        return Ok(Verdict::Distinct { reason: REASON_BASE });
    }

    if !m.has_trivial_monodromy() || !n.has_trivial_monodromy() {
        return if normalize(m)? == normalize(n)? {
            isomorphic(m, BigInt::one(), vec![1], 1)
        } else {
            Ok(Verdict::Undecided {
                reason: REASON_MONODROMY,
            })
        };
    }

    let (em, en) = (euler_number(m)?, euler_number(n)?);
    let m_flat = em.0.is_zero() && em.1.is_zero();
    let n_flat = en.0.is_zero() && en.1.is_zero();
    if m_flat != n_flat {
        return Ok(Verdict::Distinct {
            reason: REASON_GEOMETRY,
        });
    }
    let target = normalize(n)?;
    if !m_flat {
        return if normalize(m)? == target {
            isomorphic(m, BigInt::one(), vec![1], 1)
        } else {
            Ok(Verdict::Distinct { reason: REASON_RIGID })
        };
    }

    // With e = 0 the canonical form of scale(M, k) depends on k mod lcm(m_i)
    // only, and every unit mod lcm(m_i) is a unit mod ∏ m_i.
    let l = m.order_lcm();
    let mut matching = Vec::new();
    for k in (1..=l).filter(|k| k.gcd(&l) == 1) {
        if normalize(&scaled(m, &BigInt::from(k))?)? == target {
            matching.push(k);
        }
    }
    let Some(&k) = matching.first() else {
        return Ok(Verdict::Distinct { reason: REASON_NO_UNIT });
    };
    isomorphic(m, BigInt::from(k), matching, l)
}

/// Every unit modulo `modulus` congruent to one of `residues` modulo `l`.
pub fn lift_units(residues: &[u64], l: u64, modulus: &BigInt) -> Vec<BigInt> {
    let Some(bound) = modulus.to_u64() else {
        return Vec::new();
    };
    (1..=bound)
        .filter(|&k| residues.contains(&(k % l)) && k.gcd(&bound) == 1)
        .map(BigInt::from)
        .collect()
}
