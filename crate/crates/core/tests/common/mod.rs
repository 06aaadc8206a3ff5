#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use seifert4::exactmat::IntMatrix;
use seifert4::seifert::{ConePoint, SeifertData};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn data(genus: usize, cones: &[(u64, i64, i64)], obstruction: (i64, i64)) -> SeifertData {
    SeifertData::with_trivial_monodromy(
        genus,
        cones.iter().map(|&(m, a, b)| ConePoint::new(m, a, b)).collect(),
        obstruction,
    )
}

pub fn flexible_m() -> SeifertData {
    data(2, &[(5, 1, 0), (5, 4, 0)], (-1, 0))
}

pub fn flexible_n() -> SeifertData {
    data(2, &[(5, 2, 0), (5, 3, 0)], (-1, 0))
}

/// SL(2, Z) matrices with entries in `[-bound, bound]`.
pub fn small_sl2(bound: i64) -> Vec<IntMatrix> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    if a * d - b * c == 1 {
                        out.push(IntMatrix::from_rows(&[[a, b], [c, d]]));
                    }
                }
            }
        }
    }
    out
}

fn random_cone(rng: &mut ChaCha8Rng, m: u64) -> (u64, i64, i64) {
    loop {
        let a = rng.gen_range(-12..=12);
        let b = rng.gen_range(-12..=12);
        if (m as i64).gcd(&a).gcd(&b) == 1 {
            return (m, a, b);
        }
    }
}

/// Random valid trivial-monodromy data whose cone orders have lcm at most 30.
/// Half of the draws have Euler number zero.
pub fn random_data(rng: &mut ChaCha8Rng) -> SeifertData {
    const LCMS: [u64; 8] = [6, 10, 12, 15, 20, 24, 30, 28];
    let l = *LCMS.choose(rng).unwrap();
    let divisors: Vec<u64> = (2..=l).filter(|d| l % d == 0).collect();
    let genus = rng.gen_range(0..=2);
    let mut cones = Vec::new();
    let flat = rng.gen_bool(0.5);
    let obstruction = if flat {
        for _ in 0..rng.gen_range(1..=2) {
            let m = *divisors.choose(rng).unwrap();
            let (m, a, b) = random_cone(rng, m);
            cones.push((m, a, b));
            cones.push((m, -a, -b));
        }
        (0, 0)
    } else {
        for _ in 0..rng.gen_range(0..=4) {
            let m = *divisors.choose(rng).unwrap();
            cones.push(random_cone(rng, m));
        }
        (rng.gen_range(-5..=5), rng.gen_range(-5..=5))
    };
    cones.shuffle(rng);
    data(genus, &cones, obstruction)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
