//! Brute-force near-miss ranking at 100 decimal digits.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::numeric::{floor_scaled_power, pow10};

pub const DIGITS: u32 = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranked {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub m: u32,
    pub n: u32,
    pub r: u32,
    /// `eps * 10^100`, within 3 of the truth.
    pub eps_scaled: BigInt,
}

impl Ranked {
    pub fn tuple(&self) -> (u64, u64, u64, u32, u32, u32) {
        (self.x, self.y, self.z, self.m, self.n, self.r)
    }
}

fn is_kth_power(v: u64, k: u32) -> bool {
    let r = BigUint::from(v).nth_root(k);
    r.pow(k) == BigUint::from(v)
}

fn admissible(v: u64, k: u32) -> bool {
    v >= 2 && !is_kth_power(v, k)
}

/// Every admissible candidate, ranked by `|eps|` then the tuple.
pub fn rank_all(x_max: u64, y_max: u64, exps: &[u32], mixed: bool) -> Vec<Ranked> {
    let scale = pow10(DIGITS);
    let root = |b: u64, k: u32| BigInt::from(floor_scaled_power(b, 1, k, &scale));
    let mut out = Vec::new();
    for x in 2..=x_max {
        for y in x..=y_max {
            if x.gcd(&y) != 1 {
                continue;
            }
            for &m in exps {
                let triples: Vec<(u32, u32)> = if mixed {
                    exps.iter().flat_map(|&n| exps.iter().map(move |&r| (n, r))).collect()
                } else {
                    vec![(m, m)]
                };
                for (n, r) in triples {
                    if !admissible(x, m) || !admissible(y, n) {
                        continue;
                    }
                    let s = root(x, m) + root(y, n);
                    let denom = BigInt::from(scale.clone()).pow(r);
                    let z0: BigInt = (s.pow(r) + &denom / 2) / &denom;
                    let z0 = z0.to_u64().expect("z fits");
                    for z in z0.saturating_sub(1)..=z0 + 1 {
                        if !admissible(z, r) {
                            continue;
                        }
                        out.push(Ranked {
                            x,
                            y,
                            z,
                            m,
                            n,
                            r,
                            eps_scaled: &s - root(z, r),
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.eps_scaled
            .abs()
            .cmp(&b.eps_scaled.abs())
            .then_with(|| a.tuple().cmp(&b.tuple()))
    });
    out
}
