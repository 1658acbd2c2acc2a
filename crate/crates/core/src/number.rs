//! Integer primitives shared by the rest of the crate: primality,
//! factorization, perfect powers and multiplicative orders.
//!
//! Everything here works on `u64` inputs with `u128` intermediates, so no
//! product can overflow silently. Values that may outgrow a machine word
//! (field degrees, scaled roots) are handled with `num-bigint` elsewhere.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{invalid, Error, Result};

/// Trial division is used below this bound; a Pollard rho split takes over
/// for cofactors that survive it.
pub const TRIAL_DIVISION_LIMIT: u64 = 1 << 48;

/// Witnesses making Miller-Rabin deterministic for every `n < 2^64`.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization with strictly increasing primes.
///
/// The empty factorization is the number 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from arbitrary (prime, multiplicity) pairs,
    /// merging repeats and dropping zero multiplicities.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Self {
        let mut factors: Vec<(u64, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable();
        let mut merged: Vec<(u64, u32)> = Vec::with_capacity(factors.len());
        for (p, e) in factors {
            match merged.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => merged.push((p, e)),
            }
        }
        Self { factors: merged }
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factored integer, exactly.
    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::from(1u32), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    /// Factorization of the product of the two factored integers.
    pub fn merge(&self, other: &Self) -> Self {
        Self::from_pairs(self.factors.iter().chain(other.factors.iter()).copied())
    }

    /// gcd of all multiplicities (0 for the empty factorization).
    pub fn exponent_gcd(&self) -> u32 {
        self.factors.iter().fold(0, |g, &(_, e)| g.gcd(&e))
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors `n >= 1`.
pub fn factor(n: u64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(invalid("factor: n must be positive"));
    }
    let mut out = Vec::new();
    let mut rest = n;
    for p in [2u64, 3] {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    // 6k +- 1 wheel
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest && d < (1 << 24) {
        for q in [d, d + 2] {
            let mut e = 0;
            while rest % q == 0 {
                rest /= q;
                e += 1;
            }
            if e > 0 {
                out.push((q, e));
            }
        }
        d += 6;
    }
    if rest > 1 {
        if d.saturating_mul(d) > rest || is_prime(rest) {
            out.push((rest, 1));
        } else {
            split_large(rest, &mut out);
        }
    }
    Ok(PrimeFactorization::from_pairs(out))
}

fn split_large(n: u64, out: &mut Vec<(u64, u32)>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push((n, 1));
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Nontrivial divisor of an odd composite `n` (Brent's variant of rho).
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        while g == 1 {
            x = f(x);
            y = f(f(y));
            g = x.abs_diff(y).gcd(&n);
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

/// Writes `n >= 2` as `base^k` with `k` maximal.
pub fn perfect_power_decompose(n: u64) -> Result<(u64, u32)> {
    if n < 2 {
        return Err(invalid("perfect_power_decompose: n must be at least 2"));
    }
    let f = factor(n)?;
    let k = f.exponent_gcd();
    let base = f
        .factors()
        .iter()
        .fold(1u64, |acc, &(p, e)| acc * p.pow(e / k));
    Ok((base, k))
}

/// Exact integer `k`-th root of `n`, if there is one.
pub fn exact_root(n: u64, k: u32) -> Option<u64> {
    if k == 0 {
        return None;
    }
    if n < 2 || k == 1 {
        return Some(n);
    }
    let r = integer_root(n, k);
    (r.checked_pow(k) == Some(n)).then_some(r)
}

/// `floor(n^(1/k))` for `k >= 1`.
pub fn integer_root(n: u64, k: u32) -> u64 {
    assert!(k >= 1);
    if k == 1 || n < 2 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    let fits = |r: u64| r.checked_pow(k).is_some_and(|v| v <= n);
    while !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

pub fn is_perfect_power_of(n: u64, k: u32) -> bool {
    exact_root(n, k).is_some()
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factor(n)?;
    Ok(f
        .factors()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factor(n)?;
    let mut out = vec![1u64];
    for &(p, e) in f.factors() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Least `r >= 1` with `d^r = 1 (mod n)`.
pub fn multiplicative_order(d: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(invalid("multiplicative_order: n must be positive"));
    }
    let value = d;
    let d = normalize_residue(d as i128, n);
    let g = d.gcd(&n);
    if g != 1 && n != 1 {
        return Err(Error::NotCoprime {
            value,
            modulus: n,
            gcd: g,
        });
    }
    if n == 1 {
        return Ok(1);
    }
    let phi = euler_phi(n)?;
    let mut order = phi;
    for p in factor(phi)?.primes() {
        while order % p == 0 && pow_mod(d, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// `x mod n` in `[0, n)` for any signed `x`.
pub fn normalize_residue(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

/// Inverse of `a` modulo `n`, when `gcd(a, n) = 1`.
pub fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(n as i128));
    (e.gcd == 1).then(|| normalize_residue(e.x, n))
}

/// Product of the primes `<= k`.
pub fn primorial(k: u64) -> BigUint {
    (2..=k)
        .filter(|&p| is_prime(p))
        .fold(BigUint::from(1u32), |acc, p| acc * p)
}
