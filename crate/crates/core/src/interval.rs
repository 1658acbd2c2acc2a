//! Certified enclosures of real radicals with exact rational endpoints.
//!
//! A root `x^(1/k)` is enclosed at `b` bits by the integer `q = floor(2^b x^(1/k))`,
//! computed as the integer `k`-th root of `x 2^(bk)`, giving `[q, q+1] / 2^b`.
//! Raising `b` only ever shrinks these dyadic enclosures.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Upper bound on `|x|` over the interval.
    pub fn magnitude(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Lower bound on `|x|` over the interval (0 if it straddles zero).
    pub fn mignitude(&self) -> BigRational {
        if self.contains_zero() {
            BigRational::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Midpoint as an `f64`, for display and prefiltering only.
    pub fn approx(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        rational_to_f64(&mid)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Lossy conversion used for diagnostics.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = x.to_f64() {
        if v.is_finite() && (v != 0.0 || x.is_zero()) {
            return v;
        }
    }
    // numerator or denominator too large for a direct conversion
    let shift = x.numer().bits().max(x.denom().bits()) as i64 - 60;
    let (n, d) = if shift > 0 {
        (
            x.numer() >> shift.max(0) as usize,
            x.denom() >> shift.max(0) as usize,
        )
    } else {
        (x.numer().clone(), x.denom().clone())
    };
    let nf = n.to_f64().unwrap_or(0.0);
    let df = d.to_f64().unwrap_or(f64::INFINITY);
    nf / df
}

fn dyadic(q: BigInt, bits: u32) -> BigRational {
    BigRational::new(q, BigInt::one() << bits as usize)
}

/// `floor(2^bits * (num/den)^(1/k))`.
pub fn scaled_root_floor(num: &BigUint, den: &BigUint, k: u32, bits: u32) -> BigUint {
    assert!(k >= 1 && !den.is_zero());
    let scaled = (num << (bits as usize * k as usize)) / den;
    if k == 1 {
        scaled
    } else {
        scaled.nth_root(k)
    }
}

/// Enclosure of `(num/den)^(1/k)` of width `2^-bits` (a point when exact).
pub fn root_enclosure(num: &BigUint, den: &BigUint, k: u32, bits: u32) -> Interval {
    let q = scaled_root_floor(num, den, k, bits);
    let exact = {
        let pk = q.pow(k);
        &pk * den == num << (bits as usize * k as usize)
    };
    let lo = dyadic(BigInt::from_biguint(Sign::Plus, q.clone()), bits);
    if exact {
        Interval::point(lo)
    } else {
        let hi = dyadic(BigInt::from_biguint(Sign::Plus, q + 1u32), bits);
        Interval { lo, hi }
    }
}

/// One summand `coeff * base^(1/root)` of a radical sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadicalTerm {
    pub coeff: i64,
    pub base: u64,
    pub root: u32,
}

impl RadicalTerm {
    pub fn new(coeff: i64, base: u64, root: u32) -> Self {
        Self { coeff, base, root }
    }

    pub fn enclose(&self, bits: u32) -> Interval {
        let r = root_enclosure(&BigUint::from(self.base), &BigUint::one(), self.root, bits);
        r.scale(&BigRational::from_integer(self.coeff.into()))
    }
}

/// A certified enclosure together with the working precision that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub interval: Interval,
    pub precision_bits: u32,
}

pub const START_BITS: u32 = 64;
pub const MAX_BITS: u32 = 1 << 16;

/// Encloses `sum coeff_i * base_i^(1/root_i)` at a fixed precision.
pub fn eval_radical_sum_at(terms: &[RadicalTerm], bits: u32) -> Interval {
    terms.iter().fold(Interval::point(BigRational::zero()), |acc, t| {
        acc.add(&t.enclose(bits))
    })
}

/// Encloses the radical sum in an interval narrower than `target_width`,
/// doubling the precision from [`START_BITS`] until it is.
pub fn eval_radical_sum(terms: &[RadicalTerm], target_width: &BigRational) -> Result<Enclosure> {
    eval_radical_sum_from(terms, target_width, START_BITS)
}

pub fn eval_radical_sum_from(
    terms: &[RadicalTerm],
    target_width: &BigRational,
    start_bits: u32,
) -> Result<Enclosure> {
    if !target_width.is_positive() {
        return Err(invalid("eval_radical_sum: target width must be positive"));
    }
    for t in terms {
        if t.base == 0 || t.root == 0 {
            return Err(invalid(format!(
                "eval_radical_sum: bad term {}*{}^(1/{})",
                t.coeff, t.base, t.root
            )));
        }
    }
    let mut bits = start_bits.max(1);
    loop {
        let interval = eval_radical_sum_at(terms, bits);
        if &interval.width() < target_width {
            return Ok(Enclosure {
                interval,
                precision_bits: bits,
            });
        }
        if bits >= MAX_BITS {
            return Err(invalid(format!(
                "eval_radical_sum: width target not met at {MAX_BITS} bits"
            )));
        }
        bits = (bits * 2).min(MAX_BITS);
    }
}
