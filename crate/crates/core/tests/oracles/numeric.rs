use num_bigint::{BigInt, BigUint};

/// `floor(scale * base^(num/den))`.
pub fn floor_scaled_power(base: u64, num: u32, den: u32, scale: &BigUint) -> BigUint {
    let radicand = BigUint::from(base).pow(num) * scale.pow(den);
    if den == 1 {
        radicand
    } else {
        radicand.nth_root(den)
    }
}

pub fn pow2(bits: u32) -> BigUint {
    BigUint::from(1u32) << bits as usize
}

pub fn pow10(digits: u32) -> BigUint {
    BigUint::from(10u32).pow(digits)
}

pub fn signed(x: BigUint) -> BigInt {
    BigInt::from(x)
}

/// Plain trial division.
pub fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
