//! Towers `GF(p^u) ⊆ GF(p^v)` and sets in `GF(p^v)` that are linearly
//! independent over the subfield.
//!
//! `GF(p^v)` is `GF(p)[x]` modulo the first monic irreducible of degree `v`
//! in the order of the integer encoding `sum c_i p^i`, and the generator is
//! the first element in that order whose multiplicative order is `p^v - 1`.
//! With `m = p^u - 1`, `n = p^v - 1` and `l = n / m`, the subfield is
//! `{0} ∪ {g^(l t)}` and `x, y` are dependent over it iff
//! `log x ≡ log y (mod l)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{invalid, Error, Result};
use crate::number::{divisors, factor, is_prime, mul_mod, pow_mod, PrimeFactorization};

/// Polynomials over `GF(p)`, coefficients from the constant term up.
pub mod poly {
    use crate::number::{mul_mod, pow_mod};

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn degree(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = ((x as u128 + y as u128) % p as u128) as u64;
        }
        trim(&mut out);
        out
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let neg: Vec<u64> = b.iter().map(|&c| (p - c % p) % p).collect();
        add(a, &neg, p)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + mul_mod(x, y, p) as u128) % p as u128) as u64;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder modulo `m`, which must have a nonzero leading coefficient.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let dm = degree(m).expect("modulus is nonzero");
        let lead_inv = pow_mod(m[dm], p - 2, p);
        let mut r = a.to_vec();
        trim(&mut r);
        while let Some(dr) = degree(&r) {
            if dr < dm {
                break;
            }
            let c = mul_mod(r[dr], lead_inv, p);
            let shift = dr - dm;
            for (i, &mi) in m[..=dm].iter().enumerate() {
                let t = mul_mod(c, mi, p);
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), m, p)
    }

    pub fn pow_mod_poly(a: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(a, m, p);
        let mut acc = rem(&[1], m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod_poly(&acc, &base, m, p);
            }
            base = mul_mod_poly(&base, &base, m, p);
            e >>= 1;
        }
        acc
    }

    /// Plain power without reduction.
    pub fn pow(a: &[u64], e: u32, p: u64) -> Vec<u64> {
        (0..e).fold(vec![1], |acc, _| mul(&acc, a, p))
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        if let Some(d) = degree(&a) {
            let inv = pow_mod(a[d], p - 2, p);
            a.iter_mut().for_each(|c| *c = mul_mod(*c, inv, p));
        }
        a
    }

    /// Ben-Or test: `f` of degree `v` is irreducible iff
    /// `gcd(x^(p^i) - x, f) = 1` for `1 <= i <= v/2`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let Some(v) = degree(f) else { return false };
        if v == 0 {
            return false;
        }
        let x = vec![0, 1];
        let mut h = rem(&x, f, p);
        for _ in 0..v / 2 {
            h = pow_mod_poly(&h, p as u128, f, p);
            let g = gcd(&sub(&h, &x, p), f, p);
            if degree(&g) != Some(0) {
                return false;
            }
        }
        true
    }
}

/// An element of `GF(p^v)`: `v` coefficients in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqElement {
    coeffs: Vec<u64>,
}

impl FqElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FqElement {
    /// Polynomial in `x`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{c}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `GF(p^u) ⊆ GF(p^v)` with its modulus, generator and constants.
#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u64,
    u: u32,
    v: u32,
    modulus: Vec<u64>,
    generator: FqElement,
    m: u64,
    n: u64,
    l: u64,
    n_factors: PrimeFactorization,
    baby_steps: OnceLock<HashMap<Vec<u64>, u64>>,
}

/// Sets passed to exhaustive verification have at most this many
/// coefficient tuples; larger ones go through a rank computation.
pub const EXHAUSTIVE_LIMIT: u64 = 10_000_000;

fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::Overflow("p^v"))
}

/// Builds the tower after checking that `p` is prime and `u | v`.
pub fn build_tower(p: u64, u: u32, v: u32) -> Result<FieldTower> {
    if !is_prime(p) {
        return Err(invalid(format!("build_tower: {p} is not prime")));
    }
    if u == 0 || v == 0 {
        return Err(invalid("build_tower: u and v must be positive"));
    }
    if v % u != 0 {
        return Err(invalid(format!("build_tower: u = {u} does not divide v = {v}")));
    }
    let q = checked_pow(p, v)?;
    if q > 1 << 62 {
        return Err(Error::Overflow("build_tower: p^v above 2^62"));
    }
    let m = checked_pow(p, u)? - 1;
    let n = q - 1;
    let l = n / m;
    let modulus = (0..q)
        .map(|low| {
            let mut f = encode_to_coeffs(low, p, v as usize);
            f.push(1);
            f
        })
        .find(|f| poly::is_irreducible(f, p))
        .expect("irreducible polynomials of every degree exist");
    let mut tower = FieldTower {
        p,
        u,
        v,
        modulus,
        generator: FqElement {
            coeffs: vec![0; v as usize],
        },
        m,
        n,
        l,
        n_factors: factor(n)?,
        baby_steps: OnceLock::new(),
    };
    tower.generator = find_generator(&tower);
    Ok(tower)
}

fn encode_to_coeffs(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut c = vec![0; len];
    for slot in c.iter_mut() {
        *slot = code % p;
        code /= p;
    }
    c
}

/// First element, in encoding order, of multiplicative order exactly `n`:
/// `x^(n/q) != 1` for every prime `q | n`.
pub fn find_generator(tower: &FieldTower) -> FqElement {
    let one = tower.one();
    (1..=tower.n)
        .map(|code| tower.element_from_code(code))
        .find(|x| {
            tower
                .n_factors
                .primes()
                .all(|q| tower.pow(x, tower.n / q) != one)
        })
        .expect("the multiplicative group is cyclic")
}

impl FieldTower {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    /// `p^u - 1`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// `p^v - 1`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `n / m`.
    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn n_factorization(&self) -> &PrimeFactorization {
        &self.n_factors
    }

    /// Monic modulus of degree `v`, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> &FqElement {
        &self.generator
    }

    fn wrap(&self, mut c: Vec<u64>) -> FqElement {
        c.resize(self.v as usize, 0);
        FqElement { coeffs: c }
    }

    pub fn zero(&self) -> FqElement {
        self.wrap(Vec::new())
    }

    pub fn one(&self) -> FqElement {
        self.wrap(vec![1])
    }

    /// Element with coefficients given by the base-`p` digits of `code`.
    pub fn element_from_code(&self, code: u64) -> FqElement {
        FqElement {
            coeffs: encode_to_coeffs(code, self.p, self.v as usize),
        }
    }

    pub fn code(&self, x: &FqElement) -> u64 {
        x.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<FqElement> {
        if coeffs.len() > self.v as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(invalid("element: coefficients out of range"));
        }
        Ok(self.wrap(coeffs.to_vec()))
    }

    pub fn add(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.wrap(poly::add(&a.coeffs, &b.coeffs, self.p))
    }

    pub fn sub(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.wrap(poly::sub(&a.coeffs, &b.coeffs, self.p))
    }

    pub fn mul(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.wrap(poly::mul_mod_poly(&a.coeffs, &b.coeffs, &self.modulus, self.p))
    }

    pub fn pow(&self, a: &FqElement, e: u64) -> FqElement {
        self.wrap(poly::pow_mod_poly(&a.coeffs, e as u128, &self.modulus, self.p))
    }

    pub fn inv(&self, a: &FqElement) -> Result<FqElement> {
        if a.is_zero() {
            return Err(invalid("inverse of zero"));
        }
        Ok(self.pow(a, self.n - 1))
    }

    /// `g^e` for any integer `e`.
    pub fn generator_pow(&self, e: i128) -> FqElement {
        let e = e.rem_euclid(self.n as i128) as u64;
        self.pow(&self.generator, e)
    }

    fn baby_step_count(&self) -> u64 {
        let s = (self.n as f64).sqrt() as u64;
        (s.saturating_sub(2)..=s + 2)
            .find(|k| k * k >= self.n)
            .unwrap_or(s + 1)
    }

    fn baby_steps(&self) -> &HashMap<Vec<u64>, u64> {
        self.baby_steps.get_or_init(|| {
            let k = self.baby_step_count();
            let mut table = HashMap::with_capacity(k as usize);
            let mut cur = self.one();
            for j in 0..k {
                table.entry(cur.coeffs.clone()).or_insert(j);
                cur = self.mul(&cur, &self.generator);
            }
            table
        })
    }

    /// The `e` in `[0, n)` with `g^e = x`, by baby-step giant-step.
    pub fn discrete_log(&self, x: &FqElement) -> Result<u64> {
        if x.is_zero() {
            return Err(invalid("discrete_log: zero has no logarithm"));
        }
        let k = self.baby_step_count();
        let table = self.baby_steps();
        let giant = self.generator_pow(-(k as i128));
        let mut y = x.clone();
        for i in 0..=k {
            if let Some(&j) = table.get(&y.coeffs) {
                return Ok((i * k + j) % self.n);
            }
            y = self.mul(&y, &giant);
        }
        unreachable!("g generates the multiplicative group")
    }

    /// Least `k` with `x^k` in the subfield: `l / gcd(l, log x)`.
    pub fn root_index(&self, x: &FqElement) -> Result<u64> {
        let e = self.discrete_log(x)?;
        Ok(self.l / self.l.gcd(&e))
    }

    pub fn in_subfield(&self, x: &FqElement) -> bool {
        self.pow(x, self.m + 1) == *x
    }

    /// `{0} ∪ {g^(l t) : 0 <= t < m}`, zero first.
    pub fn subfield_elements(&self) -> Vec<FqElement> {
        let h = self.pow(&self.generator, self.l);
        let mut out = vec![self.zero()];
        let mut cur = self.one();
        for _ in 0..self.m {
            out.push(cur.clone());
            cur = self.mul(&cur, &h);
        }
        out
    }
}

/// The constructed set with its exponents `d l / m` over the divisors `d`
/// of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub w: u64,
    pub exponents: Vec<u64>,
    pub elements: Vec<FqElement>,
}

/// Requires `m > 1` and `m | l`.
pub fn construct_independent_set(tower: &FieldTower) -> Result<IndependentSet> {
    if tower.m <= 1 {
        return Err(Error::Hypothesis(format!(
            "construct_independent_set: m = {} must exceed 1",
            tower.m
        )));
    }
    if tower.l % tower.m != 0 {
        return Err(Error::Hypothesis(format!(
            "construct_independent_set: m = {} does not divide l = {}",
            tower.m, tower.l
        )));
    }
    let w = tower.l / tower.m;
    let exponents: Vec<u64> = divisors(tower.m)?.into_iter().map(|d| d * w).collect();
    let elements = exponents
        .iter()
        .map(|&e| tower.generator_pow(e as i128))
        .collect();
    Ok(IndependentSet {
        w,
        exponents,
        elements,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerificationMethod {
    /// Every nonzero coefficient tuple was summed.
    Exhaustive { combinations: u64 },
    /// Rank over `GF(p)` of `{h^j a_i}` for a subfield basis `h^j`.
    Rank { rank: usize, required: usize },
    /// The set contains zero.
    ContainsZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndependenceVerdict {
    pub independent: bool,
    pub method: VerificationMethod,
}

/// Decides linear independence of `set` over `GF(p^u)`.
pub fn verify_linear_independence(tower: &FieldTower, set: &[FqElement]) -> IndependenceVerdict {
    if set.iter().any(FqElement::is_zero) {
        return IndependenceVerdict {
            independent: false,
            method: VerificationMethod::ContainsZero,
        };
    }
    let q = tower.m + 1;
    let tuples = u32::try_from(set.len())
        .ok()
        .and_then(|k| q.checked_pow(k))
        .filter(|&t| t <= EXHAUSTIVE_LIMIT);
    match tuples {
        Some(_) => verify_exhaustive(tower, set),
        None => verify_by_rank(tower, set),
    }
}

/// Sums every nonzero tuple of subfield coefficients against `set`.
///
/// Runs `p^(u k) - 1` field sums for a set of size `k`.
pub fn verify_exhaustive(tower: &FieldTower, set: &[FqElement]) -> IndependenceVerdict {
    let sub = tower.subfield_elements();
    // products[i][c] = sub[c] * set[i]
    let products: Vec<Vec<FqElement>> = set
        .iter()
        .map(|a| sub.iter().map(|c| tower.mul(c, a)).collect())
        .collect();
    let k = set.len();
    let q = sub.len();
    let mut idx = vec![0usize; k];
    let mut checked = 0u64;
    let mut independent = true;
    loop {
        // advance the odometer; the all-zero tuple is skipped
        let mut i = 0;
        while i < k {
            idx[i] += 1;
            if idx[i] < q {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
        checked += 1;
        let sum = (0..k).fold(tower.zero(), |acc, j| tower.add(&acc, &products[j][idx[j]]));
        if sum.is_zero() {
            independent = false;
            break;
        }
    }
    IndependenceVerdict {
        independent,
        method: VerificationMethod::Exhaustive {
            combinations: checked,
        },
    }
}

/// Rank test, valid for any set size.
pub fn verify_by_rank(tower: &FieldTower, set: &[FqElement]) -> IndependenceVerdict {
    let p = tower.p;
    let h = tower.pow(&tower.generator, tower.l);
    let mut rows = Vec::new();
    for a in set {
        let mut cur = a.clone();
        for _ in 0..tower.u {
            rows.push(cur.coeffs.clone());
            cur = tower.mul(&cur, &h);
        }
    }
    let required = rows.len();
    let rank = rank_mod_p(rows, p);
    IndependenceVerdict {
        independent: rank == required,
        method: VerificationMethod::Rank { rank, required },
    }
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r2 in 0..rows.len() {
            if r2 != rank && rows[r2][c] != 0 {
                let f = rows[r2][c];
                for j in 0..cols {
                    let t = mul_mod(f, rows[rank][j], p);
                    rows[r2][j] = (rows[r2][j] + p - t) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}
