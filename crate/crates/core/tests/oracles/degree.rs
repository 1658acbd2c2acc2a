//! Field degrees from the group ring of reduced radicals.
//!
//! A product of radicals `prod p^(f_p)` is written as an integer times the
//! reduced radical `prod p^(frac f_p)`. Reduced radicals with different
//! fractional exponent vectors are linearly independent over Q, so an
//! element of the field is a coefficient vector indexed by them.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::numeric::{floor_scaled_power, pow10, trial_factor};

/// `base^(num/den)` with positive integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rad {
    pub base: u64,
    pub num: u32,
    pub den: u32,
}

pub fn rad(base: u64, num: u32, den: u32) -> Rad {
    Rad { base, num, den }
}

/// Fractional exponents in `(0, 1)`, primes ascending.
type Key = Vec<(u64, Ratio<i64>)>;

/// Exponent vector of a radical, unreduced.
fn exponents(r: Rad) -> BTreeMap<u64, Ratio<i64>> {
    trial_factor(r.base)
        .into_iter()
        .map(|(p, e)| (p, Ratio::new(e as i64 * r.num as i64, r.den as i64)))
        .collect()
}

/// Splits `prod p^(f_p)` into `(prod p^floor(f_p), key)`.
fn split(exps: &BTreeMap<u64, Ratio<i64>>) -> (Vec<(u64, u32)>, Key) {
    let mut int_part = Vec::new();
    let mut key = Vec::new();
    for (&p, f) in exps {
        let fl = f.floor();
        let fr = f - fl;
        let k = fl.to_integer();
        assert!(k >= 0, "negative exponents are not used here");
        if k > 0 {
            int_part.push((p, k as u32));
        }
        if !fr.is_zero() {
            key.push((p, fr));
        }
    }
    (int_part, key)
}

fn add_keys(a: &Key, b: &Key) -> BTreeMap<u64, Ratio<i64>> {
    let mut m: BTreeMap<u64, Ratio<i64>> = a.iter().cloned().collect();
    for (p, f) in b {
        *m.entry(*p).or_insert_with(<Ratio<i64> as Zero>::zero) += f;
    }
    m
}

/// Order of the group generated by the exponent vectors modulo integers,
/// by breadth-first closure.
pub fn group_order(gens: &[Rad]) -> usize {
    let gen_keys: Vec<Key> = gens.iter().map(|&g| split(&exponents(g)).1).collect();
    let mut seen: HashSet<Key> = HashSet::new();
    let mut queue = VecDeque::from([Key::new()]);
    seen.insert(Key::new());
    while let Some(k) = queue.pop_front() {
        for g in &gen_keys {
            let next = split(&add_keys(&k, g)).1;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

pub fn root_degree(r: Rad) -> u64 {
    let key = split(&exponents(r)).1;
    key.iter().fold(1u64, |l, (_, f)| l.lcm(&(*f.denom() as u64)))
}

/// Arithmetic on coefficients: exact rationals or residues mod a prime.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u64(v: u64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_zero(&self) -> bool;
}

pub const P61: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP(pub u64);

impl Coeff for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn one() -> Self {
        ModP(1)
    }
    fn from_u64(v: u64) -> Self {
        ModP(v % P61)
    }
    fn add(&self, o: &Self) -> Self {
        ModP((self.0 + o.0) % P61)
    }
    fn sub(&self, o: &Self) -> Self {
        ModP((self.0 + P61 - o.0) % P61)
    }
    fn mul(&self, o: &Self) -> Self {
        ModP(((self.0 as u128 * o.0 as u128) % P61 as u128) as u64)
    }
    fn inv(&self) -> Self {
        let mut acc = ModP(1);
        let mut b = *self;
        let mut e = P61 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

type Element<C> = HashMap<Key, C>;

fn int_value<C: Coeff>(parts: &[(u64, u32)]) -> C {
    parts.iter().fold(C::one(), |acc, &(p, e)| {
        (0..e).fold(acc, |a, _| a.mul(&C::from_u64(p)))
    })
}

fn mul_elements<C: Coeff>(a: &Element<C>, b: &Element<C>) -> Element<C> {
    let mut out: Element<C> = HashMap::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let (ip, key) = split(&add_keys(ka, kb));
            let c = ca.mul(cb).mul(&int_value::<C>(&ip));
            let slot = out.entry(key).or_insert_with(C::zero);
            *slot = slot.add(&c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `theta = sum c_i x_i` as a group-ring element.
fn theta<C: Coeff>(gens: &[Rad], coeffs: &[u64]) -> Element<C> {
    let mut out: Element<C> = HashMap::new();
    for (&g, &c) in gens.iter().zip(coeffs) {
        let (ip, key) = split(&exponents(g));
        let v = C::from_u64(c).mul(&int_value::<C>(&ip));
        let slot = out.entry(key).or_insert_with(C::zero);
        *slot = slot.add(&v);
    }
    out
}

/// Powers `theta^0 .. theta^(count-1)` as dense vectors over a shared index.
fn power_vectors<C: Coeff>(gens: &[Rad], coeffs: &[u64], count: usize) -> Vec<Vec<C>> {
    let t = theta::<C>(gens, coeffs);
    let mut index: HashMap<Key, usize> = HashMap::new();
    let mut cur: Element<C> = HashMap::from([(Key::new(), C::one())]);
    let mut sparse = Vec::with_capacity(count);
    for _ in 0..count {
        let mut v: Vec<(usize, C)> = Vec::new();
        for (k, c) in &cur {
            let n = index.len();
            let i = *index.entry(k.clone()).or_insert(n);
            v.push((i, c.clone()));
        }
        sparse.push(v);
        cur = mul_elements(&cur, &t);
    }
    let dim = index.len();
    sparse
        .into_iter()
        .map(|v| {
            let mut d = vec![C::zero(); dim];
            for (i, c) in v {
                d[i] = c;
            }
            d
        })
        .collect()
}

/// Least `d` with `theta^d` in the span of lower powers, searching up to
/// `limit`.
pub fn theta_degree<C: Coeff>(gens: &[Rad], coeffs: &[u64], limit: usize) -> usize {
    let vecs = power_vectors::<C>(gens, coeffs, limit + 1);
    let mut basis: Vec<(usize, Vec<C>)> = Vec::new();
    for (d, v) in vecs.into_iter().enumerate() {
        let mut v = v;
        for (piv, b) in &basis {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => return d,
            Some(piv) => {
                let inv = v[piv].inv();
                v.iter_mut().for_each(|x| *x = x.mul(&inv));
                basis.push((piv, v));
            }
        }
    }
    panic!("no dependency among the first {limit} powers");
}

/// Monic minimal polynomial of theta, low coefficients first.
pub fn minimal_polynomial(gens: &[Rad], coeffs: &[u64], limit: usize) -> Vec<BigRational> {
    let d = theta_degree::<BigRational>(gens, coeffs, limit);
    let vecs = power_vectors::<BigRational>(gens, coeffs, d + 1);
    let dim = vecs[0].len();
    // rows: coordinates; columns: theta^0..theta^(d-1) | theta^d
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| (0..=d).map(|c| vecs[c][r].clone()).collect())
        .collect();
    let mut row = 0;
    let mut pivots = Vec::new();
    for c in 0..d {
        let p = (row..dim).find(|&r| !Zero::is_zero(&m[r][c])).expect("independent powers");
        m.swap(row, p);
        let inv = m[row][c].recip();
        m[row].iter_mut().for_each(|x| *x = &*x * &inv);
        for r in 0..dim {
            if r != row && !Zero::is_zero(&m[r][c]) {
                let f = m[r][c].clone();
                for k in c..=d {
                    let t = &f * &m[row][k];
                    m[r][k] -= t;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    // theta^d = sum a_c theta^c, so the polynomial is x^d - sum a_c x^c
    let mut poly: Vec<BigRational> = (0..d).map(|c| -m[c][d].clone()).collect();
    poly.push(<BigRational as One>::one());
    poly
}

/// `theta` to `digits` decimals, truncated, as an exact rational.
pub fn theta_approx(gens: &[Rad], coeffs: &[u64], digits: u32) -> BigRational {
    let scale = pow10(digits);
    let total: BigInt = gens
        .iter()
        .zip(coeffs)
        .map(|(g, &c)| BigInt::from(floor_scaled_power(g.base, g.num, g.den, &scale)) * c)
        .sum();
    BigRational::new(total, BigInt::from(scale))
}

/// `|P(t)|` relative to the size of its terms.
pub fn relative_residual(poly: &[BigRational], t: &BigRational) -> f64 {
    let mut value = <BigRational as Zero>::zero();
    let mut scale = <BigRational as Zero>::zero();
    let mut pw = <BigRational as One>::one();
    for c in poly {
        value += c * &pw;
        scale += c.abs() * pw.abs();
        pw = &pw * t;
    }
    (value.abs() / scale).to_f64().unwrap_or(f64::INFINITY)
}
