//! Exact arithmetic in `Q(zeta_n)` and checks built on it: the DFT matrix
//! identities and vanishing sums of roots of unity.
//!
//! Elements are coefficient vectors of length `phi(n)` reduced modulo the
//! `n`-th cyclotomic polynomial, so an element is zero iff all coefficients
//! are. Geometric sums such as `sum_j zeta^(kj)` therefore come out exactly.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::number::{divisors, primorial};

/// Integer polynomial, coefficients from the constant term up.
pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Quotient of `num` by the monic `den`, asserting the division is exact.
fn exact_div_monic(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut rem = num.clone();
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division not exact");
    trim(&mut quot);
    quot
}

/// The `n`-th cyclotomic polynomial, from `x^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic_poly(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(invalid("cyclotomic_poly: n must be positive"));
    }
    let mut memo = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u64, memo: &mut HashMap<u64, IntPoly>) -> Result<IntPoly> {
    if let Some(p) = memo.get(&n) {
        return Ok(p.clone());
    }
    let len = usize::try_from(n).map_err(|_| Error::Overflow("cyclotomic_poly"))? + 1;
    let mut p = vec![BigInt::zero(); len];
    p[0] = -BigInt::one();
    p[len - 1] = BigInt::one();
    for d in divisors(n)? {
        if d < n {
            let phi_d = cyclotomic_memo(d, memo)?;
            p = exact_div_monic(&p, &phi_d);
        }
    }
    memo.insert(n, p.clone());
    Ok(p)
}

/// An element of `Q(zeta_n)`: integer numerators over one positive
/// denominator, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElement {
    n: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloElement {
    fn normalized(n: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|x| *x = -&*x);
        }
        if !den.is_one() {
            let g = num.iter().fold(den.clone(), |g, x| g.gcd(x));
            if !g.is_one() {
                num.iter_mut().for_each(|x| *x /= &g);
                den /= g;
            }
        }
        Self { n, num, den }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Coefficients in the power basis `1, zeta, ..., zeta^(phi(n)-1)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|x| BigRational::new(x.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// The value as a rational, when it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if any {
                f.write_str(" + ")?;
            }
            any = true;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        if !any {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `Q(zeta_n)` with `zeta^k mod Phi_n` tabulated for `0 <= k < n`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    n: u64,
    modulus: IntPoly,
    degree: usize,
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn new(n: u64) -> Result<Self> {
        let modulus = cyclotomic_poly(n)?;
        let degree = modulus.len() - 1;
        let nn = usize::try_from(n).map_err(|_| Error::Overflow("cyclotomic field"))?;
        let mut powers = Vec::with_capacity(nn);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..nn {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for (i, m) in modulus[..degree].iter().enumerate() {
                    cur[i] -= &top * m;
                }
            }
        }
        Ok(Self {
            n,
            modulus,
            degree,
            powers,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// `phi(n)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    /// Coefficients of `zeta^k` for any integer `k`.
    pub fn zeta_power_coeffs(&self, k: i64) -> &[BigInt] {
        &self.powers[k.rem_euclid(self.n as i64) as usize]
    }

    fn integral(&self, num: Vec<BigInt>) -> CycloElement {
        CycloElement {
            n: self.n,
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> Result<CycloElement> {
        if coeffs.len() != self.degree {
            return Err(invalid(format!(
                "cyclotomic element needs {} coefficients, got {}",
                self.degree,
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(CycloElement::normalized(self.n, num, den))
    }

    pub fn zero(&self) -> CycloElement {
        self.integral(vec![BigInt::zero(); self.degree])
    }

    pub fn from_rational(&self, q: BigRational) -> CycloElement {
        let mut num = vec![BigInt::zero(); self.degree];
        num[0] = q.numer().clone();
        CycloElement {
            n: self.n,
            num,
            den: q.denom().clone(),
        }
    }

    pub fn one(&self) -> CycloElement {
        self.from_rational(BigRational::one())
    }

    pub fn zeta_pow(&self, k: i64) -> CycloElement {
        self.integral(self.zeta_power_coeffs(k).to_vec())
    }

    fn check(&self, a: &CycloElement) {
        assert_eq!(a.n, self.n, "conductor mismatch");
    }

    fn combine(&self, a: &CycloElement, b: &CycloElement, sign: i32) -> CycloElement {
        self.check(a);
        self.check(b);
        let num = if a.den == b.den {
            a.num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if sign > 0 { x + y } else { x - y })
                .collect()
        } else {
            a.num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| {
                    let (p, q) = (x * &b.den, y * &a.den);
                    if sign > 0 {
                        p + q
                    } else {
                        p - q
                    }
                })
                .collect()
        };
        let den = if a.den == b.den {
            a.den.clone()
        } else {
            &a.den * &b.den
        };
        CycloElement::normalized(self.n, num, den)
    }

    pub fn add(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        self.combine(a, b, 1)
    }

    pub fn sub(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        self.combine(a, b, -1)
    }

    pub fn neg(&self, a: &CycloElement) -> CycloElement {
        CycloElement {
            n: a.n,
            num: a.num.iter().map(|x| -x).collect(),
            den: a.den.clone(),
        }
    }

    pub fn scale(&self, a: &CycloElement, q: &BigRational) -> CycloElement {
        let num = a.num.iter().map(|x| x * q.numer()).collect();
        CycloElement::normalized(self.n, num, &a.den * q.denom())
    }

    /// Reduces a power-basis vector of any length using `zeta^n = 1`.
    fn reduce(&self, prod: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        let mut out = vec![BigInt::zero(); d];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                out[k] += c;
                continue;
            }
            for (o, p) in out.iter_mut().zip(self.zeta_power_coeffs(k as i64)) {
                if !p.is_zero() {
                    *o += &c * p;
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        self.check(a);
        self.check(b);
        let d = self.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloElement::normalized(self.n, self.reduce(prod), &a.den * &b.den)
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self, a: &CycloElement) -> CycloElement {
        self.check(a);
        let mut out = vec![BigInt::zero(); self.degree];
        for (k, c) in a.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(self.zeta_power_coeffs(-(k as i64))) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        CycloElement {
            n: self.n,
            num: out,
            den: a.den.clone(),
        }
    }

    /// Inverse, by solving `a * b = 1` as a linear system over Q.
    pub fn inv(&self, a: &CycloElement) -> Result<CycloElement> {
        self.check(a);
        if a.is_zero() {
            return Err(invalid("cyclo_inv: zero has no inverse"));
        }
        let d = self.degree;
        // column j holds a * zeta^j, with the denominator of a dropped
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.integral(a.num.clone());
        let z = self.zeta_pow(1);
        for _ in 0..d {
            cols.push(cur.num.clone());
            cur = self.mul(&cur, &z);
        }
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..d)
                    .map(|j| BigRational::from_integer(cols[j][i].clone()))
                    .collect();
                row.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d)
                .find(|&r| !m[r][c].is_zero())
                .expect("multiplication by a nonzero element is invertible");
            m.swap(c, p);
            let piv = m[c][c].clone();
            for x in m[c].iter_mut() {
                *x /= &piv;
            }
            for r in 0..d {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=d {
                        let t = &f * &m[c][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        let sol: Vec<BigRational> = m.into_iter().map(|row| row[d].clone()).collect();
        let b = self.from_coeffs(&sol)?;
        Ok(self.scale(&b, &BigRational::from_integer(a.den.clone())))
    }
}

pub type CycloMatrix = Vec<Vec<CycloElement>>;

/// `V` with entry `(i, j) = zeta^(j (i - 1))` for `i, j = 1..n`.
pub fn dft_matrix(field: &CyclotomicField) -> CycloMatrix {
    let n = field.conductor() as i64;
    (1..=n)
        .map(|i| (1..=n).map(|j| field.zeta_pow(j * (i - 1))).collect())
        .collect()
}

fn conjugate_transpose(field: &CyclotomicField, v: &CycloMatrix) -> CycloMatrix {
    let n = v.len();
    (0..n)
        .map(|i| (0..n).map(|j| field.conj(&v[j][i])).collect())
        .collect()
}

fn mat_mul(field: &CyclotomicField, a: &CycloMatrix, b: &CycloMatrix) -> CycloMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(field.zero(), |acc, k| {
                        field.add(&acc, &field.mul(&a[i][k], &b[k][j]))
                    })
                })
                .collect()
        })
        .collect()
}

/// `V V^H = n I` exactly in `Q(zeta_n)`.
pub fn dft_unitarity_check(n: u64) -> Result<bool> {
    let field = CyclotomicField::new(n)?;
    let v = dft_matrix(&field);
    let w = conjugate_transpose(&field, &v);
    let p = mat_mul(&field, &v, &w);
    let nn = BigRational::from_integer(BigInt::from(n));
    Ok(p.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| {
            let want = if i == j { nn.clone() } else { BigRational::zero() };
            x.as_rational() == Some(want)
        })
    }))
}

/// Determinant by fraction-free (Bareiss) elimination over `Q(zeta_n)`.
pub fn determinant(field: &CyclotomicField, m: &CycloMatrix) -> Result<CycloElement> {
    let n = m.len();
    if n == 0 {
        return Ok(field.one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev_inv = field.one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(field.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = field.sub(
                    &field.mul(&a[k][k], &a[i][j]),
                    &field.mul(&a[i][k], &a[k][j]),
                );
                a[i][j] = field.mul(&t, &prev_inv);
            }
        }
        prev_inv = field.inv(&a[k][k])?;
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { field.neg(&det) } else { det })
}

/// Result of checking `det(V) * conj(det(V)) = n^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetIdentity {
    pub det: CycloElement,
    /// `det * conj(det)`, when it is rational.
    pub norm: Option<BigRational>,
    pub expected: BigInt,
    pub holds: bool,
}

pub fn vandermonde_det_identity(n: u64) -> Result<DetIdentity> {
    let field = CyclotomicField::new(n)?;
    let v = dft_matrix(&field);
    let det = determinant(&field, &v)?;
    let norm = field.mul(&det, &field.conj(&det)).as_rational();
    let expected = BigInt::from(n).pow(n as u32);
    let holds = norm.as_ref() == Some(&BigRational::from_integer(expected.clone()));
    Ok(DetIdentity {
        det,
        norm,
        expected,
        holds,
    })
}

/// `sum c_i zeta_n^(e_i)` with distinct exponents in `[0, n)` and nonzero
/// integer coefficients, kept sorted by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VanishingSum {
    n: u64,
    terms: Vec<(i64, u64)>,
}

impl VanishingSum {
    pub fn new(n: u64, terms: Vec<(i64, u64)>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("vanishing sum: n must be positive"));
        }
        let mut terms = terms;
        terms.sort_by_key(|&(_, e)| e);
        for w in terms.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(invalid(format!("vanishing sum: exponent {} repeated", w[0].1)));
            }
        }
        if let Some(&(c, e)) = terms.iter().find(|&&(c, e)| c == 0 || e >= n) {
            return Err(invalid(format!("vanishing sum: bad term {c}*z^{e}")));
        }
        Ok(Self { n, terms })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// `(coefficient, exponent)` pairs, exponents ascending.
    pub fn terms(&self) -> &[(i64, u64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The sub-combination over term indices `subset`.
    pub fn evaluate(&self, field: &CyclotomicField, subset: &[usize]) -> Result<CycloElement> {
        if field.conductor() != self.n {
            return Err(invalid("vanishing sum: field conductor mismatch"));
        }
        let mut acc = field.zero();
        for &i in subset {
            let &(c, e) = self
                .terms
                .get(i)
                .ok_or_else(|| invalid(format!("subset index {i} out of range")))?;
            acc = field.add(
                &acc,
                &field.scale(&field.zeta_pow(e as i64), &BigRational::from_integer(c.into())),
            );
        }
        Ok(acc)
    }
}

impl fmt::Display for VanishingSum {
    /// e.g. `n=3: 1*z^0 + 1*z^1 + 1*z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n)?;
        for (i, (c, e)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            write!(f, "{sep}{c}*z^{e}")?;
        }
        Ok(())
    }
}

/// Whether the sub-combination over term indices `subset` is exactly zero.
pub fn subsum_vanishes(s: &VanishingSum, subset: &[usize]) -> Result<bool> {
    let field = CyclotomicField::new(s.n)?;
    Ok(s.evaluate(&field, subset)?.is_zero())
}

/// Integer coordinates of `zeta^k`, for fast exhaustive scans.
struct IntColumns {
    cols: Vec<Vec<i64>>,
}

impl IntColumns {
    fn new(field: &CyclotomicField) -> Result<Self> {
        let cols = field
            .powers
            .iter()
            .map(|p| {
                p.iter()
                    .map(|c| c.to_i64().ok_or(Error::Overflow("cyclotomic columns")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cols })
    }

    fn dim(&self) -> usize {
        self.cols[0].len()
    }

    fn combination_is_zero(&self, terms: impl Iterator<Item = (i64, usize)>) -> bool {
        let mut acc = vec![0i128; self.dim()];
        for (c, e) in terms {
            for (a, x) in acc.iter_mut().zip(&self.cols[e]) {
                *a += c as i128 * *x as i128;
            }
        }
        acc.iter().all(|&x| x == 0)
    }
}

/// Largest term count accepted by the proper-subsum scan.
pub const MAX_MINIMALITY_TERMS: usize = 26;

fn has_vanishing_proper_subsum(cols: &IntColumns, terms: &[(i64, u64)]) -> bool {
    let k = terms.len();
    let full = (1u64 << k) - 1;
    (1..full).any(|mask| {
        cols.combination_is_zero(
            (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (terms[i].0, terms[i].1 as usize)),
        )
    })
}

/// Outcome of checking a minimal vanishing sum against the divisibility
/// `n / gcd(n, n_1, ..., n_{k-1}) | prod_{p <= k} p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MannReport {
    pub terms: usize,
    pub reduced_order: u64,
    pub prime_product: BigUint,
    pub holds: bool,
}

/// Checks the divisibility bound on a vanishing sum that has a `zeta^0`
/// term and no vanishing proper nonempty subsum.
///
/// Inputs outside that hypothesis are rejected rather than reported as a
/// failure of the bound.
pub fn mann_condition_check(s: &VanishingSum) -> Result<MannReport> {
    if !s.terms.iter().any(|&(_, e)| e == 0) {
        return Err(Error::Hypothesis("sum has no zeta^0 term".into()));
    }
    if s.len() > MAX_MINIMALITY_TERMS {
        return Err(invalid(format!(
            "mann_condition_check: at most {MAX_MINIMALITY_TERMS} terms supported"
        )));
    }
    let field = CyclotomicField::new(s.n)?;
    let all: Vec<usize> = (0..s.len()).collect();
    if !s.evaluate(&field, &all)?.is_zero() {
        return Err(Error::Hypothesis(format!("{s} does not vanish")));
    }
    let cols = IntColumns::new(&field)?;
    if has_vanishing_proper_subsum(&cols, &s.terms) {
        return Err(Error::Hypothesis(format!("{s} has a vanishing proper subsum")));
    }
    let g = s.terms.iter().fold(s.n, |g, &(_, e)| g.gcd(&e));
    let reduced_order = s.n / g;
    let prime_product = primorial(s.len() as u64);
    let holds = (&prime_product % BigUint::from(reduced_order)).is_zero();
    Ok(MannReport {
        terms: s.len(),
        reduced_order,
        prime_product,
        holds,
    })
}

const RANK_PRIME: u64 = (1 << 61) - 1;

fn rank_mod_p(cols: &IntColumns, support: &[usize]) -> usize {
    let p = RANK_PRIME as i128;
    let dim = cols.dim();
    let mut rows: Vec<Vec<i128>> = (0..dim)
        .map(|i| {
            support
                .iter()
                .map(|&e| (cols.cols[e][i] as i128).rem_euclid(p))
                .collect()
        })
        .collect();
    let k = support.len();
    let mut rank = 0;
    for c in 0..k {
        let Some(r) = (rank..dim).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = crate::number::pow_mod(rows[rank][c] as u64, RANK_PRIME - 2, RANK_PRIME) as i128;
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r2 in 0..dim {
            if r2 != rank && rows[r2][c] != 0 {
                let f = rows[r2][c];
                for j in c..k {
                    rows[r2][j] = (rows[r2][j] - f * rows[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rational kernel basis of the columns indexed by `support`.
fn kernel_basis(cols: &IntColumns, support: &[usize]) -> Vec<Vec<BigRational>> {
    let dim = cols.dim();
    let k = support.len();
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            support
                .iter()
                .map(|&e| BigRational::from_integer(cols.cols[e][i].into()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..k {
        let Some(r) = (row..dim).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(row, r);
        let piv = m[row][c].clone();
        for x in m[row].iter_mut() {
            *x /= &piv;
        }
        for r2 in 0..dim {
            if r2 != row && !m[r2][c].is_zero() {
                let f = m[r2][c].clone();
                for j in c..k {
                    let t = &f * &m[row][j];
                    m[r2][j] -= t;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); k];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector.
fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

/// Coefficient vectors on `support` (whose first exponent is 0) that vanish,
/// have full support and a positive leading coefficient.
fn vanishing_on_support(cols: &IntColumns, support: &[usize], bound: i64) -> Vec<Vec<i64>> {
    let k = support.len();
    if rank_mod_p(cols, support) == k {
        return Vec::new();
    }
    let basis = kernel_basis(cols, support);
    if basis.is_empty() {
        return Vec::new();
    }
    // a coordinate that vanishes on the whole kernel rules out full support
    if (0..k).any(|i| basis.iter().all(|v| v[i].is_zero())) {
        return Vec::new();
    }
    let mut out = Vec::new();
    if basis.len() == 1 {
        let v = primitive_integer(&basis[0]);
        let Some(v) = v.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>() else {
            return out;
        };
        if v.contains(&0) {
            return out;
        }
        let vmax = v.iter().map(|x| x.abs()).max().unwrap();
        let sign = v[0].signum();
        for t in 1..=bound / vmax {
            out.push(v.iter().map(|x| x * t * sign).collect());
        }
    } else {
        let vals: Vec<i64> = (-bound..=bound).filter(|&c| c != 0).collect();
        let mut idx = vec![0usize; k];
        loop {
            let c: Vec<i64> = idx.iter().map(|&i| vals[i]).collect();
            if c[0] > 0
                && cols.combination_is_zero(c.iter().zip(support).map(|(&c, &e)| (c, e)))
            {
                out.push(c);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                idx[i] += 1;
                if idx[i] < vals.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }
    out
}

/// Every vanishing sum `sum c_i zeta_n^(e_i)` with distinct exponents
/// including 0, coefficients in `[-B, B] \ {0}` with the `zeta^0`
/// coefficient positive, at most `max_terms` terms, and no vanishing proper
/// nonempty subsum.
///
/// Ordered by term count, then exponents, then coefficients.
pub fn enumerate_vanishing_sums(
    n: u64,
    coeff_bound: i64,
    max_terms: usize,
) -> Result<Vec<VanishingSum>> {
    if coeff_bound < 1 {
        return Err(invalid("enumerate_vanishing_sums: coeff_bound must be at least 1"));
    }
    if max_terms as u64 > n {
        return Err(invalid("enumerate_vanishing_sums: max_terms exceeds n"));
    }
    if max_terms > MAX_MINIMALITY_TERMS {
        return Err(invalid(format!(
            "enumerate_vanishing_sums: at most {MAX_MINIMALITY_TERMS} terms supported"
        )));
    }
    let field = CyclotomicField::new(n)?;
    let cols = IntColumns::new(&field)?;
    let mut found = Vec::new();
    let mut support = vec![0usize];
    extend_supports(&cols, n as usize, max_terms, coeff_bound, &mut support, &mut found);
    let mut sums = found
        .into_iter()
        .map(|terms| VanishingSum { n, terms })
        .collect::<Vec<_>>();
    sums.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| {
                let ea = a.terms.iter().map(|t| t.1);
                let eb = b.terms.iter().map(|t| t.1);
                ea.cmp(eb)
            })
            .then_with(|| a.terms.cmp(&b.terms))
    });
    Ok(sums)
}

fn extend_supports(
    cols: &IntColumns,
    n: usize,
    max_terms: usize,
    bound: i64,
    support: &mut Vec<usize>,
    found: &mut Vec<Vec<(i64, u64)>>,
) {
    for coeffs in vanishing_on_support(cols, support, bound) {
        let terms: Vec<(i64, u64)> = coeffs
            .iter()
            .zip(support.iter())
            .map(|(&c, &e)| (c, e as u64))
            .collect();
        if !has_vanishing_proper_subsum(cols, &terms) {
            found.push(terms);
        }
    }
    if support.len() == max_terms {
        return;
    }
    let next = support.last().map_or(0, |&e| e + 1);
    for e in next..n {
        support.push(e);
        extend_supports(cols, n, max_terms, bound, support, found);
        support.pop();
    }
}
