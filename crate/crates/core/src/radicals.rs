//! Real radicals `±x^(r/s)` in canonical prime-exponent form, and the
//! independence and degree machinery over the rationals built on them.
//!
//! A [`Radical`] stores a sign and a map from primes to nonzero reduced
//! rational exponents, so `4^(1/4)` and `2^(1/2)` are the same value. With that
//! form, rationality of a radical is a denominator check, and two radicals are
//! linearly dependent over Q exactly when their quotient is rational.
//!
//! For a set of real radicals, pairwise independence over Q already implies
//! full linear independence. [`independence_certificate`] reports one
//! witness per pair and nothing more is needed to certify the whole set.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::interval::{root_enclosure, Interval};
use crate::lattice::index_in_integer_lattice;
use crate::number::factor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn flip_if(self, flip: bool) -> Sign {
        match (self, flip) {
            (s, false) => s,
            (Sign::Positive, true) => Sign::Negative,
            (Sign::Negative, true) => Sign::Positive,
        }
    }
}

/// `sign * prod p^(e_p)` with every `e_p` a nonzero reduced fraction.
///
/// Zero cannot be represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radical {
    sign: Sign,
    exponents: BTreeMap<u64, BigRational>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Radical {
    pub fn one() -> Self {
        Radical {
            sign: Sign::Positive,
            exponents: BTreeMap::new(),
        }
    }

    /// `base^(1/k)`.
    pub fn root(base: u64, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(invalid("root index must be positive"));
        }
        radical_from(base, &rat(1, k as i64), Sign::Positive)
    }

    /// `base^(num/den)`.
    pub fn power(base: u64, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(invalid("exponent denominator must be nonzero"));
        }
        let mut r = Radical::one();
        r.absorb(base, &rat(num, den))?;
        Ok(r)
    }

    /// The nonzero rational `q` as a radical.
    pub fn from_rational(q: &BigRational) -> Result<Self> {
        if q.is_zero() {
            return Err(invalid("zero is not a radical"));
        }
        let mut r = Radical::one();
        if q.is_negative() {
            r.sign = Sign::Negative;
        }
        for (part, e) in [(q.numer(), 1i64), (q.denom(), -1)] {
            let v = part
                .abs()
                .to_u64()
                .ok_or(Error::Overflow("Radical::from_rational"))?;
            r.absorb(v, &rat(e, 1))?;
        }
        Ok(r)
    }

    /// Multiplies in `base^exponent`.
    fn absorb(&mut self, base: u64, exponent: &BigRational) -> Result<()> {
        if base == 0 {
            return Err(invalid("radical base must be positive"));
        }
        for &(p, mult) in factor(base)?.factors() {
            let add = exponent * BigRational::from_integer(mult.into());
            let e = self.exponents.entry(p).or_insert_with(BigRational::zero);
            *e += add;
            if e.is_zero() {
                self.exponents.remove(&p);
            }
        }
        Ok(())
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Negative
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }

    pub fn abs(&self) -> Self {
        self.clone().with_sign(Sign::Positive)
    }

    pub fn neg(&self) -> Self {
        let s = self.sign.flip_if(true);
        self.clone().with_sign(s)
    }

    /// Prime to exponent map, primes ascending.
    pub fn exponents(&self) -> &BTreeMap<u64, BigRational> {
        &self.exponents
    }

    /// Least `n` with `self^n` rational: the lcm of the exponent denominators.
    pub fn root_degree(&self) -> BigUint {
        self.exponents
            .values()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
            .to_biguint()
            .expect("denominators are positive")
    }

    pub fn is_rational(&self) -> bool {
        self.exponents.values().all(|e| e.is_integer())
    }

    /// Exact value when the radical is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.is_rational() {
            return None;
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&p, e) in &self.exponents {
            let k = e.to_integer();
            let pk = BigInt::from(p).pow(k.abs().to_u32()?);
            if k.is_positive() {
                num *= pk;
            } else {
                den *= pk;
            }
        }
        if self.is_negative() {
            num = -num;
        }
        Some(BigRational::new(num, den))
    }

    pub fn pow(&self, k: i64) -> Radical {
        if k == 0 {
            return Radical::one();
        }
        let kq = BigRational::from_integer(k.into());
        let sign = if self.is_negative() && k.rem_euclid(2) == 1 {
            Sign::Negative
        } else {
            Sign::Positive
        };
        Radical {
            sign,
            exponents: self.exponents.iter().map(|(&p, e)| (p, e * &kq)).collect(),
        }
    }

    pub fn recip(&self) -> Radical {
        Radical {
            sign: self.sign,
            exponents: self.exponents.iter().map(|(&p, e)| (p, -e)).collect(),
        }
    }

    /// Writes `|self| = (num/den)^(1/d)` with `d` the root degree.
    pub fn as_rational_root(&self) -> (BigUint, BigUint, BigUint) {
        let d = BigInt::from(self.root_degree());
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&p, e) in &self.exponents {
            let k = (e * BigRational::from_integer(d.clone())).to_integer();
            let pk = BigUint::from(p).pow(k.abs().to_u32().expect("exponent fits u32"));
            if k.is_positive() {
                num *= pk;
            } else {
                den *= pk;
            }
        }
        (num, den, d.to_biguint().unwrap())
    }

    /// Certified enclosure of the real value, of width at most `2^-bits`
    /// before the sign is applied.
    pub fn enclose(&self, bits: u32) -> Result<Interval> {
        let (num, den, d) = self.as_rational_root();
        let d = d.to_u32().ok_or(Error::Overflow("Radical::enclose"))?;
        let iv = root_enclosure(&num, &den, d, bits);
        Ok(if self.is_negative() { iv.neg() } else { iv })
    }
}

impl Mul for &Radical {
    type Output = Radical;

    fn mul(self, rhs: &Radical) -> Radical {
        let mut exponents = self.exponents.clone();
        for (&p, e) in &rhs.exponents {
            let slot = exponents.entry(p).or_insert_with(BigRational::zero);
            *slot += e;
            if slot.is_zero() {
                exponents.remove(&p);
            }
        }
        Radical {
            sign: self.sign.flip_if(rhs.is_negative()),
            exponents,
        }
    }
}

impl Mul for Radical {
    type Output = Radical;

    fn mul(self, rhs: Radical) -> Radical {
        &self * &rhs
    }
}

impl Div for &Radical {
    type Output = Radical;

    fn div(self, rhs: &Radical) -> Radical {
        self * &rhs.recip()
    }
}

impl Div for Radical {
    type Output = Radical;

    fn div(self, rhs: Radical) -> Radical {
        &self / &rhs
    }
}

/// `sign * base^exponent` in canonical form.
pub fn radical_from(base: u64, exponent: &BigRational, sign: Sign) -> Result<Radical> {
    if base == 0 {
        return Err(invalid("radical_from: base must be positive"));
    }
    if !exponent.is_positive() {
        return Err(invalid("radical_from: exponent must be positive"));
    }
    let mut r = Radical::one().with_sign(sign);
    r.absorb(base, exponent)?;
    Ok(r)
}

impl fmt::Display for Radical {
    /// `[-]p1^(a1/b1)*p2^(a2/b2)*...` with primes ascending; `1` or `-1` when
    /// the exponent map is empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            f.write_str("-")?;
        }
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{p}^({}/{})", e.numer(), e.denom())?;
        }
        Ok(())
    }
}

impl FromStr for Radical {
    type Err = Error;

    /// Accepts the printed form, and more generally any `*`-product of
    /// `base`, `base^k`, `base^(k)` or `base^(num/den)` factors with
    /// arbitrary positive bases.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("empty radical `{s}`")));
        }
        let mut r = Radical::one();
        for tok in body.split('*') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), parse_exponent(e.trim())?),
                None => (tok, BigRational::one()),
            };
            let base: u64 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad base in `{tok}`")))?;
            if base == 0 {
                return Err(Error::Parse("zero base".into()));
            }
            r.absorb(base, &exp)?;
        }
        if negative {
            r.sign = Sign::Negative;
        }
        Ok(r)
    }
}

fn parse_exponent(e: &str) -> Result<BigRational> {
    let inner = e
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(e);
    let bad = || Error::Parse(format!("bad exponent `{e}`"));
    let (n, d) = match inner.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (inner.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// `{a, b}` is linearly independent over Q iff `a / b` is irrational.
/// Signs play no role.
pub fn pairwise_independent(a: &Radical, b: &Radical) -> bool {
    !(a / b).is_rational()
}

/// At least two distinct radicals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalSet {
    elements: Vec<Radical>,
}

impl RadicalSet {
    pub fn new(elements: Vec<Radical>) -> Result<Self> {
        if elements.len() < 2 {
            return Err(invalid("a radical set needs at least two elements"));
        }
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].contains(a) {
                return Err(invalid(format!("duplicate element {a}")));
            }
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[Radical] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Outcome of the membership test for the family of pairwise independent
/// radical sets over Q inside R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub member: bool,
    /// `n_a` for each element.
    pub root_degrees: Vec<BigUint>,
    /// First (lexicographic) dependent pair, if any.
    pub failing_pair: Option<(usize, usize)>,
}

pub fn theta_membership(set: &RadicalSet) -> ThetaReport {
    let el = set.elements();
    let failing_pair = (0..el.len())
        .flat_map(|i| (i + 1..el.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !pairwise_independent(&el[i], &el[j]));
    ThetaReport {
        member: failing_pair.is_none(),
        root_degrees: el.iter().map(Radical::root_degree).collect(),
        failing_pair,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// `a / b` has this prime carrying a non-integral exponent.
    IrrationalRatio { prime: u64, exponent: BigRational },
    /// `a / b` equals this rational.
    RationalRatio(BigRational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    pub evidence: Evidence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Independent,
    Dependent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceCertificate {
    pub verdict: Verdict,
    pub witnesses: Vec<PairWitness>,
}

impl IndependenceCertificate {
    pub fn is_independent(&self) -> bool {
        self.verdict == Verdict::Independent
    }

    /// Pairs whose ratio is rational.
    pub fn dependent_pairs(&self) -> impl Iterator<Item = &PairWitness> {
        self.witnesses
            .iter()
            .filter(|w| matches!(w.evidence, Evidence::RationalRatio(_)))
    }
}

fn pair_evidence(a: &Radical, b: &Radical) -> Evidence {
    let q = a / b;
    match q.exponents.iter().find(|(_, e)| !e.is_integer()) {
        Some((&prime, e)) => Evidence::IrrationalRatio {
            prime,
            exponent: e.clone(),
        },
        None => Evidence::RationalRatio(q.to_rational().expect("ratio is rational")),
    }
}

/// Certifies linear (in)dependence of a set of real radicals over Q.
///
/// When every pair carries an irrational-ratio witness the set is linearly
/// independent over Q as a whole; otherwise a rational ratio exhibits an
/// explicit two-term relation.
pub fn independence_certificate(set: &RadicalSet) -> IndependenceCertificate {
    let el = set.elements();
    let mut witnesses = Vec::new();
    for i in 0..el.len() {
        for j in i + 1..el.len() {
            witnesses.push(PairWitness {
                i,
                j,
                evidence: pair_evidence(&el[i], &el[j]),
            });
        }
    }
    let verdict = if witnesses
        .iter()
        .all(|w| matches!(w.evidence, Evidence::IrrationalRatio { .. }))
    {
        Verdict::Independent
    } else {
        Verdict::Dependent
    };
    IndependenceCertificate { verdict, witnesses }
}

/// Terms of a linear form that are rational multiples of one representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyClass {
    pub representative: usize,
    /// `(index, ratio)` with `term[index] = ratio * term[representative]`.
    pub members: Vec<(usize, BigRational)>,
    /// Sum of `coeff * ratio` over the members.
    pub coefficient: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearForm {
    /// The classes' representatives are pairwise independent, hence
    /// independent, and at least one collapsed coefficient is nonzero.
    Nonzero { classes: Vec<DependencyClass> },
    /// Every collapsed coefficient cancels: the form is identically zero.
    Vanishes { classes: Vec<DependencyClass> },
}

impl LinearForm {
    pub fn is_nonzero(&self) -> bool {
        matches!(self, LinearForm::Nonzero { .. })
    }
}

/// Decides whether `sum c_i r_i` is zero, exactly.
///
/// Terms are grouped by rational ratio; distinct groups are pairwise
/// independent, so the sum vanishes iff every group's collapsed coefficient
/// does.
pub fn linear_form_certificate(terms: &[(BigRational, Radical)]) -> LinearForm {
    let mut classes: Vec<DependencyClass> = Vec::new();
    for (idx, (c, r)) in terms.iter().enumerate() {
        let hit = classes.iter_mut().find_map(|cl| {
            let ratio = r / &terms[cl.representative].1;
            ratio.to_rational().map(|q| (cl, q))
        });
        match hit {
            Some((cl, q)) => {
                cl.coefficient += c * &q;
                cl.members.push((idx, q));
            }
            None => classes.push(DependencyClass {
                representative: idx,
                members: vec![(idx, BigRational::one())],
                coefficient: c.clone(),
            }),
        }
    }
    if classes.iter().any(|cl| !cl.coefficient.is_zero()) {
        LinearForm::Nonzero { classes }
    } else {
        LinearForm::Vanishes { classes }
    }
}

/// Primes occurring in `xs`, and each radical's exponent vector over them.
fn exponent_matrix(xs: &[Radical]) -> (Vec<u64>, Vec<Vec<BigRational>>) {
    let mut primes: Vec<u64> = xs.iter().flat_map(|x| x.exponents.keys().copied()).collect();
    primes.sort_unstable();
    primes.dedup();
    let rows = xs
        .iter()
        .map(|x| {
            primes
                .iter()
                .map(|p| x.exponents.get(p).cloned().unwrap_or_else(BigRational::zero))
                .collect()
        })
        .collect();
    (primes, rows)
}

/// Degree over Q of the field generated by `xs`.
///
/// This is the order of the group generated by the exponent vectors modulo
/// `Z^P`, i.e. the index of `Z^P` in `Z^P + sum Z v_i`. After clearing the
/// common denominator `D` the index is `D^P / [Z^P : D L]`, and the latter is
/// read off a Hermite normal form. Signs are irrelevant: `Q(-x) = Q(x)`.
pub fn lattice_degree(xs: &[Radical]) -> BigUint {
    let (primes, rows) = exponent_matrix(xs);
    let dim = primes.len();
    if dim == 0 {
        return BigUint::one();
    }
    let d = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let dq = BigRational::from_integer(d.clone());
    let mut gens: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|e| (e * &dq).to_integer()).collect())
        .collect();
    for i in 0..dim {
        let mut unit = vec![BigInt::zero(); dim];
        unit[i] = d.clone();
        gens.push(unit);
    }
    let sub_index = index_in_integer_lattice(&gens, dim).expect("contains D Z^P");
    let total = d.pow(dim as u32);
    let (q, r) = total.div_rem(&sub_index);
    debug_assert!(r.is_zero());
    q.to_biguint().expect("positive index")
}

fn check_generators(op: &str, xs: &[Radical]) -> Result<()> {
    if xs.is_empty() {
        return Err(invalid(format!("{op}: generator list is empty")));
    }
    if let Some(x) = xs.iter().find(|x| x.is_rational()) {
        return Err(invalid(format!("{op}: generator {x} is rational")));
    }
    Ok(())
}

fn degree_product(xs: &[Radical]) -> BigUint {
    xs.iter().map(Radical::root_degree).product()
}

/// True iff `prod x_i^(e_i)` rational forces `n_i | e_i` for every `i`.
///
/// The integer vectors `e` with rational product form a lattice containing
/// `prod n_i Z`; the condition holds iff its index in `Z^r` is the full
/// `prod n_i`, which equals [`lattice_degree`].
pub fn multiplicative_condition_check(xs: &[Radical]) -> Result<bool> {
    check_generators("multiplicative_condition_check", xs)?;
    Ok(lattice_degree(xs) == degree_product(xs))
}

/// Upper bound on `prod n_i` accepted by the brute-force check.
pub const BRUTE_FORCE_LIMIT: u64 = 50_000_000;

/// Same decision as [`multiplicative_condition_check`] by scanning every
/// `e` in the box `0 <= e_i < n_i` for an integral `sum e_i v_i`.
pub fn multiplicative_condition_check_brute(xs: &[Radical]) -> Result<bool> {
    check_generators("multiplicative_condition_check_brute", xs)?;
    let degrees: Vec<u64> = xs
        .iter()
        .map(|x| x.root_degree().to_u64())
        .collect::<Option<_>>()
        .ok_or(Error::Overflow("multiplicative_condition_check_brute"))?;
    let total = degrees
        .iter()
        .try_fold(1u64, |a, &b| a.checked_mul(b))
        .filter(|&t| t <= BRUTE_FORCE_LIMIT)
        .ok_or_else(|| invalid("multiplicative_condition_check_brute: box too large"))?;
    let (_, rows) = exponent_matrix(xs);
    let dim = rows[0].len();
    let mut e = vec![0u64; xs.len()];
    let mut acc = vec![BigRational::zero(); dim];
    for _ in 1..total {
        // odometer step, keeping acc = sum e_i v_i
        for i in 0..e.len() {
            e[i] += 1;
            if e[i] < degrees[i] {
                for (a, v) in acc.iter_mut().zip(&rows[i]) {
                    *a += v;
                }
                break;
            }
            let back = BigRational::from_integer((degrees[i] - 1).into());
            for (a, v) in acc.iter_mut().zip(&rows[i]) {
                *a -= v * &back;
            }
            e[i] = 0;
        }
        if acc.iter().all(BigRational::is_integer) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[Q(x_1, ..., x_r) : Q] = n_1 ... n_r` for generators meeting the
/// multiplicative condition.
pub fn extension_degree(xs: &[Radical]) -> Result<BigUint> {
    if !multiplicative_condition_check(xs)? {
        return Err(Error::Hypothesis(
            "extension_degree: generators fail the multiplicative condition; reduce them or use lattice_degree".into(),
        ));
    }
    Ok(degree_product(xs))
}

/// Degree over Q of `Q(2^(1/2), 3^(1/3), ..., n^(1/n))`, which is also the
/// degree of `1 + 2^(1/2) + ... + n^(1/n)`.
pub fn sierpinski_degree(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(invalid("sierpinski_degree: n must be at least 2"));
    }
    let gens = (2..=n)
        .map(|k| Radical::root(k, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(lattice_degree(&gens))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumRationality {
    Rational(BigRational),
    Irrational,
}

/// `sum q_i r_i` with positive `q_i` and positive radicals `r_i` is rational
/// iff every `r_i` is.
pub fn positive_sum_rationality(terms: &[(BigRational, Radical)]) -> Result<SumRationality> {
    for (q, r) in terms {
        if !q.is_positive() {
            return Err(invalid("positive_sum_rationality: coefficients must be positive"));
        }
        if r.is_negative() {
            return Err(invalid("positive_sum_rationality: radicals must be positive"));
        }
    }
    let mut sum = BigRational::zero();
    for (q, r) in terms {
        match r.to_rational() {
            Some(v) => sum += q * v,
            None => return Ok(SumRationality::Irrational),
        }
    }
    Ok(SumRationality::Rational(sum))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Radical {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        rat(n, d)
    }

    #[test]
    fn construction_canonicalizes() {
        let eight = radical_from(8, &q(1, 3), Sign::Positive).unwrap();
        assert!(eight.is_rational());
        assert_eq!(eight.to_rational(), Some(q(2, 1)));
        assert_eq!(eight.to_string(), "2^(1/1)");
        let four = radical_from(4, &q(1, 4), Sign::Positive).unwrap();
        assert_eq!(four, Radical::root(2, 2).unwrap());
        assert_eq!(Radical::root(433, 6).unwrap().to_string(), "433^(1/6)");
        assert!(radical_from(0, &q(1, 2), Sign::Positive).is_err());
        assert!(radical_from(2, &q(-1, 2), Sign::Positive).is_err());
        assert_eq!(radical_from(1, &q(1, 2), Sign::Negative).unwrap().to_string(), "-1");
    }

    #[test]
    fn root_degrees() {
        assert_eq!(Radical::from_rational(&q(5, 1)).unwrap().root_degree(), BigUint::one());
        assert_eq!(Radical::root(2, 2).unwrap().root_degree(), BigUint::from(2u32));
        assert_eq!(Radical::root(433, 6).unwrap().root_degree(), BigUint::from(6u32));
        assert_eq!(r("2^(1/2)*3^(1/3)").root_degree(), BigUint::from(6u32));
    }

    #[test]
    fn arithmetic() {
        let s2 = Radical::root(2, 2).unwrap();
        let s3 = Radical::root(3, 2).unwrap();
        assert_eq!(&s2 * &s2, r("2^(1/1)"));
        assert_eq!((&s2 / &s3).to_string(), "2^(1/2)*3^(-1/2)");
        assert_eq!(Radical::root(433, 6).unwrap().pow(6), r("433"));
        assert_eq!(s2.pow(0), Radical::one());
        let neg = s2.neg();
        assert_eq!(neg.pow(2), r("2"));
        assert_eq!(neg.pow(3), r("-2^(3/2)"));
        assert_eq!(neg.pow(-1), r("-2^(-1/2)"));
    }

    #[test]
    fn rationality() {
        assert!(r("2^(1/1)").is_rational());
        assert!(!r("2^(1/2)").is_rational());
        let a = Radical::root(433, 6).unwrap();
        let b = Radical::power(433, 5, 6).unwrap();
        assert!((&a * &b).is_rational());
        assert_eq!(r("-2^(-2/1)*3^(1/1)").to_rational(), Some(q(-3, 4)));
    }

    #[test]
    fn pairwise_examples() {
        let s2 = Radical::root(2, 2).unwrap();
        let s8 = Radical::root(8, 2).unwrap();
        let s3 = Radical::root(3, 2).unwrap();
        assert!(!pairwise_independent(&s2, &s8));
        assert!(pairwise_independent(&s2, &s3));
        let a = Radical::root(433, 6).unwrap();
        let b = Radical::root(972, 6).unwrap();
        assert!(pairwise_independent(&a, &b));
        assert_eq!((&a / &b).to_string(), "2^(-1/3)*3^(-5/6)*433^(1/6)");
        assert!(!pairwise_independent(&s2, &s2.neg()));
    }

    #[test]
    fn theta_examples() {
        let set = |v: &[&str]| RadicalSet::new(v.iter().map(|s| r(s)).collect()).unwrap();
        assert!(theta_membership(&set(&["2^(1/2)", "3^(1/2)"])).member);
        let bad = theta_membership(&set(&["2^(1/2)", "8^(1/2)"]));
        assert!(!bad.member);
        assert_eq!(bad.failing_pair, Some((0, 1)));
        assert!(theta_membership(&set(&["433^(1/6)", "972^(1/6)", "42089^(1/6)"])).member);
        assert!(RadicalSet::new(vec![r("2")]).is_err());
        assert!(RadicalSet::new(vec![r("4^(1/2)"), r("2")]).is_err());
    }

    #[test]
    fn certificates() {
        let set = |v: &[&str]| RadicalSet::new(v.iter().map(|s| r(s)).collect()).unwrap();
        let c = independence_certificate(&set(&["2^(1/2)", "3^(1/2)", "6^(1/2)"]));
        assert!(c.is_independent());
        assert_eq!(c.witnesses.len(), 3);
        let c = independence_certificate(&set(&["2^(1/2)", "3*2^(1/2)"]));
        assert_eq!(c.verdict, Verdict::Dependent);
        assert_eq!(
            c.witnesses[0].evidence,
            Evidence::RationalRatio(q(1, 3))
        );
        let c = independence_certificate(&set(&["433^(1/6)", "972^(1/6)", "42089^(1/6)"]));
        assert!(c.is_independent());
    }

    #[test]
    fn linear_forms() {
        let one = BigRational::one;
        let terms = vec![
            (one(), r("2^(1/2)")),
            (one(), r("3^(1/2)")),
            (-one(), r("8^(1/2)")),
        ];
        let lf = linear_form_certificate(&terms);
        assert!(lf.is_nonzero());
        let terms = vec![(q(2, 1), r("2^(1/2)")), (-one(), r("8^(1/2)"))];
        assert!(!linear_form_certificate(&terms).is_nonzero());
    }

    #[test]
    fn multiplicative_condition_examples() {
        let x = [r("2^(1/2)"), r("3^(1/3)")];
        assert!(multiplicative_condition_check(&x).unwrap());
        assert!(multiplicative_condition_check_brute(&x).unwrap());
        let y = [r("2^(1/2)"), r("8^(1/2)")];
        assert!(!multiplicative_condition_check(&y).unwrap());
        assert!(!multiplicative_condition_check_brute(&y).unwrap());
        let z = [r("2^(1/2)")];
        assert!(multiplicative_condition_check(&z).unwrap());
        assert!(multiplicative_condition_check(&[]).is_err());
        assert!(multiplicative_condition_check(&[r("4")]).is_err());
    }

    #[test]
    fn degrees() {
        let d = |v: &[&str]| lattice_degree(&v.iter().map(|s| r(s)).collect::<Vec<_>>());
        assert_eq!(d(&["2^(1/2)", "8^(1/2)"]), BigUint::from(2u32));
        assert_eq!(d(&["2^(1/2)", "3^(1/3)"]), BigUint::from(6u32));
        assert_eq!(d(&["4^(1/4)"]), BigUint::from(2u32));
        assert_eq!(d(&["-2^(1/2)"]), BigUint::from(2u32));
        let x = [r("2^(1/2)"), r("3^(1/3)"), r("5^(1/5)")];
        assert_eq!(extension_degree(&x).unwrap(), BigUint::from(30u32));
        assert_eq!(extension_degree(&x[..1]).unwrap(), BigUint::from(2u32));
        assert!(matches!(
            extension_degree(&[r("2^(1/2)"), r("8^(1/2)")]),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn sierpinski_chain() {
        let got: Vec<u64> = (2..=6)
            .map(|n| sierpinski_degree(n).unwrap().to_u64().unwrap())
            .collect();
        assert_eq!(got, vec![2, 6, 6, 30, 180]);
        assert!(sierpinski_degree(1).is_err());
    }

    #[test]
    fn positive_sums() {
        let terms = vec![(q(1, 1), r("2")), (q(1, 1), r("3"))];
        assert_eq!(
            positive_sum_rationality(&terms).unwrap(),
            SumRationality::Rational(q(5, 1))
        );
        let terms = vec![(q(1, 1), r("2^(1/2)"))];
        assert_eq!(positive_sum_rationality(&terms).unwrap(), SumRationality::Irrational);
        let terms = vec![(q(1, 1), r("433^(1/6)")), (q(1, 1), r("972^(1/6)"))];
        assert_eq!(positive_sum_rationality(&terms).unwrap(), SumRationality::Irrational);
        assert!(positive_sum_rationality(&[(q(-1, 1), r("2"))]).is_err());
        assert!(positive_sum_rationality(&[(q(1, 1), r("-2"))]).is_err());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "-", "0^(1/2)", "2^(1/0)", "x^(1/2)", "2^(a/2)"] {
            assert!(bad.parse::<Radical>().is_err(), "{bad}");
        }
    }

    #[test]
    fn enclosure_contains_value() {
        let iv = r("2^(1/2)").enclose(64).unwrap();
        assert!((iv.approx() - std::f64::consts::SQRT_2).abs() < 1e-15);
        let iv = r("-2^(-1/2)*3^(1/3)").enclose(64).unwrap();
        let expect = -(3f64.cbrt()) / 2f64.sqrt();
        assert!((iv.approx() - expect).abs() < 1e-14);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn radical() -> impl Strategy<Value = Radical> {
            (
                any::<bool>(),
                proptest::collection::vec((1u64..60, -7i64..=7, 1i64..=6), 0..4),
            )
                .prop_map(|(neg, parts)| {
                    let mut x = Radical::one();
                    for (b, n, d) in parts {
                        x = &x * &Radical::power(b, n, d).unwrap();
                    }
                    if neg {
                        x.neg()
                    } else {
                        x
                    }
                })
        }

        proptest! {
            #[test]
            fn print_parse_round_trip(x in radical()) {
                let back: Radical = x.to_string().parse().unwrap();
                prop_assert_eq!(back, x);
            }

            #[test]
            fn canonical_reconstruction(b in 1u64..10_000, n in 1i64..12, d in 1i64..12) {
                let x = Radical::power(b, n, d).unwrap();
                let again = x
                    .exponents()
                    .iter()
                    .fold(Radical::one(), |acc, (&p, e)| {
                        let part = if e.is_positive() {
                            radical_from(p, e, Sign::Positive).unwrap()
                        } else {
                            radical_from(p, &-e, Sign::Positive).unwrap().recip()
                        };
                        &acc * &part
                    });
                prop_assert_eq!(again, x);
            }

            #[test]
            fn group_laws(a in radical(), b in radical(), c in radical()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &a.recip(), Radical::one());
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
                prop_assert_eq!(a.pow(2), &a * &a);
                prop_assert_eq!(a.pow(-3), a.pow(3).recip());
            }

            #[test]
            fn independence_is_irrational_ratio(a in radical(), b in radical()) {
                prop_assert_eq!(pairwise_independent(&a, &b), !(&a / &b).is_rational());
            }

            #[test]
            fn brute_and_lattice_conditions_agree(
                gens in proptest::collection::vec((2u64..40, 1i64..=5, 2i64..=6), 1..4)
            ) {
                let xs: Vec<Radical> = gens
                    .iter()
                    .map(|&(b, n, d)| Radical::power(b, n, d).unwrap())
                    .filter(|x| !x.is_rational())
                    .collect();
                prop_assume!(!xs.is_empty());
                prop_assert_eq!(
                    multiplicative_condition_check(&xs).unwrap(),
                    multiplicative_condition_check_brute(&xs).unwrap()
                );
                if multiplicative_condition_check(&xs).unwrap() {
                    prop_assert_eq!(extension_degree(&xs).unwrap(), lattice_degree(&xs));
                }
            }
        }
    }
}
