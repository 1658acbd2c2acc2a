use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::number::is_perfect_power_of;
use crate::radicals::{
    independence_certificate, linear_form_certificate, IndependenceCertificate, LinearForm,
    Radical, RadicalSet,
};

/// Why `x^(1/m) + y^(1/n) - z^(1/r)` cannot vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GuardEvidence {
    /// The three radicals are pairwise, hence fully, independent over Q.
    Independent(IndependenceCertificate),
    /// Some radicals are rational multiples of each other; after merging
    /// them the collapsed coefficients do not all cancel.
    Collapsed(LinearForm),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardCertificate {
    /// `x^(1/m)`, `y^(1/n)`, `z^(1/r)`.
    pub radicals: [Radical; 3],
    pub evidence: GuardEvidence,
}

fn excluded(what: &str, v: u64, k: u32) -> Error {
    Error::Hypothesis(format!("{what} = {v} is a perfect {k}-th power"))
}

/// Certifies `x^(1/m) + y^(1/n) != z^(1/r)`.
///
/// Requires every value at least 2, every exponent at least 2,
/// `gcd(x, y) = 1`, and no base a perfect power for its own exponent.
pub fn exactness_guard(x: u64, m: u32, y: u64, n: u32, z: u64, r: u32) -> Result<GuardCertificate> {
    for (name, v) in [("x", x), ("y", y), ("z", z)] {
        if v < 2 {
            return Err(Error::Hypothesis(format!("{name} = {v} must be at least 2")));
        }
    }
    if m < 2 || n < 2 || r < 2 {
        return Err(Error::Hypothesis("exponents must be at least 2".into()));
    }
    if x.gcd(&y) != 1 {
        return Err(Error::Hypothesis(format!("gcd({x}, {y}) != 1")));
    }
    for (name, v, k) in [("x", x, m), ("y", y, n), ("z", z, r)] {
        if is_perfect_power_of(v, k) {
            return Err(excluded(name, v, k));
        }
    }
    let radicals = [
        Radical::root(x, m as u64)?,
        Radical::root(y, n as u64)?,
        Radical::root(z, r as u64)?,
    ];
    let as_set = RadicalSet::new(radicals.to_vec()).ok();
    if let Some(set) = as_set {
        let cert = independence_certificate(&set);
        if cert.is_independent() {
            return Ok(GuardCertificate {
                radicals,
                evidence: GuardEvidence::Independent(cert),
            });
        }
    }
    let one = BigRational::one();
    let form = linear_form_certificate(&[
        (one.clone(), radicals[0].clone()),
        (one.clone(), radicals[1].clone()),
        (-one, radicals[2].clone()),
    ]);
    if !form.is_nonzero() {
        return Err(Error::Hypothesis(format!(
            "{x}^(1/{m}) + {y}^(1/{n}) = {z}^(1/{r}) holds exactly"
        )));
    }
    Ok(GuardCertificate {
        radicals,
        evidence: GuardEvidence::Collapsed(form),
    })
}
