//! Orbit of 0 in `Z_n` under `phi(x) = 1 + dx` and `inv(x) = -x`.
//!
//! For `gcd(d, n) = 1` the orbit is all of `Z_n`. Besides the breadth-first
//! closure, [`constructive_path`] follows the explicit recipe: with `r` the
//! order of `d` mod `n` and `T = (d-1) r`, `phi^T` is the identity, and the
//! word `phi^(T-1) inv phi inv` maps `x` to `x - 2`. Repeating it walks
//! `0, -2, -4, ...`, which covers `Z_n` for odd `n` and the even residues for
//! even `n`; one extra `phi` reaches the odd ones.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;

use crate::error::{invalid, Error, Result};
use crate::number::{inverse_mod, multiplicative_order, normalize_residue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitStep {
    Phi,
    Inv,
}

/// A sequence of steps applied left to right, starting from 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word(pub Vec<OrbitStep>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[OrbitStep] {
        &self.0
    }
}

impl fmt::Display for Word {
    /// Run-length form, e.g. `phi^5 inv phi inv`; `id` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let s = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == s {
                j += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let name = match s {
                OrbitStep::Phi => "phi",
                OrbitStep::Inv => "inv",
            };
            if j - i == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// The two maps for fixed `n` and `d`, with `d` normalized into `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitMaps {
    n: u64,
    d: u64,
}

impl OrbitMaps {
    pub fn new(n: u64, d: i64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("orbit: n must be positive"));
        }
        let dn = normalize_residue(d as i128, n);
        let g = dn.gcd(&n);
        if g != 1 && n > 1 {
            return Err(Error::NotCoprime {
                value: d,
                modulus: n,
                gcd: g,
            });
        }
        Ok(Self { n, d: dn })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn multiplier(&self) -> u64 {
        self.d
    }

    pub fn phi(&self, x: u64) -> u64 {
        ((1 + self.d as u128 * x as u128) % self.n as u128) as u64
    }

    /// `e (x - 1)` with `e d = 1 (mod n)`.
    pub fn phi_inverse(&self, x: u64) -> u64 {
        let e = inverse_mod(self.d, self.n).expect("d is a unit");
        let xm1 = (x as i128 - 1).rem_euclid(self.n as i128) as u128;
        ((e as u128 * xm1) % self.n as u128) as u64
    }

    pub fn inv(&self, x: u64) -> u64 {
        (self.n - x % self.n) % self.n
    }

    pub fn apply(&self, step: OrbitStep, x: u64) -> u64 {
        match step {
            OrbitStep::Phi => self.phi(x),
            OrbitStep::Inv => self.inv(x),
        }
    }

    /// Endpoint of `word` started at 0.
    pub fn replay(&self, word: &Word) -> u64 {
        word.0.iter().fold(0, |x, &s| self.apply(s, x))
    }
}

/// Breadth-first closure of `{0}` under both maps, as a membership table.
pub fn orbit_closure(n: u64, d: i64) -> Result<Vec<bool>> {
    let maps = OrbitMaps::new(n, d)?;
    let n = usize::try_from(n).map_err(|_| Error::Overflow("orbit_closure"))?;
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0u64]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for y in [maps.phi(x), maps.inv(x)] {
            if !seen[y as usize] {
                seen[y as usize] = true;
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Number of residues reached by [`orbit_closure`].
pub fn orbit_size(n: u64, d: i64) -> Result<u64> {
    Ok(orbit_closure(n, d)?.iter().filter(|&&b| b).count() as u64)
}

/// Length bound `n ((d-1) r + 3)` on recipe words.
pub fn word_length_bound(n: u64, d: i64) -> Result<u64> {
    let maps = OrbitMaps::new(n, d)?;
    let r = multiplicative_order(maps.d as i64, n)?;
    Ok(n * (maps.d.saturating_sub(1) * r + 3))
}

/// Builds the recipe word reaching `target` from 0 and checks it by replay.
pub fn constructive_path(n: u64, d: i64, target: u64) -> Result<Word> {
    let maps = OrbitMaps::new(n, d)?;
    if target >= n {
        return Err(invalid(format!("orbit: target {target} not below n = {n}")));
    }
    let d = maps.d;
    let mut steps = Vec::new();
    if n == 1 {
        // Z_1 = {0}
    } else if d == 1 {
        steps.resize(target as usize, OrbitStep::Phi);
    } else {
        let r = multiplicative_order(d as i64, n)?;
        let period = (d - 1)
            .checked_mul(r)
            .ok_or(Error::Overflow("constructive_path"))?;
        let mut minus_two = vec![OrbitStep::Phi; period as usize - 1];
        minus_two.extend([OrbitStep::Inv, OrbitStep::Phi, OrbitStep::Inv]);

        // an even residue t' is reached after j blocks with -2j = t' (mod n)
        let (even_target, tail) = if n % 2 == 0 && target % 2 == 1 {
            (maps.phi_inverse(target), true)
        } else {
            (target, false)
        };
        let blocks = if n % 2 == 1 {
            let half = inverse_mod(2, n).expect("n odd");
            normalize_residue(-(even_target as i128) * half as i128, n)
        } else {
            let h = n / 2;
            normalize_residue(-((even_target / 2) as i128), h)
        };
        for _ in 0..blocks {
            steps.extend_from_slice(&minus_two);
        }
        if tail {
            steps.push(OrbitStep::Phi);
        }
    }
    let word = Word(steps);
    let end = maps.replay(&word);
    if end != target {
        return Err(invalid(format!(
            "orbit: recipe word for n={n}, d={d} ends at {end}, not {target}"
        )));
    }
    Ok(word)
}
