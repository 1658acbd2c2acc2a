//! Certified search for near-solutions of `x^(1/m) + y^(1/n) = z^(1/r)`.
//!
//! The scan is split into shards `(x, m)`. Each shard evaluates every
//! admissible `(y, n, r)` in double precision, tries `z = round(s^r)` and its
//! two neighbours, and keeps its best `pool_size` candidates under a total
//! order. Shard pools are merged into one global pool, which does not depend
//! on how shards are grouped or scheduled. Every pooled candidate is then
//! evaluated with exact dyadic enclosures until the interval excludes zero
//! and is narrower than a tenth of `|eps|`, and the final ranking uses those
//! certified bounds only.

mod checkpoint;
mod guard;

use std::cmp::Ordering;
use std::path::PathBuf;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{invalid, Error, Result};
use crate::interval::{eval_radical_sum_at, RadicalTerm, MAX_BITS, START_BITS};
use crate::number::is_perfect_power_of;

pub use checkpoint::{checkpoint_resume, checkpoint_write, Checkpoint};
pub use guard::{exactness_guard, GuardCertificate, GuardEvidence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub x_max: u64,
    pub y_max: u64,
    pub exp_min: u32,
    pub exp_max: u32,
    /// Let `m`, `n`, `r` vary independently instead of `m = n = r`.
    pub allow_mixed_exponents: bool,
    pub top_k: usize,
    /// Candidates kept by the double-precision stage.
    pub pool_size: usize,
    pub checkpoint_path: Option<PathBuf>,
    pub worker_count: usize,
}

pub const DEFAULT_POOL_SIZE: usize = 10_000;

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            x_max: 1000,
            y_max: 1000,
            exp_min: 2,
            exp_max: 10,
            allow_mixed_exponents: false,
            top_k: 10,
            pool_size: DEFAULT_POOL_SIZE,
            checkpoint_path: None,
            worker_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Exponents above this make `s^r` meaningless in double precision.
pub const MAX_EXPONENT: u32 = 64;

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.exp_min < 2 {
            return Err(invalid("search: exp_min must be at least 2"));
        }
        if self.exp_min > self.exp_max {
            return Err(invalid("search: exp_min exceeds exp_max"));
        }
        if self.exp_max > MAX_EXPONENT {
            return Err(invalid(format!("search: exp_max above {MAX_EXPONENT}")));
        }
        if self.x_max == 0 || self.y_max == 0 {
            return Err(invalid("search: x_max and y_max must be positive"));
        }
        if self.top_k == 0 || self.worker_count == 0 {
            return Err(invalid("search: top_k and worker_count must be positive"));
        }
        if self.pool_size < self.top_k {
            return Err(invalid("search: pool_size must be at least top_k"));
        }
        Ok(())
    }

    /// SHA-256 over the fields that determine the result.
    pub fn config_hash(&self) -> String {
        let canonical = serde_json::json!({
            "x_max": self.x_max,
            "y_max": self.y_max,
            "exp_min": self.exp_min,
            "exp_max": self.exp_max,
            "mixed": self.allow_mixed_exponents,
            "top_k": self.top_k,
            "pool_size": self.pool_size,
        });
        Sha256::digest(canonical.to_string().as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    fn exponents(&self) -> std::ops::RangeInclusive<u32> {
        self.exp_min..=self.exp_max
    }
}

/// A unit of work: all candidates with this `x` and first exponent `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shard {
    pub x: u64,
    pub m: u32,
}

/// A double-precision candidate. The key `|eps|` is stored as raw bits so
/// that checkpoints round-trip exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub abs_eps_bits: u64,
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub m: u32,
    pub n: u32,
    pub r: u32,
}

impl Candidate {
    pub fn abs_eps(&self) -> f64 {
        f64::from_bits(self.abs_eps_bits)
    }

    fn key(&self) -> (u64, u64, u64, u64, u32, u32, u32) {
        // bits of a non-negative double sort like the double
        (self.abs_eps_bits, self.x, self.y, self.z, self.m, self.n, self.r)
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

mod ratio_string {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", q.numer(), q.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        let (n, den) = s
            .split_once('/')
            .ok_or_else(|| D::Error::custom(format!("expected num/den, got {s}")))?;
        let n: BigInt = n.parse().map_err(D::Error::custom)?;
        let den: BigInt = den.parse().map_err(D::Error::custom)?;
        if den.sign() != num_bigint::Sign::Plus {
            return Err(D::Error::custom("denominator must be positive"));
        }
        Ok(BigRational::new(n, den))
    }
}

/// A certified near-solution: `eps = x^(1/m) + y^(1/n) - z^(1/r)` lies in
/// `[eps_lo, eps_hi]`, which excludes zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearMiss {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub m: u32,
    pub n: u32,
    pub r: u32,
    #[serde(with = "ratio_string")]
    pub eps_lo: BigRational,
    #[serde(with = "ratio_string")]
    pub eps_hi: BigRational,
    pub precision_bits: u32,
}

impl NearMiss {
    /// Upper bound on `|eps|`.
    pub fn abs_eps_upper(&self) -> BigRational {
        self.eps_lo.abs().max(self.eps_hi.abs())
    }

    pub fn eps_approx(&self) -> f64 {
        crate::interval::rational_to_f64(&((&self.eps_lo + &self.eps_hi) / BigRational::from_integer(2.into())))
    }

    fn rank_cmp(&self, other: &Self) -> Ordering {
        self.abs_eps_upper()
            .cmp(&other.abs_eps_upper())
            .then_with(|| {
                (self.x, self.y, self.z, self.m, self.n, self.r)
                    .cmp(&(other.x, other.y, other.z, other.m, other.n, other.r))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub results: Vec<NearMiss>,
    pub candidates_evaluated: u64,
    pub pool_len: usize,
    /// Largest `|eps|` retained by the prefilter, when the pool overflowed.
    pub pool_cutoff: Option<f64>,
    /// No candidate dropped by the prefilter can beat the reported ones,
    /// given the double-precision error margin.
    pub prefilter_sound: bool,
}

/// How far to run before returning, for checkpoint testing and batch jobs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunControl {
    pub stop_after_shards: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Complete(SearchReport),
    Interrupted { completed_shards: usize, total_shards: usize },
}

/// Admissibility of a base for an exponent: at least 2 and not a perfect
/// power for that exponent. Indexed `[exponent - exp_min][base]`.
struct BaseTable {
    exp_min: u32,
    ok: Vec<Vec<bool>>,
}

impl BaseTable {
    fn new(config: &SearchConfig) -> Self {
        let limit = config.x_max.max(config.y_max) as usize;
        let ok = config
            .exponents()
            .map(|k| {
                (0..=limit)
                    .map(|b| b >= 2 && !is_perfect_power_of(b as u64, k))
                    .collect()
            })
            .collect();
        Self {
            exp_min: config.exp_min,
            ok,
        }
    }

    fn admissible(&self, base: u64, k: u32) -> bool {
        self.ok[(k - self.exp_min) as usize][base as usize]
    }
}

pub fn shards(config: &SearchConfig) -> Vec<Shard> {
    let x_top = config.x_max.min(config.y_max);
    (2..=x_top)
        .flat_map(|x| config.exponents().map(move |m| Shard { x, m }))
        .collect()
}

struct ShardResult {
    pool: Vec<Candidate>,
    evaluated: u64,
    max_magnitude: f64,
}

fn keep_best(pool: &mut Vec<Candidate>, size: usize) {
    if pool.len() > size {
        pool.select_nth_unstable(size);
        pool.truncate(size);
    }
    pool.sort_unstable();
}

fn run_shard(config: &SearchConfig, table: &BaseTable, shard: Shard) -> ShardResult {
    let Shard { x, m } = shard;
    let mut out = ShardResult {
        pool: Vec::new(),
        evaluated: 0,
        max_magnitude: 0.0,
    };
    if !table.admissible(x, m) {
        return out;
    }
    let xr = (x as f64).powf(1.0 / m as f64);
    let exps: Vec<(u32, u32)> = if config.allow_mixed_exponents {
        config
            .exponents()
            .flat_map(|n| config.exponents().map(move |r| (n, r)))
            .collect()
    } else {
        vec![(m, m)]
    };
    for y in x.max(2)..=config.y_max {
        if x.gcd(&y) != 1 {
            continue;
        }
        for &(n, r) in &exps {
            if !table.admissible(y, n) {
                continue;
            }
            let s = xr + (y as f64).powf(1.0 / n as f64);
            let t = s.powi(r as i32);
            if !(t < 1.8e19) {
                continue;
            }
            let z0 = t.round() as u64;
            for z in z0.saturating_sub(1)..=z0.saturating_add(1) {
                if z < 2 || is_perfect_power_of(z, r) {
                    continue;
                }
                let zr = (z as f64).powf(1.0 / r as f64);
                out.evaluated += 1;
                out.max_magnitude = out.max_magnitude.max(s + zr);
                out.pool.push(Candidate {
                    abs_eps_bits: (s - zr).abs().to_bits(),
                    x,
                    y,
                    z,
                    m,
                    n,
                    r,
                });
            }
        }
        if out.pool.len() > 4 * config.pool_size.max(1024) {
            keep_best(&mut out.pool, config.pool_size);
        }
    }
    keep_best(&mut out.pool, config.pool_size);
    out
}

/// Encloses `eps` until the interval excludes 0 and is narrower than a
/// tenth of its smallest absolute value.
pub fn certify_candidate(c: &Candidate) -> Result<NearMiss> {
    let terms = [
        RadicalTerm::new(1, c.x, c.m),
        RadicalTerm::new(1, c.y, c.n),
        RadicalTerm::new(-1, c.z, c.r),
    ];
    let est = c.abs_eps();
    // three terms of width 2^-bits each; aim for 3 * 2^-bits < est / 10
    let mut bits = if est > 0.0 && est.is_finite() {
        ((30.0 / est).log2().ceil() as u32 + 8).clamp(START_BITS, MAX_BITS)
    } else {
        START_BITS
    };
    loop {
        let iv = eval_radical_sum_at(&terms, bits);
        let ten = BigRational::from_integer(10.into());
        if !iv.contains_zero() && iv.width() * &ten < iv.mignitude() {
            return Ok(NearMiss {
                x: c.x,
                y: c.y,
                z: c.z,
                m: c.m,
                n: c.n,
                r: c.r,
                eps_lo: iv.lo().clone(),
                eps_hi: iv.hi().clone(),
                precision_bits: bits,
            });
        }
        if bits >= MAX_BITS {
            return Err(Error::Hypothesis(format!(
                "{}^(1/{}) + {}^(1/{}) - {}^(1/{}) not separated from 0 at {MAX_BITS} bits",
                c.x, c.m, c.y, c.n, c.z, c.r
            )));
        }
        bits = (bits * 2).min(MAX_BITS);
    }
}

pub fn near_miss_search(config: &SearchConfig) -> Result<SearchReport> {
    match near_miss_search_with(config, RunControl::default())? {
        SearchOutcome::Complete(report) => Ok(report),
        SearchOutcome::Interrupted { .. } => unreachable!("no stop requested"),
    }
}

/// Runs the search, resuming from and updating the configured checkpoint.
pub fn near_miss_search_with(config: &SearchConfig, control: RunControl) -> Result<SearchOutcome> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count)
        .build()
        .map_err(|e| invalid(format!("search: thread pool: {e}")))?;
    pool.install(|| run(config, control))
}

fn run(config: &SearchConfig, control: RunControl) -> Result<SearchOutcome> {
    let hash = config.config_hash();
    let all = shards(config);
    let mut state = match &config.checkpoint_path {
        Some(path) => checkpoint_resume(path, &hash)?,
        None => None,
    }
    .unwrap_or_else(|| Checkpoint::new(hash, all.len()));
    if state.total_shards != all.len() {
        return Err(Error::Checkpoint("shard count does not match the config".into()));
    }
    let done: std::collections::HashSet<Shard> = state.completed_shards.iter().copied().collect();
    let todo: Vec<Shard> = all.iter().copied().filter(|s| !done.contains(s)).collect();
    let table = BaseTable::new(config);
    let batch = (config.worker_count * 8).max(16);
    let mut processed = 0usize;
    let mut idx = 0usize;
    while idx < todo.len() {
        let mut take = batch.min(todo.len() - idx);
        if let Some(stop) = control.stop_after_shards {
            take = take.min(stop.saturating_sub(processed));
            if take == 0 {
                break;
            }
        }
        let chunk = &todo[idx..idx + take];
        let results: Vec<ShardResult> = chunk
            .par_iter()
            .map(|&s| run_shard(config, &table, s))
            .collect();
        let mut max_mag = f64::from_bits(state.max_magnitude_bits);
        for r in results {
            state.pool.extend(r.pool);
            state.candidates_evaluated += r.evaluated;
            max_mag = max_mag.max(r.max_magnitude);
        }
        keep_best(&mut state.pool, config.pool_size);
        state.max_magnitude_bits = max_mag.to_bits();
        state.completed_shards.extend_from_slice(chunk);
        if let Some(path) = &config.checkpoint_path {
            checkpoint_write(path, &state)?;
        }
        idx += take;
        processed += take;
    }
    if state.completed_shards.len() < all.len() {
        return Ok(SearchOutcome::Interrupted {
            completed_shards: state.completed_shards.len(),
            total_shards: all.len(),
        });
    }
    finish(config, &state).map(SearchOutcome::Complete)
}

fn finish(config: &SearchConfig, state: &Checkpoint) -> Result<SearchReport> {
    let mut certified = state
        .pool
        .par_iter()
        .map(certify_candidate)
        .collect::<Result<Vec<NearMiss>>>()?;
    certified.sort_by(NearMiss::rank_cmp);
    certified.truncate(config.top_k);

    let overflowed = state.candidates_evaluated > state.pool.len() as u64;
    let pool_cutoff = overflowed
        .then(|| state.pool.last().map(Candidate::abs_eps))
        .flatten();
    let prefilter_sound = match (pool_cutoff, certified.last()) {
        (Some(cutoff), Some(worst)) => {
            let margin = 1e3 * f64::EPSILON * f64::from_bits(state.max_magnitude_bits);
            let threshold = BigRational::from_float(cutoff).unwrap_or_else(BigRational::zero)
                - BigRational::from_float(margin).unwrap_or_else(BigRational::zero);
            config.top_k <= certified.len() && worst.abs_eps_upper() < threshold
        }
        _ => true,
    };
    Ok(SearchReport {
        results: certified,
        candidates_evaluated: state.candidates_evaluated,
        pool_len: state.pool.len(),
        pool_cutoff,
        prefilter_sound,
    })
}
