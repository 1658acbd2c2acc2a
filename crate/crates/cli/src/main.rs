use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use radind_core::cyclotomic::{dft_unitarity_check, enumerate_vanishing_sums, mann_condition_check, vandermonde_det_identity};
use radind_core::finite_field::{build_tower, construct_independent_set, verify_linear_independence, VerificationMethod};
use radind_core::orbit::{constructive_path, orbit_size};
use radind_core::radicals::{
    independence_certificate, lattice_degree, multiplicative_condition_check, sierpinski_degree, Evidence, Verdict,
};
use radind_core::search::{exactness_guard, near_miss_search_with, RunControl, SearchConfig, SearchOutcome, DEFAULT_POOL_SIZE};
use radind_core::{Radical, RadicalSet};

#[derive(Parser)]
#[command(name = "radind", version, about = "Linear independence of radicals: checks, constructions and near-miss search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified search for small |x^(1/m) + y^(1/n) - z^(1/r)|; one JSON object per result.
    Search(SearchArgs),
    /// Pairwise/full independence certificate for radicals such as `2^(1/2)` or `12^(3/4)`.
    CheckIndependence {
        #[arg(required = true, allow_hyphen_values = true)]
        radicals: Vec<String>,
    },
    /// Degree over Q of the field generated by the given radicals.
    Degree {
        #[arg(allow_hyphen_values = true, required_unless_present = "sierpinski")]
        radicals: Vec<String>,
        /// Degree of Q(2^(1/2), 3^(1/3), ..., N^(1/N)) instead.
        #[arg(long, value_name = "N", conflicts_with = "radicals")]
        sierpinski: Option<u64>,
    },
    /// Independent set in GF(p^v) over GF(p^u) built from the divisors of p^u - 1.
    FfConstruct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        /// Also verify independence over the subfield.
        #[arg(long)]
        verify: bool,
    },
    /// Orbit of 0 in Z_n under x -> 1 + dx and x -> -x.
    Orbit {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Print a word reaching this residue instead of the orbit size.
        #[arg(long)]
        target: Option<u64>,
    },
    /// Exact check of V V^H = nI and |det V|^2 = n^n for the DFT matrix.
    VandermondeCheck {
        #[arg(long)]
        n: u64,
    },
    /// Minimal vanishing sums of n-th roots of unity and their divisibility check.
    MannScan {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        coeff_bound: i64,
        #[arg(long)]
        max_terms: Option<usize>,
    },
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 1000)]
    x_max: u64,
    #[arg(long, default_value_t = 1000)]
    y_max: u64,
    #[arg(long, default_value_t = 2)]
    exp_min: u32,
    #[arg(long, default_value_t = 10)]
    exp_max: u32,
    /// Let the three exponents differ.
    #[arg(long)]
    mixed: bool,
    #[arg(long, default_value_t = 10)]
    top: usize,
    #[arg(long, default_value_t = DEFAULT_POOL_SIZE)]
    pool_size: usize,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
    /// Stop after this many shards, leaving the checkpoint to resume from.
    #[arg(long, requires = "checkpoint")]
    stop_after: Option<usize>,
    /// Run the exactness guard on every result.
    #[arg(long)]
    guard: bool,
}

type CliResult = Result<(), Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn emit(out: &mut impl Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{v}")
}

fn run(command: Command) -> CliResult {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Search(args) => search(&mut out, args),
        Command::CheckIndependence { radicals } => check_independence(&mut out, &radicals),
        Command::Degree { radicals, sierpinski } => {
            let d = match sierpinski {
                Some(n) => sierpinski_degree(n)?,
                None => {
                    let xs = parse_radicals(&radicals)?;
                    let d = lattice_degree(&xs);
                    if xs.iter().all(|x| !x.is_rational()) {
                        eprintln!("multiplicative condition: {}", multiplicative_condition_check(&xs)?);
                    }
                    d
                }
            };
            writeln!(out, "{d}")?;
            Ok(())
        }
        Command::FfConstruct { p, u, v, verify } => ff_construct(&mut out, p, u, v, verify),
        Command::Orbit { n, d, target } => {
            match target {
                Some(t) => writeln!(out, "{}", constructive_path(n, d, t)?)?,
                None => writeln!(out, "{}", orbit_size(n, d)?)?,
            }
            Ok(())
        }
        Command::VandermondeCheck { n } => {
            let unitary = dft_unitarity_check(n)?;
            let det = vandermonde_det_identity(n)?;
            emit(
                &mut out,
                &json!({
                    "n": n,
                    "unitary": unitary,
                    "det_norm": det.norm.map(|q| q.to_string()),
                    "expected": det.expected.to_string(),
                    "holds": det.holds,
                }),
            )?;
            Ok(())
        }
        Command::MannScan { n, coeff_bound, max_terms } => {
            let max_terms = max_terms.unwrap_or(n as usize);
            for s in enumerate_vanishing_sums(n, coeff_bound, max_terms)? {
                let report = mann_condition_check(&s)?;
                emit(
                    &mut out,
                    &json!({
                        "sum": s.to_string(),
                        "terms": s.terms(),
                        "reduced_order": report.reduced_order,
                        "prime_product": report.prime_product.to_string(),
                        "holds": report.holds,
                    }),
                )?;
            }
            Ok(())
        }
    }
}

fn parse_radicals(tokens: &[String]) -> Result<Vec<Radical>, radind_core::Error> {
    tokens.iter().map(|t| t.parse()).collect()
}

fn check_independence(out: &mut impl Write, tokens: &[String]) -> CliResult {
    let set = RadicalSet::new(parse_radicals(tokens)?)?;
    let cert = independence_certificate(&set);
    let witnesses: Vec<Value> = cert
        .witnesses
        .iter()
        .map(|w| match &w.evidence {
            Evidence::IrrationalRatio { prime, exponent } => json!({
                "i": w.i, "j": w.j, "kind": "irrational_ratio",
                "prime": prime, "exponent": exponent.to_string(),
            }),
            Evidence::RationalRatio(q) => json!({
                "i": w.i, "j": w.j, "kind": "rational_ratio", "ratio": q.to_string(),
            }),
        })
        .collect();
    emit(
        out,
        &json!({
            "elements": set.elements().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "verdict": match cert.verdict {
                Verdict::Independent => "independent",
                Verdict::Dependent => "dependent",
            },
            "witnesses": witnesses,
        }),
    )?;
    Ok(())
}

fn ff_construct(out: &mut impl Write, p: u64, u: u32, v: u32, verify: bool) -> CliResult {
    let tower = build_tower(p, u, v)?;
    let set = construct_independent_set(&tower)?;
    let mut obj = json!({
        "p": p, "u": u, "v": v,
        "m": tower.m(), "n": tower.n(), "l": tower.l(), "w": set.w,
        "modulus": tower.modulus(),
        "generator": tower.generator().to_string(),
        "exponents": set.exponents,
    });
    if verify {
        let verdict = verify_linear_independence(&tower, &set.elements);
        let (method, combinations) = match verdict.method {
            VerificationMethod::Exhaustive { combinations } => ("exhaustive", Some(combinations)),
            VerificationMethod::Rank { .. } => ("rank", None),
            VerificationMethod::ContainsZero => ("contains_zero", None),
        };
        obj["verification"] = json!({
            "verdict": if verdict.independent { "independent" } else { "dependent" },
            "method": method,
            "combinations": combinations,
        });
    }
    emit(out, &obj)?;
    Ok(())
}

fn search(out: &mut impl Write, args: SearchArgs) -> CliResult {
    let defaults = SearchConfig::default();
    let config = SearchConfig {
        x_max: args.x_max,
        y_max: args.y_max,
        exp_min: args.exp_min,
        exp_max: args.exp_max,
        allow_mixed_exponents: args.mixed,
        top_k: args.top,
        pool_size: args.pool_size,
        checkpoint_path: args.checkpoint,
        worker_count: args.workers.unwrap_or(defaults.worker_count),
    };
    let control = RunControl {
        stop_after_shards: args.stop_after,
    };
    let report = match near_miss_search_with(&config, control)? {
        SearchOutcome::Complete(r) => r,
        SearchOutcome::Interrupted { completed_shards, total_shards } => {
            eprintln!("stopped after {completed_shards} of {total_shards} shards");
            return Ok(());
        }
    };
    for r in &report.results {
        if args.guard {
            exactness_guard(r.x, r.m, r.y, r.n, r.z, r.r)?;
        }
        emit(out, &serde_json::to_value(r)?)?;
    }
    eprintln!(
        "evaluated {} candidates, pool {}, prefilter sound: {}",
        report.candidates_evaluated, report.pool_len, report.prefilter_sound
    );
    if !report.prefilter_sound {
        eprintln!("warning: ranking may miss candidates dropped by the prefilter; raise --pool-size");
    }
    Ok(())
}
