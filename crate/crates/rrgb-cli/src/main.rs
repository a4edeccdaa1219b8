//! Command-line front end for reduction-ring Gröbner basis computation.
//!
//! Exit codes: 0 success, 1 domain or parse error, 2 a checked property did
//! not hold, 3 step limit exceeded.

mod output;
mod rings;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;

use rrgb::buchberger::GbConfig;
use rrgb::RingDescriptor;

use output::{Format, Report, ResultBody};
use rings::{instantiate, AnyRing};
use run::{Bound, RunError};

#[derive(Parser)]
#[command(name = "rrgb", version, about = "Gröbner bases in reduction rings")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Output format: text or json (default from RRGB_FORMAT, else text)
    #[arg(long, global = true)]
    format: Option<String>,

    /// Safety limit on completion state transitions
    #[arg(long, global = true, default_value_t = 1_000_000)]
    step_limit: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Complete a generating tuple to a Gröbner basis
    Gb {
        /// Ring descriptor: Q | Z | Z/<n> | poly(<coeff>; <vars>; <order>)
        #[arg(long)]
        ring: Option<String>,
        /// Comma-separated generator expressions
        #[arg(long, allow_hyphen_values = true)]
        gens: Option<String>,
        /// JSON file {"ring": "...", "generators": ["...", ...]}
        #[arg(long)]
        input: Option<PathBuf>,
        /// Print the per-step termination-measure trace
        #[arg(long)]
        trace: bool,
    },
    /// Normal form of an element modulo a basis
    Nf {
        #[arg(long)]
        ring: String,
        /// The element to reduce
        #[arg(long, allow_hyphen_values = true)]
        of: String,
        /// Comma-separated basis elements
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
    },
    /// Ideal membership: completes the ideal generators, then reduces
    Member {
        #[arg(long)]
        ring: String,
        /// The element to test
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Comma-separated ideal generators
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Ideal equality of two generating tuples
    Equal {
        #[arg(long)]
        ring: String,
        /// First generating tuple
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        /// Second generating tuple
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
    },
    /// Oracle checks: confluence, the finite criterion, ideal preservation
    Check {
        #[arg(long)]
        ring: String,
        /// Comma-separated basis elements
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
        /// Universe bound: "full" (Z/n, default) or a window radius (Z)
        #[arg(long)]
        bound: Option<String>,
    },
}

#[derive(Deserialize)]
struct InputFile {
    ring: String,
    generators: Vec<String>,
}

fn pick_format(flag: &Option<String>) -> Result<Format, RunError> {
    let src = match flag {
        Some(s) => Some(s.clone()),
        None => std::env::var("RRGB_FORMAT").ok(),
    };
    match src.as_deref() {
        None | Some("text") => Ok(Format::Text),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(RunError {
            exit: 1,
            message: format!("unknown format {other:?} (expected text or json)"),
        }),
    }
}

fn parse_bound(bound: &Option<String>) -> Result<Option<Bound>, RunError> {
    match bound.as_deref() {
        None => Ok(None),
        Some("full") => Ok(Some(Bound::Full)),
        Some(s) => {
            let radius: u64 = s.parse().map_err(|_| RunError {
                exit: 1,
                message: format!("--bound expects \"full\" or a positive integer, got {s:?}"),
            })?;
            if radius == 0 {
                return Err(RunError {
                    exit: 1,
                    message: "--bound must be positive".into(),
                });
            }
            Ok(Some(Bound::Radius(radius)))
        }
    }
}

fn parse_ring(src: &str) -> Result<AnyRing, RunError> {
    let desc: RingDescriptor = src.parse().map_err(RunError::from)?;
    instantiate(&desc).map_err(RunError::from)
}

fn gb_inputs(
    ring: &Option<String>,
    gens: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<(AnyRing, Vec<String>), RunError> {
    match (ring, gens, input) {
        (_, Some(_), Some(_)) => Err(RunError {
            exit: 1,
            message: "--gens and --input are mutually exclusive".into(),
        }),
        (Some(_), None, Some(_)) => Err(RunError {
            exit: 1,
            message: "--ring and --input are mutually exclusive (the file names the ring)".into(),
        }),
        (Some(ring), Some(gens), None) => Ok((parse_ring(ring)?, run::split_list(gens)?)),
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| RunError {
                exit: 1,
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            let file: InputFile = serde_json::from_str(&text).map_err(|e| RunError {
                exit: 1,
                message: format!("malformed input file: {e}"),
            })?;
            if file.generators.is_empty() {
                return Err(RunError {
                    exit: 1,
                    message: "input file has no generators".into(),
                });
            }
            Ok((parse_ring(&file.ring)?, file.generators))
        }
        _ => Err(RunError {
            exit: 1,
            message: "expected either --ring with --gens, or --input".into(),
        }),
    }
}

fn execute(cli: &Cli) -> Result<Report, RunError> {
    let cfg = GbConfig {
        step_limit: cli.step_limit,
    };
    match &cli.command {
        Cmd::Gb {
            ring,
            gens,
            input,
            trace,
        } => {
            let (ring, gens) = gb_inputs(ring, gens, input)?;
            match ring {
                AnyRing::Rationals(r) => run::run_gb(&r, &gens, *trace, &cfg),
                AnyRing::Integers(r) => run::run_gb(&r, &gens, *trace, &cfg),
                AnyRing::Modular(r) => run::run_gb(&r, &gens, *trace, &cfg),
                AnyRing::RationalPoly(r) => run::run_gb(&r, &gens, *trace, &cfg),
                AnyRing::IntegerPoly(r) => run::run_gb(&r, &gens, *trace, &cfg),
                AnyRing::ResiduePoly(r) => run::run_gb(&r, &gens, *trace, &cfg),
            }
        }
        Cmd::Nf { ring, of, basis } => {
            let basis = run::split_list(basis)?;
            match parse_ring(ring)? {
                AnyRing::Rationals(r) => run::run_nf(&r, of, &basis),
                AnyRing::Integers(r) => run::run_nf(&r, of, &basis),
                AnyRing::Modular(r) => run::run_nf(&r, of, &basis),
                AnyRing::RationalPoly(r) => run::run_nf(&r, of, &basis),
                AnyRing::IntegerPoly(r) => run::run_nf(&r, of, &basis),
                AnyRing::ResiduePoly(r) => run::run_nf(&r, of, &basis),
            }
        }
        Cmd::Member {
            ring,
            element,
            ideal,
        } => {
            let ideal = run::split_list(ideal)?;
            match parse_ring(ring)? {
                AnyRing::Rationals(r) => run::run_member(&r, element, &ideal, &cfg),
                AnyRing::Integers(r) => run::run_member(&r, element, &ideal, &cfg),
                AnyRing::Modular(r) => run::run_member(&r, element, &ideal, &cfg),
                AnyRing::RationalPoly(r) => run::run_member(&r, element, &ideal, &cfg),
                AnyRing::IntegerPoly(r) => run::run_member(&r, element, &ideal, &cfg),
                AnyRing::ResiduePoly(r) => run::run_member(&r, element, &ideal, &cfg),
            }
        }
        Cmd::Equal { ring, gens, ideal } => {
            let first = run::split_list(gens)?;
            let second = run::split_list(ideal)?;
            match parse_ring(ring)? {
                AnyRing::Rationals(r) => run::run_equal(&r, &first, &second, &cfg),
                AnyRing::Integers(r) => run::run_equal(&r, &first, &second, &cfg),
                AnyRing::Modular(r) => run::run_equal(&r, &first, &second, &cfg),
                AnyRing::RationalPoly(r) => run::run_equal(&r, &first, &second, &cfg),
                AnyRing::IntegerPoly(r) => run::run_equal(&r, &first, &second, &cfg),
                AnyRing::ResiduePoly(r) => run::run_equal(&r, &first, &second, &cfg),
            }
        }
        Cmd::Check { ring, basis, bound } => {
            let basis = run::split_list(basis)?;
            let bound = parse_bound(bound)?;
            match parse_ring(ring)? {
                AnyRing::Rationals(r) => run::run_check_rationals(&r, &basis, bound, &cfg),
                AnyRing::Integers(r) => run::run_check_integers(&r, &basis, bound, &cfg),
                AnyRing::Modular(r) => run::run_check_modular(&r, &basis, bound, &cfg),
                AnyRing::RationalPoly(r) => run::run_check_poly_rationals(&r, &basis, bound, &cfg),
                AnyRing::IntegerPoly(r) => run::run_check_poly_witness(&r, &basis, bound, &cfg),
                AnyRing::ResiduePoly(r) => run::run_check_poly_witness(&r, &basis, bound, &cfg),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let format = match pick_format(&cli.format) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.exit as u8);
        }
    };
    match execute(&cli) {
        Ok(report) => {
            report.print(format);
            if let ResultBody::Check(check) = &report.result {
                if !check.passed() {
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit as u8)
        }
    }
}
