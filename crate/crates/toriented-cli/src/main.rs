//! `toriented`: decide orientability and count connected components of real
//! toric varieties, spherical toric varieties and generalized small covers,
//! with verifiable certificates and brute-force cross-checks.
//!
//! Exit codes for `analyze`: 0 = orientable, 1 = non-orientable, 2 = error.
//! For `oracle verify`: 0 = all paths agree, 1 = disagreement, 2 = error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use toriented_cli::analyze::{self, AnalyzeOptions, Outcome};
use toriented_cli::{gen, verify};
use toriented_core::oracle::OracleCaps;

/// Environment variable overriding both brute-force oracle caps.
const CAP_ENV: &str = "TORIENTED_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "toriented",
    version,
    about = "Orientability and component counts of real and spherical toric varieties, \
             with verifiable certificates",
    after_help = "Exit codes: 0 orientable (or all-agree), 1 non-orientable (or disagreement), 2 error.\n\
                  TORIENTED_ORACLE_CAP overrides the brute-force caps (graph 12, boundary 10)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an input file and emit a certificate-bearing report.
    Analyze {
        #[command(subcommand)]
        target: AnalyzeTarget,
    },
    /// Generate example inputs in the polytope JSON schema.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Brute-force verification commands.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Subcommand)]
enum AnalyzeTarget {
    /// A small cover given by its ambient rank and isotropy generators.
    SmallCover(CommonArgs),
    /// A real toric variety given by the rays of its fan.
    Fan(CommonArgs),
    /// A lattice polytope given by vertices and/or facets; analyzes both the
    /// real toric variety of its normal fan and its spherical cover.
    Polytope(PolytopeArgs),
    /// A finite poset; analyzes its order polytope and the chain criteria.
    Poset(PosetArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cross-check the verdict against the brute-force oracles.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct PolytopeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Let the spherical verdict decide the exit code.
    #[arg(long)]
    spherical: bool,
    /// Attach the lower-bound applicability report (affine span + spherical
    /// orientability).
    #[arg(long)]
    lower_bound: bool,
}

#[derive(Args)]
struct PosetArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Let the spherical (ranked-mod-2) criterion decide the exit code.
    #[arg(long)]
    spherical: bool,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Cross polytope: convex hull of the unit vectors and their negatives.
    CrossPolytope {
        #[arg(short = 'n', long = "n")]
        n: usize,
    },
    /// Unit cube [0,1]^n.
    Cube {
        #[arg(short = 'n', long = "n")]
        n: usize,
    },
    /// Order polytope of the poset in the given file.
    OrderPolytope {
        #[arg(long)]
        poset: PathBuf,
    },
}

#[derive(Subcommand)]
enum OracleAction {
    /// Re-derive verdicts by brute force and print an agreement table.
    Verify {
        /// Input files (kind inferred from the JSON fields); repeatable.
        #[arg(long)]
        input: Vec<PathBuf>,
        /// Sweep every generator set over GF(2)^n (n <= 4).
        #[arg(long)]
        exhaustive: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn oracle_caps() -> Result<OracleCaps> {
    match std::env::var(CAP_ENV) {
        Ok(raw) => {
            let cap: usize = raw
                .trim()
                .parse()
                .with_context(|| format!("{CAP_ENV} must be a nonnegative integer, got {raw:?}"))?;
            Ok(OracleCaps::uniform(cap))
        }
        Err(_) => Ok(OracleCaps::default()),
    }
}

fn emit_report(outcome: &Outcome, format: Format) -> ExitCode {
    match format {
        Format::Json => print!("{}", outcome.report.to_json()),
        Format::Text => print!("{}", outcome.report.to_text()),
    }
    if let Some(oracle) = &outcome.report.oracle {
        if !oracle.agrees {
            eprintln!(
                "error: oracle cross-check disagrees with the certificate machinery; \
                 this is a bug, please report the input"
            );
            return ExitCode::from(2);
        }
    }
    if outcome.orientable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { target } => {
            let caps = oracle_caps()?;
            let (outcome, format) = match target {
                AnalyzeTarget::SmallCover(args) => {
                    let opts = AnalyzeOptions {
                        oracle: args.oracle,
                        spherical_exit: false,
                        lower_bound: false,
                        caps,
                    };
                    (
                        analyze::analyze_small_cover(&args.input, &opts)?,
                        args.format,
                    )
                }
                AnalyzeTarget::Fan(args) => {
                    let opts = AnalyzeOptions {
                        oracle: args.oracle,
                        spherical_exit: false,
                        lower_bound: false,
                        caps,
                    };
                    (analyze::analyze_fan(&args.input, &opts)?, args.format)
                }
                AnalyzeTarget::Polytope(args) => {
                    let opts = AnalyzeOptions {
                        oracle: args.common.oracle,
                        spherical_exit: args.spherical,
                        lower_bound: args.lower_bound,
                        caps,
                    };
                    (
                        analyze::analyze_polytope(&args.common.input, &opts)?,
                        args.common.format,
                    )
                }
                AnalyzeTarget::Poset(args) => {
                    let opts = AnalyzeOptions {
                        oracle: args.common.oracle,
                        spherical_exit: args.spherical,
                        lower_bound: false,
                        caps,
                    };
                    (
                        analyze::analyze_poset(&args.common.input, &opts)?,
                        args.common.format,
                    )
                }
            };
            Ok(emit_report(&outcome, format))
        }
        Command::Gen { family } => {
            let text = match family {
                GenFamily::CrossPolytope { n } => gen::cross_polytope(n)?,
                GenFamily::Cube { n } => gen::cube(n)?,
                GenFamily::OrderPolytope { poset } => gen::order_polytope(&poset)?,
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { action } => {
            let caps = oracle_caps()?;
            let OracleAction::Verify { input, exhaustive } = action;
            if input.is_empty() && exhaustive.is_none() {
                anyhow::bail!("oracle verify needs --input files and/or --exhaustive N");
            }
            let mut all_agree = true;
            if !input.is_empty() {
                let outcome = verify::verify_inputs(&input, &caps)?;
                print!("{}", outcome.text);
                all_agree &= outcome.all_agree;
            }
            if let Some(n) = exhaustive {
                let outcome = verify::verify_exhaustive(n, &caps)?;
                print!("{}", outcome.text);
                all_agree &= outcome.all_agree;
            }
            Ok(if all_agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
