//! `spiderlc`: independence polynomials, two-row Schur projections and
//! the spider/pineapple audits from the command line.
//!
//! Exit codes: 0 pass, 1 verification violation, 2 parse error, 3 resource
//! guard.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spiderlc::verifier::{SpiderOptions, DEFAULT_CAP};
use spiderlc::Error;

use commands::{Output, ScanKind};
use input::{parse_list, Instance};

#[derive(Parser, Debug)]
#[command(name = "spiderlc", version, about)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest total degree of printed Y profiles (default 2 deg I + 2).
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for random corpora, when not given to --random.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Independence polynomial with LC, SLC and unimodality certificates.
    Indep {
        /// A graph file (JSON or edge list), or "spider 3,2,1" or "pineapple 4 2,1".
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
    },
    /// Two-row part of X_G, or of X_G^alpha with --alpha.
    Schur2 {
        #[arg(required = true, num_args = 1..)]
        graph: Vec<String>,
        /// Weight map as a comma-separated list, one entry per vertex.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Two-row part of Y_G = prod_i I_G(x_i) and the LC equivalences.
    Y {
        #[arg(num_args = 0..)]
        graph: Vec<String>,
        /// Cross-check the degree-D slice against the weight-map sum.
        #[arg(long, value_name = "D")]
        oracle: Option<usize>,
        /// Use the polynomial with these coefficients instead of a graph.
        #[arg(long, value_name = "C0,C1,..", conflicts_with = "graph")]
        poly: Option<String>,
    },
    /// Verify a spider or pineapple instance.
    Verify {
        /// "spider 3,2,2,1" or "pineapple 6 3,2,2,1".
        #[arg(required = true, num_args = 1..)]
        instance: Vec<String>,
        /// Run the phi elimination audit.
        #[arg(long)]
        audit_phi: bool,
        /// Weight cap outside C_0 in the audit.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Run the equivalence and positivity checks over a corpus.
    Scan {
        /// Random graphs: N COUNT [SEED], with n uniform in 1..=N.
        #[arg(long, num_args = 2..=3, value_names = ["N", "COUNT", "SEED"])]
        random: Option<Vec<u64>>,
        /// All trees on at most N vertices.
        #[arg(long, value_name = "N")]
        trees: Option<usize>,
        /// All connected claw-free graphs on at most N vertices.
        #[arg(long, value_name = "N")]
        clawfree: Option<usize>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Indep { graph } => Ok(commands::indep(&Instance::parse(&graph)?.graph()?)),
        Command::Schur2 { graph, alpha } => {
            commands::schur2(&Instance::parse(&graph)?.graph()?, alpha.as_deref())
        }
        Command::Y {
            graph,
            oracle,
            poly,
        } => {
            let coeffs = poly.as_deref().map(parse_list).transpose()?;
            let g = if graph.is_empty() {
                None
            } else {
                Some(Instance::parse(&graph)?.graph()?)
            };
            commands::y(g.as_ref(), coeffs.as_deref(), oracle, cli.config.degree_cap)
        }
        Command::Verify {
            instance,
            audit_phi,
            cap,
        } => commands::verify(
            &Instance::parse(&instance)?,
            SpiderOptions {
                audit: audit_phi,
                cap,
            },
        ),
        Command::Scan {
            random,
            trees,
            clawfree,
        } => {
            let kind = match (random, trees, clawfree) {
                (Some(r), None, None) => ScanKind::Random {
                    max_n: r[0] as usize,
                    count: r[1] as usize,
                    seed: r.get(2).copied().unwrap_or(cli.config.seed),
                },
                (None, Some(n), None) => ScanKind::Trees(n),
                (None, None, Some(n)) => ScanKind::ClawFree(n),
                _ => {
                    return Err(Error::Parse(
                        "scan takes exactly one of --random, --trees, --clawfree".into(),
                    ))
                }
            };
            commands::scan(kind)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.config.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.config.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.json),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(u8::from(out.violation))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
