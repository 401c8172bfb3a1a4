//! `parkideal`: command-line front end for skeleton ideals of G-parking ideals.
//!
//! Every subcommand writes its artifact to stdout. Exit status is 0 on success,
//! 2 on malformed input or usage, and 3 when a resource guard trips.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parkideal::Error;
use std::io::Write;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "parkideal", version, about = "Skeleton ideals of G-parking function ideals")]
pub struct Cli {
    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CellFormat {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Reduced homology of upper Koszul complexes.
    Oracle,
    /// Labeled cells of a two-hyperplane tropical arrangement.
    Tropical,
    /// Closed-form totals.
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Singletons,
    Cluster,
    Family,
}

/// A graph and skeleton level.
#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Edge-list file, or a named family such as `complete:5`.
    #[arg(long, short = 'g')]
    pub graph: String,
    /// Skeleton level; generators come from sets of size at most k + 1.
    #[arg(long, short = 'k', default_value_t = 1)]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of M_G^(k).
    Ideal {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Standard monomials of M_G^(k), as exponent vectors.
    Std {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Print only the number of standard monomials.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree generating function of the standard monomials, or the
    /// inversion enumerator of rooted forests.
    Gf {
        #[arg(long, short = 'g', required_unless_present = "forests", conflicts_with = "forests")]
        graph: Option<String>,
        #[arg(long, short = 'k', default_value_t = 1)]
        k: usize,
        /// Inversion enumerator of rooted forests on this many vertices.
        #[arg(long, value_name = "N")]
        forests: Option<usize>,
    },
    /// G-parking test, u-parking counts, and the closed formula.
    Parking {
        #[arg(long, short = 'g', requires = "seq")]
        graph: Option<String>,
        /// Sequence to test against the graph, e.g. `1,0,2`.
        #[arg(long, requires = "graph")]
        seq: Option<String>,
        /// Count u-parking functions for an explicit vector, e.g. `2,0,1`.
        #[arg(long, conflicts_with_all = ["graph", "n"])]
        u: Option<String>,
        /// Compare the u-parking count for u_{n,k} with the closed formula.
        #[arg(long, short = 'n', requires = "k", conflicts_with = "graph")]
        n: Option<usize>,
        #[arg(long, short = 'k')]
        k: Option<usize>,
    },
    /// Minimal graded Betti numbers of M_G^(k).
    Betti {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Compute homology over GF(p) instead of the rationals.
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cell decomposition induced by two tropical hyperplanes.
    TropicalCells {
        /// Generic arrangement on n homogeneous coordinates.
        #[arg(long, short = 'n', conflicts_with_all = ["graph", "a"])]
        n: Option<usize>,
        /// Arrangement attached to a clique-cone graph; cells carry its labels.
        #[arg(long, short = 'g', conflicts_with = "a")]
        graph: Option<String>,
        /// First apex in homogeneous coordinates, e.g. `0,0,0`.
        #[arg(long, requires = "b")]
        a: Option<String>,
        /// Second apex in homogeneous coordinates, e.g. `1,2,0`.
        #[arg(long, requires = "a")]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = CellFormat::Text)]
        format: CellFormat,
    },
    /// Second apex of the arrangement attached to a clique-cone graph.
    Apex {
        #[arg(long, short = 'g')]
        graph: String,
    },
    /// Fire one set, or stabilize a configuration and print the trace.
    Chipfire {
        #[arg(long, short = 'g')]
        graph: String,
        /// Chips on vertices 1..n, e.g. `3,3,3`.
        #[arg(long)]
        config: String,
        #[arg(long, value_enum, default_value_t = Model::Singletons)]
        model: Model,
        /// Allowed sets for `--model family`, e.g. `1,2;3`.
        #[arg(long)]
        family: Option<String>,
        /// Fire exactly this set once instead of stabilizing.
        #[arg(long, value_name = "SET")]
        fire: Option<String>,
        /// Pick uniformly among valid sets using this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Hilbert functions of S/M_G^(k) and of the power ideal J_G^(k).
    Hilbert {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Largest degree to tabulate (default: a socle bound for G).
        #[arg(long)]
        max_d: Option<u32>,
    },
    /// TU-weighted subgraph count beside det of the reduced signless Laplacian.
    TuCount {
        #[arg(long, short = 'g')]
        graph: String,
    },
    /// dim S/M_G^(1) against det of the reduced signless Laplacian for every
    /// labeled connected graph up to a size.
    Survey {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
    },
}

fn exit_code(err: &Error) -> u8 {
    if err.is_resource() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        parkideal::par::set_jobs(jobs);
    }
    match commands::run(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
