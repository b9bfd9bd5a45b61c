//! Command-line driver for `iquandle`: presentation files, enumeration,
//! Montesinos checks, sweeps, geodesics, automorphisms and DOT export.

pub mod commands;
pub mod dot;
pub mod presentation_file;
pub mod record;

use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use commands::{MontesinosArgs, Source, SweepArgs};
use iquandle::DEFAULT_MAX_VERTICES;

#[derive(Parser, Debug)]
#[command(
    name = "iquandle",
    version,
    about = "Finite involutory quandles of links"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate the quandle of a presentation file.
    Enum {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Write the Cayley graph as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Write a JSON record.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Enumerate the quandle of L(1/2, 1/2, p/q; e) and compare with predictions.
    Montesinos {
        #[command(flatten)]
        params: ParamArgs,
        /// Also run the model, rewritten-presentation, identity, displacement
        /// and geodesic checks.
        #[arg(long)]
        check: bool,
        /// Count automorphisms and compare with the upper bound.
        #[arg(long)]
        aut: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Run every valid (p, q, e) with 2 ≤ q ≤ q-max and e in range.
    Sweep {
        #[arg(long)]
        q_max: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        e_min: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 3)]
        e_max: i64,
        #[arg(long)]
        check: bool,
        /// Count automorphisms and compare with the upper bound (slow for
        /// large q).
        #[arg(long)]
        aut: bool,
        /// Include per-instance wall time in the records.
        #[arg(long)]
        timing: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Write the records here instead of standard output.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Maximal geodesics, by size.
    Geodesics {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Automorphism count against its upper bound.
    Aut {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[arg(long)]
    pub p: i64,
    #[arg(long)]
    pub q: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub e: i64,
}

#[derive(Args, Debug)]
pub struct SourceArgs {
    #[arg(long, requires_all = ["q", "e"], conflicts_with = "input")]
    pub p: Option<i64>,
    #[arg(long, requires_all = ["p", "e"])]
    pub q: Option<i64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["p", "q"])]
    pub e: Option<i64>,
    /// Presentation file instead of parameters.
    #[arg(long, value_name = "PATH", required_unless_present = "p")]
    pub input: Option<PathBuf>,
}

impl SourceArgs {
    fn source(self) -> Source {
        match (self.p, self.q, self.e, self.input) {
            (Some(p), Some(q), Some(e), _) => Source::Params(p, q, e),
            (_, _, _, Some(path)) => Source::File(path),
            _ => unreachable!("clap enforces parameters or --input"),
        }
    }
}

/// Runs the parsed command line, writing results to standard output.
pub fn run(cli: Cli) -> i32 {
    let mut out = io::stdout().lock();
    let r = match cli.command {
        Command::Enum {
            input,
            max_vertices,
            dot,
            json,
        } => commands::cmd_enum(
            &input,
            max_vertices,
            dot.as_deref(),
            json.as_deref(),
            &mut out,
        ),
        Command::Montesinos {
            params,
            check,
            aut,
            max_vertices,
            dot,
            json,
        } => commands::cmd_montesinos(
            &MontesinosArgs {
                p: params.p,
                q: params.q,
                e: params.e,
                max_vertices,
                check,
                aut,
                dot,
                json,
            },
            &mut out,
        ),
        Command::Sweep {
            q_max,
            e_min,
            e_max,
            check,
            aut,
            timing,
            jobs,
            max_vertices,
            json,
        } => commands::cmd_sweep(
            &SweepArgs {
                q_max,
                e_min,
                e_max,
                max_vertices,
                check,
                aut,
                timing,
                jobs,
                json,
            },
            &mut out,
        ),
        Command::Geodesics {
            source,
            max_vertices,
        } => commands::cmd_geodesics(&source.source(), max_vertices, &mut out),
        Command::Aut {
            source,
            max_vertices,
        } => commands::cmd_aut(&source.source(), max_vertices, &mut out),
    };
    commands::finish(r)
}
