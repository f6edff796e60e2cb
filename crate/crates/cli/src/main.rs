use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use polycount_core::Exec;

mod report;

#[derive(Debug, Parser)]
#[command(name = "polycount", version, about = "Counts of d-polytopes with d+3 vertices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Run every data-parallel loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    /// Worker threads for the parallel loops (default: one per core).
    #[arg(long, short, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combinatorial, oriented and achiral counts for d = 2..=max-d.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        max_d: u64,
    },
    /// Cross-check every counting route; exits 1 on any mismatch.
    Verify {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=14))]
        max_size: u64,
    },
    /// Growth constants and convergence of the exact counts.
    Asymptotics {
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(10..))]
        max_d: u64,
    },
    /// Time the coefficient table over a doubling ladder of N.
    Bench {
        /// Largest N of the ladder.
        #[arg(long, default_value_t = 4000, value_parser = clap::value_parser!(u64).range(100..))]
        max_n: u64,
        /// Number of doublings below max-n.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=10))]
        steps: u64,
    },
}

fn precision() -> anyhow::Result<usize> {
    match std::env::var("POLYCOUNT_PRECISION") {
        Err(_) => Ok(12),
        Ok(v) => {
            let p: usize = v.trim().parse().with_context(|| format!("POLYCOUNT_PRECISION={v:?}"))?;
            anyhow::ensure!((1..=17).contains(&p), "POLYCOUNT_PRECISION must be in 1..=17, got {p}");
            Ok(p)
        }
    }
}

fn run(cli: Cli, precision: usize) -> anyhow::Result<bool> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let ok = match cli.command {
        Command::Table { max_d } => {
            let rows = polycount_core::polytopes::coefficient_table(max_d as usize, exec)?;
            report::table(&mut sink, cli.format, &rows)?;
            true
        }
        Command::Verify { max_size } => {
            let r = polycount_core::verify::run_verification(max_size as usize, exec)?;
            report::verify(&mut sink, cli.format, &r)?;
            r.passed()
        }
        Command::Asymptotics { max_d } => {
            let r = polycount_core::asymptotics::convergence_report(max_d as usize, exec)?;
            report::asymptotics(&mut sink, cli.format, &r, precision)?;
            true
        }
        Command::Bench { max_n, steps } => {
            let ladder = report::ladder(max_n as usize, steps as usize);
            let b = report::bench(&ladder)?;
            report::write_bench(&mut sink, cli.format, &b)?;
            b.sub_quadratic()
        }
    };
    sink.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let precision = match precision() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("polycount: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j as usize).build_global() {
            eprintln!("polycount: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli, precision) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("polycount: {e:#}");
            ExitCode::from(1)
        }
    }
}
