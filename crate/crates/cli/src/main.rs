//! `homlab`: exact homomorphism counts, family generation, structural
//! analysis and extremal verification from the command line.
//!
//! Exit codes: 0 success (PASS or REPORT), 1 FAIL, 2 parse or usage error,
//! 3 size limit exceeded, 4 hypothesis not applicable.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use homlab::family::FamilyKind;
use homlab::Error;

#[derive(Parser)]
#[command(
    name = "homlab",
    version,
    about = "Exact graph homomorphism counts and extremal checks"
)]
struct Cli {
    /// Worker threads for family-wide counting.
    #[arg(long, global = true, env = "HOMLAB_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count hom(G, H) for a graph file or a generated family.
    Count(CountArgs),
    /// Run a theorem harness and write a report.
    Verify(VerifyArgs),
    /// Degree profile, s(H) and thresholds of a target.
    Bounds {
        #[arg(long = "h")]
        h: PathBuf,
    },
    /// Enumerate a family, one graph6 line per isomorphism class.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "g6")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connectivity, minimality and an ear decomposition for each graph.
    Analyze {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Args)]
pub struct CountArgs {
    #[arg(long, conflicts_with_all = ["family", "n"], required_unless_present = "family")]
    graph: Option<PathBuf>,
    #[arg(long, value_parser = parse_family, requires = "n")]
    family: Option<FamilyKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "h")]
    h: PathBuf,
    /// Pin a source vertex to a target vertex, as `v=i`.
    #[arg(long = "pin", value_parser = parse_pin)]
    pins: Vec<(usize, usize)>,
    /// Directory holding the count cache.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    theorem: Theorem,
    /// Report destination; `.csv` selects CSV, anything else JSON.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Theorem {
    /// Path minimality among trees for H°(ℓ).
    TreeMin {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
    },
    /// Star maximality among trees.
    TreeMax {
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// K_{2,n-2} maximality among 2-connected graphs (report mode).
    TwoConn {
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long)]
        n: usize,
        /// Restrict to minimally 2-connected graphs.
        #[arg(long)]
        minimal: bool,
        /// Read the family from a graph6 file instead of generating it.
        #[arg(long)]
        graphs: Option<PathBuf>,
    },
    /// Cycle maximality for proper q-colorings.
    CycleKq {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_family, default_value = "2conn")]
        family: FamilyKind,
        #[arg(long)]
        graphs: Option<PathBuf>,
    },
    /// Endpoint-pinned path bound.
    Lemma10 {
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// hom(P_n, H) <= hom(K_{1,n-1}, H) for n up to the given bound.
    HoffmanLondon {
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long)]
        n: usize,
    },
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_pin(s: &str) -> Result<(usize, usize), String> {
    let (v, i) = s.split_once('=').ok_or("expected v=i")?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| format!("bad source vertex in {s:?}"))?;
    let i = i
        .trim()
        .parse()
        .map_err(|_| format!("bad target vertex in {s:?}"))?;
    Ok((v, i))
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Ingest { .. } | Error::Io(_) => 2,
        Error::InvalidGraph(_) | Error::InvalidParameter(_) => 2,
        Error::LimitExceeded { .. } => 3,
        Error::NotApplicable(_) => 4,
        Error::CutoffExceeded { .. } | Error::InvalidDecomposition(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("homlab: cannot size worker pool: {e}");
        }
    }
    let result = match cli.command {
        Command::Count(args) => commands::count(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Bounds { h } => commands::bounds(&h),
        Command::Gen {
            family,
            n,
            format,
            out,
        } => commands::gen(family, n, &format, out.as_deref()),
        Command::Analyze { graph } => commands::analyze(&graph),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = exit_code(&e);
            if code == 4 {
                println!("N/A not-applicable: {e}");
            }
            eprintln!("homlab: {e}");
            ExitCode::from(code)
        }
    }
}
