//! `kampen`: embedding obstructions, Z/2-indices of deleted products and
//! exact coincidence search, with JSON reports on standard output.

mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};

use commands::{IndexMode, ManifoldSource};
use error::CliError;
use report::{Inputs, Outcome};

#[derive(Parser, Debug)]
#[command(name = "kampen", version, about = "Embedding obstructions and van Kampen-Flores computations")]
struct Cli {
    /// Worker threads (0 = one per core). Results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Single-line JSON instead of pretty-printed.
    #[arg(long, global = true)]
    compact: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("manifold").required(true).args(["rp", "total"])))]
struct ManifoldArgs {
    /// Real projective space of this dimension.
    #[arg(long)]
    rp: Option<u32>,
    /// Total tangent class file.
    #[arg(long)]
    total: Option<PathBuf>,
}

impl ManifoldArgs {
    fn source(&self) -> ManifoldSource {
        match (&self.rp, &self.total) {
            (Some(d), _) => ManifoldSource::Projective(*d),
            (None, Some(p)) => ManifoldSource::Total(p.clone()),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dual Stiefel-Whitney classes and D.
    Dualsw(ManifoldArgs),
    /// D alone.
    Capd(ManifoldArgs),
    /// Witness that t^m is divisible by the dual polynomial.
    Division {
        #[command(flatten)]
        manifold: ManifoldArgs,
        #[arg(long)]
        m: u32,
    },
    /// Z/2-index of a deleted product.
    Index {
        #[arg(long)]
        complex: PathBuf,
        /// full, cap:M or family:<file>.
        #[arg(long, default_value = "full")]
        mode: IndexMode,
        /// Dimension cap for family mode.
        #[arg(long)]
        cap: Option<usize>,
        /// Materialise cells only up to this degree.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Exhaustive check of the cover hypothesis for a family.
    CoverCheck {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Disjoint pairs of simplices with intersecting images.
    Coincide {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        points: PathBuf,
        /// Only pairs with dim σ + dim τ at most this.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Scan the straight-line homotopy from a map to its mirror image.
    Homotopy {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value_t = 8)]
        steps: u32,
        /// Gap (L-infinity, rational) below which a frame is a near miss.
        #[arg(long, default_value = "1/100")]
        tolerance: String,
    },
    /// γ-operation table for RP^d and the resulting bound.
    Ktheory {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        n: usize,
    },
    /// Frick-Harrison admissibility of (l, m, k, r).
    Fh {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long = "cap-d", alias = "capD", allow_hyphen_values = true)]
        cap_d: i64,
    },
    /// Emit a built-in complex: k5, rp2, sphere:D, simplex:N.
    Complex {
        #[arg(long)]
        builtin: String,
        /// Also write the bare complex file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random rational vertex images.
    RandomMap {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        dimension: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        bound: u32,
        /// Also write the bare points file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dualsw(_) => "dualsw",
            Command::Capd(_) => "capd",
            Command::Division { .. } => "division",
            Command::Index { .. } => "index",
            Command::CoverCheck { .. } => "cover-check",
            Command::Coincide { .. } => "coincide",
            Command::Homotopy { .. } => "homotopy",
            Command::Ktheory { .. } => "ktheory",
            Command::Fh { .. } => "fh",
            Command::Complex { .. } => "complex",
            Command::RandomMap { .. } => "random-map",
        }
    }

    fn run(&self, inputs: &mut Inputs) -> Result<Outcome, CliError> {
        match self {
            Command::Dualsw(m) => commands::dualsw(inputs, &m.source()),
            Command::Capd(m) => commands::capd(inputs, &m.source()),
            Command::Division { manifold, m } => commands::division(inputs, &manifold.source(), *m),
            Command::Index {
                complex,
                mode,
                cap,
                max_degree,
            } => commands::index(inputs, complex, mode, *cap, *max_degree),
            Command::CoverCheck { complex, family, m, r } => commands::cover_check(inputs, complex, family, *m, *r),
            Command::Coincide { complex, points, cap } => commands::coincide(inputs, complex, points, *cap),
            Command::Homotopy {
                complex,
                points,
                steps,
                tolerance,
            } => commands::homotopy(inputs, complex, points, *steps, tolerance),
            Command::Ktheory { d, f, n } => commands::ktheory(*d, *f, *n),
            Command::Fh { l, m, k, r, cap_d } => commands::fh(*l, *m, *k, *r, *cap_d),
            Command::Complex { builtin, out } => commands::complex(builtin, out.as_deref()),
            Command::RandomMap {
                complex,
                dimension,
                seed,
                bound,
                out,
            } => commands::random_map(inputs, complex, *dimension, *seed, *bound, out.as_deref()),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start thread pool: {e}");
            return ExitCode::from(2);
        }
    };

    let name = cli.command.name();
    let started = Instant::now();
    let mut inputs = Inputs::new(name);
    let outcome = pool.install(|| cli.command.run(&mut inputs));
    match outcome {
        Ok(outcome) => {
            let (report, positive) = report::assemble(name, inputs, outcome, started);
            let text = if cli.compact {
                serde_json::to_string(&report)
            } else {
                serde_json::to_string_pretty(&report)
            }
            .expect("report serializes");
            println!("{text}");
            log::debug!("{name} finished in {:.1} ms", report.timing.elapsed_ms);
            ExitCode::from(if positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
