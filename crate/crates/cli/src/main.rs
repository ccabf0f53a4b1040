//! `tforge` — command-line front end for the triangle-curve toolkit.
//!
//! Every subcommand prints a single versioned JSON report on stdout and
//! keeps diagnostics on stderr. Exit codes: 0 success, 1 domain error
//! (or a failing verification item), 2 usage error.

mod commands;
mod parse;
mod report;
mod reproduce;

use anyhow::Result;
use clap::{Parser, Subcommand};
use serde_json::Value;

use commands::GroupSpec;
use report::{Phases, RunReport, SCHEMA};

#[derive(Parser)]
#[command(
    name = "tforge",
    version,
    about = "Triangle curves, Belyi maps, monodromy classification, Beauville structures"
)]
struct Cli {
    /// RNG seed for the numeric solver (reports are deterministic per seed).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on worker threads (default: all available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Include per-phase wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Special hyperelliptic curves y² = f(x) and their isomorphisms.
    #[command(subcommand)]
    Curves(CurvesCmd),
    /// Build and verify a Belyi map for a special curve.
    Belyi {
        /// Genus g ≥ 2 of the curve.
        #[arg(long)]
        genus: u32,
        /// Rational branch parameter a (as p/q).
        #[arg(long, conflicts_with = "minpoly", allow_hyphen_values = true)]
        param: Option<String>,
        /// Minimal polynomial of an algebraic parameter: comma-separated
        /// rational coefficients, constant term first.
        #[arg(long, allow_hyphen_values = true)]
        minpoly: Option<String>,
    },
    /// Permutation-group computations on generating triples.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Monodromy of polynomial maps with two finite critical values.
    #[command(subcommand)]
    Dessins(DessinsCmd),
    /// Genus of the quotient-source curve for a triangle-group action.
    Genus {
        /// Group order (decimal, arbitrary precision).
        #[arg(long)]
        order: String,
        /// Branching signature m1,m2,m3.
        #[arg(long)]
        signature: String,
    },
    /// Unmixed Beauville structures on a finite permutation group.
    #[command(subcommand)]
    Beauville(BeauvilleCmd),
    /// Fundamental group of the Beauville surface: coset table,
    /// surface-group presentation, abelianization.
    Pi1 {
        #[command(flatten)]
        group: GroupSpec,
        /// First generating triple (three ';'-separated permutations).
        #[arg(long)]
        t1: String,
        /// Second generating triple.
        #[arg(long)]
        t2: String,
    },
    /// Polynomials with critical values in {0, 1}.
    #[command(subcommand)]
    Twocrit(TwocritCmd),
    /// Run the full reference pipeline and report pass/fail per item.
    ReproducePaper(reproduce::ReproduceArgs),
}

#[derive(Subcommand)]
enum CurvesCmd {
    /// Decide isomorphism of the curves with parameters a and b.
    Iso {
        /// Genus g ≥ 2.
        #[arg(long)]
        genus: u32,
        /// First branch parameter (rational p/q).
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Second branch parameter.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum PermCmd {
    /// Enumerate spherical generating triples with a given signature,
    /// up to simultaneous conjugation.
    Spherical {
        #[command(flatten)]
        group: GroupSpec,
        /// Orders m1,m2,m3 of the three generators.
        #[arg(long)]
        signature: String,
    },
    /// Hurwitz classes of spherical triples under braid moves.
    Hurwitz {
        #[command(flatten)]
        group: GroupSpec,
        /// Orders m1,m2,m3 of the three generators.
        #[arg(long)]
        signature: String,
        /// Braid moves only (default also allows simultaneous conjugation).
        #[arg(long)]
        braid_only: bool,
    },
    /// Search for a simultaneous conjugator between two tuples.
    Conj {
        #[command(flatten)]
        group: GroupSpec,
        /// First tuple (';'-separated permutations).
        #[arg(long)]
        t1: String,
        /// Second tuple (same length).
        #[arg(long)]
        t2: String,
    },
}

#[derive(Subcommand)]
enum DessinsCmd {
    /// Classify monodromy triples of polynomial type (n; mu, nu).
    Classify {
        /// Polynomial degree n.
        #[arg(long)]
        n: usize,
        /// Partition over the first critical value, e.g. 2,2,1,1,1.
        #[arg(long)]
        mu: String,
        /// Partition over the second critical value, e.g. 3,2,2.
        #[arg(long)]
        nu: String,
    },
    /// Normal closure of a monodromy pair: the induced regular cover.
    Closure {
        /// Permutation degree.
        #[arg(long)]
        degree: usize,
        /// Monodromy over 0, in cycle notation.
        #[arg(long)]
        sigma0: String,
        /// Monodromy over 1.
        #[arg(long)]
        sigma1: String,
    },
}

#[derive(Subcommand)]
enum BeauvilleCmd {
    /// Check whether two triples form an unmixed Beauville structure.
    Check {
        #[command(flatten)]
        group: GroupSpec,
        /// First generating triple (three ';'-separated permutations).
        #[arg(long)]
        t1: String,
        /// Second generating triple.
        #[arg(long)]
        t2: String,
    },
    /// Exhaustive search over pairs of spherical triples.
    Search {
        #[command(flatten)]
        group: GroupSpec,
        /// Upper bound on generator orders considered in signatures.
        #[arg(long, default_value_t = 30)]
        max_order: u64,
        /// Maximum number of structures listed in the report.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
}

#[derive(Subcommand)]
enum TwocritCmd {
    /// Solve the critical-point system for type (n; mu, nu) numerically.
    Solve {
        /// Polynomial degree n.
        #[arg(long)]
        n: usize,
        /// Multiplicities over critical value 0, e.g. 2,2,1,1,1.
        #[arg(long)]
        mu: String,
        /// Multiplicities over critical value 1, e.g. 3,2,2.
        #[arg(long)]
        nu: String,
        /// Number of random Newton starts.
        #[arg(long, default_value_t = 512)]
        attempts: usize,
        /// Convergence and verification tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

fn dispatch(cli: &Cli, phases: &mut Phases) -> Result<(&'static str, Value, Value, bool)> {
    let ok = true;
    let (command, (inputs, results)) = match &cli.command {
        Command::Curves(CurvesCmd::Iso { genus, a, b }) => {
            ("curves iso", commands::curves_iso(*genus, a, b, phases)?)
        }
        Command::Belyi {
            genus,
            param,
            minpoly,
        } => (
            "belyi",
            commands::belyi(*genus, param.as_deref(), minpoly.as_deref(), phases)?,
        ),
        Command::Perm(PermCmd::Spherical { group, signature }) => (
            "perm spherical",
            commands::perm_spherical(group, signature, phases)?,
        ),
        Command::Perm(PermCmd::Hurwitz {
            group,
            signature,
            braid_only,
        }) => (
            "perm hurwitz",
            commands::perm_hurwitz(group, signature, *braid_only, phases)?,
        ),
        Command::Perm(PermCmd::Conj { group, t1, t2 }) => {
            ("perm conj", commands::perm_conj(group, t1, t2, phases)?)
        }
        Command::Dessins(DessinsCmd::Classify { n, mu, nu }) => (
            "dessins classify",
            commands::dessins_classify(*n, mu, nu, phases)?,
        ),
        Command::Dessins(DessinsCmd::Closure {
            degree,
            sigma0,
            sigma1,
        }) => (
            "dessins closure",
            commands::dessins_closure(*degree, sigma0, sigma1, phases)?,
        ),
        Command::Genus { order, signature } => {
            ("genus", commands::genus(order, signature, phases)?)
        }
        Command::Beauville(BeauvilleCmd::Check { group, t1, t2 }) => (
            "beauville check",
            commands::beauville_check(group, t1, t2, phases)?,
        ),
        Command::Beauville(BeauvilleCmd::Search {
            group,
            max_order,
            limit,
        }) => (
            "beauville search",
            commands::beauville_search(group, *max_order, *limit, phases)?,
        ),
        Command::Pi1 { group, t1, t2 } => ("pi1", commands::pi1(group, t1, t2, phases)?),
        Command::Twocrit(TwocritCmd::Solve {
            n,
            mu,
            nu,
            attempts,
            tol,
        }) => (
            "twocrit solve",
            commands::twocrit_solve(*n, mu, nu, *attempts, *tol, cli.seed, phases)?,
        ),
        Command::ReproducePaper(args) => {
            let (inputs, results, all_passed) = reproduce::run(args, phases)?;
            return Ok(("reproduce-paper", inputs, results, all_passed));
        }
    };
    Ok((command, inputs, results, ok))
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }
    let mut phases = Phases::new(cli.timings);
    let (command, inputs, results, ok) = dispatch(cli, &mut phases)?;
    let report = RunReport {
        schema: SCHEMA,
        command,
        inputs,
        results,
        timings_ms: phases.finish(),
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ok)
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
