//! `ybx`: load Yang–Baxter objects from JSON, run checks and constructions,
//! and print a JSON run report.
//!
//! Exit status is 0 when every check passed, 1 when some check failed and 2
//! when the input could not be read or understood.

mod commands;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ybx", version, about = "Exact Yang–Baxter and braid equation workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Write the constructed object (if any) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write the run report here instead of standard output.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Print nothing; only the exit status tells the outcome.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true, env = "YBX_JOBS")]
    pub jobs: Option<usize>,
    /// Seed for any random sampling.
    #[arg(long, global = true, default_value_t = 20240611)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum EquationArg {
    Ybe,
    Braid,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum DirectionArg {
    YbToBraid,
    BraidToYb,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
pub enum ConventionArg {
    #[default]
    Theorem,
    Preamble,
}

#[derive(Args, Debug)]
pub struct Triple {
    /// Solution on B.
    #[arg(long)]
    pub rb: PathBuf,
    /// Solution on C.
    #[arg(long)]
    pub rc: PathBuf,
    /// Cross map or matrix on C × B.
    #[arg(long)]
    pub cross: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Yang–Baxter equation for a set map or a matrix.
    CheckYbe { file: PathBuf },
    /// Check the braid equation for a set map or a matrix.
    CheckBraid { file: PathBuf },
    /// Compose with the swap, turning a YBE solution into a braid solution or back.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "yb-to-braid")]
        direction: DirectionArg,
    },
    /// Self-distributivity of a binary operation, or of the conjugation quandle of a group.
    Quandle { file: PathBuf },
    /// The guitar map of a nondegenerate solution.
    Guitar { file: PathBuf },
    /// Extend two solutions along a cross map.
    Extend {
        #[command(flatten)]
        triple: Triple,
        /// Treat the inputs as braid solutions.
        #[arg(long)]
        braid: bool,
    },
    /// Every compatible cross map between two solutions.
    SearchCross {
        #[arg(long)]
        rb: PathBuf,
        #[arg(long)]
        rc: PathBuf,
        #[arg(long)]
        invertible: bool,
    },
    /// The twist data of an extension and the twist conditions.
    Twist {
        #[command(flatten)]
        triple: Triple,
    },
    /// Check the classical Yang–Baxter equation.
    Cybe {
        file: PathBuf,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Check the quantum Yang–Baxter equation.
    Qybe {
        file: PathBuf,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Extend classical r-matrices.
    ClassicalExtend {
        #[command(flatten)]
        triple: Triple,
    },
    /// Extend quantum R-matrices.
    QuantumExtend {
        #[command(flatten)]
        triple: Triple,
    },
    /// Check the Hopf algebra axioms, and quasi-triangularity if an R is given.
    HopfCheck {
        file: PathBuf,
        #[arg(long)]
        r: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "theorem")]
        convention: ConventionArg,
    },
    /// The product Hopf algebra of B and C along a cross element.
    HopfProduct {
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        c: PathBuf,
        #[arg(long)]
        cross: PathBuf,
        #[arg(long, requires = "rc")]
        rb: Option<PathBuf>,
        #[arg(long, requires = "rb")]
        rc: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "theorem")]
        convention: ConventionArg,
    },
    /// Check a representation against a group presentation.
    RepCheck {
        /// bn, vbn, vpn, hn or yn, optionally with n attached (vp4, y3).
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        n: Option<usize>,
        /// The solution for bn, vbn, vpn and hn.
        #[arg(long)]
        r: Option<PathBuf>,
        #[arg(long)]
        rb: Option<PathBuf>,
        #[arg(long)]
        rc: Option<PathBuf>,
        #[arg(long)]
        cross: Option<PathBuf>,
    },
    /// The simplicial identities on the virtual pure braid groups.
    Simplicial {
        #[arg(long)]
        r: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Apply the doubling map to a word.
    Doubling {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Double a braid word instead of a virtual pure braid word.
        #[arg(long)]
        braid: bool,
    },
    /// All solutions on a small set.
    Census {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "ybe")]
        equation: EquationArg,
        #[arg(long)]
        invertible: bool,
        /// Keep a seeded random sample of this many solutions.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// The two claims about naive face and degeneracy maps on B₃.
    Counterexamples,
    /// Embed a matrix into chosen factors of a tensor product.
    Place { file: PathBuf },
    /// Export a presentation.
    Presentation {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.global.quiet;
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            if !quiet {
                eprintln!("ybx: cannot start {jobs} workers: {e}");
            }
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let mut session = match commands::run(&cli.command, cli.global.seed) {
        Ok(s) => s,
        Err(e) => {
            if !quiet {
                eprintln!("ybx: {e:#}");
            }
            return ExitCode::from(2);
        }
    };
    if let (Some(path), Some(value)) = (&cli.global.out, session.take_output()) {
        if let Err(e) = fs::write(path, serde_json::to_string_pretty(&value).expect("json") + "\n") {
            if !quiet {
                eprintln!("ybx: cannot write {}: {e}", path.display());
            }
            return ExitCode::from(2);
        }
    }
    let report = session.finish(start.elapsed().as_millis() as u64);
    let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    match &cli.global.report {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                if !quiet {
                    eprintln!("ybx: cannot write {}: {e}", path.display());
                }
                return ExitCode::from(2);
            }
        }
        None if !quiet => print!("{text}"),
        None => {}
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        if !quiet {
            for c in report.checks.iter().filter(|c| !c.report.passed) {
                let first = &c.report.failures[0];
                eprintln!("ybx: {} failed: {} at {:?}", c.name, first.relation, first.witness);
            }
        }
        ExitCode::from(1)
    }
}
