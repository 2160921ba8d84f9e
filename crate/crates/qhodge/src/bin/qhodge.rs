//! `qhodge`: command-line front end over the library's report module.
//!
//! Exit status: 0 if every requested verification passes, 1 if a check fails,
//! 2 on invalid flags.

use clap::{Args, Parser, Subcommand};
use qhodge::field::FieldSpec;
use qhodge::partition::{GenPartition, GroupSpec};
use qhodge::report::{emit, parse_signs, run, Command, Format, RunConfig};
use qhodge::spectral::ZSpec;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qhodge", version, about = "Exact Hodge theory and Laplace-Beltrami spectra for bicovariant calculi on quantum groups")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Closed-form eigenvalue E^tau_lambda of the Laplace-Beltrami operator.
    Spectrum(Common),
    /// Exact zero set of E_{lambda,mu} over a window of partitions.
    Regularity(Common),
    /// Zero set when z^N q^-2 is a primitive m-th root of unity.
    RootOfUnity(Common),
    /// Exterior dimensions, coinvariant dimensions and predicted cohomology.
    Poincare(Common),
    /// Ranks of the braided antisymmetrizers A_k^+ and A_k^-.
    Exterior(Common),
    /// Hodge decomposition, harmonic forms and the spectrum cross-check.
    Hodge(Common),
    /// Braid, Hecke, metric, contraction and Laplacian identities.
    BraidCheck(Common),
    /// Duality of d and the codifferential, and the weak isomorphism.
    DualityCheck(Common),
}

#[derive(Args)]
struct Common {
    /// glq, slq, oq, soq or spq.
    #[arg(long, default_value = "glq")]
    group: String,
    #[arg(long = "N", default_value_t = 2)]
    n: usize,
    /// symbolic, a rational number, or root-of-unity:<m>.
    #[arg(long)]
    z: Option<ZSpec>,
    /// gl-symbolic, sl-w or fp:<prime>:<seed> (prime 0 draws one from the seed).
    #[arg(long)]
    field: Option<FieldSpec>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_boxes: Option<u32>,
    /// Bound on the absolute value of the parts.
    #[arg(long)]
    window: Option<i32>,
    /// Order of the root of unity.
    #[arg(long)]
    m: Option<u32>,
    /// Partition such as "2,-1".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    /// +, - or both: selects the codifferential.
    #[arg(long, default_value = "both", allow_hyphen_values = true, value_parser = signs)]
    sign: Signs,
    /// +, - or both: selects the calculus.
    #[arg(long, default_value = "both", allow_hyphen_values = true, value_parser = signs)]
    tau: Signs,
    /// json, csv or text.
    #[arg(long, default_value = "json")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A `+`/`-`/`both` selection parsed as one value.
#[derive(Clone)]
struct Signs(Vec<qhodge::spectral::Tau>);

fn signs(s: &str) -> Result<Signs, String> {
    parse_signs(s).map(Signs)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, a) = match cli.command {
        Sub::Spectrum(a) => (Command::Spectrum, a),
        Sub::Regularity(a) => (Command::Regularity, a),
        Sub::RootOfUnity(a) => (Command::RootOfUnity, a),
        Sub::Poincare(a) => (Command::Poincare, a),
        Sub::Exterior(a) => (Command::Exterior, a),
        Sub::Hodge(a) => (Command::Hodge, a),
        Sub::BraidCheck(a) => (Command::BraidCheck, a),
        Sub::DualityCheck(a) => (Command::DualityCheck, a),
    };
    let group = match GroupSpec::from_name(&a.group, a.n) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let lambda = match a.lambda.as_deref().map(|s| GenPartition::parse(s, a.n)).transpose() {
        Ok(l) => l,
        Err(e) => return usage(e),
    };
    let mut cfg = RunConfig::new(command, group);
    cfg.z = a.z;
    cfg.field = a.field;
    cfg.max_degree = a.max_degree;
    cfg.max_boxes = a.max_boxes;
    cfg.window = a.window;
    cfg.m = a.m;
    cfg.lambda = lambda;
    cfg.degree = a.degree;
    cfg.signs = a.sign.0;
    cfg.taus = a.tau.0;
    cfg.seed = a.seed;
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = emit(&report, a.format);
    match &a.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(1);
            }
        }
        None => {
            use std::io::Write;
            // a closed pipe (e.g. `| head`) is not an error of the run
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
