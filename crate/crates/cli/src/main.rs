//! `leonard`: build a Leonard system from a parameter-array file, inspect
//! its bases and transition maps, and run the verification suites.
//!
//! Exit codes: 0 everything passed, 1 a mathematical check failed, 2 usage
//! or I/O error.

mod input;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use leonard_core::dagger::DaggerError;
use leonard_core::suite::SuiteError;
use leonard_core::transition::{formula, standard_table, BasisTag, Evaluator, Orientation};
use leonard_core::{
    anchor_vectors, apply, compute_gram, enumerate_bases, oracle_change_of_basis, run_suites, transform_parameter_array, validate_system, D4Element, LeonardError, LeonardSystem, ParameterArray, Suite,
    SuiteOptions, Vector,
};

use crate::input::{parse_seed, ParameterArrayFile, RawArray};

/// Stdout writes; a closed pipe (e.g. `| head`) ends the process quietly.
fn emit(args: fmt::Arguments) {
    if let Err(e) = io::stdout().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

macro_rules! outln {
    () => { emit(format_args!("\n")) };
    ($($t:tt)*) => {{ out!($($t)*); emit(format_args!("\n")) }};
}

/// Rescale draws are reproducible run to run.
const RESCALE_SEED: u64 = 1;

#[derive(Parser)]
#[command(name = "leonard", version, about = "Exact verification of Leonard system transition maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the system and check the Leonard system axioms.
    Validate { file: PathBuf },
    /// Evaluate the transition map between two of the 24 bases.
    Transition {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = Emit::Both)]
        emit: Emit,
        /// Explicit anchor seed "v0,v1,..."; each anchor is its projection.
        #[arg(long)]
        seed_anchors: Option<String>,
    },
    /// Run verification suites.
    Verify {
        file: PathBuf,
        /// Comma-separated subset of axioms,bases,identities,scalars,d4,transitions.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
        /// Repeat every suite on all eight relatives.
        #[arg(long)]
        relatives: bool,
        /// Write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        seed_anchors: Option<String>,
        /// Rerun with rescaled anchors and Gram form and compare verdicts.
        #[arg(long)]
        rescale_check: bool,
    },
    /// Print the parameter arrays of the eight relatives.
    Orbit { file: PathBuf },
    /// List the 24 basis tags.
    Tags,
    /// Print the formula selection table.
    Formulas,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Matrix,
    Formula,
    Both,
}

enum Exit {
    Usage(anyhow::Error),
    Failed(String),
}

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Exit {
        Exit::Usage(e)
    }
}

fn failed(stage: &str, e: impl std::fmt::Display) -> Exit {
    Exit::Failed(format!("FAIL {stage}: {e}"))
}

fn stage_of(e: &LeonardError) -> &'static str {
    match e {
        LeonardError::Invariant(_) => "array invariant",
        LeonardError::SplitMismatch(_) => "split sequences",
        _ => "construction",
    }
}

fn suite_failure(e: SuiteError) -> Exit {
    match e {
        SuiteError::Leonard(e) => failed(stage_of(&e), e),
        other => failed("verification", other),
    }
}

fn load(path: &Path) -> Result<RawArray, Exit> {
    Ok(ParameterArrayFile::read(path)?.parse()?)
}

/// The system and its parameter array; ϕ is cross-checked when given.
fn build(raw: &RawArray) -> Result<(LeonardSystem, ParameterArray), Exit> {
    let (th, ths, vp) = (raw.theta.clone(), raw.theta_star.clone(), raw.varphi.clone());
    let sys = match &raw.phi {
        Some(phi) => {
            let pa = ParameterArray::new(raw.field, th, ths, vp, phi.clone()).map_err(|e| failed(stage_of(&e), e))?;
            LeonardSystem::from_split_form(&pa).map_err(|e| failed(stage_of(&e), e))?
        }
        None => LeonardSystem::from_split_data(th, ths, vp).map_err(|e| failed(stage_of(&e), e))?,
    };
    let pa = sys.parameter_array().map_err(|e| failed("split sequences", e))?;
    Ok((sys, pa))
}

fn seed(raw: &RawArray, text: Option<&str>) -> Result<Option<Vector>, Exit> {
    text.map(|t| parse_seed(raw.field, t)).transpose().map_err(Exit::Usage)
}

fn anchors_for(sys: &LeonardSystem, seed: Option<&Vector>) -> Result<leonard_core::AnchorVectors, Exit> {
    anchor_vectors(sys, seed).map_err(|e| match e {
        DaggerError::ZeroSeedImage(_) | DaggerError::SeedLength { .. } => Exit::Usage(anyhow!("--seed-anchors: {e}")),
        other => failed("anchors", other),
    })
}

fn cmd_validate(file: &Path) -> Result<bool, Exit> {
    let raw = load(file)?;
    let (sys, pa) = build(&raw)?;
    outln!("parameter array: {pa}");
    let report = validate_system(sys.a(), sys.a_star());
    out!("{report}");
    for c in sys.axiom_checks() {
        outln!("[{}] axiom {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let ok = report.passed() && sys.axiom_checks().iter().all(|c| c.passed);
    outln!("result: {}", if ok { "PASS" } else { "FAIL" });
    Ok(ok)
}

fn parse_tag(s: &str) -> Result<BasisTag, Exit> {
    s.parse::<BasisTag>().map_err(|e| Exit::Usage(anyhow!(e)))
}

fn cmd_transition(file: &Path, from: &str, to: &str, emit: Emit, seed_text: Option<&str>) -> Result<bool, Exit> {
    let (source, target) = (parse_tag(from)?, parse_tag(to)?);
    let raw = load(file)?;
    let seed = seed(&raw, seed_text)?;
    let (sys, _) = build(&raw)?;
    let g = compute_gram(&sys).map_err(|e| failed("gram form", e))?;
    let anchors = anchors_for(&sys, seed.as_ref())?;
    let f = formula(source, target);
    let t = Evaluator::new(&sys, &g, &anchors).and_then(|ev| ev.evaluate(&f)).map_err(|e| failed("evaluation", e))?;
    let bases = enumerate_bases(&sys, &anchors).map_err(|e| failed("bases", e))?;
    let oracle = oracle_change_of_basis(&bases[&source], &bases[&target]).map_err(|e| failed("oracle", e))?;
    let matches = t == oracle;
    if emit != Emit::Matrix {
        outln!("{}", f.describe());
    }
    if emit != Emit::Formula {
        outln!("T =");
        out!("{t}");
    }
    if matches {
        outln!("oracle: match");
    } else {
        outln!("oracle: MISMATCH");
        outln!("oracle T =");
        out!("{oracle}");
    }
    Ok(matches)
}

fn cmd_verify(file: &Path, suites: Option<&[String]>, relatives: bool, json: Option<&Path>, seed_text: Option<&str>, rescale: bool) -> Result<bool, Exit> {
    let suites = match suites {
        Some(names) => names.iter().map(|n| n.trim().parse::<Suite>()).collect::<Result<Vec<_>, _>>().map_err(|e| Exit::Usage(anyhow!(e)))?,
        None => Suite::ALL.to_vec(),
    };
    let raw = load(file)?;
    let seed = seed(&raw, seed_text)?;
    let (sys, _) = build(&raw)?;
    if let Some(s) = &seed {
        // surface a bad seed as a usage error before running anything
        for (_, rel) in leonard_core::orbit(&sys).into_iter().filter(|(g, _)| relatives || *g == D4Element::IDENTITY) {
            anchors_for(&rel, Some(s))?;
        }
    }
    let opts = SuiteOptions {
        suites,
        relatives,
        seed,
        rescale_check: rescale.then_some(RESCALE_SEED),
    };
    let report = run_suites(&sys, &opts).map_err(suite_failure)?;
    out!("{report}");
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report).context("serializing report")?;
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.passed)
}

fn cmd_orbit(file: &Path) -> Result<bool, Exit> {
    let raw = load(file)?;
    let (sys, pa) = build(&raw)?;
    let mut ok = true;
    for g in D4Element::all() {
        let row = transform_parameter_array(g, &pa);
        let direct = apply(g, &sys).parameter_array().map_err(|e| failed("orbit", e))?;
        let flag = if direct == row { "" } else { "  MISMATCH with the relative's own array" };
        ok &= direct == row;
        outln!("{:<6} {:<16} {row}{flag}", g.symbol(), g.name());
    }
    Ok(ok)
}

fn cmd_tags() {
    for t in BasisTag::all() {
        outln!("{:<16} {{{}}}", t.name(), t.expression());
    }
}

fn cmd_formulas() {
    outln!("| source (fwd / rev) | target anchor | equations (fwd / rev) | operator (fwd source) |");
    outln!("|---|---|---|---|");
    for t in standard_table().templates {
        let fwd = BasisTag::new(t.source_family, Orientation::Fwd, t.source_anchor).expect("legal source");
        let rev = BasisTag { orientation: Orientation::Rev, ..fwd };
        outln!(
            "| {} / {} | {} | {} / {} | {} |",
            fwd,
            rev,
            t.target_anchor.name(),
            t.equation(Orientation::Fwd),
            t.equation(Orientation::Rev),
            t.render(Orientation::Fwd)
        );
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Transition { file, from, to, emit, seed_anchors } => cmd_transition(file, from, to, *emit, seed_anchors.as_deref()),
        Command::Verify {
            file,
            suites,
            relatives,
            json,
            seed_anchors,
            rescale_check,
        } => cmd_verify(file, suites.as_deref(), *relatives, json.as_deref(), seed_anchors.as_deref(), *rescale_check),
        Command::Orbit { file } => cmd_orbit(file),
        Command::Tags => {
            cmd_tags();
            Ok(true)
        }
        Command::Formulas => {
            cmd_formulas();
            Ok(true)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Exit::Failed(msg)) => {
            outln!("{msg}");
            ExitCode::from(1)
        }
        Err(Exit::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
