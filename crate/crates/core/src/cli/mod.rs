//! The `repkit` command line: load representations and formulas from files,
//! evaluate, run the verification suites, and print deterministic reports.
//!
//! Exit codes: 0 when everything holds or passes, 1 on a semantic failure,
//! 2 on an input error (unreadable or invalid file, bad formula, guard hit
//! in strict mode).

pub mod repfile;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::class_theory::{run_verification, Fault, Guards, Mode, Record, Report, SuiteConfig, VerifyConfig};
use crate::error::{Error, Result};
use crate::semantics::HomSpace;
use crate::starter::starter_catalog;
use repfile::{load_catalog, load_formulas, load_pool, load_rep, save_rep, RepFile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "repkit", version, about = "Finite representations (V, G) and their two-sorted logic")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every command.
#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Base seed for every random sample (decimal or 0x-prefixed hex).
    #[arg(long, global = true, env = "REPKIT_SEED", default_value = "0", value_parser = parse_seed)]
    pub seed: u64,
    /// Largest hom-space evaluated.
    #[arg(long, global = true, default_value_t = Guards::default().points, value_parser = positive)]
    pub guard_points: usize,
    /// Largest group order whose subgroups are enumerated.
    #[arg(long, global = true, default_value_t = Guards::default().subgroup_order, value_parser = positive)]
    pub guard_subgroup: usize,
    /// Largest |V|·|G| for congruence enumeration.
    #[arg(long, global = true, default_value_t = Guards::default().congruence_points, value_parser = positive)]
    pub guard_congruence: usize,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Strict)]
    pub mode: ModeArg,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Deliberate defect, for testing the harness (known: skip-beta0).
    #[arg(long, global = true)]
    pub inject_fault: Option<Fault>,
}

impl RunConfig {
    pub fn guards(&self) -> Guards {
        Guards {
            points: self.guard_points,
            subgroup_order: self.guard_subgroup,
            congruence_points: self.guard_congruence,
            ..Guards::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Permissive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Permissive => Mode::Permissive,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether every formula of a batch holds in a representation.
    Check { rep: PathBuf, formulas: PathBuf },
    /// Dump Val(u) as a bitset over V^n × G^m.
    Val {
        rep: PathBuf,
        formula: String,
        /// Number of x-coordinates; defaults to the largest x index in the formula.
        #[arg(long)]
        n: Option<u32>,
        /// Number of y-coordinates; defaults to the largest y index in the formula.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Run every verification suite over a catalog directory (`*.rep`, with
    /// the `*.fml` files as the formula pool for the Galois checks).
    Verify {
        dir: PathBuf,
        #[command(flatten)]
        sizes: SampleSizes,
    },
    /// Write the bundled starter catalog into a directory.
    Starter { dir: PathBuf },
}

#[derive(Clone, Debug, Args)]
pub struct SampleSizes {
    #[arg(long, default_value_t = VerifyConfig::default().suite.formulas_per_rep)]
    pub formulas_per_rep: usize,
    #[arg(long, default_value_t = VerifyConfig::default().quantifier_pairs)]
    pub quantifier_pairs: usize,
    #[arg(long, default_value_t = VerifyConfig::default().val_formulas_per_rep)]
    pub val_formulas_per_rep: usize,
    #[arg(long, default_value_t = VerifyConfig::default().frozen_triples)]
    pub frozen_triples: usize,
    #[arg(long, default_value_t = VerifyConfig::default().galois_samples)]
    pub galois_samples: usize,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("guard must be positive".to_string()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Output text and exit code of one command.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

/// `check`: one `holds` record per formula, keyed by line number. A failing
/// record carries the index of the first point outside `Val(u)`.
pub fn cmd_check(rep_file: &Path, formula_file: &Path, run: &RunConfig) -> Result<Outcome> {
    let (name, rep) = load_rep(rep_file)?;
    let formulas = load_formulas(formula_file, rep.modulus())?;
    let guards = run.guards();
    let mut report = Report::new();
    let mut skipped = String::new();
    for (line, u) in formulas {
        let (n, m) = u.dims();
        let evaluated = HomSpace::with_guard(&rep, n, m, guards.points).and_then(|s| Ok((s, s.val(&u)?)));
        let (space, val) = match evaluated {
            Ok(x) => x,
            Err(e @ Error::GuardExceeded { .. }) if Mode::from(run.mode) == Mode::Permissive => {
                writeln!(skipped, "SKIP holds rep={name} formula={line} detail={:?}", e.to_string()).unwrap();
                continue;
            }
            Err(e) => return Err(e),
        };
        let record = match val.complement().bits().ones().next() {
            None => Record::pass("holds", name.as_str()),
            Some(w) => {
                let p = space.point(w);
                Record::fail("holds", name.as_str(), Some(w), format!("u = {u}, x = {:?}, y = {:?}", p.a, p.g))
            }
        };
        report.push(record.formula(line));
    }
    let code = if report.all_passed() { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome {
        text: format!("{skipped}{report}"),
        code,
    })
}

/// `val`: the dump of `Val(u)`; dimensions default to the formula's own.
pub fn cmd_val(rep_file: &Path, formula: &str, n: Option<u32>, m: Option<u32>, run: &RunConfig) -> Result<Outcome> {
    let (_, rep) = load_rep(rep_file)?;
    let u = crate::formula::parse(formula, rep.modulus())?;
    let (dn, dm) = u.dims();
    let space = HomSpace::with_guard(&rep, n.unwrap_or(dn), m.unwrap_or(dm), run.guard_points)?;
    Ok(Outcome {
        text: space.val(&u)?.dump(),
        code: EXIT_PASS,
    })
}

/// `verify`: every suite over the catalog in `dir`, in strict mode.
pub fn cmd_verify(dir: &Path, sizes: &SampleSizes, run: &RunConfig) -> Result<Outcome> {
    let catalog = load_catalog(dir)?;
    let pool = load_pool(dir)?;
    let cfg = VerifyConfig {
        suite: SuiteConfig {
            seed: run.seed,
            formulas_per_rep: sizes.formulas_per_rep,
            guards: run.guards(),
            fault: run.inject_fault,
            ..SuiteConfig::default()
        },
        quantifier_pairs: sizes.quantifier_pairs,
        val_formulas_per_rep: sizes.val_formulas_per_rep,
        frozen_triples: sizes.frozen_triples,
        galois_samples: sizes.galois_samples,
        ..VerifyConfig::default()
    };
    let report = run_verification(&catalog, &pool, &cfg)?;
    let code = if report.all_passed() { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome {
        text: report.to_string(),
        code,
    })
}

/// `starter`: one file per bundled representation, named after it.
pub fn cmd_starter(dir: &Path) -> Result<Outcome> {
    fs::create_dir_all(dir).map_err(|e| Error::Input {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut text = String::new();
    for e in starter_catalog() {
        let path = dir.join(format!("{}.rep", e.name));
        save_rep(&path, &RepFile::from_representation(Some(e.name), Some(e.note), &e.rep))?;
        writeln!(text, "wrote {}", path.display()).unwrap();
    }
    Ok(Outcome { text, code: EXIT_PASS })
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let run = &cli.run;
    match &cli.command {
        Command::Check { rep, formulas } => cmd_check(rep, formulas, run),
        Command::Val { rep, formula, n, m } => cmd_val(rep, formula, *n, *m, run),
        Command::Verify { dir, sizes } => cmd_verify(dir, sizes, run),
        Command::Starter { dir } => cmd_starter(dir),
    }
}

/// Parse arguments, run, print, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match &cli.run.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.text) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{}", outcome.text),
    }
    outcome.code
}
