//! `hopf`: command-line front end to hopf-core.
//!
//! Exit status is 0 when every check passes, 1 when any check fails and 2
//! on unreadable or malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopf_core::algebra_file::{read_algebra, AlgebraFile};
use hopf_core::catalog::{self, GroupPresentation};
use hopf_core::dsl::{load_corpus_dir, parse_files, standard_corpus, CheckedIdentity};
use hopf_core::{build_dual, report, HopfAlgebra, PairedSystem};

#[derive(Parser)]
#[command(name = "hopf", version, about = "Exact checks of integrals, duality and the S⁴ formula for finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms and invertibility of T1, T2.
    VerifyAxioms { input: PathBuf },
    /// Print integrals, modular element, sigma, sigma', tau and antipode orders.
    Modular { input: PathBuf },
    /// Build the dual Hopf algebra and write it as an algebra file.
    Dual {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the pairing formulas, the S⁴ formula, its dual form and biduality.
    Radford { input: PathBuf },
    /// Evaluate an identity corpus (default: the bundled one).
    Check {
        input: PathBuf,
        /// Directory of `.hid` identity files.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Write a builtin example as an algebra file.
    Example {
        kind: ExampleKind,
        /// Order of the root of unity for `taft`.
        #[arg(long)]
        n: Option<u32>,
        /// JSON group table for group-algebra / function-algebra.
        #[arg(long, conflicts_with = "group")]
        table: Option<PathBuf>,
        /// Builtin group for group-algebra / function-algebra: Z<n> or S3.
        #[arg(long)]
        group: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Axioms, modular data, all hard-coded checks and a corpus.
    FullReport {
        input: PathBuf,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleKind {
    Sweedler,
    Taft,
    GroupAlgebra,
    FunctionAlgebra,
}

/// Input or usage problem; exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn load(path: &Path) -> Result<HopfAlgebra, InputError> {
    read_algebra(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn corpus(dir: Option<&Path>) -> Result<Vec<CheckedIdentity>, InputError> {
    let files = match dir {
        Some(d) => load_corpus_dir(d)?,
        None => standard_corpus(),
    };
    Ok(parse_files(&files)?)
}

fn write_out(output: Option<&Path>, text: &str) -> Result<(), InputError> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Validation gates every computation; a broken algebra reports its axioms.
fn validated(h: &HopfAlgebra) -> Result<(), report::Report> {
    let r = report::axioms(h);
    if r.passed {
        Ok(())
    } else {
        Err(r)
    }
}

fn paired(h: &HopfAlgebra) -> Result<PairedSystem, report::Report> {
    validated(h)?;
    PairedSystem::new(h).map_err(|e| report::Report {
        text: format!("dual {} FAIL {e}\n", h.name()),
        passed: false,
    })
}

fn group(table: Option<&Path>, label: Option<&str>) -> Result<GroupPresentation, InputError> {
    match (table, label) {
        (Some(p), _) => {
            let text = fs::read_to_string(p).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
            GroupPresentation::from_json(&text).map_err(|e| InputError(format!("{}: {e}", p.display())))
        }
        (None, Some("S3")) => Ok(GroupPresentation::symmetric3()),
        (None, Some(l)) => match l.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => Ok(GroupPresentation::cyclic(n)),
            _ => Err(InputError(format!("unknown group `{l}` (use Z<n> or S3, or --table)"))),
        },
        (None, None) => Err(InputError("--table or --group is required".into())),
    }
}

fn run(cmd: Command) -> Result<report::Report, InputError> {
    let done = |r: Result<report::Report, report::Report>| r.unwrap_or_else(|e| e);
    Ok(match cmd {
        Command::VerifyAxioms { input } => report::axioms(&load(&input)?),
        Command::Modular { input } => {
            let h = load(&input)?;
            done(validated(&h).map(|_| report::modular(&h)))
        }
        Command::Dual { input, output } => {
            let h = load(&input)?;
            if let Err(r) = validated(&h) {
                return Ok(r);
            }
            let d = build_dual(&h)?;
            write_out(output.as_deref(), &AlgebraFile::from_algebra(&d).to_json())?;
            report::Report { text: String::new(), passed: true }
        }
        Command::Radford { input } => done(paired(&load(&input)?).map(|s| report::radford(&s))),
        Command::Check { input, corpus: dir } => {
            let ids = corpus(dir.as_deref())?;
            done(paired(&load(&input)?).map(|s| report::corpus(&s, &ids)))
        }
        Command::Example { kind, n, table, group: label, output } => {
            let h = match kind {
                ExampleKind::Sweedler => catalog::build_sweedler(),
                ExampleKind::Taft => {
                    let n = n.ok_or_else(|| InputError("taft needs --n".into()))?;
                    catalog::build_taft(n)?
                }
                ExampleKind::GroupAlgebra => {
                    catalog::build_group_algebra(&group(table.as_deref(), label.as_deref())?)?
                }
                ExampleKind::FunctionAlgebra => {
                    catalog::build_function_algebra(&group(table.as_deref(), label.as_deref())?)?
                }
            };
            write_out(output.as_deref(), &AlgebraFile::from_algebra(&h).to_json())?;
            report::Report { text: String::new(), passed: true }
        }
        Command::FullReport { input, corpus: dir } => {
            let ids = corpus(dir.as_deref())?;
            report::full(&load(&input)?, &ids)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(r) => {
            print!("{}", r.text);
            if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
