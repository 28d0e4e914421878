//! The `dtso` command line.
//!
//! Exit codes: 0 success, 1 I/O or document errors, 2 invalid instance,
//! 3 oracle disagreement (the report is still printed).

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::model::{
    parse_instance, serialize_report, InstanceDocument, PlacementInstance, SchedulingInstance,
    SequencingInstance, SolveReport, Witness,
};
use crate::oracle;
use crate::placement::{self, Objective};
use crate::scheduling;
use crate::sequencing;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dtso", version, about = "Data transfer optimization solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connected K-center on a path
    Kcenter(InvocationArgs),
    /// Connected K-median on a path
    Kmedian(InvocationArgs),
    /// Min/max decoding time with swappable packet pairs
    Sequence(InvocationArgs),
    /// Minimum-makespan packet distribution over paths
    Schedule(InvocationArgs),
}

#[derive(Debug, Args)]
pub struct InvocationArgs {
    /// Instance file (`-` for standard input)
    pub file: Option<PathBuf>,
    /// Instance file, alternative to the positional argument (`-` for stdin)
    #[arg(long, conflicts_with = "file")]
    pub input: Option<PathBuf>,
    /// Cross-check the answer against the brute-force oracle
    #[arg(long)]
    pub verify: bool,
    /// Print a single JSON report
    #[arg(long)]
    pub json: bool,
    /// Dump solver internals to standard error
    #[arg(long)]
    pub trace: bool,
}

impl InvocationArgs {
    fn source(&self) -> Option<&PathBuf> {
        self.file.as_ref().or(self.input.as_ref())
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = if err.is_validation() {
            EXIT_INVALID
        } else {
            EXIT_IO
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

struct Outcome {
    report: SolveReport,
    /// Human-readable body.
    text: String,
    /// Diagnostics to print on failure of verification.
    note: Option<String>,
}

fn read_input(args: &InvocationArgs, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let mut bytes = Vec::new();
    match args.source() {
        Some(path) if path.as_os_str() != "-" => {
            bytes = std::fs::read(path).map_err(|err| Failure {
                code: EXIT_IO,
                message: format!("cannot read {}: {err}", path.display()),
            })?;
        }
        _ => {
            stdin.read_to_end(&mut bytes).map_err(|err| Failure {
                code: EXIT_IO,
                message: format!("cannot read standard input: {err}"),
            })?;
        }
    }
    Ok(bytes)
}

fn parse<T: InstanceDocument>(bytes: &[u8]) -> Result<T, Failure> {
    Ok(parse_instance(bytes)?)
}

fn mismatch_note(solver: i64, oracle: i64) -> String {
    format!("verification failed: solver {solver}, oracle {oracle}")
}

fn run_placement(
    objective: Objective,
    args: &InvocationArgs,
    bytes: &[u8],
    stderr: &mut dyn Write,
) -> Result<Outcome, Failure> {
    let inst: PlacementInstance = parse(bytes)?;
    let result = placement::solve(&inst, objective)?;
    if args.trace && objective == Objective::Center {
        let (right, left) = placement::build_envelopes(&inst)?;
        let _ = write!(stderr, "{}{}", right.to_csv(), left.to_csv());
    }
    let mut verified = None;
    let mut note = None;
    if args.verify {
        let oracle = oracle::brute_placement(&inst, objective)?;
        verified = Some(oracle == result.objective);
        if oracle != result.objective {
            note = Some(mismatch_note(result.objective, oracle));
        }
    }
    let mut text = format!(
        "objective: {}\ninterval: [{}, {}]\n",
        result.objective,
        result.q,
        result.q + inst.k - 1
    );
    if let Some(v) = verified {
        text.push_str(&format!("verified: {v}\n"));
    }
    Ok(Outcome {
        report: SolveReport {
            objective: result.objective,
            witness: Witness::Placement { q: result.q },
            verified,
        },
        text,
        note,
    })
}

fn run_sequence(
    args: &InvocationArgs,
    bytes: &[u8],
    stderr: &mut dyn Write,
) -> Result<Outcome, Failure> {
    let inst: SequencingInstance = parse(bytes)?;
    let result = if args.trace {
        let (result, trace) = sequencing::solve_sequencing_traced(&inst)?;
        let _ = stderr.write_all(trace.as_bytes());
        result
    } else {
        sequencing::solve_sequencing(&inst)?
    };
    let mut verified = None;
    let mut note = None;
    if args.verify {
        let oracle = oracle::brute_sequencing(&inst)?;
        verified = Some(oracle == result.objective);
        if oracle != result.objective {
            note = Some(mismatch_note(result.objective, oracle));
        }
    }
    let join = |items: Vec<String>| {
        if items.is_empty() {
            "-".to_string()
        } else {
            items.join(" ")
        }
    };
    let mut text = format!("objective: {}\n", result.objective);
    text.push_str(&format!(
        "swapped: {}\n",
        join(
            inst.pairs
                .iter()
                .zip(&result.swapped)
                .filter(|(_, &s)| s)
                .map(|(p, _)| format!("({},{})", p.a(), p.b()))
                .collect()
        )
    ));
    text.push_str(&format!(
        "order: {}\n",
        join(result.final_order.iter().map(|t| t.to_string()).collect())
    ));
    if let Some(v) = verified {
        text.push_str(&format!("verified: {v}\n"));
    }
    Ok(Outcome {
        report: SolveReport {
            objective: result.objective,
            witness: Witness::Sequencing {
                swapped: result.swapped,
                order: result.final_order,
            },
            verified,
        },
        text,
        note,
    })
}

fn run_schedule(args: &InvocationArgs, bytes: &[u8]) -> Result<Outcome, Failure> {
    let inst: SchedulingInstance = parse(bytes)?;
    let result = scheduling::solve_schedule(&inst)?;
    let mut verified = None;
    let mut notes = Vec::new();
    if args.verify {
        let mut ok = true;
        if inst.q == inst.paths.len() {
            let search = scheduling::binary_search_makespan(&inst)?;
            if search.makespan != result.makespan {
                ok = false;
                notes.push(format!(
                    "greedy makespan {} differs from binary search {}",
                    result.makespan, search.makespan
                ));
            }
        }
        let (oracle, method) = oracle::brute_schedule(&inst)?;
        if oracle != result.makespan {
            ok = false;
            notes.push(mismatch_note(result.makespan, oracle));
        }
        if method == oracle::ScheduleOracleMethod::CandidateScan {
            notes.push("note: oracle used the candidate scan, not exhaustive enumeration".into());
        }
        verified = Some(ok);
    }
    let mut text = format!("makespan: {}\n", result.makespan);
    text.push_str(&format!(
        "{:>10} {:>12} {:>12} {:>10} {:>12}\n",
        "path_index", "ci", "ps", "count", "finish_time"
    ));
    for (i, (path, &count)) in inst.paths.iter().zip(&result.counts).enumerate() {
        let finish = if count > 0 {
            path.ci + count * path.ps
        } else {
            0
        };
        text.push_str(&format!(
            "{:>10} {:>12} {:>12} {:>10} {:>12}\n",
            i + 1,
            path.ci,
            path.ps,
            count,
            finish
        ));
    }
    if let Some(v) = verified {
        text.push_str(&format!("verified: {v}\n"));
    }
    let note = (!notes.is_empty()).then(|| notes.join("\n"));
    Ok(Outcome {
        report: SolveReport {
            objective: result.makespan,
            witness: Witness::Schedule {
                counts: result.counts,
            },
            verified,
        },
        text,
        note,
    })
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_IO } else { EXIT_OK };
            let rendered = err.render().to_string();
            let _ = if err.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let (Command::Kcenter(args)
    | Command::Kmedian(args)
    | Command::Sequence(args)
    | Command::Schedule(args)) = &cli.command;

    let outcome = read_input(args, stdin).and_then(|bytes| match &cli.command {
        Command::Kcenter(_) => run_placement(Objective::Center, args, &bytes, stderr),
        Command::Kmedian(_) => run_placement(Objective::Median, args, &bytes, stderr),
        Command::Sequence(_) => run_sequence(args, &bytes, stderr),
        Command::Schedule(_) => run_schedule(args, &bytes),
    });

    match outcome {
        Ok(outcome) => {
            let _ = if args.json {
                writeln!(stdout, "{}", serialize_report(&outcome.report))
            } else {
                stdout.write_all(outcome.text.as_bytes())
            };
            if let Some(note) = &outcome.note {
                let _ = writeln!(stderr, "{note}");
            }
            if outcome.report.verified == Some(false) {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
