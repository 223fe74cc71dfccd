//! The `mwns` command line.

use std::error::Error;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::blocker::{blocker_with_trace, BlockerError};
use crate::generate::{from_multiway_cut, random_instance, RandomParams};
use crate::graph::VertexSet;
use crate::io::{format_instance, format_instance_with_n, format_log, forest_to_dot, parse_instance, parse_log, parse_vertex_list, to_dot};
use crate::mwns::{Instance, SolveResult};
use crate::reducer::{lift_solution, reduce_terminals, ReduceError, ReductionStep};
use crate::solver::{oracle_opt_x, oracle_solve, solve_with_stats, SolveOptions};

#[derive(Debug, Parser)]
#[command(name = "mwns", version, about = "Multiway near-separator solver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the instance exactly.
    Solve {
        file: PathBuf,
        /// Print search counters to stderr.
        #[arg(long)]
        stats: bool,
        /// Print every branch to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Near-separator avoiding a pivot whose singleton is already one.
    Approx {
        file: PathBuf,
        #[arg(long)]
        pivot: usize,
        /// Compare with the exhaustive optimum.
        #[arg(long)]
        ratio: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Shrink the terminal set; prints the reduced instance.
    Reduce {
        file: PathBuf,
        /// Starting near-separator (default: all non-terminals).
        #[arg(long)]
        with_solution: Option<PathBuf>,
        /// Write the replayable log here.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Map a solution of a reduced instance back to the original.
    Lift { log: PathBuf, solution: PathBuf },
    /// Check a candidate solution.
    Verify {
        file: PathBuf,
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        solution: Vec<usize>,
    },
    /// Exhaustive search (small instances only).
    Oracle { file: PathBuf },
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Graphviz output.
    Dot {
        file: PathBuf,
        /// Draw the block-cut forest instead.
        #[arg(long)]
        bcf: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Random graph with random terminals.
    Random(RandomArgs),
    /// Near-separator instance equivalent to a node Multiway Cut instance.
    FromMultiwayCut { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    terminals: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep samples whose terminals are adjacent.
    #[arg(long)]
    allow_dependent: bool,
}

type CliResult = Result<u8, Box<dyn Error>>;

fn read_instance(path: &Path) -> Result<Instance, Box<dyn Error>> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn answer(out: &mut dyn Write, result: &SolveResult) -> CliResult {
    match result {
        SolveResult::Yes(s) => {
            let mut line = String::from("YES");
            for v in s {
                line.push_str(&format!(" {v}"));
            }
            writeln!(out, "{line}")?;
            Ok(0)
        }
        SolveResult::No => {
            writeln!(out, "NO")?;
            Ok(1)
        }
    }
}

/// Runs one command; returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Solve { file, stats, trace } => {
            let inst = read_instance(&file)?;
            let (result, st) = solve_with_stats(&inst, SolveOptions { trace })?;
            for node in &st.trace {
                writeln!(err, "branch {node}")?;
            }
            if stats {
                writeln!(err, "{st}")?;
            }
            answer(out, &result)
        }
        Command::Approx { file, pivot, ratio, trace } => {
            let inst = read_instance(&file)?;
            let run = match blocker_with_trace(&inst.graph, &inst.terminals, pivot) {
                Ok(run) => run,
                Err(e @ (BlockerError::PivotNotMwns(_) | BlockerError::PivotIsTerminal(_) | BlockerError::UnknownPivot(_))) => {
                    writeln!(out, "invalid pivot: {e}")?;
                    return Ok(1);
                }
                Err(e) => return Err(e.into()),
            };
            if trace {
                write!(err, "{run}")?;
            }
            let items: Vec<String> = run.solution.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", items.join(" "))?;
            if ratio {
                match oracle_opt_x(&inst.graph, &inst.terminals, pivot)? {
                    Some(0) => writeln!(out, "size={} opt=0", run.solution.len())?,
                    Some(opt) => writeln!(
                        out,
                        "size={} opt={opt} ratio={:.3}",
                        run.solution.len(),
                        run.solution.len() as f64 / opt as f64
                    )?,
                    None => writeln!(out, "size={} opt=none", run.solution.len())?,
                }
            }
            Ok(0)
        }
        Command::Reduce { file, with_solution, log } => {
            let inst = read_instance(&file)?;
            let s_hat = match with_solution {
                Some(p) => parse_vertex_list(&fs::read_to_string(&p)?)?,
                None => inst.non_terminals(),
            };
            let reduction = match reduce_terminals(&inst, &s_hat) {
                Err(ReduceError::NotAMwns) => {
                    writeln!(out, "invalid starting set: {}", ReduceError::NotAMwns)?;
                    return Ok(1);
                }
                r => r?,
            };
            if let Some(p) = log {
                fs::write(p, format_log(&reduction.log))?;
            }
            let Some(reduced) = reduction.instance else {
                writeln!(out, "NO")?;
                return Ok(1);
            };
            let n = inst.graph.max_vertex().unwrap_or(0);
            let removed: Vec<String> = reduction
                .log
                .steps
                .iter()
                .filter_map(|s| match s {
                    ReductionStep::EssentialVertex(x) => Some(x.to_string()),
                    _ => None,
                })
                .collect();
            if !removed.is_empty() {
                writeln!(out, "# deleted (isolated below): {}", removed.join(" "))?;
            }
            write!(out, "{}", format_instance_with_n(&reduced, n))?;
            for step in &reduction.log.steps {
                writeln!(out, "# {step}")?;
            }
            Ok(0)
        }
        Command::Lift { log, solution } => {
            let log = parse_log(&fs::read_to_string(log)?)?;
            let s = parse_vertex_list(&fs::read_to_string(solution)?)?;
            match lift_solution(&log, &s) {
                Ok(lifted) => answer(out, &SolveResult::Yes(lifted)),
                Err(e) => {
                    writeln!(out, "invalid: {e}")?;
                    Ok(1)
                }
            }
        }
        Command::Verify { file, solution } => {
            let inst = read_instance(&file)?;
            let s: VertexSet = solution.into_iter().collect();
            let valid = match inst.verify(&s) {
                Ok(true) => None,
                Ok(false) if s.len() > inst.k => Some(format!("size {} exceeds k = {}", s.len(), inst.k)),
                Ok(false) => Some("two terminals remain joined by two disjoint paths".to_string()),
                Err(e) => Some(e.to_string()),
            };
            match valid {
                None => {
                    writeln!(out, "valid")?;
                    Ok(0)
                }
                Some(reason) => {
                    writeln!(out, "invalid: {reason}")?;
                    Ok(1)
                }
            }
        }
        Command::Oracle { file } => {
            let inst = read_instance(&file)?;
            answer(out, &oracle_solve(&inst)?)
        }
        Command::Gen(GenCommand::Random(a)) => {
            if !(0.0..=1.0).contains(&a.p) {
                return Err(format!("edge probability {} outside [0, 1]", a.p).into());
            }
            let inst = random_instance(&RandomParams {
                n: a.n,
                p: a.p,
                terminals: a.terminals,
                k: a.k,
                seed: a.seed,
                independent: !a.allow_dependent,
            });
            write!(out, "{}", format_instance_with_n(&inst, a.n))?;
            Ok(0)
        }
        Command::Gen(GenCommand::FromMultiwayCut { file }) => {
            let inst = read_instance(&file)?;
            write!(out, "{}", format_instance(&from_multiway_cut(&inst)))?;
            Ok(0)
        }
        Command::Dot { file, bcf } => {
            let inst = read_instance(&file)?;
            let text = if bcf { forest_to_dot(&inst.graph) } else { to_dot(&inst) };
            write!(out, "{text}")?;
            Ok(0)
        }
    }
}

/// Parses `args` and runs the command, reporting failures on `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
