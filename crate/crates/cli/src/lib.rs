//! The `altham` command line. [`run`] takes explicit streams so tests can
//! drive it in-process.

use std::fs;
use std::io::{Read, Write};

use altham::oracle::{oracle_factor, oracle_hamiltonian};
use altham::predicates::{
    closed_alternating_violation, color_connectivity_violation, first_two_m_violation,
    two_nm_violations,
};
use altham::{
    export_dot, find_alternating_cycle_factor_with, solve_with_trace, Color, ColorChoice,
    ColoredMultigraph, CycleFactor, FactorOptions, Family, GenError, GenSpec, SolveResult,
};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Debug, Parser)]
#[command(
    name = "altham",
    version,
    about = "Alternating Hamiltonian cycles in 2-edge-colored multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test a structural predicate; prints `true`, or `false` and a witness.
    Check {
        #[arg(long, value_enum)]
        predicate: Predicate,
        /// Graph file, `-` for standard input.
        #[arg(default_value = "-")]
        file: String,
    },
    /// Build an alternating Hamiltonian cycle or explain why there is none.
    Solve {
        #[arg(default_value = "-")]
        file: String,
        /// Print one line per merge and domination before the result.
        #[arg(long)]
        trace: bool,
    },
    /// Find an alternating cycle factor.
    Factor {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, default_value_t = 2)]
        min_cycle_len: usize,
    },
    /// Print a generated graph.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0.1)]
        parallel: f64,
        /// Added-edge color for closure-2m, dominating color for dominated.
        #[arg(long, value_enum, default_value_t = ColorArg::Random)]
        color: ColorArg,
        #[arg(long, default_value_t = 2)]
        k1: usize,
        #[arg(long, default_value_t = 2)]
        k2: usize,
        /// Cycle lengths for dominated, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [4, 4])]
        lengths: Vec<usize>,
    },
    /// Exhaustive search, for cross-checking.
    Oracle {
        #[arg(value_enum)]
        what: OracleArg,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Graphviz output, blue solid and red dashed.
    ExportDot {
        #[arg(default_value = "-")]
        file: String,
        /// Draw the solver's Hamiltonian cycle in bold, if there is one.
        #[arg(long)]
        highlight: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Predicate {
    #[value(name = "2m-closed")]
    TwoMClosed,
    #[value(name = "2nm-closed")]
    TwoNmClosed,
    ClosedAlternating,
    ColorConnected,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Complete,
    Random,
    #[value(name = "closure-2m")]
    Closure2m,
    Counterexample,
    Dominated,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ColorArg {
    #[value(name = "B")]
    Blue,
    #[value(name = "R")]
    Red,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleArg {
    Hamiltonian,
    Factor,
}

/// A failure already reduced to its exit code and message.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_SOFTWARE, format!("write failed: {e}"))
    }
}

fn read_graph(file: &str, stdin: &mut dyn Read) -> Result<ColoredMultigraph, Failure> {
    let text = if file == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_NO_INPUT, format!("cannot read standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(file)
            .map_err(|e| Failure::new(EXIT_NO_INPUT, format!("cannot read {file}: {e}")))?
    };
    text.parse()
        .map_err(|e| Failure::new(EXIT_DATA, format!("{file}: {e}")))
}

fn write_factor(out: &mut dyn Write, factor: Option<CycleFactor>) -> std::io::Result<()> {
    match factor {
        Some(f) => {
            for c in &f.cycles {
                writeln!(out, "{c}")?;
            }
            Ok(())
        }
        None => writeln!(out, "none"),
    }
}

fn check(g: &ColoredMultigraph, predicate: Predicate) -> Option<String> {
    match predicate {
        Predicate::TwoMClosed => first_two_m_violation(g).map(|w| w.to_string()),
        Predicate::TwoNmClosed => two_nm_violations(g).first().map(|w| w.to_string()),
        Predicate::ClosedAlternating => closed_alternating_violation(g).map(|w| w.to_string()),
        Predicate::ColorConnected => color_connectivity_violation(g).map(|w| w.to_string()),
    }
}

fn gen_spec(command: &Command) -> Option<GenSpec> {
    let Command::Generate {
        family,
        seed,
        n,
        density,
        parallel,
        color,
        k1,
        k2,
        lengths,
    } = command
    else {
        return None;
    };
    let (n, density, parallel) = (*n, *density, *parallel);
    let family = match family {
        FamilyArg::Complete => Family::Complete { n },
        FamilyArg::Random => Family::Random {
            n,
            density,
            parallel,
        },
        FamilyArg::Closure2m => Family::Closure2m {
            n,
            density,
            parallel,
            color: match color {
                ColorArg::Blue => ColorChoice::Blue,
                ColorArg::Red => ColorChoice::Red,
                ColorArg::Random => ColorChoice::Random,
            },
        },
        FamilyArg::Counterexample => Family::Counterexample { k1: *k1, k2: *k2 },
        FamilyArg::Dominated => Family::Dominated {
            lengths: lengths.clone(),
            color: match color {
                ColorArg::Red => Color::Red,
                _ => Color::Blue,
            },
        },
    };
    Some(GenSpec {
        family,
        seed: *seed,
    })
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Check { predicate, file } => {
            let g = read_graph(file, stdin)?;
            match check(&g, *predicate) {
                None => {
                    writeln!(out, "true")?;
                    Ok(0)
                }
                Some(w) => {
                    writeln!(out, "false\nwitness {w}")?;
                    Ok(1)
                }
            }
        }
        Command::Solve { file, trace } => {
            let g = read_graph(file, stdin)?;
            let (result, events) =
                solve_with_trace(&g).map_err(|e| Failure::new(EXIT_SOFTWARE, e.to_string()))?;
            if *trace {
                for e in &events {
                    writeln!(out, "{e}")?;
                }
            }
            let code = match result {
                SolveResult::HamiltonianCycle(c) => {
                    writeln!(out, "hamiltonian\n{c}")?;
                    0
                }
                SolveResult::NoFactor => {
                    writeln!(out, "no-factor")?;
                    2
                }
                SolveResult::NotColorConnected(cert) => {
                    writeln!(out, "not-color-connected\n{cert}")?;
                    3
                }
                SolveResult::NotTwoMClosed(w) => {
                    writeln!(out, "not-2m-closed\nwitness {w}")?;
                    4
                }
            };
            Ok(code)
        }
        Command::Factor {
            file,
            min_cycle_len,
        } => {
            if *min_cycle_len < 2 || min_cycle_len % 2 == 1 {
                return Err(Failure::new(
                    EXIT_USAGE,
                    "--min-cycle-len must be an even number >= 2",
                ));
            }
            let g = read_graph(file, stdin)?;
            let opts = FactorOptions {
                min_cycle_len: *min_cycle_len,
            };
            write_factor(out, find_alternating_cycle_factor_with(&g, opts))?;
            Ok(0)
        }
        command @ Command::Generate { .. } => {
            let spec = gen_spec(command).expect("generate command");
            let g = spec.generate().map_err(|e| match e {
                GenError::InvalidParameter(_) => Failure::new(EXIT_USAGE, e.to_string()),
                GenError::ConstructionFailed(_) => Failure::new(EXIT_SOFTWARE, e.to_string()),
            })?;
            write!(out, "{}", g.serialize_text())?;
            Ok(0)
        }
        Command::Oracle { what, file } => {
            let g = read_graph(file, stdin)?;
            match what {
                OracleArg::Hamiltonian => match oracle_hamiltonian(&g) {
                    Some(c) => writeln!(out, "{c}")?,
                    None => writeln!(out, "none")?,
                },
                OracleArg::Factor => write_factor(out, oracle_factor(&g))?,
            }
            Ok(0)
        }
        Command::ExportDot { file, highlight } => {
            let g = read_graph(file, stdin)?;
            let cycle = if *highlight {
                solve_with_trace(&g)
                    .ok()
                    .and_then(|(r, _)| r.cycle().cloned())
            } else {
                None
            };
            write!(out, "{}", export_dot(&g, cycle.as_ref()))?;
            Ok(0)
        }
    }
}

/// Runs one command line (`args[0]` is the program name) and returns the
/// exit code.
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
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { EXIT_USAGE };
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "altham: {}", f.message);
            f.code
        }
    }
}
