//! Command-line front end: solve, verify, and inspect two-colored
//! graphs stored in the `n`/`b`/`r` file format. Machine-readable
//! documents go to standard output (`--json` for JSON, line-oriented
//! text otherwise); one-line human summaries go to standard error.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ssw::report::{Color, ExpandReport, HypothesesSummary, OracleSummary, SolveReport, VerifyReport};
use ssw::{format, oracle, path, Path, TwoColoredDigraph, VertexSet};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ssw", version, about = "Absorbing independent sets in two-colored digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an absorbing independent set, with per-vertex certificates
    Solve {
        /// Graph file path, or `-` for standard input
        input: String,
        /// Emit JSON instead of line-oriented text
        #[arg(long)]
        json: bool,
    },
    /// Check a given vertex set against the solution, family, and kernel predicates
    Verify {
        input: String,
        /// Comma-separated vertex list, e.g. `0,3,5` (empty for the empty set)
        #[arg(long)]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every solution, family member, and kernel by brute force
    Oracle {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded random graph file on standard output
    Gen {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Probability of each blue edge
        #[arg(long, default_value_t = 0.0)]
        blue: f64,
        /// Probability of each red edge
        #[arg(long, default_value_t = 0.0)]
        red: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report raw-color cycles and acyclicity of the asymmetric closures
    CheckHypotheses {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Replace both colors by their transitive closures
    Closure { input: String },
    /// Expand a path of a color's asymmetric closure into a plain simple path
    ExpandPath {
        input: String,
        #[arg(long)]
        color: ColorArg,
        /// Comma-separated waypoint list, e.g. `0,4,7`
        #[arg(long)]
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Export the graph as dot text, optionally highlighting a vertex set
    ExportDot {
        input: String,
        #[arg(long)]
        set: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorArg {
    Blue,
    Red,
}

enum AppError {
    Usage(String),
    Domain(String),
}

impl From<ssw::Error> for AppError {
    fn from(e: ssw::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Solve { input, json } => {
            let g = load_graph(&input)?;
            let report = SolveReport::build(&g)?;
            emit(json, &report, &report.to_text())?;
            eprintln!(
                "solution {{{}}} after {} growth steps; {} certificates verified",
                join(&report.independent_set),
                report.iterations,
                report.certificates.len()
            );
        }
        Command::Verify { input, set, json } => {
            let g = load_graph(&input)?;
            let s = parse_set(&g, &set)?;
            let report = VerifyReport::build(&g, &s)?;
            emit(json, &report, &report.to_text())?;
            eprintln!(
                "set {{{}}}: solution={} family={} kernel={}",
                join(&s.to_vec()),
                report.is_solution,
                report.is_in_family_s,
                report.is_kernel
            );
        }
        Command::Oracle { input, json } => {
            let g = load_graph(&input)?;
            let n = g.universe().size();
            let report = oracle::enumerate_solutions(&g)?;
            let summary = OracleSummary::from_report(n, &report);
            emit(json, &summary, &summary.to_text())?;
            eprintln!(
                "{} solutions, {} family members, {} kernels among 2^{n} subsets",
                summary.valid_solutions.len(),
                summary.family_s_members.len(),
                summary.kernel_sets.len()
            );
        }
        Command::Gen { n, blue, red, seed } => {
            for (name, p) in [("blue", blue), ("red", red)] {
                if !(0.0..=1.0).contains(&p) {
                    return Err(AppError::Usage(format!(
                        "--{name} must be a probability in [0, 1], got {p}"
                    )));
                }
            }
            let g = oracle::random_graph(n, blue, red, seed);
            print!("{}", format::render_graph(&g));
            eprintln!(
                "generated n={n} with {} blue and {} red edges (seed {seed})",
                g.blue().len(),
                g.red().len()
            );
        }
        Command::CheckHypotheses { input, json } => {
            let g = load_graph(&input)?;
            let summary = HypothesesSummary::build(&g);
            emit(json, &summary, &summary.to_text())?;
            eprintln!(
                "asymmetric closures acyclic: blue={} red={}; raw cycles: blue={} red={}",
                summary.blue_asym_acyclic,
                summary.red_asym_acyclic,
                summary.blue_cycle.is_some(),
                summary.red_cycle.is_some()
            );
        }
        Command::Closure { input } => {
            let g = load_graph(&input)?;
            let closed = TwoColoredDigraph::new(
                g.blue().transitive_closure(),
                g.red().transitive_closure(),
            )?;
            print!("{}", format::render_graph(&closed));
            eprintln!(
                "closed colors: blue {} -> {} pairs, red {} -> {} pairs",
                g.blue().len(),
                closed.blue().len(),
                g.red().len(),
                closed.red().len()
            );
        }
        Command::ExpandPath {
            input,
            color,
            path: waypoints,
            json,
        } => {
            let g = load_graph(&input)?;
            let relation = match color {
                ColorArg::Blue => g.blue(),
                ColorArg::Red => g.red(),
            };
            let verts = parse_vertex_list(&waypoints)?;
            let w = Path::new(g.universe(), verts)?;
            let expanded = path::expand_asym_path(relation, &w)?;
            let report = ExpandReport {
                color: match color {
                    ColorArg::Blue => Color::Blue,
                    ColorArg::Red => Color::Red,
                },
                input: w.vertices().to_vec(),
                expanded: expanded.vertices().to_vec(),
            };
            emit(json, &report, &report.to_text())?;
            eprintln!(
                "expanded {} waypoints into a {}-vertex path",
                report.input.len(),
                report.expanded.len()
            );
        }
        Command::ExportDot { input, set } => {
            let g = load_graph(&input)?;
            let highlight = match set {
                Some(spec) => Some(parse_set(&g, &spec)?),
                None => None,
            };
            print!("{}", format::render_dot(&g, highlight.as_ref()));
            eprintln!(
                "dot export: {} vertices, {} blue and {} red edges",
                g.universe().size(),
                g.blue().len(),
                g.red().len()
            );
        }
    }
    Ok(())
}

fn load_graph(input: &str) -> Result<TwoColoredDigraph, AppError> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| AppError::Domain(format!("{input}: {e}")))?
    };
    Ok(format::parse_graph(&text)?)
}

fn parse_vertex_list(spec: &str) -> Result<Vec<usize>, AppError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|field| {
            field
                .trim()
                .parse::<usize>()
                .map_err(|_| AppError::Usage(format!("bad vertex {:?} in list", field.trim())))
        })
        .collect()
}

fn parse_set(g: &TwoColoredDigraph, spec: &str) -> Result<VertexSet, AppError> {
    let verts = parse_vertex_list(spec)?;
    Ok(VertexSet::of(g.universe(), verts)?)
}

fn emit<T: Serialize>(json: bool, value: &T, text: &str) -> Result<(), AppError> {
    if json {
        let doc = serde_json::to_string_pretty(value)
            .map_err(|e| AppError::Domain(e.to_string()))?;
        println!("{doc}");
    } else {
        print!("{text}");
    }
    Ok(())
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
