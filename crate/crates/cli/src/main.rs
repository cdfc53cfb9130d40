//! `tdc`: total dominator colorings from the command line.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 verification failure or
//! oracle disagreement, 3 search budget exceeded.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tdcolor::coloring::{analyze, extract_td_set, first_violation};
use tdcolor::generate::{generate, GenSpec, GraphClass};
use tdcolor::oracle::{oracle_compare_with, Report};
use tdcolor::solve::{solve, Method};
use tdcolor::tree::classify_tree;
use tdcolor::{parse_edge_list, parse_graph6, Budget, Coloring, ColoringKind, Error, Graph};

#[derive(Parser)]
#[command(name = "tdc", version, about = "Total dominator colorings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Exact,
    Class,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Td,
    Dominator,
    Proper,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Tree,
    Cograph,
    Chain,
    Split,
    Bipartite,
    Any,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Tree => GraphClass::Tree,
            ClassArg::Cograph => GraphClass::Cograph,
            ClassArg::Chain => GraphClass::Chain,
            ClassArg::Split => GraphClass::Split,
            ClassArg::Bipartite => GraphClass::Bipartite,
            ClassArg::Any => GraphClass::Any,
        }
    }
}

#[derive(clap::Args)]
struct GraphInput {
    /// Graph file (`-` for stdin); `.g6` files are read as graph6.
    graph: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute chi_td with a witness coloring.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Node limit for the exact search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a coloring; reports the first violation.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "td")]
        mode: Mode,
    },
    /// Class structure of a TD-coloring.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        coloring: PathBuf,
    },
    /// Tier of a tree, with evidence.
    ClassifyTree {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Generate a random graph of a class.
    Gen {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "TDC_SEED", default_value_t = 0)]
        seed: u64,
        /// Blocks per side (chain) or clique size (split).
        #[arg(long)]
        blocks: Option<usize>,
        #[arg(long)]
        connected: Option<bool>,
        /// Edge probability (bipartite, any).
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Compare a class solver with the exact search on random instances.
    Oracle {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, env = "TDC_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        /// Write each witness coloring to this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// Print reports as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// A TD-set of size chi built from one vertex per class.
    ExtractTdset {
        #[command(flatten)]
        input: GraphInput,
        coloring: PathBuf,
    },
}

enum Failure {
    Input(String),
    Verification(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Verification(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::NotTdColoring(_) | Error::InvalidCertificate(_) | Error::Inconsistent(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = read_text(&input.graph)?;
    let format = input.format.unwrap_or_else(|| {
        if input.graph.extension().is_some_and(|e| e == "g6") {
            Format::Graph6
        } else {
            Format::Edgelist
        }
    });
    let parsed = match format {
        Format::Edgelist => parse_edge_list(&text),
        Format::Graph6 => parse_graph6(&text),
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", input.graph.display())))
}

fn read_coloring(path: &Path, g: &Graph) -> Result<Coloring, Failure> {
    let c: Coloring =
        serde_json::from_str(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if c.len() != g.n() {
        return Err(Failure::Input(format!(
            "{}: coloring has {} entries for a graph on {} vertices",
            path.display(),
            c.len(),
            g.n()
        )));
    }
    Ok(c)
}

fn emit(value: &impl Serialize) -> Outcome {
    let text = serde_json::to_string(value).map_err(|e| Failure::Input(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn budget(nodes: Option<u64>) -> Budget {
    nodes.map_or(Budget::UNLIMITED, Budget::nodes)
}

#[derive(Serialize)]
struct Verdict {
    valid: bool,
    mode: ColoringKind,
    first_violating_vertex: Option<usize>,
    violation: Option<tdcolor::coloring::Violation>,
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Solve {
            input,
            method,
            budget: nodes,
        } => {
            let g = read_graph(&input)?;
            let method = match method {
                MethodArg::Auto => Method::Auto,
                MethodArg::Exact => Method::Exact,
                MethodArg::Class => Method::Class,
            };
            emit(&solve(&g, method, budget(nodes))?)
        }
        Command::Verify { input, coloring, mode } => {
            let g = read_graph(&input)?;
            let c = read_coloring(&coloring, &g)?;
            let kind = match mode {
                Mode::Td => ColoringKind::Td,
                Mode::Dominator => ColoringKind::Dominator,
                Mode::Proper => ColoringKind::Proper,
            };
            let violation = first_violation(&g, &c, kind);
            let verdict = Verdict {
                valid: violation.is_none(),
                mode: kind,
                first_violating_vertex: violation.as_ref().and_then(|v| v.vertex()),
                violation,
            };
            emit(&verdict)?;
            if verdict.valid {
                Ok(())
            } else {
                Err(Failure::Verification("coloring fails the check".into()))
            }
        }
        Command::Analyze { input, coloring } => {
            let g = read_graph(&input)?;
            let c = read_coloring(&coloring, &g)?;
            emit(&analyze(&g, &c)?)
        }
        Command::ClassifyTree { input } => {
            let g = read_graph(&input)?;
            emit(&classify_tree(&g)?)
        }
        Command::Gen {
            class,
            n,
            seed,
            blocks,
            connected,
            p,
            format,
        } => {
            let spec = GenSpec {
                class: class.into(),
                n,
                seed,
                blocks,
                connected,
                p,
            };
            let g = generate(&spec)?;
            match format {
                Format::Edgelist => print!("{}", g.to_edge_list()),
                Format::Graph6 => println!("{}", g.to_graph6()),
            }
            Ok(())
        }
        Command::Oracle {
            class,
            count,
            max_n,
            seed,
            budget: nodes,
            witness_dir,
            json,
        } => {
            let mut reports = oracle_compare_with(class.into(), count, max_n, seed, budget(nodes))?;
            if let Some(dir) = witness_dir {
                write_witnesses(&dir, &mut reports)?;
            }
            if json {
                emit(&reports)?;
            } else {
                print_table(&reports);
            }
            let failed = reports.iter().filter(|r| !r.agreement).count();
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{failed} of {} instances disagree",
                    reports.len()
                )))
            }
        }
        Command::ExtractTdset { input, coloring } => {
            let g = read_graph(&input)?;
            let c = read_coloring(&coloring, &g)?;
            emit(&extract_td_set(&g, &c)?)
        }
    }
}

fn write_witnesses(dir: &Path, reports: &mut [Report]) -> Outcome {
    let io = |e: std::io::Error| Failure::Input(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    for r in reports.iter_mut() {
        if let Some(w) = &r.witness {
            let path = dir.join(format!("{}-{:04}.json", r.class, r.id));
            let text = serde_json::to_string(w).map_err(|e| Failure::Input(e.to_string()))?;
            std::fs::write(&path, text + "\n").map_err(io)?;
            r.witness_path = Some(path.display().to_string());
        }
    }
    Ok(())
}

fn print_table(reports: &[Report]) {
    let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let mut out = std::io::stdout().lock();
    let _ = writeln!(
        out,
        "{:>5} {:>3} {:>7} {:>6} {:>6} {:>5} {:>9}  graph6",
        "id", "n", "method", "value", "oracle", "agree", "ms"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:>5} {:>3} {:>7} {:>6} {:>6} {:>5} {:>9.2}  {}{}",
            r.id,
            r.n,
            r.method,
            show(r.value),
            show(r.oracle),
            if r.agreement { "yes" } else { "NO" },
            r.wall_ms,
            r.graph6,
            r.error.as_ref().map_or(String::new(), |e| format!("  ({e})")),
        );
    }
    let agreed = reports.iter().filter(|r| r.agreement).count();
    let _ = writeln!(out, "{agreed}/{} instances agree", reports.len());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
