//! `cpat`: solve Consensus Patterns instances, reduce colored graphs, and
//! check the reduction end to end.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable/invalid input,
//! 3 negative answer (no clique, invalid or over-budget solution, failed
//! check), 4 state bound exceeded. Diagnostics go to stderr only.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cpat_core::cliquegraph::{find_multicolored_clique, parse_graph, write_graph, ColoredGraph};
use cpat_core::harness::{gen_colored_graph, run_case, GenConfig, SuiteCase, SuiteReport};
use cpat_core::reduction::{reduce, theorem_check, write_reduced_instance, CheckConfig};
use cpat_core::solvers::{solve, SolverChoice, SolverKind, DEFAULT_STATE_BOUND};
use cpat_core::stringcore::{parse_instance, parse_solutions, write_solution};
use cpat_core::{Error, Exec};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;
const EXIT_BOUND: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "cpat", version, about = "Consensus Patterns solvers and the multicolored-clique reduction")]
struct Cli {
    /// Worker threads for the enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance exactly and print the optimum with its solution(s).
    Solve {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value = "pattern-enum")]
        solver: SolverKind,
        /// Print every optimal pattern instead of the smallest one.
        #[arg(long)]
        all_optimal: bool,
    },
    /// Reduce a colored graph to a Consensus Patterns instance.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for a multicolored clique by brute force.
    Clique {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Check solution file(s) against an instance.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Reduce, solve, and check every property of the reduction on one graph.
    Roundtrip {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Write a random colored graph.
    GenGraph {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Failure carrying its exit code; the message goes to stderr.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::StateBoundExceeded { .. } => EXIT_BOUND,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        msg: format!("{}: {e}", path.display()),
    })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure {
        code: EXIT_INPUT,
        msg: format!("{}: {e}", path.display()),
    })
}

fn load_graph(path: &Path) -> Result<ColoredGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure {
        code: EXIT_INPUT,
        msg: format!("{}: {e}", path.display()),
    })
}

fn cmd_solve(instance: &Path, kind: SolverKind, all: bool, exec: Exec) -> CmdResult {
    let inst = parse_instance(&read(instance)?)?;
    let res = solve(&inst, &SolverChoice::new(kind).all_optima(all).exec(exec))?;
    let mut out = String::new();
    writeln!(out, "# solver {}", kind.name()).unwrap();
    writeln!(out, "# states {}", res.states_explored).unwrap();
    if let Some(d) = inst.budget() {
        writeln!(out, "# within_budget {}", res.optimum <= d).unwrap();
    }
    writeln!(out, "optimum {}", res.optimum).unwrap();
    for (i, s) in res.solutions.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&write_solution(inst.alphabet(), s));
    }
    print!("{out}");
    Ok(0)
}

fn cmd_reduce(graph: &Path, out: &Path) -> CmdResult {
    let g = load_graph(graph)?;
    let red = reduce(&g)?;
    write(out, &write_reduced_instance(&g, &red))?;
    println!("threshold {}", red.threshold);
    Ok(0)
}

fn cmd_clique(graph: &Path) -> CmdResult {
    let g = load_graph(graph)?;
    match find_multicolored_clique(&g, DEFAULT_STATE_BOUND)? {
        Some(sel) => {
            println!("clique {}", g.selection_names(&sel).join(" "));
            Ok(0)
        }
        None => {
            println!("none");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_verify(instance: &Path, solution: &Path) -> CmdResult {
    let inst = parse_instance(&read(instance)?)?;
    let records = parse_solutions(&read(solution)?, inst.alphabet())?;
    let mut ok = true;
    for (i, rec) in records.iter().enumerate() {
        let r = rec.verify(&inst);
        if i > 0 {
            println!();
        }
        match r.recomputed_cost {
            Some(c) => println!("cost {c}"),
            None => println!("cost -"),
        }
        println!("valid {}", r.valid);
        if let Some(w) = r.within_budget {
            println!("within_budget {w}");
        }
        for p in &r.problems {
            eprintln!("solution {}: {p}", i + 1);
        }
        ok &= r.valid && r.within_budget != Some(false);
    }
    Ok(if ok { 0 } else { EXIT_NEGATIVE })
}

fn cmd_roundtrip(graph: &Path, exec: Exec) -> CmdResult {
    let g = load_graph(graph)?;
    let cfg = CheckConfig {
        exec,
        ..CheckConfig::default()
    };
    let report = theorem_check(&g, &cfg)?;
    println!("k {}", g.k());
    println!("n {}", g.n());
    println!("m {}", g.edge_count());
    println!("threshold {}", report.threshold);
    println!("optimum {}", report.optimum);
    println!("clique_exists {}", report.clique_exists);
    println!("max_edges_within {}", report.max_edges_within);
    let case = SuiteCase {
        id: graph
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "graph".into()),
        seed: None,
        graph: g,
    };
    let result = run_case(&case, &cfg);
    let passed = result.passed();
    print!("{}", SuiteReport { cases: vec![result] }.to_text());
    if passed {
        println!("equivalence holds");
        Ok(0)
    } else {
        println!("equivalence fails");
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_gen_graph(k: usize, n: usize, p: f64, seed: u64, out: &Path) -> CmdResult {
    let g = gen_colored_graph(&GenConfig::new(seed, k, n, p))?;
    write(out, &write_graph(&g))?;
    println!("edges {}", g.edge_count());
    Ok(0)
}

fn configure_threads(threads: Option<usize>) -> Result<Exec, Failure> {
    match threads {
        Some(0) => Err(Failure {
            code: EXIT_USAGE,
            msg: "--threads must be >= 1".into(),
        }),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(t) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| Failure {
                    code: EXIT_USAGE,
                    msg: e.to_string(),
                })?;
            Ok(Exec::Parallel)
        }
        _ => Ok(Exec::Parallel),
    }
}

fn run(cli: Cli) -> CmdResult {
    let exec = configure_threads(cli.threads)?;
    match cli.command {
        Command::Solve {
            instance,
            solver,
            all_optimal,
        } => cmd_solve(&instance, solver, all_optimal, exec),
        Command::Reduce { graph, out } => cmd_reduce(&graph, &out),
        Command::Clique { graph } => cmd_clique(&graph),
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Roundtrip { graph } => cmd_roundtrip(&graph, exec),
        Command::GenGraph { k, n, p, seed, out } => cmd_gen_graph(k, n, p, seed, &out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            if e.use_stderr() {
                eprint!("{e}");
            } else {
                print!("{e}");
            }
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
