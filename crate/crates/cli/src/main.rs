use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sepsign_core::classify::{best_witness, classify};
use sepsign_core::enumerate::{cycle_targets, path_targets};
use sepsign_core::format::{parse_csp, parse_graph, parse_instance, parse_solution, write_graph, write_instance};
use sepsign_core::hardness::build_reduction;
use sepsign_core::solver::{check_solution, solve_auto, solve_h1, solve_oracle, solve_ordered, Algorithm, Instance, Outcome};
use sepsign_core::{Error, SignedGraph};

/// List homomorphisms to separable signed graphs.
#[derive(Parser)]
#[command(name = "sepsign", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the complexity of a target
    Classify { target: PathBuf },
    /// Solve a list-homomorphism instance
    Solve {
        target: PathBuf,
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Alg::Auto)]
        alg: Alg,
    },
    /// Solve with the exhaustive reference solver
    Oracle { target: PathBuf, instance: PathBuf },
    /// Print a hardness witness of a target
    Witness { target: PathBuf },
    /// Print a special min ordering of a polynomial target
    Ordering { target: PathBuf },
    /// Compile a quadruple CSP into an instance
    Gadget {
        csp: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Also write the target graph here
        #[arg(long)]
        target_out: Option<PathBuf>,
    },
    /// Stream canonical separable targets with their verdicts
    Enum {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[arg(long)]
        max_n: usize,
    },
    /// Check a solution file against a target
    Verify { target: PathBuf, solution: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Auto,
    H1,
    Ordered,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Cycle,
}

/// Exit statuses: 0 yes/success, 1 no, 2 bad usage or input.
enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

type Run = Result<bool, Failure>;

fn input(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { .. } => Failure::Input(format!("{}:{e}", path.display())),
        e => Failure::Input(format!("{}: {e}", path.display())),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<SignedGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| input(path, e))
}

fn load_instance(path: &Path, h: &SignedGraph) -> Result<Instance, Failure> {
    parse_instance(&read(path)?, h.vertex_count()).map_err(|e| input(path, e))
}

fn emit(out: &mut impl Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)
}

fn solve(out: &mut impl Write, target: &Path, instance: &Path, alg: Alg) -> Run {
    let h = load_graph(target)?;
    let inst = load_instance(instance, &h)?;
    let ran = match alg {
        Alg::Auto => solve_auto(&inst, &h),
        Alg::H1 => solve_h1(&inst, &h).map(|o| (Algorithm::H1, o)),
        Alg::Oracle => solve_oracle(&inst, &h).map(|o| (Algorithm::Oracle, o)),
        Alg::Ordered => classify(&h).and_then(|v| {
            let o = v.ordering.ok_or_else(|| Error::Unsupported(format!("target is NP-complete ({})", v.reason)))?;
            solve_ordered(&inst, &h, &o).map(|out| (Algorithm::Ordered, out))
        }),
    };
    let (alg, Outcome { solution, backtracks }) = ran.map_err(|e| Failure::Input(e.to_string()))?;
    let mut v = json!({
        "decision": if solution.is_some() { "yes" } else { "no" },
        "algorithm": alg,
        "stats": { "backtracks": backtracks },
    });
    if let Some(sol) = &solution {
        let bits: Vec<u8> = sol.switching.to_bits(sol.map.len()).into_iter().map(u8::from).collect();
        v["map"] = json!(sol.map);
        v["switch"] = json!(bits);
    }
    emit(out, &v)?;
    Ok(solution.is_some())
}

fn run(cli: Cli, out: &mut impl Write) -> Run {
    match cli.command {
        Command::Classify { target } => {
            let v = classify(&load_graph(&target)?).map_err(|e| input(&target, e))?;
            emit(out, &json!(v))?;
            Ok(true)
        }
        Command::Solve { target, instance, alg } => solve(out, &target, &instance, alg),
        Command::Oracle { target, instance } => solve(out, &target, &instance, Alg::Oracle),
        Command::Witness { target } => {
            let w = best_witness(&load_graph(&target)?);
            emit(out, &json!(w))?;
            Ok(w.is_some())
        }
        Command::Ordering { target } => {
            let v = classify(&load_graph(&target)?).map_err(|e| input(&target, e))?;
            emit(out, &json!(v.ordering))?;
            Ok(v.ordering.is_some())
        }
        Command::Gadget { csp, ell, target_out } => {
            let c = parse_csp(&read(&csp)?).map_err(|e| input(&csp, e))?;
            let r = build_reduction(&c, ell).map_err(|e| Failure::Input(e.to_string()))?;
            if let Some(path) = target_out {
                fs::write(&path, write_graph(&r.target)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            writeln!(out, "# list homomorphism instance for the unbalanced target with ell = {ell}")?;
            out.write_all(write_instance(&r.instance).as_bytes())?;
            Ok(true)
        }
        Command::Enum { kind, max_n } => {
            let limit = match kind {
                Kind::Path => 14,
                Kind::Cycle => 12,
            };
            if max_n > limit {
                return Err(Failure::Input(format!("--max-n is at most {limit} for this type")));
            }
            for n in 1..=max_n {
                let targets: Box<dyn Iterator<Item = SignedGraph>> = match kind {
                    Kind::Path => Box::new(path_targets(n).map(|p| p.to_graph())),
                    Kind::Cycle if n >= 3 => Box::new(cycle_targets(n)),
                    Kind::Cycle => Box::new(std::iter::empty()),
                };
                for g in targets {
                    let v = classify(&g).map_err(|e| Failure::Input(e.to_string()))?;
                    let edges: Vec<Value> = g.edges().map(|(u, v, c)| json!([u, v, c.symbol().to_string()])).collect();
                    emit(out, &json!({ "n": n, "edges": edges, "complexity": v.complexity, "reason": v.reason }))?;
                }
            }
            Ok(true)
        }
        Command::Verify { target, solution } => {
            let h = load_graph(&target)?;
            let (inst, sol) = parse_solution(&read(&solution)?, h.vertex_count()).map_err(|e| input(&solution, e))?;
            let v = match check_solution(&inst, &h, &sol) {
                Ok(()) => json!({ "valid": true }),
                Err(reason) => json!({ "valid": false, "reason": reason }),
            };
            emit(out, &v)?;
            Ok(v["valid"] == true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        // a closed pipe ends a stream early without being an error
        (Err(Failure::Io(e)), _) | (_, Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Err(Failure::Io(e)), _) | (Ok(_), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Err(Failure::Input(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
    }
}
