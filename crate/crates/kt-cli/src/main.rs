//! `kt`: verify, solve, count, generate, reduce, decode, alpha.
//!
//! Exit codes: 0 = positive answer or success, 1 = negative answer (NOT-KT,
//! NONE, UNSAT), 2 = usage or input error, 3 = search budget exceeded.
//! `-` means standard input for any file argument.

use clap::{Args, Parser, Subcommand};
use kt_core::cubic::{solve_cubic, solve_cubic_with_report, CubicError};
use kt_core::families::{gen_copycut, gen_ladder, gen_named, gen_twincut, NamedGraph};
use kt_core::independence::{alpha_exact, IndependenceError};
use kt_core::io::{
    parse_graph, parse_orientation, write_graph, write_graph_with_comments, write_orientation,
    write_orientation_with_comments,
};
use kt_core::orientation::WitnessPair;
use kt_core::reductions::{
    decode_assignment_edges, encode_deg4, encode_general, parse_map, parse_nae3sat, write_map,
};
use kt_core::solve::{count_kt_orientations, solve_exact, SolveError};
use kt_core::verify::verify_kt;
use kt_core::SolveStatus;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kt",
    version,
    about = "KT orientation toolkit",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether an orientation file is a KT orientation.
    Verify {
        /// Orientation file (.d), or - for stdin.
        file: String,
    },
    /// Decide whether a graph admits a KT orientation.
    Solve(SolveArgs),
    /// Count the KT orientations of a graph (at most 24 edges).
    Count {
        /// Graph file (.g), or - for stdin.
        file: String,
    },
    /// Generate a graph family member on standard output.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Compile a monotone NAE-3SAT instance into a KT-orientation instance.
    Reduce {
        /// Instance file (.nae), or - for stdin.
        file: String,
        /// Use the maximum-degree-4 variant.
        #[arg(long)]
        deg4: bool,
        /// Write the decoding sidecar to this file instead of stderr.
        #[arg(long)]
        map: Option<String>,
    },
    /// Read a truth assignment off an orientation of a reduced instance.
    Decode {
        /// Instance file (.nae).
        nae: String,
        /// Sidecar produced by reduce.
        map: String,
        /// Orientation file (.d).
        orientation: String,
    },
    /// Compute a maximum independent set.
    Alpha {
        /// Graph file (.g), or - for stdin.
        file: String,
        /// Node budget for the branch-and-bound search.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file (.g), or - for stdin.
    file: String,
    /// Complete backtracking search (any graph).
    #[arg(long, conflicts_with = "cubic")]
    exact: bool,
    /// Polynomial algorithm for maximum degree at most 3.
    #[arg(long)]
    cubic: bool,
    /// Node budget for the exact search.
    #[arg(long, requires = "exact")]
    budget: Option<u64>,
    /// With --cubic, print the hypergraph component classification table to
    /// stderr.
    #[arg(long, requires = "cubic")]
    explain: bool,
}

#[derive(Subcommand)]
enum GenCommand {
    /// The 2xk grid graph.
    Ladder { k: u32 },
    /// The k-th copycut graph; --orient emits its KT orientation instead.
    Copycut {
        k: u32,
        /// Emit the constructive orientation file (with a branch comment)
        /// instead of the graph file.
        #[arg(long)]
        orient: bool,
        /// Explicit d-sequence (comma-separated), canonical when omitted.
        #[arg(long, value_delimiter = ',')]
        d: Option<Vec<u64>>,
    },
    /// The k-th twincut graph.
    Twincut { k: u32 },
    /// A named small graph: cube, k23, k33, k33e, petersen,
    /// cubeMinusVertex, cubeMinusEdge.
    Named { name: String },
    /// The cycle C_n.
    Cycle { n: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("kt: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
    }
}

const EXIT_NEGATIVE: u8 = 1;
const EXIT_BUDGET: u8 = 3;

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { file } => {
            let d = parse_orientation(&read_input(&file)?).map_err(|e| e.to_string())?;
            match verify_kt(&d) {
                kt_core::VerifyResult::IsKt => {
                    println!("KT");
                    Ok(ExitCode::SUCCESS)
                }
                kt_core::VerifyResult::NotKt(w) => {
                    println!("NOT-KT");
                    match w {
                        WitnessPair::DirectedCycle { vertices } => {
                            println!("cycle: {}", join(&vertices));
                        }
                        WitnessPair::TwoPaths {
                            u,
                            v,
                            path_a,
                            path_b,
                        } => {
                            println!("paths: {u} {v} / {} / {}", join(&path_a), join(&path_b));
                        }
                    }
                    Ok(ExitCode::from(EXIT_NEGATIVE))
                }
            }
        }
        Command::Solve(args) => solve_command(args),
        Command::Count { file } => {
            let g = parse_graph(&read_input(&file)?).map_err(|e| e.to_string())?;
            let count = count_kt_orientations(&g).map_err(|e| e.to_string())?;
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(gen) => gen_command(gen),
        Command::Reduce { file, deg4, map } => {
            let inst = parse_nae3sat(&read_input(&file)?).map_err(|e| e.to_string())?;
            let enc = if deg4 {
                encode_deg4(&inst)
            } else {
                encode_general(&inst)
            };
            print!("{}", write_graph(&enc.graph));
            let sidecar = write_map(&enc);
            match map {
                Some(path) => std::fs::write(&path, sidecar)
                    .map_err(|e| format!("cannot write {path}: {e}"))?,
                None => eprint!("{sidecar}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode {
            nae,
            map,
            orientation,
        } => {
            let inst = parse_nae3sat(&read_input(&nae)?).map_err(|e| e.to_string())?;
            let var_edges = parse_map(&read_input(&map)?).map_err(|e| e.to_string())?;
            if var_edges.len() != inst.n_vars as usize {
                return Err(format!(
                    "sidecar lists {} variables, instance has {}",
                    var_edges.len(),
                    inst.n_vars
                ));
            }
            let d = parse_orientation(&read_input(&orientation)?).map_err(|e| e.to_string())?;
            let assignment = decode_assignment_edges(&var_edges, &d).map_err(|e| e.to_string())?;
            for value in assignment {
                println!("{}", if value { "T" } else { "F" });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Alpha { file, budget } => {
            let g = parse_graph(&read_input(&file)?).map_err(|e| e.to_string())?;
            match alpha_exact(&g, budget) {
                Ok(res) => {
                    println!("alpha {}", res.alpha);
                    println!("set: {}", join(&res.witness));
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ IndependenceError::BudgetExceeded { .. }) => {
                    eprintln!("kt: {e}");
                    Ok(ExitCode::from(EXIT_BUDGET))
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

fn solve_command(args: SolveArgs) -> Result<ExitCode, String> {
    if !args.exact && !args.cubic {
        return Err("solve requires --exact or --cubic".into());
    }
    let g = parse_graph(&read_input(&args.file)?).map_err(|e| e.to_string())?;
    let outcome = if args.exact {
        match solve_exact(&g, args.budget) {
            Ok(out) => out,
            Err(e @ SolveError::BudgetExceeded { .. }) => {
                eprintln!("kt: {e}");
                return Ok(ExitCode::from(EXIT_BUDGET));
            }
            Err(e) => return Err(e.to_string()),
        }
    } else if args.explain {
        let (out, report) = solve_cubic_with_report(&g).map_err(cubic_err)?;
        for line in &report.lines {
            eprintln!("{line}");
        }
        out
    } else {
        solve_cubic(&g).map_err(cubic_err)?
    };
    match outcome.status {
        SolveStatus::Found(d) => {
            print!("{}", write_orientation(&d));
            Ok(ExitCode::SUCCESS)
        }
        SolveStatus::None => {
            println!("NONE");
            Ok(ExitCode::from(EXIT_NEGATIVE))
        }
    }
}

fn gen_command(gen: GenCommand) -> Result<ExitCode, String> {
    match gen {
        GenCommand::Ladder { k } => {
            require(k >= 1, "k must be at least 1")?;
            let (g, _) = gen_ladder(k);
            print!("{}", write_graph(&g));
        }
        GenCommand::Copycut { k, orient, d } => {
            let fam = gen_copycut(k, d.as_deref()).map_err(|e| e.to_string())?;
            let branch = format!("branch: {}", join(&fam.branch));
            if orient {
                print!(
                    "{}",
                    write_orientation_with_comments(&fam.orientation, &[branch])
                );
            } else {
                print!("{}", write_graph_with_comments(&fam.graph, &[branch]));
            }
        }
        GenCommand::Twincut { k } => {
            let fam = gen_twincut(k).map_err(|e| e.to_string())?;
            let branch = format!("branch: {}", join(&fam.branch));
            print!("{}", write_graph_with_comments(&fam.graph, &[branch]));
        }
        GenCommand::Named { name } => {
            let named: NamedGraph = name
                .parse()
                .map_err(|e: kt_core::families::FamilyError| e.to_string())?;
            print!("{}", write_graph(&gen_named(named)));
        }
        GenCommand::Cycle { n } => {
            require(n >= 3, "cycles need at least 3 vertices")?;
            print!("{}", write_graph(&gen_named(NamedGraph::Cycle(n))));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cubic_err(e: CubicError) -> String {
    e.to_string()
}

fn require(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn join(xs: &[u32]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
