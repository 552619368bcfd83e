//! `kcoal`: command-line front end for graph generation, the exact C_k,
//! γ_k and d_k solvers, partition validation, the constructive refinement,
//! coalition graphs, and the theorem verification harness.

use clap::{Args, Parser, Subcommand};
use kcoalition::coalition::{
    certificate_json, coalition_graph, coalition_number_oracle, coalition_number_with,
    construct_from_domatic, validate_partition, BoundMode, SolveError, SolveResult, SolverConfig,
};
use kcoalition::domatic::find_max_domatic_partition;
use kcoalition::domination::gamma_k;
use kcoalition::family::FamilySpec;
use kcoalition::graph::Graph;
use kcoalition::partition::Partition;
use kcoalition::verify::{self, Severity, VerificationReport, VerifyConfig};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kcoal",
    version,
    about = "Exact k-coalition, k-domination and k-domatic computations on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every solver-backed subcommand.
#[derive(Args)]
struct GraphArg {
    /// Graph input: a family spec (contains ':', e.g. `cycle:6` or
    /// `corona:(cycle:3),(empty:1)`) or a path to an edge-list file.
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the canonical edge list of a family instance
    Gen {
        /// Family spec, e.g. `path:5`, `biclique:2,3`, `corona:(cycle:4),(complete:1)`
        spec: String,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the k-coalition number C_k
    Cnum {
        #[arg(short)]
        k: usize,
        /// Use the exhaustive set-partition oracle (n <= 11)
        #[arg(long)]
        oracle: bool,
        /// Also print the witness partition and certificate as JSON
        #[arg(long)]
        certificate: bool,
        /// Sequential search with the lexicographically smallest witness
        /// (the solver always runs this way; accepted for compatibility)
        #[arg(long)]
        deterministic: bool,
        /// Allow pruning with the stated but informally proved upper bounds
        #[arg(long)]
        trust_paper_bounds: bool,
        /// Vertex budget for the branch-and-bound solver
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        /// Node budget for the branch-and-bound solver
        #[arg(long, default_value_t = 1_000_000_000)]
        node_cap: u64,
        #[command(flatten)]
        input: GraphArg,
    },
    /// Compute the k-domination number γ_k
    Gamma {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: GraphArg,
    },
    /// Compute the k-domatic number d_k
    Domatic {
        #[arg(short)]
        k: usize,
        /// Also print a maximum k-domatic partition
        #[arg(long)]
        partition: bool,
        #[command(flatten)]
        input: GraphArg,
    },
    /// Validate a partition file as a k-coalition partition
    Validate {
        #[arg(short)]
        k: usize,
        /// Partition file: one block per line, space-separated vertex ids
        #[arg(long)]
        partition: PathBuf,
        #[command(flatten)]
        input: GraphArg,
    },
    /// Build a k-coalition partition from a maximum k-domatic partition
    Construct {
        #[arg(short)]
        k: usize,
        /// Also print the certificate as JSON
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        input: GraphArg,
    },
    /// Emit the coalition graph kCG(G, π) of a valid partition
    Cgraph {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        partition: PathBuf,
        #[command(flatten)]
        input: GraphArg,
    },
    /// Replay registered theorem checks over their corpora
    Verify {
        /// A theorem id (see `verify list`) or `all`
        id: String,
        /// Override the registered corpus size
        #[arg(long)]
        max_n: Option<usize>,
        /// Override the k range, e.g. `1..3`
        #[arg(long)]
        k: Option<String>,
        /// Emit reports as a single JSON document
        #[arg(long)]
        json: bool,
        /// Cap worker threads
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_graph(arg: &str) -> Result<Graph, String> {
    if arg.contains(':') {
        let spec: FamilySpec = arg.parse().map_err(|e| format!("{e}"))?;
        spec.generate().map_err(|e| format!("{e}"))
    } else {
        let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
        Graph::parse_edge_list(&text).map_err(|e| format!("{arg}: {e}"))
    }
}

fn check_k(k: usize) -> Result<(), String> {
    if k == 0 {
        return Err("k must be at least 1".into());
    }
    Ok(())
}

fn load_partition(path: &PathBuf, g: &Graph) -> Result<Partition, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read partition: {e}"))?;
    Partition::parse(&text, g.n()).map_err(|e| format!("partition: {e}"))
}

fn solve_error(e: SolveError) -> String {
    match e {
        SolveError::NodeBudget { .. } | SolveError::TooLarge { .. } => format!("budget: {e}"),
        other => other.to_string(),
    }
}

fn print_result(g: &Graph, k: usize, result: &SolveResult, certificate: bool) {
    match result.value {
        Some(v) => println!("{v}"),
        None => {
            println!("undefined");
            eprintln!(
                "note: no partition of this {}-vertex graph satisfies the \
                 k-coalition partition definition for k = {k}; every block \
                 would need to be a k-dominating set with exactly k members \
                 or have a coalition partner",
                g.n()
            );
        }
    }
    if certificate {
        if let Some((p, cert)) = &result.witness {
            println!("{}", certificate_json(p, cert));
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen { spec, output } => {
            let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
            let g = spec.generate().map_err(|e| format!("{e}"))?;
            match output {
                Some(path) => fs::write(&path, g.to_edge_list())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{}", g.to_edge_list()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cnum {
            k,
            oracle,
            certificate,
            deterministic: _,
            trust_paper_bounds,
            max_n,
            node_cap,
            input,
        } => {
            check_k(k)?;
            let g = load_graph(&input.graph)?;
            let result = if oracle {
                coalition_number_oracle(&g, k).map_err(solve_error)?
            } else {
                let cfg = SolverConfig {
                    max_vertices: max_n,
                    node_cap,
                    bound_mode: if trust_paper_bounds {
                        BoundMode::TrustPaper
                    } else {
                        BoundMode::Proven
                    },
                };
                coalition_number_with(&g, k, &cfg).map_err(solve_error)?
            };
            print_result(&g, k, &result, certificate);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma { k, input } => {
            check_k(k)?;
            let g = load_graph(&input.graph)?;
            if g.n() == 0 {
                return Err("γ_k needs at least one vertex".into());
            }
            println!("{}", gamma_k(&g, k));
            Ok(ExitCode::SUCCESS)
        }
        Command::Domatic {
            k,
            partition,
            input,
        } => {
            check_k(k)?;
            let g = load_graph(&input.graph)?;
            if g.n() == 0 {
                return Err("d_k needs at least one vertex".into());
            }
            let p = find_max_domatic_partition(&g, k);
            println!("{}", p.len());
            if partition {
                print!("{p}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate {
            k,
            partition,
            input,
        } => {
            check_k(k)?;
            let g = load_graph(&input.graph)?;
            let p = load_partition(&partition, &g)?;
            match validate_partition(&g, &p, k) {
                Ok(cert) => {
                    println!("{}", certificate_json(&p, &cert));
                    Ok(ExitCode::SUCCESS)
                }
                Err(failure) => {
                    println!("invalid: {failure}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Construct {
            k,
            certificate,
            input,
        } => {
            check_k(k)?;
            let g = load_graph(&input.graph)?;
            let (p, cert) = construct_from_domatic(&g, k).map_err(|e| format!("{e}"))?;
            print!("{p}");
            if certificate {
                println!("{}", certificate_json(&p, &cert));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cgraph {
            k,
            partition,
            input,
        } => {
            check_k(k)?;
            let g = load_graph(&input.graph)?;
            let p = load_partition(&partition, &g)?;
            let kcg = coalition_graph(&g, &p, k)
                .map_err(|failure| format!("partition does not validate: {failure}"))?;
            print!("{}", kcg.to_edge_list());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            id,
            max_n,
            k,
            json,
            jobs,
        } => {
            let k_range = match k {
                None => None,
                Some(text) => Some(parse_k_range(&text)?),
            };
            let cfg = VerifyConfig {
                max_n,
                k_range,
                jobs,
            };
            if id == "list" {
                for check in verify::REGISTRY {
                    println!(
                        "{:16} {:?}  {}",
                        check.id(),
                        check.severity(),
                        check.description()
                    );
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports = verify::run(&id, &cfg)
                .ok_or_else(|| format!("unknown theorem id {id:?}; try `kcoal verify list`"))?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            } else {
                for r in &reports {
                    print_report(r);
                }
            }
            Ok(ExitCode::from(verify::exit_status(&reports) as u8))
        }
    }
}

fn parse_k_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("cannot parse k range {text:?}, expected MIN..MAX"))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad k range start {lo:?}"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad k range end {hi:?}"))?;
    if lo == 0 || hi < lo {
        return Err(format!("k range {text:?} must satisfy 1 <= MIN <= MAX"));
    }
    Ok(lo..=hi)
}

fn print_report(r: &VerificationReport) {
    let documented = r.violations.iter().filter(|v| v.documented).count();
    let status = match (
        r.violations.is_empty(),
        r.severity,
        documented == r.violations.len(),
    ) {
        (true, _, _) => "PASS",
        (false, Severity::Assert, true) => "PASS*",
        (false, Severity::Assert, false) => "FAIL",
        (false, Severity::Report, _) => "REPORT",
    };
    println!(
        "{:16} {status:7} checked={} violations={} documented={} elapsed={}ms",
        r.theorem,
        r.checked,
        r.violations.len(),
        documented,
        r.elapsed_ms
    );
    for v in &r.violations {
        let tag = if v.documented {
            " [documented discrepancy]"
        } else {
            ""
        };
        println!(
            "    {} k={}: expected {}, got {}{tag}",
            v.graph, v.k, v.expected, v.got
        );
    }
}
