//! Batch front end. Exit codes: 0 success, 1 invalid certificate, 2 infeasible,
//! 3 parse error, 4 precondition, cap, or I/O error, 5 search budget exhausted.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sepkit::format::{export_dot, parse_graph, parse_partition, serialize_graph};
use sepkit::gadget::{build_gadget, reduce, GadgetSpec};
use sepkit::generate::{enumerate_cubic_with_cap, random_cubic, DEFAULT_ENUMERATION_CAP};
use sepkit::harness::{run_campaign, CampaignParams, GraphSource};
use sepkit::solver::{solve_min_separator, verify_certificate, Status};
use sepkit::{Alpha, Error, Graph, Problem, Result, SolverConfig};

#[derive(Parser)]
#[command(name = "sepkit", version, about = "Balanced vertex separator toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Random connected cubic graph.
    GenCubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Every connected cubic graph the enumerator emits for `n`.
    EnumCubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Write one file per graph instead of a blank-line separated stream.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// A single gadget as a graph file, optionally with a DOT rendering.
    Gadget {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Replace every vertex of a graph by a gadget.
    Reduce {
        graph: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write the reduction map JSON.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Minimum balanced separator as JSON.
    Solve {
        graph: PathBuf,
        #[command(flatten)]
        balance: BalanceArgs,
        /// Only accept separators of at most this size.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        require_max_degree_three: bool,
        #[arg(long)]
        time_budget_ms: Option<u64>,
    },
    /// Check a partition file against a balance condition.
    Verify {
        graph: PathBuf,
        partition: PathBuf,
        #[command(flatten)]
        balance: BalanceArgs,
    },
    /// Audit the balance derivation over cubic graphs, as JSON lines.
    Campaign {
        /// Comma-separated even vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "3/5,2/3,3/4")]
        alphas: Vec<Alpha>,
        #[arg(long, value_enum, default_value_t = SourceArg::Enumerate)]
        source: SourceArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 4)]
        max_separator: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Graphviz rendering of a graph, coloured by an optional partition.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    cycles: usize,
    #[arg(long)]
    len: usize,
    #[arg(long)]
    outlets: usize,
    #[arg(long)]
    three_regular: bool,
    #[arg(long)]
    doubled: bool,
}

impl SpecArgs {
    fn spec(&self) -> GadgetSpec {
        GadgetSpec::new(self.cycles, self.len, self.outlets)
            .three_regular(self.three_regular)
            .doubled(self.doubled)
    }
}

#[derive(Args)]
struct BalanceArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    /// Balance fraction as `p/q` with 1/2 < p/q < 1.
    #[arg(long)]
    alpha: Alpha,
    #[arg(long)]
    require_nice: bool,
}

impl BalanceArgs {
    fn config(&self) -> SolverConfig {
        let problem = match self.problem {
            ProblemArg::Vertex => Problem::VertexBalanced,
            ProblemArg::Subgraph => Problem::SubgraphBalanced,
        };
        SolverConfig::new(problem, self.alpha).with_require_nice(self.require_nice)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Vertex,
    Subgraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Enumerate,
    Random,
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::GenCubic { n, seed, output } => {
            emit(output.as_deref(), &serialize_graph(&random_cubic(n, seed)?))?;
        }
        Command::EnumCubic { n, cap, out_dir } => {
            let stream = enumerate_cubic_with_cap(n, cap)?;
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    for (i, g) in stream.enumerate() {
                        fs::write(dir.join(format!("cubic-{n}-{i:05}.txt")), serialize_graph(&g))?;
                    }
                }
                None => {
                    let mut out = io::BufWriter::new(io::stdout().lock());
                    for (i, g) in stream.enumerate() {
                        if i > 0 {
                            out.write_all(b"\n")?;
                        }
                        out.write_all(serialize_graph(&g).as_bytes())?;
                    }
                    out.flush()?;
                }
            }
        }
        Command::Gadget { spec, output, dot } => {
            let gadget = build_gadget(&spec.spec())?;
            emit(output.as_deref(), &serialize_graph(&gadget.graph))?;
            if let Some(path) = dot {
                fs::write(path, export_dot(&gadget.graph, None))?;
            }
        }
        Command::Reduce { graph, spec, output, map } => {
            let (gstar, rmap) = reduce(&read_graph(&graph)?, &spec.spec())?;
            emit(output.as_deref(), &serialize_graph(&gstar))?;
            if let Some(path) = map {
                fs::write(path, rmap.to_json()?)?;
            }
        }
        Command::Solve { graph, balance, k, require_max_degree_three, time_budget_ms } => {
            let g = read_graph(&graph)?;
            let mut cfg = balance.config();
            cfg.require_max_degree_three = require_max_degree_three;
            if let Some(k) = k {
                cfg = cfg.with_max_separator(k);
            }
            if let Some(ms) = time_budget_ms {
                cfg = cfg.with_time_budget(Duration::from_millis(ms));
            }
            let outcome = solve_min_separator(&g, &cfg)?;
            println!("{}", outcome.to_json());
            return Ok(match outcome.status {
                Status::Optimal => 0,
                Status::Infeasible => 2,
                Status::BudgetExhausted => 5,
            });
        }
        Command::Verify { graph, partition, balance } => {
            let g = read_graph(&graph)?;
            let p = parse_partition(&fs::read_to_string(partition)?, g.n())?;
            let check = verify_certificate(&g, &p, &balance.config());
            if check.is_valid() {
                println!("valid");
                return Ok(0);
            }
            for reason in &check.reasons {
                println!("invalid: {reason}");
            }
            return Ok(1);
        }
        Command::Campaign { sizes, alphas, source, seed, count, exhaustive, max_separator, output } => {
            let source = match source {
                SourceArg::Enumerate => GraphSource::Enumerate,
                SourceArg::Random => GraphSource::Random { seed, count },
            };
            let mut params = CampaignParams::new(sizes, alphas, source);
            params.exhaustive = exhaustive;
            params.max_separator = max_separator;
            emit(output.as_deref(), &run_campaign(&params)?.to_jsonl())?;
        }
        Command::ExportDot { graph, partition, output } => {
            let g = read_graph(&graph)?;
            let p = partition
                .map(|path| parse_partition(&fs::read_to_string(path)?, g.n()))
                .transpose()?;
            emit(output.as_deref(), &export_dot(&g, p.as_ref()))?;
        }
    }
    Ok(0)
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        "parse" => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("error[parse]: {}", e.render().to_string().trim_start_matches("error: ").trim_end());
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(exit_code(&e))
        }
    }
}
