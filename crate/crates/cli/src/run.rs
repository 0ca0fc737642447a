//! Command-line definition and dispatch.
//!
//! Exit codes: 0 success; 1 a check ran and came back negative (invalid
//! partition, no partition exists, failed height property); 2 rejected input
//! (parse errors, bad flags, budgets below the bound); 3 the run itself
//! failed (step budget, height contract, internal assertion).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hpart::verify::{
    brute_force_exists_capped, check_height_properties_with, AxiomOptions, DEFAULT_ASSIGNMENT_CAP,
    DEFAULT_MAX_VERTICES,
};
use hpart::{Error, Graph, HeightFunction, Outcome, Partition, Potential, Problem, Solver, Trace};

use crate::dimacs::parse_graph;
use crate::document::{format_partition, Format, PartitionDocument};
use crate::report;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "hpart",
    version,
    about = "Degree- and height-constrained graph partitioning"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Partition so every part has bounded degree and zero height.
    Partition(SolveArgs),
    /// Partition so every part has bounded degree (weaker budget bound).
    Lovasz(SolveArgs),
    /// Check a partition file against the degree and height conditions.
    Verify(VerifyArgs),
    /// Exhaustively search for a valid partition.
    Oracle(OracleArgs),
    /// Check a height function's four properties on all small connected graphs.
    CheckHeight(CheckHeightArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    /// Graph in DIMACS edge format.
    #[arg(long)]
    pub graph: PathBuf,
    /// Comma-separated degree budgets, one per part.
    #[arg(long, value_delimiter = ',', required = true)]
    pub r: Vec<usize>,
    /// Comma-separated height names (`zero`, `regular`), one per part, or a
    /// single name used for every part.
    #[arg(long, value_delimiter = ',', default_value = "zero")]
    pub height: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Maximum number of vertex moves.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Start from a uniformly random assignment drawn from this seed instead
    /// of round-robin.
    #[arg(long, conflicts_with = "initial")]
    pub seed: Option<u64>,
    /// Start from the partition in this document.
    #[arg(long)]
    pub initial: Option<PathBuf>,
    /// Write the move and commit log as JSON to this file.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Print run statistics to stderr.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Partition document `{"k": .., "parts": [[..], ..]}` with 1-indexed ids.
    #[arg(long)]
    pub parts: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Refuse instances with more than this many assignments.
    #[arg(long, default_value_t = DEFAULT_ASSIGNMENT_CAP)]
    pub cap: u128,
}

#[derive(Args, Debug, Clone)]
pub struct CheckHeightArgs {
    #[arg(long)]
    pub height: String,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub n_max: usize,
    /// Check one graph per isomorphism class.
    #[arg(long)]
    pub up_to_iso: bool,
    /// Worker threads; 1 checks serially.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Result of a command: exit code plus the text destined for stdout and
/// stderr.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InputFormat(_)
            | Error::Contract(_)
            | Error::Hypothesis { .. }
            | Error::Size(_) => 2,
            Error::HeightContract { .. }
            | Error::BudgetExceeded { .. }
            | Error::Internal { .. } => 3,
        };
        Failure {
            code,
            message: format!("error: {e}\n"),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: 2,
        message: format!("error: {message}\n"),
    }
}

pub fn run(cli: &Cli) -> Output {
    let mut warnings = String::new();
    let result = match &cli.command {
        Command::Partition(args) => solve(args, true, &mut warnings),
        Command::Lovasz(args) => solve(args, false, &mut warnings),
        Command::Verify(args) => verify(args, &mut warnings),
        Command::Oracle(args) => oracle(args, &mut warnings),
        Command::CheckHeight(args) => check_height(args),
    };
    let mut out = match result {
        Ok(out) => out,
        Err(f) => Output::fail(f.code, f.message),
    };
    out.stderr.insert_str(0, &warnings);
    out
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path, warnings: &mut String) -> Result<Graph, Failure> {
    let parsed =
        parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    for w in parsed.warnings {
        warnings.push_str(&format!("warning: {}: {w}\n", path.display()));
    }
    Ok(parsed.graph)
}

fn load_problem(args: &ProblemArgs, warnings: &mut String) -> Result<Problem, Failure> {
    let graph = load_graph(&args.graph, warnings)?;
    let k = args.r.len();
    let names: Vec<&str> = match args.height.len() {
        1 => vec![args.height[0].as_str(); k],
        len if len == k => args.height.iter().map(String::as_str).collect(),
        len => {
            return Err(input_error(format!(
                "{len} height names given for {k} budgets"
            )))
        }
    };
    let heights = names
        .iter()
        .zip(&args.r)
        .map(|(name, &r)| HeightFunction::from_name(name, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Problem::new(graph, args.r.clone(), heights)?)
}

fn solve(args: &SolveArgs, main: bool, warnings: &mut String) -> Result<Output, Failure> {
    let problem = load_problem(&args.problem, warnings)?;
    let mut solver = Solver::new(&problem).record_trace(args.trace.is_some());
    if let Some(budget) = args.budget {
        solver = solver.step_budget(budget);
    }
    if let Some(seed) = args.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = problem.k();
        let assign = (0..problem.graph().n())
            .map(|_| rng.random_range(0..k))
            .collect();
        solver = solver.initial(Partition::new(k, assign)?);
    }
    if let Some(path) = &args.initial {
        let doc = load_document(path)?;
        solver = solver.initial(Partition::from_parts(
            problem.graph().n(),
            &doc.zero_indexed(),
        )?);
    }
    let outcome: Outcome = if main {
        solver.run_main()?
    } else {
        solver.run_lovasz()?
    };
    if let (Some(path), Some(trace)) = (&args.trace, &outcome.trace) {
        std::fs::write(path, format!("{}\n", trace_json(trace))).map_err(|e| Failure {
            code: 3,
            message: format!("error: {}: {e}\n", path.display()),
        })?;
    }
    let mut out = Output::ok(format_partition(&outcome.partition, args.problem.format));
    if args.stats {
        let s = &outcome.stats;
        out.stderr = format!(
            "moves={} degree_fix_moves={} commits={} shuffle_steps={} isolations={} rearrangements={}\n",
            s.moves, s.degree_fix_moves, s.commits, s.shuffle_steps, s.isolations, s.rearrangements
        );
    }
    Ok(out)
}

fn trace_json(trace: &Trace) -> Value {
    let pot = |p: Potential| json!([p.f, p.c, p.h]);
    let moves: Vec<Value> = trace
        .moves
        .iter()
        .map(|m| {
            json!({
                "kind": format!("{:?}", m.kind),
                "vertex": m.vertex + 1,
                "from": m.from + 1,
                "to": m.to + 1,
                "before": pot(m.before),
                "after": pot(m.after),
            })
        })
        .collect();
    let commits: Vec<Value> = trace
        .commits
        .iter()
        .map(|c| json!({ "kind": format!("{:?}", c.kind), "before": pot(c.before), "after": pot(c.after) }))
        .collect();
    json!({ "moves": moves, "commits": commits })
}

fn load_document(path: &Path) -> Result<PartitionDocument, Failure> {
    let doc: PartitionDocument = serde_json::from_str(&read(path)?)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    if doc.k != doc.parts.len() {
        return Err(input_error(format!(
            "{}: k is {} but {} parts are listed",
            path.display(),
            doc.k,
            doc.parts.len()
        )));
    }
    Ok(doc)
}

fn verify(args: &VerifyArgs, warnings: &mut String) -> Result<Output, Failure> {
    let problem = load_problem(&args.problem, warnings)?;
    let doc = load_document(&args.parts)?;
    let report = hpart::verify_parts(&problem, &doc.zero_indexed());
    let stdout = match args.problem.format {
        Format::Json => format!("{}\n", report::validation_json(&report)),
        Format::Text => report::validation_text(&report),
    };
    Ok(Output {
        code: if report.is_ok() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

fn oracle(args: &OracleArgs, warnings: &mut String) -> Result<Output, Failure> {
    let problem = load_problem(&args.problem, warnings)?;
    let found = brute_force_exists_capped(&problem, args.cap)?;
    Ok(match found {
        Some(p) => Output::ok(format_partition(&p, args.problem.format)),
        None => Output {
            code: 1,
            stdout: "none\n".into(),
            stderr: String::new(),
        },
    })
}

fn check_height(args: &CheckHeightArgs) -> Result<Output, Failure> {
    let h = HeightFunction::from_name(&args.height, args.r)?;
    let options = AxiomOptions {
        n_max: args.n_max,
        up_to_isomorphism: args.up_to_iso,
        parallel: args.jobs > 1,
        ..AxiomOptions::new(args.n_max)
    };
    let report = if args.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| input_error(format!("cannot start {} workers: {e}", args.jobs)))?;
        pool.install(|| check_height_properties_with(&h, args.r, &options))?
    } else {
        check_height_properties_with(&h, args.r, &options)?
    };
    let stdout = match args.format {
        Format::Json => format!("{}\n", report::axiom_json(&report)),
        Format::Text => report::axiom_text(&report),
    };
    Ok(Output {
        code: if report.is_ok() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}
