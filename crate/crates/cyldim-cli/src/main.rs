//! Command-line surface for the cylinder dimer toolkit: enumeration,
//! counting, Kostka/Gromov-Witten tables, toric expansions, the verification
//! suites, and SVG rendering.

mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyldim_core::combinatorics::{BoxShape, Composition, Partition};
use cyldim_core::dimers::enumerate_configurations_with_budget;
use cyldim_core::dimers::DimerConfiguration;
use cyldim_core::error::Error as CoreError;
use cyldim_core::qh::{
    gw_table, kostka_table, rows_to_tsv, toric_expansion_json, toric_schur, toric_table, TableRow,
};
use cyldim_core::verify;

const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "cyldim",
    about = "Dimer configurations on honeycomb cylinders, KR crystals, and quantum cohomology",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all configurations for a boundary pair and row sizes.
    Enumerate(InstanceArgs),
    /// Count configurations and report the common crossing number.
    Count(InstanceArgs),
    /// Quantum Kostka table for sigma_mu * h_{lambda_1} * ...
    Kostka(InstanceArgs),
    /// Gromov-Witten table for sigma_mu * sigma_lambda.
    Gw(InstanceArgs),
    /// Toric expansion for a boundary pair at a fixed degree.
    Toric(ToricArgs),
    /// Run the verification suites and report one line per criterion.
    Verify(VerifyArgs),
    /// Render one configuration as an SVG lozenge strip.
    Render(RenderArgs),
    /// Export a tensor-product crystal graph.
    Crystal(CrystalArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Cylinder circumference (n >= 3).
    #[arg(long)]
    n: usize,
    /// Cylinder height / number of particles.
    #[arg(long)]
    k: usize,
    /// Bottom boundary partition, comma-joined parts; empty for the vacuum.
    #[arg(long, default_value = "")]
    mu: String,
    /// Top boundary partition.
    #[arg(long, default_value = "")]
    nu: String,
    /// Row sizes (a composition; padded with zeros to length k).
    #[arg(long, default_value = "")]
    lambda: String,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct ToricArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Degree of the expansion.
    #[arg(long, default_value_t = 0)]
    d: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single named criterion instead of all of them.
    #[arg(long)]
    criterion: Option<String>,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Index into the stable configuration order.
    #[arg(long, default_value_t = 0)]
    index: usize,
}

#[derive(Args)]
struct CrystalArgs {
    /// Cylinder circumference.
    #[arg(long)]
    n: usize,
    /// Tensor factor weights, leftmost first, comma-joined.
    #[arg(long)]
    weights: String,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct IoArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format; each command supports a subset.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Maximum search nodes / crystal vertices; overrides CYLDIM_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Svg,
    Dot,
}

enum CliError {
    Usage(String),
    Budget(String),
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::BudgetExceeded { .. } => CliError::Budget(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reproduction: Vec<String> = std::env::args().collect();
    let outcome = std::panic::catch_unwind(|| run(cli.command));
    match outcome {
        Ok(Ok(exit)) => exit,
        Ok(Err(CliError::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(CliError::Budget(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("internal invariant violation: {msg}");
            eprintln!("reproduce with: {}", reproduction.join(" "));
            ExitCode::from(4)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Enumerate(args) => enumerate_cmd(args),
        Command::Count(args) => count_cmd(args),
        Command::Kostka(args) => kostka_cmd(args),
        Command::Gw(args) => gw_cmd(args),
        Command::Toric(args) => toric_cmd(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Render(args) => render_cmd(args),
        Command::Crystal(args) => crystal_cmd(args),
    }
}

fn parse_parts(text: &str) -> Result<Vec<usize>, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid part {piece:?} in {text:?}")))
        })
        .collect()
}

struct Instance {
    shape: BoxShape,
    mu: Partition,
    nu: Partition,
    lambda: Composition,
}

impl InstanceArgs {
    fn parse(&self) -> Result<Instance, CliError> {
        let shape = BoxShape::new(self.k, self.n).map_err(CliError::from)?;
        let mu = shape.partition(&parse_parts(&self.mu)?).map_err(CliError::from)?;
        let nu = shape.partition(&parse_parts(&self.nu)?).map_err(CliError::from)?;
        let mut lambda_parts = parse_parts(&self.lambda)?;
        if lambda_parts.len() > self.k {
            return Err(CliError::Usage(format!(
                "lambda has {} parts but k = {}",
                lambda_parts.len(),
                self.k
            )));
        }
        lambda_parts.resize(self.k, 0);
        let lambda = shape.composition(&lambda_parts).map_err(CliError::from)?;
        Ok(Instance {
            shape,
            mu,
            nu,
            lambda,
        })
    }
}

impl IoArgs {
    fn budget(&self) -> u64 {
        self.budget
            .or_else(|| {
                std::env::var("CYLDIM_BUDGET")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(DEFAULT_BUDGET)
    }

    fn emit(&self, content: &str) -> Result<ExitCode, CliError> {
        match &self.output {
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(content.as_bytes())
                    .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))?;
            }
            Some(path) => {
                std::fs::write(path, content).map_err(|e| {
                    CliError::Usage(format!("cannot write {}: {e}", path.display()))
                })?;
            }
        }
        Ok(ExitCode::SUCCESS)
    }
}

fn require_format(io: &IoArgs, allowed: &[Format], command: &str) -> Result<(), CliError> {
    if allowed.contains(&io.format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("unsupported format for {command}")))
    }
}

fn enumerate_instance(
    instance: &Instance,
    budget: u64,
) -> Result<Vec<DimerConfiguration>, CliError> {
    Ok(enumerate_configurations_with_budget(
        &instance.mu,
        &instance.nu,
        &instance.lambda,
        budget,
    )?)
}

fn enumerate_cmd(args: InstanceArgs) -> Result<ExitCode, CliError> {
    require_format(&args.io, &[Format::Json], "enumerate")?;
    let instance = args.parse()?;
    let configs = enumerate_instance(&instance, args.io.budget())?;
    let degree = cyldim_core::degree(instance.lambda.total(), &instance.mu, &instance.nu);
    let body = json!({
        "n": instance.shape.n(),
        "k": instance.shape.k(),
        "mu": instance.mu.to_string(),
        "nu": instance.nu.to_string(),
        "lambda": instance.lambda.to_string(),
        "degree": degree,
        "count": configs.len().to_string(),
        "configurations": configs
            .iter()
            .map(|c| serde_json::to_value(c.to_repr()).expect("repr serializes"))
            .collect::<Vec<_>>(),
    });
    args.io.emit(&pretty(&body))
}

fn count_cmd(args: InstanceArgs) -> Result<ExitCode, CliError> {
    require_format(&args.io, &[Format::Json, Format::Tsv], "count")?;
    let instance = args.parse()?;
    let configs = enumerate_instance(&instance, args.io.budget())?;
    let degree = cyldim_core::degree(instance.lambda.total(), &instance.mu, &instance.nu);
    match args.io.format {
        Format::Json => {
            let body = json!({
                "n": instance.shape.n(),
                "k": instance.shape.k(),
                "mu": instance.mu.to_string(),
                "nu": instance.nu.to_string(),
                "lambda": instance.lambda.to_string(),
                "count": configs.len().to_string(),
                "degree": degree,
            });
            args.io.emit(&pretty(&body))
        }
        _ => {
            let d = degree.map(|d| d.to_string()).unwrap_or_default();
            let tsv = format!(
                "{}\n{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                cyldim_core::qh::TABLE_HEADER,
                instance.shape.n(),
                instance.shape.k(),
                instance.mu,
                instance.nu,
                instance.lambda,
                d,
                configs.len()
            );
            args.io.emit(&tsv)
        }
    }
}

fn emit_table(io: &IoArgs, rows: Vec<TableRow>) -> Result<ExitCode, CliError> {
    match io.format {
        Format::Tsv => io.emit(&rows_to_tsv(&rows)),
        Format::Json => {
            let body = serde_json::Value::Array(rows.iter().map(TableRow::to_json).collect());
            io.emit(&pretty(&body))
        }
        _ => Err(CliError::Usage("tables support json and tsv".into())),
    }
}

fn kostka_cmd(args: InstanceArgs) -> Result<ExitCode, CliError> {
    require_format(&args.io, &[Format::Json, Format::Tsv], "kostka")?;
    let instance = args.parse()?;
    emit_table(&args.io, kostka_table(&instance.mu, &instance.lambda))
}

fn gw_cmd(args: InstanceArgs) -> Result<ExitCode, CliError> {
    require_format(&args.io, &[Format::Json, Format::Tsv], "gw")?;
    let instance = args.parse()?;
    let lambda = instance
        .shape
        .partition(&parse_parts(&args.lambda)?)
        .map_err(|e| CliError::Usage(format!("lambda must be a partition here: {e}")))?;
    guard_determinant(lambda.length(), args.io.budget())?;
    emit_table(&args.io, gw_table(&instance.mu, &lambda))
}

fn toric_cmd(args: ToricArgs) -> Result<ExitCode, CliError> {
    require_format(&args.instance.io, &[Format::Json, Format::Tsv], "toric")?;
    let instance = args.instance.parse()?;
    guard_determinant(instance.shape.k(), args.instance.io.budget())?;
    match args.instance.io.format {
        Format::Json => {
            let expansion = toric_schur(&instance.mu, &instance.nu, args.d)?;
            let body = toric_expansion_json(&instance.mu, &instance.nu, &expansion);
            args.instance.io.emit(&pretty(&body))
        }
        _ => emit_table(
            &args.instance.io,
            toric_table(&instance.mu, &instance.nu, args.d)?,
        ),
    }
}

/// The Jacobi-Trudi expansion walks `l!` permutations; keep that inside the
/// budget.
fn guard_determinant(length: usize, budget: u64) -> Result<(), CliError> {
    let mut needed: u128 = 1;
    for i in 1..=length as u128 {
        needed = needed.saturating_mul(i);
    }
    if needed > budget as u128 {
        return Err(CliError::Budget(format!(
            "determinant expansion needs {needed} permutation terms, budget is {budget}"
        )));
    }
    Ok(())
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode, CliError> {
    require_format(&args.io, &[Format::Json, Format::Tsv], "verify")?;
    let results = match &args.criterion {
        None => verify::run_all(),
        Some(name) => vec![verify::run_named(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown criterion {name:?}; names: {}",
                verify::criterion_names().join(", ")
            ))
        })?],
    };
    let all_passed = results.iter().all(|r| r.passed);
    match args.io.format {
        Format::Json => {
            let body = serde_json::Value::Array(
                results
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "passed": r.passed,
                            "details": r.details,
                        })
                    })
                    .collect(),
            );
            args.io.emit(&pretty(&body))?;
        }
        _ => {
            let mut text = String::new();
            for r in &results {
                text.push_str(&format!(
                    "{} {} — {}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.details
                ));
            }
            args.io.emit(&text)?;
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn render_cmd(args: RenderArgs) -> Result<ExitCode, CliError> {
    require_format(&args.instance.io, &[Format::Svg], "render")?;
    let instance = args.instance.parse()?;
    let configs = enumerate_instance(&instance, args.instance.io.budget())?;
    let config = configs.get(args.index).ok_or_else(|| {
        CliError::Usage(format!(
            "index {} out of range: {} configurations",
            args.index,
            configs.len()
        ))
    })?;
    args.instance.io.emit(&svg::render_svg(config))
}

fn crystal_cmd(args: CrystalArgs) -> Result<ExitCode, CliError> {
    require_format(&args.io, &[Format::Json, Format::Dot], "crystal")?;
    let weights = parse_parts(&args.weights)?;
    let graph = cyldim_core::build_crystal_graph(args.n, &weights, args.io.budget())
        .map_err(CliError::from)?;
    match args.io.format {
        Format::Dot => args.io.emit(&cyldim_core::crystal_graph_dot(&graph)),
        _ => args
            .io
            .emit(&pretty(&cyldim_core::crystal_graph_json(&graph))),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json serializes");
    text.push('\n');
    text
}
