//! Command-line surface: generate instances, compute vectors and tables,
//! evaluate connected-sum expressions, run verification suites.

mod dsl;
mod errors;
mod output;
mod verify;

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use betti_core::betti::{
    b_vector_of_complex_with, b_vector_with, Backend as OracleBackend, OracleOptions,
};
use betti_core::generators::{
    complete_graph, cycle_graph, simplex_boundary, stacked_boundary, tree, Stacking, TreeShape,
};
use betti_core::hochster::{betti_table_with, HochsterOptions, FIELD_TAG};
use betti_core::io::Metadata;
use betti_core::rng::RNG_ALGORITHM;
use betti_core::Graph;
use betti_core::SimplicialComplex;

use dsl::{evaluate, load_value, parse_sum_expression, Value};
use errors::{CliError, CliResult, EXIT_VERIFY_FAILED};
use output::Provenance;

#[derive(Parser)]
#[command(
    name = "betti",
    version,
    about = "Exact component-counting subset sums, connected sums, and graded Betti tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance and write it in the text format.
    Gen(GenArgs),
    /// Compute the b-vector of a graph, complex, or expression.
    Betti(BettiArgs),
    /// Compute the full graded Betti table of a complex.
    Hochster(HochsterArgs),
    /// Run a verification suite; exits 0 iff every trial passes.
    Verify(VerifyArgs),
    /// Evaluate a connected-sum expression and serialize the result.
    Sum(SumArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Stacked,
    Tree,
    Cycle,
    Simplex,
    Complete,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Shape {
    Path,
    Star,
    Random,
}

#[derive(Args)]
struct GenArgs {
    /// Instance family.
    family: Family,
    /// Polytope dimension (stacked, simplex).
    #[arg(long)]
    dim: Option<usize>,
    /// Vertex count (stacked, tree, cycle, complete).
    #[arg(long)]
    vertices: Option<usize>,
    /// Seed for randomized choices.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tree shape.
    #[arg(long, value_enum, default_value_t = Shape::Random)]
    shape: Shape,
    /// Explicit Prüfer code for trees, comma-separated (overrides --shape).
    #[arg(long, value_delimiter = ',')]
    pruefer: Option<Vec<u32>>,
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BackendArg {
    Sweep,
    PerK,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Args)]
struct BettiArgs {
    /// Input file (graph or complex).
    #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
    input: Option<PathBuf>,
    /// Connected-sum expression.
    #[arg(long)]
    expr: Option<String>,
    /// Largest cardinality to print (defaults to the vertex count).
    #[arg(long)]
    max_k: Option<usize>,
    /// Subset enumeration backend.
    #[arg(long, value_enum, default_value_t = BackendArg::Sweep)]
    backend: BackendArg,
    /// Worker threads; 0 = auto.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct HochsterArgs {
    /// Input complex file (stdin when absent).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Worker threads; 0 = auto.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Property suite to run.
    suite: verify::Suite,
    /// Trial count (suite-specific default when absent).
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Size ceiling for generated instances (suite-specific default).
    #[arg(long)]
    max_vertices: Option<usize>,
}

#[derive(Args)]
struct SumArgs {
    /// Connected-sum expression.
    #[arg(long)]
    expr: String,
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn run(command: Command) -> CliResult<i32> {
    match command {
        Command::Gen(args) => run_gen(args).map(|()| 0),
        Command::Betti(args) => run_betti(args).map(|()| 0),
        Command::Hochster(args) => run_hochster(args).map(|()| 0),
        Command::Sum(args) => run_sum(args).map(|()| 0),
        Command::Verify(args) => {
            let cfg = verify::VerifyConfig {
                trials: args.trials,
                seed: args.seed,
                max_vertices: args.max_vertices,
            };
            let all_passed = verify::run_suite(args.suite, &cfg)?;
            Ok(if all_passed { 0 } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn require(opt: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    opt.ok_or_else(|| CliError::Input(format!("gen {family} requires --{flag}")))
}

fn run_gen(args: GenArgs) -> CliResult<()> {
    let mut meta = Metadata::new();
    let value = match args.family {
        Family::Stacked => {
            let d = require(args.dim, "dim", "stacked")?;
            let n = require(args.vertices, "vertices", "stacked")?;
            meta.insert("generator".into(), "stacked".into());
            meta.insert("dim".into(), d.to_string());
            meta.insert("vertices".into(), n.to_string());
            meta.insert("seed".into(), args.seed.to_string());
            meta.insert("rng".into(), RNG_ALGORITHM.into());
            Value::Complex(stacked_boundary(d, n, &Stacking::Seed(args.seed))?)
        }
        Family::Simplex => {
            let d = require(args.dim, "dim", "simplex")?;
            meta.insert("generator".into(), "simplex".into());
            meta.insert("dim".into(), d.to_string());
            Value::Complex(simplex_boundary(d)?)
        }
        Family::Tree => {
            let n = require(args.vertices, "vertices", "tree")?;
            meta.insert("generator".into(), "tree".into());
            meta.insert("vertices".into(), n.to_string());
            let shape = match &args.pruefer {
                Some(code) => {
                    meta.insert("shape".into(), "pruefer".into());
                    meta.insert(
                        "pruefer".into(),
                        code.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    );
                    TreeShape::Pruefer(code.clone())
                }
                None => {
                    meta.insert(
                        "shape".into(),
                        format!("{:?}", args.shape).to_lowercase(),
                    );
                    match args.shape {
                        Shape::Path => TreeShape::Path,
                        Shape::Star => TreeShape::Star,
                        Shape::Random => {
                            meta.insert("seed".into(), args.seed.to_string());
                            meta.insert("rng".into(), RNG_ALGORITHM.into());
                            TreeShape::Random(args.seed)
                        }
                    }
                }
            };
            Value::Graph(tree(n, &shape)?)
        }
        Family::Cycle => {
            let n = require(args.vertices, "vertices", "cycle")?;
            meta.insert("generator".into(), "cycle".into());
            meta.insert("vertices".into(), n.to_string());
            Value::Graph(cycle_graph(n)?)
        }
        Family::Complete => {
            let n = require(args.vertices, "vertices", "complete")?;
            meta.insert("generator".into(), "complete".into());
            meta.insert("vertices".into(), n.to_string());
            Value::Graph(complete_graph(n)?)
        }
    };
    write_value(&value, &mut meta, args.output.as_deref())
}

fn write_value(
    value: &Value,
    meta: &mut Metadata,
    output: Option<&std::path::Path>,
) -> CliResult<()> {
    let mut buf: Vec<u8> = Vec::new();
    match value {
        Value::Complex(c) => {
            meta.insert("kind".into(), "complex".into());
            betti_core::io::write_complex(&mut buf, c, meta)?;
        }
        Value::Graph(g) => {
            meta.insert("kind".into(), "graph".into());
            betti_core::io::write_graph(&mut buf, g, meta)?;
        }
    }
    match output {
        Some(path) => std::fs::write(path, buf)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&buf)?;
        }
    }
    Ok(())
}

/// Resolves `--input` / `--expr` into a value plus output parameters.
fn resolve_input(
    input: &Option<PathBuf>,
    expr: &Option<String>,
) -> CliResult<(Value, BTreeMap<String, String>)> {
    let mut parameters = BTreeMap::new();
    let value = match (input, expr) {
        (Some(path), None) => {
            let (value, meta) = load_value(&path.to_string_lossy())?;
            parameters.insert("source".into(), "file".into());
            parameters.insert("path".into(), path.to_string_lossy().into_owned());
            parameters.extend(meta);
            value
        }
        (None, Some(text)) => {
            let parsed = parse_sum_expression(text)?;
            parameters.insert("source".into(), "expr".into());
            parameters.insert("expr".into(), parsed.to_string());
            evaluate(&parsed)?
        }
        _ => {
            return Err(CliError::Input(
                "exactly one of --input and --expr is required".into(),
            ))
        }
    };
    Ok((value, parameters))
}

fn run_betti(args: BettiArgs) -> CliResult<()> {
    let (value, mut parameters) = resolve_input(&args.input, &args.expr)?;
    let backend_name = match args.backend {
        BackendArg::Sweep => "sweep",
        BackendArg::PerK => "per-k",
    };
    let opts = OracleOptions {
        threads: args.threads,
        backend: match args.backend {
            BackendArg::Sweep => OracleBackend::Sweep,
            BackendArg::PerK => OracleBackend::PerK,
        },
        ..OracleOptions::default()
    };
    let vector = match &value {
        Value::Graph(g) => b_vector_with(g, &opts)?,
        Value::Complex(c) => b_vector_of_complex_with(c, &opts)?,
    };
    let max_k = args.max_k.unwrap_or_else(|| value.vertex_count());
    match args.format {
        FormatArg::Text => print!("{}", output::vector_text(&vector, max_k)),
        FormatArg::Structured => {
            parameters.insert("max-k".into(), max_k.to_string());
            let provenance = Provenance::new(None, backend_name);
            println!(
                "{}",
                output::vector_json(&vector, max_k, &parameters, &provenance)
            );
        }
    }
    Ok(())
}

fn load_complex_or_stdin(input: &Option<PathBuf>) -> CliResult<(SimplicialComplex, Metadata)> {
    match input {
        Some(path) => {
            let (value, meta) = load_value(&path.to_string_lossy())?;
            match value {
                Value::Complex(c) => Ok((c, meta)),
                Value::Graph(g) => Ok((complex_of_graph(&g)?, meta)),
            }
        }
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(betti_core::io::read_complex(text.as_bytes())?)
        }
    }
}

/// A graph viewed as a 1-dimensional complex (edges and isolated vertices).
fn complex_of_graph(g: &Graph) -> CliResult<SimplicialComplex> {
    let mut facets: Vec<betti_core::VertexSet> = g
        .edges()
        .iter()
        .map(|&(a, b)| betti_core::VertexSet::from([a, b]))
        .collect();
    for &v in g.labels() {
        facets.push(betti_core::VertexSet::from([v]));
    }
    Ok(SimplicialComplex::from_facets(facets)?)
}

fn run_hochster(args: HochsterArgs) -> CliResult<()> {
    let (complex, meta) = load_complex_or_stdin(&args.input)?;
    let opts = HochsterOptions {
        threads: args.threads,
        ..HochsterOptions::default()
    };
    let table = betti_table_with(&complex, &opts)?;
    match args.format {
        FormatArg::Text => print!("{}", output::table_text(&table)),
        FormatArg::Structured => {
            let mut parameters: BTreeMap<String, String> = meta.into_iter().collect();
            if let Some(path) = &args.input {
                parameters.insert("source".into(), "file".into());
                parameters.insert("path".into(), path.to_string_lossy().into_owned());
            } else {
                parameters.insert("source".into(), "stdin".into());
            }
            parameters.insert("field".into(), FIELD_TAG.into());
            let provenance = Provenance::new(None, "sweep");
            println!(
                "{}",
                output::table_json(&table, &parameters, &provenance)
            );
        }
    }
    Ok(())
}

fn run_sum(args: SumArgs) -> CliResult<()> {
    let parsed = parse_sum_expression(&args.expr)?;
    let value = evaluate(&parsed)?;
    let mut meta = Metadata::new();
    meta.insert("expr".into(), parsed.to_string());
    write_value(&value, &mut meta, args.output.as_deref())
}
