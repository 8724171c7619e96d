mod output;
mod source;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use multidom::bounds::{catalogue, BoundReport, CatalogueOptions};
use multidom::exact::ExactLimits;
use multidom::tuner::compare_bounds;
use multidom::{
    exact, generate, verify_function, verify_set, write_graph, Construction, DominationSpec, Error, Graph,
    VertexFunction,
};
use serde_json::{json, Value};

use output::{OutputArgs, TableFormat};
use source::{parse_spec, FamilyArgs, FileFormat, GraphArgs, Origin};

#[derive(Debug, Parser)]
#[command(name = "multidom", version, about = "Bounds, constructions and exact values for multiple domination")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph from a family and write it out.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FileFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every upper bound that applies to the specification on this graph.
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        spec: String,
        /// Threshold constant; repeat for several. c > 1 and 0 < c < 1 feed different bounds.
        #[arg(long = "c")]
        thresholds: Vec<f64>,
        /// Also evaluate bounds outside their admissible range.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Randomized construction of a witness, repeated until it meets the bound.
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Include the weight of every trial.
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact value by exhaustive search.
    Exact {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        spec: String,
        /// Largest order searched (20 for sets, 12 for functions by default).
        #[arg(long)]
        max_n: Option<usize>,
        /// Node budget of the function search.
        #[arg(long)]
        max_nodes: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a witness: a JSON array, or any JSON object with a `set` or `values` field.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        witness: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the k-tuple threshold bounds for minimum degree DELTA.
    Compare {
        k: u32,
        delta: usize,
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let infeasible = err.chain().any(|e| e.downcast_ref::<Error>().is_some_and(Error::is_infeasible));
            ExitCode::from(if infeasible { 2 } else { 1 })
        }
    }
}

fn summary(g: &Graph, origin: &Origin, spec: Option<&DominationSpec>) -> Value {
    let mut doc = json!({
        "graph": {
            "source": origin,
            "n": g.n(),
            "m": g.m(),
            "min_degree": g.min_degree(),
            "max_degree": g.max_degree(),
        }
    });
    if let Some(spec) = spec {
        doc["spec"] = json!(spec);
    }
    doc
}

/// Loads the graph and spec and checks that the spec admits a witness.
fn prepare(graph: &GraphArgs, spec: &str) -> Result<(Graph, Origin, DominationSpec)> {
    let (g, origin) = graph.load()?;
    let spec = parse_spec(spec)?;
    spec.check_feasible(&g)?;
    Ok((g, origin, spec))
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen { family, format, out } => {
            let g = generate(&family.family_spec()?)?;
            let mut sink = OutputArgs { out, no_timestamp: true }.sink()?;
            write_graph(&g, &mut sink, format.into())?;
            sink.flush()?;
        }
        Command::Bounds { graph, spec, thresholds, force, format, output } => {
            let (g, origin, spec) = prepare(&graph, &spec)?;
            let options = CatalogueOptions::with_thresholds(thresholds);
            let mut rows = catalogue(&spec, g.min_degree(), g.n(), &options);
            if force {
                rows = rows.into_iter().map(BoundReport::force).collect();
            }
            match format {
                TableFormat::Json => output.emit("bounds", summary(&g, &origin, Some(&spec)), &rows)?,
                TableFormat::Csv => write_bounds_csv(&rows, &output)?,
            }
        }
        Command::Construct { graph, spec, trials, verbose, output } => {
            let (g, origin, spec) = prepare(&graph, &spec)?;
            let mut result = Construction::new(&g, &spec)?.run(graph.seed(), trials)?;
            if !verbose {
                result.trace = None;
            }
            output.emit("construct", summary(&g, &origin, Some(&spec)), &result)?;
        }
        Command::Exact { graph, spec, max_n, max_nodes, output } => {
            let (g, origin, spec) = prepare(&graph, &spec)?;
            let result = exact(&g, &spec, ExactLimits { max_n, max_nodes })?;
            output.emit("exact", summary(&g, &origin, Some(&spec)), &result)?;
        }
        Command::Verify { graph, spec, witness, output } => {
            let (g, origin, spec) = prepare(&graph, &spec)?;
            let report = verify_witness(&g, &spec, &witness)?;
            output.emit("verify", summary(&g, &origin, Some(&spec)), &report)?;
        }
        Command::Compare { k, delta, n, format, output } => {
            if delta == 0 {
                bail!("DELTA must be at least 1");
            }
            let report = compare_bounds(k, delta, n);
            match format {
                TableFormat::Json => output.emit("compare", json!({}), &report)?,
                TableFormat::Csv => {
                    let mut sink = output.sink()?;
                    report.write_csv(&mut sink)?;
                }
            }
        }
    }
    Ok(())
}

fn write_bounds_csv(rows: &[BoundReport], output: &OutputArgs) -> Result<()> {
    let mut writer = csv::Writer::from_writer(output.sink()?);
    writer.write_record(["name", "applicable", "coefficient", "absolute", "vacuous", "reason"])?;
    let cell = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
    for row in rows {
        writer.write_record([
            row.name.clone(),
            row.applicable.to_string(),
            cell(row.coefficient),
            cell(row.absolute),
            row.vacuous.to_string(),
            row.reason.clone().unwrap_or_default(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

fn verify_witness(g: &Graph, spec: &DominationSpec, path: &PathBuf) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc: Value = serde_json::from_str(&text).with_context(|| format!("{} is not JSON", path.display()))?;
    let key = if spec.is_set_type() { "set" } else { "values" };
    let list = find_witness(&doc, key).with_context(|| format!("no `{key}` array in {}", path.display()))?;
    let numbers: Vec<u64> = list
        .iter()
        .map(|v| v.as_u64().context("witness entries must be non-negative integers"))
        .collect::<Result<_>>()?;

    if spec.is_set_type() {
        let set: Vec<usize> = numbers.iter().map(|&v| v as usize).collect();
        return Ok(serde_json::to_value(verify_set(g, spec, &set)?)?);
    }
    let values: Vec<u32> = numbers.iter().map(|&v| u32::try_from(v)).collect::<Result<_, _>>()?;
    let caps = spec.function_rule(g.n()).expect("function variant").caps;
    let f = VertexFunction::new(values, caps);
    match verify_function(g, spec, &f) {
        Ok(report) => Ok(serde_json::to_value(report)?),
        Err(Error::CapViolation { vertex, value, cap }) => Ok(json!({
            "valid": false,
            "weight": f.weight(),
            "deficiencies": [],
            "cap_violation": { "vertex": vertex, "value": value, "cap": cap },
        })),
        Err(e) => Err(e.into()),
    }
}

/// The witness array: the document itself, its `key` field, or that field under `result`.
fn find_witness<'a>(doc: &'a Value, key: &str) -> Option<&'a Vec<Value>> {
    match doc {
        Value::Array(list) => Some(list),
        Value::Object(map) => match map.get(key) {
            Some(Value::Array(list)) => Some(list),
            _ => map.get("result").and_then(|inner| find_witness(inner, key)),
        },
        _ => None,
    }
}
