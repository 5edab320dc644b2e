//! Command-line front end of `costzdd`: instance generation, diagram
//! construction, bounding runs, and the experiment presets.

pub mod args;
pub mod error;
pub mod preset;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use costzdd::{
    build_path_zdd, grid_graph, naive_call_count, parse_graph, write_graph, write_report, BigUint,
    Bounder, ExtInt, Forest, Graph, NodeId, PathKind, RunReport, VertexId,
};
use serde_json::json;

use args::{BenchArgs, Command, GenCommand, InstanceArgs, Method, Terminals};
pub use error::{CliError, CliResult};

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", p.display()))),
        None => write_stdout(out, text),
    }
}

fn write_stdout(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::usage(format!("cannot write output: {e}")))
}

fn line(out: &mut dyn Write, v: serde_json::Value) -> CliResult<()> {
    write_stdout(out, &format!("{v}\n"))
}

fn millis(d: Duration) -> f64 {
    RunReport::millis(d)
}

/// The bound `floor(ratio * min)`; the minimum must be finite.
pub fn bound_at_ratio(ratio: f64, min: ExtInt) -> CliResult<ExtInt> {
    let m = min
        .finite()
        .ok_or_else(|| CliError::usage(format!("ratios need a finite minimum cost, got {min}")))?;
    if !ratio.is_finite() {
        return Err(CliError::usage(format!("ratio {ratio} is not finite")));
    }
    Ok(ExtInt::Finite((ratio * m as f64 + 1e-9).floor() as i64))
}

fn terminals(t: &Terminals, from_file: Option<(VertexId, VertexId)>) -> CliResult<(VertexId, VertexId)> {
    match (t.source, t.target, from_file) {
        (Some(s), Some(t), _) => Ok((s, t)),
        (s, t, Some((fs, ft))) => Ok((s.unwrap_or(fs), t.unwrap_or(ft))),
        _ => Err(CliError::usage("no terminals: pass --source and --target or add a `t` line to the graph")),
    }
}

fn load_graph(path: &Path) -> CliResult<(Graph, Option<(VertexId, VertexId)>)> {
    Ok(parse_graph(&read_file(path)?)?)
}

/// `n_items` of a diagram file, read from its header.
fn zdd_items(text: &str) -> CliResult<u32> {
    let header = text.lines().next().unwrap_or("");
    let mut words = header.split_whitespace();
    match (words.next(), words.next().and_then(|w| w.parse().ok())) {
        (Some("zdd"), Some(n)) => Ok(n),
        _ => Err(costzdd::Error::Parse { line: 1, msg: format!("bad header {header:?}") }.into()),
    }
}

/// A graph with its feasible family in a fresh forest.
pub struct Loaded {
    pub graph: Graph,
    pub forest: Forest,
    pub f: NodeId,
    /// Time spent loading or building `f`.
    pub construct: Duration,
}

pub fn build_instance(graph: Graph, s: VertexId, t: VertexId, kind: PathKind) -> CliResult<Loaded> {
    let start = Instant::now();
    let mut forest = Forest::new(graph.n_edges() as u32);
    let f = build_path_zdd(&mut forest, &graph, s, t, kind)?;
    Ok(Loaded { graph, forest, f, construct: start.elapsed() })
}

fn load_instance(a: &InstanceArgs) -> CliResult<Loaded> {
    let (graph, file_t) = load_graph(&a.graph)?;
    match (&a.zdd, a.kind) {
        (Some(path), _) => {
            let text = read_file(path)?;
            let start = Instant::now();
            let mut forest = Forest::new(graph.n_edges() as u32);
            let f = forest.deserialize(&text)?;
            Ok(Loaded { graph, forest, f, construct: start.elapsed() })
        }
        (None, Some(kind)) => {
            let (s, t) = terminals(&a.terminals, file_t)?;
            build_instance(graph, s, t, kind.into())
        }
        (None, None) => Err(CliError::usage("pass --zdd or --kind")),
    }
}

/// One bounding session: a method, a persistent bounder, and the data
/// needed to fill report rows.
pub struct Session<'a> {
    bounder: Bounder<'a>,
    f: NodeId,
    method: Method,
    min: ExtInt,
    construct: Duration,
}

impl<'a> Session<'a> {
    pub fn new(loaded: &'a mut Loaded, method: Method, naive_limit: u64) -> CliResult<Self> {
        let costs = loaded.graph.costs();
        let (min, _) = loaded.forest.min_max_cost(loaded.f, &costs)?;
        if method == Method::Naive {
            let work = naive_call_count(&loaded.forest, loaded.f);
            if work > BigUint::from(naive_limit) {
                return Err(CliError::Engine(costzdd::Error::Contract(format!(
                    "naive method would make {work} calls, above --naive-limit {naive_limit}"
                ))));
            }
        }
        Ok(Session {
            bounder: Bounder::new(&mut loaded.forest, costs)?,
            f: loaded.f,
            method,
            min,
            construct: loaded.construct,
        })
    }

    pub fn min_cost(&self) -> ExtInt {
        self.min
    }

    pub fn forest(&self) -> &Forest {
        self.bounder.forest()
    }

    /// Bounds the family at `b`; the row's time covers construction, the
    /// bound itself, and counting the result.
    pub fn row(&mut self, b: ExtInt) -> CliResult<(RunReport, NodeId)> {
        let start = Instant::now();
        let before = self.bounder.total_calls();
        let (h, interval) = match self.method {
            Method::Naive => (self.bounder.backtrack_naive(self.f, b)?.h, None),
            Method::Memo => (self.bounder.backtrack_memo(self.f, b)?.h, None),
            Method::Interval => {
                let r = self.bounder.backtrack_interval_memo(self.f, b)?;
                (r.h, r.interval)
            }
            Method::Intersection => (self.bounder.bound_via_intersection(self.f, b)?, None),
        };
        let calls = self.bounder.total_calls() - before;
        let solutions = self.bounder.forest_mut().count(h);
        let elapsed = self.construct + start.elapsed();
        let report = RunReport {
            bound: b,
            ratio: RunReport::ratio_of(b, self.min),
            solutions,
            zdd_size: self.bounder.forest().node_count(h) as u64,
            calls,
            time_ms: millis(elapsed),
            method: self.method.name().to_string(),
            accept_worst: interval.map(|i| i.aw),
            reject_best: interval.map(|i| i.rb),
        };
        Ok((report, h))
    }
}

pub fn run(command: Command, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Gen(GenCommand::Grid { n, cost_lo, cost_hi, seed, output }) => {
            let g = grid_graph(n, cost_lo, cost_hi, seed)?;
            let text = write_graph(&g, Some((1, (n + 1) * (n + 1))));
            emit(output.as_deref(), &text, out)
        }
        Command::Gen(GenCommand::Bfs { graph, source, output }) => {
            let (g, file_t) = load_graph(&graph)?;
            let s = source.or(file_t.map(|t| t.0)).ok_or_else(|| CliError::usage("pass --source"))?;
            let text = write_graph(&g.bfs_ordered(s)?, file_t);
            emit(output.as_deref(), &text, out)
        }
        Command::Build(a) => {
            let (graph, file_t) = load_graph(&a.graph)?;
            let (s, t) = terminals(&a.terminals, file_t)?;
            let mut loaded = build_instance(graph, s, t, a.kind.into())?;
            let solutions = loaded.forest.count(loaded.f);
            let time = loaded.construct;
            if let Some(path) = &a.output {
                emit(Some(path), &loaded.forest.serialize(loaded.f), out)?;
            }
            line(
                out,
                json!({
                    "zdd_size": loaded.forest.node_count(loaded.f),
                    "solutions": solutions.to_string(),
                    "time_ms": millis(time),
                }),
            )
        }
        Command::Bound(a) => {
            let mut loaded = load_instance(&a.instance)?;
            let mut session = Session::new(&mut loaded, a.method, a.naive_limit)?;
            let (report, h) = session.row(a.bound)?;
            if let Some(path) = &a.output {
                emit(Some(path), &session.forest().serialize(h), out)?;
            }
            write_stdout(out, &write_report(&[report]))
        }
        Command::Sweep(a) => {
            let mut loaded = load_instance(&a.instance)?;
            let mut session = Session::new(&mut loaded, a.method, a.naive_limit)?;
            let bounds = if a.ratios.is_empty() {
                a.bounds.clone()
            } else {
                a.ratios.iter().map(|&r| bound_at_ratio(r, session.min_cost())).collect::<CliResult<_>>()?
            };
            for b in bounds {
                let (report, _) = session.row(b)?;
                write_stdout(out, &write_report(&[report]))?;
            }
            Ok(())
        }
        Command::Count(a) => {
            let text = read_file(&a.zdd)?;
            let mut forest = Forest::new(zdd_items(&text)?);
            let f = forest.deserialize(&text)?;
            line(out, json!({ "solutions": forest.count(f).to_string(), "zdd_size": forest.node_count(f) }))
        }
        Command::Minmax(a) => {
            let loaded = load_instance(&a)?;
            let (min, max) = loaded.forest.min_max_cost(loaded.f, &loaded.graph.costs())?;
            line(out, json!({ "min": min, "max": max }))
        }
        Command::Sample(a) => {
            let text = read_file(&a.zdd)?;
            let mut forest = Forest::new(zdd_items(&text)?);
            let f = forest.deserialize(&text)?;
            let mut buf = String::new();
            for set in forest.sample(f, a.k, a.seed)? {
                buf.push_str(&serde_json::to_string(set.items()).expect("item lists serialize"));
                buf.push('\n');
            }
            write_stdout(out, &buf)
        }
        Command::Rank(a) => {
            let mut loaded = load_instance(&a.instance)?;
            let costs = loaded.graph.costs();
            let total = loaded.forest.count(loaded.f);
            let mut bounder = Bounder::new(&mut loaded.forest, costs)?;
            let rank = bounder.rank(loaded.f, a.cost)?;
            line(out, json!({ "cost": a.cost, "rank": rank.to_string(), "of": total.to_string() }))
        }
        Command::Bench(a) => bench(&a, out),
    }
}

/// Rows of a preset: each requested ratio, then the maximum cost.
pub fn preset_bounds(ratios: &[f64], min: ExtInt, max: ExtInt, max_row: bool) -> CliResult<Vec<ExtInt>> {
    let mut bounds = ratios.iter().map(|&r| bound_at_ratio(r, min)).collect::<CliResult<Vec<_>>>()?;
    if max_row {
        bounds.push(max);
    }
    Ok(bounds)
}

fn bench(a: &BenchArgs, out: &mut dyn Write) -> CliResult<()> {
    let p = preset::preset(&a.preset)?;
    let terms = match (a.terminals.source, a.terminals.target) {
        (Some(s), Some(t)) => Some((s, t)),
        (None, None) => None,
        _ => return Err(CliError::usage("pass both --source and --target or neither")),
    };
    let (graph, s, t) = p.instance(a.seed, a.data.as_deref(), terms)?;
    let mut loaded = build_instance(graph, s, t, p.kind)?;
    let (min, max) = loaded.forest.min_max_cost(loaded.f, &loaded.graph.costs())?;
    let ratios = a.ratios.as_deref().unwrap_or(p.ratios);
    let bounds = preset_bounds(ratios, min, max, !a.no_max_row)?;
    for &method in &a.methods {
        let mut session = Session::new(&mut loaded, method, a.naive_limit)?;
        for &b in &bounds {
            let (report, _) = session.row(b)?;
            write_stdout(out, &write_report(&[report]))?;
        }
    }
    Ok(())
}
