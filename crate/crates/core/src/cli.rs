//! Batch driver behind the `snarkcrit` binary.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;

use crate::criticality::{
    classify, is_strong, snark_verdict, verify_classifier_coincidence, verify_theorem_local,
    ClassificationRecord,
};
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::io::{make_named, read_corpus_file, write_records, Format, Named};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_UNREADABLE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// One classification record per graph.
    Classify,
    /// Check that all pair statements agree, for every pair.
    VerifyLocal,
    /// Compare the colouring and flow routes to (bi)criticality.
    VerifyCoincidence,
    /// Compare both routes to strength; check triangle expansions of strong snarks.
    VerifyStrong,
    /// Verdict counts per order.
    Stats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Jsonl => Format::Jsonl,
        }
    }
}

/// Classify snarks and check criticality equivalences over graph6 corpora.
#[derive(Debug, Clone, Parser)]
#[command(name = "snarkcrit", version)]
pub struct RunConfig {
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "PATH", required_unless_present = "named", conflicts_with = "named")]
    pub input: Option<PathBuf>,
    /// Built-in graph: dumbbell, petersen, theta, k4, flower<k>, blanusa1, blanusa2.
    #[arg(long, value_name = "NAME")]
    pub named: Option<Named>,
    #[arg(long, value_enum, default_value_t = Command::Classify)]
    pub command: Command,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Skip graphs with more vertices than this.
    #[arg(long, value_name = "N")]
    pub max_order: Option<usize>,
    /// Stop at the first violated equivalence.
    #[arg(long)]
    pub fail_fast: bool,
    /// Leave timing columns empty so output is reproducible byte for byte.
    #[arg(long)]
    pub no_timings: bool,
}

impl RunConfig {
    pub fn named(name: Named, command: Command) -> Self {
        RunConfig {
            input: None,
            named: Some(name),
            command,
            jobs: 1,
            format: OutputFormat::Csv,
            max_order: None,
            fail_fast: false,
            no_timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Cell {
    Int(u64),
    Bool(bool),
    Text(String),
    Null,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(x) => (*x).into(),
            Cell::Bool(b) => (*b).into(),
            Cell::Text(s) => s.as_str().into(),
            Cell::Null => serde_json::Value::Null,
        }
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Null, Into::into)
    }
}

struct Table {
    columns: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn render(&self, format: OutputFormat) -> Vec<u8> {
        let mut out = String::new();
        match format {
            OutputFormat::Csv => {
                out.push_str(&self.columns.join(","));
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
            }
            OutputFormat::Jsonl => {
                for row in &self.rows {
                    let fields: Vec<String> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| format!("{}:{}", serde_json::Value::from(*k), v.json()))
                        .collect();
                    out.push('{');
                    out.push_str(&fields.join(","));
                    out.push_str("}\n");
                }
            }
        }
        out.into_bytes()
    }
}

/// Outcome for one graph: its report row(s) and whether it violated an
/// equivalence.
struct Outcome<T> {
    value: T,
    violation: Option<String>,
}

fn load(config: &RunConfig, err: &mut dyn Write) -> std::result::Result<Vec<(usize, CubicGraph)>, i32> {
    let graphs = if let Some(name) = &config.named {
        match make_named(name) {
            Ok(g) => vec![(0, g)],
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return Err(EXIT_FAILURE);
            }
        }
    } else {
        let path = config.input.as_ref().expect("clap requires --input or --named");
        match read_corpus_file(path) {
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                return Err(EXIT_UNREADABLE);
            }
            Ok(Err(e)) => {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return Err(EXIT_PARSE);
            }
            Ok(Ok(entries)) => entries.into_iter().enumerate().map(|(i, c)| (i, c.graph)).collect(),
        }
    };
    Ok(graphs
        .into_iter()
        .filter(|(_, g)| config.max_order.is_none_or(|m| g.vertex_count() <= m))
        .collect())
}

/// Evaluates `f` on every graph in parallel and returns results in input
/// order. With `fail_fast`, work proceeds in batches and the output is cut
/// right after the first violation.
fn evaluate<T: Send>(
    graphs: &[(usize, CubicGraph)],
    fail_fast: bool,
    batch: usize,
    f: impl Fn(usize, &CubicGraph) -> Result<Outcome<T>> + Sync,
) -> Result<Vec<Outcome<T>>> {
    if !fail_fast {
        return graphs.par_iter().map(|(i, g)| f(*i, g)).collect();
    }
    let mut done = Vec::with_capacity(graphs.len());
    for chunk in graphs.chunks(batch.max(1)) {
        let results: Vec<Outcome<T>> = chunk.par_iter().map(|(i, g)| f(*i, g)).collect::<Result<_>>()?;
        for r in results {
            let stop = r.violation.is_some();
            done.push(r);
            if stop {
                return Ok(done);
            }
        }
    }
    Ok(done)
}

fn micros(d: std::time::Duration, hide: bool) -> Option<usize> {
    (!hide).then_some(d.as_micros() as usize)
}

fn classify_one(index: usize, g: &CubicGraph, no_timings: bool) -> Result<Outcome<ClassificationRecord>> {
    let record = classify(g, index)?;
    let mut violation = None;
    if record.is_critical != record.is_4_edge_critical {
        violation = Some(format!("graph {index}: critical and 4-edge-critical differ"));
    } else if record.is_bicritical != record.is_4_vertex_critical {
        violation = Some(format!("graph {index}: bicritical and 4-vertex-critical differ"));
    }
    let value = if no_timings { record.without_timings() } else { record };
    Ok(Outcome { value, violation })
}

const LOCAL_COLUMNS: &[&str] = &[
    "graph_index",
    "order",
    "status",
    "pairs",
    "adjacent_pairs",
    "inconsistent_pairs",
    "degenerate",
    "consistent",
];

fn local_one(index: usize, g: &CubicGraph) -> Result<Outcome<Vec<Cell>>> {
    let head = vec![index.into(), g.vertex_count().into()];
    if let Some(why) = snark_verdict(g)? {
        let mut row = head;
        row.push(Cell::Text(format!("not a snark ({why})")));
        row.extend([Cell::Null, Cell::Null, Cell::Null, Cell::Null, Cell::Null]);
        return Ok(Outcome { value: row, violation: None });
    }
    let cert = verify_theorem_local(g)?;
    let bad: Vec<String> = cert
        .violations()
        .map(|p| format!("{{{}, {}}}", p.u, p.v))
        .collect();
    let mut row = head;
    row.extend([
        Cell::Text("snark".into()),
        cert.pairs.len().into(),
        cert.pairs.iter().filter(|p| p.adjacent).count().into(),
        bad.len().into(),
        cert.degenerate().into(),
        cert.consistent().into(),
    ]);
    let violation =
        (!bad.is_empty()).then(|| format!("graph {index}: pair statements disagree at {}", bad.join(" ")));
    Ok(Outcome { value: row, violation })
}

const COINCIDENCE_COLUMNS: &[&str] = &[
    "graph_index",
    "order",
    "status",
    "critical",
    "four_edge_critical",
    "bicritical",
    "four_vertex_critical",
    "holds",
    "coloring_path_micros",
    "flow_path_micros",
];

fn coincidence_one(index: usize, g: &CubicGraph, no_timings: bool) -> Result<Outcome<Vec<Cell>>> {
    let head = vec![index.into(), g.vertex_count().into()];
    if let Some(why) = snark_verdict(g)? {
        let mut row = head;
        row.push(Cell::Text(format!("not a snark ({why})")));
        row.extend(std::iter::repeat_n(Cell::Null, 7));
        return Ok(Outcome { value: row, violation: None });
    }
    let c = verify_classifier_coincidence(g)?;
    let mut row = head;
    row.extend([
        Cell::Text("snark".into()),
        c.critical.into(),
        c.four_edge_critical.into(),
        c.bicritical.into(),
        c.four_vertex_critical.into(),
        c.holds().into(),
        micros(c.coloring_path, no_timings).into(),
        micros(c.flow_path, no_timings).into(),
    ]);
    let violation = (!c.holds()).then(|| format!("graph {index}: classifier routes disagree"));
    Ok(Outcome { value: row, violation })
}

const STRONG_COLUMNS: &[&str] = &[
    "graph_index",
    "order",
    "status",
    "strong_by_suppression",
    "strong_by_pairs",
    "non_suppressible_edges",
    "agree",
    "triangle_expansions_strong",
];

fn strong_one(index: usize, g: &CubicGraph) -> Result<Outcome<Vec<Cell>>> {
    let head = vec![index.into(), g.vertex_count().into()];
    if let Some(why) = snark_verdict(g)? {
        let mut row = head;
        row.push(Cell::Text(format!("not a snark ({why})")));
        row.extend(std::iter::repeat_n(Cell::Null, 5));
        return Ok(Outcome { value: row, violation: None });
    }
    let s = is_strong(g)?;
    let mut violation = (!s.agree()).then(|| format!("graph {index}: strength routes disagree"));
    let expansions = if s.is_strong() {
        let mut all = true;
        for v in g.vertices() {
            let r = is_strong(&g.expand_triangle(v)?)?;
            if !r.agree() || !r.is_strong() {
                all = false;
                violation.get_or_insert_with(|| {
                    format!("graph {index}: triangle at vertex {v} is not strong")
                });
                break;
            }
        }
        Some(all)
    } else {
        None
    };
    let mut row = head;
    row.extend([
        Cell::Text("snark".into()),
        s.by_suppression.into(),
        s.by_pairs.into(),
        s.non_suppressible.len().into(),
        s.agree().into(),
        expansions.into(),
    ]);
    Ok(Outcome { value: row, violation })
}

const STATS_COLUMNS: &[&str] = &[
    "order",
    "graphs",
    "snarks",
    "critical",
    "bicritical",
    "strictly_critical",
    "four_edge_critical",
    "four_vertex_critical",
    "strong",
];

#[derive(Default, Clone, Copy)]
struct Counts([usize; 8]);

impl Counts {
    fn add(&mut self, r: &ClassificationRecord) {
        let flags = [
            true,
            r.is_snark,
            r.is_critical == Some(true),
            r.is_bicritical == Some(true),
            r.is_strictly_critical == Some(true),
            r.is_4_edge_critical == Some(true),
            r.is_4_vertex_critical == Some(true),
            r.is_strong == Some(true),
        ];
        for (c, f) in self.0.iter_mut().zip(flags) {
            *c += f as usize;
        }
    }

    fn row(&self, label: Cell) -> Vec<Cell> {
        std::iter::once(label).chain(self.0.iter().map(|&c| c.into())).collect()
    }
}

fn stats_table(records: &[ClassificationRecord]) -> Table {
    let mut per_order: BTreeMap<usize, Counts> = BTreeMap::new();
    let mut total = Counts::default();
    for r in records {
        per_order.entry(r.order).or_default().add(r);
        total.add(r);
    }
    let mut rows: Vec<Vec<Cell>> = per_order.iter().map(|(&n, c)| c.row(n.into())).collect();
    rows.push(total.row(Cell::Text("total".into())));
    Table {
        columns: STATS_COLUMNS,
        rows,
    }
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let graphs = match load(config, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs as usize)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_FAILURE;
        }
    };
    let batch = config.jobs as usize * 4;
    let ff = config.fail_fast;
    let hide = config.no_timings;

    let result: Result<(Vec<u8>, Vec<String>)> = pool.install(|| match config.command {
        Command::Classify | Command::Stats => {
            let done = evaluate(&graphs, ff, batch, |i, g| classify_one(i, g, hide))?;
            let violations = done.iter().filter_map(|o| o.violation.clone()).collect();
            let records: Vec<ClassificationRecord> = done.into_iter().map(|o| o.value).collect();
            let bytes = if config.command == Command::Stats {
                stats_table(&records).render(config.format)
            } else {
                write_records(&records, config.format.into())
            };
            Ok((bytes, violations))
        }
        Command::VerifyLocal => table(&graphs, ff, batch, LOCAL_COLUMNS, config.format, local_one),
        Command::VerifyCoincidence => table(&graphs, ff, batch, COINCIDENCE_COLUMNS, config.format, |i, g| {
            coincidence_one(i, g, hide)
        }),
        Command::VerifyStrong => table(&graphs, ff, batch, STRONG_COLUMNS, config.format, strong_one),
    });

    match result {
        Ok((bytes, violations)) => {
            if let Err(e) = out.write_all(&bytes).and_then(|_| out.flush()) {
                let _ = writeln!(err, "error: cannot write report: {e}");
                return EXIT_FAILURE;
            }
            for v in &violations {
                let _ = writeln!(err, "violation: {v}");
            }
            if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            }
        }
        Err(Error::Inconsistent(msg)) => {
            let _ = writeln!(err, "violation: {msg}");
            EXIT_VIOLATION
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn table(
    graphs: &[(usize, CubicGraph)],
    fail_fast: bool,
    batch: usize,
    columns: &'static [&'static str],
    format: OutputFormat,
    f: impl Fn(usize, &CubicGraph) -> Result<Outcome<Vec<Cell>>> + Sync,
) -> Result<(Vec<u8>, Vec<String>)> {
    let done = evaluate(graphs, fail_fast, batch, f)?;
    let violations = done.iter().filter_map(|o| o.violation.clone()).collect();
    let rows = done.into_iter().map(|o| o.value).collect();
    Ok((Table { columns, rows }.render(format), violations))
}
