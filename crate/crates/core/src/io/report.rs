use std::fmt::Write as _;
use std::str::FromStr;

use crate::criticality::ClassificationRecord;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "csv" => Ok(Format::Csv),
            "jsonl" => Ok(Format::Jsonl),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

pub const CSV_COLUMNS: [&str; 13] = [
    "graph_index",
    "order",
    "is_snark",
    "girth",
    "cyclic_edge_connectivity",
    "is_critical",
    "is_bicritical",
    "is_strictly_critical",
    "is_4_edge_critical",
    "is_4_vertex_critical",
    "is_strong",
    "coloring_path_micros",
    "flow_path_micros",
];

fn cell<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// CSV with a header row, or one JSON object per line. Missing values are
/// empty cells in CSV and `null` in JSON.
pub fn write_records(records: &[ClassificationRecord], format: Format) -> Vec<u8> {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(&CSV_COLUMNS.join(","));
            out.push('\n');
            for r in records {
                let row = [
                    r.graph_index.to_string(),
                    r.order.to_string(),
                    r.is_snark.to_string(),
                    cell(r.girth),
                    cell(r.cyclic_edge_connectivity),
                    cell(r.is_critical),
                    cell(r.is_bicritical),
                    cell(r.is_strictly_critical),
                    cell(r.is_4_edge_critical),
                    cell(r.is_4_vertex_critical),
                    cell(r.is_strong),
                    cell(r.coloring_path_micros),
                    cell(r.flow_path_micros),
                ];
                let _ = writeln!(out, "{}", row.join(","));
            }
        }
        Format::Jsonl => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
                out.push('\n');
            }
        }
    }
    out.into_bytes()
}
