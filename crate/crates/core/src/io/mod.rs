//! Corpus ingestion, named graphs and report output.

pub mod graph6;
pub mod named;
pub mod report;

use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::CubicGraph;

pub use graph6::{encode_graph6, parse_graph6};
pub use named::{make_named, Named};
pub use report::{write_records, Format};

/// One graph read from a graph6 corpus file.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// 1-based line number in the source.
    pub line: usize,
    pub text: String,
    pub graph: CubicGraph,
    pub source: String,
}

/// Parses every non-blank line of `text`. Lines are parsed in parallel; the
/// result keeps input order, and the first failing line (by position) is
/// reported.
pub fn read_corpus(text: &str, source: &str) -> Result<Vec<CorpusEntry>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && *l != ">>graph6<<")
        .collect();
    lines
        .into_par_iter()
        .map(|(line, l)| {
            let graph = parse_graph6(l).map_err(|e| Error::AtLine {
                line,
                source: Box::new(e),
            })?;
            Ok(CorpusEntry {
                line,
                text: l.to_string(),
                graph,
                source: source.to_string(),
            })
        })
        .collect()
}

/// Reads a corpus file. I/O failures come back as `std::io::Error` so
/// callers can tell them apart from parse errors.
pub fn read_corpus_file(path: &Path) -> std::io::Result<Result<Vec<CorpusEntry>>> {
    let text = std::fs::read_to_string(path)?;
    Ok(read_corpus(&text, &path.display().to_string()))
}
