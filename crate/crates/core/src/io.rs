//! Edge-list input, curve CSV and summary JSON output.
//!
//! Edge lists hold one pair of opaque labels per line. Blank lines and
//! lines starting with the comment prefix are skipped. Curves are written
//! as `x,y` CSV using the shortest decimal that parses back to the same
//! `f64`, so a write/read cycle is bit-exact.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::connectivity::NetworkSummary;
use crate::curve::MetricCurve;
use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, GraphBuilder, UndirectedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Delimiter {
    /// Any run of spaces or tabs.
    #[default]
    Whitespace,
    Tab,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListFormat {
    pub delimiter: Delimiter,
    pub comment_prefix: String,
    pub directed: bool,
}

impl Default for EdgeListFormat {
    fn default() -> Self {
        Self {
            delimiter: Delimiter::Whitespace,
            comment_prefix: "#".into(),
            directed: false,
        }
    }
}

/// Streaming reader yielding one labelled pair per data line.
pub struct EdgeListReader<R> {
    input: R,
    format: EdgeListFormat,
    path: PathBuf,
    line_no: usize,
    buf: String,
}

impl<R: BufRead> EdgeListReader<R> {
    /// `path` is only used in error messages.
    pub fn new(input: R, format: EdgeListFormat, path: impl Into<PathBuf>) -> Self {
        Self {
            input,
            format,
            path: path.into(),
            line_no: 0,
            buf: String::new(),
        }
    }

    fn parse_line(&self, line: &str) -> Result<Option<(String, String)>> {
        let trimmed = line.trim();
        if trimmed.is_empty()
            || (!self.format.comment_prefix.is_empty()
                && trimmed.starts_with(&self.format.comment_prefix))
        {
            return Ok(None);
        }
        let tokens: Vec<&str> = match self.format.delimiter {
            Delimiter::Whitespace => trimmed.split_whitespace().collect(),
            Delimiter::Tab => trimmed.split('\t').collect(),
        };
        match tokens.as_slice() {
            [a, b] if !a.is_empty() && !b.is_empty() => Ok(Some((a.to_string(), b.to_string()))),
            _ => Err(Error::Parse {
                path: self.path.clone(),
                line: self.line_no,
                message: format!("expected 2 tokens, found {}", tokens.len()),
            }),
        }
    }
}

impl<R: BufRead> Iterator for EdgeListReader<R> {
    type Item = Result<(String, String)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line_no += 1;
            match self.input.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(Error::io(&self.path, e))),
            }
            match self.parse_line(&self.buf) {
                Ok(None) => continue,
                Ok(Some(pair)) => return Some(Ok(pair)),
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

pub fn open_edge_list(
    path: &Path,
    format: &EdgeListFormat,
) -> Result<EdgeListReader<BufReader<File>>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(EdgeListReader::new(
        BufReader::new(file),
        format.clone(),
        path,
    ))
}

/// Reads every pair in file order, uncleaned.
pub fn read_edge_list(path: &Path, format: &EdgeListFormat) -> Result<Vec<(String, String)>> {
    open_edge_list(path, format)?.collect()
}

fn load_into(path: &Path, format: &EdgeListFormat) -> Result<GraphBuilder> {
    let mut b = GraphBuilder::new();
    for pair in open_edge_list(path, format)? {
        let (x, y) = pair?;
        b.add_edge(&x, &y);
    }
    Ok(b)
}

/// Streams an edge list straight into an undirected graph.
pub fn load_undirected(path: &Path, format: &EdgeListFormat) -> Result<UndirectedGraph> {
    Ok(load_into(path, format)?.build_undirected())
}

/// Streams an edge list straight into a directed graph.
pub fn load_directed(path: &Path, format: &EdgeListFormat) -> Result<DirectedGraph> {
    Ok(load_into(path, format)?.build_directed())
}

/// Streams output into a temporary file beside `path`, then renames it
/// over `path`. Nothing is left behind if `fill` fails.
pub fn write_atomic_with<F>(path: &Path, fill: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> std::io::Result<()>,
{
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(tmp);
    fill(&mut w)
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))?;
    let tmp = w
        .into_inner()
        .map_err(|e| Error::io(path, e.into_error()))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    write_atomic_with(path, |w| w.write_all(bytes))
}

/// Writes one `label label` line per link, in ascending index order.
pub fn write_edge_list(g: &UndirectedGraph, path: &Path) -> Result<()> {
    let names = g.labels();
    write_atomic_with(path, |w| {
        for (u, v) in g.links() {
            writeln!(w, "{} {}", names.name(u), names.name(v))?;
        }
        Ok(())
    })
}

pub fn curve_to_csv(curve: &MetricCurve) -> String {
    let mut out = String::from("x,y\n");
    for &(x, y) in curve.points() {
        out.push_str(&format!("{x},{y}\n"));
    }
    out
}

pub fn curve_from_csv(text: &str, path: &Path) -> Result<MetricCurve> {
    let err = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == "x,y" => {}
        _ => return Err(err(1, "missing \"x,y\" header".into())),
    }
    let mut points = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let (x, y) = line
            .split_once(',')
            .ok_or_else(|| err(i + 1, "expected two comma-separated fields".into()))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| err(i + 1, format!("{s:?}: {e}")))
        };
        points.push((parse(x)?, parse(y)?));
    }
    MetricCurve::from_points(points)
}

pub fn write_curve(curve: &MetricCurve, path: &Path) -> Result<()> {
    write_atomic(path, curve_to_csv(curve).as_bytes())
}

pub fn read_curve(path: &Path) -> Result<MetricCurve> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    curve_from_csv(&text, path)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryMetadata {
    pub dataset: String,
    /// Seconds since the Unix epoch when the summary was produced.
    pub timestamp: u64,
    pub tool_version: String,
}

impl SummaryMetadata {
    /// Metadata stamped with the current time and this crate's version.
    pub fn now(dataset: impl Into<String>) -> Self {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self {
            dataset: dataset.into(),
            timestamp,
            tool_version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

/// On-disk summary: the five network scalars plus metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryFile {
    pub metadata: SummaryMetadata,
    #[serde(flatten)]
    pub summary: NetworkSummary,
}

pub fn write_summary(summary: &SummaryFile, path: &Path) -> Result<()> {
    let mut json = serde_json::to_string_pretty(summary)?;
    json.push('\n');
    write_atomic(path, json.as_bytes())
}

pub fn read_summary(path: &Path) -> Result<SummaryFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}
