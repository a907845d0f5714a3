//! Graph input: graph6 lines or JSON edge lists, from a file or stdin.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use dompack::io::{parse_edge_json, parse_graph6};
use dompack::{Graph, VertexSet};

/// Reads `path`, or standard input when `path` is `None` or `-`.
pub fn read_source(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

/// One graph per nonempty line (graph6 or a one-line JSON object), or a
/// single JSON object spanning the whole text. Lines starting with `#` are
/// skipped.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        if let Ok(g) = parse_edge_json(trimmed) {
            return Ok(vec![g]);
        }
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = if line.starts_with('{') {
            parse_edge_json(line)
        } else {
            parse_graph6(line)
        };
        out.push(g.with_context(|| format!("line {}", i + 1))?);
    }
    if out.is_empty() {
        bail!("no graphs in input");
    }
    Ok(out)
}

/// Comma-separated vertex list such as `0,2,5`; must lie inside `g`.
pub fn parse_vertex_set(s: &str, g: &Graph) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().with_context(|| format!("bad vertex {part:?}"))?;
        if v >= g.n() {
            bail!("X is not a subset of V: vertex {v} but n = {}", g.n());
        }
        set.insert(v);
    }
    Ok(set)
}

/// Inclusive range `a..b`, `a..=b`, `a-b`, or a single `n`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let s = s.trim();
    let (a, b) = if let Some((a, b)) = s.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    let lo: usize = a.trim().parse().with_context(|| format!("bad range {s:?}"))?;
    let hi: usize = b.trim().parse().with_context(|| format!("bad range {s:?}"))?;
    if lo == 0 || lo > hi {
        bail!("range {s:?} must satisfy 1 ≤ lo ≤ hi");
    }
    Ok((lo, hi))
}
