//! The `.hg` text format and its JSON twin.
//!
//! `.hg` layout: a header line `n r m`, then `m` lines of `r` ascending
//! 0-based labels separated by single spaces. Lines whose first non-blank
//! character is `#` are comments. Writers emit edges in canonical
//! lexicographic order; readers accept edges (and labels within a line) in
//! any order and re-canonicalize, so both formats round-trip losslessly.

use std::fs;
use std::path::Path;

use crate::error::{HgError, Result};
use crate::set::VertexSet;
use crate::Hypergraph;

/// Canonical `.hg` text for a hypergraph.
pub fn to_hg_string(h: &Hypergraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {} {}\n", h.n(), h.r(), h.edge_count()));
    for e in h.edges() {
        let labels: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Tokens of a line together with their 1-based starting columns.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parse `.hg` text; `path` only labels diagnostics.
pub fn parse_hg(src: &str, path: &str) -> Result<Hypergraph> {
    let err = |line: usize, col: usize, msg: String| HgError::Parse {
        path: path.to_string(),
        line,
        col,
        msg,
    };
    let int =
        |line: usize, col: usize, tok: &str, what: &str| -> Result<usize> {
            tok.parse::<usize>()
                .map_err(|_| err(line, col, format!("expected {what}, found {tok:?}")))
        };

    let mut data_lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let Some((hline, header)) = data_lines.next() else {
        return Err(err(1, 1, "missing header line `n r m`".into()));
    };
    let toks = tokens_with_columns(header);
    if toks.len() != 3 {
        return Err(err(
            hline,
            1,
            format!("header must be `n r m` (three integers), found {} tokens", toks.len()),
        ));
    }
    let n = int(hline, toks[0].0, toks[0].1, "vertex count n")?;
    let r = int(hline, toks[1].0, toks[1].1, "uniformity r")?;
    let m = int(hline, toks[2].0, toks[2].1, "edge count m")?;
    if n > crate::set::MAX_VERTICES {
        return Err(err(hline, toks[0].0, format!("vertex count {n} exceeds the 64-vertex limit")));
    }
    if r < 2 {
        return Err(err(hline, toks[1].0, format!("uniformity must be at least 2, found {r}")));
    }

    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let Some((lno, line)) = data_lines.next() else {
            return Err(err(
                last_line,
                1,
                format!("expected {m} edge lines, found {}", edges.len()),
            ));
        };
        last_line = lno;
        let toks = tokens_with_columns(line);
        if toks.len() != r {
            return Err(err(
                lno,
                toks.first().map_or(1, |t| t.0),
                format!("edge line must have {r} labels, found {}", toks.len()),
            ));
        }
        let mut labels = Vec::with_capacity(r);
        for &(col, tok) in &toks {
            let v = int(lno, col, tok, "vertex label")?;
            if v >= n {
                return Err(err(lno, col, format!("vertex {v} out of range for n = {n}")));
            }
            if labels.contains(&v) {
                return Err(err(lno, col, format!("repeated vertex {v} within an edge")));
            }
            labels.push(v);
        }
        let e = VertexSet::from_labels(labels.iter().copied()).expect("validated above");
        edges.push((lno, e));
    }
    if let Some((lno, line)) = data_lines.next() {
        let col = tokens_with_columns(line).first().map_or(1, |t| t.0);
        return Err(err(lno, col, format!("unexpected data after {m} edges")));
    }
    let sets: Vec<VertexSet> = edges.iter().map(|&(_, e)| e).collect();
    Hypergraph::new(n, r, sets).map_err(|e| match e {
        HgError::DuplicateEdge { edge } => {
            let lno = edges
                .iter()
                .filter(|(_, s)| s.to_vec() == edge)
                .map(|&(l, _)| l)
                .max()
                .unwrap_or(last_line);
            err(lno, 1, format!("duplicate edge {edge:?}"))
        }
        other => other,
    })
}

pub fn read_hg_file<P: AsRef<Path>>(path: P) -> Result<Hypergraph> {
    let text = fs::read_to_string(&path)?;
    parse_hg(&text, &path.as_ref().display().to_string())
}

pub fn write_hg_file<P: AsRef<Path>>(path: P, h: &Hypergraph) -> Result<()> {
    fs::write(path, to_hg_string(h))?;
    Ok(())
}

/// JSON form `{"n":..,"r":..,"edges":[[..],..]}` with edges in canonical
/// order.
pub fn to_json_string(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("hypergraph serialization is infallible")
}

pub fn from_json_str(s: &str) -> Result<Hypergraph> {
    Ok(serde_json::from_str(s)?)
}
