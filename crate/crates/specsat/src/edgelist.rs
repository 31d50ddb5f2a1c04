//! Edge-list text format: a header line `<n> <m>`, then `m` lines `<u> <v>`
//! with `u < v`, sorted, single spaces, newline-terminated. No comments.

use std::collections::HashSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use specsat_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), EdgeListError> {
    let err = |msg: &str| EdgeListError::Parse { line: lineno, msg: msg.to_string() };
    let mut it = line.split(' ');
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(err("expected two space-separated integers"));
    };
    let a = a.parse().map_err(|_| err("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| err("not a non-negative integer"))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)));
    let (_, header) = lines.next().ok_or(EdgeListError::Parse { line: 1, msg: "missing header".into() })?;
    let (n, m) = parse_pair(header, 1)?;
    let mut g = Graph::empty(n);
    let mut seen = HashSet::with_capacity(m);
    let mut found = 0;
    for (lineno, line) in lines {
        if line.is_empty() {
            continue;
        }
        let (u, v) = parse_pair(line, lineno)?;
        if u == v {
            return Err(EdgeListError::SelfLoop { line: lineno, v: u });
        }
        if u >= n || v >= n {
            return Err(EdgeListError::Parse { line: lineno, msg: format!("vertex out of range for n = {n}") });
        }
        let (u, v) = (u.min(v), u.max(v));
        if !seen.insert((u, v)) {
            return Err(EdgeListError::Duplicate { line: lineno, u, v });
        }
        g.add_edge(u, v).expect("checked above");
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCount { declared: m, found });
    }
    Ok(g)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_edge_list(path: &Path) -> Result<Graph, EdgeListError> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn write_edge_list(path: &Path, g: &Graph) -> Result<(), EdgeListError> {
    let mut f = io::BufWriter::new(fs::File::create(path)?);
    f.write_all(format_edge_list(g).as_bytes())?;
    f.flush()?;
    Ok(())
}
