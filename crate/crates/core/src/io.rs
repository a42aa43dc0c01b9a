//! Text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertex
//! indices; the i-th edge line defines edge id `i`. Blank lines and lines
//! starting with `#` are ignored. Matchings are one edge id per line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Matching};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| parse_err(line, "expected two numbers"))?
            .parse()
            .map_err(|_| parse_err(line, format!("not a number in {s:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line, format!("trailing text in {s:?}")));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<CubicGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = two_numbers(hline, header)?;
    if n == 0 {
        return Err(parse_err(hline, "graph has no vertices"));
    }
    let mut g = CubicGraph::with_vertices(n);
    let mut last = hline;
    for (line, s) in lines {
        let (u, v) = two_numbers(line, s)?;
        g.add_edge(u, v)
            .map_err(|e| parse_err(line, e.to_string()))?;
        last = line;
    }
    if g.live_edge_count() != m {
        return Err(parse_err(
            last,
            format!("header declares {m} edges, found {}", g.live_edge_count()),
        ));
    }
    Ok(g)
}

/// Live edges in id order. Ids are preserved by a round trip when no edge
/// has been removed.
pub fn format_edge_list(g: &CubicGraph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.live_edge_count());
    for e in g.live_edges() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Reads a matching of `g`; unknown, dead or repeated ids are errors.
pub fn parse_matching(text: &str, g: &CubicGraph) -> Result<Matching> {
    let mut m = Matching::new();
    for (line, s) in content_lines(text) {
        let id: u32 = s
            .parse()
            .map_err(|_| parse_err(line, format!("not an edge id: {s:?}")))?;
        let e = EdgeId(id);
        if !g.is_live(e) {
            return Err(parse_err(line, format!("edge {e} is not in the graph")));
        }
        if !m.insert(e) {
            return Err(parse_err(line, format!("edge {e} is listed twice")));
        }
    }
    Ok(m)
}

pub fn format_matching(m: &Matching) -> String {
    let mut s = String::new();
    for e in m.iter() {
        let _ = writeln!(s, "{e}");
    }
    s
}

/// Reads one graph in graph6 format. Simple graphs only, so edges come out
/// in column order of the upper triangle.
pub fn parse_graph6(text: &str) -> Result<CubicGraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "byte outside the graph6 range"));
    }
    let (n, rest) = match bytes {
        [126, 126, r @ ..] if r.len() >= 6 => (six_bits(&r[..6]), &r[6..]),
        [126, r @ ..] if r.len() >= 3 => (six_bits(&r[..3]), &r[3..]),
        [b, r @ ..] if *b != 126 => ((*b - 63) as usize, r),
        _ => return Err(parse_err(1, "truncated graph6 header")),
    };
    if n == 0 {
        return Err(parse_err(1, "graph has no vertices"));
    }
    let needed = (n * (n - 1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(parse_err(
            1,
            format!("expected {needed} data bytes, found {}", rest.len()),
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = CubicGraph::with_vertices(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).map_err(|e| parse_err(1, e.to_string()))?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn six_bits(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0, |acc, &b| (acc << 6) | (b - 63) as usize)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Loads an edge list, or graph6 when the file ends in `.g6`.
pub fn load(path: &Path) -> Result<CubicGraph> {
    let text = read(path)?;
    if path.extension().is_some_and(|x| x == "g6") {
        parse_graph6(&text)
    } else {
        parse_edge_list(&text)
    }
}

pub fn store(g: &CubicGraph, path: &Path) -> Result<()> {
    write(path, &format_edge_list(g))
}

pub fn load_matching(path: &Path, g: &CubicGraph) -> Result<Matching> {
    parse_matching(&read(path)?, g)
}

pub fn store_matching(m: &Matching, path: &Path) -> Result<()> {
    write(path, &format_matching(m))
}
