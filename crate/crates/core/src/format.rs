//! Line-oriented text formats.
//!
//! ```text
//! SHIFTCHAIN v1            ORDEREDHG v1             COLORING v1
//! m=<m> n=<n> t=<t>        m=<m> n=<n> t=<t>        n=<n> k=<k>
//! <edge> x t (chain order) <edge> x t               <c_1> ... <c_n>
//! ```
//!
//! Edges are `m` space-separated vertex ids. Output uses LF line endings
//! and no trailing spaces.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::hypergraph::{validate_shift_chain, Edge, Hypergraph, OrderedHypergraph, ShiftChain};

pub const SHIFTCHAIN_MAGIC: &str = "SHIFTCHAIN v1";
pub const ORDEREDHG_MAGIC: &str = "ORDEREDHG v1";
pub const COLORING_MAGIC: &str = "COLORING v1";

fn write_edges(magic: &str, h: &impl Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{magic}");
    let _ = writeln!(out, "m={} n={} t={}", h.m(), h.n(), h.edges().len());
    for e in h.edges() {
        let coords: Vec<String> = e.coords().iter().map(u32::to_string).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_shift_chain(h: &ShiftChain) -> String {
    write_edges(SHIFTCHAIN_MAGIC, h)
}

pub fn write_ordered(h: &OrderedHypergraph) -> String {
    write_edges(ORDEREDHG_MAGIC, h)
}

/// Parses `key=value` fields in the given order.
fn fields<const N: usize>(line_no: usize, line: &str, keys: [&str; N]) -> Result<[usize; N]> {
    let parts: Vec<&str> = line.split(' ').collect();
    if parts.len() != N {
        return Err(Error::parse(
            line_no,
            format!("expected {}", keys.join(" ")),
        ));
    }
    let mut out = [0; N];
    for ((slot, part), key) in out.iter_mut().zip(parts).zip(keys) {
        *slot = part
            .strip_prefix(key)
            .and_then(|p| p.strip_prefix('='))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::parse(line_no, format!("expected {key}=<integer>")))?;
    }
    Ok(out)
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<u32>> {
    line.split(' ')
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::parse(line_no, format!("bad integer {tok:?}")))
        })
        .collect()
}

/// Header plus edge lines; returns `(m, n, edges)`.
fn read_edges(text: &str, magic: &str) -> Result<(usize, usize, Vec<Edge>)> {
    let mut lines = text.lines();
    if lines.next() != Some(magic) {
        return Err(Error::parse(1, format!("expected `{magic}`")));
    }
    let header = lines
        .next()
        .ok_or_else(|| Error::parse(2, "missing header"))?;
    let [m, n, t] = fields(2, header, ["m", "n", "t"])?;
    let mut edges = Vec::with_capacity(t.min(1 << 20));
    for i in 0..t {
        let line_no = i + 3;
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("expected {t} edges, found {i}")))?;
        let coords = numbers(line_no, line)?;
        if coords.len() != m {
            return Err(Error::parse(line_no, format!("edge needs {m} vertices")));
        }
        let edge = Edge::new(coords)
            .ok_or_else(|| Error::parse(line_no, "edge must be strictly increasing and 1-based"))?;
        edges.push(edge);
    }
    if let Some((extra, _)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::parse(
            t + 3 + extra,
            "unexpected content after edges",
        ));
    }
    Ok((m, n, edges))
}

/// Parses and validates a shift-chain. Edges must already be listed in
/// chain order.
pub fn parse_shift_chain(text: &str) -> Result<ShiftChain> {
    let (m, n, edges) = read_edges(text, SHIFTCHAIN_MAGIC)?;
    let h = validate_shift_chain(m, n, edges.clone())?;
    if let Some(i) = edges.iter().zip(h.edges()).position(|(a, b)| a != b) {
        return Err(Error::parse(i + 3, "edges are not in chain order"));
    }
    Ok(h)
}

pub fn parse_ordered(text: &str) -> Result<OrderedHypergraph> {
    let (m, n, edges) = read_edges(text, ORDEREDHG_MAGIC)?;
    OrderedHypergraph::new(m, n, edges)
}

/// Reads either format; a shift-chain file yields its hypergraph.
pub fn parse_any(text: &str) -> Result<OrderedHypergraph> {
    match text.lines().next() {
        Some(SHIFTCHAIN_MAGIC) => parse_shift_chain(text).map(OrderedHypergraph::from),
        Some(ORDEREDHG_MAGIC) => parse_ordered(text),
        _ => Err(Error::parse(
            1,
            format!("expected `{SHIFTCHAIN_MAGIC}` or `{ORDEREDHG_MAGIC}`"),
        )),
    }
}

pub fn write_coloring(c: &Coloring) -> String {
    let colors: Vec<String> = c.colors().iter().map(u32::to_string).collect();
    format!(
        "{COLORING_MAGIC}\nn={} k={}\n{}\n",
        c.n(),
        c.k(),
        colors.join(" ")
    )
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = text.lines();
    if lines.next() != Some(COLORING_MAGIC) {
        return Err(Error::parse(1, format!("expected `{COLORING_MAGIC}`")));
    }
    let header = lines
        .next()
        .ok_or_else(|| Error::parse(2, "missing header"))?;
    let [n, k] = fields(2, header, ["n", "k"])?;
    let colors = match lines.next() {
        Some(line) if !line.is_empty() => numbers(3, line)?,
        _ => Vec::new(),
    };
    if colors.len() != n {
        return Err(Error::parse(
            3,
            format!("expected {n} colors, found {}", colors.len()),
        ));
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(Error::parse(4, "unexpected content after colors"));
    }
    let k = u32::try_from(k).map_err(|_| Error::parse(2, "k too large"))?;
    Coloring::new(k, colors)
}
