//! CNF encodings of proper and polychromatic k-colorability, DIMACS text
//! and model decoding.
//!
//! Variable `var(v, c) = (v - 1)·k + c` is true when vertex `v` gets color
//! `c`. Exactly-one-color per vertex is encoded pairwise, without auxiliary
//! variables.

use std::fmt::Write as _;

use crate::coloring::{Coloring, Mode};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

pub type Literal = i64;
pub type Clause = Vec<Literal>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Clause>,
    /// The question this formula encodes; recorded in the DIMACS comment.
    pub mode: Mode,
    pub k: u32,
}

pub fn var(v: Vertex, c: u32, k: u32) -> Literal {
    (v as Literal - 1) * k as Literal + c as Literal
}

/// Clauses in order: at-least-one color per vertex (by `v`), pairwise
/// at-most-one (by `v`, `c < c'`), then one clause per edge and color (by
/// edge index, `c`): "not all `c`" for proper, "some `c`" for
/// polychromatic.
pub fn encode(h: &impl Hypergraph, k: u32, mode: Mode) -> Result<CnfFormula> {
    if k == 0 {
        return Err(Error::InvalidColoring("k must be positive".into()));
    }
    let n = h.n() as Vertex;
    let ku = k as usize;
    let mut clauses = Vec::with_capacity(h.n() + h.n() * ku * (ku - 1) / 2 + h.edges().len() * ku);
    for v in 1..=n {
        clauses.push((1..=k).map(|c| var(v, c, k)).collect());
    }
    for v in 1..=n {
        for c in 1..=k {
            for c2 in c + 1..=k {
                clauses.push(vec![-var(v, c, k), -var(v, c2, k)]);
            }
        }
    }
    for e in h.edges() {
        for c in 1..=k {
            let sign = match mode {
                Mode::Proper => -1,
                Mode::Polychromatic => 1,
            };
            clauses.push(e.coords().iter().map(|&v| sign * var(v, c, k)).collect());
        }
    }
    Ok(CnfFormula {
        num_vars: h.n() * ku,
        clauses,
        mode,
        k,
    })
}

impl CnfFormula {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "c shiftchain-lab {} k={}", self.mode, self.k);
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    /// Parses DIMACS text produced by [`CnfFormula::to_dimacs`]. The first
    /// line must be the `c shiftchain-lab <mode> k=<k>` comment; further
    /// comment lines are skipped.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, first) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let tag = first
            .strip_prefix("c shiftchain-lab ")
            .ok_or_else(|| Error::parse(1, "expected `c shiftchain-lab <mode> k=<k>`"))?;
        let (mode, k) = tag
            .split_once(' ')
            .ok_or_else(|| Error::parse(1, "expected mode and k"))?;
        let mode: Mode = mode.parse()?;
        let k: u32 = k
            .strip_prefix("k=")
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| Error::parse(1, "expected k=<k>"))?;

        let mut header = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (line_no, line) in lines {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("p cnf ") {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::parse(line_no, "bad problem line"))?;
                if header.is_some() || nums.len() != 2 {
                    return Err(Error::parse(line_no, "bad problem line"));
                }
                header = Some((nums[0], nums[1]));
                continue;
            }
            let (num_vars, _) =
                header.ok_or_else(|| Error::parse(line_no, "clause before problem line"))?;
            for tok in line.split_whitespace() {
                let lit: Literal = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    if current.is_empty() {
                        return Err(Error::parse(line_no, "empty clause"));
                    }
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::parse(line_no, format!("literal {lit} out of range")));
                } else {
                    current.push(lit);
                }
            }
        }
        let (num_vars, num_clauses) =
            header.ok_or_else(|| Error::parse(0, "missing problem line"))?;
        if !current.is_empty() {
            return Err(Error::parse(0, "unterminated clause"));
        }
        if clauses.len() != num_clauses {
            return Err(Error::parse(
                0,
                format!("declared {num_clauses} clauses, found {}", clauses.len()),
            ));
        }
        Ok(CnfFormula {
            num_vars,
            clauses,
            mode,
            k,
        })
    }

    /// Whether `assignment[i]` (the value of variable `i + 1`) satisfies
    /// every clause.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }
}

/// The variable assignment corresponding to a coloring.
pub fn assignment_of(c: &Coloring) -> Vec<bool> {
    let k = c.k() as usize;
    let mut out = vec![false; c.n() * k];
    for (v, &color) in c.colors().iter().enumerate() {
        out[v * k + color as usize - 1] = true;
    }
    out
}

/// Reads a model: whitespace-separated nonzero integers, positive meaning
/// true. `v` tokens (as in solver output) and `0` terminators are ignored,
/// as are lines starting with `s` or `c`.
pub fn parse_model(text: &str) -> Result<Vec<Literal>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('s') || line.starts_with('c') {
            continue;
        }
        for tok in line.split_whitespace() {
            if tok == "v" {
                continue;
            }
            let lit: Literal = tok
                .parse()
                .map_err(|_| Error::parse(idx + 1, format!("bad literal {tok:?}")))?;
            if lit != 0 {
                out.push(lit);
            }
        }
    }
    Ok(out)
}

/// Turns a model into a coloring: each vertex must have exactly one true
/// color variable. Literals beyond `n·k` are ignored; unmentioned variables
/// count as false.
pub fn decode_model(literals: &[Literal], n: usize, k: u32) -> Result<Coloring> {
    let ku = k as usize;
    let mut truth = vec![false; n * ku];
    for &lit in literals {
        let idx = lit.unsigned_abs() as usize;
        if lit > 0 && idx <= truth.len() {
            truth[idx - 1] = true;
        }
    }
    let mut colors = Vec::with_capacity(n);
    for v in 0..n {
        let block = &truth[v * ku..(v + 1) * ku];
        let mut true_colors = block.iter().enumerate().filter(|(_, &t)| t);
        match (true_colors.next(), true_colors.next()) {
            (Some((c, _)), None) => colors.push(c as u32 + 1),
            _ => return Err(Error::AmbiguousVertex(v as Vertex + 1)),
        }
    }
    Coloring::new(k, colors)
}
