//! Vertex colorings: verifiers, the degeneracy-based greedy proper
//! 3-coloring, and complete searches for proper and polychromatic
//! k-colorings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::hypergraph::{restrict, Hypergraph, ShiftChain, Vertex};

/// Which property a coloring must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// No edge is monochromatic.
    Proper,
    /// Every edge sees all k colors.
    Polychromatic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Proper => "proper",
            Mode::Polychromatic => "polychromatic",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(Mode::Proper),
            "polychromatic" => Ok(Mode::Polychromatic),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

/// A total assignment of colors `1..=k` to vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: u32,
    colors: Vec<u32>,
}

impl Coloring {
    /// `colors[v - 1]` is the color of vertex `v`.
    pub fn new(k: u32, colors: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidColoring("k must be positive".into()));
        }
        if let Some(v) = colors.iter().position(|&c| c == 0 || c > k) {
            return Err(Error::InvalidColoring(format!(
                "vertex {} has color {} outside 1..={k}",
                v + 1,
                colors[v]
            )));
        }
        Ok(Coloring { k, colors })
    }

    pub fn uniform(n: usize, k: u32) -> Result<Self> {
        Self::new(k, vec![1; n])
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> u32 {
        self.colors[v as usize - 1]
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }
}

fn check_size(h: &impl Hypergraph, c: &Coloring) -> Result<()> {
    if c.n() != h.n() {
        return Err(Error::VertexCountMismatch {
            expected: h.n(),
            found: c.n(),
        });
    }
    Ok(())
}

fn monochromatic(edge: &[Vertex], colors: &[u32]) -> bool {
    let first = colors[edge[0] as usize - 1];
    edge[1..].iter().all(|&v| colors[v as usize - 1] == first)
}

fn sees_all_colors(edge: &[Vertex], colors: &[u32], k: u32) -> bool {
    if edge.len() < k as usize {
        return false;
    }
    let mut seen = vec![false; k as usize];
    let mut count = 0;
    for &v in edge {
        let slot = &mut seen[colors[v as usize - 1] as usize - 1];
        if !*slot {
            *slot = true;
            count += 1;
        }
    }
    count == k as usize
}

/// True iff no edge is monochromatic. A single-vertex edge always is.
pub fn is_proper(h: &impl Hypergraph, c: &Coloring) -> Result<bool> {
    check_size(h, c)?;
    Ok(h.edges()
        .iter()
        .all(|e| !monochromatic(e.coords(), &c.colors)))
}

/// True iff every edge contains all `k` colors; edges shorter than `k`
/// never do.
pub fn is_polychromatic(h: &impl Hypergraph, c: &Coloring) -> Result<bool> {
    check_size(h, c)?;
    Ok(h.edges()
        .iter()
        .all(|e| sees_all_colors(e.coords(), &c.colors, c.k)))
}

pub fn satisfies(h: &impl Hypergraph, c: &Coloring, mode: Mode) -> Result<bool> {
    match mode {
        Mode::Proper => is_proper(h, c),
        Mode::Polychromatic => is_polychromatic(h, c),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrder {
    /// Vertices in removal order.
    pub order: Vec<Vertex>,
    /// Largest degree of a vertex at the moment it was removed.
    pub degeneracy: usize,
}

/// Min-degree elimination of a 2-uniform hypergraph, breaking ties by the
/// smallest vertex id.
pub fn degeneracy_order(g: &impl Hypergraph) -> Result<DegeneracyOrder> {
    if g.m() != 2 {
        return Err(Error::UniformityMismatch {
            expected: 2,
            found: g.m(),
        });
    }
    let adjacency = adjacency(g);
    let mut degree: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut queue: BTreeSet<(usize, usize)> =
        degree.iter().enumerate().map(|(v, &d)| (d, v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut degeneracy = 0;

    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        order.push(v as Vertex + 1);
        for &w in &adjacency[v] {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    Ok(DegeneracyOrder { order, degeneracy })
}

/// 0-based, deduplicated neighbor lists of a 2-uniform hypergraph.
fn adjacency(g: &impl Hypergraph) -> Vec<Vec<usize>> {
    let mut adjacency = vec![Vec::new(); g.n()];
    for e in g.edges() {
        let (a, b) = (e.first() as usize - 1, e.last() as usize - 1);
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }
    adjacency
}

/// Proper coloring with at most 3 colors.
///
/// Colors the restriction to the first two coordinates greedily in reverse
/// elimination order. Every edge of `h` contains an edge of the restriction,
/// so the result is proper for `h` too.
///
/// Those restrictions are usually 2-degenerate, but not always (the
/// triangular prism is a 3-regular one), and the greedy pass can then need a
/// fourth color. In that case the restriction is padded to a maximal chain
/// and 3-colored by a complete search, which is fast on that shape.
pub fn greedy_proper_3(h: &ShiftChain) -> Result<Coloring> {
    if h.m() < 2 {
        return Err(Error::UniformityTooSmall(h.m()));
    }
    let graph = restrict(h, &[1, 2])?;
    let elimination = degeneracy_order(&graph)?;
    let adjacency = adjacency(&graph);

    let mut colors = vec![0u32; h.n()];
    let mut used = Vec::new();
    for &v in elimination.order.iter().rev() {
        let v = v as usize - 1;
        used.clear();
        used.extend(adjacency[v].iter().map(|&w| colors[w]).filter(|&c| c > 0));
        colors[v] = (1..).find(|c| !used.contains(c)).expect("unbounded range");
    }
    if colors.iter().any(|&c| c > 3) {
        colors = three_color(&saturate(&graph))
            .or_else(|| three_color(&adjacency))
            .ok_or_else(|| {
                Error::Infeasible(
                    "the first two coordinates do not admit a proper 3-coloring".into(),
                )
            })?;
    }
    Coloring::new(3, colors)
}

/// Adjacency of the smallest maximal 2-uniform chain on the same vertices
/// containing `graph`: consecutive edges are joined by a monotone staircase,
/// first raising the second coordinate, then the first.
fn saturate(graph: &ShiftChain) -> Vec<Vec<usize>> {
    let n = graph.n();
    let mut adjacency = vec![Vec::new(); n];
    let mut link = |a: usize, b: usize| {
        adjacency[a - 1].push(b - 1);
        adjacency[b - 1].push(a - 1);
    };
    let (mut l, mut r) = (1, 2);
    link(l, r);
    let ends = graph
        .edges()
        .iter()
        .map(|e| (e.first() as usize, e.last() as usize))
        .chain([(n - 1, n)]);
    for (a, b) in ends {
        while r < b {
            r += 1;
            link(l, r);
        }
        while l < a {
            l += 1;
            link(l, r);
        }
    }
    adjacency
}

/// Complete 3-coloring search on a graph given by 0-based adjacency lists.
///
/// Vertices are colored in increasing order with forward checking: a color
/// assignment removes that color from the domains of uncolored neighbors,
/// and a branch fails as soon as some domain empties. Iterative, so deep
/// graphs do not overflow the stack.
fn three_color(adjacency: &[Vec<usize>]) -> Option<Vec<u32>> {
    const ALL: u8 = 0b111;
    let n = adjacency.len();
    let mut domain = vec![ALL; n];
    let mut colors = vec![0u32; n];
    // (vertex, old domain) pairs to restore on backtrack.
    let mut trail: Vec<(usize, u8)> = Vec::new();
    // Per decision level: untried colors of the vertex and the trail mark.
    let mut untried: Vec<u8> = Vec::with_capacity(n);
    let mut marks: Vec<usize> = Vec::with_capacity(n);

    let mut v = 0;
    let mut fresh = true;
    loop {
        if v == n {
            return Some(colors);
        }
        if fresh {
            untried.push(domain[v]);
            marks.push(trail.len());
        }
        let level = untried.len() - 1;
        // Undo the previous attempt at this level.
        while trail.len() > marks[level] {
            let (w, old) = trail.pop().expect("nonempty trail");
            domain[w] = old;
        }
        colors[v] = 0;
        if untried[level] == 0 {
            untried.pop();
            marks.pop();
            if v == 0 {
                return None;
            }
            v -= 1;
            fresh = false;
            continue;
        }
        let bit = untried[level] & untried[level].wrapping_neg();
        untried[level] &= !bit;
        colors[v] = bit.trailing_zeros() + 1;
        let mut wiped = false;
        for &w in &adjacency[v] {
            if w > v && domain[w] & bit != 0 {
                trail.push((w, domain[w]));
                domain[w] &= !bit;
                if domain[w] == 0 {
                    wiped = true;
                    break;
                }
            }
        }
        if wiped {
            fresh = false;
        } else {
            v += 1;
            fresh = true;
        }
    }
}

/// Result of a complete search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// A coloring with the requested property, or `None` if none exists.
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
    pub mode: Mode,
    pub k: u32,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

fn edge_lists(h: &impl Hypergraph) -> Vec<&[Vertex]> {
    h.edges().iter().map(|e| e.coords()).collect()
}

/// Tries all `k^n` colorings in lexicographic order (vertex 1 most
/// significant) and returns the first with the requested property.
/// `nodes_explored` counts colorings tested.
pub fn exhaustive_search(
    h: &impl Hypergraph,
    k: u32,
    mode: Mode,
    limits: &Limits,
) -> Result<SearchOutcome> {
    if k == 0 {
        return Err(Error::InvalidColoring("k must be positive".into()));
    }
    let space = (k as u128)
        .checked_pow(h.n() as u32)
        .filter(|&s| s <= limits.exhaustive_cap);
    if space.is_none() {
        return Err(Error::SizeLimit {
            what: "assignment count",
            requested: (k as u128).saturating_pow(h.n().min(u32::MAX as usize) as u32),
            limit: limits.exhaustive_cap,
        });
    }

    let edges = edge_lists(h);
    let holds = |colors: &[u32]| match mode {
        Mode::Proper => edges.iter().all(|e| !monochromatic(e, colors)),
        Mode::Polychromatic => edges.iter().all(|e| sees_all_colors(e, colors, k)),
    };

    let mut colors = vec![1u32; h.n()];
    let mut tested = 0u64;
    loop {
        tested += 1;
        if holds(&colors) {
            return Ok(SearchOutcome {
                witness: Some(Coloring::new(k, colors)?),
                nodes_explored: tested,
                mode,
                k,
            });
        }
        // Odometer step; the last vertex varies fastest.
        let Some(v) = colors.iter().rposition(|&c| c < k) else {
            break;
        };
        colors[v] += 1;
        colors[v + 1..].fill(1);
    }
    Ok(SearchOutcome {
        witness: None,
        nodes_explored: tested,
        mode,
        k,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 1 runs sequentially. With more than one worker the
    /// color choices of vertex 1 are searched as independent shards.
    pub workers: usize,
    /// Fix vertex 1 to color 1. Sound for both modes because colors are
    /// interchangeable, but it changes `nodes_explored`.
    pub symmetry_breaking: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            symmetry_breaking: false,
        }
    }
}

pub const MAX_BACKTRACK_COLORS: u32 = 64;

struct Backtracker<'a> {
    k: u32,
    mode: Mode,
    edges: Vec<&'a [Vertex]>,
    /// For each 0-based vertex: (edge index, position of the vertex in it).
    incidence: Vec<Vec<(usize, usize)>>,
    colors: Vec<u32>,
    nodes: u64,
    stop: &'a AtomicBool,
}

impl<'a> Backtracker<'a> {
    fn new(n: usize, edges: &[&'a [Vertex]], k: u32, mode: Mode, stop: &'a AtomicBool) -> Self {
        let edges = edges.to_vec();
        let mut incidence = vec![Vec::new(); n];
        for (e, coords) in edges.iter().enumerate() {
            for (pos, &v) in coords.iter().enumerate() {
                incidence[v as usize - 1].push((e, pos));
            }
        }
        Backtracker {
            k,
            mode,
            edges,
            incidence,
            colors: vec![0; n],
            nodes: 0,
            stop,
        }
    }

    /// Whether the partial assignment of vertices `0..=v` can still extend
    /// to a valid coloring, judged by the edges through `v`. Vertices are
    /// assigned in increasing order, so in an edge the coordinates before
    /// `v` are assigned and those after it are not.
    fn consistent(&self, v: usize) -> bool {
        self.incidence[v].iter().all(|&(e, pos)| {
            let edge = self.edges[e];
            match self.mode {
                Mode::Proper => pos + 1 < edge.len() || !monochromatic(edge, &self.colors),
                Mode::Polychromatic => {
                    let seen = edge[..=pos]
                        .iter()
                        .fold(0u64, |acc, &w| acc | 1 << (self.colors[w as usize - 1] - 1));
                    let missing = self.k - seen.count_ones();
                    missing as usize <= edge.len() - 1 - pos
                }
            }
        })
    }

    fn extend(&mut self, v: usize) -> bool {
        if v == self.colors.len() {
            return true;
        }
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        for c in 1..=self.k {
            self.nodes += 1;
            self.colors[v] = c;
            if self.consistent(v) && self.extend(v + 1) {
                return true;
            }
        }
        self.colors[v] = 0;
        false
    }

    /// Searches with vertex 1 fixed to `first`.
    fn run_from(&mut self, first: u32) -> Option<Vec<u32>> {
        self.nodes += 1;
        self.colors[0] = first;
        (self.consistent(0) && self.extend(1)).then(|| self.colors.clone())
    }
}

/// Depth-first search assigning vertices `1..=n` in order, colors in
/// increasing order, pruning as soon as an edge is fully assigned and
/// monochromatic (proper) or can no longer collect its missing colors
/// (polychromatic). Sequentially the witness is the lexicographically
/// smallest valid coloring. `nodes_explored` counts color assignments
/// tried, summed over shards.
pub fn backtracking_search(
    h: &impl Hypergraph,
    k: u32,
    mode: Mode,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    if k == 0 || k > MAX_BACKTRACK_COLORS {
        return Err(Error::InvalidColoring(format!(
            "backtracking supports 1..={MAX_BACKTRACK_COLORS} colors, got {k}"
        )));
    }
    let firsts: Vec<u32> = if options.symmetry_breaking {
        vec![1]
    } else {
        (1..=k).collect()
    };
    let outcome = |witness: Option<Vec<u32>>, nodes| -> Result<SearchOutcome> {
        Ok(SearchOutcome {
            witness: witness.map(|c| Coloring::new(k, c)).transpose()?,
            nodes_explored: nodes,
            mode,
            k,
        })
    };

    let stop = AtomicBool::new(false);
    let edges = edge_lists(h);
    let n = h.n();
    if options.workers <= 1 {
        let mut solver = Backtracker::new(n, &edges, k, mode, &stop);
        let witness = firsts.iter().find_map(|&c| solver.run_from(c));
        return outcome(witness, solver.nodes);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::Infeasible(format!("cannot start worker pool: {e}")))?;
    let shards: Vec<(Option<Vec<u32>>, u64)> = pool.install(|| {
        firsts
            .par_iter()
            .map(|&c| {
                let mut solver = Backtracker::new(n, &edges, k, mode, &stop);
                let witness = solver.run_from(c);
                if witness.is_some() {
                    stop.store(true, Ordering::Relaxed);
                }
                (witness, solver.nodes)
            })
            .collect()
    });
    let nodes = shards.iter().map(|(_, n)| n).sum();
    let witness = shards.into_iter().find_map(|(w, _)| w);
    outcome(witness, nodes)
}
