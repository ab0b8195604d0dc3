//! Generators: the recursive family of shift-chains without a
//! polychromatic 3-coloring, seeded random chains, and exhaustive
//! enumeration of small chains.

use std::fmt::Write as _;
use std::ops::{ControlFlow, Range};

use itertools::Itertools;
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::hypergraph::{chain_bound, dominated, Edge, Hypergraph, ShiftChain, Vertex};

/// One level `H_m` of the recursive construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionLevel {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    /// Edges obtained by appending a fresh vertex to an edge of the previous
    /// level, as a range into this level's chain-ordered edge list. `None`
    /// for the base level.
    pub extended: Option<Range<usize>>,
    /// Edges made of one block of fresh vertices plus the last vertex.
    pub closing: Option<Range<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstructionTrace {
    pub levels: Vec<ConstructionLevel>,
}

impl ConstructionTrace {
    /// Plain-text rendering, one `m n t` line per level.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.levels {
            let _ = writeln!(out, "{} {} {}", l.m, l.n, l.t);
        }
        out
    }
}

/// Builds the m-uniform shift-chain `H_m` that admits no polychromatic
/// 3-coloring, together with the per-level sizes.
///
/// `H_1 = ([1], {(1)})`. From `H_m` with chain-ordered edges
/// `A_1 ⪯ ... ⪯ A_t` on `[n]`, the next level has `n + m·t + 1` vertices.
/// Each `A_i` owns the block of fresh vertices `n + (i-1)m + 1 ..= n + im`;
/// it is extended by each vertex of its block in turn, and the block
/// followed by the new last vertex forms one more edge. Extended edges come
/// first in the returned chain order, then the closing edges.
pub fn construct_non_polychromatic(
    m: usize,
    limits: &Limits,
) -> Result<(ShiftChain, ConstructionTrace)> {
    if m == 0 {
        return Err(Error::InvalidDimensions { m, n: 0 });
    }
    if m > limits.construct_max_m {
        return Err(Error::SizeLimit {
            what: "uniformity",
            requested: m as u128,
            limit: limits.construct_max_m as u128,
        });
    }

    let mut n = 1usize;
    let mut edges = vec![vec![1 as Vertex]];
    let mut trace = ConstructionTrace {
        levels: vec![ConstructionLevel {
            m: 1,
            n: 1,
            t: 1,
            extended: None,
            closing: None,
        }],
    };

    for level in 1..m {
        let t = edges.len();
        let next_n = n + level * t + 1;
        if next_n > Vertex::MAX as usize {
            return Err(Error::SizeLimit {
                what: "vertex count",
                requested: next_n as u128,
                limit: Vertex::MAX as u128,
            });
        }
        let block_start = |i: usize| (n + i * level) as Vertex;

        let mut next = Vec::with_capacity(t * (level + 1));
        for (i, a) in edges.iter().enumerate() {
            for j in 1..=level as Vertex {
                let mut e = Vec::with_capacity(level + 1);
                e.extend_from_slice(a);
                e.push(block_start(i) + j);
                next.push(e);
            }
        }
        let extended = 0..next.len();
        for i in 0..t {
            let mut e: Vec<Vertex> = (1..=level as Vertex).map(|j| block_start(i) + j).collect();
            e.push(next_n as Vertex);
            next.push(e);
        }
        let closing = extended.end..next.len();

        n = next_n;
        edges = next;
        trace.levels.push(ConstructionLevel {
            m: level + 1,
            n,
            t: edges.len(),
            extended: Some(extended),
            closing: Some(closing),
        });
    }

    let edges = edges
        .into_iter()
        .map(|c| Edge::new(c).expect("construction emits increasing tuples"))
        .collect();
    Ok((ShiftChain::from_chain_unchecked(m, n, edges), trace))
}

/// Uniform draw from `0..bound` as `next_u64() mod bound`.
fn below(rng: &mut SplitMix64, bound: usize) -> usize {
    (rng.next_u64() % bound as u64) as usize
}

/// Generates a random m-uniform shift-chain on `[n]` with exactly
/// `target_edges` edges, deterministic in `seed`.
///
/// Algorithm (SplitMix64 seeded with `seed`, draws reduced modulo the range):
/// walk from `(1, ..., m)` to `(n-m+1, ..., n)` by incrementing one
/// coordinate at a time, choosing uniformly among the coordinates that can
/// move without breaking strict increase or exceeding `n`. Every walk has
/// exactly `m(n-m)+1` tuples, each dominating the previous. Then keep
/// `target_edges` of them by selection sampling: tuple `i` of `L` is kept
/// when `draw(L - i) < still_needed`.
pub fn random_shift_chain(
    n: usize,
    m: usize,
    target_edges: usize,
    seed: u64,
) -> Result<ShiftChain> {
    if m == 0 || m > n || n > Vertex::MAX as usize {
        return Err(Error::InvalidDimensions { m, n });
    }
    let bound = chain_bound(m, n);
    if target_edges == 0 || target_edges > bound {
        return Err(Error::Infeasible(format!(
            "target of {target_edges} edges outside 1..={bound}"
        )));
    }

    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut cur: Vec<Vertex> = (1..=m as Vertex).collect();
    let mut walk = Vec::with_capacity(bound);
    walk.push(cur.clone());
    let mut movable = Vec::with_capacity(m);
    loop {
        movable.clear();
        for i in 0..m {
            let ceiling = if i + 1 < m {
                cur[i + 1] - 1
            } else {
                n as Vertex
            };
            if cur[i] < ceiling {
                movable.push(i);
            }
        }
        if movable.is_empty() {
            break;
        }
        let i = movable[below(&mut rng, movable.len())];
        cur[i] += 1;
        walk.push(cur.clone());
    }
    debug_assert_eq!(walk.len(), bound);

    let mut needed = target_edges;
    let total = walk.len();
    let mut edges = Vec::with_capacity(target_edges);
    for (i, tuple) in walk.into_iter().enumerate() {
        if needed == 0 {
            break;
        }
        if below(&mut rng, total - i) < needed {
            edges.push(Edge::new(tuple).expect("walk keeps tuples increasing"));
            needed -= 1;
        }
    }
    Ok(ShiftChain::from_chain_unchecked(m, n, edges))
}

/// Visits every m-uniform shift-chain on `[n]` with `1..=max_edges` edges
/// exactly once, depth-first, in lexicographic order of the edge sequence
/// (a chain is visited before its extensions). Returns the number of
/// chains visited; the visitor may stop the walk early with
/// `ControlFlow::Break`.
pub fn enumerate_shift_chains<F>(
    n: usize,
    m: usize,
    max_edges: usize,
    limits: &Limits,
    mut visitor: F,
) -> Result<u64>
where
    F: FnMut(&ShiftChain) -> ControlFlow<()>,
{
    if m == 0 || m > n {
        return Err(Error::InvalidDimensions { m, n });
    }
    if n > limits.enumerate_max_n {
        return Err(Error::SizeLimit {
            what: "vertex count",
            requested: n as u128,
            limit: limits.enumerate_max_n as u128,
        });
    }

    let tuples: Vec<Edge> = (1..=n as Vertex)
        .combinations(m)
        .map(|c| Edge::new(c).expect("combinations are increasing"))
        .collect();
    // Lexicographic order extends dominance, so successors lie to the right.
    let successors: Vec<Vec<usize>> = (0..tuples.len())
        .map(|a| {
            (a + 1..tuples.len())
                .filter(|&b| dominated(tuples[a].coords(), tuples[b].coords()))
                .collect()
        })
        .collect();

    struct Walk<'a, F> {
        n: usize,
        m: usize,
        max_edges: usize,
        tuples: &'a [Edge],
        successors: &'a [Vec<usize>],
        visitor: F,
        visited: u64,
        path: Vec<usize>,
    }

    impl<F: FnMut(&ShiftChain) -> ControlFlow<()>> Walk<'_, F> {
        fn visit(&mut self, idx: usize) -> ControlFlow<()> {
            self.path.push(idx);
            let chain = ShiftChain::from_chain_unchecked(
                self.m,
                self.n,
                self.path.iter().map(|&i| self.tuples[i].clone()).collect(),
            );
            self.visited += 1;
            let flow = (self.visitor)(&chain);
            if flow.is_continue() && self.path.len() < self.max_edges {
                for k in 0..self.successors[idx].len() {
                    let next = self.successors[idx][k];
                    if self.visit(next).is_break() {
                        self.path.pop();
                        return ControlFlow::Break(());
                    }
                }
            }
            self.path.pop();
            flow
        }
    }

    let mut walk = Walk {
        n,
        m,
        max_edges,
        tuples: &tuples,
        successors: &successors,
        visitor: &mut visitor,
        visited: 0,
        path: Vec::with_capacity(max_edges.min(chain_bound(m, n))),
    };
    if max_edges > 0 {
        for start in 0..tuples.len() {
            if walk.visit(start).is_break() {
                break;
            }
        }
    }
    Ok(walk.visited)
}

/// Checks the top level of a construction: closing edge `i` must consist of
/// the vertices appended to the `i`-th group of extended edges, followed by
/// the last vertex.
pub fn closing_edges_match_blocks(h: &ShiftChain, trace: &ConstructionTrace) -> bool {
    let Some(top) = trace.levels.last() else {
        return false;
    };
    let (Some(extended), Some(closing)) = (&top.extended, &top.closing) else {
        return true;
    };
    let prev_m = top.m - 1;
    let edges = h.edges();
    closing.clone().enumerate().all(|(i, b)| {
        let block: Vec<Vertex> = edges
            [extended.start + i * prev_m..extended.start + (i + 1) * prev_m]
            .iter()
            .map(|e| e.last())
            .collect();
        let closing_edge = edges[b].coords();
        closing_edge[..prev_m] == block[..] && closing_edge[prev_m] as usize == top.n
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{edges_of, validate_shift_chain};

    #[test]
    fn base_level() {
        let (h, trace) = construct_non_polychromatic(1, &Limits::default()).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(h.edges(), edges_of(&[&[1]]).as_slice());
        assert_eq!(trace.to_text(), "1 1 1\n");
    }

    #[test]
    fn second_and_third_levels() {
        let (h2, _) = construct_non_polychromatic(2, &Limits::default()).unwrap();
        assert_eq!(h2.n(), 3);
        assert_eq!(h2.edges(), edges_of(&[&[1, 2], &[2, 3]]).as_slice());

        let (h3, trace) = construct_non_polychromatic(3, &Limits::default()).unwrap();
        assert_eq!(h3.n(), 8);
        assert_eq!(
            h3.edges(),
            edges_of(&[
                &[1, 2, 4],
                &[1, 2, 5],
                &[2, 3, 6],
                &[2, 3, 7],
                &[4, 5, 8],
                &[6, 7, 8]
            ])
            .as_slice()
        );
        let top = trace.levels.last().unwrap();
        assert_eq!(top.extended, Some(0..4));
        assert_eq!(top.closing, Some(4..6));
        assert!(closing_edges_match_blocks(&h3, &trace));
    }

    #[test]
    fn size_table() {
        let (_, trace) = construct_non_polychromatic(6, &Limits::default()).unwrap();
        let sizes: Vec<(usize, usize, usize)> =
            trace.levels.iter().map(|l| (l.m, l.n, l.t)).collect();
        assert_eq!(
            sizes,
            vec![
                (1, 1, 1),
                (2, 3, 2),
                (3, 8, 6),
                (4, 27, 24),
                (5, 124, 120),
                (6, 725, 720)
            ]
        );
    }

    #[test]
    fn construction_limits() {
        assert!(matches!(
            construct_non_polychromatic(9, &Limits::default()),
            Err(Error::SizeLimit { .. })
        ));
        assert!(construct_non_polychromatic(0, &Limits::default()).is_err());
    }

    #[test]
    fn random_edge_cases() {
        let h = random_shift_chain(5, 5, 1, 7).unwrap();
        assert_eq!(h.edges(), edges_of(&[&[1, 2, 3, 4, 5]]).as_slice());
        let single = random_shift_chain(9, 3, 1, 42).unwrap();
        assert_eq!(single.len(), 1);
        assert!(random_shift_chain(3, 2, 4, 0).is_err());
        assert!(random_shift_chain(3, 2, 0, 0).is_err());
        assert!(random_shift_chain(2, 3, 1, 0).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_shift_chain(6, 2, 5, 1234).unwrap();
        let b = random_shift_chain(6, 2, 5, 1234).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert_eq!(validate_shift_chain(2, 6, a.edges().to_vec()).unwrap(), a);
    }

    #[test]
    fn random_full_chain_meets_bound() {
        let h = random_shift_chain(7, 3, chain_bound(3, 7), 99).unwrap();
        assert_eq!(h.len(), 13);
        assert_eq!(h.edges()[0].coords(), &[1, 2, 3]);
        assert_eq!(h.edges()[12].coords(), &[5, 6, 7]);
    }

    #[test]
    fn enumerate_examples() {
        let limits = Limits::default();
        let mut seen = Vec::new();
        let count = enumerate_shift_chains(2, 2, 1, &limits, |h| {
            seen.push(h.edges().to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(count, 1);
        assert_eq!(seen, vec![edges_of(&[&[1, 2]])]);

        let mut all = Vec::new();
        enumerate_shift_chains(3, 2, 3, &limits, |h| {
            all.push(h.edges().to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(all.contains(&edges_of(&[&[1, 2], &[1, 3], &[2, 3]])));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted, "visit order is lexicographic");
    }

    #[test]
    fn enumerate_respects_cap_and_break() {
        let limits = Limits::default();
        assert!(matches!(
            enumerate_shift_chains(11, 2, 2, &limits, |_| ControlFlow::Continue(())),
            Err(Error::SizeLimit { .. })
        ));
        let mut calls = 0;
        let visited = enumerate_shift_chains(6, 3, 4, &limits, |_| {
            calls += 1;
            if calls == 5 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(visited, 5);
    }
}
