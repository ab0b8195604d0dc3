//! Ordered uniform hypergraphs and shift-chains.
//!
//! Vertices are the integers `1..=n`. An edge is a strictly increasing
//! tuple of vertices. Two edges of the same length are comparable when one
//! dominates the other coordinatewise; a shift-chain is a hypergraph whose
//! edges are pairwise comparable, which makes the edge set a chain in the
//! dominance order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A hyperedge: an increasing tuple of 1-based vertex ids.
///
/// The derived `Ord` is lexicographic, which is a linear extension of the
/// dominance order: `a ⪯ b` and `a != b` imply `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<Vertex>);

impl Edge {
    /// Builds an edge, checking only that the coordinates are nonempty and
    /// strictly increasing. The vertex range is checked by the owning
    /// hypergraph.
    pub fn new(coords: Vec<Vertex>) -> Option<Self> {
        let increasing = coords.windows(2).all(|w| w[0] < w[1]);
        (!coords.is_empty() && increasing && coords[0] >= 1).then_some(Edge(coords))
    }

    pub fn coords(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    fn fits(&self, m: usize, n: usize) -> bool {
        self.len() == m && (self.last() as usize) <= n
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of comparing two edges under coordinatewise dominance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    ABeforeB,
    BBeforeA,
    Incomparable,
}

impl Comparison {
    pub fn is_comparable(self) -> bool {
        self != Comparison::Incomparable
    }
}

pub fn compare(a: &Edge, b: &Edge) -> Result<Comparison> {
    if a.len() != b.len() {
        return Err(Error::UniformityMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let mut a_le = true;
    let mut b_le = true;
    for (x, y) in a.0.iter().zip(&b.0) {
        match x.cmp(y) {
            Ordering::Less => b_le = false,
            Ordering::Greater => a_le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (a_le, b_le) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::ABeforeB,
        (false, true) => Comparison::BBeforeA,
        (false, false) => Comparison::Incomparable,
    })
}

/// `a ⪯ b` for edges already known to share a length.
pub(crate) fn dominated(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Read access shared by [`ShiftChain`] and [`OrderedHypergraph`].
pub trait Hypergraph {
    /// Uniformity: the common length of all edges.
    fn m(&self) -> usize;
    /// Number of vertices.
    fn n(&self) -> usize;
    fn edges(&self) -> &[Edge];
}

fn check_dimensions(m: usize, n: usize) -> Result<()> {
    if m == 0 || n < m || n > Vertex::MAX as usize {
        return Err(Error::InvalidDimensions { m, n });
    }
    Ok(())
}

/// `m(n - m) + 1`, the maximum edge count of an m-uniform shift-chain on
/// `n` vertices.
pub fn chain_bound(m: usize, n: usize) -> usize {
    m * (n - m) + 1
}

/// An ordered m-uniform hypergraph with distinct edges and no comparability
/// requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedHypergraph {
    m: usize,
    n: usize,
    edges: Vec<Edge>,
}

impl OrderedHypergraph {
    pub fn new(m: usize, n: usize, edges: Vec<Edge>) -> Result<Self> {
        check_dimensions(m, n)?;
        if let Some(i) = edges.iter().position(|e| !e.fits(m, n)) {
            return Err(Error::MalformedEdge(i));
        }
        if let Some((i, j)) = first_duplicate(&edges) {
            return Err(Error::DuplicateEdge(i, j));
        }
        Ok(OrderedHypergraph { m, n, edges })
    }

    pub fn empty(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, Vec::new())
    }

    /// Checks whether the edges form a shift-chain.
    pub fn to_shift_chain(&self) -> Result<ShiftChain> {
        validate_shift_chain(self.m, self.n, self.edges.clone())
    }
}

impl Hypergraph for OrderedHypergraph {
    fn m(&self) -> usize {
        self.m
    }
    fn n(&self) -> usize {
        self.n
    }
    fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// Indices (in input order, `i < j`) of some pair of identical edges.
fn first_duplicate(edges: &[Edge]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| edges[a].cmp(&edges[b]).then(a.cmp(&b)));
    order
        .windows(2)
        .find(|w| edges[w[0]] == edges[w[1]])
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
}

/// An m-uniform hypergraph on `[n]` whose edges are pairwise comparable,
/// stored in chain order `edges[0] ⪯ edges[1] ⪯ ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftChain {
    m: usize,
    n: usize,
    edges: Vec<Edge>,
}

impl ShiftChain {
    /// Wraps edges that are already known to be a chain in chain order.
    pub(crate) fn from_chain_unchecked(m: usize, n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges
            .windows(2)
            .all(|w| w[0] != w[1] && dominated(w[0].coords(), w[1].coords())));
        ShiftChain { m, n, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn to_hypergraph(&self) -> OrderedHypergraph {
        OrderedHypergraph {
            m: self.m,
            n: self.n,
            edges: self.edges.clone(),
        }
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }
}

impl Hypergraph for ShiftChain {
    fn m(&self) -> usize {
        self.m
    }
    fn n(&self) -> usize {
        self.n
    }
    fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

impl From<&ShiftChain> for OrderedHypergraph {
    fn from(h: &ShiftChain) -> Self {
        h.to_hypergraph()
    }
}

impl From<ShiftChain> for OrderedHypergraph {
    fn from(h: ShiftChain) -> Self {
        OrderedHypergraph {
            m: h.m,
            n: h.n,
            edges: h.edges,
        }
    }
}

/// Validates `edges` as an m-uniform shift-chain on `[n]` and returns it
/// in chain order.
///
/// Sorting lexicographically puts any chain into chain order, so after the
/// sort it suffices to check consecutive pairs: dominance is transitive.
pub fn validate_shift_chain(m: usize, n: usize, edges: Vec<Edge>) -> Result<ShiftChain> {
    check_dimensions(m, n)?;
    if let Some(i) = edges.iter().position(|e| !e.fits(m, n)) {
        return Err(Error::MalformedEdge(i));
    }
    let bound = chain_bound(m, n);
    if edges.len() > bound {
        return Err(Error::BoundViolation {
            count: edges.len(),
            bound,
        });
    }

    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| edges[a].cmp(&edges[b]).then(a.cmp(&b)));
    for w in order.windows(2) {
        let (i, j) = (w[0].min(w[1]), w[0].max(w[1]));
        match compare(&edges[w[0]], &edges[w[1]])? {
            Comparison::Equal => return Err(Error::DuplicateEdge(i, j)),
            Comparison::Incomparable => return Err(Error::IncomparablePair(i, j)),
            Comparison::ABeforeB | Comparison::BBeforeA => {}
        }
    }

    let mut slots: Vec<Option<Edge>> = edges.into_iter().map(Some).collect();
    let sorted = order
        .into_iter()
        .map(|i| slots[i].take().expect("each index appears once"))
        .collect();
    Ok(ShiftChain {
        m,
        n,
        edges: sorted,
    })
}

/// Edge count against the shift-chain bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeBound {
    pub count: usize,
    pub bound: usize,
    pub holds: bool,
}

pub fn edge_bound(h: &ShiftChain) -> EdgeBound {
    let count = h.len();
    let bound = chain_bound(h.m, h.n);
    EdgeBound {
        count,
        bound,
        holds: count <= bound,
    }
}

/// Projects every edge onto the 1-based coordinate `positions`, dropping
/// repeated projections.
///
/// Projection is monotone for dominance, so the projected sequence is again
/// a chain in chain order and equal projections are adjacent.
pub fn restrict(h: &ShiftChain, positions: &[usize]) -> Result<ShiftChain> {
    if positions.is_empty() {
        return Err(Error::InvalidCoordinates("no positions selected".into()));
    }
    if !positions.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidCoordinates(
            "positions must be strictly increasing".into(),
        ));
    }
    if positions[0] == 0 || positions[positions.len() - 1] > h.m {
        return Err(Error::InvalidCoordinates(format!(
            "positions must lie in 1..={}",
            h.m
        )));
    }
    let mut edges: Vec<Edge> = Vec::with_capacity(h.len());
    for e in &h.edges {
        let projected = Edge(positions.iter().map(|&p| e.0[p - 1]).collect());
        if edges.last() != Some(&projected) {
            edges.push(projected);
        }
    }
    Ok(ShiftChain::from_chain_unchecked(
        positions.len(),
        h.n,
        edges,
    ))
}

/// Edge-set union of two hypergraphs on the same vertex set, emitted in
/// lexicographic edge order.
pub fn union(a: &OrderedHypergraph, b: &OrderedHypergraph) -> Result<OrderedHypergraph> {
    if a.m != b.m {
        return Err(Error::UniformityMismatch {
            expected: a.m,
            found: b.m,
        });
    }
    if a.n != b.n {
        return Err(Error::VertexCountMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    let mut edges: Vec<Edge> = a.edges.iter().chain(&b.edges).cloned().collect();
    edges.sort();
    edges.dedup();
    Ok(OrderedHypergraph {
        m: a.m,
        n: a.n,
        edges,
    })
}

#[cfg(test)]
pub(crate) fn edges_of(raw: &[&[Vertex]]) -> Vec<Edge> {
    raw.iter()
        .map(|c| Edge::new(c.to_vec()).expect("well-formed test edge"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: &[Vertex]) -> Edge {
        Edge::new(c.to_vec()).unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            compare(&e(&[1, 2, 3]), &e(&[1, 2, 3])),
            Ok(Comparison::Equal)
        );
        assert_eq!(
            compare(&e(&[1, 2, 3]), &e(&[2, 3, 5])),
            Ok(Comparison::ABeforeB)
        );
        assert_eq!(
            compare(&e(&[2, 3, 5]), &e(&[1, 2, 3])),
            Ok(Comparison::BBeforeA)
        );
        assert_eq!(
            compare(&e(&[1, 4]), &e(&[2, 3])),
            Ok(Comparison::Incomparable)
        );
        assert!(matches!(
            compare(&e(&[1, 4]), &e(&[2, 3, 5])),
            Err(Error::UniformityMismatch { .. })
        ));
    }

    #[test]
    fn edge_rejects_non_increasing() {
        assert!(Edge::new(vec![]).is_none());
        assert!(Edge::new(vec![2, 2]).is_none());
        assert!(Edge::new(vec![3, 1]).is_none());
        assert!(Edge::new(vec![0, 1]).is_none());
    }

    #[test]
    fn validate_sorts_into_chain_order() {
        let h = validate_shift_chain(2, 3, edges_of(&[&[2, 3], &[1, 2]])).unwrap();
        assert_eq!(h.edges(), edges_of(&[&[1, 2], &[2, 3]]).as_slice());
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            validate_shift_chain(2, 4, edges_of(&[&[1, 4], &[2, 3]])),
            Err(Error::IncomparablePair(0, 1))
        );
        assert_eq!(
            validate_shift_chain(2, 4, edges_of(&[&[1, 2], &[3, 4], &[1, 2]])),
            Err(Error::DuplicateEdge(0, 2))
        );
        assert_eq!(
            validate_shift_chain(2, 3, edges_of(&[&[1, 2], &[2, 4]])),
            Err(Error::MalformedEdge(1))
        );
        assert_eq!(
            validate_shift_chain(3, 3, edges_of(&[&[1, 2]])),
            Err(Error::MalformedEdge(0))
        );
        assert_eq!(
            validate_shift_chain(2, 3, edges_of(&[&[1, 2], &[1, 3], &[2, 3], &[1, 2]])),
            Err(Error::BoundViolation { count: 4, bound: 3 })
        );
        assert!(matches!(
            validate_shift_chain(3, 2, vec![]),
            Err(Error::InvalidDimensions { .. })
        ));
    }

    #[test]
    fn edge_bound_examples() {
        let tri = validate_shift_chain(2, 3, edges_of(&[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!(
            edge_bound(&tri),
            EdgeBound {
                count: 3,
                bound: 3,
                holds: true
            }
        );
        let single = validate_shift_chain(3, 3, edges_of(&[&[1, 2, 3]])).unwrap();
        assert_eq!(
            edge_bound(&single),
            EdgeBound {
                count: 1,
                bound: 1,
                holds: true
            }
        );
    }

    #[test]
    fn restrict_examples() {
        let h = validate_shift_chain(3, 7, edges_of(&[&[2, 5, 7]])).unwrap();
        let r = restrict(&h, &[1, 3]).unwrap();
        assert_eq!(r.m(), 2);
        assert_eq!(r.edges(), edges_of(&[&[2, 7]]).as_slice());
        assert_eq!(restrict(&h, &[1, 2, 3]).unwrap(), h);
        assert!(restrict(&h, &[]).is_err());
        assert!(restrict(&h, &[0]).is_err());
        assert!(restrict(&h, &[4]).is_err());
        assert!(restrict(&h, &[2, 1]).is_err());
    }

    #[test]
    fn union_examples() {
        let a = OrderedHypergraph::new(2, 4, edges_of(&[&[1, 4]])).unwrap();
        let b = OrderedHypergraph::new(2, 4, edges_of(&[&[2, 3]])).unwrap();
        let u = union(&a, &b).unwrap();
        assert_eq!(u.edges().len(), 2);
        assert!(matches!(
            u.to_shift_chain(),
            Err(Error::IncomparablePair(_, _))
        ));
        assert_eq!(union(&a, &a).unwrap(), a);

        let c = OrderedHypergraph::new(2, 3, edges_of(&[&[1, 2]])).unwrap();
        let d = OrderedHypergraph::new(2, 3, edges_of(&[&[2, 3]])).unwrap();
        assert_eq!(
            union(&c, &d).unwrap().edges(),
            edges_of(&[&[1, 2], &[2, 3]]).as_slice()
        );
        assert!(union(&a, &c).is_err());
        let m3 = OrderedHypergraph::empty(3, 4).unwrap();
        assert!(matches!(
            union(&a, &m3),
            Err(Error::UniformityMismatch { .. })
        ));
    }

    #[test]
    fn ordered_hypergraph_rejects_duplicates() {
        assert_eq!(
            OrderedHypergraph::new(2, 3, edges_of(&[&[1, 2], &[1, 2]])),
            Err(Error::DuplicateEdge(0, 1))
        );
    }
}
