//! Shift-chain hypergraphs: ordered uniform hypergraphs whose edges are
//! pairwise comparable under coordinatewise dominance.
//!
//! The crate builds and validates shift-chains, constructs a family with no
//! polychromatic 3-coloring, colors any shift-chain properly with three
//! colors, decides proper and polychromatic k-colorability by complete
//! search, encodes those questions as CNF, and draws instances as SVG.

pub mod cnf;
pub mod coloring;
pub mod config;
pub mod constructions;
pub mod error;
pub mod format;
pub mod hunt;
pub mod hypergraph;
pub mod render;

pub use cnf::{decode_model, encode, CnfFormula};
pub use coloring::{
    backtracking_search, degeneracy_order, exhaustive_search, greedy_proper_3, is_polychromatic,
    is_proper, satisfies, Coloring, Mode, SearchOptions, SearchOutcome,
};
pub use config::Limits;
pub use constructions::{
    construct_non_polychromatic, enumerate_shift_chains, random_shift_chain, ConstructionTrace,
};
pub use error::{Error, Result};
pub use hypergraph::{
    compare, edge_bound, restrict, union, validate_shift_chain, Comparison, Edge, Hypergraph,
    OrderedHypergraph, ShiftChain, Vertex,
};
pub use render::{render_svg, RenderConfig};
