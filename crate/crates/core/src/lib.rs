//! Regularity and h-polynomial degree of edge ideals of graphs.
//!
//! Everything is computed combinatorially from the independence complex:
//! Hilbert series from its f-vector, graded Betti numbers through Hochster's
//! formula with exact homology ranks. On top of that sit builders for the
//! graph families realising given `(reg, deg h)` pairs, Cameron-Walker
//! recognition and decomposition, and an exhaustive census over connected
//! graphs on `n` vertices.

pub mod atlas;
pub mod constructions;
pub mod cw;
pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod verify;

pub use atlas::{RdCensus, RdPoint};
pub use constructions::{CwParams, CwSpec};
pub use cw::CwDecomposition;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use invariants::{
    betti_table, hilbert_data, rd_pair, regularity, BettiTable, HilbertData, InvariantRecord,
};
