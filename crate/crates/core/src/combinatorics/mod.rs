//! Simplicial complexes, Stanley–Reisner ideals, minimal primes and heights.

mod complex;
mod families;
mod ideal;
mod transversal;

pub use complex::{build_ngon, SimplicialComplex};
pub use families::{build_im, im_block, ImFamily};
pub use ideal::{stanley_reisner_ideal, HeightReport, MinimalPrime, MonomialIdeal};
pub use transversal::minimal_transversals;

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatoricsError {
    #[error("ideal is the whole ring")]
    UnitIdeal,
    #[error("vertex {vertex} outside 1..={num_vertices}")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("a complex needs between 1 and 64 vertices, got {0}")]
    VertexCount(usize),
    #[error("a complex needs at least one facet")]
    NoFacets,
    #[error("facet of cardinality {0}; connectivity test needs dimension at most one")]
    FacetTooLarge(usize),
    #[error("an N-gon needs N >= 4, got {0}")]
    NgonTooSmall(usize),
    #[error("family index must be at least 1, got {0}")]
    FamilyIndex(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}
