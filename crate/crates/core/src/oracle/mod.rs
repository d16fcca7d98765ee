//! Independent ground truth: an explicit planar map of a disk of `{p,q}`,
//! grown from local degree constraints alone, and a census read off it by
//! breadth-first search.

mod audit;
mod build;
mod census;
mod dump;
mod map;

pub use audit::{audit_map, filial_counts, AuditError, FilialCount};
pub use build::{build_map, build_map_within_budget, build_tree, Grower, DEFAULT_VERTEX_BUDGET};
pub use census::{
    bfs_census, classify, vertex_profile, vertex_types, CensusReport, StructureViolation,
    TypeCensus, VertexProfile, VertexType,
};
pub use dump::{write_dump, DUMP_HEADER};
pub use map::{Face, HalfEdgeId, PlanarMap, VertexId};

use thiserror::Error;

use crate::genfunc::{Schlafli, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(
        "vertex budget reached with {vertices} vertices; saturated through depth \
         {achieved_depth} of {requested_depth}"
    )]
    BudgetExceeded {
        requested_depth: usize,
        achieved_depth: usize,
        vertices: usize,
    },
    #[error(transparent)]
    BadSymbol(#[from] SymbolError),
    /// The local rules contradicted each other; never expected for an
    /// admissible symbol.
    #[error("construction of {symbol} failed at generation {layer}: {reason}")]
    Inconsistent {
        symbol: Schlafli,
        layer: u32,
        reason: String,
    },
}
