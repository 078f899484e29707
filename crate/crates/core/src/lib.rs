//! Spectral extremal graph theory toolkit: signless Laplacian and adjacency
//! spectral radii, forbidden book and complete bipartite subgraph detection,
//! closed-form bounds, and exhaustive or corpus-driven audits of those
//! bounds.

pub mod audit;
pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod forbidden;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod spectra;

pub use bounds::{BoundParams, BoundResult, Formula};
pub use error::{AuditError, BoundError, ForbiddenError, Graph6Error, GraphError, SearchError, SpectraError};
pub use family::GraphFamily;
pub use forbidden::{ForbiddenProfile, SrgParams};
pub use graph::{DegreeStats, Graph};
pub use spectra::{MatrixKind, SpectralEstimate};
