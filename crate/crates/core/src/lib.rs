//! Connectivity of graphic matroids on finite and periodic infinite graphs.
//!
//! The matroid connectivity function `κ` is evaluated from bases alone and
//! compared with a closed graph formula, with Tutte's vertex-boundary
//! separations, and across planar duality.

pub mod cardinality;
pub mod connectivity;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod exec;
pub mod graph;
pub mod graphic;
pub mod io;
pub mod matroid;
pub mod periodic;
pub mod report;
pub mod set;

pub use cardinality::Cardinality;
pub use error::{Error, Result};
pub use exec::{Exec, Limits, Options};
pub use graph::{Edge, EdgePartition, MultiGraph};
pub use matroid::{AxiomViolation, Basis, Kappa, Matroid};
pub use periodic::{Ends, Motif, PeriodicEdgeSet, PeriodicGraph, PeriodicPartition};
pub use report::{CertificatePath, Connectivity, SeparationKind, SeparationReport, SeparationSearch, Side};
pub use set::ElementSet;
