//! Pure simplicial complexes and exact, certificate-producing checks for
//! their Hamiltonicity, dual graphs, bistellar squares and isomorphisms.

pub mod claims;
pub mod complex;
pub mod constructions;
pub mod dual;
pub mod error;
pub mod flips;
pub mod format;
pub mod hamiltonicity;
pub mod iso;

pub use complex::{complement, delete_vertex, join, skeleton, window, Facet, PureComplex, VertexId, WindowSpec};
pub use error::{Error, Result};
