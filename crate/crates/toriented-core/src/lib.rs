//! Exact combinatorial machinery for deciding orientability and counting
//! connected components of real toric varieties, spherical toric varieties
//! and generalized small covers.
//!
//! Every verdict is backed by a checkable certificate: an odd basis when the
//! space is orientable, an odd-cardinality dependence witness when it is not.
//! The [`oracle`] module reconstructs the underlying gluing by brute force so
//! that every verdict can be cross-checked against an independent path.

pub mod gf2;
pub mod lattice;
pub mod oracle;
pub mod orientability;
pub mod poset;

pub use gf2::{Gf2Error, Gf2Matrix, Gf2Vector, OddBasis, OddDependenceWitness, RowEchelon};
pub use lattice::{
    FacetData, GeometryError, LatticePolytope, LatticeVector, Renormalizer, SpanReport,
};
pub use oracle::{BoundaryMatrix, OracleCaps, OracleError, SignedCayleyGraph};
pub use orientability::{
    Certificate, ComponentIndex, LowerBoundReport, OrientabilityVerdict, SmallCoverSpec, SpecError,
};
pub use poset::{ChainReport, FinitePoset, PosetError};
