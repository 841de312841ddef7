//! Hom complexes of graphs, their exact integer homology, and constructions
//! that raise the chromatic number of a graph while leaving the homology of
//! `Hom(T, G)` unchanged for every test graph `T` of a finite family.
//!
//! The homology engine is generic over the coefficient type (see
//! [`scalar::Coefficient`]); the aliases below fix the usual choices.

pub mod budget;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod hom;
pub mod homology;
pub mod scalar;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, GraphHom, Vertex};
pub use homology::HomologyProfile;
pub use scalar::{Big, Word};

/// Chain complexes over checked machine integers.
pub type WordComplex = homology::ChainComplex<Word>;
/// Chain complexes over arbitrary-precision integers.
pub type BigComplex = homology::ChainComplex<Big>;
