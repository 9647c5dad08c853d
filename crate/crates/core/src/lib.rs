//! Finite semirings and semimodules given by Cayley tables: validation,
//! constructions, congruences, homomorphism search and bounded injectivity
//! verdicts.
//!
//! Carriers are `0..n` with zero at index 0.

pub mod algebra;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod format;
pub mod hom;
pub mod injectivity;
pub mod limits;
pub mod suite;
pub mod table;

pub use algebra::{
    classify_semiring, clifford_decomposition, element_classes, validate_semimodule,
    validate_semiring, CliffordDecomposition, ElementClassReport, FiniteSemimodule, FiniteSemiring,
    HasElementClasses, PropertyFlags, RawSemimodule, RawSemiring, Structure,
};
pub use congruence::{Congruence, SimplicityReport, SubsetMask};
pub use constructions::FiniteRing;
pub use error::{Error, Result};
pub use hom::{Homomorphism, IsoCertificate};
pub use limits::Limits;
pub use table::{CayleyTable, ElementSet};
