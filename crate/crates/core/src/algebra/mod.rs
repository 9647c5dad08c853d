//! Validated finite semirings and semimodules, element classes and property flags.

pub mod classes;
pub mod clifford;
pub mod semimodule;
pub mod semiring;
pub mod structure;

pub use classes::{
    classify_semiring, element_classes, p_set, units, ElementClassReport, HasElementClasses,
    PropertyFlags,
};
pub use clifford::{clifford_decomposition, CliffordDecomposition, CliffordGroup};
pub use semimodule::{validate_semimodule, FiniteSemimodule, RawSemimodule};
pub use semiring::{validate_semiring, FiniteSemiring, RawSemiring};
pub use structure::{Bimodule, RightRegular, Structure, TableAlgebra, Translation};
