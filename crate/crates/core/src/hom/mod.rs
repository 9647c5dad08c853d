//! Homomorphism search: enumeration, extension, retracts, isomorphism and
//! the semimodule census.

pub mod census;
pub(crate) mod engine;
pub mod essential;
pub mod iso;
pub mod maps;

pub use census::{
    canonical_monoids, enumerate_cyclic_semimodules, enumerate_semimodules, CensusFilter,
    CENSUS_MAX_ORDER,
};
pub use essential::{is_essential_extension, EssentialReport};
pub use iso::{are_isomorphic, IsoCertificate};
pub use maps::{
    enumerate_homs, find_extension, is_homomorphism, is_retract, structure_maps, Homomorphism,
};
