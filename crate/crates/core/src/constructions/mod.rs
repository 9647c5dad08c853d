//! Builders for named semirings and semimodules, products, quotients and the
//! special congruences.

pub mod character;
pub mod congruences;
pub mod decomposition;
pub mod morita;
pub mod named;
pub mod products;
pub mod quotient;
pub mod witnesses;

pub use character::character_semimodule;
pub use congruences::{
    additive_orbit, annihilator, bourne_congruence, bourne_congruence_semiring, diamond_congruence,
    rho_congruence, sigma_congruence, Additive,
};
pub use decomposition::{zerosumfree_decomposition, ZerosumfreeDecomposition};
pub use morita::{morita_expand, morita_reduce};
pub use named::{
    b31, chain_semiring, ext_semimodule, ext_semiring, lattice_boolean, lattice_chain, zmod,
    FiniteRing,
};
pub use products::{direct_product, direct_sum, free_semimodule, matrix_semiring, MatrixCoding};
pub use quotient::{quotient, quotient_semimodule, quotient_semiring, Quotient, Quotientable};
pub use witnesses::{
    chain_over_b4, known_witness, nine_element_over_b31, ExtensionProblem, KnownWitness,
};
