//! Congruences, subobjects, simplicity notions, semisimplicity and the radical.

pub mod closure;
pub mod oracle;
pub mod partition;
pub mod radical;
pub mod simplicity;
pub mod subobjects;

pub use closure::{
    check_compatible, enumerate_congruences, generated_congruence, is_congruence,
    principal_congruence,
};
pub use oracle::{all_partitions, brute_force_congruences, ORACLE_MAX_ORDER};
pub use partition::Congruence;
pub use radical::{
    atom_left_ideals, is_right_semiregular, is_semisimple, jacobson_radical, SemisimpleCertificate,
};
pub use simplicity::{semiring_simplicity, simplicity_report, SimplicityReport};
pub use subobjects::{
    closed_subsets, closure, enumerate_ideals, enumerate_left_ideals, enumerate_right_ideals,
    enumerate_subsemimodules, is_closed, is_strong, is_subtractive, SubsetMask,
};
