use serde::Serialize;

use crate::algebra::{FiniteSemimodule, FiniteSemiring};
use crate::congruence::closure::enumerate_congruences;
use crate::congruence::subobjects::{enumerate_ideals, enumerate_subsemimodules};
use crate::error::Result;
use crate::limits::Limits;
use crate::table::ElementSet;

/// Simplicity notions. Flags that do not apply to the kind of object
/// inspected are false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    /// Nonzero with exactly the congruences `Δ` and `M²`.
    pub simple: bool,
    /// Nonzero with exactly the subsemimodules `{0}` and `M`.
    pub atom: bool,
    /// Nonzero with no proper nonzero subtractive subsemimodule.
    pub s_simple: bool,
    pub congruence_simple: bool,
    pub ideal_simple: bool,
    pub congruence_count: usize,
    pub subobject_count: usize,
}

pub fn simplicity_report(m: &FiniteSemimodule, limits: &Limits) -> Result<SimplicityReport> {
    let congruences = enumerate_congruences(m, limits)?;
    let subs = enumerate_subsemimodules(m, limits)?;
    let nonzero = m.is_nonzero();
    let full = ElementSet::full(m.order());
    let zero = ElementSet::singleton(0);
    Ok(SimplicityReport {
        simple: nonzero && congruences.len() == 2,
        atom: nonzero && subs.len() == 2,
        s_simple: nonzero
            && !subs
                .iter()
                .any(|k| k.is_subtractive && k.mask != zero && k.mask != full),
        congruence_simple: false,
        ideal_simple: false,
        congruence_count: congruences.len(),
        subobject_count: subs.len(),
    })
}

/// Congruence-simplicity (semiring congruences) and ideal-simplicity
/// (two-sided ideals) of a semiring with at least two elements.
pub fn semiring_simplicity(s: &FiniteSemiring, limits: &Limits) -> Result<SimplicityReport> {
    let congruences = enumerate_congruences(s, limits)?;
    let ideals = enumerate_ideals(s, limits)?;
    let nonzero = s.order() > 1;
    Ok(SimplicityReport {
        simple: false,
        atom: false,
        s_simple: false,
        congruence_simple: nonzero && congruences.len() == 2,
        ideal_simple: nonzero && ideals.len() == 2,
        congruence_count: congruences.len(),
        subobject_count: ideals.len(),
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::constructions::{chain_semiring, zmod};

    #[test]
    fn b3_and_its_atom() {
        let b3 = Arc::new(chain_semiring(2).unwrap());
        let reg = FiniteSemimodule::regular(&b3);
        let r = simplicity_report(&reg, &Limits::default()).unwrap();
        assert!(!r.simple && !r.atom);
        let (sub, _) = reg.submodule(ElementSet(0b101)).unwrap();
        let r = simplicity_report(&sub, &Limits::default()).unwrap();
        assert!(r.simple && r.atom && r.s_simple);
        let r = simplicity_report(&FiniteSemimodule::trivial(&b3), &Limits::default()).unwrap();
        assert!(!r.simple && !r.atom && !r.s_simple);
    }

    #[test]
    fn semiring_simplicity_examples() {
        let lim = Limits::default();
        let b = semiring_simplicity(&chain_semiring(1).unwrap(), &lim).unwrap();
        assert!(b.congruence_simple && b.ideal_simple);
        let b3 = semiring_simplicity(&chain_semiring(2).unwrap(), &lim).unwrap();
        assert!(!b3.congruence_simple && !b3.ideal_simple);
        let f2 = semiring_simplicity(zmod(2).unwrap().semiring(), &lim).unwrap();
        assert!(f2.congruence_simple && f2.ideal_simple);
    }
}
