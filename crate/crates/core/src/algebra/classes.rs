//! Element classes `I⁺`, `Z`, `V`, `A`, the infinite element, units, and the
//! derived semiring property flags.

use serde::Serialize;

use crate::algebra::{FiniteSemimodule, FiniteSemiring};
use crate::congruence::subobjects::{closed_subsets, is_subtractive};
use crate::table::{CayleyTable, ElementSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementClassReport {
    /// `{m | m+m = m}`
    pub iplus: ElementSet,
    /// `{z | z+m = m for some m}`
    pub zclass: ElementSet,
    /// `{m | m+m' = 0 for some m'}`
    pub vclass: ElementSet,
    /// `{m | m+m'+m = m for some m'}`
    pub aclass: ElementSet,
    pub infinite: Option<usize>,
    /// Two-sided units; semirings only.
    pub units: Option<ElementSet>,
}

fn additive_classes(add: &CayleyTable) -> ElementClassReport {
    let n = add.order();
    let mut report = ElementClassReport {
        iplus: ElementSet::EMPTY,
        zclass: ElementSet::EMPTY,
        vclass: ElementSet::EMPTY,
        aclass: ElementSet::EMPTY,
        infinite: None,
        units: None,
    };
    for m in 0..n {
        if add.get(m, m) == m {
            report.iplus.insert(m);
        }
        if (0..n).any(|x| add.get(m, x) == x) {
            report.zclass.insert(m);
        }
        if (0..n).any(|x| add.get(m, x) == 0) {
            report.vclass.insert(m);
        }
        if (0..n).any(|x| add.get(add.get(m, x), m) == m) {
            report.aclass.insert(m);
        }
        if report.infinite.is_none() && add.row(m).iter().all(|&y| y == m) {
            report.infinite = Some(m);
        }
    }
    report
}

/// Anything with an additive monoid whose element classes can be scanned.
pub trait HasElementClasses {
    fn element_classes(&self) -> ElementClassReport;
}

impl HasElementClasses for FiniteSemimodule {
    fn element_classes(&self) -> ElementClassReport {
        additive_classes(self.add_table())
    }
}

impl HasElementClasses for FiniteSemiring {
    fn element_classes(&self) -> ElementClassReport {
        let mut report = additive_classes(self.add_table());
        report.units = Some(units(self));
        report
    }
}

pub fn element_classes<T: HasElementClasses + ?Sized>(x: &T) -> ElementClassReport {
    x.element_classes()
}

/// Elements `s` with `sx = 1 = xs` for some `x`.
pub fn units(s: &FiniteSemiring) -> ElementSet {
    let n = s.order();
    (0..n)
        .filter(|&a| (0..n).any(|x| s.mul(a, x) == s.one() && s.mul(x, a) == s.one()))
        .collect()
}

/// `P(S) = V(S) ∪ {1+s | s ∈ S}`.
pub fn p_set(s: &FiniteSemiring) -> ElementSet {
    let v = additive_classes(s.add_table()).vclass;
    let shifted: ElementSet = (0..s.order()).map(|x| s.add(s.one(), x)).collect();
    v.union(shifted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub zerosumfree: bool,
    pub zeroic: bool,
    pub additively_idempotent: bool,
    pub additively_regular: bool,
    pub anti_bounded: bool,
    pub gelfand: bool,
    pub vn_regular: bool,
    pub left_subtractive: bool,
    pub commutative_mul: bool,
}

pub fn classify_semiring(s: &FiniteSemiring) -> PropertyFlags {
    let n = s.order();
    let full = ElementSet::full(n);
    let classes = s.element_classes();
    let units = classes.units.unwrap_or_default();
    let regular = FiniteSemimodule::regular(&std::sync::Arc::new(s.clone()));
    let left_ideals = closed_subsets(&crate::algebra::Structure::algebra(&regular));
    PropertyFlags {
        zerosumfree: classes.vclass == ElementSet::singleton(0),
        zeroic: classes.zclass == full,
        additively_idempotent: classes.iplus == full,
        additively_regular: classes.aclass == full,
        anti_bounded: p_set(s) == full,
        gelfand: (0..n).all(|x| units.contains(s.add(s.one(), x))),
        vn_regular: (0..n).all(|a| (0..n).any(|x| s.mul(s.mul(a, x), a) == a)),
        left_subtractive: left_ideals
            .iter()
            .all(|&k| is_subtractive(s.add_table(), k)),
        commutative_mul: s.is_commutative(),
    }
}
