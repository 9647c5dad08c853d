//! Closed subsets: subsemimodules, one- and two-sided ideals, and their
//! subtractive and strong refinements.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::algebra::{
    Bimodule, FiniteSemimodule, FiniteSemiring, RightRegular, Structure, TableAlgebra,
};
use crate::error::Result;
use crate::limits::Limits;
use crate::table::{CayleyTable, ElementSet};

/// Smallest subset containing `seed` and the constants, closed under every operation.
pub fn closure(alg: &TableAlgebra<'_>, seed: ElementSet) -> ElementSet {
    let mut set = alg.constants.iter().copied().fold(seed, ElementSet::with);
    let mut queue: Vec<usize> = set.to_vec();
    let mut done: Vec<usize> = Vec::new();
    while let Some(x) = queue.pop() {
        done.push(x);
        let fresh = |y: usize, set: &mut ElementSet, queue: &mut Vec<usize>| {
            if !set.contains(y) {
                set.insert(y);
                queue.push(y);
            }
        };
        for (_, map) in &alg.unary {
            fresh(map[x], &mut set, &mut queue);
        }
        for op in 0..alg.binary.len() {
            for &y in &done {
                fresh(alg.binary_at(op, x, y), &mut set, &mut queue);
                fresh(alg.binary_at(op, y, x), &mut set, &mut queue);
            }
        }
    }
    set
}

pub fn is_closed(alg: &TableAlgebra<'_>, set: ElementSet) -> bool {
    closure(alg, set) == set
}

/// Every closed subset, in ascending mask order.
pub fn closed_subsets(alg: &TableAlgebra<'_>) -> Vec<ElementSet> {
    let bottom = closure(alg, ElementSet::EMPTY);
    let mut seen: HashSet<ElementSet> = HashSet::from([bottom]);
    let mut queue = VecDeque::from([bottom]);
    while let Some(k) = queue.pop_front() {
        for x in 0..alg.order {
            if !k.contains(x) {
                let next = closure(alg, k.with(x));
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<ElementSet> = seen.into_iter().collect();
    out.sort();
    out
}

/// `m ∈ K` and `m + m' ∈ K` imply `m' ∈ K`.
pub fn is_subtractive(add: &CayleyTable, k: ElementSet) -> bool {
    k.iter()
        .all(|m| (0..add.order()).all(|m2| !k.contains(add.get(m, m2)) || k.contains(m2)))
}

/// `m + m' ∈ K` implies `m, m' ∈ K`.
pub fn is_strong(add: &CayleyTable, k: ElementSet) -> bool {
    let n = add.order();
    (0..n).all(|a| (0..n).all(|b| !k.contains(add.get(a, b)) || (k.contains(a) && k.contains(b))))
}

/// A subset of a carrier with its closure and cancellation flags.
///
/// For a semiring the carrier is that of the regular semimodule, so
/// `is_subsemimodule` coincides with `is_left_ideal`. For a semimodule the
/// ideal flags are false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SubsetMask {
    pub mask: ElementSet,
    pub is_subsemimodule: bool,
    pub is_left_ideal: bool,
    pub is_right_ideal: bool,
    pub is_subtractive: bool,
    pub is_strong: bool,
}

impl SubsetMask {
    pub fn of_semimodule(m: &FiniteSemimodule, mask: ElementSet) -> Self {
        SubsetMask {
            mask,
            is_subsemimodule: m.is_subsemimodule(mask),
            is_left_ideal: false,
            is_right_ideal: false,
            is_subtractive: is_subtractive(m.add_table(), mask),
            is_strong: is_strong(m.add_table(), mask),
        }
    }

    pub fn of_semiring(s: &FiniteSemiring, mask: ElementSet) -> Self {
        let n = s.order();
        let additive = mask.contains(0)
            && mask
                .iter()
                .all(|a| mask.iter().all(|b| mask.contains(s.add(a, b))));
        let left = additive
            && mask
                .iter()
                .all(|a| (0..n).all(|r| mask.contains(s.mul(r, a))));
        let right = additive
            && mask
                .iter()
                .all(|a| (0..n).all(|r| mask.contains(s.mul(a, r))));
        SubsetMask {
            mask,
            is_subsemimodule: left,
            is_left_ideal: left,
            is_right_ideal: right,
            is_subtractive: is_subtractive(s.add_table(), mask),
            is_strong: is_strong(s.add_table(), mask),
        }
    }

    pub fn is_ideal(&self) -> bool {
        self.is_left_ideal && self.is_right_ideal
    }
}

/// All subsemimodules of `m`, ascending by mask.
pub fn enumerate_subsemimodules(m: &FiniteSemimodule, limits: &Limits) -> Result<Vec<SubsetMask>> {
    limits.check("subsemimodule enumeration carrier", m.order())?;
    Ok(closed_subsets(&m.algebra())
        .into_iter()
        .map(|k| SubsetMask::of_semimodule(m, k))
        .collect())
}

fn ideals_of<T: Structure>(
    s: &FiniteSemiring,
    view: T,
    limits: &Limits,
) -> Result<Vec<SubsetMask>> {
    limits.check("ideal enumeration carrier", s.order())?;
    Ok(closed_subsets(&view.algebra())
        .into_iter()
        .map(|k| SubsetMask::of_semiring(s, k))
        .collect())
}

pub fn enumerate_left_ideals(s: &FiniteSemiring, limits: &Limits) -> Result<Vec<SubsetMask>> {
    ideals_of(
        s,
        &FiniteSemimodule::regular(&std::sync::Arc::new(s.clone())),
        limits,
    )
}

pub fn enumerate_right_ideals(s: &FiniteSemiring, limits: &Limits) -> Result<Vec<SubsetMask>> {
    ideals_of(s, RightRegular(s), limits)
}

/// Two-sided ideals.
pub fn enumerate_ideals(s: &FiniteSemiring, limits: &Limits) -> Result<Vec<SubsetMask>> {
    ideals_of(s, Bimodule(s), limits)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::constructions::chain_semiring;

    #[test]
    fn left_ideals_of_b3() {
        let b3 = Arc::new(chain_semiring(2).unwrap());
        let subs =
            enumerate_subsemimodules(&FiniteSemimodule::regular(&b3), &Limits::default()).unwrap();
        let masks: Vec<u64> = subs.iter().map(|k| k.mask.0).collect();
        assert_eq!(masks, vec![0b001, 0b101, 0b111]);
        let strong: Vec<u64> = subs
            .iter()
            .filter(|k| k.is_strong)
            .map(|k| k.mask.0)
            .collect();
        assert_eq!(strong, vec![0b001, 0b111]);
    }

    #[test]
    fn strong_implies_subtractive() {
        let b3 = chain_semiring(2).unwrap();
        for mask in 0..8u64 {
            let k = SubsetMask::of_semiring(&b3, ElementSet(mask));
            assert!(!k.is_strong || k.is_subtractive, "{mask:b}");
        }
    }
}
