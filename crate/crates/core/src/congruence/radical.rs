//! Semisimplicity as a direct sum of atom left ideals, and the Bourne radical.

use serde::Serialize;

use crate::algebra::{FiniteSemiring, RightRegular, Structure};
use crate::congruence::subobjects::{
    closure, enumerate_left_ideals, enumerate_right_ideals, SubsetMask,
};
use crate::error::Result;
use crate::limits::Limits;
use crate::table::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SemisimpleCertificate {
    /// Atom left ideals, ascending by mask, whose internal sum is direct and equals `S`.
    Decomposition(Vec<ElementSet>),
    /// Every family of atom left ideals was tried.
    Exhausted { atoms: Vec<ElementSet> },
}

impl SemisimpleCertificate {
    pub fn is_semisimple(&self) -> bool {
        matches!(self, SemisimpleCertificate::Decomposition(_))
    }
}

/// Minimal nonzero left ideals.
pub fn atom_left_ideals(s: &FiniteSemiring, limits: &Limits) -> Result<Vec<ElementSet>> {
    let ideals = enumerate_left_ideals(s, limits)?;
    let zero = ElementSet::singleton(0);
    Ok(ideals
        .iter()
        .map(|k| k.mask)
        .filter(|&l| {
            l != zero
                && !ideals
                    .iter()
                    .any(|k| k.mask != zero && k.mask != l && k.mask.is_subset(l))
        })
        .collect())
}

pub fn is_semisimple(s: &FiniteSemiring, limits: &Limits) -> Result<SemisimpleCertificate> {
    let atoms = atom_left_ideals(s, limits)?;
    let n = s.order();
    // `sums` holds every sum of one element from each chosen ideal; the partial
    // sum map stays injective exactly when `sums` has product-of-sizes elements.
    fn search(
        s: &FiniteSemiring,
        atoms: &[ElementSet],
        start: usize,
        chosen: &mut Vec<ElementSet>,
        sums: ElementSet,
        count: usize,
    ) -> bool {
        if count == s.order() {
            return true;
        }
        for i in start..atoms.len() {
            let l = atoms[i];
            if count * l.len() > s.order()
                || chosen
                    .iter()
                    .any(|&c| c.intersection(l) != ElementSet::singleton(0))
            {
                continue;
            }
            let next: ElementSet = sums
                .iter()
                .flat_map(|a| l.iter().map(move |b| s.add(a, b)))
                .collect();
            if next.len() != count * l.len() {
                continue;
            }
            chosen.push(l);
            if search(s, atoms, i + 1, chosen, next, next.len()) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if search(s, &atoms, 0, &mut chosen, ElementSet::singleton(0), 1) {
        debug_assert_eq!(chosen.iter().map(|l| l.len()).product::<usize>(), n);
        Ok(SemisimpleCertificate::Decomposition(chosen))
    } else {
        Ok(SemisimpleCertificate::Exhausted { atoms })
    }
}

/// `∀ i₁,i₂ ∈ I ∃ j₁,j₂ ∈ I: i₁+j₁+i₁j₁+i₂j₂ = i₂+j₂+i₁j₂+i₂j₁`.
pub fn is_right_semiregular(s: &FiniteSemiring, ideal: ElementSet) -> bool {
    let sum = |xs: [usize; 4]| xs.into_iter().fold(0, |acc, x| s.add(acc, x));
    ideal.iter().all(|i1| {
        ideal.iter().all(|i2| {
            ideal.iter().any(|j1| {
                ideal.iter().any(|j2| {
                    sum([i1, j1, s.mul(i1, j1), s.mul(i2, j2)])
                        == sum([i2, j2, s.mul(i1, j2), s.mul(i2, j1)])
                })
            })
        })
    })
}

/// The sum of all right semiregular right ideals.
pub fn jacobson_radical(s: &FiniteSemiring, limits: &Limits) -> Result<SubsetMask> {
    let union = enumerate_right_ideals(s, limits)?
        .into_iter()
        .filter(|k| is_right_semiregular(s, k.mask))
        .fold(ElementSet::singleton(0), |acc, k| acc.union(k.mask));
    let radical = closure(&RightRegular(s).algebra(), union);
    Ok(SubsetMask::of_semiring(s, radical))
}
