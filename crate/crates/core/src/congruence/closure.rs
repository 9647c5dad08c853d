//! Principal congruences, compatibility checks and the full congruence list.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::algebra::{Structure, TableAlgebra, Translation};
use crate::congruence::partition::{Congruence, Dsu};
use crate::error::{CompatibilityWitness, Result};
use crate::limits::Limits;

/// Smallest equivalence containing `pairs` and closed under `translations`.
pub(crate) fn close_pairs(
    n: usize,
    translations: &[Translation],
    pairs: &[(usize, usize)],
) -> Congruence {
    let mut dsu = Dsu::new(n);
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = work.pop() {
        // only merging unions need propagating: the others are implied by earlier edges
        if dsu.union(a, b) {
            for t in translations {
                let (x, y) = (t.map[a], t.map[b]);
                if x != y {
                    work.push((x, y));
                }
            }
        }
    }
    dsu.into_congruence()
}

/// Smallest congruence relating `a` and `b`.
pub fn principal_congruence<S: Structure + ?Sized>(x: &S, a: usize, b: usize) -> Congruence {
    let alg = x.algebra();
    close_pairs(alg.order, &alg.translations(), &[(a, b)])
}

/// Smallest congruence containing every listed pair.
pub fn generated_congruence<S: Structure + ?Sized>(x: &S, pairs: &[(usize, usize)]) -> Congruence {
    let alg = x.algebra();
    close_pairs(alg.order, &alg.translations(), pairs)
}

/// First related pair `(x, rep(x))`, in translation then element order, whose
/// images are not related.
pub(crate) fn compatibility_witness(
    alg: &TableAlgebra<'_>,
    theta: &Congruence,
) -> Option<CompatibilityWitness> {
    if theta.carrier() != alg.order {
        return Some(CompatibilityWitness {
            a: 0,
            b: 0,
            translation: format!("carrier of size {}", alg.order),
            images: (theta.carrier(), alg.order),
        });
    }
    let reps: Vec<usize> = (0..alg.order).map(|x| theta.representative(x)).collect();
    for t in alg.translations() {
        for x in 0..alg.order {
            let r = reps[x];
            if r != x && !theta.related(t.map[r], t.map[x]) {
                return Some(CompatibilityWitness {
                    a: r,
                    b: x,
                    translation: t.label,
                    images: (t.map[r], t.map[x]),
                });
            }
        }
    }
    None
}

/// `Err(witness)` when `theta` is not compatible with the operations of `x`.
pub fn check_compatible<S: Structure + ?Sized>(
    x: &S,
    theta: &Congruence,
) -> Result<(), CompatibilityWitness> {
    match compatibility_witness(&x.algebra(), theta) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

pub fn is_congruence<S: Structure + ?Sized>(x: &S, theta: &Congruence) -> bool {
    check_compatible(x, theta).is_ok()
}

/// Every congruence of `x`, sorted canonically (Δ first).
///
/// Computed as the join-closure of the principal congruences together with Δ.
pub fn enumerate_congruences<S: Structure + Sync + ?Sized>(
    x: &S,
    limits: &Limits,
) -> Result<Vec<Congruence>> {
    let n = x.order();
    limits.check("congruence enumeration carrier", n)?;
    let alg = x.algebra();
    let translations = alg.translations();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut principals: Vec<Congruence> = pairs
        .par_iter()
        .map(|&(a, b)| close_pairs(n, &translations, &[(a, b)]))
        .collect();
    principals.sort();
    principals.dedup();

    let mut seen: HashSet<Congruence> = principals.iter().cloned().collect();
    seen.insert(Congruence::diagonal(n));
    let mut frontier = principals.clone();
    while !frontier.is_empty() {
        let joins: Vec<Congruence> = frontier
            .par_iter()
            .flat_map_iter(|c| principals.iter().map(move |p| c.join(p)))
            .collect();
        frontier = Vec::new();
        for j in joins {
            if seen.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Congruence> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::FiniteSemimodule;
    use crate::constructions::chain_semiring;

    #[test]
    fn principal_congruences_of_b3() {
        let b3 = Arc::new(chain_semiring(2).unwrap());
        let reg = FiniteSemimodule::regular(&b3);
        assert!(principal_congruence(&reg, 1, 1).is_diagonal());
        assert_eq!(
            principal_congruence(&reg, 1, 2).blocks(),
            vec![vec![0], vec![1, 2]]
        );
        assert!(principal_congruence(&reg, 0, 1).is_universal());
    }

    #[test]
    fn boolean_semifield_has_two_congruences() {
        let b = Arc::new(chain_semiring(1).unwrap());
        let all =
            enumerate_congruences(&FiniteSemimodule::regular(&b), &Limits::default()).unwrap();
        assert_eq!(all, vec![Congruence::diagonal(2), Congruence::universal(2)]);
    }

    #[test]
    fn incompatible_partition_has_witness() {
        let b3 = chain_semiring(2).unwrap();
        let theta = Congruence::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let w = check_compatible(&b3, &theta).unwrap_err();
        assert_eq!((w.a, w.b), (0, 1));
        assert!(!theta.related(w.images.0, w.images.1));
    }

    #[test]
    fn size_cap_is_enforced() {
        let b3 = chain_semiring(2).unwrap();
        assert!(enumerate_congruences(&b3, &Limits::with_size_cap(2)).is_err());
    }
}
