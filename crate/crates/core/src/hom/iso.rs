use serde::Serialize;

use crate::algebra::{Structure, TableAlgebra};
use crate::error::{Error, Result};
use crate::hom::engine::Search;

/// A bijective structure-preserving map, or proof by exhaustion that none exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IsoCertificate {
    Isomorphic(Vec<usize>),
    NotIsomorphic,
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoCertificate::Isomorphic(_))
    }

    pub fn map(&self) -> Option<&[usize]> {
        match self {
            IsoCertificate::Isomorphic(m) => Some(m),
            IsoCertificate::NotIsomorphic => None,
        }
    }
}

/// Preperiod and period of `x, x∘x, (x∘x)∘x, ...`.
fn power_profile(alg: &TableAlgebra<'_>, op: usize, x: usize) -> (usize, usize) {
    let mut seen = vec![usize::MAX; alg.order];
    let mut acc = x;
    let mut k = 0;
    loop {
        if seen[acc] != usize::MAX {
            return (seen[acc], k - seen[acc]);
        }
        seen[acc] = k;
        acc = alg.binary_at(op, acc, x);
        k += 1;
    }
}

/// Per-element data preserved by every isomorphism.
pub(crate) fn element_signature(alg: &TableAlgebra<'_>, x: usize) -> Vec<usize> {
    let n = alg.order;
    let mut sig = Vec::new();
    for op in 0..alg.binary.len() {
        let (pre, period) = power_profile(alg, op, x);
        sig.push(pre);
        sig.push(period);
        sig.push((0..n).filter(|&y| alg.binary_at(op, x, y) == x).count());
        sig.push((0..n).filter(|&y| alg.binary_at(op, x, y) == y).count());
        sig.push((0..n).filter(|&y| alg.binary_at(op, y, x) == x).count());
        sig.push((0..n).filter(|&y| alg.binary_at(op, y, y) == x).count());
    }
    for (_, map) in &alg.unary {
        sig.push(usize::from(map[x] == x));
        sig.push((0..n).filter(|&y| map[y] == x).count());
    }
    for &c in &alg.constants {
        sig.push(usize::from(c == x));
    }
    sig
}

/// Exhaustive isomorphism search with signature pruning. Semimodules must be
/// over the same semiring, since actions are matched scalar by scalar.
pub fn are_isomorphic<X: Structure + ?Sized, Y: Structure + ?Sized>(
    x: &X,
    y: &Y,
) -> Result<IsoCertificate> {
    let (a, b) = (x.algebra(), y.algebra());
    if !a.same_shape(&b) {
        return Err(Error::InvalidArgument(
            "structures of different signatures".into(),
        ));
    }
    if a.order != b.order {
        return Ok(IsoCertificate::NotIsomorphic);
    }
    let sig_a: Vec<Vec<usize>> = (0..a.order).map(|v| element_signature(&a, v)).collect();
    let sig_b: Vec<Vec<usize>> = (0..b.order).map(|v| element_signature(&b, v)).collect();
    let (mut sorted_a, mut sorted_b) = (sig_a.clone(), sig_b.clone());
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(IsoCertificate::NotIsomorphic);
    }
    let allowed = sig_a
        .iter()
        .map(|s| (0..b.order).filter(|&v| &sig_b[v] == s).collect())
        .collect();
    let mut search = Search::new(&a, &b)
        .expect("same shape")
        .injective()
        .with_allowed(allowed);
    Ok(match search.first() {
        Some(map) => IsoCertificate::Isomorphic(map),
        None => IsoCertificate::NotIsomorphic,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::FiniteSemimodule;
    use crate::constructions::{
        chain_semiring, character_semimodule, direct_product, ext_semiring, lattice_boolean,
        lattice_chain, zmod,
    };

    #[test]
    fn named_isomorphisms() {
        let b3 = chain_semiring(2).unwrap();
        assert!(are_isomorphic(&ext_semiring(&zmod(1).unwrap()), &b3)
            .unwrap()
            .is_isomorphic());
        assert_eq!(
            are_isomorphic(&b3, &lattice_chain(3).unwrap()).unwrap(),
            IsoCertificate::NotIsomorphic
        );
        assert_eq!(
            are_isomorphic(&b3, &b3).unwrap(),
            IsoCertificate::Isomorphic(vec![0, 1, 2])
        );
        let b = chain_semiring(1).unwrap();
        let bb = direct_product(&b, &b).unwrap();
        assert!(are_isomorphic(&bb, &lattice_boolean(2).unwrap())
            .unwrap()
            .is_isomorphic());
    }

    #[test]
    fn character_of_b3_is_regular() {
        let b3 = Arc::new(chain_semiring(2).unwrap());
        let reg = FiniteSemimodule::regular(&b3);
        let c = character_semimodule(&reg).unwrap();
        assert!(are_isomorphic(&c, &reg).unwrap().is_isomorphic());
    }
}
