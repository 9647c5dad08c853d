use crate::algebra::{FiniteSemiring, HasElementClasses};
use crate::constructions::congruences::bourne_congruence_semiring;
use crate::constructions::named::FiniteRing;
use crate::constructions::products::direct_product;
use crate::constructions::quotient::quotient_semiring;
use crate::error::Result;
use crate::hom::{are_isomorphic, IsoCertificate};
use crate::table::CayleyTable;

/// `S ≅ R × T` with `R` a ring and `T = S/≡_{V(S)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZerosumfreeDecomposition {
    /// `V(S)` with its induced operations, relabelled ascending.
    pub ring: FiniteRing,
    pub rest: FiniteSemiring,
    /// `S`-index ↦ index in `ring × rest`.
    pub isomorphism: Vec<usize>,
}

/// `None` when `V(S)` has no identity of its own or `S` does not split.
pub fn zerosumfree_decomposition(s: &FiniteSemiring) -> Result<Option<ZerosumfreeDecomposition>> {
    let v = s.element_classes().vclass;
    let elems = v.to_vec();
    let k = elems.len();
    let pos = |x: usize| {
        elems
            .binary_search(&x)
            .expect("V(S) is closed under + and ·")
    };
    let Some(e) = (0..k).find(|&e| {
        elems
            .iter()
            .all(|&x| s.mul(elems[e], x) == x && s.mul(x, elems[e]) == x)
    }) else {
        return Ok(None);
    };
    let add = CayleyTable::from_fn(k, |a, b| pos(s.add(elems[a], elems[b])));
    let mul = CayleyTable::from_fn(k, |a, b| pos(s.mul(elems[a], elems[b])));
    let ring = FiniteRing::new(FiniteSemiring::from_tables(add, mul, e)?)?;
    let theta = bourne_congruence_semiring(s, v)?;
    let rest = quotient_semiring(s, &theta)?.object;
    let product = direct_product(ring.semiring(), &rest)?;
    Ok(match are_isomorphic(s, &product)? {
        IsoCertificate::Isomorphic(isomorphism) => Some(ZerosumfreeDecomposition {
            ring,
            rest,
            isomorphism,
        }),
        IsoCertificate::NotIsomorphic => None,
    })
}
