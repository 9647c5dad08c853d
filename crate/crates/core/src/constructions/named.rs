//! Named finite semirings: chains `B_{n+1}`, `B(3,1)`, lattices, `ℤ/n` and `Ext(R)`.

use std::sync::Arc;

use crate::algebra::{FiniteSemimodule, FiniteSemiring};
use crate::error::{Error, Result};
use crate::table::MAX_ORDER;

/// `B_{n+1}` on the chain `0 < 1 < ... < n`: `x + y = x ∨ y`, and `xy = 0`
/// if a factor is 0, else `x ∨ y`.
pub fn chain_semiring(n: usize) -> Result<FiniteSemiring> {
    if n == 0 || n >= MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "chain semiring needs 1 <= n < {MAX_ORDER}, got {n}"
        )));
    }
    FiniteSemiring::from_fn(
        n + 1,
        1,
        |a, b| a.max(b),
        |a, b| if a == 0 || b == 0 { 0 } else { a.max(b) },
    )
}

/// `B(3,1)` on `{0, 1, 2}`: `a ⊕ b = min(2, a+b)`, `a ⊙ b = min(2, ab)`.
pub fn b31() -> FiniteSemiring {
    FiniteSemiring::from_fn(3, 1, |a, b| (a + b).min(2), |a, b| (a * b).min(2))
        .expect("B(3,1) is a semiring")
}

/// The Boolean algebra of subsets of a `k`-set; elements are bitmasks,
/// `+ = ∨` and `· = ∧`.
pub fn lattice_boolean(k: usize) -> Result<FiniteSemiring> {
    if k > 6 {
        return Err(Error::InvalidArgument(format!(
            "Boolean algebra needs k <= 6, got {k}"
        )));
    }
    let n = 1usize << k;
    FiniteSemiring::from_fn(n, n - 1, |a, b| a | b, |a, b| a & b)
}

/// The `n`-element chain lattice `0 < 1 < ... < n-1` with `+ = max`, `· = min`.
pub fn lattice_chain(n: usize) -> Result<FiniteSemiring> {
    if !(2..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "chain lattice needs 2 <= n <= {MAX_ORDER}, got {n}"
        )));
    }
    FiniteSemiring::from_fn(n, n - 1, |a, b| a.max(b), |a, b| a.min(b))
}

/// A finite semiring in which every element has an additive inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    semiring: FiniteSemiring,
    neg: Vec<usize>,
}

impl FiniteRing {
    pub fn new(semiring: FiniteSemiring) -> Result<Self> {
        let n = semiring.order();
        let neg = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| semiring.add(x, y) == 0)
                    .ok_or(Error::NotARing { element: x })
            })
            .collect::<Result<_>>()?;
        Ok(FiniteRing { semiring, neg })
    }

    pub fn semiring(&self) -> &FiniteSemiring {
        &self.semiring
    }

    pub fn into_semiring(self) -> FiniteSemiring {
        self.semiring
    }

    pub fn order(&self) -> usize {
        self.semiring.order()
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }
}

/// `ℤ/n`; `n = 1` is the zero ring.
pub fn zmod(n: usize) -> Result<FiniteRing> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "Z/n needs 1 <= n <= {MAX_ORDER}, got {n}"
        )));
    }
    FiniteRing::new(FiniteSemiring::from_fn(
        n,
        1 % n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    )?)
}

/// `x ↦` index in `Ext`: a fresh 0, then the shifted carrier, then `∞`.
fn ext_index(x: usize) -> usize {
    x + 1
}

/// `Ext(R) = R ∪ {0, ∞}`: the new 0 is an additive identity and multiplicatively
/// absorbing, `∞` absorbs every sum and every product with an element of `R`,
/// and `0·∞ = 0 = ∞·0`.
///
/// Indices: 0 is the new zero, `1 + r` is `r ∈ R`, `|R| + 1` is `∞`.
pub fn ext_semiring(r: &FiniteRing) -> FiniteSemiring {
    let k = r.order();
    let inf = k + 1;
    let s = r.semiring();
    let add = |a: usize, b: usize| match (a, b) {
        (0, x) | (x, 0) => x,
        (x, y) if x == inf || y == inf => inf,
        (x, y) => ext_index(s.add(x - 1, y - 1)),
    };
    let mul = |a: usize, b: usize| match (a, b) {
        (0, _) | (_, 0) => 0,
        (x, y) if x == inf || y == inf => inf,
        (x, y) => ext_index(s.mul(x - 1, y - 1)),
    };
    FiniteSemiring::from_fn(k + 2, ext_index(s.one()), add, mul)
        .expect("Ext of a ring is a semiring")
}

/// `Ext(M) = M ∪ {0, ∞}` over `Ext(R)` for a left `R`-module `M`, indexed
/// like [`ext_semiring`]. `ext` must be `Ext(R)` for the base ring of `m`.
pub fn ext_semimodule(ext: &Arc<FiniteSemiring>, m: &FiniteSemimodule) -> Result<FiniteSemimodule> {
    let r = m.base();
    if ext.order() != r.order() + 2 {
        return Err(Error::BaseMismatch);
    }
    if let Some(x) = (0..m.order()).find(|&x| !(0..m.order()).any(|y| m.add(x, y) == 0)) {
        return Err(Error::NotARing { element: x });
    }
    let k = m.order();
    let inf = k + 1;
    let s_inf = r.order() + 1;
    let add = |a: usize, b: usize| match (a, b) {
        (0, x) | (x, 0) => x,
        (x, y) if x == inf || y == inf => inf,
        (x, y) => ext_index(m.add(x - 1, y - 1)),
    };
    let act = |s: usize, x: usize| match (s, x) {
        (0, _) | (_, 0) => 0,
        (s, x) if s == s_inf || x == inf => inf,
        (s, x) => ext_index(m.act(s - 1, x - 1)),
    };
    FiniteSemimodule::from_fn(ext, k + 2, add, act)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{classify_semiring, HasElementClasses};

    #[test]
    fn chain_examples() {
        let b = chain_semiring(1).unwrap();
        assert_eq!(b.order(), 2);
        let b3 = chain_semiring(2).unwrap();
        assert_eq!((b3.mul(1, 1), b3.mul(1, 2)), (1, 2));
        let b4 = chain_semiring(3).unwrap();
        assert!(classify_semiring(&b4).zeroic);
        assert_eq!(b4.element_classes().infinite, Some(3));
        assert!(chain_semiring(0).is_err());
    }

    #[test]
    fn b31_formulas() {
        let s = b31();
        assert_eq!(s.add(1, 1), 2);
        assert_eq!(s.mul(1, 1), 1);
        assert_eq!(s.mul(2, 2), 2);
    }

    #[test]
    fn lattices() {
        assert_eq!(lattice_boolean(1).unwrap(), chain_semiring(1).unwrap());
        let c3 = lattice_chain(3).unwrap();
        // the middle element has no complement
        assert!(!(0..3).any(|y| c3.add(1, y) == 2 && c3.mul(1, y) == 0));
        assert!(classify_semiring(&lattice_boolean(2).unwrap()).gelfand);
    }

    #[test]
    fn ext_of_f2() {
        let ext = ext_semiring(&zmod(2).unwrap());
        assert_eq!(ext.order(), 4);
        assert_eq!(ext.one(), 2);
        // e + 1 = 1, 1 + 1 = e, x + ∞ = ∞, 0·∞ = 0, e·∞ = ∞
        assert_eq!((ext.add(1, 2), ext.add(2, 2), ext.add(2, 3)), (2, 1, 3));
        assert_eq!((ext.mul(0, 3), ext.mul(1, 3)), (0, 3));
        let flags = classify_semiring(&ext);
        assert!(flags.anti_bounded && flags.zerosumfree);
    }

    #[test]
    fn rings_reject_idempotent_addition() {
        assert_eq!(
            FiniteRing::new(chain_semiring(1).unwrap()),
            Err(Error::NotARing { element: 1 })
        );
    }
}
