//! Matrix semirings, direct products and direct sums.

use std::sync::Arc;

use crate::algebra::{FiniteSemimodule, FiniteSemiring};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::table::MAX_ORDER;

/// Index coding for `n×n` matrices over a carrier of `base` elements: the
/// row-major entry list read as base-`base` digits, first entry most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixCoding {
    pub base: usize,
    pub n: usize,
}

impl MatrixCoding {
    pub fn order(&self) -> usize {
        self.base.pow((self.n * self.n) as u32)
    }

    pub fn encode(&self, entries: &[usize]) -> usize {
        entries.iter().fold(0, |acc, &e| acc * self.base + e)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut entries = vec![0; self.n * self.n];
        for e in entries.iter_mut().rev() {
            *e = index % self.base;
            index /= self.base;
        }
        entries
    }

    /// The matrix with `s` at `(i, j)` and 0 elsewhere.
    pub fn unit(&self, i: usize, j: usize, s: usize) -> usize {
        let mut entries = vec![0; self.n * self.n];
        entries[i * self.n + j] = s;
        self.encode(&entries)
    }
}

/// `M_n(S)` with the usual matrix operations, indexed by [`MatrixCoding`].
pub fn matrix_semiring(s: &FiniteSemiring, n: usize, limits: &Limits) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "matrix size must be positive".into(),
        ));
    }
    let coding = MatrixCoding { base: s.order(), n };
    let size = (s.order() as u128)
        .checked_pow((n * n) as u32)
        .unwrap_or(u128::MAX);
    let size = usize::try_from(size).unwrap_or(usize::MAX);
    limits.check("matrix semiring order", size)?;
    if size > MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "matrix semiring order",
            size,
            cap: MAX_ORDER,
        });
    }
    let mats: Vec<Vec<usize>> = (0..size).map(|i| coding.decode(i)).collect();
    let sum = |a: usize, b: usize| {
        let e: Vec<usize> = mats[a]
            .iter()
            .zip(&mats[b])
            .map(|(&x, &y)| s.add(x, y))
            .collect();
        coding.encode(&e)
    };
    let product = |a: usize, b: usize| {
        let (x, y) = (&mats[a], &mats[b]);
        let e: Vec<usize> = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                (0..n).fold(0, |acc, k| s.add(acc, s.mul(x[i * n + k], y[k * n + j])))
            })
            .collect();
        coding.encode(&e)
    };
    let identity: Vec<usize> = (0..n * n)
        .map(|ij| if ij / n == ij % n { s.one() } else { 0 })
        .collect();
    FiniteSemiring::from_fn(size, coding.encode(&identity), sum, product)
}

/// `S₁ × S₂` with index `i₁·|S₂| + i₂`.
pub fn direct_product(s1: &FiniteSemiring, s2: &FiniteSemiring) -> Result<FiniteSemiring> {
    let k = s2.order();
    let n = s1.order() * k;
    if n > MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "direct product order",
            size: n,
            cap: MAX_ORDER,
        });
    }
    FiniteSemiring::from_fn(
        n,
        s1.one() * k + s2.one(),
        |a, b| s1.add(a / k, b / k) * k + s2.add(a % k, b % k),
        |a, b| s1.mul(a / k, b / k) * k + s2.mul(a % k, b % k),
    )
}

/// `M₁ ⊕ M₂` over their common semiring, indexed like [`direct_product`].
pub fn direct_sum(m1: &FiniteSemimodule, m2: &FiniteSemimodule) -> Result<FiniteSemimodule> {
    if !m1.same_base(m2) {
        return Err(Error::BaseMismatch);
    }
    let k = m2.order();
    let n = m1.order() * k;
    if n > MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "direct sum order",
            size: n,
            cap: MAX_ORDER,
        });
    }
    FiniteSemimodule::from_fn(
        m1.base(),
        n,
        |a, b| m1.add(a / k, b / k) * k + m2.add(a % k, b % k),
        |s, x| m1.act(s, x / k) * k + m2.act(s, x % k),
    )
}

/// `n`-fold direct sum of the regular semimodule.
pub fn free_semimodule(s: &Arc<FiniteSemiring>, n: usize) -> Result<FiniteSemimodule> {
    let regular = FiniteSemimodule::regular(s);
    let mut out = FiniteSemimodule::trivial(s);
    for _ in 0..n {
        out = direct_sum(&out, &regular)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HasElementClasses;
    use crate::constructions::{chain_semiring, zmod};
    use crate::table::ElementSet;

    #[test]
    fn boolean_matrices() {
        let b = chain_semiring(1).unwrap();
        let m2 = matrix_semiring(&b, 2, &Limits::default()).unwrap();
        assert_eq!(m2.order(), 16);
        // [[1,0],[0,1]] = digits 1001
        assert_eq!(m2.one(), 0b1001);
        assert_eq!(matrix_semiring(&b, 1, &Limits::default()).unwrap(), b);
        assert!(matches!(
            matrix_semiring(&b, 2, &Limits::with_size_cap(8)),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn matrix_coding_round_trips() {
        let c = MatrixCoding { base: 3, n: 2 };
        for i in 0..c.order() {
            assert_eq!(c.encode(&c.decode(i)), i);
        }
        assert_eq!(c.unit(0, 0, 1), 27);
    }

    #[test]
    fn product_of_field_and_boolean() {
        let p = direct_product(zmod(2).unwrap().semiring(), &chain_semiring(1).unwrap()).unwrap();
        assert_eq!(p.order(), 4);
        // F2 × {0} = {0, 2}
        assert_eq!(p.element_classes().vclass, ElementSet(0b0101));
    }
}
