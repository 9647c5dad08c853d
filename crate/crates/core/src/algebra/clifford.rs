//! Clifford decomposition of an additively regular semimodule: a semilattice
//! of abelian groups `G_α` glued by the maps `ψ_{α,β}(a) = a + β`.

use std::collections::BTreeMap;

use crate::algebra::FiniteSemimodule;
use crate::error::{Error, Result};
use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordGroup {
    /// The idempotent `α` (the group identity).
    pub identity: usize,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordDecomposition {
    add: CayleyTable,
    /// Additive idempotents, ascending; the semilattice join is `+`.
    pub semilattice: Vec<usize>,
    /// One group per idempotent, aligned with `semilattice`.
    pub groups: Vec<CliffordGroup>,
    /// `component[x] = x + x̄`
    pub component: Vec<usize>,
    /// The unique additive inverse `x̄`.
    pub inverse: Vec<usize>,
    /// `ψ_{α,β}` for every `α ≤ β`, as `(a, a+β)` pairs over `G_α`.
    pub connecting_maps: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

/// Decomposes the additive reduct of `m`, a commutative inverse monoid.
pub fn clifford_decomposition(m: &FiniteSemimodule) -> Result<CliffordDecomposition> {
    decompose(m.add_table())
}

pub(crate) fn decompose(add: &CayleyTable) -> Result<CliffordDecomposition> {
    let n = add.order();
    let mut inverse = vec![0; n];
    for x in 0..n {
        // x̄ satisfies x + x̄ + x = x and x̄ + x + x̄ = x̄; it is y + x + y for any y with x + y + x = x.
        let y = (0..n)
            .find(|&y| add.get(add.get(x, y), x) == x)
            .ok_or(Error::NotAdditivelyRegular { element: x })?;
        inverse[x] = add.get(add.get(y, x), y);
    }
    let component: Vec<usize> = (0..n).map(|x| add.get(x, inverse[x])).collect();
    let semilattice: Vec<usize> = (0..n).filter(|&x| add.get(x, x) == x).collect();
    let groups: Vec<CliffordGroup> = semilattice
        .iter()
        .map(|&alpha| CliffordGroup {
            identity: alpha,
            elements: (0..n).filter(|&x| component[x] == alpha).collect(),
        })
        .collect();
    let mut connecting_maps = BTreeMap::new();
    for (i, &alpha) in semilattice.iter().enumerate() {
        for &beta in &semilattice {
            if add.get(alpha, beta) == beta {
                let map = groups[i]
                    .elements
                    .iter()
                    .map(|&a| (a, add.get(a, beta)))
                    .collect();
                connecting_maps.insert((alpha, beta), map);
            }
        }
    }
    Ok(CliffordDecomposition {
        add: add.clone(),
        semilattice,
        groups,
        component,
        inverse,
        connecting_maps,
    })
}

impl CliffordDecomposition {
    pub fn group_of(&self, alpha: usize) -> Option<&CliffordGroup> {
        self.groups.iter().find(|g| g.identity == alpha)
    }

    /// `ψ_{α,β}(a)`, defined when `α ≤ β` and `a ∈ G_α`.
    pub fn connect(&self, alpha: usize, beta: usize, a: usize) -> Option<usize> {
        self.connecting_maps
            .get(&(alpha, beta))?
            .iter()
            .find(|&&(x, _)| x == a)
            .map(|&(_, y)| y)
    }

    /// `a + b` computed blockwise: both summands are pushed into `G_{α+β}` and
    /// added with that group's operation.
    pub fn blockwise_sum(&self, a: usize, b: usize) -> usize {
        let alpha = self.component[a];
        let beta = self.component[b];
        let gamma = self.add.get(alpha, beta);
        let pa = self.connect(alpha, gamma, a).expect("α ≤ α+β");
        let pb = self.connect(beta, gamma, b).expect("β ≤ α+β");
        self.group_op(gamma, pa, pb)
    }

    /// The operation of `G_α`, which must contain both arguments.
    pub fn group_op(&self, alpha: usize, a: usize, b: usize) -> usize {
        debug_assert!(self.component[a] == alpha && self.component[b] == alpha);
        self.add.get(a, b)
    }

    /// Rebuilds the full addition table from the blocks.
    pub fn reconstruct(&self) -> CayleyTable {
        CayleyTable::from_fn(self.add.order(), |a, b| self.blockwise_sum(a, b))
    }
}
