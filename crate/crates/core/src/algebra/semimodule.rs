use std::sync::Arc;

use crate::algebra::semiring::{
    check_commutative_monoid, check_order, check_shape, FiniteSemiring,
};
use crate::error::{ActionAxiom, Error, Result};
use crate::table::{CayleyTable, ElementSet};

/// Unvalidated Cayley data for a left semimodule: `action[s][m] = s·m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSemimodule {
    pub add: Vec<Vec<usize>>,
    pub action: Vec<Vec<usize>>,
}

/// A validated finite left semimodule over a [`FiniteSemiring`], zero at index 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemimodule {
    base: Arc<FiniteSemiring>,
    add: CayleyTable,
    action: Vec<usize>,
}

impl std::fmt::Debug for FiniteSemimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSemimodule")
            .field("order", &self.order())
            .field("add", &self.add)
            .field("action", &self.action_rows())
            .finish()
    }
}

pub fn validate_semimodule(
    base: &Arc<FiniteSemiring>,
    raw: &RawSemimodule,
) -> Result<FiniteSemimodule> {
    let add = CayleyTable::from_rows(&raw.add)
        .ok_or_else(|| Error::Shape("addition table is not square".into()))?;
    let m = add.order();
    if raw.action.len() != base.order() {
        return Err(Error::Shape(format!(
            "action table has {} rows but the semiring has order {}",
            raw.action.len(),
            base.order()
        )));
    }
    if let Some(r) = raw.action.iter().position(|row| row.len() != m) {
        return Err(Error::Shape(format!(
            "action row {r} does not have {m} entries"
        )));
    }
    let action = raw.action.iter().flatten().copied().collect();
    FiniteSemimodule::from_parts(base.clone(), add, action)
}

impl FiniteSemimodule {
    pub(crate) fn from_parts(
        base: Arc<FiniteSemiring>,
        add: CayleyTable,
        action: Vec<usize>,
    ) -> Result<Self> {
        let m = add.order();
        check_order(m)?;
        check_shape(&add, m, "addition")?;
        let n = base.order();
        if action.len() != n * m {
            return Err(Error::Shape("action table has the wrong size".into()));
        }
        if let Some(pos) = action.iter().position(|&x| x >= m) {
            return Err(Error::Shape(format!(
                "action entry ({}, {}) is outside the carrier",
                pos / m,
                pos % m
            )));
        }
        check_commutative_monoid(&add)?;
        let module = FiniteSemimodule { base, add, action };
        module.check_action_axioms()?;
        Ok(module)
    }

    fn check_action_axioms(&self) -> Result<()> {
        let s_ring = &*self.base;
        let n = s_ring.order();
        let m = self.order();
        let fail = |axiom, witness: Vec<usize>| Err(Error::ActionAxiomFailure { axiom, witness });
        for s in 0..n {
            for t in 0..n {
                for x in 0..m {
                    if self.act(s_ring.mul(s, t), x) != self.act(s, self.act(t, x)) {
                        return fail(ActionAxiom::Associative, vec![s, t, x]);
                    }
                }
            }
        }
        for s in 0..n {
            for x in 0..m {
                for y in 0..m {
                    if self.act(s, self.add(x, y)) != self.add(self.act(s, x), self.act(s, y)) {
                        return fail(ActionAxiom::DistributesOverElements, vec![s, x, y]);
                    }
                }
            }
        }
        for s in 0..n {
            for t in 0..n {
                for x in 0..m {
                    if self.act(s_ring.add(s, t), x) != self.add(self.act(s, x), self.act(t, x)) {
                        return fail(ActionAxiom::DistributesOverScalars, vec![s, t, x]);
                    }
                }
            }
        }
        for x in 0..m {
            if self.act(s_ring.one(), x) != x {
                return fail(ActionAxiom::Unital, vec![x]);
            }
        }
        for s in 0..n {
            if self.act(s, 0) != 0 {
                return fail(ActionAxiom::Zero, vec![s, 0]);
            }
        }
        for x in 0..m {
            if self.act(0, x) != 0 {
                return fail(ActionAxiom::Zero, vec![0, x]);
            }
        }
        Ok(())
    }

    pub fn from_fn(
        base: &Arc<FiniteSemiring>,
        order: usize,
        add: impl FnMut(usize, usize) -> usize,
        mut act: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let add = CayleyTable::from_fn(order, add);
        let mut action = Vec::with_capacity(base.order() * order);
        for s in 0..base.order() {
            for x in 0..order {
                action.push(act(s, x));
            }
        }
        Self::from_parts(base.clone(), add, action)
    }

    /// The regular left semimodule `S` acting on itself by left multiplication.
    pub fn regular(base: &Arc<FiniteSemiring>) -> Self {
        let n = base.order();
        let action = (0..n)
            .flat_map(|s| (0..n).map(move |x| (s, x)))
            .map(|(s, x)| base.mul(s, x))
            .collect();
        FiniteSemimodule {
            base: base.clone(),
            add: base.add_table().clone(),
            action,
        }
    }

    /// The zero semimodule `{0}`.
    pub fn trivial(base: &Arc<FiniteSemiring>) -> Self {
        FiniteSemimodule {
            base: base.clone(),
            add: CayleyTable::from_fn(1, |_, _| 0),
            action: vec![0; base.order()],
        }
    }

    pub fn base(&self) -> &Arc<FiniteSemiring> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    /// Scalar action `s·x`.
    #[inline]
    pub fn act(&self, s: usize, x: usize) -> usize {
        self.action[s * self.order() + x]
    }

    pub fn add_table(&self) -> &CayleyTable {
        &self.add
    }

    /// The row `x ↦ s·x`.
    pub fn action_row(&self, s: usize) -> &[usize] {
        let m = self.order();
        &self.action[s * m..(s + 1) * m]
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        (0..self.base.order())
            .map(|s| self.action_row(s).to_vec())
            .collect()
    }

    pub fn to_raw(&self) -> RawSemimodule {
        RawSemimodule {
            add: self.add.rows(),
            action: self.action_rows(),
        }
    }

    /// Serialized tables (order, addition, action); iso-class representatives minimise this.
    pub fn table_key(&self) -> Vec<usize> {
        let mut key = vec![self.order()];
        key.extend_from_slice(self.add.cells());
        key.extend_from_slice(&self.action);
        key
    }

    pub fn same_base(&self, other: &FiniteSemimodule) -> bool {
        Arc::ptr_eq(&self.base, &other.base) || self.base == other.base
    }

    pub fn is_nonzero(&self) -> bool {
        self.order() > 1
    }

    /// True when `mask` contains 0 and is closed under addition and the action.
    pub fn is_subsemimodule(&self, mask: ElementSet) -> bool {
        if !mask.contains(0) || mask.0 & !ElementSet::full(self.order()).0 != 0 {
            return false;
        }
        for x in mask.iter() {
            for y in mask.iter() {
                if !mask.contains(self.add(x, y)) {
                    return false;
                }
            }
            for s in 0..self.base.order() {
                if !mask.contains(self.act(s, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// Materializes a subsemimodule. The returned embedding lists the ambient
    /// index of each element of the subsemimodule, in ascending order.
    pub fn submodule(&self, mask: ElementSet) -> Result<(FiniteSemimodule, Vec<usize>)> {
        if !self.is_subsemimodule(mask) {
            return Err(Error::NotASubsemimodule { mask: mask.0 });
        }
        let embedding = mask.to_vec();
        let mut position = vec![usize::MAX; self.order()];
        for (i, &x) in embedding.iter().enumerate() {
            position[x] = i;
        }
        let k = embedding.len();
        let add = CayleyTable::from_fn(k, |a, b| position[self.add(embedding[a], embedding[b])]);
        let action = (0..self.base.order())
            .flat_map(|s| embedding.iter().map(move |&x| (s, x)))
            .map(|(s, x)| position[self.act(s, x)])
            .collect();
        Ok((
            FiniteSemimodule {
                base: self.base.clone(),
                add,
                action,
            },
            embedding,
        ))
    }

    /// Same tables viewed over an equal semiring held by another `Arc`.
    pub fn rebase(&self, base: &Arc<FiniteSemiring>) -> Result<Self> {
        if *self.base != **base {
            return Err(Error::BaseMismatch);
        }
        Ok(FiniteSemimodule {
            base: base.clone(),
            add: self.add.clone(),
            action: self.action.clone(),
        })
    }

    pub(crate) fn from_validated_parts(
        base: Arc<FiniteSemiring>,
        add: CayleyTable,
        action: Vec<usize>,
    ) -> Self {
        debug_assert!(Self::from_parts(base.clone(), add.clone(), action.clone()).is_ok());
        FiniteSemimodule { base, add, action }
    }
}
