use crate::error::{Error, Op, Result, Side};
use crate::table::{CayleyTable, MAX_ORDER};

/// Unvalidated Cayley data for a semiring. Zero is index 0 by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSemiring {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub one: usize,
}

/// A validated finite semiring on the carrier `0..order` with zero at index 0.
///
/// Values are immutable once constructed; every constructor goes through
/// [`validate_semiring`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemiring {
    add: CayleyTable,
    mul: CayleyTable,
    one: usize,
}

impl std::fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("one", &self.one)
            .field("add", &self.add)
            .field("mul", &self.mul)
            .finish()
    }
}

pub(crate) fn check_shape(table: &CayleyTable, order: usize, what: &str) -> Result<()> {
    if table.order() != order {
        return Err(Error::Shape(format!(
            "{what} table has order {} but {order} was expected",
            table.order()
        )));
    }
    if let Some(pos) = table.cells().iter().position(|&x| x >= order) {
        return Err(Error::Shape(format!(
            "{what} table entry ({}, {}) = {} is outside the carrier",
            pos / order,
            pos % order,
            table.cells()[pos]
        )));
    }
    Ok(())
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::Shape("carrier must be nonempty".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::Shape(format!(
            "order {order} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    Ok(())
}

pub(crate) fn check_identity(table: &CayleyTable, identity: usize, op: Op) -> Result<()> {
    for a in 0..table.order() {
        if table.get(identity, a) != a || table.get(a, identity) != a {
            return Err(Error::IdentityFailure { op, a });
        }
    }
    Ok(())
}

pub(crate) fn check_associative(table: &CayleyTable, op: Op) -> Result<()> {
    let n = table.order();
    for a in 0..n {
        for b in 0..n {
            let ab = table.get(a, b);
            for c in 0..n {
                if table.get(ab, c) != table.get(a, table.get(b, c)) {
                    return Err(Error::NonAssociative { op, a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Checks that `(0..n, table, 0)` is a commutative monoid.
pub(crate) fn check_commutative_monoid(table: &CayleyTable) -> Result<()> {
    check_identity(table, 0, Op::Add)?;
    let n = table.order();
    for a in 0..n {
        for b in a + 1..n {
            if table.get(a, b) != table.get(b, a) {
                return Err(Error::NonCommutativeAdd { a, b });
            }
        }
    }
    check_associative(table, Op::Add)
}

/// Validates raw tables, reporting the first violated axiom in lexicographic scan order.
pub fn validate_semiring(raw: &RawSemiring) -> Result<FiniteSemiring> {
    let add = CayleyTable::from_rows(&raw.add)
        .ok_or_else(|| Error::Shape("addition table is not square".into()))?;
    let mul = CayleyTable::from_rows(&raw.mul)
        .ok_or_else(|| Error::Shape("multiplication table is not square".into()))?;
    FiniteSemiring::from_tables(add, mul, raw.one)
}

impl FiniteSemiring {
    pub fn from_tables(add: CayleyTable, mul: CayleyTable, one: usize) -> Result<Self> {
        let n = add.order();
        check_order(n)?;
        check_shape(&add, n, "addition")?;
        check_shape(&mul, n, "multiplication")?;
        if one >= n {
            return Err(Error::Shape(format!("one = {one} is outside the carrier")));
        }
        check_commutative_monoid(&add)?;
        check_identity(&mul, one, Op::Mul)?;
        check_associative(&mul, Op::Mul)?;
        for s in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if mul.get(s, add.get(a, b)) != add.get(mul.get(s, a), mul.get(s, b)) {
                        return Err(Error::NotDistributive {
                            side: Side::Left,
                            s,
                            a,
                            b,
                        });
                    }
                }
            }
        }
        for s in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if mul.get(add.get(a, b), s) != add.get(mul.get(a, s), mul.get(b, s)) {
                        return Err(Error::NotDistributive {
                            side: Side::Right,
                            s,
                            a,
                            b,
                        });
                    }
                }
            }
        }
        for s in 0..n {
            if mul.get(0, s) != 0 || mul.get(s, 0) != 0 {
                return Err(Error::ZeroNotAbsorbing { s });
            }
        }
        Ok(FiniteSemiring { add, mul, one })
    }

    pub fn from_fn(
        order: usize,
        one: usize,
        add: impl FnMut(usize, usize) -> usize,
        mul: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        Self::from_tables(
            CayleyTable::from_fn(order, add),
            CayleyTable::from_fn(order, mul),
            one,
        )
    }

    /// The one-element semiring in which `0 = 1`.
    pub fn trivial() -> Self {
        FiniteSemiring {
            add: CayleyTable::from_fn(1, |_, _| 0),
            mul: CayleyTable::from_fn(1, |_, _| 0),
            one: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    pub fn add_table(&self) -> &CayleyTable {
        &self.add
    }

    pub fn mul_table(&self) -> &CayleyTable {
        &self.mul
    }

    pub fn to_raw(&self) -> RawSemiring {
        RawSemiring {
            add: self.add.rows(),
            mul: self.mul.rows(),
            one: self.one,
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.mul.is_commutative()
    }

    /// Additive multiple `k·a = a + ... + a` (k ≥ 1).
    pub fn multiple(&self, k: usize, a: usize) -> usize {
        let mut acc = a;
        for _ in 1..k {
            acc = self.add(acc, a);
        }
        acc
    }

    /// Applies a bijective relabelling `perm` (old index to new index) that fixes 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        Self::from_fn(
            n,
            perm[self.one],
            |a, b| perm[self.add(inv[a], inv[b])],
            |a, b| perm[self.mul(inv[a], inv[b])],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3_raw() -> RawSemiring {
        // B3: join on the chain 0<1<2, product 0 if a factor is 0, else join
        RawSemiring {
            add: vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]],
            mul: vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
            one: 1,
        }
    }

    #[test]
    fn b3_validates() {
        let s = validate_semiring(&b3_raw()).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.one(), 1);
        assert_eq!(s.mul(1, 2), 2);
    }

    #[test]
    fn zero_semiring_is_accepted() {
        let raw = RawSemiring {
            add: vec![vec![0]],
            mul: vec![vec![0]],
            one: 0,
        };
        assert_eq!(validate_semiring(&raw).unwrap(), FiniteSemiring::trivial());
    }

    #[test]
    fn altering_one_times_two_breaks_the_identity_first() {
        let mut raw = b3_raw();
        raw.mul[1][2] = 1;
        assert_eq!(
            validate_semiring(&raw),
            Err(Error::IdentityFailure { op: Op::Mul, a: 2 })
        );
    }

    #[test]
    fn altering_two_times_two_breaks_distributivity() {
        let mut raw = b3_raw();
        raw.mul[2][2] = 1;
        // 2*(1+2) = 1 but 2*1 + 2*2 = 2 + 1 = 2
        assert_eq!(
            validate_semiring(&raw),
            Err(Error::NotDistributive {
                side: Side::Left,
                s: 2,
                a: 1,
                b: 2
            })
        );
    }

    #[test]
    fn error_paths() {
        let mut raw = b3_raw();
        raw.add[0][1] = 2;
        assert_eq!(
            validate_semiring(&raw),
            Err(Error::IdentityFailure { op: Op::Add, a: 1 })
        );

        let raw = RawSemiring {
            add: vec![vec![0, 1], vec![1, 0]],
            mul: vec![vec![0, 1], vec![0, 1]],
            one: 1,
        };
        assert_eq!(
            validate_semiring(&raw),
            Err(Error::IdentityFailure { op: Op::Mul, a: 0 })
        );

        let ragged = RawSemiring {
            add: vec![vec![0, 1], vec![1]],
            mul: vec![vec![0, 0], vec![0, 1]],
            one: 1,
        };
        assert!(matches!(validate_semiring(&ragged), Err(Error::Shape(_))));

        // + is a non-commutative monoid: a+b = b for nonzero a, b
        let raw = RawSemiring {
            add: vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]],
            mul: vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
            one: 1,
        };
        assert_eq!(
            validate_semiring(&raw),
            Err(Error::NonCommutativeAdd { a: 1, b: 2 })
        );
    }
}
