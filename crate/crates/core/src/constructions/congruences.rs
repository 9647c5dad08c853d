//! The Bourne, diamond, annihilator (`σ`) and `ρ` congruences.

use crate::algebra::{FiniteSemimodule, FiniteSemiring, Structure};
use crate::congruence::closure::compatibility_witness;
use crate::congruence::partition::Dsu;
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::table::{CayleyTable, ElementSet};

/// Structures with an additive commutative monoid at index 0.
pub trait Additive: Structure {
    fn add_table(&self) -> &CayleyTable;
}

impl Additive for FiniteSemiring {
    fn add_table(&self) -> &CayleyTable {
        FiniteSemiring::add_table(self)
    }
}

impl Additive for FiniteSemimodule {
    fn add_table(&self) -> &CayleyTable {
        FiniteSemimodule::add_table(self)
    }
}

fn verified<S: Structure + ?Sized>(x: &S, theta: Congruence) -> Result<Congruence> {
    match compatibility_witness(&x.algebra(), &theta) {
        Some(w) => Err(Error::NotACongruence(w)),
        None => Ok(theta),
    }
}

/// `x ≡ y` iff `x + l = y + l'` for some `l, l' ∈ L`, transitively closed.
pub(crate) fn bourne_relation(add: &CayleyTable, l: ElementSet) -> Congruence {
    let n = add.order();
    let mut dsu = Dsu::new(n);
    let shifts: Vec<ElementSet> = (0..n)
        .map(|x| l.iter().map(|y| add.get(x, y)).collect())
        .collect();
    for x in 0..n {
        for y in x + 1..n {
            if !shifts[x].intersection(shifts[y]).is_empty() {
                dsu.union(x, y);
            }
        }
    }
    dsu.into_congruence()
}

/// The Bourne congruence of a subsemimodule `l`.
pub fn bourne_congruence(m: &FiniteSemimodule, l: ElementSet) -> Result<Congruence> {
    if !m.is_subsemimodule(l) {
        return Err(Error::NotASubsemimodule { mask: l.0 });
    }
    verified(m, bourne_relation(m.add_table(), l))
}

/// The Bourne congruence of a two-sided ideal, as a semiring congruence.
pub fn bourne_congruence_semiring(s: &FiniteSemiring, ideal: ElementSet) -> Result<Congruence> {
    let n = s.order();
    let is_ideal = ideal.contains(0)
        && ideal.iter().all(|a| {
            ideal.iter().all(|b| ideal.contains(s.add(a, b)))
                && (0..n).all(|r| ideal.contains(s.mul(r, a)) && ideal.contains(s.mul(a, r)))
        });
    if !is_ideal {
        return Err(Error::NotASubsemimodule { mask: ideal.0 });
    }
    verified(s, bourne_relation(s.add_table(), ideal))
}

/// `{k·x | k ≥ 1}`; finite because the orbit is eventually periodic.
pub fn additive_orbit(add: &CayleyTable, x: usize) -> ElementSet {
    let mut orbit = ElementSet::singleton(x);
    let mut acc = x;
    loop {
        acc = add.get(acc, x);
        if orbit.contains(acc) {
            return orbit;
        }
        orbit.insert(acc);
    }
}

/// `s ◇ s'` iff `ns ∈ s' + M` and `ms' ∈ s + M` for some `n, m ≥ 1`.
///
/// The raw relation is returned only if it is already an equivalence
/// compatible with every operation.
pub fn diamond_congruence<T: Additive + ?Sized>(x: &T) -> Result<Congruence> {
    let add = x.add_table();
    let n = add.order();
    let orbits: Vec<ElementSet> = (0..n).map(|a| additive_orbit(add, a)).collect();
    let cosets: Vec<ElementSet> = (0..n)
        .map(|a| add.row(a).iter().copied().collect())
        .collect();
    let related = |a: usize, b: usize| {
        !orbits[a].intersection(cosets[b]).is_empty()
            && !orbits[b].intersection(cosets[a]).is_empty()
    };
    let mut dsu = Dsu::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if related(a, b) {
                dsu.union(a, b);
            }
        }
    }
    let theta = dsu.into_congruence();
    for a in 0..n {
        for b in a + 1..n {
            if theta.related(a, b) && !related(a, b) {
                return Err(Error::InvalidArgument(format!(
                    "diamond relation is not transitive at ({a}, {b})"
                )));
            }
        }
    }
    verified(x, theta)
}

/// Left annihilator `(0 :_S m)`.
pub fn annihilator(m: &FiniteSemimodule, x: usize) -> ElementSet {
    (0..m.base().order())
        .filter(|&s| m.act(s, x) == 0)
        .collect()
}

/// `m σ m'` iff `(0 :_S m) = (0 :_S m')`.
pub fn sigma_congruence(m: &FiniteSemimodule) -> Result<Congruence> {
    let labels: Vec<u64> = (0..m.order()).map(|x| annihilator(m, x).0).collect();
    let labels: Vec<usize> = labels
        .iter()
        .map(|&l| labels.iter().position(|&k| k == l).unwrap())
        .collect();
    verified(m, Congruence::from_labels(&labels))
}

/// `a ρ b` iff `a = b` or both lie in `2 + T`, where `2 := 1 + 1`.
pub fn rho_congruence(t: &FiniteSemiring) -> Result<Congruence> {
    let two = t.add(t.one(), t.one());
    let shifted: ElementSet = (0..t.order()).map(|x| t.add(two, x)).collect();
    let first = shifted.iter().next();
    let labels: Vec<usize> = (0..t.order())
        .map(|x| match first {
            Some(f) if shifted.contains(x) => f,
            _ => x,
        })
        .collect();
    verified(t, Congruence::from_labels(&labels))
}
