use std::sync::Arc;

use crate::algebra::{FiniteSemimodule, FiniteSemiring, Structure};
use crate::congruence::closure::compatibility_witness;
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// A quotient object with its projection `x ↦ block of x`. Blocks appear in
/// canonical order, so the block of 0 is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient<T> {
    pub object: T,
    pub projection: Vec<usize>,
}

fn check<S: Structure + ?Sized>(x: &S, theta: &Congruence) -> Result<Vec<usize>> {
    if theta.carrier() != x.order() {
        return Err(Error::InvalidArgument(format!(
            "partition of {} elements applied to a carrier of {}",
            theta.carrier(),
            x.order()
        )));
    }
    if let Some(w) = compatibility_witness(&x.algebra(), theta) {
        return Err(Error::IncompatiblePartition(w));
    }
    let reps = theta.blocks().iter().map(|b| b[0]).collect();
    Ok(reps)
}

pub fn quotient_semiring(
    s: &FiniteSemiring,
    theta: &Congruence,
) -> Result<Quotient<FiniteSemiring>> {
    let reps = check(s, theta)?;
    let k = reps.len();
    let object = FiniteSemiring::from_fn(
        k,
        theta.label(s.one()),
        |a, b| theta.label(s.add(reps[a], reps[b])),
        |a, b| theta.label(s.mul(reps[a], reps[b])),
    )?;
    Ok(Quotient {
        object,
        projection: theta.labels().to_vec(),
    })
}

pub fn quotient_semimodule(
    m: &FiniteSemimodule,
    theta: &Congruence,
) -> Result<Quotient<FiniteSemimodule>> {
    let reps = check(m, theta)?;
    let k = reps.len();
    let add = CayleyTable::from_fn(k, |a, b| theta.label(m.add(reps[a], reps[b])));
    let action = (0..m.base().order())
        .flat_map(|s| reps.iter().map(move |&x| theta.label(m.act(s, x))))
        .collect();
    Ok(Quotient {
        object: FiniteSemimodule::from_validated_parts(Arc::clone(m.base()), add, action),
        projection: theta.labels().to_vec(),
    })
}

/// Objects that can be factored by a compatible partition.
pub trait Quotientable: Structure + Sized {
    fn quotient(&self, theta: &Congruence) -> Result<Quotient<Self>>;
}

impl Quotientable for FiniteSemiring {
    fn quotient(&self, theta: &Congruence) -> Result<Quotient<Self>> {
        quotient_semiring(self, theta)
    }
}

impl Quotientable for FiniteSemimodule {
    fn quotient(&self, theta: &Congruence) -> Result<Quotient<Self>> {
        quotient_semimodule(self, theta)
    }
}

pub fn quotient<T: Quotientable>(x: &T, theta: &Congruence) -> Result<Quotient<T>> {
    x.quotient(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::chain_semiring;

    #[test]
    fn b3_modulo_top_pair() {
        let b3 = Arc::new(chain_semiring(2).unwrap());
        let reg = FiniteSemimodule::regular(&b3);
        let theta = Congruence::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
        let q = quotient(&reg, &theta).unwrap();
        assert_eq!(q.object.order(), 2);
        assert_eq!(q.projection, vec![0, 1, 1]);
        assert_eq!(
            q.object.action_rows(),
            vec![vec![0, 0], vec![0, 1], vec![0, 1]]
        );
        assert_eq!(
            quotient(&reg, &Congruence::universal(3))
                .unwrap()
                .object
                .order(),
            1
        );
        assert_eq!(
            quotient(&reg, &Congruence::diagonal(3)).unwrap().object,
            reg
        );
    }

    #[test]
    fn incompatible_partitions_are_rejected() {
        let b3 = chain_semiring(2).unwrap();
        let theta = Congruence::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(
            quotient(&b3, &theta),
            Err(Error::IncompatiblePartition(_))
        ));
    }
}
