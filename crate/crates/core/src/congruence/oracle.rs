//! Brute-force cross-check: test every partition of the carrier.

use crate::algebra::Structure;
use crate::congruence::closure::compatibility_witness;
use crate::congruence::partition::Congruence;
use crate::error::{Error, Result};

/// Largest carrier the all-partitions oracle accepts (Bell(8) = 4140).
pub const ORACLE_MAX_ORDER: usize = 8;

/// Every restricted growth string of length `n`, i.e. every partition of `0..n`.
pub fn all_partitions(n: usize) -> Vec<Congruence> {
    fn go(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Congruence>) {
        if labels.len() == n {
            out.push(Congruence::from_labels(labels));
            return;
        }
        let limit = if labels.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            labels.push(l);
            go(labels, max.max(l), n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// All congruences found by checking every partition directly, sorted canonically.
pub fn brute_force_congruences<S: Structure + ?Sized>(x: &S) -> Result<Vec<Congruence>> {
    let n = x.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "all-partitions oracle carrier",
            size: n,
            cap: ORACLE_MAX_ORDER,
        });
    }
    let alg = x.algebra();
    let mut out: Vec<Congruence> = all_partitions(n)
        .into_iter()
        .filter(|p| compatibility_witness(&alg, p).is_none())
        .collect();
    out.sort();
    Ok(out)
}
