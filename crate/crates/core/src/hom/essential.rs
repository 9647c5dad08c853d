use serde::Serialize;

use crate::algebra::{FiniteSemimodule, Structure};
use crate::congruence::closure::close_pairs;
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::table::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EssentialReport {
    pub essential: bool,
    /// A nontrivial congruence of `N` that is diagonal on `M`.
    #[serde(skip)]
    pub witness: Option<Congruence>,
}

/// `M ⊆ N` is essential iff every congruence of `N` whose restriction to `M`
/// is diagonal is itself diagonal.
///
/// Any such nontrivial congruence contains a principal one `θ(a, b)` with the
/// same property, so only the principal congruences are inspected; the
/// witness is the first in `(a, b)` order.
pub fn is_essential_extension(
    n: &FiniteSemimodule,
    m: ElementSet,
    limits: &Limits,
) -> Result<EssentialReport> {
    if !n.is_subsemimodule(m) {
        return Err(Error::NotASubsemimodule { mask: m.0 });
    }
    limits.check("essential extension carrier", n.order())?;
    let alg = n.algebra();
    let translations = alg.translations();
    let k = n.order();
    for a in 0..k {
        for b in a + 1..k {
            let theta = close_pairs(k, &translations, &[(a, b)]);
            if theta.separates(m) {
                return Ok(EssentialReport {
                    essential: false,
                    witness: Some(theta),
                });
            }
        }
    }
    Ok(EssentialReport {
        essential: true,
        witness: None,
    })
}
