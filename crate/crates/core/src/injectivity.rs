//! Bounded injectivity verdicts and the derived CI and V verdicts.
//!
//! `M` is tested against every triple `(B, A, f)` with `B` a semimodule of
//! order at most the bound, `A` a proper nonzero subsemimodule of `B` and
//! `f: A → M` a homomorphism; `f` must extend to `B`. Triples are visited by
//! `B` (census order), then mask of `A`, then `f` lexicographically, and the
//! first non-extendable one is the witness.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FiniteSemimodule, FiniteSemiring, Structure};
use crate::congruence::closed_subsets;
use crate::constructions::{known_witness, ExtensionProblem, KnownWitness};
use crate::error::{Error, Result};
use crate::hom::{
    are_isomorphic, enumerate_cyclic_semimodules, enumerate_semimodules, find_extension,
    is_essential_extension, is_homomorphism, structure_maps, CensusFilter, CENSUS_MAX_ORDER,
};
use crate::limits::Limits;
use crate::table::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictStatus {
    /// No failing triple among all ambients up to the bound.
    Holds,
    RefutedWithWitness,
    /// No failing triple among the ambients that could be enumerated, but
    /// the bound exceeds what the census reaches.
    InconclusiveAtBound,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Holds => "holds-at-bound",
            VerdictStatus::RefutedWithWitness => "refuted",
            VerdictStatus::InconclusiveAtBound => "inconclusive-at-bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub witness: Option<ExtensionProblem>,
    pub bound: usize,
    /// Number of ambient semimodules inspected.
    pub ambients: usize,
}

/// The ambients a verdict at `bound` is checked against: the census up to
/// `min(bound, CENSUS_MAX_ORDER)`, then every catalogued witness ambient over
/// the same semiring whose order lies above the census and within the bound.
#[derive(Debug, Clone)]
pub struct AmbientSet {
    pub bound: usize,
    pub modules: Vec<FiniteSemimodule>,
    /// True when every semimodule up to `bound` is represented.
    pub complete: bool,
}

impl AmbientSet {
    pub fn new(s: &Arc<FiniteSemiring>, bound: usize, limits: &Limits) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidArgument("bound must be positive".into()));
        }
        let reach = bound.min(CENSUS_MAX_ORDER);
        let mut modules = enumerate_semimodules(s, reach, CensusFilter::All, limits)?;
        let mut extra: Vec<FiniteSemimodule> = KnownWitness::ALL
            .iter()
            .map(|&w| known_witness(w).ambient)
            .filter(|b| b.order() > reach && b.order() <= bound && **b.base() == **s)
            .map(|b| b.rebase(s))
            .collect::<Result<_>>()?;
        extra.sort_by_key(|b| b.table_key());
        modules.extend(extra);
        Ok(AmbientSet {
            bound,
            modules,
            complete: bound <= CENSUS_MAX_ORDER,
        })
    }

    /// Exactly the given ambients, treated as exhaustive for the verdict.
    pub fn witness_mode(bound: usize, modules: Vec<FiniteSemimodule>) -> Self {
        AmbientSet {
            bound,
            modules,
            complete: true,
        }
    }
}

/// First `(mask, f)` in order such that `f: A → M` does not extend to `B`.
fn first_failure(b: &FiniteSemimodule, m: &FiniteSemimodule) -> Option<ExtensionProblem> {
    let full = ElementSet::full(b.order());
    let zero = ElementSet::singleton(0);
    let masks: Vec<ElementSet> = closed_subsets(&b.algebra())
        .into_iter()
        .filter(|&k| k != zero && k != full)
        .collect();
    if masks.is_empty() {
        return None;
    }
    let extensions = structure_maps(b, m);
    for mask in masks {
        let elems = mask.to_vec();
        let restricted: HashSet<Vec<usize>> = extensions
            .iter()
            .map(|h| elems.iter().map(|&x| h.map[x]).collect())
            .collect();
        let (sub, _) = b.submodule(mask).expect("closed subset");
        if let Some(f) = structure_maps(&sub, m)
            .into_iter()
            .find(|f| !restricted.contains(&f.map))
        {
            return Some(ExtensionProblem {
                ambient: b.clone(),
                subobject: mask,
                map: f.map,
                target: m.clone(),
            });
        }
    }
    None
}

/// Tests `m` against a prepared ambient set.
pub fn verdict_against(m: &FiniteSemimodule, ambients: &AmbientSet) -> Result<Verdict> {
    if ambients.modules.iter().any(|b| !b.same_base(m)) {
        return Err(Error::BaseMismatch);
    }
    let witness = ambients
        .modules
        .par_iter()
        .find_map_first(|b| first_failure(b, m));
    let status = match (&witness, ambients.complete) {
        (Some(_), _) => VerdictStatus::RefutedWithWitness,
        (None, true) => VerdictStatus::Holds,
        (None, false) => VerdictStatus::InconclusiveAtBound,
    };
    Ok(Verdict {
        status,
        witness,
        bound: ambients.bound,
        ambients: ambients.modules.len(),
    })
}

pub fn injectivity_verdict(m: &FiniteSemimodule, bound: usize, limits: &Limits) -> Result<Verdict> {
    verdict_against(m, &AmbientSet::new(m.base(), bound, limits)?)
}

/// Tests `m` only against the given ambients.
pub fn injectivity_verdict_witness_mode(
    m: &FiniteSemimodule,
    ambients: Vec<FiniteSemimodule>,
) -> Result<Verdict> {
    let bound = ambients.iter().map(|b| b.order()).max().unwrap_or(1);
    verdict_against(m, &AmbientSet::witness_mode(bound, ambients))
}

/// True when the witness re-validates: `A` is a subsemimodule of `B`, `f` is
/// a homomorphism `A → M`, and the extension search finds nothing.
pub fn witness_is_valid(w: &ExtensionProblem) -> bool {
    let Ok((sub, _)) = w.ambient.submodule(w.subobject) else {
        return false;
    };
    is_homomorphism(&sub, &w.target, &w.map)
        && matches!(
            find_extension(&w.ambient, w.subobject, &w.map, &w.target),
            Ok(None)
        )
}

/// Largest number of completions the brute-force scan will try.
pub const BRUTE_FORCE_MAX_COMPLETIONS: u64 = 1 << 24;

/// Tries every completion of `f` to a map `B → M` and reports whether one is
/// a homomorphism; `None` when there are too many completions.
pub fn brute_force_extension_exists(w: &ExtensionProblem) -> Option<bool> {
    let free: Vec<usize> = (0..w.ambient.order())
        .filter(|&x| !w.subobject.contains(x))
        .collect();
    let m = w.target.order() as u64;
    let total = m
        .checked_pow(free.len() as u32)
        .filter(|&t| t <= BRUTE_FORCE_MAX_COMPLETIONS)?;
    let mut map = vec![0; w.ambient.order()];
    for (x, &y) in w.subobject.iter().zip(&w.map) {
        map[x] = y;
    }
    for code in 0..total {
        let mut c = code;
        for &x in &free {
            map[x] = (c % m) as usize;
            c /= m;
        }
        if is_homomorphism(&w.ambient, &w.target, &map) {
            return Some(true);
        }
    }
    Some(false)
}

/// A verdict for each semimodule of a family, and the aggregate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    /// The first refutation, else inconclusive if any part is, else holds.
    pub verdict: Verdict,
    pub members: Vec<(FiniteSemimodule, Verdict)>,
}

fn aggregate(bound: usize, members: Vec<(FiniteSemimodule, Verdict)>) -> FamilyVerdict {
    let pick = |status| {
        members
            .iter()
            .find(|(_, v)| v.status == status)
            .map(|(_, v)| v.clone())
    };
    let verdict = pick(VerdictStatus::RefutedWithWitness)
        .or_else(|| pick(VerdictStatus::InconclusiveAtBound))
        .unwrap_or(Verdict {
            status: VerdictStatus::Holds,
            witness: None,
            bound,
            ambients: members.first().map_or(0, |(_, v)| v.ambients),
        });
    FamilyVerdict { verdict, members }
}

/// Injectivity of every cyclic semimodule at `bound`.
pub fn ci_verdict(s: &Arc<FiniteSemiring>, bound: usize, limits: &Limits) -> Result<FamilyVerdict> {
    let cyclic = enumerate_cyclic_semimodules(s, limits)?;
    let ambients = AmbientSet::new(s, bound, limits)?;
    let members = cyclic
        .into_iter()
        .map(|c| verdict_against(&c, &ambients).map(|v| (c, v)))
        .collect::<Result<_>>()?;
    Ok(aggregate(bound, members))
}

/// [`ci_verdict`] against explicitly supplied ambients only.
pub fn ci_verdict_witness_mode(
    s: &Arc<FiniteSemiring>,
    ambients: Vec<FiniteSemimodule>,
    limits: &Limits,
) -> Result<FamilyVerdict> {
    let cyclic = enumerate_cyclic_semimodules(s, limits)?;
    let bound = ambients.iter().map(|b| b.order()).max().unwrap_or(1);
    let set = AmbientSet::witness_mode(bound, ambients);
    let members = cyclic
        .into_iter()
        .map(|c| verdict_against(&c, &set).map(|v| (c, v)))
        .collect::<Result<_>>()?;
    Ok(aggregate(bound, members))
}

/// Proper essential extensions `M ⊊ N` with `N` among `ambients`, counted
/// over every subsemimodule of `N` isomorphic to `M`.
pub fn count_essential_extensions(
    m: &FiniteSemimodule,
    ambients: &[FiniteSemimodule],
    limits: &Limits,
) -> Result<usize> {
    let mut count = 0;
    for n in ambients.iter().filter(|n| n.order() > m.order()) {
        for mask in closed_subsets(&n.algebra()) {
            if mask.len() != m.order() {
                continue;
            }
            let (sub, _) = n.submodule(mask)?;
            if are_isomorphic(&sub, m)?.is_isomorphic()
                && is_essential_extension(n, mask, limits)?.essential
            {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Injectivity of every simple semimodule of order at most `simple_bound`,
/// tested at `ext_bound`.
///
/// Cross-check: an injective semimodule is a retract of each extension, and
/// the kernel of the retraction separates it, so no simple semimodule that
/// holds at the bound may have a proper essential extension among the
/// ambients. A violation is reported as [`Error::CrossCheckMismatch`].
pub fn v_verdict(
    s: &Arc<FiniteSemiring>,
    simple_bound: usize,
    ext_bound: usize,
    limits: &Limits,
) -> Result<FamilyVerdict> {
    let simple = enumerate_semimodules(
        s,
        simple_bound.min(CENSUS_MAX_ORDER),
        CensusFilter::Simple,
        limits,
    )?;
    let ambients = AmbientSet::new(s, ext_bound, limits)?;
    let mut members = Vec::new();
    for m in simple {
        let v = verdict_against(&m, &ambients)?;
        if v.status == VerdictStatus::Holds {
            let essential = count_essential_extensions(&m, &ambients.modules, limits)?;
            if essential > 0 {
                return Err(Error::CrossCheckMismatch(format!(
                    "a simple semimodule of order {} holds at bound {} but has {essential} proper essential extensions",
                    m.order(),
                    ext_bound
                )));
            }
        }
        members.push((m, v));
    }
    let mut out = aggregate(ext_bound, members);
    if simple_bound > CENSUS_MAX_ORDER && out.verdict.status == VerdictStatus::Holds {
        out.verdict.status = VerdictStatus::InconclusiveAtBound;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::chain_semiring;

    #[test]
    fn boolean_semifield_is_injective_at_small_bound() {
        let b = Arc::new(chain_semiring(1).unwrap());
        let v = injectivity_verdict(&FiniteSemimodule::regular(&b), 3, &Limits::default()).unwrap();
        assert_eq!(v.status, VerdictStatus::Holds);
        let t = injectivity_verdict(&FiniteSemimodule::trivial(&b), 3, &Limits::default()).unwrap();
        assert_eq!(t.status, VerdictStatus::Holds);
    }

    #[test]
    fn known_witnesses_revalidate() {
        for name in KnownWitness::ALL {
            let w = known_witness(name);
            assert!(witness_is_valid(&w));
            assert_eq!(brute_force_extension_exists(&w), Some(false));
        }
    }
}
