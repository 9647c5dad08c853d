//! Semimodule homomorphisms: enumeration, extension along embeddings, retracts.

use serde::Serialize;

use crate::algebra::{FiniteSemimodule, Structure};
use crate::error::{Error, Result};
use crate::hom::engine::{preserves, Search};
use crate::limits::Limits;
use crate::table::ElementSet;

/// A total map between carriers; `map[x]` is the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn identity(n: usize) -> Self {
        Homomorphism {
            map: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        let image: ElementSet = self.map.iter().copied().collect();
        image.len() == self.map.len()
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&y| y == 0)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Homomorphism {
        Homomorphism {
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        }
    }
}

/// Exhaustive check of `f(0) = 0`, `f(a+b) = f(a)+f(b)` and every operation of the signature.
pub fn is_homomorphism<X: Structure + ?Sized, Y: Structure + ?Sized>(
    src: &X,
    dst: &Y,
    map: &[usize],
) -> bool {
    preserves(&src.algebra(), &dst.algebra(), map)
}

/// All structure-preserving maps, in lexicographic order.
pub fn structure_maps<X: Structure + ?Sized, Y: Structure + ?Sized>(
    src: &X,
    dst: &Y,
) -> Vec<Homomorphism> {
    let (a, b) = (src.algebra(), dst.algebra());
    match Search::new(&a, &b) {
        Some(mut search) => search
            .all()
            .into_iter()
            .map(|map| Homomorphism { map })
            .collect(),
        None => Vec::new(),
    }
}

fn check_bases(m: &FiniteSemimodule, n: &FiniteSemimodule) -> Result<()> {
    if m.same_base(n) {
        Ok(())
    } else {
        Err(Error::BaseMismatch)
    }
}

/// Every homomorphism `M → N`, in lexicographic order.
pub fn enumerate_homs(
    m: &FiniteSemimodule,
    n: &FiniteSemimodule,
    limits: &Limits,
) -> Result<Vec<Homomorphism>> {
    check_bases(m, n)?;
    limits.check("homomorphism source carrier", m.order())?;
    limits.check("homomorphism target carrier", n.order())?;
    Ok(structure_maps(m, n))
}

/// The lexicographically least homomorphism `B → M` that agrees with `f` on
/// the subsemimodule `a` of `b`. `f` lists the images of the elements of `a`
/// in ascending order.
pub fn find_extension(
    b: &FiniteSemimodule,
    a: ElementSet,
    f: &[usize],
    m: &FiniteSemimodule,
) -> Result<Option<Homomorphism>> {
    check_bases(b, m)?;
    let (sub, embedding) = b.submodule(a)?;
    if !is_homomorphism(&sub, m, f) {
        return Err(Error::InvalidArgument(
            "the partial map is not a homomorphism".into(),
        ));
    }
    let (src, dst) = (b.algebra(), m.algebra());
    let mut search = Search::new(&src, &dst).ok_or(Error::BaseMismatch)?;
    for (&x, &y) in embedding.iter().zip(f) {
        search.fix(x, y);
    }
    Ok(search.first().map(|map| Homomorphism { map }))
}

/// A homomorphism `T → K` restricting to the identity on the subsemimodule
/// `k`, with `K`'s elements numbered ascending as in [`FiniteSemimodule::submodule`].
pub fn is_retract(t: &FiniteSemimodule, k: ElementSet) -> Result<Option<Homomorphism>> {
    let (sub, _) = t.submodule(k)?;
    let identity: Vec<usize> = (0..sub.order()).collect();
    find_extension(t, k, &identity, &sub)
}
