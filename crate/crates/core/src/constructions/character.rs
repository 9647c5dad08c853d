use std::sync::Arc;

use crate::algebra::FiniteSemimodule;
use crate::error::{Error, Result};
use crate::table::{ElementSet, MAX_ORDER};

/// Largest semimodule whose characters are enumerated (subsets of the nonzero part).
pub const CHARACTER_MAX_ORDER: usize = 20;

/// `2^M`: the monoid maps `M → {0, 1}` into the two-element semilattice,
/// added pointwise, with `(s·f)(m) = f(sm)`.
///
/// A map is stored as its support, and the carrier is sorted by support mask.
/// Needs `S` commutative and `S`, `M` additively idempotent.
pub fn character_semimodule(m: &FiniteSemimodule) -> Result<FiniteSemimodule> {
    let s = m.base();
    if let Some(x) = (0..s.order()).find(|&x| s.add(x, x) != x) {
        return Err(Error::NotAdditivelyIdempotent { element: x });
    }
    if let Some(x) = (0..m.order()).find(|&x| m.add(x, x) != x) {
        return Err(Error::NotAdditivelyIdempotent { element: x });
    }
    if let Some((a, b)) = (0..s.order())
        .flat_map(|a| (0..s.order()).map(move |b| (a, b)))
        .find(|&(a, b)| s.mul(a, b) != s.mul(b, a))
    {
        return Err(Error::NonCommutativeMul { a, b });
    }
    if m.order() > CHARACTER_MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "character semimodule source",
            size: m.order(),
            cap: CHARACTER_MAX_ORDER,
        });
    }
    let n = m.order();
    let is_character = |u: ElementSet| {
        (0..n).all(|a| (a..n).all(|b| u.contains(m.add(a, b)) == (u.contains(a) || u.contains(b))))
    };
    // supports never contain 0, so they are even masks
    let characters: Vec<ElementSet> = (0..1u64 << (n - 1))
        .map(|k| ElementSet(k << 1))
        .filter(|&u| is_character(u))
        .collect();
    if characters.len() > MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "character semimodule order",
            size: characters.len(),
            cap: MAX_ORDER,
        });
    }
    let index = |u: ElementSet| {
        characters
            .binary_search(&u)
            .expect("closed under the operations")
    };
    FiniteSemimodule::from_fn(
        &Arc::clone(s),
        characters.len(),
        |f, g| index(characters[f].union(characters[g])),
        |t, f| {
            index(
                (0..n)
                    .filter(|&x| characters[f].contains(m.act(t, x)))
                    .collect(),
            )
        },
    )
}
