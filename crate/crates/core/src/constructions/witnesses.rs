//! Two explicit non-extension witnesses: a 5-element chain over `B₄` and a
//! 9-element semimodule over `B(3,1)`.

use std::sync::Arc;

use crate::algebra::{FiniteSemimodule, FiniteSemiring};
use crate::constructions::named::{b31, chain_semiring};
use crate::table::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnownWitness {
    /// `M = {0<a<b<c<d}` over `B₄` and `φ: {0,b,c,d} → B₄`, `b,c,d ↦ 1,2,3`.
    ChainOverB4,
    /// `M = {0,1,2,a₁,a₂,a₃,b₁,b₂,b₃}` over `B(3,1)` and the identity of `B(3,1) ⊆ M`.
    NineElementOverB31,
}

impl KnownWitness {
    pub const ALL: [KnownWitness; 2] =
        [KnownWitness::ChainOverB4, KnownWitness::NineElementOverB31];

    pub fn name(self) -> &'static str {
        match self {
            KnownWitness::ChainOverB4 => "chain-over-b4",
            KnownWitness::NineElementOverB31 => "nine-element-over-b31",
        }
    }
}

/// A subsemimodule `A ⊆ B` and a homomorphism `A → target` that does not
/// extend to `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionProblem {
    pub ambient: FiniteSemimodule,
    pub subobject: ElementSet,
    /// Images of the elements of `subobject`, ascending.
    pub map: Vec<usize>,
    pub target: FiniteSemimodule,
}

/// `0 < a < b < c < d` as indices 0..5, addition = join, `0m = 0`, `1m = m`,
/// `2a = a`, `2b = c`, `2c = c`, `2d = d`, `3m = d` for `m ≠ 0`.
pub fn chain_over_b4(b4: &Arc<FiniteSemiring>) -> FiniteSemimodule {
    let two = [0, 1, 3, 3, 4];
    FiniteSemimodule::from_fn(
        b4,
        5,
        |x, y| x.max(y),
        |s, m| match (s, m) {
            (_, 0) | (0, _) => 0,
            (1, m) => m,
            (2, m) => two[m],
            _ => 4,
        },
    )
    .expect("the chain semimodule over B4 is valid")
}

/// Carrier `0, 1, 2, a₁, a₂, a₃, b₁, b₂, b₃` as indices 0..9.
///
/// `aᵢ+aᵢ = aᵢ+bᵢ = bᵢ+bᵢ = bᵢ`, `aᵢ+aⱼ = 1` for `i ≠ j`, every other sum
/// of nonzero elements is 2, and `2m = m + m`.
pub fn nine_element_over_b31(s: &Arc<FiniteSemiring>) -> FiniteSemimodule {
    fn sum(x: usize, y: usize) -> usize {
        let a = |x: usize| (3..6).contains(&x);
        let b = |x: usize| (6..9).contains(&x);
        let idx = |x: usize| (x - 3) % 3;
        match (x, y) {
            (0, y) => y,
            (x, 0) => x,
            (x, y) if (a(x) || b(x)) && (a(y) || b(y)) && idx(x) == idx(y) => 6 + idx(x),
            (x, y) if a(x) && a(y) => 1,
            _ => 2,
        }
    }
    FiniteSemimodule::from_fn(s, 9, sum, |t, m| match t {
        0 => 0,
        1 => m,
        _ => sum(m, m),
    })
    .expect("the nine-element semimodule over B(3,1) is valid")
}

pub fn known_witness(name: KnownWitness) -> ExtensionProblem {
    match name {
        KnownWitness::ChainOverB4 => {
            let b4 = Arc::new(chain_semiring(3).expect("B4"));
            ExtensionProblem {
                ambient: chain_over_b4(&b4),
                subobject: ElementSet(0b11101),
                map: vec![0, 1, 2, 3],
                target: FiniteSemimodule::regular(&b4),
            }
        }
        KnownWitness::NineElementOverB31 => {
            let s = Arc::new(b31());
            ExtensionProblem {
                ambient: nine_element_over_b31(&s),
                subobject: ElementSet(0b111),
                map: vec![0, 1, 2],
                target: FiniteSemimodule::regular(&s),
            }
        }
    }
}
