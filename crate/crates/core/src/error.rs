use std::fmt;

use thiserror::Error;

/// Binary operation of a semiring or semimodule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Add,
    Mul,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Add => f.write_str("+"),
            Op::Mul => f.write_str("*"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// The five left-semimodule identities, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionAxiom {
    /// `(ss')m = s(s'm)`
    Associative,
    /// `s(m+m') = sm + sm'`
    DistributesOverElements,
    /// `(s+s')m = sm + s'm`
    DistributesOverScalars,
    /// `1m = m`
    Unital,
    /// `s0 = 0 = 0m`
    Zero,
}

impl ActionAxiom {
    pub fn number(self) -> u8 {
        match self {
            ActionAxiom::Associative => 1,
            ActionAxiom::DistributesOverElements => 2,
            ActionAxiom::DistributesOverScalars => 3,
            ActionAxiom::Unital => 4,
            ActionAxiom::Zero => 5,
        }
    }
}

impl fmt::Display for ActionAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ActionAxiom::Associative => "(ss')m = s(s'm)",
            ActionAxiom::DistributesOverElements => "s(m+m') = sm+sm'",
            ActionAxiom::DistributesOverScalars => "(s+s')m = sm+s'm",
            ActionAxiom::Unital => "1m = m",
            ActionAxiom::Zero => "s0 = 0 = 0m",
        };
        write!(f, "axiom {} [{}]", self.number(), text)
    }
}

/// A related pair whose images under some translation are not related.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompatibilityWitness {
    pub a: usize,
    pub b: usize,
    pub translation: String,
    pub images: (usize, usize),
}

impl fmt::Display for CompatibilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ~ {} but {} sends them to unrelated {} and {}",
            self.a, self.b, self.translation, self.images.0, self.images.1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("{op} is not associative at ({a}, {b}, {c})")]
    NonAssociative {
        op: Op,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("addition is not commutative at ({a}, {b})")]
    NonCommutativeAdd { a: usize, b: usize },
    #[error("multiplication does not distribute from the {side} at (s={s}, a={a}, b={b})")]
    NotDistributive {
        side: Side,
        s: usize,
        a: usize,
        b: usize,
    },
    #[error("zero is not multiplicatively absorbing at {s}")]
    ZeroNotAbsorbing { s: usize },
    #[error("identity of {op} fails at {a}")]
    IdentityFailure { op: Op, a: usize },
    #[error("{axiom} fails at {witness:?}")]
    ActionAxiomFailure {
        axiom: ActionAxiom,
        witness: Vec<usize>,
    },
    #[error("element {element} has no additive inverse in the regular sense")]
    NotAdditivelyRegular { element: usize },
    #[error("element {element} is not additively idempotent")]
    NotAdditivelyIdempotent { element: usize },
    #[error("multiplication is not commutative at ({a}, {b})")]
    NonCommutativeMul { a: usize, b: usize },
    #[error("element {element} has no additive inverse, so this is not a ring")]
    NotARing { element: usize },
    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("partition is not compatible: {0}")]
    IncompatiblePartition(CompatibilityWitness),
    #[error("relation is not a congruence: {0}")]
    NotACongruence(CompatibilityWitness),
    #[error("subset {mask:#x} is not a subsemimodule")]
    NotASubsemimodule { mask: u64 },
    #[error("semimodules are over different semirings")]
    BaseMismatch,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheckMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
