//! A uniform operation-table view of semirings and semimodules.
//!
//! Congruence closure, subobject enumeration and homomorphism search only need
//! to know the carrier, a list of binary tables, a list of unary maps and a
//! list of constants. Semirings and semimodules both project onto that shape.

use std::borrow::Cow;

use crate::algebra::{FiniteSemimodule, FiniteSemiring};

#[derive(Debug, Clone)]
pub struct TableAlgebra<'a> {
    pub order: usize,
    /// `(symbol, n×n row-major table)`
    pub binary: Vec<(&'static str, Cow<'a, [usize]>)>,
    /// `(label, map)`; maps are aligned by label between source and target.
    pub unary: Vec<(String, Cow<'a, [usize]>)>,
    pub constants: Vec<usize>,
}

/// A single-argument polynomial map, used by congruence closure.
#[derive(Debug, Clone)]
pub struct Translation {
    pub label: String,
    pub map: Vec<usize>,
}

impl TableAlgebra<'_> {
    #[inline]
    pub fn binary_at(&self, op: usize, a: usize, b: usize) -> usize {
        self.binary[op].1[a * self.order + b]
    }

    /// Every translation `x ↦ x∘c`, `x ↦ c∘x` and every unary map.
    pub fn translations(&self) -> Vec<Translation> {
        let n = self.order;
        let mut out = Vec::new();
        for (op, (sym, table)) in self.binary.iter().enumerate() {
            let commutative = (0..n).all(|a| (0..n).all(|b| table[a * n + b] == table[b * n + a]));
            for c in 0..n {
                out.push(Translation {
                    label: format!("x -> x{sym}{c}"),
                    map: (0..n).map(|x| self.binary_at(op, x, c)).collect(),
                });
                if !commutative {
                    out.push(Translation {
                        label: format!("x -> {c}{sym}x"),
                        map: (0..n).map(|x| self.binary_at(op, c, x)).collect(),
                    });
                }
            }
        }
        for (label, map) in &self.unary {
            out.push(Translation {
                label: format!("x -> {label}x"),
                map: map.to_vec(),
            });
        }
        out
    }

    /// True if the signatures (number of operations of each arity) agree.
    pub fn same_shape(&self, other: &TableAlgebra<'_>) -> bool {
        self.binary.len() == other.binary.len()
            && self.unary.len() == other.unary.len()
            && self.constants.len() == other.constants.len()
    }
}

/// Anything that exposes an operation-table view.
pub trait Structure {
    fn order(&self) -> usize;
    fn algebra(&self) -> TableAlgebra<'_>;
}

impl Structure for FiniteSemiring {
    fn order(&self) -> usize {
        FiniteSemiring::order(self)
    }

    fn algebra(&self) -> TableAlgebra<'_> {
        TableAlgebra {
            order: self.order(),
            binary: vec![
                ("+", Cow::Borrowed(self.add_table().cells())),
                ("*", Cow::Borrowed(self.mul_table().cells())),
            ],
            unary: Vec::new(),
            constants: vec![0, self.one()],
        }
    }
}

impl Structure for FiniteSemimodule {
    fn order(&self) -> usize {
        FiniteSemimodule::order(self)
    }

    fn algebra(&self) -> TableAlgebra<'_> {
        TableAlgebra {
            order: self.order(),
            binary: vec![("+", Cow::Borrowed(self.add_table().cells()))],
            unary: (0..self.base().order())
                .map(|s| (format!("{s}·"), Cow::Borrowed(self.action_row(s))))
                .collect(),
            constants: vec![0],
        }
    }
}

impl<T: Structure + ?Sized> Structure for &T {
    fn order(&self) -> usize {
        (**self).order()
    }

    fn algebra(&self) -> TableAlgebra<'_> {
        (**self).algebra()
    }
}

/// A semiring viewed as a right semimodule over itself (`x ↦ x·s`).
#[derive(Debug, Clone, Copy)]
pub struct RightRegular<'a>(pub &'a FiniteSemiring);

impl Structure for RightRegular<'_> {
    fn order(&self) -> usize {
        self.0.order()
    }

    fn algebra(&self) -> TableAlgebra<'_> {
        let s = self.0;
        let n = s.order();
        TableAlgebra {
            order: n,
            binary: vec![("+", Cow::Borrowed(s.add_table().cells()))],
            unary: (0..n)
                .map(|c| {
                    (
                        format!("·{c} "),
                        Cow::Owned((0..n).map(|x| s.mul(x, c)).collect()),
                    )
                })
                .collect(),
            constants: vec![0],
        }
    }
}

/// A semiring as an `(S, S)`-bimodule: closed subsets are the two-sided ideals.
#[derive(Debug, Clone, Copy)]
pub struct Bimodule<'a>(pub &'a FiniteSemiring);

impl Structure for Bimodule<'_> {
    fn order(&self) -> usize {
        self.0.order()
    }

    fn algebra(&self) -> TableAlgebra<'_> {
        let s = self.0;
        let n = s.order();
        let mut unary: Vec<(String, Cow<'_, [usize]>)> = (0..n)
            .map(|c| (format!("{c}*"), Cow::Borrowed(s.mul_table().row(c))))
            .collect();
        unary.extend((0..n).map(|c| {
            (
                format!("*{c} "),
                Cow::Owned((0..n).map(|x| s.mul(x, c)).collect()),
            )
        }));
        TableAlgebra {
            order: n,
            binary: vec![("+", Cow::Borrowed(s.add_table().cells()))],
            unary,
            constants: vec![0],
        }
    }
}
