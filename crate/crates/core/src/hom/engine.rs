//! Backtracking search for structure-preserving maps between table algebras.
//!
//! Assignments propagate through every unary map, both argument orders of
//! every binary operation against already-assigned elements, and the aligned
//! constants. Branching picks the least unassigned source element and tries
//! targets in ascending order, so complete maps are produced in
//! lexicographic order.

use std::ops::ControlFlow;

use crate::algebra::TableAlgebra;

const UNSET: usize = usize::MAX;

pub(crate) struct Search<'a> {
    src: &'a TableAlgebra<'a>,
    dst: &'a TableAlgebra<'a>,
    injective: bool,
    /// `allowed[x]` lists the admissible images of `x`, ascending.
    allowed: Option<Vec<Vec<usize>>>,
    map: Vec<usize>,
    preimage: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<(usize, usize)>,
    consistent: bool,
}

impl<'a> Search<'a> {
    /// `None` when the signatures differ.
    pub fn new(src: &'a TableAlgebra<'a>, dst: &'a TableAlgebra<'a>) -> Option<Self> {
        if !src.same_shape(dst) {
            return None;
        }
        let mut search = Search {
            src,
            dst,
            injective: false,
            allowed: None,
            map: vec![UNSET; src.order],
            preimage: vec![UNSET; dst.order],
            trail: Vec::new(),
            queue: Vec::new(),
            consistent: true,
        };
        let pairs: Vec<(usize, usize)> = src
            .constants
            .iter()
            .copied()
            .zip(dst.constants.iter().copied())
            .collect();
        for (x, y) in pairs {
            search.consistent &= search.assign(x, y);
        }
        Some(search)
    }

    /// Restricts the search to injective maps. Call before [`Search::fix`].
    pub fn injective(mut self) -> Self {
        self.injective = true;
        self.reset();
        self
    }

    /// Restricts each source element to a list of admissible images.
    pub fn with_allowed(mut self, allowed: Vec<Vec<usize>>) -> Self {
        self.allowed = Some(allowed);
        self.reset();
        self
    }

    fn reset(&mut self) {
        self.undo(0);
        self.consistent = true;
        let pairs: Vec<(usize, usize)> = self
            .src
            .constants
            .iter()
            .copied()
            .zip(self.dst.constants.iter().copied())
            .collect();
        for (x, y) in pairs {
            self.consistent &= self.assign(x, y);
        }
    }

    /// Pins `x ↦ y` before searching.
    pub fn fix(&mut self, x: usize, y: usize) -> &mut Self {
        if self.consistent {
            self.consistent = self.assign(x, y);
        }
        self
    }

    fn admissible(&self, x: usize, y: usize) -> bool {
        if y >= self.dst.order {
            return false;
        }
        if let Some(allowed) = &self.allowed {
            if allowed[x].binary_search(&y).is_err() {
                return false;
            }
        }
        !(self.injective && self.preimage[y] != UNSET && self.preimage[y] != x)
    }

    /// Assigns and propagates; on failure the caller must [`Search::undo`].
    fn assign(&mut self, x: usize, y: usize) -> bool {
        self.queue.clear();
        self.queue.push((x, y));
        while let Some((x, y)) = self.queue.pop() {
            let current = self.map[x];
            if current != UNSET {
                if current != y {
                    return false;
                }
                continue;
            }
            if !self.admissible(x, y) {
                return false;
            }
            self.map[x] = y;
            if self.injective {
                self.preimage[y] = x;
            }
            self.trail.push(x);
            for ((_, us), (_, ud)) in self.src.unary.iter().zip(&self.dst.unary) {
                self.queue.push((us[x], ud[y]));
            }
            let (n, m) = (self.src.order, self.dst.order);
            for ((_, bs), (_, bd)) in self.src.binary.iter().zip(&self.dst.binary) {
                for &z in &self.trail {
                    let fz = self.map[z];
                    self.queue.push((bs[x * n + z], bd[y * m + fz]));
                    self.queue.push((bs[z * n + x], bd[fz * m + y]));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail above mark");
            if self.injective {
                self.preimage[self.map[x]] = UNSET;
            }
            self.map[x] = UNSET;
        }
    }

    /// Calls `visit` on every complete map in lexicographic order until it breaks.
    pub fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        if !self.consistent {
            return ControlFlow::Continue(());
        }
        self.descend(visit)
    }

    fn descend(&mut self, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(x) = self.map.iter().position(|&y| y == UNSET) else {
            return visit(&self.map);
        };
        let targets: Vec<usize> = match &self.allowed {
            Some(allowed) => allowed[x].clone(),
            None => (0..self.dst.order).collect(),
        };
        for y in targets {
            let mark = self.trail.len();
            if self.assign(x, y) {
                let flow = self.descend(visit);
                self.undo(mark);
                flow?;
            } else {
                self.undo(mark);
            }
        }
        ControlFlow::Continue(())
    }

    pub fn first(&mut self) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.run(&mut |m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn all(&mut self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let _ = self.run(&mut |m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        });
        out
    }
}

/// Exhaustive check that `map` preserves every operation and constant.
pub(crate) fn preserves(src: &TableAlgebra<'_>, dst: &TableAlgebra<'_>, map: &[usize]) -> bool {
    let (n, m) = (src.order, dst.order);
    src.same_shape(dst)
        && map.len() == n
        && map.iter().all(|&y| y < m)
        && src
            .constants
            .iter()
            .zip(&dst.constants)
            .all(|(&a, &b)| map[a] == b)
        && src
            .unary
            .iter()
            .zip(&dst.unary)
            .all(|((_, us), (_, ud))| (0..n).all(|x| map[us[x]] == ud[map[x]]))
        && src
            .binary
            .iter()
            .zip(&dst.binary)
            .all(|((_, bs), (_, bd))| {
                (0..n).all(|a| (0..n).all(|b| map[bs[a * n + b]] == bd[map[a] * m + map[b]]))
            })
}
