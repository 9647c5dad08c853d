use std::cmp::Ordering;
use std::fmt;

use crate::table::ElementSet;

/// Disjoint-set forest with path halving.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so the representative is the least element
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub fn into_congruence(mut self) -> Congruence {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Congruence::from_labels(&roots)
    }
}

/// A partition of `0..n`, canonically labelled: block `i` is the block whose
/// least element is the `i`-th smallest among block minima.
///
/// The type itself does not guarantee compatibility with any operations;
/// constructors in the engine verify it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    labels: Vec<usize>,
}

impl Congruence {
    /// Canonicalizes an arbitrary labelling.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let labels = labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Congruence { labels }
    }

    /// `None` if the blocks do not partition `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= n || labels[x] != usize::MAX {
                    return None;
                }
                labels[x] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_labels(&labels))
    }

    pub fn diagonal(n: usize) -> Self {
        Congruence {
            labels: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        Congruence { labels: vec![0; n] }
    }

    pub fn carrier(&self) -> usize {
        self.labels.len()
    }

    /// Canonical block index of `x`.
    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (x, &l) in self.labels.iter().enumerate() {
            blocks[l].push(x);
        }
        blocks
    }

    pub fn is_diagonal(&self) -> bool {
        self.block_count() == self.carrier()
    }

    pub fn is_universal(&self) -> bool {
        self.block_count() <= 1
    }

    /// Join in the lattice of equivalence relations.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut dsu = Dsu::new(self.carrier());
        let mut first_of = vec![usize::MAX; self.carrier()];
        let mut first_of_other = vec![usize::MAX; self.carrier()];
        for x in 0..self.carrier() {
            for (labels, firsts) in [
                (&self.labels, &mut first_of),
                (&other.labels, &mut first_of_other),
            ] {
                let l = labels[x];
                if firsts[l] == usize::MAX {
                    firsts[l] = x;
                } else {
                    dsu.union(firsts[l], x);
                }
            }
        }
        dsu.into_congruence()
    }

    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        (0..self.carrier()).all(|x| other.related(x, self.representative(x)))
    }

    /// Least element of the block of `x`.
    pub fn representative(&self, x: usize) -> usize {
        let l = self.labels[x];
        self.labels.iter().position(|&y| y == l).unwrap_or(x)
    }

    /// True if no two distinct elements of `mask` are related.
    pub fn separates(&self, mask: ElementSet) -> bool {
        let mut seen = 0u64;
        for x in mask.iter() {
            let bit = 1u64 << self.labels[x];
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    }
}

impl Ord for Congruence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.blocks().cmp(&other.blocks())
    }
}

impl PartialOrd for Congruence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence({self})")
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&blocks.join(" | "))
    }
}
