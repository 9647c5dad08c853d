//! Semimodules up to isomorphism: all of a given size, or all cyclic ones.
//!
//! A semimodule of order `k` is a commutative monoid `M` together with a
//! semiring map `S → End(M)`. Monoids are generated once per order as
//! lexicographically least tables; actions are then the semiring maps into
//! `End(M)`, reduced to the least table under conjugation by `Aut(M)`.

use std::borrow::Cow;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::algebra::{FiniteSemimodule, FiniteSemiring, Structure, TableAlgebra};
use crate::congruence::{enumerate_congruences, simplicity_report};
use crate::constructions::quotient_semimodule;
use crate::error::{Error, Result};
use crate::hom::engine::Search;
use crate::hom::iso::are_isomorphic;
use crate::limits::Limits;
use crate::table::CayleyTable;

/// Largest semimodule order the census enumerates.
pub const CENSUS_MAX_ORDER: usize = 6;

const UNSET: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CensusFilter {
    #[default]
    All,
    Simple,
}

/// An additive monoid as a table algebra: one binary operation, constant 0.
struct MonoidView<'a>(&'a CayleyTable);

impl Structure for MonoidView<'_> {
    fn order(&self) -> usize {
        self.0.order()
    }

    fn algebra(&self) -> TableAlgebra<'_> {
        TableAlgebra {
            order: self.0.order(),
            binary: vec![("+", Cow::Borrowed(self.0.cells()))],
            unary: Vec::new(),
            constants: vec![0],
        }
    }
}

/// A canonical monoid with its endomorphism semiring and automorphism group.
struct MonoidData {
    table: CayleyTable,
    /// Endomorphisms in lexicographic order.
    endos: Vec<Vec<usize>>,
    end_add: Vec<usize>,
    end_mul: Vec<usize>,
    zero_map: usize,
    identity: usize,
    automorphisms: Vec<Vec<usize>>,
}

impl MonoidData {
    fn new(table: CayleyTable) -> Self {
        let k = table.order();
        let view = MonoidView(&table);
        let alg = view.algebra();
        let endos = Search::new(&alg, &alg).expect("same shape").all();
        let index: HashMap<&[usize], usize> = endos
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let e = endos.len();
        let mut end_add = Vec::with_capacity(e * e);
        let mut end_mul = Vec::with_capacity(e * e);
        let mut buf = vec![0; k];
        for f in &endos {
            for g in &endos {
                for x in 0..k {
                    buf[x] = table.get(f[x], g[x]);
                }
                end_add.push(index[buf.as_slice()]);
                for x in 0..k {
                    buf[x] = f[g[x]];
                }
                end_mul.push(index[buf.as_slice()]);
            }
        }
        let identity: Vec<usize> = (0..k).collect();
        let automorphisms = endos
            .iter()
            .filter(|f| {
                let mut seen = vec![false; k];
                f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
            })
            .cloned()
            .collect();
        MonoidData {
            zero_map: index[vec![0; k].as_slice()],
            identity: index[identity.as_slice()],
            table,
            endos,
            end_add,
            end_mul,
            automorphisms,
        }
    }

    fn end_algebra(&self) -> TableAlgebra<'_> {
        TableAlgebra {
            order: self.endos.len(),
            binary: vec![
                ("+", Cow::Borrowed(&self.end_add)),
                ("*", Cow::Borrowed(&self.end_mul)),
            ],
            unary: Vec::new(),
            constants: vec![self.zero_map, self.identity],
        }
    }
}

fn associative_so_far(t: &[usize], k: usize) -> bool {
    for a in 1..k {
        for b in 1..k {
            let ab = t[a * k + b];
            if ab == UNSET {
                continue;
            }
            for c in 1..k {
                let bc = t[b * k + c];
                if bc == UNSET {
                    continue;
                }
                let (l, r) = (t[ab * k + c], t[a * k + bc]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn monoid_invariant(t: &CayleyTable, x: usize) -> (bool, bool, usize, usize, usize, usize) {
    let k = t.order();
    let mut seen = vec![usize::MAX; k];
    let (mut acc, mut step) = (x, 0);
    while seen[acc] == usize::MAX {
        seen[acc] = step;
        acc = t.get(acc, x);
        step += 1;
    }
    (
        t.get(x, x) == x,
        t.get(x, x) == 0,
        (0..k).filter(|&y| t.get(x, y) == x).count(),
        (0..k).filter(|&y| t.get(x, y) == 0).count(),
        seen[acc],
        step - seen[acc],
    )
}

/// Permutations of `1..k` that keep every element inside its run of equal invariants.
fn class_permutations(classes: &[usize]) -> Vec<Vec<usize>> {
    let k = classes.len();
    let mut out = Vec::new();
    let mut perm = vec![0; k];
    let mut used = vec![false; k];
    fn go(
        x: usize,
        classes: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if x == classes.len() {
            out.push(perm.clone());
            return;
        }
        for y in 1..classes.len() {
            if !used[y] && classes[y] == classes[x] {
                used[y] = true;
                perm[x] = y;
                go(x + 1, classes, perm, used, out);
                used[y] = false;
            }
        }
    }
    if k == 1 {
        return vec![vec![0]];
    }
    used[0] = true;
    go(1, classes, &mut perm, &mut used, &mut out);
    out
}

fn is_canonical(t: &CayleyTable) -> bool {
    let k = t.order();
    let inv: Vec<_> = (0..k).map(|x| monoid_invariant(t, x)).collect();
    if inv[1..].windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    let mut classes = vec![0; k];
    for x in 2..k {
        classes[x] = if inv[x] == inv[x - 1] {
            classes[x - 1]
        } else {
            classes[x - 1] + 1
        };
    }
    classes[0] = usize::MAX;
    for p in class_permutations(&classes) {
        let mut inverse = vec![0; k];
        for (x, &y) in p.iter().enumerate() {
            inverse[y] = x;
        }
        for cell in 0..k * k {
            let (a, b) = (cell / k, cell % k);
            let relabelled = p[t.get(inverse[a], inverse[b])];
            match relabelled.cmp(&t.get(a, b)) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    true
}

/// Commutative monoids of order `k` with identity 0, one lexicographically
/// least table per isomorphism class, ascending.
pub fn canonical_monoids(k: usize) -> Result<Vec<CayleyTable>> {
    Ok(monoid_data(k)?.iter().map(|m| m.table.clone()).collect())
}

fn generate_monoids(k: usize) -> Vec<CayleyTable> {
    let mut t = vec![UNSET; k * k];
    for x in 0..k {
        t[x] = x;
        t[x * k] = x;
    }
    let cells: Vec<(usize, usize)> = (1..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        t: &mut Vec<usize>,
        k: usize,
        out: &mut Vec<CayleyTable>,
    ) {
        if i == cells.len() {
            let table = CayleyTable::from_cells(k, t.clone());
            if is_canonical(&table) {
                out.push(table);
            }
            return;
        }
        let (a, b) = cells[i];
        for v in 0..k {
            t[a * k + b] = v;
            t[b * k + a] = v;
            if associative_so_far(t, k) {
                go(i + 1, cells, t, k, out);
            }
        }
        t[a * k + b] = UNSET;
        t[b * k + a] = UNSET;
    }
    go(0, &cells, &mut t, k, &mut out);
    // one table per class so far; replace each by its least relabelling
    let all = class_permutations(&vec![0; k]);
    let mut out: Vec<CayleyTable> = out
        .into_iter()
        .map(|t| {
            all.iter()
                .map(|p| {
                    let mut inverse = vec![0; k];
                    for (x, &y) in p.iter().enumerate() {
                        inverse[y] = x;
                    }
                    CayleyTable::from_fn(k, |a, b| p[t.get(inverse[a], inverse[b])])
                })
                .min()
                .expect("identity permutation")
        })
        .collect();
    out.sort();
    out
}

fn monoid_data(k: usize) -> Result<&'static [Arc<MonoidData>]> {
    static CACHE: [OnceLock<Vec<Arc<MonoidData>>>; CENSUS_MAX_ORDER + 1] =
        [const { OnceLock::new() }; CENSUS_MAX_ORDER + 1];
    if k == 0 || k > CENSUS_MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "census semimodule order",
            size: k,
            cap: CENSUS_MAX_ORDER,
        });
    }
    Ok(CACHE[k].get_or_init(|| {
        generate_monoids(k)
            .into_par_iter()
            .map(|t| Arc::new(MonoidData::new(t)))
            .collect()
    }))
}

/// Every action of `s` on the monoid, reduced modulo `Aut(M)`, ascending.
fn actions_on(s: &FiniteSemiring, monoid: &MonoidData) -> Vec<Vec<usize>> {
    let src = s.algebra();
    let dst = monoid.end_algebra();
    let k = monoid.table.order();
    let Some(mut search) = Search::new(&src, &dst) else {
        return Vec::new();
    };
    let mut found = BTreeSet::new();
    for h in search.all() {
        let action: Vec<usize> = h
            .iter()
            .flat_map(|&e| monoid.endos[e].iter().copied())
            .collect();
        let canonical = monoid
            .automorphisms
            .iter()
            .map(|sigma| {
                let mut inverse = vec![0; k];
                for (x, &y) in sigma.iter().enumerate() {
                    inverse[y] = x;
                }
                (0..action.len())
                    .map(|cell| sigma[action[(cell / k) * k + inverse[cell % k]]])
                    .collect::<Vec<usize>>()
            })
            .min()
            .expect("the identity is an automorphism");
        found.insert(canonical);
    }
    found.into_iter().collect()
}

/// Semimodules over `s` of order at most `max_size`, one per isomorphism
/// class, ordered by size, then addition table, then action table.
pub fn enumerate_semimodules(
    s: &Arc<FiniteSemiring>,
    max_size: usize,
    filter: CensusFilter,
    limits: &Limits,
) -> Result<Vec<FiniteSemimodule>> {
    limits.check("census base semiring", s.order())?;
    let mut out = Vec::new();
    for k in 1..=max_size {
        let monoids = monoid_data(k)?;
        let batch: Vec<Vec<FiniteSemimodule>> = monoids
            .par_iter()
            .map(|m| {
                actions_on(s, m)
                    .into_iter()
                    .map(|action| {
                        FiniteSemimodule::from_validated_parts(
                            Arc::clone(s),
                            m.table.clone(),
                            action,
                        )
                    })
                    .collect()
            })
            .collect();
        out.extend(batch.into_iter().flatten());
    }
    if filter == CensusFilter::Simple {
        let keep: Vec<bool> = out
            .par_iter()
            .map(|m| simplicity_report(m, limits).map(|r| r.simple))
            .collect::<Result<_>>()?;
        out = out
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(m, _)| m)
            .collect();
    }
    Ok(out)
}

/// Quotients of the regular semimodule, one per isomorphism class (the least
/// table of each class), ordered by size then table.
pub fn enumerate_cyclic_semimodules(
    s: &Arc<FiniteSemiring>,
    limits: &Limits,
) -> Result<Vec<FiniteSemimodule>> {
    let regular = FiniteSemimodule::regular(s);
    let mut quotients: Vec<FiniteSemimodule> = enumerate_congruences(&regular, limits)?
        .iter()
        .map(|theta| quotient_semimodule(&regular, theta).map(|q| q.object))
        .collect::<Result<_>>()?;
    quotients.sort_by_key(|m| m.table_key());
    let mut classes: Vec<FiniteSemimodule> = Vec::new();
    for q in quotients {
        let mut new_class = true;
        for c in &classes {
            if c.order() == q.order() && are_isomorphic(c, &q)?.is_isomorphic() {
                new_class = false;
                break;
            }
        }
        if new_class {
            classes.push(q);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::chain_semiring;

    /// Every labelled commutative monoid table with identity 0, unpruned.
    fn all_monoid_tables(k: usize) -> Vec<CayleyTable> {
        let free: Vec<(usize, usize)> = (1..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        for code in 0..k.pow(free.len() as u32) {
            let mut c = code;
            let mut t = CayleyTable::from_fn(k, |a, b| {
                if a == 0 {
                    b
                } else if b == 0 {
                    a
                } else {
                    0
                }
            })
            .cells()
            .to_vec();
            for &(a, b) in &free {
                t[a * k + b] = c % k;
                t[b * k + a] = c % k;
                c /= k;
            }
            let assoc = (0..k).all(|a| {
                (0..k).all(|b| (0..k).all(|d| t[t[a * k + b] * k + d] == t[a * k + t[b * k + d]]))
            });
            if assoc {
                out.push(CayleyTable::from_cells(k, t));
            }
        }
        out
    }

    #[test]
    fn monoid_classes_match_pairwise_isomorphism() {
        for k in 1..=4 {
            let mut reps: Vec<CayleyTable> = Vec::new();
            for t in all_monoid_tables(k) {
                if !reps.iter().any(|r| {
                    are_isomorphic(&MonoidView(r), &MonoidView(&t))
                        .unwrap()
                        .is_isomorphic()
                }) {
                    reps.push(t);
                }
            }
            let canonical = canonical_monoids(k).unwrap();
            assert_eq!(canonical.len(), reps.len(), "order {k}");
            for t in &canonical {
                assert!(all_monoid_tables(k).iter().all(|u| u >= t
                    || !are_isomorphic(&MonoidView(u), &MonoidView(t))
                        .unwrap()
                        .is_isomorphic()));
            }
        }
    }

    #[test]
    fn boolean_census() {
        let b = Arc::new(chain_semiring(1).unwrap());
        let lim = Limits::default();
        let one = enumerate_semimodules(&b, 1, CensusFilter::All, &lim).unwrap();
        assert_eq!(one.len(), 1);
        let simple = enumerate_semimodules(&b, 2, CensusFilter::Simple, &lim).unwrap();
        assert_eq!(simple, vec![FiniteSemimodule::regular(&b)]);
    }

    #[test]
    fn cyclic_b3() {
        let b3 = Arc::new(chain_semiring(2).unwrap());
        let cyclic = enumerate_cyclic_semimodules(&b3, &Limits::default()).unwrap();
        assert_eq!(
            cyclic.iter().map(|m| m.order()).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }
}
