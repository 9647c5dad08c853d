//! Fixtures and naive oracles shared by the integration tests. The oracles
//! use only the public table accessors, never the search engines.

#![allow(dead_code)]

use std::sync::Arc;

use semiring_lab::constructions::{
    b31, chain_semiring, ext_semiring, lattice_boolean, lattice_chain, zmod,
};
use semiring_lab::{ElementSet, FiniteSemimodule, FiniteSemiring};

pub fn arc(s: FiniteSemiring) -> Arc<FiniteSemiring> {
    Arc::new(s)
}

pub fn b() -> Arc<FiniteSemiring> {
    arc(chain_semiring(1).unwrap())
}

pub fn b3() -> Arc<FiniteSemiring> {
    arc(chain_semiring(2).unwrap())
}

pub fn b4() -> Arc<FiniteSemiring> {
    arc(chain_semiring(3).unwrap())
}

pub fn b31_arc() -> Arc<FiniteSemiring> {
    arc(b31())
}

pub fn f2() -> Arc<FiniteSemiring> {
    arc(zmod(2).unwrap().into_semiring())
}

pub fn ext_f2() -> Arc<FiniteSemiring> {
    arc(ext_semiring(&zmod(2).unwrap()))
}

pub fn ext_z3() -> Arc<FiniteSemiring> {
    arc(ext_semiring(&zmod(3).unwrap()))
}

pub fn bool2() -> Arc<FiniteSemiring> {
    arc(lattice_boolean(2).unwrap())
}

pub fn chain3() -> Arc<FiniteSemiring> {
    arc(lattice_chain(3).unwrap())
}

pub fn fixtures() -> Vec<(&'static str, Arc<FiniteSemiring>)> {
    vec![
        ("b", b()),
        ("b3", b3()),
        ("b4", b4()),
        ("b31", b31_arc()),
        ("f2", f2()),
        ("z3", arc(zmod(3).unwrap().into_semiring())),
        ("ext-f2", ext_f2()),
        ("ext-z3", ext_z3()),
        ("bool2", bool2()),
        ("chain3", chain3()),
    ]
}

/// Checks every semimodule homomorphism law directly.
pub fn naive_is_hom(src: &FiniteSemimodule, dst: &FiniteSemimodule, map: &[usize]) -> bool {
    if map.len() != src.order() || map.iter().any(|&y| y >= dst.order()) || map[0] != 0 {
        return false;
    }
    let n = src.order();
    let adds = (0..n).all(|a| (0..n).all(|b| map[src.add(a, b)] == dst.add(map[a], map[b])));
    let acts =
        (0..src.base().order()).all(|s| (0..n).all(|x| map[src.act(s, x)] == dst.act(s, map[x])));
    adds && acts
}

/// Every map `src → dst` by odometer, filtered by [`naive_is_hom`].
pub fn naive_homs(src: &FiniteSemimodule, dst: &FiniteSemimodule) -> Vec<Vec<usize>> {
    let (n, k) = (src.order(), dst.order());
    let mut out = Vec::new();
    let mut map = vec![0; n];
    loop {
        if naive_is_hom(src, dst, &map) {
            out.push(map.clone());
        }
        // last index varies fastest, so `out` is lexicographic
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < k {
                break;
            }
            map[i] = 0;
        }
    }
}

/// Whether some map `b → m` extends `f` (given on the elements of `a`,
/// ascending) and is a homomorphism.
pub fn naive_extension_exists(
    b: &FiniteSemimodule,
    a: ElementSet,
    f: &[usize],
    m: &FiniteSemimodule,
) -> bool {
    let free: Vec<usize> = (0..b.order()).filter(|&x| !a.contains(x)).collect();
    let mut map = vec![0; b.order()];
    for (x, &y) in a.iter().zip(f) {
        map[x] = y;
    }
    let k = m.order();
    let total = k.pow(free.len() as u32);
    (0..total).any(|mut code| {
        for &x in &free {
            map[x] = code % k;
            code /= k;
        }
        naive_is_hom(b, m, &map)
    })
}

/// A bijection `x → y` preserving every table, by trying all permutations.
pub fn naive_isomorphic(x: &FiniteSemimodule, y: &FiniteSemimodule) -> bool {
    if x.order() != y.order() {
        return false;
    }
    let mut perm: Vec<usize> = (0..x.order()).collect();
    permutations(&mut perm, 0, &mut |p| naive_is_hom(x, y, p))
}

fn permutations(p: &mut Vec<usize>, i: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if i == p.len() {
        return visit(p);
    }
    for j in i..p.len() {
        p.swap(i, j);
        if permutations(p, i + 1, visit) {
            p.swap(i, j);
            return true;
        }
        p.swap(i, j);
    }
    false
}

/// Semiring axioms checked literally; true iff the tables form a semiring.
pub fn naive_is_semiring(add: &[Vec<usize>], mul: &[Vec<usize>], one: usize) -> bool {
    let n = add.len();
    if n == 0 || mul.len() != n || one >= n {
        return false;
    }
    if add
        .iter()
        .chain(mul)
        .any(|r| r.len() != n || r.iter().any(|&v| v >= n))
    {
        return false;
    }
    let r = 0..n;
    for a in r.clone() {
        if add[0][a] != a
            || mul[one][a] != a
            || mul[a][one] != a
            || mul[0][a] != 0
            || mul[a][0] != 0
        {
            return false;
        }
        for b in r.clone() {
            if add[a][b] != add[b][a] {
                return false;
            }
            for c in r.clone() {
                if add[add[a][b]][c] != add[a][add[b][c]]
                    || mul[mul[a][b]][c] != mul[a][mul[b][c]]
                    || mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]
                    || mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether a labelling is compatible with addition and the action.
pub fn naive_is_congruence(m: &FiniteSemimodule, labels: &[usize]) -> bool {
    let n = m.order();
    for a in 0..n {
        for a2 in 0..n {
            if labels[a] != labels[a2] {
                continue;
            }
            for b in 0..n {
                if labels[m.add(a, b)] != labels[m.add(a2, b)] {
                    return false;
                }
            }
            for s in 0..m.base().order() {
                if labels[m.act(s, a)] != labels[m.act(s, a2)] {
                    return false;
                }
            }
        }
    }
    true
}

/// Restricted growth strings of length `n`: every partition exactly once.
pub fn naive_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=max + 1 {
            prefix.push(v);
            go(prefix, n, max.max(v), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut vec![0], n, 0, &mut out);
    }
    out
}

pub fn naive_congruence_count(m: &FiniteSemimodule) -> usize {
    naive_partitions(m.order())
        .iter()
        .filter(|l| naive_is_congruence(m, l))
        .count()
}
