//! Randomised and exhaustive invariants, each against a naive oracle.

mod common;

use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use semiring_lab::congruence::{
    enumerate_congruences, is_right_semiregular, jacobson_radical, principal_congruence,
};
use semiring_lab::constructions::{chain_semiring, direct_product, quotient_semimodule};
use semiring_lab::format::{algebra_from_file, parse_algebra_file, Algebra, AlgebraFile};
use semiring_lab::hom::{are_isomorphic, enumerate_semimodules, find_extension, CensusFilter};
use semiring_lab::injectivity::{ci_verdict, injectivity_verdict, VerdictStatus};
use semiring_lab::{
    classify_semiring, clifford_decomposition, validate_semiring, ElementSet, FiniteSemimodule,
    FiniteSemiring, Limits, RawSemiring,
};

fn limits() -> Limits {
    Limits::default()
}

/// Census members of order at most `max` over every fixture, flattened.
fn census(max: usize) -> Vec<FiniteSemimodule> {
    fixtures()
        .into_iter()
        .flat_map(|(_, s)| enumerate_semimodules(&s, max, CensusFilter::All, &limits()).unwrap())
        .collect()
}

/// A permutation of `0..n` fixing 0.
fn perm_fixing_zero(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|rest| {
            let mut p = vec![0];
            p.extend(rest);
            p
        })
}

fn relabel_module(m: &FiniteSemimodule, perm: &[usize]) -> FiniteSemimodule {
    let mut inv = vec![0; perm.len()];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    FiniteSemimodule::from_fn(
        m.base(),
        m.order(),
        |a, b| perm[m.add(inv[a], inv[b])],
        |s, x| perm[m.act(s, inv[x])],
    )
    .unwrap()
}

fn fixture_and_perm() -> impl Strategy<Value = (Arc<FiniteSemiring>, Vec<usize>)> {
    (0..fixtures().len()).prop_flat_map(|i| {
        let s = fixtures()[i].1.clone();
        let n = s.order();
        (Just(s), perm_fixing_zero(n))
    })
}

fn module_and_perm(max: usize) -> impl Strategy<Value = (FiniteSemimodule, Vec<usize>)> {
    let pop = census(max);
    (0..pop.len()).prop_flat_map(move |i| {
        let m = pop[i].clone();
        let n = m.order();
        (Just(m), perm_fixing_zero(n))
    })
}

fn preserves_semiring(s: &FiniteSemiring, t: &FiniteSemiring, map: &[usize]) -> bool {
    let n = s.order();
    map[0] == 0
        && map[s.one()] == t.one()
        && (0..n).all(|a| {
            (0..n).all(|b| {
                map[s.add(a, b)] == t.add(map[a], map[b])
                    && map[s.mul(a, b)] == t.mul(map[a], map[b])
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn validation_agrees_with_axiom_scan(
        n in 1usize..=3,
        cells in proptest::collection::vec(0usize..3, 18),
        one in 0usize..3,
    ) {
        let rows = |offset: usize| -> Vec<Vec<usize>> {
            (0..n).map(|a| (0..n).map(|b| cells[offset + a * n + b] % n).collect()).collect()
        };
        let raw = RawSemiring { add: rows(0), mul: rows(9), one: one % n };
        prop_assert_eq!(validate_semiring(&raw).is_ok(), naive_is_semiring(&raw.add, &raw.mul, raw.one));
    }

    #[test]
    fn single_cell_mutations_agree_with_axiom_scan(
        i in 0usize..10, table in 0usize..2, a in 0usize..8, b in 0usize..8, v in 0usize..8,
    ) {
        let s = &fixtures()[i].1;
        let n = s.order();
        let mut raw = s.to_raw();
        let t = if table == 0 { &mut raw.add } else { &mut raw.mul };
        t[a % n][b % n] = v % n;
        prop_assert_eq!(validate_semiring(&raw).is_ok(), naive_is_semiring(&raw.add, &raw.mul, raw.one));
    }

    #[test]
    fn relabelled_semirings_are_isomorphic_and_round_trip((s, perm) in fixture_and_perm()) {
        let t = s.relabel(&perm).unwrap();
        let cert = are_isomorphic(&*s, &t).unwrap();
        let map = cert.map().expect("relabelling is an isomorphism");
        prop_assert!(preserves_semiring(&s, &t, map));
        let text = AlgebraFile::from_semiring("relabelled", &t).to_text();
        let parsed = parse_algebra_file(&text).unwrap();
        prop_assert_eq!(parsed.to_text(), text);
        match algebra_from_file(&parsed, None).unwrap() {
            Algebra::Semiring(back) => prop_assert_eq!(back, t),
            Algebra::Semimodule(_) => prop_assert!(false, "parsed a semimodule"),
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence((m, p) in module_and_perm(4), q in perm_fixing_zero(4)) {
        let x = relabel_module(&m, &p);
        let q: Vec<usize> = q.into_iter().filter(|&v| v < m.order()).collect();
        let y = relabel_module(&m, &q);
        let mx = are_isomorphic(&m, &x).unwrap();
        let xm = are_isomorphic(&x, &m).unwrap();
        let xy = are_isomorphic(&x, &y).unwrap();
        prop_assert!(mx.is_isomorphic() && xm.is_isomorphic() && xy.is_isomorphic());
        prop_assert!(naive_is_hom(&m, &x, mx.map().unwrap()));
        prop_assert!(naive_is_hom(&x, &m, xm.map().unwrap()));
        prop_assert!(are_isomorphic(&m, &m).unwrap().is_isomorphic());
    }

    #[test]
    fn congruences_match_partition_scan((m, _) in module_and_perm(5)) {
        let mut found: Vec<Vec<usize>> =
            enumerate_congruences(&m, &limits()).unwrap().iter().map(|c| c.labels().to_vec()).collect();
        let mut expected: Vec<Vec<usize>> =
            naive_partitions(m.order()).into_iter().filter(|l| naive_is_congruence(&m, l)).collect();
        found.sort();
        expected.sort();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn principal_congruence_is_least((m, _) in module_and_perm(5), a in 0usize..5, b in 0usize..5) {
        let (a, b) = (a % m.order(), b % m.order());
        let theta = principal_congruence(&m, a, b);
        prop_assert!(theta.related(a, b));
        prop_assert!(naive_is_congruence(&m, theta.labels()));
        for l in naive_partitions(m.order()) {
            if l[a] == l[b] && naive_is_congruence(&m, &l) {
                prop_assert!((0..m.order()).all(|x| (0..m.order()).all(|y| !theta.related(x, y) || l[x] == l[y])));
            }
        }
    }

    #[test]
    fn quotient_projections_are_homomorphisms((m, _) in module_and_perm(5), pick in 0usize..64) {
        let all = enumerate_congruences(&m, &limits()).unwrap();
        let theta = &all[pick % all.len()];
        let q = quotient_semimodule(&m, theta).unwrap();
        prop_assert_eq!(q.object.order(), theta.block_count());
        prop_assert!(naive_is_hom(&m, &q.object, &q.projection));
    }

    #[test]
    fn extension_search_is_sound_and_complete(
        base in 0usize..4, bi in 0usize..64, mi in 0usize..64, ai in 0usize..64, fi in 0usize..256,
    ) {
        let s = [b(), b3(), b31_arc(), f2()][base].clone();
        let pop = enumerate_semimodules(&s, 4, CensusFilter::All, &limits()).unwrap();
        let amb = &pop[bi % pop.len()];
        let target = &pop[mi % pop.len()];
        let masks: Vec<ElementSet> = (0..1u64 << amb.order())
            .map(ElementSet)
            .filter(|&k| amb.is_subsemimodule(k))
            .collect();
        let a = masks[ai % masks.len()];
        let (sub, _) = amb.submodule(a).unwrap();
        let fs = naive_homs(&sub, target);
        let f = &fs[fi % fs.len()];
        let found = find_extension(amb, a, f, target).unwrap();
        prop_assert_eq!(found.is_some(), naive_extension_exists(amb, a, f, target));
        if let Some(h) = found {
            prop_assert!(naive_is_hom(amb, target, &h.map));
            prop_assert!(a.iter().zip(f).all(|(x, &y)| h.map[x] == y));
        }
    }
}

#[test]
fn congruence_lists_are_join_closed_and_start_with_the_diagonal() {
    for m in census(4) {
        let all = enumerate_congruences(&m, &limits()).unwrap();
        assert!(all[0].is_diagonal());
        for x in &all {
            for y in &all {
                assert!(all.contains(&x.join(y)));
            }
        }
    }
}

#[test]
fn census_members_are_pairwise_non_isomorphic() {
    for (name, s) in fixtures() {
        let pop = enumerate_semimodules(&s, 4, CensusFilter::All, &limits()).unwrap();
        for (i, x) in pop.iter().enumerate() {
            for y in &pop[i + 1..] {
                assert!(!naive_isomorphic(x, y), "{name}");
            }
        }
    }
}

#[test]
fn refutation_is_monotone_in_the_bound() {
    for s in [b4(), chain3(), b31_arc(), b3()] {
        let reg = FiniteSemimodule::regular(&s);
        let mut refuted = false;
        for bound in 1..=6 {
            let v = injectivity_verdict(&reg, bound, &limits()).unwrap();
            if refuted {
                assert_eq!(v.status, VerdictStatus::RefutedWithWitness, "bound {bound}");
            }
            refuted = v.status == VerdictStatus::RefutedWithWitness;
            assert_ne!(v.status, VerdictStatus::InconclusiveAtBound);
        }
    }
}

#[test]
fn bounds_beyond_the_census_are_inconclusive_unless_refuted() {
    let reg = FiniteSemimodule::regular(&b());
    assert_eq!(
        injectivity_verdict(&reg, 7, &limits()).unwrap().status,
        VerdictStatus::InconclusiveAtBound
    );
    let reg4 = FiniteSemimodule::regular(&b4());
    assert_eq!(
        injectivity_verdict(&reg4, 7, &limits()).unwrap().status,
        VerdictStatus::RefutedWithWitness
    );
}

#[test]
fn refutation_of_a_factor_refutes_the_product() {
    let product = Arc::new(direct_product(&b(), &b4()).unwrap());
    assert_eq!(
        ci_verdict(&b4(), 4, &limits()).unwrap().verdict.status,
        VerdictStatus::RefutedWithWitness
    );
    assert_eq!(
        ci_verdict(&product, 4, &limits()).unwrap().verdict.status,
        VerdictStatus::RefutedWithWitness
    );
}

#[test]
fn radical_is_right_semiregular() {
    for (name, s) in fixtures() {
        let j = jacobson_radical(&s, &limits()).unwrap();
        assert!(j.is_right_ideal, "{name}");
        assert!(is_right_semiregular(&s, j.mask), "{name}");
    }
}

#[test]
fn clifford_reconstruction_is_exact() {
    let mut seen = 0;
    for m in census(5) {
        if let Ok(d) = clifford_decomposition(&m) {
            assert_eq!(&d.reconstruct(), m.add_table());
            let covered: usize = d.groups.iter().map(|g| g.elements.len()).sum();
            assert_eq!(covered, m.order());
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn chain_semirings_are_anti_bounded() {
    for n in 1..=6 {
        assert!(
            classify_semiring(&chain_semiring(n).unwrap()).anti_bounded,
            "n = {n}"
        );
    }
}

#[test]
fn additively_idempotent_implies_additively_regular() {
    for (name, s) in fixtures() {
        let f = classify_semiring(&s);
        assert!(!f.additively_idempotent || f.additively_regular, "{name}");
    }
}
