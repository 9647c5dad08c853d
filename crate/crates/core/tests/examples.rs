//! Worked examples across modules, checked against naive oracles where the
//! expected value is derived rather than quoted.

mod common;

use std::sync::Arc;

use common::*;
use semiring_lab::congruence::{
    enumerate_congruences, enumerate_subsemimodules, is_semisimple, jacobson_radical,
    principal_congruence, semiring_simplicity, simplicity_report,
};
use semiring_lab::constructions::{
    bourne_congruence, chain_over_b4, character_semimodule, diamond_congruence, direct_product,
    ext_semiring, matrix_semiring, morita_expand, morita_reduce, nine_element_over_b31,
    quotient_semimodule, sigma_congruence, zerosumfree_decomposition, zmod,
};
use semiring_lab::hom::{
    are_isomorphic, enumerate_homs, enumerate_semimodules, find_extension, is_essential_extension,
    is_retract, CensusFilter,
};
use semiring_lab::{
    classify_semiring, element_classes, validate_semimodule, Congruence, ElementSet, Error,
    FiniteSemimodule, FiniteSemiring, Limits, RawSemimodule,
};

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn chain_witness_with_altered_doubling_is_rejected() {
    let s = b4();
    let good = chain_over_b4(&s);
    let mut raw = good.to_raw();
    // 2c := b, where c = 3 and b = 2
    raw.action[2][3] = 2;
    assert!(matches!(
        validate_semimodule(&s, &raw),
        Err(Error::ActionAxiomFailure { .. })
    ));
    assert_eq!(validate_semimodule(&s, &good.to_raw()).unwrap(), good);
}

#[test]
fn element_class_invariants_hold_on_every_census_member() {
    for (name, s) in fixtures() {
        for m in enumerate_semimodules(&s, 4, CensusFilter::All, &limits()).unwrap() {
            let c = element_classes(&m);
            assert_eq!(
                c.iplus.intersection(c.vclass),
                ElementSet::singleton(0),
                "{name}"
            );
            assert!(c.iplus.is_subset(c.zclass), "{name}");
            if let Some(inf) = c.infinite {
                assert!(c.iplus.contains(inf));
                let absorbing = (0..m.order())
                    .filter(|&x| (0..m.order()).all(|y| m.add(x, y) == x))
                    .count();
                assert_eq!(absorbing, 1);
            }
        }
    }
}

#[test]
fn ext_of_small_rings() {
    let zero_ring = ext_semiring(&zmod(1).unwrap());
    assert_eq!(zero_ring.order(), 3);
    assert!(are_isomorphic(&zero_ring, &*b3()).unwrap().is_isomorphic());
    let f2x2 = semiring_lab::FiniteRing::new(direct_product(&f2(), &f2()).unwrap()).unwrap();
    for r in [zmod(2).unwrap(), zmod(3).unwrap(), zmod(4).unwrap(), f2x2] {
        let flags = classify_semiring(&ext_semiring(&r));
        assert!(
            flags.anti_bounded && flags.zerosumfree,
            "order {}",
            r.order()
        );
    }
    assert_eq!(ext_z3().order(), 5);
}

#[test]
fn products_and_matrices() {
    let bs = b();
    let m1 = matrix_semiring(&b3(), 1, &limits()).unwrap();
    assert!(are_isomorphic(&m1, &*b3()).unwrap().is_isomorphic());
    let m2 = matrix_semiring(&bs, 2, &limits()).unwrap();
    assert_eq!((m2.order(), m2.one()), (16, 9));
    let trivial = FiniteSemiring::trivial();
    assert!(
        are_isomorphic(&direct_product(&b3(), &trivial).unwrap(), &*b3())
            .unwrap()
            .is_isomorphic()
    );
    assert!(
        are_isomorphic(&direct_product(&bs, &bs).unwrap(), &*bool2())
            .unwrap()
            .is_isomorphic()
    );
    let fb = direct_product(&f2(), &bs).unwrap();
    // (a, b) has index 2a + b
    assert_eq!(element_classes(&fb).vclass, ElementSet(0b101));
    assert_eq!(
        jacobson_radical(&fb, &limits()).unwrap().mask,
        ElementSet(0b11)
    );
}

#[test]
fn quotients_by_trivial_congruences() {
    for (_, s) in fixtures() {
        let m = FiniteSemimodule::regular(&s);
        let n = m.order();
        let by_diagonal = quotient_semimodule(&m, &Congruence::diagonal(n))
            .unwrap()
            .object;
        assert!(naive_isomorphic(&by_diagonal, &m));
        assert_eq!(
            quotient_semimodule(&m, &Congruence::universal(n))
                .unwrap()
                .object
                .order(),
            1
        );
        assert!(bourne_congruence(&m, ElementSet::singleton(0))
            .unwrap()
            .is_diagonal());
    }
    let reg = FiniteSemimodule::regular(&b3());
    let top = Congruence::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
    let q = quotient_semimodule(&reg, &top).unwrap().object;
    assert!(naive_isomorphic(
        &q,
        &FiniteSemimodule::from_fn(
            &b3(),
            2,
            |x, y| x.max(y),
            |s, m| usize::from(s != 0 && m != 0)
        )
        .unwrap()
    ));
}

#[test]
fn special_congruences() {
    let reg = FiniteSemimodule::regular(&b3());
    assert!(bourne_congruence(&reg, ElementSet(0b101))
        .unwrap()
        .is_universal());
    assert_eq!(
        sigma_congruence(&reg).unwrap().blocks(),
        vec![vec![0], vec![1, 2]]
    );
    let t = FiniteSemimodule::trivial(&b3());
    assert!(diamond_congruence(&t).unwrap().is_diagonal());
    assert!(sigma_congruence(&t).unwrap().is_diagonal());
    assert_eq!(
        principal_congruence(&reg, 1, 2).blocks(),
        vec![vec![0], vec![1, 2]]
    );
    assert!(principal_congruence(&reg, 1, 1).is_diagonal());
    assert!(principal_congruence(&FiniteSemimodule::regular(&b()), 0, 1).is_universal());
    let semiring_congruences = enumerate_congruences(&*b3(), &limits()).unwrap();
    assert!(semiring_congruences.len() >= 3);
    assert!(semiring_congruences
        .iter()
        .any(|c| c.blocks() == vec![vec![0], vec![1, 2]]));
}

#[test]
fn characters() {
    let bs = b();
    let c = character_semimodule(&FiniteSemimodule::regular(&bs)).unwrap();
    assert!(naive_isomorphic(&c, &FiniteSemimodule::regular(&bs)));
    assert_eq!(
        character_semimodule(&FiniteSemimodule::trivial(&bs))
            .unwrap()
            .order(),
        1
    );
}

#[test]
fn matrix_reduction_examples() {
    let bs = b();
    let m2 = Arc::new(matrix_semiring(&bs, 2, &limits()).unwrap());
    let reg = FiniteSemimodule::regular(&m2);
    let reduced = morita_reduce(&reg, &bs, 2).unwrap();
    assert!(naive_isomorphic(
        &reduced,
        &semiring_lab::constructions::free_semimodule(&bs, 2).unwrap()
    ));
    assert!(
        are_isomorphic(&morita_expand(&reduced, &m2, 2).unwrap(), &reg)
            .unwrap()
            .is_isomorphic()
    );
    let m1 = Arc::new(matrix_semiring(&b3(), 1, &limits()).unwrap());
    let x = FiniteSemimodule::regular(&b3());
    let expanded = morita_expand(&x, &m1, 1).unwrap();
    assert_eq!(expanded.to_raw(), x.to_raw());
    assert!(naive_isomorphic(
        &morita_reduce(&expanded, &b3(), 1).unwrap(),
        &x
    ));
}

#[test]
fn zerosumfree_decompositions() {
    let fb = direct_product(&f2(), &b()).unwrap();
    let d = zerosumfree_decomposition(&fb).unwrap().unwrap();
    assert!(are_isomorphic(d.ring.semiring(), &*f2())
        .unwrap()
        .is_isomorphic());
    assert!(are_isomorphic(&d.rest, &*b()).unwrap().is_isomorphic());
    let d = zerosumfree_decomposition(&b3()).unwrap().unwrap();
    assert_eq!(d.ring.order(), 1);
    assert!(are_isomorphic(&d.rest, &*b3()).unwrap().is_isomorphic());
    let d = zerosumfree_decomposition(&zmod(3).unwrap().into_semiring())
        .unwrap()
        .unwrap();
    assert_eq!((d.ring.order(), d.rest.order()), (3, 1));
}

#[test]
fn homomorphism_examples_match_the_odometer() {
    let bs = b();
    let reg_b = FiniteSemimodule::regular(&bs);
    let homs: Vec<Vec<usize>> = enumerate_homs(&reg_b, &reg_b, &limits())
        .unwrap()
        .into_iter()
        .map(|h| h.map)
        .collect();
    assert_eq!(homs, vec![vec![0, 0], vec![0, 1]]);
    let reg = FiniteSemimodule::regular(&b3());
    let (two, _) = reg.submodule(ElementSet(0b101)).unwrap();
    let homs: Vec<Vec<usize>> = enumerate_homs(&reg, &two, &limits())
        .unwrap()
        .into_iter()
        .map(|h| h.map)
        .collect();
    assert_eq!(homs, naive_homs(&reg, &two));
    assert_eq!(homs, vec![vec![0, 0, 0], vec![0, 1, 1]]);
    assert_eq!(
        enumerate_homs(&reg, &FiniteSemimodule::trivial(&b3()), &limits())
            .unwrap()
            .len(),
        1
    );
    let id = find_extension(&reg, ElementSet::full(3), &[0, 1, 2], &reg)
        .unwrap()
        .unwrap();
    assert_eq!(id.map, vec![0, 1, 2]);
    assert_eq!(
        is_retract(&reg, ElementSet(0b101)).unwrap().unwrap().map,
        vec![0, 1, 1]
    );
    assert_eq!(
        is_retract(&reg, ElementSet::full(3)).unwrap().unwrap().map,
        vec![0, 1, 2]
    );
    let m9 = nine_element_over_b31(&b31_arc());
    assert!(is_retract(&m9, ElementSet(0b111)).unwrap().is_none());
}

#[test]
fn isomorphism_examples() {
    assert!(!are_isomorphic(&*b3(), &*chain3()).unwrap().is_isomorphic());
    let reg = FiniteSemimodule::regular(&b3());
    assert_eq!(
        are_isomorphic(&reg, &reg).unwrap().map(),
        Some(&[0, 1, 2][..])
    );
}

#[test]
fn census_examples() {
    let bs = b();
    let simple = enumerate_semimodules(&bs, 2, CensusFilter::Simple, &limits()).unwrap();
    assert_eq!(simple.len(), 1);
    assert!(naive_isomorphic(
        &simple[0],
        &FiniteSemimodule::regular(&bs)
    ));
    let s3 = b3();
    let (two, _) = FiniteSemimodule::regular(&s3)
        .submodule(ElementSet(0b101))
        .unwrap();
    let simple = enumerate_semimodules(&s3, 2, CensusFilter::Simple, &limits()).unwrap();
    assert!(simple.iter().any(|m| naive_isomorphic(m, &two)));
    for (_, s) in fixtures() {
        let one = enumerate_semimodules(&s, 1, CensusFilter::All, &limits()).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].order(), 1);
    }
}

#[test]
fn boolean_census_counts_are_lattice_counts() {
    // join-semilattices with 0 on k points are the lattices on k points
    let lattices = [1, 1, 1, 2, 5, 15];
    let census = enumerate_semimodules(&b(), 6, CensusFilter::All, &limits()).unwrap();
    for (k, &expected) in lattices.iter().enumerate() {
        assert_eq!(
            census.iter().filter(|m| m.order() == k + 1).count(),
            expected,
            "order {}",
            k + 1
        );
    }
}

#[test]
fn essential_examples() {
    let reg = FiniteSemimodule::regular(&b3());
    assert!(
        is_essential_extension(&reg, ElementSet::full(3), &limits())
            .unwrap()
            .essential
    );
    let r = is_essential_extension(&reg, ElementSet(0b101), &limits()).unwrap();
    assert!(!r.essential);
    assert_eq!(r.witness.unwrap().blocks(), vec![vec![0], vec![1, 2]]);
}

#[test]
fn simplicity_examples() {
    let reg = FiniteSemimodule::regular(&b3());
    let (two, _) = reg.submodule(ElementSet(0b101)).unwrap();
    let r = simplicity_report(&two, &limits()).unwrap();
    assert!(r.simple && r.atom && r.s_simple);
    let r = simplicity_report(&reg, &limits()).unwrap();
    assert!(!r.simple && !r.atom);
    assert!(
        !simplicity_report(&FiniteSemimodule::trivial(&b3()), &limits())
            .unwrap()
            .simple
    );
    let strong: Vec<ElementSet> = enumerate_subsemimodules(&reg, &limits())
        .unwrap()
        .into_iter()
        .filter(|k| k.is_strong)
        .map(|k| k.mask)
        .collect();
    assert_eq!(strong, vec![ElementSet(0b1), ElementSet(0b111)]);
    for (s, both) in [(b(), true), (b3(), false), (f2(), true)] {
        let r = semiring_simplicity(&s, &limits()).unwrap();
        assert_eq!((r.congruence_simple, r.ideal_simple), (both, both));
    }
}

#[test]
fn semisimplicity_examples() {
    assert!(is_semisimple(&b(), &limits()).unwrap().is_semisimple());
    assert!(
        is_semisimple(&direct_product(&f2(), &f2()).unwrap(), &limits())
            .unwrap()
            .is_semisimple()
    );
    assert!(!is_semisimple(&b3(), &limits()).unwrap().is_semisimple());
}

#[test]
fn malformed_semimodule_tables_are_shape_errors() {
    let raw = RawSemimodule {
        add: vec![vec![0, 1], vec![1]],
        action: vec![vec![0, 0], vec![0, 1]],
    };
    assert!(matches!(
        validate_semimodule(&b(), &raw),
        Err(Error::Shape(_))
    ));
}
