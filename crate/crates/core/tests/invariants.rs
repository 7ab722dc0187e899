mod common;

use a1pic::margolis::{homology, Differential};
use a1pic::stable::kernel_of_cover;
use a1pic::{
    catalog, direct_sum, dual, evaluation_map, is_invertible, is_projective, is_stably_trivial,
    joker_power, loop_module, loop_power, map_is_stable_equivalence, margolis_report,
    minimal_free_cover, picard_coordinates, quotient_tau, signature, suspend, tensor, A1Module,
    Bidegree, MargolisReport, PicardCoordinates, Signature,
};
use common::{any_module, enumerated_homology, invertible_module};
use proptest::prelude::*;

const NAMES: [(Differential, &str); 3] = [
    (Differential::Q0, "Q0"),
    (Differential::Q1, "Q1"),
    (Differential::Sq2, "Sq2"),
];

fn dims_equal(a: &MargolisReport, b: &MargolisReport) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x.dims == y.dims)
}

fn matches_enumeration(m: &A1Module) {
    let mt = quotient_tau(m);
    for (x, name) in NAMES {
        assert_eq!(
            homology(&mt, x).unwrap().dims,
            enumerated_homology(&mt, name),
            "{name} homology of {}",
            m.name()
        );
    }
}

#[test]
fn homology_matches_enumeration_on_catalog() {
    for name in catalog::BUILTIN_NAMES {
        matches_enumeration(&catalog::builtin(name).unwrap());
    }
    matches_enumeration(&loop_module(&catalog::unit()).unwrap());
    matches_enumeration(&tensor(&catalog::joker(), &catalog::a1_tilde()).unwrap());
}

#[test]
fn joker_homology_classes() {
    let j = catalog::joker();
    let r = margolis_report(&j).unwrap();
    let id = |h: &a1pic::Homology| -> Vec<String> {
        h.representatives
            .iter()
            .map(|(_, cycle)| cycle.iter().map(|&i| j.basis().id(i).to_string()).collect())
            .collect()
    };
    assert_eq!(r.q0.single_class(), Some(Bidegree::new(2, 0)));
    assert_eq!(r.q1.single_class(), Some(Bidegree::new(2, 0)));
    assert_eq!(r.sq2.single_class(), Some(Bidegree::new(0, 0)));
    assert_eq!(id(&r.q0), ["y"]);
    assert_eq!(id(&r.q1), ["y"]);
    assert_eq!(id(&r.sq2), ["x"]);
}

#[test]
fn a1_tilde_sq2_homology() {
    let r = margolis_report(&catalog::a1_tilde()).unwrap();
    assert!(r.q0.is_zero() && r.q1.is_zero());
    let expected = [(Bidegree::new(0, 0), 1), (Bidegree::new(6, 1), 1)]
        .into_iter()
        .collect();
    assert_eq!(r.sq2.dims, expected);
}

#[test]
fn loop_signatures() {
    let om2 = loop_module(&catalog::unit()).unwrap();
    assert_eq!(om2.rank(), 7);
    assert_eq!(
        signature(&om2).unwrap(),
        Signature {
            q0: Bidegree::new(1, 0),
            q1: Bidegree::new(3, 1),
            sq2: Bidegree::new(2, 1)
        }
    );
    let oj = loop_module(&catalog::joker()).unwrap();
    assert_eq!(oj.rank(), 11);
    assert_eq!(
        signature(&oj).unwrap(),
        Signature {
            q0: Bidegree::new(3, 0),
            q1: Bidegree::new(5, 1),
            sq2: Bidegree::new(2, 1)
        }
    );
}

#[test]
fn cover_padding_adds_a_free_summand() {
    for m in [catalog::unit(), catalog::joker(), catalog::a1_tilde()] {
        let cover = minimal_free_cover(&m).unwrap();
        let plain = kernel_of_cover(&cover).unwrap();
        for shift in [
            Bidegree::new(0, 0),
            Bidegree::new(2, 1),
            Bidegree::new(-1, 3),
        ] {
            let padded = kernel_of_cover(&cover.pad(shift).unwrap()).unwrap();
            assert_eq!(padded.rank(), plain.rank() + 8);
            padded.ensure_valid().unwrap();
            assert!(dims_equal(
                &margolis_report(&plain).unwrap(),
                &margolis_report(&padded).unwrap()
            ));
        }
    }
}

#[test]
fn inverse_loops_undo_loops() {
    let om2 = loop_module(&catalog::unit()).unwrap();
    let inv = loop_power(&catalog::unit(), -1).unwrap();
    assert_eq!(signature(&inv).unwrap(), -signature(&om2).unwrap());
    assert_eq!(signature(&inv).unwrap(), signature(&dual(&om2)).unwrap());
    let back = loop_module(&inv).unwrap();
    assert!(is_stably_trivial(&back).unwrap());
    assert_eq!(
        picard_coordinates(&loop_power(&catalog::joker(), -2).unwrap()).unwrap(),
        PicardCoordinates::new(0, 0, -2, 1)
    );
}

#[test]
fn stably_trivial_examples() {
    assert!(is_stably_trivial(&direct_sum(&[&catalog::unit(), &catalog::a1()])).unwrap());
    let om2 = loop_module(&catalog::unit()).unwrap();
    let inv = loop_power(&catalog::unit(), -1).unwrap();
    assert!(is_stably_trivial(&tensor(&inv, &om2).unwrap()).unwrap());
    assert!(!is_stably_trivial(&catalog::a1_tilde()).unwrap());
    assert!(!is_stably_trivial(&catalog::a1()).unwrap());
    for n in 1..=4 {
        assert!(
            !is_stably_trivial(&joker_power(n).unwrap()).unwrap(),
            "J^{n}"
        );
    }
}

#[test]
fn joker_power_signatures_grow_linearly() {
    let base = signature(&catalog::joker()).unwrap();
    for n in -2..=4 {
        let jn = joker_power(n).unwrap();
        assert_eq!(signature(&jn).unwrap(), base.scale(n), "J^{n}");
        assert_eq!(
            picard_coordinates(&jn).unwrap(),
            PicardCoordinates::new(0, 0, 0, n as i64)
        );
    }
}

#[test]
fn evaluation_map_of_joker_is_a_stable_equivalence() {
    let ev = evaluation_map(&catalog::joker()).unwrap();
    ev.validate().unwrap();
    assert!(map_is_stable_equivalence(&ev).unwrap());
    let ev = evaluation_map(&catalog::a1_tilde()).unwrap();
    ev.validate().unwrap();
    assert!(!map_is_stable_equivalence(&ev).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn homology_matches_enumeration(e in any_module(40)) {
        matches_enumeration(&e.eval());
    }

    #[test]
    fn adding_a_free_summand_changes_nothing(e in any_module(48), a in -2i32..=2, b in -2i32..=2) {
        let m = e.eval();
        let padded = direct_sum(&[&m, &suspend(&catalog::a1(), a, b)]);
        prop_assert!(dims_equal(&margolis_report(&m).unwrap(), &margolis_report(&padded).unwrap()));
    }

    #[test]
    fn projective_tensor_anything_is_projective(e in any_module(8), a in -2i32..=2, b in -2i32..=2) {
        let p = suspend(&catalog::a1(), a, b);
        let m = e.eval();
        prop_assert!(is_projective(&tensor(&p, &m).unwrap()).unwrap());
        prop_assert!(is_projective(&tensor(&m, &p).unwrap()).unwrap());
    }

    #[test]
    fn projectives_have_dimension_divisible_by_eight(e in any_module(64)) {
        let m = e.eval();
        if is_projective(&m).unwrap() {
            prop_assert_eq!(m.rank() % 8, 0);
            prop_assert!(is_projective(&dual(&m)).unwrap());
        }
    }

    #[test]
    fn duality_negates_homology_degrees(e in any_module(64)) {
        let m = e.eval();
        let (h, hd) = (margolis_report(&m).unwrap(), margolis_report(&dual(&m)).unwrap());
        for (x, y) in h.iter().zip(hd.iter()) {
            let negated: std::collections::BTreeMap<_, _> = x.dims.iter().map(|(&b, &d)| (-b, d)).collect();
            prop_assert_eq!(&y.dims, &negated);
        }
    }

    #[test]
    fn loops_agree_with_tensoring_by_loop_unit(e in any_module(16)) {
        let m = e.eval();
        let om2 = loop_module(&catalog::unit()).unwrap();
        let left = margolis_report(&loop_module(&m).unwrap()).unwrap();
        let right = margolis_report(&tensor(&om2, &m).unwrap()).unwrap();
        prop_assert!(dims_equal(&left, &right));
    }

    #[test]
    fn evaluation_agrees_with_margolis_criterion(e in any_module(9)) {
        let m = e.eval();
        let ev = evaluation_map(&m).unwrap();
        prop_assert!(ev.validate().is_ok());
        prop_assert_eq!(map_is_stable_equivalence(&ev).unwrap(), is_invertible(&m).unwrap().is_some());
    }

    #[test]
    fn signatures_are_additive(a in invertible_module(12), b in invertible_module(12)) {
        let (m, n) = (a.eval(), b.eval());
        let product = tensor(&m, &n).unwrap();
        prop_assert_eq!(signature(&product).unwrap(), signature(&m).unwrap() + signature(&n).unwrap());
    }

    #[test]
    fn coordinates_are_a_homomorphism(a in invertible_module(12), b in invertible_module(12)) {
        let (m, n) = (a.eval(), b.eval());
        let (pm, pn) = (picard_coordinates(&m).unwrap(), picard_coordinates(&n).unwrap());
        prop_assert_eq!(picard_coordinates(&tensor(&m, &n).unwrap()).unwrap(), pm + pn);
        prop_assert_eq!(picard_coordinates(&dual(&m)).unwrap(), -pm);
        prop_assert!(is_stably_trivial(&tensor(&dual(&m), &m).unwrap()).unwrap());
    }

    #[test]
    fn suspension_shifts_coordinates(e in invertible_module(25), a in -3i32..=3, b in -3i32..=3) {
        let m = e.eval();
        let p = picard_coordinates(&m).unwrap();
        let shifted = picard_coordinates(&suspend(&m, a, b)).unwrap();
        prop_assert_eq!(shifted, p + PicardCoordinates::new(a as i64, b as i64, 0, 0));
    }
}
