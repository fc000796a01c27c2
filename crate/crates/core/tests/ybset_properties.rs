mod common;

use proptest::prelude::*;
use ybx_core::group::conjugation_quandle;
use ybx_core::ybset::*;

fn yb_map(n: usize) -> impl Strategy<Value = FiniteYBMap> {
    prop::collection::vec((0..n, 0..n), n * n).prop_map(move |t| FiniteYBMap::new(n, t).unwrap())
}

fn nondegenerate_map(n: usize) -> impl Strategy<Value = FiniteYBMap> {
    // R(x, y) = (σ_y(x), τ_x(y)) with every σ_y and τ_x a permutation
    let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
    (prop::collection::vec(perm.clone(), n), prop::collection::vec(perm, n))
        .prop_map(move |(sig, tau)| FiniteYBMap::from_fn(n, |x, y| (sig[y][x], tau[x][y])).unwrap())
}

#[test]
fn ybe_and_braid_agree_on_all_two_point_maps() {
    for code in 0..256usize {
        let table = (0..4).map(|k| ((code >> (2 * k)) & 1, (code >> (2 * k + 1)) & 1)).collect();
        let r = FiniteYBMap::new(2, table).unwrap();
        let s = convert(&r, Direction::YbToBraid);
        assert_eq!(check_ybe(&r).passed, check_braid(&s).passed);
    }
}

#[test]
fn self_distributivity_matches_braid_on_two_points() {
    for code in 0..16usize {
        let op = BinaryOpTable::new(2, (0..4).map(|k| (code >> k) & 1).collect()).unwrap();
        assert_eq!(check_self_distributive(&op).passed, check_braid(&braiding_from_sd(&op)).passed);
    }
}

#[test]
fn conjugation_quandles_of_the_corpus_are_self_distributive() {
    for (name, g) in common::corpus_groups() {
        assert!(check_self_distributive(&conjugation_quandle(&g)).passed, "{name}");
    }
}

#[test]
fn invertible_census_is_a_subset() {
    for n in 1..=2 {
        for e in [Equation::Ybe, Equation::Braid] {
            let all = enumerate_solutions(n, e, false).unwrap();
            for s in enumerate_solutions(n, e, true).unwrap() {
                assert!(all.contains(&s));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ybe_and_braid_agree_on_three_points(r in yb_map(3)) {
        let s = convert(&r, Direction::YbToBraid);
        prop_assert_eq!(check_ybe(&r).passed, check_braid(&s).passed);
    }

    #[test]
    fn convert_is_an_involution(r in yb_map(3)) {
        let back = convert(&convert(&r, Direction::YbToBraid), Direction::BraidToYb);
        prop_assert_eq!(back, r);
    }

    #[test]
    fn guitar_keeps_the_second_component(r in nondegenerate_map(3)) {
        let g = guitar_map(&r).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                prop_assert_eq!(g.apply(x, y).1, y);
            }
        }
    }

    #[test]
    fn sd_matches_braid_on_three_points(t in prop::collection::vec(0..3usize, 9)) {
        let op = BinaryOpTable::new(3, t).unwrap();
        prop_assert_eq!(check_self_distributive(&op).passed, check_braid(&braiding_from_sd(&op)).passed);
    }

    #[test]
    fn failure_witnesses_reproduce(r in yb_map(2)) {
        let rep = check_ybe(&r);
        prop_assert_eq!(rep.passed, rep.failures.is_empty());
        for f in &rep.failures {
            let (x, y, z) = (f.witness[0], f.witness[1], f.witness[2]);
            let apply = |t: &mut [usize; 3], i: usize, j: usize| {
                let (a, b) = r.apply(t[i], t[j]);
                t[i] = a;
                t[j] = b;
            };
            let mut lhs = [x, y, z];
            apply(&mut lhs, 1, 2);
            apply(&mut lhs, 0, 2);
            apply(&mut lhs, 0, 1);
            let mut rhs = [x, y, z];
            apply(&mut rhs, 0, 1);
            apply(&mut rhs, 0, 2);
            apply(&mut rhs, 1, 2);
            prop_assert_ne!(lhs, rhs);
        }
    }
}
