use proptest::prelude::*;
use ybx_core::linear::fixtures::{flip, sl2_r};
use ybx_core::linear::*;
use ybx_core::matrix::{q, RationalMatrix};
use ybx_core::ybset::*;

fn small_matrix(d: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-3i64..=3, d * d).prop_map(move |v| RationalMatrix::from_ints(d, d, &v))
}

fn two_positions(k: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=k, 1..=k).prop_filter("distinct", |(a, b)| a != b).prop_map(|(a, b)| vec![a, b])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn place_is_multiplicative(a in small_matrix(4), b in small_matrix(4), pos in two_positions(3)) {
        let s = TensorSpace::uniform(2, 3);
        let lhs = &place(&a, &pos, &s).unwrap() * &place(&b, &pos, &s).unwrap();
        prop_assert_eq!(lhs, place(&(&a * &b), &pos, &s).unwrap());
    }

    #[test]
    fn disjoint_placements_commute(a in small_matrix(4), b in small_matrix(2), i in 1usize..=3) {
        // a on legs {i, i+1 mod 3}, b on the remaining leg
        let s = TensorSpace::uniform(2, 3);
        let j = i % 3 + 1;
        let k = 6 - i - j;
        let pa = place(&a, &[i, j], &s).unwrap();
        let pb = place(&b, &[k], &s).unwrap();
        prop_assert_eq!(&pa * &pb, &pb * &pa);
    }

    #[test]
    fn mixed_placement_is_multiplicative(a in small_matrix(2), b in small_matrix(2)) {
        // B has dimension 2, C has dimension 1: a C-leg is inert
        let s = TensorSpace::alternating(2, 1, 4);
        let lhs = &place(&a, &[3], &s).unwrap() * &place(&b, &[3], &s).unwrap();
        prop_assert_eq!(lhs, place(&(&a * &b), &[3], &s).unwrap());
    }
}

#[test]
fn linear_checks_agree_with_set_checks() {
    for code in 0..256usize {
        let table = (0..4).map(|k| ((code >> (2 * k)) & 1, (code >> (2 * k + 1)) & 1)).collect();
        let r = FiniteYBMap::new(2, table).unwrap();
        let m = set_map_matrix(&r);
        assert_eq!(check_ybe(&r).passed, check_qybe(&m, 2).unwrap().passed, "{:?}", r.table());
        assert_eq!(check_braid(&r).passed, check_matrix_braid(&m, 2).unwrap().passed, "{:?}", r.table());
    }
}

#[test]
fn classical_compat_implies_cybe_on_the_fixture_family() {
    let dims = Dims { b: 2, c: 2 };
    let zero = RationalMatrix::zeros(4, 4);
    let mut passing = 0;
    for t in [1, 2, -3] {
        let base = sl2_r().scale(&q(t));
        let family = [zero.clone(), base.clone(), base.scale(&q(-1)), flip(&base, 2)];
        for rb in &family {
            for rc in &family {
                for r in &family {
                    if check_classical_compat(rb, rc, r, dims).unwrap().passed {
                        passing += 1;
                        let tilde = build_classical_extension(rb, rc, r, dims).unwrap();
                        assert!(check_cybe(&tilde, 4).unwrap().passed);
                    }
                }
            }
        }
    }
    assert!(passing > 3);
}

#[test]
fn cybe_scales_quadratically() {
    let r = sl2_r();
    let e1 = cybe_expression(&r, 2);
    for t in [2, -3] {
        let et = cybe_expression(&r.scale(&q(t)), 2);
        assert_eq!(et, e1.scale(&q(t * t)));
    }
}
