use proptest::prelude::*;
use ybx_core::braid::yn::yb_relation;
use ybx_core::braid::*;
use ybx_core::ybset::*;

fn invertible(n: usize) -> Vec<FiniteYBMap> {
    enumerate_solutions(n, Equation::Ybe, true).unwrap()
}

#[test]
fn representations_pass_their_presentations() {
    for size in 1..=3 {
        for r in invertible(size) {
            let s = convert(&r, Direction::YbToBraid);
            for n in 2..=4 {
                let vp = check_assignment(&presentation(PresentationName::Vpn, n).unwrap(), &rep_vp(&r, n).unwrap()).unwrap();
                assert!(vp.passed, "VP{n} {:?}: {:?}", r.table(), vp.failures);
                let hn = check_assignment(&presentation(PresentationName::Hn, n).unwrap(), &rep_hn(&s, n).unwrap()).unwrap();
                assert!(hn.passed, "H{n} {:?}: {:?}", s.table(), hn.failures);
                let vb = check_assignment(&presentation(PresentationName::Vbn, n).unwrap(), &rep_vbn(&s, n).unwrap()).unwrap();
                assert!(vb.passed, "VB{n} {:?}: {:?}", s.table(), vb.failures);
            }
        }
    }
}

#[test]
fn m_and_n_triples_satisfy_the_yb_relation() {
    let sols = invertible(2);
    for r in &sols {
        let a = rep_vp(r, 6).unwrap();
        for t in [m_elements(), n_elements()] {
            let (lhs, rhs) = yb_relation(&t);
            assert_eq!(a.compare(&lhs, &rhs).unwrap(), None, "{:?}", r.table());
        }
        let doubled = [Word::gen(Gen::Lambda(1, 2)), Word::gen(Gen::Lambda(1, 3)), Word::gen(Gen::Lambda(2, 3))]
            .map(|w| doubling_vp(&w, 3, 1).unwrap());
        let (lhs, rhs) = yb_relation(&doubled);
        assert_eq!(a.compare(&lhs, &rhs).unwrap(), None);
    }
}

#[test]
fn plus_projection_of_n_is_m() {
    let n = n_elements();
    let m = m_elements();
    for k in 0..3 {
        assert_eq!(plus_projection(&n[k]).unwrap(), m[k]);
    }
}

#[test]
fn tau_images_of_y3_relators_are_trivial_on_three_points() {
    let p = presentation(PresentationName::Yn, 3).unwrap();
    for r in invertible(3).iter().step_by(12) {
        let a = rep_vp(r, 6).unwrap();
        for rel in &p.relators {
            assert_eq!(a.nontrivial_at(&tau_yn(&rel.word, 3).unwrap()).unwrap(), None, "{}", rel.label);
        }
    }
}

// Position of strand `k` after ā, where ā applies the ρ letters of `a` left to right.
fn moved(a: &[usize], k: usize) -> usize {
    a.iter().fold(k, |k, &i| if k == i { i + 1 } else if k == i + 1 { i } else { k })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_lemma(n in 2usize..=4, seed in prop::collection::vec(0usize..100, 0..6), pick in 0usize..100, r_idx in 0usize..5) {
        let r = &invertible(2)[r_idx % 5];
        let s = convert(r, Direction::YbToBraid);
        let vb = rep_vbn(&s, n).unwrap();
        let mut a = rep_vp(r, n).unwrap();
        for i in 1..n {
            let p = vb.image(Gen::Rho(i)).unwrap().clone();
            a.insert(Gen::Rho(i), p.clone(), p);
        }
        let rhos: Vec<usize> = seed.iter().map(|x| x % (n - 1) + 1).collect();
        let word = Word::from_gens(&rhos.iter().map(|&i| Gen::Rho(i)).collect::<Vec<_>>());
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let (i, j) = pairs[pick % pairs.len()];
        let lhs = Word::product(&[word.inverse(), Word::gen(Gen::Lambda(i, j)), word.clone()]);
        let rhs = Word::gen(Gen::Lambda(moved(&rhos, i), moved(&rhos, j)));
        prop_assert_eq!(a.compare(&lhs, &rhs).unwrap(), None);
    }
}
