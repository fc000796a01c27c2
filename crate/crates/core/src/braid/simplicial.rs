//! Face, degeneracy and doubling maps on words in VPₙ and Bₙ, and checks of
//! the simplicial identities through representations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::presentation::{presentation, PresentationName, Relator};
use super::rep::{rep_vp, symmetric_assignment, PermAssignment};
use super::word::{vp_commute, commutation_normal_form, Gen, Word};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::ybset::FiniteYBMap;

/// A simplicial operator on words: `(word, index, strand count) ↦ word`.
pub type SimplicialMap = fn(&Word, usize, usize) -> Result<Word>;

fn lambda_indices(g: Gen, n: usize) -> Result<(usize, usize)> {
    match g {
        Gen::Lambda(k, l) if k <= n && l <= n => Ok((k, l)),
        Gen::Lambda(..) => Err(Error::BadIndex(format!("{g} is not a generator of VP_{n}"))),
        other => Err(Error::BadSymbol(format!("{other} is not a λ generator"))),
    }
}

fn check_op_index(i: usize, n: usize, what: &str) -> Result<()> {
    if n == 0 || i >= n {
        return Err(Error::BadIndex(format!("{what}_{i} is not defined on VP_{n}")));
    }
    Ok(())
}

/// `s_i: VPₙ → VPₙ₊₁`, doubling strand `i + 1` (0-based `i`, `0 ≤ i ≤ n-1`).
pub fn degeneracy_vp(w: &Word, i: usize, n: usize) -> Result<Word> {
    check_op_index(i, n, "s")?;
    let t = i + 1;
    let lam = |a: usize, b: usize| Gen::Lambda(a, b);
    w.substitute(|g| {
        let (a, b) = lambda_indices(g, n)?;
        let (k, l) = (a.min(b), a.max(b));
        let forward = a < b;
        let gens = if t < k {
            if forward { vec![lam(k + 1, l + 1)] } else { vec![lam(l + 1, k + 1)] }
        } else if t == k {
            if forward { vec![lam(k, l + 1), lam(k + 1, l + 1)] } else { vec![lam(l + 1, k + 1), lam(l + 1, k)] }
        } else if t < l {
            if forward { vec![lam(k, l + 1)] } else { vec![lam(l + 1, k)] }
        } else if t == l {
            if forward { vec![lam(k, l + 1), lam(k, l)] } else { vec![lam(l, k), lam(l + 1, k)] }
        } else {
            vec![g]
        };
        Ok(Word::from_gens(&gens))
    })
}

/// `d_i: VPₙ → VPₙ₋₁`, deleting strand `i + 1`.
pub fn face_vp(w: &Word, i: usize, n: usize) -> Result<Word> {
    check_op_index(i, n, "d")?;
    let gone = i + 1;
    let shift = |k: usize| if k > gone { k - 1 } else { k };
    w.substitute(|g| {
        let (k, l) = lambda_indices(g, n)?;
        Ok(if k == gone || l == gone { Word::empty() } else { Word::gen(Gen::Lambda(shift(k), shift(l))) })
    })
}

/// `D_n^{(k)} = s_0^k s_1^k ⋯ s_{n-1}^k: VPₙ → VP₍ₖ₊₁₎ₙ`, rightmost map first.
pub fn doubling_vp(w: &Word, n: usize, k: usize) -> Result<Word> {
    let mut out = w.clone();
    let mut strands = n;
    for j in (0..n).rev() {
        for _ in 0..k {
            out = degeneracy_vp(&out, j, strands)?;
            strands += 1;
        }
    }
    Ok(out)
}

/// `D_n(σ_i) = σ_{2i} σ_{2i+1} σ_{2i-1} σ_{2i}`.
pub fn doubling_bn(w: &Word, n: usize) -> Result<Word> {
    w.substitute(|g| match g {
        Gen::Sigma(i) if i < n => Ok(Word::from_gens(&[Gen::Sigma(2 * i), Gen::Sigma(2 * i + 1), Gen::Sigma(2 * i - 1), Gen::Sigma(2 * i)])),
        Gen::Sigma(_) => Err(Error::BadIndex(format!("{g} is not a generator of B_{n}"))),
        other => Err(Error::BadSymbol(format!("{other} is not a σ generator"))),
    })
}

/// The canonical form of a VP word modulo far commutativity only.
pub fn vp_normal_form(w: &Word) -> Word {
    commutation_normal_form(w, vp_commute)
}

fn vp_generators(n: usize) -> Vec<Gen> {
    if n < 2 {
        return Vec::new();
    }
    presentation(PresentationName::Vpn, n).expect("n ≥ 2").generators
}

/// The five simplicial identities, both sides applied to every generator of
/// VPₙ for `1 ≤ n ≤ max_n` and compared under `rep_vp(R, ·)`.
pub fn simplicial_check(r: &FiniteYBMap, max_n: usize) -> Result<CheckReport> {
    simplicial_check_with(r, max_n, face_vp, degeneracy_vp)
}

/// As [`simplicial_check`] with the face and degeneracy maps supplied.
///
/// Witnesses are `[n, i, j, g]` with `g` the position of the generator in
/// the VPₙ generator list.
pub fn simplicial_check_with(r: &FiniteYBMap, max_n: usize, face: SimplicialMap, degen: SimplicialMap) -> Result<CheckReport> {
    let mut reps: BTreeMap<usize, PermAssignment> = BTreeMap::new();
    for m in 1..=max_n + 2 {
        reps.insert(m, rep_vp(r, m)?);
    }
    let mut report = CheckReport::new();
    let compare = |report: &mut CheckReport, name: &str, m: usize, lhs: Result<Word>, rhs: Result<Word>, w: [usize; 4]| -> Result<()> {
        report.tick(1);
        let same = match (lhs, rhs) {
            (Ok(a), Ok(b)) => matches!(reps[&m].compare(&a, &b), Ok(None)),
            _ => false,
        };
        if !same {
            report.fail(name, w.to_vec());
        }
        Ok(())
    };
    for n in 1..=max_n {
        for (g_idx, &g) in vp_generators(n).iter().enumerate() {
            let x = Word::gen(g);
            // (1) d_i d_j = d_{j-1} d_i for i < j
            if n >= 3 {
                for j in 0..n {
                    for i in 0..j.min(n - 1) {
                        let lhs = face(&x, j, n).and_then(|y| face(&y, i, n - 1));
                        let rhs = face(&x, i, n).and_then(|y| face(&y, j - 1, n - 1));
                        compare(&mut report, "identity(1)", n - 2, lhs, rhs, [n, i, j, g_idx])?;
                    }
                }
            }
            // (2) s_i s_j = s_{j+1} s_i for i ≤ j
            for j in 0..n {
                for i in 0..=j {
                    let lhs = degen(&x, j, n).and_then(|y| degen(&y, i, n + 1));
                    let rhs = degen(&x, i, n).and_then(|y| degen(&y, j + 1, n + 1));
                    compare(&mut report, "identity(2)", n + 2, lhs, rhs, [n, i, j, g_idx])?;
                }
            }
            // (3) d_i s_j = s_{j-1} d_i for i < j
            for j in 0..n {
                for i in 0..j {
                    let lhs = degen(&x, j, n).and_then(|y| face(&y, i, n + 1));
                    let rhs = face(&x, i, n).and_then(|y| degen(&y, j - 1, n - 1));
                    compare(&mut report, "identity(3)", n, lhs, rhs, [n, i, j, g_idx])?;
                }
            }
            // (4) d_j s_j = id = d_{j+1} s_j
            for j in 0..n {
                let lhs = degen(&x, j, n).and_then(|y| face(&y, j, n + 1));
                compare(&mut report, "identity(4)", n, lhs, Ok(x.clone()), [n, j, j, g_idx])?;
                let lhs = degen(&x, j, n).and_then(|y| face(&y, j + 1, n + 1));
                compare(&mut report, "identity(4)", n, lhs, Ok(x.clone()), [n, j + 1, j, g_idx])?;
            }
            // (5) d_i s_j = s_j d_{i-1} for i > j + 1
            for j in 0..n {
                for i in j + 2..=n {
                    let lhs = degen(&x, j, n).and_then(|y| face(&y, i, n + 1));
                    let rhs = face(&x, i - 1, n).and_then(|y| degen(&y, j, n - 1));
                    compare(&mut report, "identity(5)", n, lhs, rhs, [n, i, j, g_idx])?;
                }
            }
        }
    }
    Ok(report.finish())
}

/// The two claims about naive face and degeneracy maps on B₃, checked in the
/// symmetric-group image, plus a sanity control.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct B3Report {
    /// Each relation passes when the corresponding claim is confirmed.
    pub report: CheckReport,
    /// The images of the arrangement `(1, 2, 3, 4)` under both sides of the
    /// `d_0`-image of the braid relation.
    pub d0_lhs_image: Vec<usize>,
    pub d0_rhs_image: Vec<usize>,
}

fn arrangement(a: &PermAssignment, w: &Word) -> Result<Vec<usize>> {
    let p = a.evaluate(w)?;
    let mut out = vec![0; p.len()];
    for slot in 0..p.len() {
        out[p.apply(slot)] = slot + 1;
    }
    Ok(out)
}

pub fn b3_counterexamples() -> Result<B3Report> {
    let s = |i| Gen::Sigma(i);
    let mut report = CheckReport::new();

    // d_0(σ_1) = σ_2 σ_1, d_0(σ_2) = σ_3
    let d0 = |g: Gen| -> Result<Word> {
        match g {
            Gen::Sigma(1) => Ok(Word::from_gens(&[s(2), s(1)])),
            Gen::Sigma(2) => Ok(Word::gen(s(3))),
            other => Err(Error::BadSymbol(other.to_string())),
        }
    };
    let braid = Relator::relation(&[s(1), s(2), s(1)], &[s(2), s(1), s(2)]);
    let (lhs, rhs) = (Word::from_gens(&[s(1), s(2), s(1)]), Word::from_gens(&[s(2), s(1), s(2)]));
    let (dl, dr) = (lhs.substitute(d0)?, rhs.substitute(d0)?);
    let s4 = symmetric_assignment(4);
    let (d0_lhs_image, d0_rhs_image) = (arrangement(&s4, &dl)?, arrangement(&s4, &dr)?);
    report.tick(1);
    if d0_lhs_image == d0_rhs_image {
        report.fail("d0_image_relation_fails_in_s4", vec![]);
    }

    // s_0(σ_1) = e, s_0(σ_2) = σ_2 turns the relation into σ_2 = σ_2².
    let s0 = |g: Gen| -> Result<Word> {
        match g {
            Gen::Sigma(1) => Ok(Word::empty()),
            Gen::Sigma(2) => Ok(Word::gen(s(2))),
            other => Err(Error::BadSymbol(other.to_string())),
        }
    };
    let image = braid.word.substitute(s0)?.free_reduce();
    let s3 = symmetric_assignment(3);
    report.tick(1);
    if image.is_empty() || s3.nontrivial_at(&image)?.is_none() {
        report.fail("s0_image_forces_sigma2_trivial", vec![]);
    }

    report.tick(1);
    if let Some(w) = s3.nontrivial_at(&braid.word)? {
        report.fail("braid_relator_control", w);
    }

    Ok(B3Report { report: report.finish(), d0_lhs_image, d0_rhs_image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::rep::rep_vbn;
    use crate::ybset::{braiding_from_sd, convert, BinaryOpTable, Direction};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn dihedral_r() -> FiniteYBMap {
        let op = BinaryOpTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3).unwrap();
        convert(&braiding_from_sd(&op), Direction::BraidToYb)
    }

    #[test]
    fn degeneracy_table() {
        // s_{i-1} with the paper's 1-based i
        assert_eq!(degeneracy_vp(&w("l23"), 0, 3).unwrap(), w("l34"));
        assert_eq!(degeneracy_vp(&w("l23"), 1, 3).unwrap(), w("l24 l34"));
        assert_eq!(degeneracy_vp(&w("l13"), 1, 3).unwrap(), w("l14"));
        assert_eq!(degeneracy_vp(&w("l13"), 2, 3).unwrap(), w("l14 l13"));
        assert_eq!(degeneracy_vp(&w("l12"), 2, 3).unwrap(), w("l12"));
        assert_eq!(degeneracy_vp(&w("l32"), 0, 3).unwrap(), w("l43"));
        assert_eq!(degeneracy_vp(&w("l32"), 1, 3).unwrap(), w("l43 l42"));
        assert_eq!(degeneracy_vp(&w("l31"), 1, 3).unwrap(), w("l41"));
        assert_eq!(degeneracy_vp(&w("l31"), 2, 3).unwrap(), w("l31 l41"));
        assert_eq!(degeneracy_vp(&w("l12^-1"), 0, 2).unwrap(), w("l23^-1 l13^-1"));
        assert!(matches!(degeneracy_vp(&w("l12"), 3, 3), Err(Error::BadIndex(_))));
    }

    #[test]
    fn faces() {
        assert_eq!(face_vp(&w("l23"), 0, 3).unwrap(), w("l12"));
        assert!(face_vp(&w("l12"), 1, 3).unwrap().is_empty());
        assert_eq!(face_vp(&w("l31 l12"), 1, 3).unwrap(), w("l21"));
        for g in vp_generators(3) {
            for j in 0..3 {
                let x = Word::gen(g);
                let s = degeneracy_vp(&x, j, 3).unwrap();
                assert_eq!(face_vp(&s, j, 4).unwrap().free_reduce(), x);
                assert_eq!(face_vp(&s, j + 1, 4).unwrap().free_reduce(), x);
            }
        }
    }

    #[test]
    fn doubling_examples() {
        let d12 = doubling_vp(&w("l12"), 3, 1).unwrap();
        assert_eq!(d12, w("l14 l24 l13 l23"));
        assert_eq!(vp_normal_form(&d12), w("l14 l13 l24 l23"));
        assert_eq!(vp_normal_form(&doubling_vp(&w("l13"), 3, 1).unwrap()), w("l16 l15 l26 l25"));
        assert_eq!(vp_normal_form(&doubling_vp(&w("l23"), 3, 1).unwrap()), w("l36 l35 l46 l45"));
        assert_eq!(doubling_bn(&w("s1"), 3).unwrap(), w("s2 s3 s1 s2"));
        assert_eq!(doubling_vp(&w("l12"), 2, 2).unwrap().len(), 9);
    }

    #[test]
    fn doubled_braid_relator_is_trivial() {
        let s = braiding_from_sd(&BinaryOpTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3).unwrap());
        let a = rep_vbn(&s, 6).unwrap();
        let relator = w("s1 s2 s1 s2^-1 s1^-1 s2^-1");
        let img = doubling_bn(&relator, 3).unwrap();
        assert_eq!(a.nontrivial_at(&img).unwrap(), None);
    }

    #[test]
    fn identities_hold() {
        for r in [FiniteYBMap::swap(2), dihedral_r()] {
            let rep = simplicial_check(&r, 3).unwrap();
            assert!(rep.passed, "{:?}", rep.failures);
            assert!(rep.relations_checked > 100);
        }
    }

    // deletes the strand but forgets to relabel the ones above it
    fn face_without_relabel(w: &Word, i: usize, n: usize) -> Result<Word> {
        w.substitute(|g| {
            let (k, l) = lambda_indices(g, n)?;
            Ok(if k == i + 1 || l == i + 1 { Word::empty() } else { Word::gen(g) })
        })
    }

    #[test]
    fn mutated_face_breaks_identity_one() {
        let rep = simplicial_check_with(&dihedral_r(), 3, face_without_relabel, degeneracy_vp).unwrap();
        assert!(rep.failed("identity(1)"), "{:?}", rep.failures);
        let first = rep.failures.iter().find(|f| f.relation == "identity(1)").unwrap();
        assert_eq!(first.witness.len(), 4);
    }

    #[test]
    fn b3_claims() {
        let b = b3_counterexamples().unwrap();
        assert!(b.report.passed, "{:?}", b.report.failures);
        assert_eq!(b.report.relations_checked, 3);
        assert_ne!(b.d0_lhs_image, b.d0_rhs_image);
    }
}
