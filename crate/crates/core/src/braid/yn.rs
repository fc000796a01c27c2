//! The map τ: Yₙ → VP₂ₙ, the Λ, N and M elements, the projection onto VPₙ⁺,
//! and the representation of Yₙ on `(B × C)ⁿ`.

use super::rep::{GeneratorAssignment, PermAssignment};
use super::word::{Gen, Letter, Word};
use crate::error::{Error, Result};
use crate::extension::{check_cross_compat, CrossMap};
use crate::product::{Perm, Placed, ProductSpace, TwoLeg};
use crate::report::CheckReport;
use crate::ybset::{check_ybe, FiniteYBMap};

/// `b_{ij} ↦ λ_{ij}`, `c_{ij} ↦ λ_{ij}`, `d_{ij} ↦ λ_{ji}`.
pub fn tau_yn(w: &Word, n: usize) -> Result<Word> {
    w.check_range(2 * n)?;
    w.substitute(|g| match g {
        Gen::B(i, j) if i % 2 == 1 && j % 2 == 1 => Ok(Word::gen(Gen::Lambda(i, j))),
        Gen::C(i, j) if i % 2 == 0 && j % 2 == 0 => Ok(Word::gen(Gen::Lambda(i, j))),
        Gen::D(i, j) if i % 2 == 0 && j % 2 == 1 => Ok(Word::gen(Gen::Lambda(j, i))),
        other => Err(Error::BadSymbol(format!("{other} is not a generator of Y_{n}"))),
    })
}

fn parse(s: &str) -> Word {
    s.parse().expect("fixed word")
}

/// `Λ₁₂ = d₄₁ b₁₃ c₂₄ d₂₃⁻¹`, `Λ₁₃ = d₆₁ b₁₅ c₂₆ d₂₅⁻¹`, `Λ₂₃ = d₆₃ b₃₅ c₄₆ d₄₅⁻¹`.
pub fn lambda_y3() -> [Word; 3] {
    [parse("d41 b13 c24 d23^-1"), parse("d61 b15 c26 d25^-1"), parse("d63 b35 c46 d45^-1")]
}

/// `N_{ij} = τ(Λ_{ij})`, written out.
pub fn n_elements() -> [Word; 3] {
    [parse("l14 l13 l24 l32^-1"), parse("l16 l15 l26 l52^-1"), parse("l36 l35 l46 l54^-1")]
}

/// The images of the N elements in VP₆⁺.
pub fn m_elements() -> [Word; 3] {
    n_elements().map(|w| plus_projection(&w).expect("λ words"))
}

/// `λ_{ji} ↦ λ_{ij}⁻¹` for `i < j`, then free reduction.
pub fn plus_projection(w: &Word) -> Result<Word> {
    let mapped: Result<Vec<Letter>> = w
        .letters()
        .iter()
        .map(|l| match l.gen {
            Gen::Lambda(i, j) if i < j => Ok(*l),
            Gen::Lambda(j, i) => Ok(Letter { gen: Gen::Lambda(i, j), inverse: !l.inverse }),
            other => Err(Error::BadSymbol(format!("{other} is not a λ generator"))),
        })
        .collect();
    Ok(Word(mapped?).free_reduce())
}

/// The YB relation `W₁₂ W₁₃ W₂₃ = W₂₃ W₁₃ W₁₂` for a triple of words.
pub fn yb_relation(t: &[Word; 3]) -> (Word, Word) {
    (Word::product(&[t[0].clone(), t[1].clone(), t[2].clone()]), Word::product(&[t[2].clone(), t[1].clone(), t[0].clone()]))
}

/// `b ↦ R^B`, `c ↦ R^C` and `d_{ij} ↦ R` (C-leg at the even position `i`,
/// B-leg at the odd position `j`) on `(B × C)ⁿ`, after checking that the
/// three maps are invertible and compatible and that `R^B`, `R^C` solve the YBE.
pub fn y_assignment(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap, n: usize) -> Result<PermAssignment> {
    let rep = check_cross_compat(rb, rc, r)?;
    if let Some(f) = rep.failures.into_iter().next() {
        return Err(Error::Incompatible { relation: f.relation, witness: f.witness });
    }
    for (name, m) in [("ybe(RB)", rb), ("ybe(RC)", rc)] {
        if let Some(f) = check_ybe(m).failures.into_iter().next() {
            return Err(Error::Incompatible { relation: name.into(), witness: f.witness });
        }
    }
    y_assignment_unchecked(rb, rc, r, n)
}

/// As [`y_assignment`] with only invertibility and sizes checked, so that
/// relators may fail.
pub fn y_assignment_unchecked(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap, n: usize) -> Result<PermAssignment> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    if r.size_b() != rb.size() || r.size_c() != rc.size() {
        return Err(Error::SizeMismatch(format!(
            "cross map is {}×{} but the factors have sizes {} and {}",
            r.size_c(),
            r.size_b(),
            rb.size(),
            rc.size()
        )));
    }
    let (rbi, rci, ri) = match (rb.inverse(), rc.inverse(), r.inverse()) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Err(Error::NotInvertible),
    };
    let sizes = (0..2 * n).map(|k| if k % 2 == 0 { rb.size() } else { rc.size() }).collect();
    let space = ProductSpace::new(sizes);
    let perm = |op: &dyn TwoLeg, i: usize, j: usize| Perm::from_word(&space, &[Placed::at(op, i, j)]).expect("fits");
    let mut a = GeneratorAssignment::new(Perm::identity(space.len())).with_points(space.clone());
    for i in 1..=2 * n {
        for j in 1..=2 * n {
            match (i % 2, j % 2) {
                (1, 1) if i < j => a.insert(Gen::B(i, j), perm(rb, i, j), perm(&rbi, i, j)),
                (0, 0) if i < j => a.insert(Gen::C(i, j), perm(rc, i, j), perm(&rci, i, j)),
                (0, 1) if j + 1 != i => a.insert(Gen::D(i, j), perm(r, i, j), perm(&ri, i, j)),
                _ => {}
            }
        }
    }
    Ok(a)
}

pub fn y3_assignment(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap) -> Result<PermAssignment> {
    y_assignment(rb, rc, r, 3)
}

/// `Λ₁₂Λ₁₃Λ₂₃ = Λ₂₃Λ₁₃Λ₁₂` under a Y₃ assignment.
pub fn lambda_relation_check(a: &PermAssignment) -> Result<CheckReport> {
    let (lhs, rhs) = yb_relation(&lambda_y3());
    let mut report = CheckReport::new();
    report.tick(1);
    if let Some(w) = a.compare(&lhs, &rhs)? {
        report.fail("lambda_yb", w);
    }
    Ok(report.finish())
}
