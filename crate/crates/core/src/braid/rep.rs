//! Assignments of generators to permutations or matrices, their evaluation on
//! words, and the representations built from Yang–Baxter and braided sets.

use std::collections::BTreeMap;

use super::presentation::Presentation;
use super::word::{Gen, Word};
use crate::error::{Error, Result};
use crate::linear::{self, TensorSpace};
use crate::matrix::RationalMatrix;
use crate::par;
use crate::product::{Perm, Placed, ProductSpace, TwoLeg};
use crate::report::CheckReport;
use crate::ybset::{check_braid, check_ybe, FiniteYBMap};

/// What a generator can be sent to.
pub trait GroupElement: Clone + PartialEq + Send + Sync {
    /// `self ∘ other`, `other` acting first.
    fn compose(&self, other: &Self) -> Self;
    /// Some position where `self` differs from the identity.
    fn nontrivial_at(&self) -> Option<Vec<usize>>;
}

impl GroupElement for Perm {
    fn compose(&self, other: &Self) -> Self {
        Perm::compose(self, other)
    }

    fn nontrivial_at(&self) -> Option<Vec<usize>> {
        self.first_moved().map(|p| vec![p])
    }
}

impl GroupElement for RationalMatrix {
    fn compose(&self, other: &Self) -> Self {
        self * other
    }

    fn nontrivial_at(&self) -> Option<Vec<usize>> {
        self.first_difference(&RationalMatrix::identity(self.rows())).map(|(i, j)| vec![i, j])
    }
}

/// Images of generators together with their inverses.
#[derive(Debug, Clone)]
pub struct GeneratorAssignment<T> {
    identity: T,
    images: BTreeMap<Gen, (T, T)>,
    points: Option<ProductSpace>,
}

pub type PermAssignment = GeneratorAssignment<Perm>;

impl<T: GroupElement> GeneratorAssignment<T> {
    pub fn new(identity: T) -> Self {
        GeneratorAssignment { identity, images: BTreeMap::new(), points: None }
    }

    /// Reports witnesses as tuples of `space` instead of flat indices.
    pub fn with_points(mut self, space: ProductSpace) -> Self {
        self.points = Some(space);
        self
    }

    pub fn insert(&mut self, g: Gen, image: T, inverse: T) {
        self.images.insert(g, (image, inverse));
    }

    pub fn image(&self, g: Gen) -> Option<&T> {
        self.images.get(&g).map(|(x, _)| x)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Gen> {
        self.images.keys()
    }

    pub fn identity(&self) -> &T {
        &self.identity
    }

    pub fn points(&self) -> Option<&ProductSpace> {
        self.points.as_ref()
    }

    /// The image of `w`, rightmost letter acting first.
    pub fn evaluate(&self, w: &Word) -> Result<T> {
        let mut acc = self.identity.clone();
        for l in w.letters() {
            let (x, xi) = self.images.get(&l.gen).ok_or_else(|| Error::MissingGenerator(l.gen.to_string()))?;
            acc = acc.compose(if l.inverse { xi } else { x });
        }
        Ok(acc)
    }

    fn witness(&self, at: Vec<usize>) -> Vec<usize> {
        match (&self.points, at.as_slice()) {
            (Some(space), [p]) => space.decode(*p),
            _ => at,
        }
    }

    /// Where `w` evaluates to something other than the identity, if anywhere.
    pub fn nontrivial_at(&self, w: &Word) -> Result<Option<Vec<usize>>> {
        Ok(self.evaluate(w)?.nontrivial_at().map(|at| self.witness(at)))
    }

    /// Whether `a` and `b` evaluate to the same element, with a witness if not.
    pub fn compare(&self, a: &Word, b: &Word) -> Result<Option<Vec<usize>>> {
        self.nontrivial_at(&a.concat(&b.inverse()))
    }
}

/// Every relator of `p` evaluates to the identity under `a`.
pub fn check_assignment<T: GroupElement>(p: &Presentation, a: &GeneratorAssignment<T>) -> Result<CheckReport> {
    if let Some(g) = p.generators.iter().find(|g| a.image(**g).is_none()) {
        return Err(Error::MissingGenerator(g.to_string()));
    }
    let results = par::map_range(p.relators.len(), |k| a.nontrivial_at(&p.relators[k].word));
    let mut report = CheckReport::new();
    report.tick(p.relators.len());
    for (rel, res) in p.relators.iter().zip(results) {
        if let Some(w) = res? {
            report.fail(rel.label.clone(), w);
        }
    }
    Ok(report.finish())
}

/// The operators `A_{ij}` for `1 ≤ i ≠ j ≤ n` built from `A_{i,i+1}` and the
/// transpositions `P_{i,i+1}` by conjugation:
/// `A_{i+1,i} = P_{i,i+1} A_{i,i+1} P_{i,i+1}`, and for `i < j-1`,
/// `A_{ij} = P_{j-1,j} ⋯ P_{i+1,i+2} A_{i,i+1} P_{i+1,i+2} ⋯ P_{j-1,j}` and
/// `A_{ji}` likewise from `A_{i+1,i}`.
pub fn conjugation_family<T: GroupElement>(n: usize, adjacent: impl Fn(usize) -> T, swap: impl Fn(usize) -> T) -> BTreeMap<(usize, usize), T> {
    let mut out = BTreeMap::new();
    for i in 1..n {
        let a = adjacent(i);
        let p = swap(i);
        let flipped = p.compose(&a).compose(&p);
        out.insert((i, i + 1), a);
        out.insert((i + 1, i), flipped);
    }
    for i in 1..n {
        for j in i + 2..=n {
            let mut left = swap(j - 1);
            for k in (i + 1..j - 1).rev() {
                left = left.compose(&swap(k));
            }
            let mut right = swap(i + 1);
            for k in i + 2..j {
                right = right.compose(&swap(k));
            }
            let up = left.compose(&out[&(i, i + 1)]).compose(&right);
            let down = left.compose(&out[&(i + 1, i)]).compose(&right);
            out.insert((i, j), up);
            out.insert((j, i), down);
        }
    }
    out
}

fn perm_space(size: usize, n: usize) -> ProductSpace {
    ProductSpace::uniform(size, n)
}

fn placed_perm(space: &ProductSpace, op: &dyn TwoLeg, i: usize, j: usize) -> Perm {
    Perm::from_word(space, &[Placed::at(op, i, j)]).expect("operator fits the space")
}

fn tuple_family(map: &FiniteYBMap, n: usize) -> (BTreeMap<(usize, usize), Perm>, BTreeMap<(usize, usize), Perm>) {
    let space = perm_space(map.size(), n);
    let inv = map.inverse().expect("invertibility checked by the caller");
    let swap = FiniteYBMap::swap(map.size());
    let p = |i| placed_perm(&space, &swap, i, i + 1);
    let fwd = conjugation_family(n, |i| placed_perm(&space, map, i, i + 1), p);
    let bwd = conjugation_family(n, |i| placed_perm(&space, &inv, i, i + 1), p);
    (fwd, bwd)
}

/// `λ_{kl} ↦ R_{kl}` on `Xⁿ`. `n = 1` gives the trivial assignment.
pub fn rep_vp(r: &FiniteYBMap, n: usize) -> Result<PermAssignment> {
    if !r.is_invertible() {
        return Err(Error::NotInvertible);
    }
    if !check_ybe(r).passed {
        return Err(Error::NotASolution("ybe"));
    }
    Ok(rep_vp_unchecked(r, n))
}

/// As [`rep_vp`] without checking the equation, for negative controls.
pub fn rep_vp_unchecked(r: &FiniteYBMap, n: usize) -> PermAssignment {
    let space = perm_space(r.size(), n);
    let mut a = GeneratorAssignment::new(Perm::identity(space.len())).with_points(space);
    let (fwd, bwd) = tuple_family(r, n);
    for ((k, l), x) in fwd {
        a.insert(Gen::Lambda(k, l), x, bwd[&(k, l)].clone());
    }
    a
}

fn braided(s: &FiniteYBMap) -> Result<()> {
    if !s.is_invertible() {
        return Err(Error::NotInvertible);
    }
    if !check_braid(s).passed {
        return Err(Error::NotASolution("braid equation"));
    }
    Ok(())
}

/// `x_{ij} ↦ S_{ij}` on `Xⁿ`.
pub fn rep_hn(s: &FiniteYBMap, n: usize) -> Result<PermAssignment> {
    braided(s)?;
    let space = perm_space(s.size(), n);
    let mut a = GeneratorAssignment::new(Perm::identity(space.len())).with_points(space);
    let (fwd, bwd) = tuple_family(s, n);
    for ((k, l), x) in fwd {
        a.insert(Gen::X(k, l), x, bwd[&(k, l)].clone());
    }
    Ok(a)
}

/// `σ_i ↦ S_{i,i+1}`, `ρ_i ↦ P_{i,i+1}` on `Xⁿ`, plus `P_{ij}` for every pair.
pub fn rep_vbn(s: &FiniteYBMap, n: usize) -> Result<PermAssignment> {
    braided(s)?;
    let space = perm_space(s.size(), n);
    let inv = s.inverse().expect("checked");
    let swap = FiniteYBMap::swap(s.size());
    let mut a = GeneratorAssignment::new(Perm::identity(space.len())).with_points(space.clone());
    for i in 1..n {
        a.insert(Gen::Sigma(i), placed_perm(&space, s, i, i + 1), placed_perm(&space, &inv, i, i + 1));
        let p = placed_perm(&space, &swap, i, i + 1);
        a.insert(Gen::Rho(i), p.clone(), p);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let p = placed_perm(&space, &swap, i, j);
            a.insert(Gen::P(i, j), p.clone(), p);
        }
    }
    Ok(a)
}

/// `σ_i, ρ_i ↦ (i, i+1)` as permutations of `n` points.
pub fn symmetric_assignment(n: usize) -> PermAssignment {
    let mut a = GeneratorAssignment::new(Perm::identity(n));
    for i in 1..n {
        let t = Perm::from_fn(n, |p| if p == i - 1 { i } else if p == i { i - 1 } else { p }).expect("transposition");
        a.insert(Gen::Sigma(i), t.clone(), t.clone());
        a.insert(Gen::Rho(i), t.clone(), t);
    }
    a
}

/// `λ_{kl} ↦ R_{kl}` on `V^{⊗n}` for an invertible QYBE solution `R` on `V⊗V`.
pub fn rep_vp_linear(r: &RationalMatrix, dim: usize, n: usize) -> Result<GeneratorAssignment<RationalMatrix>> {
    if !linear::check_qybe(r, dim)?.passed {
        return Err(Error::NotASolution("quantum Yang–Baxter equation"));
    }
    let inv = r.invert().map_err(|_| Error::NotInvertible)?;
    let space = TensorSpace::uniform(dim, n);
    let p = RationalMatrix::swap(dim);
    let place = |m: &RationalMatrix, i: usize| linear::place(m, &[i, i + 1], &space).expect("dimensions checked");
    let fwd = conjugation_family(n, |i| place(r, i), |i| place(&p, i));
    let bwd = conjugation_family(n, |i| place(&inv, i), |i| place(&p, i));
    let mut a = GeneratorAssignment::new(RationalMatrix::identity(space.dim()));
    for ((k, l), x) in fwd {
        a.insert(Gen::Lambda(k, l), x, bwd[&(k, l)].clone());
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::presentation::{presentation, PresentationName};
    use crate::group::GroupTable;
    use crate::ybset::{braiding_from_sd, convert, Direction};

    fn dihedral3() -> FiniteYBMap {
        // x ◁ y = 2y − x mod 3
        let op = crate::ybset::BinaryOpTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3).unwrap();
        braiding_from_sd(&op)
    }

    #[test]
    fn swap_gives_slot_transpositions() {
        let p = FiniteYBMap::swap(2);
        let a = rep_vp(&p, 2).unwrap();
        assert_eq!(a.image(Gen::Lambda(1, 2)), a.image(Gen::Lambda(2, 1)));
        let a3 = rep_vp(&p, 3).unwrap();
        let space = ProductSpace::uniform(2, 3);
        assert_eq!(a3.image(Gen::Lambda(3, 1)).unwrap(), &placed_perm(&space, &p, 1, 3));
        assert!(check_assignment(&presentation(PresentationName::Vpn, 3).unwrap(), &a3).unwrap().passed);
    }

    #[test]
    fn conjugation_matches_direct_placement() {
        let s = dihedral3();
        let r = convert(&s, Direction::BraidToYb);
        let a = rep_vp(&r, 4).unwrap();
        let space = ProductSpace::uniform(3, 4);
        for i in 1..=4 {
            for j in (1..=4).filter(|&j| j != i) {
                assert_eq!(a.image(Gen::Lambda(i, j)).unwrap(), &placed_perm(&space, &r, i, j), "({i},{j})");
            }
        }
    }

    #[test]
    fn representations_hold() {
        let s = dihedral3();
        let r = convert(&s, Direction::BraidToYb);
        for n in 2..=4 {
            let vp = presentation(PresentationName::Vpn, n).unwrap();
            assert!(check_assignment(&vp, &rep_vp(&r, n).unwrap()).unwrap().passed);
            let hn = presentation(PresentationName::Hn, n).unwrap();
            assert!(check_assignment(&hn, &rep_hn(&s, n).unwrap()).unwrap().passed);
            let vb = presentation(PresentationName::Vbn, n).unwrap();
            assert!(check_assignment(&vb, &rep_vbn(&s, n).unwrap()).unwrap().passed);
        }
        let s3 = GroupTable::from_permutations(&[vec![1, 0, 2], vec![0, 2, 1]]).unwrap();
        let conj = braiding_from_sd(&crate::group::conjugation_quandle(&s3));
        let vb = presentation(PresentationName::Vbn, 3).unwrap();
        assert!(check_assignment(&vb, &rep_vbn(&conj, 3).unwrap()).unwrap().passed);
    }

    #[test]
    fn errors() {
        let constant = FiniteYBMap::from_fn(2, |_, _| (0, 0)).unwrap();
        assert!(matches!(rep_vp(&constant, 2), Err(Error::NotInvertible)));
        assert!(matches!(rep_hn(&constant, 2), Err(Error::NotInvertible)));
        // the swap of (0,0) and (0,1) is invertible but solves neither equation
        let bad = FiniteYBMap::new(2, vec![(0, 1), (0, 0), (1, 0), (1, 1)]).unwrap();
        assert!(matches!(rep_vp(&bad, 3), Err(Error::NotASolution(_))));
        let a = GeneratorAssignment::new(Perm::identity(1));
        let vp = presentation(PresentationName::Vpn, 2).unwrap();
        assert!(matches!(check_assignment(&vp, &a), Err(Error::MissingGenerator(_))));
    }

    #[test]
    fn corrupted_assignment_fails_with_witness() {
        let r = FiniteYBMap::swap(2);
        let vp = presentation(PresentationName::Vpn, 3).unwrap();
        let mut a = rep_vp(&r, 3).unwrap();
        // flip one table entry of R_{12}
        let mut images = a.image(Gen::Lambda(1, 2)).unwrap().images().to_vec();
        images.swap(0, 1);
        let bad = Perm::new(images).unwrap();
        a.insert(Gen::Lambda(1, 2), bad.clone(), bad.inverse());
        let rep = check_assignment(&vp, &a).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.failures[0].witness.len(), 3);
    }

    #[test]
    fn free_group_on_two_generators() {
        let vp2 = presentation(PresentationName::Vpn, 2).unwrap();
        let r = FiniteYBMap::from_fn(2, |x, y| (y, x)).unwrap();
        assert!(check_assignment(&vp2, &rep_vp(&r, 2).unwrap()).unwrap().passed);
    }

    #[test]
    fn linear_representation() {
        let p = RationalMatrix::swap(2);
        let a = rep_vp_linear(&p, 2, 3).unwrap();
        let vp = presentation(PresentationName::Vpn, 3).unwrap();
        assert!(check_assignment(&vp, &a).unwrap().passed);
        let d = crate::linear::fixtures::diag(&[1, 2, 2, 1].map(crate::matrix::q));
        let a = rep_vp_linear(&d, 2, 4).unwrap();
        assert!(check_assignment(&presentation(PresentationName::Vpn, 4).unwrap(), &a).unwrap().passed);
    }
}
