//! Gluing two set-theoretic solutions `(B, R^B)` and `(C, R^C)` along a cross
//! map `R: C × B → C × B`.
//!
//! Points of the pair space are `(b₁, c₁, b₂, c₂)` and of the triple space
//! `(b₁, c₁, b₂, c₂, b₃, c₃)`: odd positions are B-type, even ones C-type. A
//! pair `(b, c)` is flattened to `b·|C| + c`.

use crate::error::{Error, Result};
use crate::par;
use crate::product::{compare_words, factorial, nth_function, nth_permutation, LegType, Perm, Placed, ProductSpace, TwoLeg};
use crate::report::CheckReport;
use crate::ybset::{check_braid, check_ybe, FiniteYBMap};

/// A map `C × B → C × B`; entry `c·|B| + b` is `R(c, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossMap {
    size_c: usize,
    size_b: usize,
    table: Vec<(usize, usize)>,
    invertible: bool,
}

impl CrossMap {
    pub fn new(size_c: usize, size_b: usize, table: Vec<(usize, usize)>) -> Result<Self> {
        if size_c == 0 || size_b == 0 {
            return Err(Error::SizeMismatch("set sizes must be positive".into()));
        }
        let n = size_c * size_b;
        if table.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: table.len() });
        }
        for &(c, b) in &table {
            if c >= size_c {
                return Err(Error::IndexOutOfRange { index: c, size: size_c });
            }
            if b >= size_b {
                return Err(Error::IndexOutOfRange { index: b, size: size_b });
            }
        }
        let mut seen = vec![false; n];
        let invertible = table.iter().all(|&(c, b)| !std::mem::replace(&mut seen[c * size_b + b], true));
        Ok(CrossMap { size_c, size_b, table, invertible })
    }

    pub fn from_fn(size_c: usize, size_b: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let table = (0..size_c * size_b).map(|k| f(k / size_b, k % size_b)).collect();
        Self::new(size_c, size_b, table)
    }

    pub fn identity(size_c: usize, size_b: usize) -> Self {
        Self::from_fn(size_c, size_b, |c, b| (c, b)).expect("identity cross map")
    }

    /// `R(c, b) = (b, c)`, which needs `|B| = |C|`.
    pub fn swap(size: usize) -> Self {
        Self::from_fn(size, size, |c, b| (b, c)).expect("swap cross map")
    }

    pub fn size_c(&self) -> usize {
        self.size_c
    }

    pub fn size_b(&self) -> usize {
        self.size_b
    }

    pub fn table(&self) -> &[(usize, usize)] {
        &self.table
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    pub fn apply(&self, c: usize, b: usize) -> (usize, usize) {
        self.table[c * self.size_b + b]
    }

    pub fn inverse(&self) -> Option<CrossMap> {
        if !self.invertible {
            return None;
        }
        let mut inv = vec![(0, 0); self.table.len()];
        for (k, &(c, b)) in self.table.iter().enumerate() {
            inv[c * self.size_b + b] = (k / self.size_b, k % self.size_b);
        }
        Some(CrossMap { table: inv, ..self.clone() })
    }
}

impl TwoLeg for CrossMap {
    fn leg_sizes(&self) -> (usize, usize) {
        (self.size_c, self.size_b)
    }

    fn image(&self, a: usize, b: usize) -> (usize, usize) {
        self.apply(a, b)
    }
}

/// Operators that may appear in the relations below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    RB,
    RC,
    R,
    RInv,
}

impl Op {
    fn legs(self) -> (LegType, LegType) {
        match self {
            Op::RB => (LegType::B, LegType::B),
            Op::RC => (LegType::C, LegType::C),
            Op::R | Op::RInv => (LegType::C, LegType::B),
        }
    }
}

type Factor = (Op, usize, usize);

/// A named identity between two products of placed operators.
struct Relation {
    name: &'static str,
    lhs: &'static [Factor],
    rhs: &'static [Factor],
}

struct Ops<'a> {
    rb: &'a FiniteYBMap,
    rc: &'a FiniteYBMap,
    r: &'a CrossMap,
    r_inv: Option<CrossMap>,
}

impl<'a> Ops<'a> {
    fn get(&self, op: Op) -> &dyn TwoLeg {
        match op {
            Op::RB => self.rb,
            Op::RC => self.rc,
            Op::R => self.r,
            Op::RInv => self.r_inv.as_ref().expect("inverse requested for invertible cross map"),
        }
    }
}

fn tag_at(pos: usize) -> LegType {
    if pos % 2 == 1 {
        LegType::B
    } else {
        LegType::C
    }
}

/// Evaluates `rel` on the subspace spanned by the positions it mentions. The
/// witness lists the values at those positions in increasing order.
fn check_relation(ops: &Ops<'_>, tags: impl Fn(usize) -> LegType, rel: &Relation) -> CheckReport {
    let mut positions: Vec<usize> = rel.lhs.iter().chain(rel.rhs).flat_map(|&(_, i, j)| [i, j]).collect();
    positions.sort_unstable();
    positions.dedup();
    let local = |p: usize| positions.iter().position(|&q| q == p).unwrap() + 1;
    let size_of = |t: LegType| match t {
        LegType::B => ops.rb.size(),
        LegType::C => ops.rc.size(),
    };
    let space = ProductSpace::new(positions.iter().map(|&p| size_of(tags(p))).collect());
    let place = |fs: &[Factor]| -> Vec<Placed<'_>> {
        fs.iter()
            .map(|&(op, i, j)| {
                debug_assert_eq!(op.legs(), (tags(i), tags(j)), "{} places {op:?} on wrong leg types", rel.name);
                Placed::at(ops.get(op), local(i), local(j))
            })
            .collect()
    };
    compare_words(&space, rel.name, &place(rel.lhs), &place(rel.rhs))
}

fn check_sizes(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap) -> Result<()> {
    if r.size_b != rb.size() || r.size_c != rc.size() {
        return Err(Error::SizeMismatch(format!(
            "cross map on C×B = {}×{} against |B| = {}, |C| = {}",
            r.size_c,
            r.size_b,
            rb.size(),
            rc.size()
        )));
    }
    Ok(())
}

use Op::{RInv, R, RB, RC};

const COMPAT_B: Relation = Relation { name: "compat_b", lhs: &[(RB, 2, 3), (R, 1, 2), (R, 1, 3)], rhs: &[(R, 1, 3), (R, 1, 2), (RB, 2, 3)] };
const COMPAT_C: Relation = Relation { name: "compat_c", lhs: &[(RC, 1, 2), (R, 2, 3), (R, 1, 3)], rhs: &[(R, 1, 3), (R, 2, 3), (RC, 1, 2)] };

/// `R^B_{23} R_{12} R_{13} = R_{13} R_{12} R^B_{23}` on `C×B×B` and
/// `R^C_{12} R_{23} R_{13} = R_{13} R_{23} R^C_{12}` on `C×C×B`.
pub fn check_cross_compat(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap) -> Result<CheckReport> {
    check_sizes(rb, rc, r)?;
    let ops = Ops { rb, rc, r, r_inv: None };
    let mut report = check_relation(&ops, |p| [LegType::C, LegType::B, LegType::B][p - 1], &COMPAT_B);
    report.merge(check_relation(&ops, |p| [LegType::C, LegType::C, LegType::B][p - 1], &COMPAT_C));
    Ok(report.finish())
}

const DERIVED: [Relation; 10] = [
    Relation { name: "rb1", lhs: &[(RB, 1, 5), (R, 4, 1), (R, 4, 5)], rhs: &[(R, 4, 5), (R, 4, 1), (RB, 1, 5)] },
    Relation { name: "rb2", lhs: &[(RInv, 4, 5), (RB, 1, 5), (R, 4, 1)], rhs: &[(R, 4, 1), (RB, 1, 5), (RInv, 4, 5)] },
    Relation { name: "rb3", lhs: &[(RB, 3, 5), (R, 2, 3), (R, 2, 5)], rhs: &[(R, 2, 5), (R, 2, 3), (RB, 3, 5)] },
    Relation { name: "rb4", lhs: &[(RInv, 2, 3), (RInv, 2, 5), (RB, 3, 5)], rhs: &[(RB, 3, 5), (RInv, 2, 5), (RInv, 2, 3)] },
    Relation { name: "rb5", lhs: &[(RB, 1, 3), (R, 6, 1), (R, 6, 3)], rhs: &[(R, 6, 3), (R, 6, 1), (RB, 1, 3)] },
    Relation { name: "rc1", lhs: &[(RC, 2, 6), (R, 6, 3), (R, 2, 3)], rhs: &[(R, 2, 3), (R, 6, 3), (RC, 2, 6)] },
    Relation { name: "rc2", lhs: &[(RInv, 2, 3), (RC, 2, 6), (R, 6, 3)], rhs: &[(R, 6, 3), (RC, 2, 6), (RInv, 2, 3)] },
    Relation { name: "rc3", lhs: &[(RC, 2, 4), (R, 4, 5), (R, 2, 5)], rhs: &[(R, 2, 5), (R, 4, 5), (RC, 2, 4)] },
    Relation { name: "rc4", lhs: &[(RInv, 4, 5), (RInv, 2, 5), (RC, 2, 4)], rhs: &[(RC, 2, 4), (RInv, 2, 5), (RInv, 4, 5)] },
    Relation { name: "rc5", lhs: &[(RC, 4, 6), (R, 6, 1), (R, 4, 1)], rhs: &[(R, 4, 1), (R, 6, 1), (RC, 4, 6)] },
];

/// The ten relations that the compatibility conditions imply on the triple
/// space. The ones involving `R⁻¹` need an invertible cross map.
pub fn check_derived_relations(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap) -> Result<CheckReport> {
    check_sizes(rb, rc, r)?;
    let r_inv = r.inverse().ok_or(Error::NotInvertible)?;
    let ops = Ops { rb, rc, r, r_inv: Some(r_inv) };
    let mut report = CheckReport::new();
    for rel in &DERIVED {
        report.merge(check_relation(&ops, tag_at, rel));
    }
    Ok(report.finish())
}

fn require_solution(rep: CheckReport, relation: &str) -> Result<()> {
    match rep.failures.into_iter().next() {
        None => Ok(()),
        Some(f) => Err(Error::Incompatible { relation: relation.to_string(), witness: f.witness }),
    }
}

fn require_passed(rep: CheckReport) -> Result<()> {
    match rep.failures.into_iter().next() {
        None => Ok(()),
        Some(f) => Err(Error::Incompatible { relation: f.relation, witness: f.witness }),
    }
}

/// Evaluates a 4-leg word on every pair `((b₁,c₁),(b₂,c₂))`.
fn pair_map(nb: usize, nc: usize, word: &[Placed<'_>]) -> FiniteYBMap {
    let space = ProductSpace::new(vec![nb, nc, nb, nc]);
    let n = nb * nc;
    FiniteYBMap::from_fn(n, |x, y| {
        let mut t = [x / nc, x % nc, y / nc, y % nc];
        crate::product::apply_word(word, &mut t);
        debug_assert!(space.encode(&t) < space.len());
        (t[0] * nc + t[1], t[2] * nc + t[3])
    })
    .expect("pair map stays in range")
}

/// `𝓡 = R_{41} R^B_{13} R^C_{24} R^{-1}_{23}` on `B × C`.
///
/// Both factors must solve the YBE and the cross map must be invertible and
/// compatible; otherwise the result is not claimed to be a solution and an
/// error is returned instead.
pub fn build_extension(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap) -> Result<FiniteYBMap> {
    check_sizes(rb, rc, r)?;
    let r_inv = r.inverse().ok_or(Error::NotInvertible)?;
    require_solution(check_ybe(rb), "ybe(RB)")?;
    require_solution(check_ybe(rc), "ybe(RC)")?;
    require_passed(check_cross_compat(rb, rc, r)?)?;
    Ok(extension_formula(rb, rc, r, &r_inv))
}

fn extension_formula(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap, r_inv: &CrossMap) -> FiniteYBMap {
    let word = [Placed::at(r, 4, 1), Placed::at(rb, 1, 3), Placed::at(rc, 2, 4), Placed::at(r_inv, 2, 3)];
    pair_map(rb.size(), rc.size(), &word)
}

/// The componentwise product `((b₁,c₁),(b₂,c₂)) ↦ ((b₁',c₁'),(b₂',c₂'))`.
pub fn direct_product(rb: &FiniteYBMap, rc: &FiniteYBMap) -> FiniteYBMap {
    let nc = rc.size();
    FiniteYBMap::from_fn(rb.size() * nc, |x, y| {
        let (b1, b2) = rb.apply(x / nc, y / nc);
        let (c1, c2) = rc.apply(x % nc, y % nc);
        (b1 * nc + c1, b2 * nc + c2)
    })
    .expect("direct product stays in range")
}

const SB_BRAID: [(&str, &[(usize, usize)], &[(usize, usize)], (usize, usize)); 3] = [
    ("brb1", &[(4, 1), (4, 5)], &[(4, 1), (4, 5)], (1, 5)),
    ("brb2", &[(2, 3), (2, 5)], &[(2, 3), (2, 5)], (3, 5)),
    ("brb3", &[(6, 1), (6, 3)], &[(6, 1), (6, 3)], (1, 3)),
];
const SC_BRAID: [(&str, &[(usize, usize)], &[(usize, usize)], (usize, usize)); 3] = [
    ("brc1", &[(6, 3), (2, 3)], &[(6, 3), (2, 3)], (2, 6)),
    ("brc2", &[(4, 5), (2, 5)], &[(4, 5), (2, 5)], (2, 4)),
    ("brc3", &[(6, 1), (4, 1)], &[(6, 1), (4, 1)], (4, 6)),
];

/// The braid-form relations `S_{ij} X = X S_{ij}` where `X` is the product of
/// two placed cross maps, e.g. `S^B_{15} R_{41} R_{45} = R_{41} R_{45} S^B_{15}`.
pub fn check_braid_derived_relations(sb: &FiniteYBMap, sc: &FiniteYBMap, r: &CrossMap) -> Result<CheckReport> {
    check_sizes(sb, sc, r)?;
    let mut report = CheckReport::new();
    let groups: [(&FiniteYBMap, &[(&str, &[(usize, usize)], &[(usize, usize)], (usize, usize)); 3]); 2] =
        [(sb, &SB_BRAID), (sc, &SC_BRAID)];
    for (s, rels) in groups {
        for &(name, lhs_r, rhs_r, (i, j)) in rels.iter() {
            let mut positions: Vec<usize> = lhs_r.iter().flat_map(|&(a, b)| [a, b]).chain([i, j]).collect();
            positions.sort_unstable();
            positions.dedup();
            let local = |p: usize| positions.iter().position(|&q| q == p).unwrap() + 1;
            let space = ProductSpace::new(
                positions.iter().map(|&p| if tag_at(p) == LegType::B { sb.size() } else { sc.size() }).collect(),
            );
            let mut lhs = vec![Placed::at(s, local(i), local(j))];
            lhs.extend(lhs_r.iter().map(|&(a, b)| Placed::at(r, local(a), local(b))));
            let mut rhs: Vec<Placed<'_>> = rhs_r.iter().map(|&(a, b)| Placed::at(r, local(a), local(b))).collect();
            rhs.push(Placed::at(s, local(i), local(j)));
            report.merge(compare_words(&space, name, &lhs, &rhs));
        }
    }
    Ok(report.finish())
}

/// `𝓢 = R_{23} S^B_{13} S^C_{24} R^{-1}_{23}` on `B × C`.
pub fn build_braid_extension(sb: &FiniteYBMap, sc: &FiniteYBMap, r: &CrossMap) -> Result<FiniteYBMap> {
    check_sizes(sb, sc, r)?;
    let r_inv = r.inverse().ok_or(Error::NotInvertible)?;
    require_solution(check_braid(sb), "braid(SB)")?;
    require_solution(check_braid(sc), "braid(SC)")?;
    require_passed(check_braid_derived_relations(sb, sc, r)?)?;
    let word = [Placed::at(r, 2, 3), Placed::at(sb, 1, 3), Placed::at(sc, 2, 4), Placed::at(&r_inv, 2, 3)];
    Ok(pair_map(sb.size(), sc.size(), &word))
}

/// Every cross map compatible with `(R^B, R^C)`, in lexicographic order of
/// the flattened table. The search space is capped at `|B|·|C| ≤ 4`.
pub fn search_cross_maps(rb: &FiniteYBMap, rc: &FiniteYBMap, invertible_only: bool) -> Result<Vec<CrossMap>> {
    let (nb, nc) = (rb.size(), rc.size());
    let m = nb * nc;
    if m > 4 {
        return Err(Error::TooLarge(format!("cross map search needs |B|·|C| <= 4, got {m}")));
    }
    let count = if invertible_only { factorial(m) } else { m.pow(m as u32) };
    Ok(par::filter_map_range(count, |rank| {
        let flat = if invertible_only { nth_permutation(m, rank) } else { nth_function(m, m, rank) };
        let table = flat.into_iter().map(|v| (v / nb, v % nb)).collect();
        let r = CrossMap::new(nc, nb, table).expect("candidate in range");
        check_cross_compat(rb, rc, &r).expect("sizes agree").passed.then_some(r)
    }))
}

/// The data of a set-theoretic twist on `X = B × C`: `T = S^B_{13} S^C_{24}`,
/// `F = R_{23}` on `X × X`, and `Φ = R_{23} R_{25}`, `Ψ = R_{45} R_{25}` on `X³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetTwist {
    pub t: FiniteYBMap,
    pub f: FiniteYBMap,
    pub phi: Perm,
    pub psi: Perm,
}

pub fn extension_set_twist(rb: &FiniteYBMap, rc: &FiniteYBMap, r: &CrossMap) -> Result<SetTwist> {
    check_sizes(rb, rc, r)?;
    if !r.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let (nb, nc) = (rb.size(), rc.size());
    let sb = crate::ybset::convert(rb, crate::ybset::Direction::YbToBraid);
    let sc = crate::ybset::convert(rc, crate::ybset::Direction::YbToBraid);
    let t = direct_product(&sb, &sc);
    let f = pair_map(nb, nc, &[Placed::at(r, 2, 3)]);
    let six = ProductSpace::new(vec![nb, nc, nb, nc, nb, nc]);
    let phi = Perm::from_word(&six, &[Placed::at(r, 2, 3), Placed::at(r, 2, 5)])?;
    let psi = Perm::from_word(&six, &[Placed::at(r, 4, 5), Placed::at(r, 2, 5)])?;
    Ok(SetTwist { t, f, phi, psi })
}

/// Checks `F_{12} Ψ = F_{23} Φ`, `Φ T_{23} = T_{23} Φ`, `Ψ T_{12} = T_{12} Ψ`
/// on `X³`, then the braid relation for `F T F⁻¹`.
pub fn check_set_twist(t: &FiniteYBMap, f: &FiniteYBMap, phi: &Perm, psi: &Perm) -> Result<CheckReport> {
    let n = t.size();
    if f.size() != n || phi.len() != n * n * n || psi.len() != n * n * n {
        return Err(Error::SizeMismatch("twist data must live on X², X² and X³".into()));
    }
    let f_inv = f.inverse().ok_or_else(|| Error::NotBijective("F".into()))?;
    let space = ProductSpace::uniform(n, 3);
    // T need not be bijective, so it is evaluated as a plain function.
    let placed = |m: &FiniteYBMap, i, j| -> Vec<usize> {
        (0..space.len())
            .map(|idx| {
                let mut u = space.decode(idx);
                crate::product::apply_word(&[Placed::at(m, i, j)], &mut u);
                space.encode(&u)
            })
            .collect()
    };
    let (f12, f23) = (placed(f, 1, 2), placed(f, 2, 3));
    let (t12, t23) = (placed(t, 1, 2), placed(t, 2, 3));
    let mut report = CheckReport::new();
    report.tick(3 * space.len());
    for p in 0..space.len() {
        if f12[psi.apply(p)] != f23[phi.apply(p)] {
            report.fail("twist1", space.decode(p));
        }
        if phi.apply(t23[p]) != t23[phi.apply(p)] {
            report.fail("twist2", space.decode(p));
        }
        if psi.apply(t12[p]) != t12[psi.apply(p)] {
            report.fail("twist3", space.decode(p));
        }
    }
    let twisted = f.compose(t)?.compose(&f_inv)?;
    report.merge(check_braid(&twisted));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ybset::{convert, enumerate_solutions, Direction, Equation};

    fn census2() -> Vec<FiniteYBMap> {
        enumerate_solutions(2, Equation::Ybe, true).unwrap()
    }

    #[test]
    fn identity_cross_map_is_compatible() {
        for rb in census2() {
            for rc in census2() {
                let r = CrossMap::identity(2, 2);
                assert!(check_cross_compat(&rb, &rc, &r).unwrap().passed);
                assert!(check_derived_relations(&rb, &rc, &r).unwrap().passed);
                assert_eq!(build_extension(&rb, &rc, &r).unwrap(), direct_product(&rb, &rc));
            }
        }
    }

    #[test]
    fn swap_cross_map_with_flips() {
        let p = FiniteYBMap::swap(2);
        let r = CrossMap::swap(2);
        assert!(check_cross_compat(&p, &p, &r).unwrap().passed);
        let ext = build_extension(&p, &p, &r).unwrap();
        assert!(check_ybe(&ext).passed);
        let s = build_braid_extension(&convert(&p, Direction::YbToBraid), &convert(&p, Direction::YbToBraid), &r).unwrap();
        assert!(check_braid(&s).passed);
    }

    #[test]
    fn constant_cross_map_fails() {
        let rb = FiniteYBMap::from_fn(2, |x, y| (x, (y + 1) % 2)).unwrap();
        let r = CrossMap::new(2, 2, vec![(0, 0); 4]).unwrap();
        let rep = check_cross_compat(&rb, &rb, &r).unwrap();
        assert!(!rep.passed);
        assert_eq!(build_extension(&rb, &rb, &r), Err(Error::NotInvertible));
    }

    #[test]
    fn size_mismatch() {
        let r = CrossMap::identity(3, 2);
        assert!(matches!(
            check_cross_compat(&FiniteYBMap::swap(2), &FiniteYBMap::swap(2), &r),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn search_counts() {
        let c = census2();
        let counts: Vec<usize> = c
            .iter()
            .flat_map(|rb| c.iter().map(move |rc| search_cross_maps(rb, rc, true).unwrap().len()))
            .collect();
        assert_eq!(
            counts,
            vec![8, 10, 6, 6, 8, 10, 24, 6, 6, 10, 6, 6, 4, 4, 6, 6, 6, 4, 4, 6, 8, 10, 6, 6, 8]
        );
        let p = FiniteYBMap::swap(2);
        assert_eq!(search_cross_maps(&p, &p, false).unwrap().len(), 256);
        let one = FiniteYBMap::identity(1);
        let widths: Vec<(usize, usize)> = c
            .iter()
            .map(|rc| (search_cross_maps(&one, rc, true).unwrap().len(), search_cross_maps(&one, rc, false).unwrap().len()))
            .collect();
        assert_eq!(widths, vec![(2, 4), (2, 4), (2, 2), (2, 2), (2, 2)]);
        assert!(matches!(search_cross_maps(&FiniteYBMap::swap(3), &p, true), Err(Error::TooLarge(_))));
    }

    #[test]
    fn twist_identity_data() {
        let t = FiniteYBMap::swap(2);
        let id = FiniteYBMap::identity(2);
        let rep = check_set_twist(&t, &id, &Perm::identity(8), &Perm::identity(8)).unwrap();
        assert!(rep.passed);
    }

    #[test]
    fn twist_extension_instance() {
        let p = FiniteYBMap::swap(2);
        let r = CrossMap::swap(2);
        let tw = extension_set_twist(&p, &p, &r).unwrap();
        assert!(check_set_twist(&tw.t, &tw.f, &tw.phi, &tw.psi).unwrap().passed);
    }
}
