//! Matrix solutions of the quantum and classical Yang–Baxter equations, placed
//! operators on mixed tensor products, and the linear extension constructions.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::CrossMap;
use crate::matrix::{q_frac, RationalMatrix, Q};
use crate::product::LegType;
use crate::report::CheckReport;
use crate::ybset::FiniteYBMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSpace {
    legs: Vec<(usize, LegType)>,
}

impl TensorSpace {
    pub fn new(legs: Vec<(usize, LegType)>) -> Result<Self> {
        if legs.iter().any(|&(d, _)| d == 0) {
            return Err(Error::DimensionMismatch("leg dimensions must be positive".into()));
        }
        Ok(TensorSpace { legs })
    }

    /// Legs of the given dimensions, all tagged `B`. For spaces where leg types
    /// do not matter.
    pub fn untyped(dims: &[usize]) -> Self {
        TensorSpace { legs: dims.iter().map(|&d| (d, LegType::B)).collect() }
    }

    pub fn uniform(dim: usize, count: usize) -> Self {
        Self::untyped(&vec![dim; count])
    }

    /// `(B, C, B, C, …)` with `count` legs.
    pub fn alternating(db: usize, dc: usize, count: usize) -> Self {
        let legs = (0..count).map(|k| if k % 2 == 0 { (db, LegType::B) } else { (dc, LegType::C) }).collect();
        TensorSpace { legs }
    }

    pub fn legs(&self) -> &[(usize, LegType)] {
        &self.legs
    }

    pub fn dim(&self) -> usize {
        self.legs.iter().map(|&(d, _)| d).product()
    }
}

/// A matrix on `k` legs together with where it goes and which leg types it
/// expects there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacedMatrix {
    pub base: RationalMatrix,
    pub positions: Vec<usize>,
    pub types: Vec<LegType>,
}

impl PlacedMatrix {
    pub fn new(base: RationalMatrix, positions: Vec<usize>, types: Vec<LegType>) -> Self {
        PlacedMatrix { base, positions, types }
    }

    pub fn embed(&self, space: &TensorSpace) -> Result<RationalMatrix> {
        if self.types.len() != self.positions.len() {
            return Err(Error::DimensionMismatch("one type tag per position is required".into()));
        }
        for (&p, &t) in self.positions.iter().zip(&self.types) {
            match space.legs.get(p.wrapping_sub(1)) {
                Some(&(_, tag)) if tag == t => {}
                Some(&(_, tag)) => {
                    return Err(Error::DimensionMismatch(format!("leg {p} has type {tag:?}, operator expects {t:?}")))
                }
                None => return Err(Error::DimensionMismatch(format!("position {p} out of range"))),
            }
        }
        place(&self.base, &self.positions, space)
    }
}

/// The matrix acting as `base` on the legs at `positions` (1-based, first
/// position most significant in `base`) and as the identity elsewhere.
pub fn place(base: &RationalMatrix, positions: &[usize], space: &TensorSpace) -> Result<RationalMatrix> {
    let k = space.legs.len();
    let mut seen = vec![false; k];
    for &p in positions {
        if p == 0 || p > k || std::mem::replace(&mut seen[p - 1], true) {
            return Err(Error::DimensionMismatch(format!("bad positions {positions:?} for {k} legs")));
        }
    }
    let sub: usize = positions.iter().map(|&p| space.legs[p - 1].0).product();
    if !base.is_square() || base.rows() != sub {
        return Err(Error::DimensionMismatch(format!(
            "a {}×{} matrix cannot act on legs {positions:?} of total dimension {sub}",
            base.rows(),
            base.cols()
        )));
    }
    let n = space.dim();
    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * space.legs[i + 1].0;
    }
    // Offset contributed by the base index `s`, spread over the placed legs.
    let spread: Vec<usize> = (0..sub)
        .map(|mut s| {
            let mut off = 0;
            for &p in positions.iter().rev() {
                let d = space.legs[p - 1].0;
                off += (s % d) * strides[p - 1];
                s /= d;
            }
            off
        })
        .collect();
    let gather = |idx: usize| -> usize {
        positions.iter().fold(0, |acc, &p| acc * space.legs[p - 1].0 + (idx / strides[p - 1]) % space.legs[p - 1].0)
    };
    let support: Vec<Vec<usize>> = (0..sub).map(|s| (0..sub).filter(|&t| !base.get(s, t).is_zero()).collect()).collect();
    let mut out = RationalMatrix::zeros(n, n);
    for row in 0..n {
        let s = gather(row);
        let rest = row - spread[s];
        for &t in &support[s] {
            out.set(row, rest + spread[t], base.get(s, t).clone());
        }
    }
    Ok(out)
}

fn place_all(base: &RationalMatrix, positions: &[usize], space: &TensorSpace) -> RationalMatrix {
    place(base, positions, space).expect("dimensions were validated by the caller")
}

/// The matrix of a set-theoretic map in the basis of pairs.
pub fn set_map_matrix(r: &FiniteYBMap) -> RationalMatrix {
    let n = r.size();
    let images: Vec<usize> = r.table().iter().map(|&(a, b)| a * n + b).collect();
    RationalMatrix::of_function(&images)
}

pub fn cross_map_matrix(r: &CrossMap) -> RationalMatrix {
    let images: Vec<usize> = r.table().iter().map(|&(c, b)| c * r.size_b() + b).collect();
    RationalMatrix::of_function(&images)
}

fn require_square(m: &RationalMatrix, dim: usize, what: &str) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::DimensionMismatch(format!("{what} must be {dim}×{dim}, got {}×{}", m.rows(), m.cols())));
    }
    Ok(())
}

fn equal_or_fail(report: &mut CheckReport, relation: &str, lhs: &RationalMatrix, rhs: &RationalMatrix) {
    report.tick(1);
    if let Some((i, j)) = lhs.first_difference(rhs) {
        report.fail(relation, vec![i, j]);
    }
}

fn zero_or_fail(report: &mut CheckReport, relation: &str, m: &RationalMatrix) {
    report.tick(1);
    if let Some((i, j)) = m.first_nonzero() {
        report.fail(relation, vec![i, j]);
    }
}

fn mul3(a: &RationalMatrix, b: &RationalMatrix, c: &RationalMatrix) -> RationalMatrix {
    &(a * b) * c
}

fn comm(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    a.commutator(b).expect("same shape")
}

/// `R_{12} R_{13} R_{23} = R_{23} R_{13} R_{12}` on `V^{⊗3}`, `dim V = dim`.
pub fn check_qybe(r: &RationalMatrix, dim: usize) -> Result<CheckReport> {
    require_square(r, dim * dim, "R")?;
    let space = TensorSpace::uniform(dim, 3);
    let (r12, r13, r23) = (place_all(r, &[1, 2], &space), place_all(r, &[1, 3], &space), place_all(r, &[2, 3], &space));
    let mut report = CheckReport::new();
    equal_or_fail(&mut report, "qybe", &mul3(&r12, &r13, &r23), &mul3(&r23, &r13, &r12));
    Ok(report.finish())
}

/// The braid relation `S_{12} S_{23} S_{12} = S_{23} S_{12} S_{23}`.
pub fn check_matrix_braid(s: &RationalMatrix, dim: usize) -> Result<CheckReport> {
    require_square(s, dim * dim, "S")?;
    let space = TensorSpace::uniform(dim, 3);
    let (s12, s23) = (place_all(s, &[1, 2], &space), place_all(s, &[2, 3], &space));
    let mut report = CheckReport::new();
    equal_or_fail(&mut report, "braid", &mul3(&s12, &s23, &s12), &mul3(&s23, &s12, &s23));
    Ok(report.finish())
}

/// `[r_{12}, r_{13}] + [r_{12}, r_{23}] + [r_{13}, r_{23}] = 0`.
pub fn check_cybe(r: &RationalMatrix, dim: usize) -> Result<CheckReport> {
    require_square(r, dim * dim, "r")?;
    let mut report = CheckReport::new();
    zero_or_fail(&mut report, "cybe", &cybe_expression(r, dim));
    Ok(report.finish())
}

/// The left-hand side of the CYBE as a matrix on `V^{⊗3}`.
pub fn cybe_expression(r: &RationalMatrix, dim: usize) -> RationalMatrix {
    let space = TensorSpace::uniform(dim, 3);
    let (r12, r13, r23) = (place_all(r, &[1, 2], &space), place_all(r, &[1, 3], &space), place_all(r, &[2, 3], &space));
    &(&comm(&r12, &r13) + &comm(&r12, &r23)) + &comm(&r13, &r23)
}

/// Dimensions of the two factors `B` and `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub b: usize,
    pub c: usize,
}

fn check_pair_dims(mb: &RationalMatrix, mc: &RationalMatrix, m: &RationalMatrix, dims: Dims) -> Result<()> {
    require_square(mb, dims.b * dims.b, "the B operator")?;
    require_square(mc, dims.c * dims.c, "the C operator")?;
    require_square(m, dims.c * dims.b, "the cross operator")
}

fn typed(dims: &[(usize, LegType)]) -> TensorSpace {
    TensorSpace { legs: dims.to_vec() }
}

/// The two mixed conditions needed for the classical extension:
///
/// * `fused` on `B⊗B⊗C`: `[r^B_{12}, r_{31} + r_{32}] + [r_{31}, r_{32}] = 0`,
/// * `fused2` on `C⊗C⊗B`: `[r^C_{12}, r_{13} + r_{23}] − [r_{13}, r_{23}] = 0`,
///
/// where `r ∈ C⊗B` is placed with its C-leg first.
pub fn check_classical_compat(rb: &RationalMatrix, rc: &RationalMatrix, r: &RationalMatrix, dims: Dims) -> Result<CheckReport> {
    check_pair_dims(rb, rc, r, dims)?;
    let (b, c) = ((dims.b, LegType::B), (dims.c, LegType::C));
    let mut report = CheckReport::new();

    let bbc = typed(&[b, b, c]);
    let rb12 = place_all(rb, &[1, 2], &bbc);
    let r31 = place_all(r, &[3, 1], &bbc);
    let r32 = place_all(r, &[3, 2], &bbc);
    let fused = &comm(&rb12, &(&r31 + &r32)) + &comm(&r31, &r32);
    zero_or_fail(&mut report, "fused", &fused);

    let ccb = typed(&[c, c, b]);
    let rc12 = place_all(rc, &[1, 2], &ccb);
    let r13 = place_all(r, &[1, 3], &ccb);
    let r23 = place_all(r, &[2, 3], &ccb);
    let fused2 = &comm(&rc12, &(&r13 + &r23)) - &comm(&r13, &r23);
    zero_or_fail(&mut report, "fused2", &fused2);

    Ok(report.finish())
}

/// `r̃ = r^B_{13} + r^C_{24} + r_{41} − r_{23}` on legs `(B, C, B, C)`, without
/// checking any hypothesis.
pub fn classical_extension_formula(rb: &RationalMatrix, rc: &RationalMatrix, r: &RationalMatrix, dims: Dims) -> Result<RationalMatrix> {
    check_pair_dims(rb, rc, r, dims)?;
    let s = TensorSpace::alternating(dims.b, dims.c, 4);
    let sum = &place_all(rb, &[1, 3], &s) + &place_all(rc, &[2, 4], &s);
    Ok(&(&sum + &place_all(r, &[4, 1], &s)) - &place_all(r, &[2, 3], &s))
}

fn first_failure(rep: CheckReport, prefix: &str) -> Result<()> {
    match rep.failures.into_iter().next() {
        None => Ok(()),
        Some(f) => Err(Error::Incompatible { relation: format!("{prefix}{}", f.relation), witness: f.witness }),
    }
}

/// `r̃` after checking that `r^B`, `r^C` solve the CYBE and that the mixed
/// conditions hold.
pub fn build_classical_extension(rb: &RationalMatrix, rc: &RationalMatrix, r: &RationalMatrix, dims: Dims) -> Result<RationalMatrix> {
    first_failure(check_classical_compat(rb, rc, r, dims)?, "")?;
    first_failure(check_cybe(rb, dims.b)?, "rB:")?;
    first_failure(check_cybe(rc, dims.c)?, "rC:")?;
    classical_extension_formula(rb, rc, r, dims)
}

/// `R^C_{12} R_{23} R_{13} = R_{13} R_{23} R^C_{12}` on `C⊗C⊗B` (`comp1`) and
/// `R^B_{23} R_{12} R_{13} = R_{13} R_{12} R^B_{23}` on `C⊗B⊗B` (`comp2`).
pub fn check_quantum_compat(rb: &RationalMatrix, rc: &RationalMatrix, r: &RationalMatrix, dims: Dims) -> Result<CheckReport> {
    check_pair_dims(rb, rc, r, dims)?;
    r.invert().map_err(|_| Error::NotInvertible)?;
    let (b, c) = ((dims.b, LegType::B), (dims.c, LegType::C));
    let mut report = CheckReport::new();

    let ccb = typed(&[c, c, b]);
    let rc12 = place_all(rc, &[1, 2], &ccb);
    let (r13, r23) = (place_all(r, &[1, 3], &ccb), place_all(r, &[2, 3], &ccb));
    equal_or_fail(&mut report, "comp1", &mul3(&rc12, &r23, &r13), &mul3(&r13, &r23, &rc12));

    let cbb = typed(&[c, b, b]);
    let rb23 = place_all(rb, &[2, 3], &cbb);
    let (r12, r13) = (place_all(r, &[1, 2], &cbb), place_all(r, &[1, 3], &cbb));
    equal_or_fail(&mut report, "comp2", &mul3(&rb23, &r12, &r13), &mul3(&r13, &r12, &rb23));

    Ok(report.finish())
}

/// `𝓡 = R_{41} R^B_{13} R^C_{24} R^{-1}_{23}` on legs `(B, C, B, C)`.
pub fn build_quantum_extension(rb: &RationalMatrix, rc: &RationalMatrix, r: &RationalMatrix, dims: Dims) -> Result<RationalMatrix> {
    first_failure(check_quantum_compat(rb, rc, r, dims)?, "")?;
    first_failure(check_qybe(rb, dims.b)?, "RB:")?;
    first_failure(check_qybe(rc, dims.c)?, "RC:")?;
    let r_inv = r.invert().map_err(|_| Error::NotInvertible)?;
    let s = TensorSpace::alternating(dims.b, dims.c, 4);
    let head = &place_all(r, &[4, 1], &s) * &place_all(rb, &[1, 3], &s);
    let tail = &place_all(rc, &[2, 4], &s) * &place_all(&r_inv, &[2, 3], &s);
    Ok(&head * &tail)
}

/// Twist data on `V = B ⊗ C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearTwist {
    pub t: RationalMatrix,
    pub f: RationalMatrix,
    pub phi: RationalMatrix,
    pub psi: RationalMatrix,
    pub dim: usize,
}

/// `T = S^B_{13} S^C_{24}` and `F = R_{23}` on `V⊗V`, `Φ = R_{23} R_{25}` and
/// `Ψ = R_{45} R_{25}` on `V⊗V⊗V`, with `S = P·R` for both factors.
pub fn extension_twist(rb: &RationalMatrix, rc: &RationalMatrix, r: &RationalMatrix, dims: Dims) -> Result<LinearTwist> {
    check_pair_dims(rb, rc, r, dims)?;
    let sb = &RationalMatrix::swap(dims.b) * rb;
    let sc = &RationalMatrix::swap(dims.c) * rc;
    let four = TensorSpace::alternating(dims.b, dims.c, 4);
    let six = TensorSpace::alternating(dims.b, dims.c, 6);
    Ok(LinearTwist {
        t: &place_all(&sb, &[1, 3], &four) * &place_all(&sc, &[2, 4], &four),
        f: place_all(r, &[2, 3], &four),
        phi: &place_all(r, &[2, 3], &six) * &place_all(r, &[2, 5], &six),
        psi: &place_all(r, &[4, 5], &six) * &place_all(r, &[2, 5], &six),
        dim: dims.b * dims.c,
    })
}

/// The twist conditions `F_{12} Ψ = F_{23} Φ` (`twist1`), `Φ T_{23} = T_{23} Φ`
/// (`twist2`), `Ψ T_{12} = T_{12} Ψ` (`twist3`), and the braid relation for
/// `F T F⁻¹` (`braid`).
pub fn check_twist(t: &RationalMatrix, f: &RationalMatrix, phi: &RationalMatrix, psi: &RationalMatrix, dim: usize) -> Result<CheckReport> {
    let (d2, d3) = (dim * dim, dim * dim * dim);
    require_square(t, d2, "T")?;
    require_square(f, d2, "F")?;
    require_square(phi, d3, "Phi")?;
    require_square(psi, d3, "Psi")?;
    let f_inv = f.invert().map_err(|_| Error::NotInvertible)?;
    for m in [t, phi, psi] {
        m.invert().map_err(|_| Error::NotInvertible)?;
    }
    let s = TensorSpace::uniform(dim, 3);
    let mut report = CheckReport::new();
    let (f12, f23) = (place_all(f, &[1, 2], &s), place_all(f, &[2, 3], &s));
    let (t12, t23) = (place_all(t, &[1, 2], &s), place_all(t, &[2, 3], &s));
    equal_or_fail(&mut report, "twist1", &(&f12 * psi), &(&f23 * phi));
    equal_or_fail(&mut report, "twist2", &(phi * &t23), &(&t23 * phi));
    equal_or_fail(&mut report, "twist3", &(psi * &t12), &(&t12 * psi));
    let twisted = mul3(f, t, &f_inv);
    report.merge(check_matrix_braid(&twisted, dim)?);
    Ok(report.finish())
}

/// The relations of the Lie algebra attached to three pairs of strands,
/// realized by placing `r^B`, `r^C`, `r` into the six-leg space
/// `(B, C, B, C, B, C)`, followed by the CYBE for the sums
/// `E_{12} = B_{13} + C_{24} + D_{41} − D_{23}` and its two siblings.
pub fn y3_lie_check(rb: &RationalMatrix, rc: &RationalMatrix, r: &RationalMatrix, dims: Dims) -> Result<CheckReport> {
    check_pair_dims(rb, rc, r, dims)?;
    let s = TensorSpace::alternating(dims.b, dims.c, 6);
    let bm = |i, j| place_all(rb, &[i, j], &s);
    let cm = |i, j| place_all(rc, &[i, j], &s);
    let dm = |i, j| place_all(r, &[i, j], &s);
    let bs = [((1, 3), bm(1, 3)), ((1, 5), bm(1, 5)), ((3, 5), bm(3, 5))];
    let cs = [((2, 4), cm(2, 4)), ((2, 6), cm(2, 6)), ((4, 6), cm(4, 6))];
    let ds: Vec<((usize, usize), RationalMatrix)> =
        [(2, 3), (2, 5), (4, 1), (4, 5), (6, 1), (6, 3)].into_iter().map(|(i, j)| ((i, j), dm(i, j))).collect();
    let d = |i: usize, j: usize| &ds.iter().find(|(k, _)| *k == (i, j)).unwrap().1;
    let disjoint = |a: (usize, usize), b: (usize, usize)| a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
    let mut report = CheckReport::new();

    let yb = |m: &[((usize, usize), RationalMatrix); 3]| &(&comm(&m[0].1, &m[1].1) + &comm(&m[0].1, &m[2].1)) + &comm(&m[1].1, &m[2].1);
    zero_or_fail(&mut report, "yb:B", &yb(&bs));
    zero_or_fail(&mut report, "yb:C", &yb(&cs));

    for (bi, bmat) in &bs {
        for (ci, cmat) in &cs {
            zero_or_fail(&mut report, &format!("comm:[B{}{},C{}{}]", bi.0, bi.1, ci.0, ci.1), &comm(bmat, cmat));
        }
    }
    for (label, family) in [("B", &bs), ("C", &cs)] {
        for (xi, xmat) in family.iter() {
            for (di, dmat) in &ds {
                if disjoint(*xi, *di) {
                    let name = format!("comm:[{label}{}{},D{}{}]", xi.0, xi.1, di.0, di.1);
                    zero_or_fail(&mut report, &name, &comm(xmat, dmat));
                }
            }
        }
    }
    for (k, (ai, amat)) in ds.iter().enumerate() {
        for (bi, bmat) in &ds[k + 1..] {
            if disjoint(*ai, *bi) {
                let name = format!("comm:[D{}{},D{}{}]", ai.0, ai.1, bi.0, bi.1);
                zero_or_fail(&mut report, &name, &comm(amat, bmat));
            }
        }
    }

    let mixed_b = [((1, 3), (6, 1), (6, 3)), ((1, 5), (4, 1), (4, 5)), ((3, 5), (2, 3), (2, 5))];
    for (bi, da, db) in mixed_b {
        let x = bm(bi.0, bi.1);
        let expr = &(&comm(&x, d(da.0, da.1)) + &comm(&x, d(db.0, db.1))) + &comm(d(da.0, da.1), d(db.0, db.1));
        zero_or_fail(&mut report, &format!("mixed:B{}{}", bi.0, bi.1), &expr);
    }
    let mixed_c = [((2, 4), (2, 5), (4, 5)), ((2, 6), (2, 3), (6, 3)), ((4, 6), (4, 1), (6, 1))];
    for (ci, da, db) in mixed_c {
        let x = cm(ci.0, ci.1);
        let expr = &(&comm(&x, d(da.0, da.1)) + &comm(&x, d(db.0, db.1))) - &comm(d(da.0, da.1), d(db.0, db.1));
        zero_or_fail(&mut report, &format!("mixed:C{}{}", ci.0, ci.1), &expr);
    }

    let e = |b: &RationalMatrix, c: &RationalMatrix, plus: &RationalMatrix, minus: &RationalMatrix| &(&(b + c) + plus) - minus;
    let e12 = e(&bs[0].1, &cs[0].1, d(4, 1), d(2, 3));
    let e13 = e(&bs[1].1, &cs[1].1, d(6, 1), d(2, 5));
    let e23 = e(&bs[2].1, &cs[2].1, d(6, 3), d(4, 5));
    let cybe = &(&comm(&e12, &e13) + &comm(&e12, &e23)) + &comm(&e13, &e23);
    zero_or_fail(&mut report, "cybe:E", &cybe);

    Ok(report.finish())
}

/// Standard 2×2 matrices and r-matrices used as fixtures.
pub mod fixtures {
    use super::*;

    pub fn e() -> RationalMatrix {
        RationalMatrix::from_ints(2, 2, &[0, 1, 0, 0])
    }

    pub fn f() -> RationalMatrix {
        RationalMatrix::from_ints(2, 2, &[0, 0, 1, 0])
    }

    pub fn h() -> RationalMatrix {
        RationalMatrix::from_ints(2, 2, &[1, 0, 0, -1])
    }

    /// `e⊗f + ¼ h⊗h`.
    pub fn sl2_r() -> RationalMatrix {
        &e().kron(&f()) + &h().kron(&h()).scale(&q_frac(1, 4))
    }

    /// `P r P`, the same tensor with its legs exchanged.
    pub fn flip(r: &RationalMatrix, d: usize) -> RationalMatrix {
        let p = RationalMatrix::swap(d);
        mul3(&p, r, &p)
    }

    pub fn diag(values: &[Q]) -> RationalMatrix {
        let n = values.len();
        RationalMatrix::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { Q::zero() })
    }

    pub fn one() -> Q {
        Q::one()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::matrix::q;

    /// Entry-by-entry construction of `I ⊗ A` style placements for comparison.
    fn naive_place_23(r: &RationalMatrix) -> RationalMatrix {
        RationalMatrix::identity(2).kron(r)
    }

    #[test]
    fn placement_examples() {
        let s = TensorSpace::uniform(2, 3);
        assert_eq!(place(&RationalMatrix::identity(4), &[1, 2], &s).unwrap(), RationalMatrix::identity(8));
        let r = RationalMatrix::from_ints(4, 4, &[1, 2, 0, 0, 3, 4, 5, 0, 0, 0, 6, 7, 8, 0, 0, 9]);
        assert_eq!(place(&r, &[2, 3], &s).unwrap(), naive_place_23(&r));
        assert_eq!(place(&r, &[1, 2], &s).unwrap(), r.kron(&RationalMatrix::identity(2)));
        // P placed on legs 1 and 3 is the permutation (x, y, z) ↦ (z, y, x).
        let p13 = place(&RationalMatrix::swap(2), &[1, 3], &s).unwrap();
        let images: Vec<usize> = (0..8).map(|k| (k % 2) * 4 + (k / 2 % 2) * 2 + k / 4).collect();
        assert_eq!(p13, RationalMatrix::of_function(&images));
        assert!(place(&r, &[1, 1], &s).is_err());
        assert!(place(&RationalMatrix::identity(3), &[1, 2], &s).is_err());
    }

    #[test]
    fn reversed_placement_is_conjugation_by_swap() {
        let r = sl2_r();
        let s = TensorSpace::uniform(2, 2);
        assert_eq!(place(&r, &[2, 1], &s).unwrap(), flip(&r, 2));
    }

    #[test]
    fn typed_placement_checks_tags() {
        let s = TensorSpace::alternating(2, 3, 4);
        let r = RationalMatrix::identity(6);
        assert!(PlacedMatrix::new(r.clone(), vec![2, 3], vec![LegType::C, LegType::B]).embed(&s).is_ok());
        assert!(PlacedMatrix::new(r, vec![1, 2], vec![LegType::C, LegType::B]).embed(&s).is_err());
    }

    #[test]
    fn qybe_examples() {
        assert!(check_qybe(&RationalMatrix::swap(2), 2).unwrap().passed);
        assert!(check_qybe(&RationalMatrix::identity(4), 2).unwrap().passed);
        assert!(check_qybe(&diag(&[q(1), q(2), q(3), q(5)]), 2).unwrap().passed);
        assert!(check_qybe(&RationalMatrix::identity(4), 3).is_err());
    }

    #[test]
    fn cybe_examples() {
        assert!(check_cybe(&RationalMatrix::zeros(4, 4), 2).unwrap().passed);
        assert!(check_cybe(&sl2_r(), 2).unwrap().passed);
        assert!(check_cybe(&e().kron(&e()), 2).unwrap().passed);
        assert!(!check_cybe(&e().kron(&f()), 2).unwrap().passed);
    }

    #[test]
    fn classical_zero_cross_term() {
        let dims = Dims { b: 2, c: 2 };
        let zero = RationalMatrix::zeros(4, 4);
        let r = sl2_r();
        assert!(check_classical_compat(&r, &r, &zero, dims).unwrap().passed);
        let tilde = build_classical_extension(&r, &r, &zero, dims).unwrap();
        assert!(check_cybe(&tilde, 4).unwrap().passed);
        let all_zero = build_classical_extension(&zero, &zero, &zero, dims).unwrap();
        assert!(all_zero.is_zero());
    }

    #[test]
    fn classical_sl2_triple_violates_mixed_conditions() {
        // With r = r^B = r^C the mixed conditions fail, and so does the CYBE
        // for the extended element.
        let r = sl2_r();
        let dims = Dims { b: 2, c: 2 };
        let rep = check_classical_compat(&r, &r, &r, dims).unwrap();
        assert_eq!(rep.failed_relations(), vec!["fused", "fused2"]);
        assert!(matches!(build_classical_extension(&r, &r, &r, dims), Err(Error::Incompatible { .. })));
        let tilde = classical_extension_formula(&r, &r, &r, dims).unwrap();
        assert!(!check_cybe(&tilde, 4).unwrap().passed);
    }

    #[test]
    fn classical_sign_flipped_and_flipped_legs() {
        let r = sl2_r();
        let dims = Dims { b: 2, c: 2 };
        for t in [1, 2, -3] {
            let rt = r.scale(&q(t));
            for cross in [rt.scale(&q(-1)), flip(&rt, 2)] {
                assert!(check_classical_compat(&rt, &rt, &cross, dims).unwrap().passed);
                let tilde = build_classical_extension(&rt, &rt, &cross, dims).unwrap();
                assert!(check_cybe(&tilde, 4).unwrap().passed);
            }
        }
    }

    #[test]
    fn quantum_swap_instance() {
        let p = RationalMatrix::swap(2);
        let dims = Dims { b: 2, c: 2 };
        assert!(check_quantum_compat(&p, &p, &RationalMatrix::identity(4), dims).unwrap().passed);
        assert!(check_quantum_compat(&p, &p, &p, dims).unwrap().passed);
        let big = build_quantum_extension(&p, &p, &p, dims).unwrap();
        assert!(check_qybe(&big, 4).unwrap().passed);
        let plain = build_quantum_extension(&p, &p, &RationalMatrix::identity(4), dims).unwrap();
        let s = TensorSpace::alternating(2, 2, 4);
        assert_eq!(plain, &place(&p, &[1, 3], &s).unwrap() * &place(&p, &[2, 4], &s).unwrap());
        assert_eq!(
            check_quantum_compat(&p, &p, &RationalMatrix::zeros(4, 4), dims),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn twist_examples() {
        let id4 = RationalMatrix::identity(4);
        let id8 = RationalMatrix::identity(8);
        assert!(check_twist(&RationalMatrix::swap(2), &id4, &id8, &id8, 2).unwrap().passed);

        let p = RationalMatrix::swap(2);
        let tw = extension_twist(&p, &p, &p, Dims { b: 2, c: 2 }).unwrap();
        assert!(check_twist(&tw.t, &tw.f, &tw.phi, &tw.psi, tw.dim).unwrap().passed);

        // Swapping Φ for a map that does not commute with T_{23} breaks the second condition.
        let s = TensorSpace::uniform(4, 3);
        let bad_phi = place(&diag(&(1..=16).map(q).collect::<Vec<_>>()), &[1, 2], &s).unwrap();
        let rep = check_twist(&tw.t, &tw.f, &bad_phi, &tw.psi, tw.dim).unwrap();
        assert!(rep.failed("twist1"));
    }
}
