//! Finite-dimensional Hopf algebras given by structure tensors, elements of
//! their tensor powers, the product `B ⊗_R C` and quasi-triangularity checks.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::matrix::{RationalMatrix, Q};
use crate::par;
use crate::report::CheckReport;

type Sparse = Vec<(usize, Q)>;

fn sparse(values: impl IntoIterator<Item = (usize, Q)>) -> Sparse {
    values.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Structure tensors of a bialgebra candidate in a fixed basis `e_0, …, e_{d-1}`.
///
/// `mult[(i*d + j)*d + k]` is the coefficient of `e_k` in `e_i e_j`,
/// `comult[(i*d + j)*d + k]` the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`, and
/// column `i` of `antipode` is `S(e_i)`.
#[derive(Debug, Clone)]
pub struct HopfData {
    dim: usize,
    mult: Vec<Q>,
    unit: Vec<Q>,
    comult: Vec<Q>,
    counit: Vec<Q>,
    antipode: RationalMatrix,
    mult_sp: Vec<Sparse>,
    comult_sp: Vec<Vec<((usize, usize), Q)>>,
    antipode_sp: Vec<Sparse>,
    unit_sp: Sparse,
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl Eq for HopfData {}

impl HopfData {
    pub fn new(dim: usize, mult: Vec<Q>, unit: Vec<Q>, comult: Vec<Q>, counit: Vec<Q>, antipode: RationalMatrix) -> Result<Self> {
        let d3 = dim * dim * dim;
        let check = |what: &str, len: usize, want: usize| {
            if len == want {
                Ok(())
            } else {
                Err(Error::DimensionMismatch(format!("{what} has {len} entries, expected {want}")))
            }
        };
        if dim == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        check("mult", mult.len(), d3)?;
        check("comult", comult.len(), d3)?;
        check("unit", unit.len(), dim)?;
        check("counit", counit.len(), dim)?;
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::DimensionMismatch(format!("antipode must be {dim}×{dim}")));
        }
        let mult_sp = (0..dim * dim).map(|ij| sparse((0..dim).map(|k| (k, mult[ij * dim + k].clone())))).collect();
        let comult_sp = (0..dim)
            .map(|i| {
                (0..dim * dim)
                    .filter(|&jk| !comult[i * dim * dim + jk].is_zero())
                    .map(|jk| ((jk / dim, jk % dim), comult[i * dim * dim + jk].clone()))
                    .collect()
            })
            .collect();
        let antipode_sp = (0..dim).map(|i| sparse((0..dim).map(|k| (k, antipode.get(k, i).clone())))).collect();
        let unit_sp = sparse(unit.iter().cloned().enumerate());
        Ok(HopfData { dim, mult, unit, comult, counit, antipode, mult_sp, comult_sp, antipode_sp, unit_sp })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &[Q] {
        &self.mult
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    pub fn comult(&self) -> &[Q] {
        &self.comult
    }

    pub fn counit(&self) -> &[Q] {
        &self.counit
    }

    pub fn antipode(&self) -> &RationalMatrix {
        &self.antipode
    }

    pub fn with_antipode(&self, antipode: RationalMatrix) -> Result<Self> {
        Self::new(self.dim, self.mult.clone(), self.unit.clone(), self.comult.clone(), self.counit.clone(), antipode)
    }

    fn product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.mult_sp[i * self.dim + j]
    }

    /// The same structure in the basis whose `i`-th vector is column `i` of `basis`.
    pub fn change_basis(&self, basis: &RationalMatrix) -> Result<Self> {
        let d = self.dim;
        if basis.rows() != d || basis.cols() != d {
            return Err(Error::DimensionMismatch(format!("basis change must be {d}×{d}")));
        }
        let inv = basis.invert()?;
        let col = |i: usize| -> Vec<Q> { (0..d).map(|k| basis.get(k, i).clone()).collect() };
        let to_new = |v: &[Q]| -> Vec<Q> { (0..d).map(|r| (0..d).fold(Q::zero(), |acc, k| acc + inv.get(r, k) * &v[k])).collect() };
        let alg = TensorAlgebra::new(vec![self]);
        let as_tensor = |v: &[Q]| Tensor::from_terms(1, v.iter().enumerate().map(|(k, x)| (vec![k], x.clone())));
        let dense1 = |t: &Tensor| -> Vec<Q> {
            let mut v = vec![Q::zero(); d];
            for (idx, x) in &t.terms {
                v[idx[0]] = x.clone();
            }
            v
        };

        let mut mult = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                let p = alg.mul(&as_tensor(&col(i)), &as_tensor(&col(j)));
                mult.extend(to_new(&dense1(&p)));
            }
        }
        let unit = to_new(&self.unit);
        let mut comult = vec![Q::zero(); d * d * d];
        for i in 0..d {
            let delta = alg.comultiply_leg(&as_tensor(&col(i)), 0, 0);
            // Re-express both legs in the new basis.
            for (idx, x) in &delta.terms {
                for a in 0..d {
                    if inv.get(a, idx[0]).is_zero() {
                        continue;
                    }
                    for b in 0..d {
                        if inv.get(b, idx[1]).is_zero() {
                            continue;
                        }
                        comult[(i * d + a) * d + b] += x * inv.get(a, idx[0]) * inv.get(b, idx[1]);
                    }
                }
            }
        }
        let counit = (0..d).map(|i| (0..d).fold(Q::zero(), |acc, k| acc + basis.get(k, i) * &self.counit[k])).collect();
        let antipode = &(&inv * &self.antipode) * basis;
        Self::new(d, mult, unit, comult, counit, antipode)
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d * d).all(|jk| self.comult[i * d * d + jk] == self.comult[i * d * d + (jk % d) * d + jk / d]))
    }
}

/// `K[G]`: basis the group elements, `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(group: &GroupTable) -> HopfData {
    let n = group.size();
    let mut mult = vec![Q::zero(); n * n * n];
    let mut comult = vec![Q::zero(); n * n * n];
    for g in 0..n {
        for h in 0..n {
            mult[(g * n + h) * n + group.mul(g, h)] = Q::one();
        }
        comult[(g * n + g) * n + g] = Q::one();
    }
    let unit = (0..n).map(|g| if g == 0 { Q::one() } else { Q::zero() }).collect();
    let antipode = RationalMatrix::of_function(&(0..n).map(|g| group.inverse(g)).collect::<Vec<_>>());
    HopfData::new(n, mult, unit, comult, vec![Q::one(); n], antipode).expect("consistent dimensions")
}

/// `K[G]*` in the basis of indicator functions `P_g`: `P_g P_h = δ_{g,h} P_g`,
/// `Δ(P_g) = Σ_h P_h ⊗ P_{h⁻¹g}`, `ε(P_g) = δ_{g,1}`, `S(P_g) = P_{g⁻¹}`.
pub fn dual_group_algebra(group: &GroupTable) -> HopfData {
    let n = group.size();
    let mut mult = vec![Q::zero(); n * n * n];
    let mut comult = vec![Q::zero(); n * n * n];
    for g in 0..n {
        mult[(g * n + g) * n + g] = Q::one();
        for h in 0..n {
            comult[(g * n + h) * n + group.mul(group.inverse(h), g)] = Q::one();
        }
    }
    let counit = (0..n).map(|g| if g == 0 { Q::one() } else { Q::zero() }).collect();
    let antipode = RationalMatrix::of_function(&(0..n).map(|g| group.inverse(g)).collect::<Vec<_>>());
    HopfData::new(n, mult, vec![Q::one(); n], comult, counit, antipode).expect("consistent dimensions")
}

/// Per-axiom verdicts plus two informational flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    #[serde(flatten)]
    pub report: CheckReport,
    pub commutative: bool,
    pub cocommutative: bool,
}

/// An element of `A_1 ⊗ … ⊗ A_k`, stored sparsely by multi-index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<usize>, Q>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<usize>, Q)>) -> Self {
        let mut t = Self::zero(arity);
        for (idx, x) in terms {
            debug_assert_eq!(idx.len(), arity);
            t.add_term(idx, x);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Q> {
        &self.terms
    }

    fn add_term(&mut self, idx: Vec<usize>, x: Q) {
        if x.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(x);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += x;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (idx, x) in &other.terms {
            out.add_term(idx.clone(), x.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Tensor {
        Tensor::from_terms(self.arity, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The smallest multi-index at which the two tensors differ.
    pub fn first_difference(&self, other: &Tensor) -> Option<Vec<usize>> {
        let keys = self.terms.keys().chain(other.terms.keys());
        keys.filter(|k| self.terms.get(*k) != other.terms.get(*k)).min().cloned()
    }

    /// Reorders legs: leg `k` of the result is leg `order[k]` of `self`.
    pub fn permute(&self, order: &[usize]) -> Tensor {
        Tensor::from_terms(order.len(), self.terms.iter().map(|(idx, x)| (order.iter().map(|&o| idx[o]).collect(), x.clone())))
    }

    /// Merges legs pairwise, `(i, j) ↦ i·inner + j`, for elements of
    /// `(B⊗C)^{⊗k}` written on `2k` legs.
    pub fn merge_pairs(&self, inner: usize) -> Tensor {
        Tensor::from_terms(
            self.arity / 2,
            self.terms.iter().map(|(idx, x)| (idx.chunks(2).map(|p| p[0] * inner + p[1]).collect(), x.clone())),
        )
    }

    /// Inverse of [`Tensor::merge_pairs`].
    pub fn split_pairs(&self, inner: usize) -> Tensor {
        Tensor::from_terms(
            self.arity * 2,
            self.terms.iter().map(|(idx, x)| (idx.iter().flat_map(|&v| [v / inner, v % inner]).collect(), x.clone())),
        )
    }
}

/// The algebra `A_1 ⊗ … ⊗ A_k` with componentwise multiplication.
pub struct TensorAlgebra<'a> {
    factors: Vec<&'a HopfData>,
}

fn expand(lists: &[&[(usize, Q)]]) -> Vec<(Vec<usize>, Q)> {
    let mut out = vec![(Vec::with_capacity(lists.len()), Q::one())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for (idx, x) in &out {
            for (k, y) in list.iter() {
                let mut i = idx.clone();
                i.push(*k);
                next.push((i, x * y));
            }
        }
        out = next;
    }
    out
}

impl<'a> TensorAlgebra<'a> {
    pub fn new(factors: Vec<&'a HopfData>) -> Self {
        TensorAlgebra { factors }
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|h| h.dim).product()
    }

    pub fn one(&self) -> Tensor {
        let units: Vec<&[(usize, Q)]> = self.factors.iter().map(|h| h.unit_sp.as_slice()).collect();
        Tensor::from_terms(self.arity(), expand(&units))
    }

    pub fn basis(&self, idx: Vec<usize>) -> Tensor {
        Tensor::from_terms(self.arity(), [(idx, Q::one())])
    }

    pub fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.arity());
        for (ia, x) in &a.terms {
            for (ib, y) in &b.terms {
                let lists: Vec<&[(usize, Q)]> =
                    self.factors.iter().enumerate().map(|(l, h)| h.product(ia[l], ib[l])).collect();
                let xy = x * y;
                for (idx, z) in expand(&lists) {
                    out.add_term(idx, z * &xy);
                }
            }
        }
        out
    }

    pub fn mul_all(&self, items: &[&Tensor]) -> Tensor {
        items.iter().fold(self.one(), |acc, t| self.mul(&acc, t))
    }

    /// Places `x`, an element of the factors at `positions` (0-based, in
    /// order), into the full product with units elsewhere.
    pub fn embed(&self, x: &Tensor, positions: &[usize]) -> Tensor {
        let mut out = Tensor::zero(self.arity());
        let rest: Vec<usize> = (0..self.arity()).filter(|p| !positions.contains(p)).collect();
        let units: Vec<&[(usize, Q)]> = rest.iter().map(|&p| self.factors[p].unit_sp.as_slice()).collect();
        let fill = expand(&units);
        for (idx, c) in &x.terms {
            for (u, cu) in &fill {
                let mut full = vec![0; self.arity()];
                for (k, &p) in positions.iter().enumerate() {
                    full[p] = idx[k];
                }
                for (k, &p) in rest.iter().enumerate() {
                    full[p] = u[k];
                }
                out.add_term(full, c * cu);
            }
        }
        out
    }

    /// Applies `Δ` of `host` to leg `pos` of `x`, producing two legs in its place.
    /// The result lives in an algebra with `host` doubled at `pos`.
    pub fn comultiply_leg(&self, x: &Tensor, pos: usize, host: usize) -> Tensor {
        let h = self.factors[host];
        let mut out = Tensor::zero(x.arity + 1);
        for (idx, c) in &x.terms {
            for ((j, k), y) in &h.comult_sp[idx[pos]] {
                let mut i = idx[..pos].to_vec();
                i.extend([*j, *k]);
                i.extend_from_slice(&idx[pos + 1..]);
                out.add_term(i, c * y);
            }
        }
        out
    }

    /// Applies `S` of `host` to leg `pos` of `x`.
    pub fn antipode_leg(&self, x: &Tensor, pos: usize, host: usize) -> Tensor {
        let h = self.factors[host];
        let mut out = Tensor::zero(x.arity);
        for (idx, c) in &x.terms {
            for (k, y) in &h.antipode_sp[idx[pos]] {
                let mut i = idx.clone();
                i[pos] = *k;
                out.add_term(i, c * y);
            }
        }
        out
    }

    /// Multiplies `x` by basis vectors, column `j` being `x · e_j` (or
    /// `e_j · x`), and solves for the inverse.
    pub fn inverse(&self, x: &Tensor) -> Result<Tensor> {
        let n = self.dim();
        if n > MAX_REGULAR_DIM {
            return Err(Error::TooLarge(format!("inverting in an algebra of dimension {n}")));
        }
        let dims: Vec<usize> = self.factors.iter().map(|h| h.dim).collect();
        let flat = |idx: &[usize]| idx.iter().zip(&dims).fold(0, |acc, (&i, &d)| acc * d + i);
        let unflat = |mut k: usize| {
            let mut idx = vec![0; dims.len()];
            for p in (0..dims.len()).rev() {
                idx[p] = k % dims[p];
                k /= dims[p];
            }
            idx
        };
        let mut left = RationalMatrix::zeros(n, n);
        for j in 0..n {
            for (idx, c) in &self.mul(x, &self.basis(unflat(j))).terms {
                left.set(flat(idx), j, c.clone());
            }
        }
        let mut rhs = vec![Q::zero(); n];
        for (idx, c) in &self.one().terms {
            rhs[flat(idx)] = c.clone();
        }
        let sol = left.solve(&rhs).map_err(|_| Error::NotInvertibleInAlgebra)?;
        let inv = Tensor::from_terms(self.arity(), sol.into_iter().enumerate().map(|(k, c)| (unflat(k), c)));
        if self.mul(&inv, x) != self.one() {
            return Err(Error::NotInvertibleInAlgebra);
        }
        Ok(inv)
    }
}

/// Algebras larger than this are not inverted by dense elimination.
pub const MAX_REGULAR_DIM: usize = 1024;

/// An element of `A ⊗ B` as a `dim A × dim B` coefficient matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement2 {
    pub coeffs: RationalMatrix,
}

impl AlgebraElement2 {
    pub fn new(coeffs: RationalMatrix) -> Self {
        AlgebraElement2 { coeffs }
    }

    pub fn from_tensor(t: &Tensor, rows: usize, cols: usize) -> Self {
        let mut coeffs = RationalMatrix::zeros(rows, cols);
        for (idx, c) in &t.terms {
            coeffs.set(idx[0], idx[1], c.clone());
        }
        AlgebraElement2 { coeffs }
    }

    pub fn to_tensor(&self) -> Tensor {
        let (r, c) = (self.coeffs.rows(), self.coeffs.cols());
        Tensor::from_terms(2, (0..r * c).map(|k| (vec![k / c, k % c], self.coeffs.get(k / c, k % c).clone())))
    }

    /// The unit `1 ⊗ 1`.
    pub fn one(a: &HopfData, b: &HopfData) -> Self {
        Self::from_tensor(&TensorAlgebra::new(vec![a, b]).one(), a.dim, b.dim)
    }

    /// The same element with legs exchanged.
    pub fn flip(&self) -> Self {
        AlgebraElement2 { coeffs: self.coeffs.transpose() }
    }

    fn fits(&self, a: &HopfData, b: &HopfData) -> Result<()> {
        if self.coeffs.rows() != a.dim || self.coeffs.cols() != b.dim {
            return Err(Error::DimensionMismatch(format!(
                "element is {}×{}, hosts have dimensions {} and {}",
                self.coeffs.rows(),
                self.coeffs.cols(),
                a.dim,
                b.dim
            )));
        }
        Ok(())
    }
}

fn compare(report: &mut CheckReport, relation: &str, lhs: &Tensor, rhs: &Tensor, context: &[usize]) {
    report.tick(1);
    if let Some(idx) = lhs.first_difference(rhs) {
        let mut w = context.to_vec();
        w.extend(idx);
        report.fail(relation, w);
    }
}

/// Runs `check` for every index below `n` in parallel and merges in order.
fn over_basis(n: usize, check: impl Fn(usize) -> CheckReport + Sync + Send) -> CheckReport {
    let mut total = CheckReport::new();
    for r in par::map_range(n, check) {
        total.merge(r);
    }
    total
}

/// Associativity, unit, coassociativity, counit, multiplicativity of `Δ` and
/// `ε`, and the antipode identity, each checked on basis elements.
pub fn check_hopf_axioms(h: &HopfData) -> HopfReport {
    let d = h.dim;
    let one = TensorAlgebra::new(vec![h]);
    let two = TensorAlgebra::new(vec![h, h]);
    let e = |i: usize| one.basis(vec![i]);
    let unit1 = one.one();
    let scalar = |c: Q| Tensor::from_terms(0, [(vec![], c)]);
    let counit_leg = |t: &Tensor, pos: usize| -> Tensor {
        let mut out = Tensor::zero(t.arity - 1);
        for (idx, c) in &t.terms {
            let mut i = idx.clone();
            let k = i.remove(pos);
            out.add_term(i, c * &h.counit[k]);
        }
        out
    };
    let counit_of = |t: &Tensor| counit_leg(t, 0);
    let delta = |i: usize| one.comultiply_leg(&e(i), 0, 0);
    let multiply_legs = |t: &Tensor| -> Tensor {
        let mut out = Tensor::zero(1);
        for (idx, c) in &t.terms {
            for (k, y) in h.product(idx[0], idx[1]) {
                out.add_term(vec![*k], c * y);
            }
        }
        out
    };

    let mut report = CheckReport::new();

    report.merge(over_basis(d * d, |ij| {
        let (i, j) = (ij / d, ij % d);
        let mut r = CheckReport::new();
        let eij = one.mul(&e(i), &e(j));
        for k in 0..d {
            compare(&mut r, "associativity", &one.mul(&eij, &e(k)), &one.mul(&e(i), &one.mul(&e(j), &e(k))), &[i, j, k]);
        }
        // Δ(e_i e_j) = Δ(e_i) Δ(e_j)
        compare(&mut r, "comult_multiplicative", &one.comultiply_leg(&eij, 0, 0), &two.mul(&delta(i), &delta(j)), &[i, j]);
        compare(&mut r, "counit_multiplicative", &counit_of(&eij), &counit_of(&e(i)).scale(&h.counit[j]), &[i, j]);
        r
    }));

    report.merge(over_basis(d, |i| {
        let mut r = CheckReport::new();
        compare(&mut r, "unit", &one.mul(&unit1, &e(i)), &e(i), &[i]);
        compare(&mut r, "unit", &one.mul(&e(i), &unit1), &e(i), &[i]);
        let di = delta(i);
        let left = two.comultiply_leg(&di, 0, 0);
        let right = two.comultiply_leg(&di, 1, 1);
        compare(&mut r, "coassociativity", &left, &right, &[i]);
        compare(&mut r, "counit", &counit_leg(&di, 0), &e(i), &[i]);
        compare(&mut r, "counit", &counit_leg(&di, 1), &e(i), &[i]);
        let eps = unit1.scale(&h.counit[i]);
        compare(&mut r, "antipode", &multiply_legs(&two.antipode_leg(&di, 0, 0)), &eps, &[i]);
        compare(&mut r, "antipode", &multiply_legs(&two.antipode_leg(&di, 1, 1)), &eps, &[i]);
        r
    }));

    // Δ(1) = 1⊗1 and ε(1) = 1.
    compare(&mut report, "comult_multiplicative", &one.comultiply_leg(&unit1, 0, 0), &two.one(), &[]);
    compare(&mut report, "counit_multiplicative", &counit_of(&unit1), &scalar(Q::one()), &[]);

    HopfReport { report: report.finish(), commutative: h.is_commutative(), cocommutative: h.is_cocommutative() }
}

/// The four conditions on `R ∈ C⊗B` under which `B ⊗_R C` is a Hopf algebra:
/// `(Δ^C⊗id)R = R_{23}R_{13}`, `(id⊗Δ^B)R = R_{12}R_{13}`,
/// `(id⊗S^B)R = R^{-1}` and `(S^C⊗id)R = R^{-1}`.
pub fn check_cross_element(b: &HopfData, c: &HopfData, r: &AlgebraElement2) -> Result<CheckReport> {
    r.fits(c, b)?;
    let cb = TensorAlgebra::new(vec![c, b]);
    let rt = r.to_tensor();
    let r_inv = cb.inverse(&rt)?;
    let mut report = CheckReport::new();

    let ccb = TensorAlgebra::new(vec![c, c, b]);
    let lhs = cb.comultiply_leg(&rt, 0, 0);
    let rhs = ccb.mul(&ccb.embed(&rt, &[1, 2]), &ccb.embed(&rt, &[0, 2]));
    compare(&mut report, "delta_c", &lhs, &rhs, &[]);

    let cbb = TensorAlgebra::new(vec![c, b, b]);
    let lhs = cb.comultiply_leg(&rt, 1, 1);
    let rhs = cbb.mul(&cbb.embed(&rt, &[0, 1]), &cbb.embed(&rt, &[0, 2]));
    compare(&mut report, "delta_b", &lhs, &rhs, &[]);

    compare(&mut report, "antipode_b", &cb.antipode_leg(&rt, 1, 1), &r_inv, &[]);
    compare(&mut report, "antipode_c", &cb.antipode_leg(&rt, 0, 0), &r_inv, &[]);
    Ok(report.finish())
}

/// `B ⊗_R C` with basis `(b, c) ↦ b·dim C + c`: componentwise product,
/// `Δ(b⊗c) = R_{23} Δ^B_{13}(b) Δ^C_{24}(c) R_{23}^{-1}`,
/// `S(b⊗c) = R_{21}^{-1} (S^B(b) ⊗ S^C(c)) R_{21}` and `ε = ε^B ⊗ ε^C`.
pub fn build_product_hopf(b: &HopfData, c: &HopfData, r: &AlgebraElement2) -> Result<HopfData> {
    let rep = check_cross_element(b, c, r)?;
    if let Some(f) = rep.failures.into_iter().next() {
        return Err(Error::Incompatible { relation: f.relation, witness: f.witness });
    }
    let (db, dc) = (b.dim, c.dim);
    let d = db * dc;
    let cb = TensorAlgebra::new(vec![c, b]);
    let bc = TensorAlgebra::new(vec![b, c]);
    let bcbc = TensorAlgebra::new(vec![b, c, b, c]);
    let rt = r.to_tensor();
    let r_inv = cb.inverse(&rt)?;
    let r23 = bcbc.embed(&rt, &[1, 2]);
    let r23_inv = bcbc.embed(&r_inv, &[1, 2]);
    let r21 = rt.permute(&[1, 0]);
    let r21_inv = r_inv.permute(&[1, 0]);

    let mut mult = vec![Q::zero(); d * d * d];
    for x in 0..d {
        for y in 0..d {
            let p = bc.mul(&bc.basis(vec![x / dc, x % dc]), &bc.basis(vec![y / dc, y % dc]));
            for (idx, v) in &p.terms {
                mult[(x * d + y) * d + idx[0] * dc + idx[1]] = v.clone();
            }
        }
    }
    let mut unit = vec![Q::zero(); d];
    for (idx, v) in &bc.one().terms {
        unit[idx[0] * dc + idx[1]] = v.clone();
    }
    let comult_rows: Vec<Vec<(usize, Q)>> = par::map_range(d, |x| {
        let bx = TensorAlgebra::new(vec![b]).basis(vec![x / dc]);
        let cx = TensorAlgebra::new(vec![c]).basis(vec![x % dc]);
        let db13 = bcbc.embed(&TensorAlgebra::new(vec![b]).comultiply_leg(&bx, 0, 0), &[0, 2]);
        let dc24 = bcbc.embed(&TensorAlgebra::new(vec![c]).comultiply_leg(&cx, 0, 0), &[1, 3]);
        let full = bcbc.mul_all(&[&r23, &db13, &dc24, &r23_inv]);
        full.merge_pairs(dc).terms.into_iter().map(|(idx, v)| (idx[0] * d + idx[1], v)).collect()
    });
    let mut comult = vec![Q::zero(); d * d * d];
    for (x, row) in comult_rows.into_iter().enumerate() {
        for (jk, v) in row {
            comult[x * d * d + jk] = v;
        }
    }
    let counit = (0..d).map(|x| &b.counit[x / dc] * &c.counit[x % dc]).collect();
    let mut antipode = RationalMatrix::zeros(d, d);
    for x in 0..d {
        let sb = bc.antipode_leg(&bc.antipode_leg(&bc.basis(vec![x / dc, x % dc]), 0, 0), 1, 1);
        let s = bc.mul_all(&[&r21_inv, &sb, &r21]);
        for (idx, v) in &s.terms {
            antipode.set(idx[0] * dc + idx[1], x, v.clone());
        }
    }
    HopfData::new(d, mult, unit, comult, counit, antipode)
}

/// Which form of the compatibility between `R` and `Δ` to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QtConvention {
    /// `(Δ⊗id)R = R_{13}R_{23}`, `(id⊗Δ)R = R_{13}R_{12}`.
    #[default]
    Theorem,
    /// `(Δ⊗id)R = R_{23}R_{13}`, `(id⊗Δ)R = R_{12}R_{13}`.
    Preamble,
}

/// `Δ^{op}(a) = R Δ(a) R^{-1}` on basis elements (`exchange`), the two
/// compatibilities with `Δ` (`compat-left`, `compat-right`), and the QYBE in
/// `H⊗H⊗H` (`qybe`).
pub fn check_quasitriangular(h: &HopfData, r: &AlgebraElement2, convention: QtConvention) -> Result<CheckReport> {
    r.fits(h, h)?;
    let one = TensorAlgebra::new(vec![h]);
    let two = TensorAlgebra::new(vec![h, h]);
    let three = TensorAlgebra::new(vec![h, h, h]);
    let rt = r.to_tensor();
    let r_inv = two.inverse(&rt)?;
    let mut report = over_basis(h.dim, |i| {
        let mut rep = CheckReport::new();
        let delta = one.comultiply_leg(&one.basis(vec![i]), 0, 0);
        let rhs = two.mul_all(&[&rt, &delta, &r_inv]);
        compare(&mut rep, "exchange", &delta.permute(&[1, 0]), &rhs, &[i]);
        rep
    });
    let (r12, r13, r23) = (three.embed(&rt, &[0, 1]), three.embed(&rt, &[0, 2]), three.embed(&rt, &[1, 2]));
    let (left, right) = match convention {
        QtConvention::Theorem => (three.mul(&r13, &r23), three.mul(&r13, &r12)),
        QtConvention::Preamble => (three.mul(&r23, &r13), three.mul(&r12, &r13)),
    };
    compare(&mut report, "compat-left", &two.comultiply_leg(&rt, 0, 0), &left, &[]);
    compare(&mut report, "compat-right", &two.comultiply_leg(&rt, 1, 1), &right, &[]);
    compare(&mut report, "qybe", &three.mul_all(&[&r12, &r13, &r23]), &three.mul_all(&[&r23, &r13, &r12]), &[]);
    Ok(report.finish())
}

/// `𝓡 = R_{41} R^B_{13} R^C_{24} R^{-1}_{23}` as an element of
/// `(B⊗C)⊗(B⊗C)`, in the product basis.
pub fn product_r_matrix(
    b: &HopfData,
    c: &HopfData,
    r: &AlgebraElement2,
    rb: &AlgebraElement2,
    rc: &AlgebraElement2,
) -> Result<AlgebraElement2> {
    r.fits(c, b)?;
    rb.fits(b, b)?;
    rc.fits(c, c)?;
    let cb = TensorAlgebra::new(vec![c, b]);
    let rt = r.to_tensor();
    let r_inv = cb.inverse(&rt)?;
    let bcbc = TensorAlgebra::new(vec![b, c, b, c]);
    let big = bcbc.mul_all(&[
        &bcbc.embed(&rt, &[3, 0]),
        &bcbc.embed(&rb.to_tensor(), &[0, 2]),
        &bcbc.embed(&rc.to_tensor(), &[1, 3]),
        &bcbc.embed(&r_inv, &[1, 2]),
    ]);
    let d = b.dim * c.dim;
    Ok(AlgebraElement2::from_tensor(&big.merge_pairs(c.dim), d, d))
}

/// Elements used as fixtures: canonical and quasi-triangular structures for
/// group algebras and their duals.
pub mod fixtures {
    use super::*;
    use crate::matrix::q_frac;

    /// `Σ_g g ⊗ P_g ∈ K[G] ⊗ K[G]*`.
    pub fn canonical_element(group: &GroupTable) -> AlgebraElement2 {
        let n = group.size();
        AlgebraElement2::new(RationalMatrix::identity(n))
    }

    /// `Σ_{g,h} χ(g,h) P_g ⊗ P_h` on `K[Z/2]*` with `χ(g,h) = (−1)^{gh}`.
    pub fn z2_dual_bicharacter() -> AlgebraElement2 {
        AlgebraElement2::new(RationalMatrix::from_ints(2, 2, &[1, 1, 1, -1]))
    }

    /// `½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `K[Z/2]`.
    pub fn z2_group_r() -> AlgebraElement2 {
        AlgebraElement2::new(RationalMatrix::from_ints(2, 2, &[1, 1, 1, -1]).scale(&q_frac(1, 2)))
    }
}
