//! Set-theoretic solutions of the Yang–Baxter and braid equations on a finite
//! set `X = {0, …, n-1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::product::{compare_words, factorial, nth_function, nth_permutation, Placed, ProductSpace, TwoLeg};
use crate::report::CheckReport;

/// A map `R: X × X → X × X` stored as a full table; entry `x·n + y` is `R(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteYBMap {
    size: usize,
    table: Vec<(usize, usize)>,
    invertible: bool,
}

pub fn make_yb_map(size: usize, table: Vec<(usize, usize)>) -> Result<FiniteYBMap> {
    FiniteYBMap::new(size, table)
}

fn is_bijection(size: usize, table: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; size * size];
    for &(a, b) in table {
        let k = a * size + b;
        if seen[k] {
            return false;
        }
        seen[k] = true;
    }
    true
}

impl FiniteYBMap {
    pub fn new(size: usize, table: Vec<(usize, usize)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::SizeMismatch("set size must be positive".into()));
        }
        if table.len() != size * size {
            return Err(Error::LengthMismatch { expected: size * size, found: table.len() });
        }
        if let Some(&index) = table.iter().flat_map(|(a, b)| [a, b]).find(|&&v| v >= size) {
            return Err(Error::IndexOutOfRange { index, size });
        }
        let invertible = is_bijection(size, &table);
        Ok(FiniteYBMap { size, table, invertible })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let table = (0..size * size).map(|k| f(k / size, k % size)).collect();
        Self::new(size, table)
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |x, y| (x, y)).expect("identity is valid")
    }

    /// The flip `P(x, y) = (y, x)`.
    pub fn swap(size: usize) -> Self {
        Self::from_fn(size, |x, y| (y, x)).expect("swap is valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[(usize, usize)] {
        &self.table
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.size + y]
    }

    pub fn inverse(&self) -> Option<FiniteYBMap> {
        if !self.invertible {
            return None;
        }
        let n = self.size;
        let mut inv = vec![(0, 0); n * n];
        for (k, &(a, b)) in self.table.iter().enumerate() {
            inv[a * n + b] = (k / n, k % n);
        }
        Some(FiniteYBMap { size: n, table: inv, invertible: true })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FiniteYBMap) -> Result<FiniteYBMap> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.size, other.size)));
        }
        Self::from_fn(self.size, |x, y| {
            let (a, b) = other.apply(x, y);
            self.apply(a, b)
        })
    }

    /// `σ_y` as a table `x ↦ first component of R(x, y)`.
    pub fn sigma(&self, y: usize) -> Vec<usize> {
        (0..self.size).map(|x| self.apply(x, y).0).collect()
    }

    /// `τ_x` as a table `y ↦ second component of R(x, y)`.
    pub fn tau(&self, x: usize) -> Vec<usize> {
        (0..self.size).map(|y| self.apply(x, y).1).collect()
    }

    /// Flat table as used by the lexicographic census order.
    pub fn flat(&self) -> Vec<usize> {
        self.table.iter().flat_map(|&(a, b)| [a, b]).collect()
    }
}

impl TwoLeg for FiniteYBMap {
    fn leg_sizes(&self) -> (usize, usize) {
        (self.size, self.size)
    }

    fn image(&self, a: usize, b: usize) -> (usize, usize) {
        self.apply(a, b)
    }
}

/// `R_{12} R_{13} R_{23} = R_{23} R_{13} R_{12}` on all of `X³`.
pub fn check_ybe(r: &FiniteYBMap) -> CheckReport {
    let space = ProductSpace::uniform(r.size, 3);
    let lhs = [Placed::at(r, 1, 2), Placed::at(r, 1, 3), Placed::at(r, 2, 3)];
    let rhs = [Placed::at(r, 2, 3), Placed::at(r, 1, 3), Placed::at(r, 1, 2)];
    compare_words(&space, "ybe", &lhs, &rhs)
}

/// `S_{12} S_{23} S_{12} = S_{23} S_{12} S_{23}` on all of `X³`.
pub fn check_braid(s: &FiniteYBMap) -> CheckReport {
    let space = ProductSpace::uniform(s.size, 3);
    let lhs = [Placed::at(s, 1, 2), Placed::at(s, 2, 3), Placed::at(s, 1, 2)];
    let rhs = [Placed::at(s, 2, 3), Placed::at(s, 1, 2), Placed::at(s, 2, 3)];
    compare_words(&space, "braid", &lhs, &rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    YbToBraid,
    BraidToYb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equation {
    Ybe,
    Braid,
}

impl Equation {
    pub fn check(self, m: &FiniteYBMap) -> CheckReport {
        match self {
            Equation::Ybe => check_ybe(m),
            Equation::Braid => check_braid(m),
        }
    }
}

/// `P ∘ M`. The same formula serves both directions since `P` is an involution.
pub fn convert(m: &FiniteYBMap, _direction: Direction) -> FiniteYBMap {
    FiniteYBMap::from_fn(m.size, |x, y| {
        let (a, b) = m.apply(x, y);
        (b, a)
    })
    .expect("swapping components keeps the table valid")
}

fn is_perm(t: &[usize]) -> bool {
    let mut seen = vec![false; t.len()];
    t.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

/// `(left, right)`: whether every `σ_y`, respectively every `τ_x`, is a bijection.
pub fn nondegeneracy(r: &FiniteYBMap) -> (bool, bool) {
    let left = (0..r.size).all(|y| is_perm(&r.sigma(y)));
    let right = (0..r.size).all(|x| is_perm(&r.tau(x)));
    (left, right)
}

/// `R'(x, y) = (σ_y(τ_{σ_x^{-1}(y)}(x)), y)`.
pub fn guitar_map(r: &FiniteYBMap) -> Result<FiniteYBMap> {
    let n = r.size;
    let mut sigma_inv = Vec::with_capacity(n);
    for x in 0..n {
        let s = r.sigma(x);
        if !is_perm(&s) {
            return Err(Error::Degenerate(format!("sigma_{x} is not a bijection")));
        }
        let mut inv = vec![0; n];
        for (z, &v) in s.iter().enumerate() {
            inv[v] = z;
        }
        sigma_inv.push(inv);
    }
    FiniteYBMap::from_fn(n, |x, y| {
        let w = sigma_inv[x][y];
        let t = r.apply(w, x).1;
        (r.apply(t, y).0, y)
    })
}

/// A binary operation `x ◁ y` on `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryOpTable {
    size: usize,
    table: Vec<usize>,
}

impl BinaryOpTable {
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::SizeMismatch("set size must be positive".into()));
        }
        if table.len() != size * size {
            return Err(Error::LengthMismatch { expected: size * size, found: table.len() });
        }
        if let Some(&index) = table.iter().find(|&&v| v >= size) {
            return Err(Error::IndexOutOfRange { index, size });
        }
        Ok(BinaryOpTable { size, table })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(size, (0..size * size).map(|k| f(k / size, k % size)).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }
}

/// `(x◁y)◁z = (x◁z)◁(y◁z)` on all triples.
pub fn check_self_distributive(op: &BinaryOpTable) -> CheckReport {
    let n = op.size;
    let bad = par::filter_map_range(n * n * n, |k| {
        let (x, y, z) = (k / (n * n), (k / n) % n, k % n);
        let l = op.op(op.op(x, y), z);
        let r = op.op(op.op(x, z), op.op(y, z));
        (l != r).then(|| vec![x, y, z])
    });
    let mut report = CheckReport::new();
    report.tick(n * n * n);
    for w in bad {
        report.fail("self_distributive", w);
    }
    report.finish()
}

/// `S_◁(x, y) = (y, x ◁ y)`.
pub fn braiding_from_sd(op: &BinaryOpTable) -> FiniteYBMap {
    FiniteYBMap::from_fn(op.size, |x, y| (y, op.op(x, y))).expect("operation table is valid")
}

/// A map `f: X → Y` between finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetMapping {
    domain: usize,
    codomain: usize,
    table: Vec<usize>,
}

impl SetMapping {
    pub fn new(domain: usize, codomain: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != domain {
            return Err(Error::LengthMismatch { expected: domain, found: table.len() });
        }
        if let Some(&index) = table.iter().find(|&&v| v >= codomain) {
            return Err(Error::IndexOutOfRange { index, size: codomain });
        }
        Ok(SetMapping { domain, codomain, table })
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.domain).filter(|&x| self.table[x] == y).collect()
    }
}

/// Checks `R^Y ∘ (f × f) = (f × f) ∘ R^X` on all pairs of `X`.
pub fn is_morphism(f: &SetMapping, rx: &FiniteYBMap, ry: &FiniteYBMap) -> Result<CheckReport> {
    if f.domain != rx.size || f.codomain != ry.size {
        return Err(Error::SizeMismatch(format!(
            "mapping {}→{} against solutions on {} and {}",
            f.domain, f.codomain, rx.size, ry.size
        )));
    }
    let mut report = CheckReport::new();
    for x in 0..rx.size {
        for y in 0..rx.size {
            let (a, b) = rx.apply(x, y);
            if ry.apply(f.table[x], f.table[y]) != (f.table[a], f.table[b]) {
                report.fail("morphism", vec![x, y]);
            }
        }
    }
    report.tick(rx.size * rx.size);
    Ok(report.finish())
}

/// Whether all fibers of a surjective map have the same size.
pub fn is_homogeneous(f: &SetMapping) -> Result<bool> {
    let mut counts = vec![0usize; f.codomain];
    for &y in &f.table {
        counts[y] += 1;
    }
    let unhit: Vec<usize> = (0..f.codomain).filter(|&y| counts[y] == 0).collect();
    if !unhit.is_empty() {
        return Err(Error::NotSurjective(unhit));
    }
    Ok(counts.windows(2).all(|w| w[0] == w[1]))
}

/// Whether the fiber over `k` is closed under `R^X`; on success also returns
/// the restriction, with the fiber re-indexed in increasing order.
pub fn kernel_check(f: &SetMapping, k: usize, rx: &FiniteYBMap) -> Result<(CheckReport, Option<FiniteYBMap>)> {
    if f.domain != rx.size {
        return Err(Error::SizeMismatch(format!("mapping domain {} vs solution on {}", f.domain, rx.size)));
    }
    if k >= f.codomain {
        return Err(Error::IndexOutOfRange { index: k, size: f.codomain });
    }
    let fiber = f.fiber(k);
    if fiber.is_empty() {
        return Err(Error::EmptyFiber(k));
    }
    let pos = |v: usize| fiber.iter().position(|&u| u == v);
    let mut report = CheckReport::new();
    for &x in &fiber {
        for &y in &fiber {
            let (a, b) = rx.apply(x, y);
            if pos(a).is_none() || pos(b).is_none() {
                report.fail("kernel", vec![x, y]);
            }
        }
    }
    report.tick(fiber.len() * fiber.len());
    let report = report.finish();
    if !report.passed {
        return Ok((report, None));
    }
    let m = fiber.len();
    let restricted = FiniteYBMap::from_fn(m, |i, j| {
        let (a, b) = rx.apply(fiber[i], fiber[j]);
        (pos(a).unwrap(), pos(b).unwrap())
    })?;
    Ok((report, Some(restricted)))
}

/// Every solution on `{0, …, n-1}` of the chosen equation, in lexicographic
/// order of the flattened table. All maps are searched for `n ≤ 2`,
/// bijections only for `n ≤ 3`.
pub fn enumerate_solutions(n: usize, equation: Equation, invertible_only: bool) -> Result<Vec<FiniteYBMap>> {
    if n == 0 {
        return Err(Error::SizeMismatch("set size must be positive".into()));
    }
    let m = n * n;
    let candidates = if invertible_only {
        if n > 3 {
            return Err(Error::TooLarge(format!("bijection census is limited to n <= 3, got {n}")));
        }
        factorial(m)
    } else {
        if n > 2 {
            return Err(Error::TooLarge(format!("full census is limited to n <= 2, got {n}; use bijections")));
        }
        m.pow(m as u32)
    };
    let found = par::filter_map_range(candidates, |rank| {
        let flat = if invertible_only { nth_permutation(m, rank) } else { nth_function(m, m, rank) };
        let table = flat.into_iter().map(|v| (v / n, v % n)).collect();
        let r = FiniteYBMap::new(n, table).expect("candidate tables are in range");
        equation.check(&r).passed.then_some(r)
    });
    Ok(found)
}
