//! Finite product sets, two-leg maps placed into them, and permutations of
//! their points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::report::CheckReport;

/// Type tag of a factor in a mixed product. Odd positions of a pair or triple
/// space carry `B`, even positions carry `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LegType {
    B,
    C,
}

/// `X_1 × … × X_k` with points flattened so that the first factor is the most
/// significant digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpace {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl ProductSpace {
    pub fn new(sizes: Vec<usize>) -> Self {
        let mut strides = vec![1; sizes.len()];
        let mut len = 1usize;
        for k in (0..sizes.len()).rev() {
            strides[k] = len;
            len *= sizes[k];
        }
        ProductSpace { sizes, strides, len }
    }

    pub fn uniform(size: usize, count: usize) -> Self {
        Self::new(vec![size; count])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn arity(&self) -> usize {
        self.sizes.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().zip(&self.strides).map(|(t, s)| t * s).sum()
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        let mut out = vec![0; self.sizes.len()];
        self.decode_into(index, &mut out);
        out
    }

    pub fn decode_into(&self, mut index: usize, out: &mut [usize]) {
        for k in 0..self.sizes.len() {
            out[k] = index / self.strides[k];
            index %= self.strides[k];
        }
    }
}

/// A map `A × B → A × B` given by a lookup table.
pub trait TwoLeg: Sync {
    fn leg_sizes(&self) -> (usize, usize);
    fn image(&self, a: usize, b: usize) -> (usize, usize);
}

/// A two-leg map acting on factors `first` and `second` of a product (0-based),
/// identity on the rest.
#[derive(Clone, Copy)]
pub struct Placed<'a> {
    pub op: &'a dyn TwoLeg,
    pub first: usize,
    pub second: usize,
}

impl<'a> Placed<'a> {
    /// Places `op` at 1-based positions `(i, j)`, the way subscripts are
    /// written: `R_{41}` is `Placed::at(&r, 4, 1)`.
    pub fn at(op: &'a dyn TwoLeg, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i != j, "positions are 1-based and distinct");
        Placed { op, first: i - 1, second: j - 1 }
    }

    pub fn apply(&self, t: &mut [usize]) {
        let (a, b) = self.op.image(t[self.first], t[self.second]);
        t[self.first] = a;
        t[self.second] = b;
    }

    fn fits(&self, space: &ProductSpace) -> bool {
        let (l, r) = self.op.leg_sizes();
        self.first < space.arity()
            && self.second < space.arity()
            && space.sizes()[self.first] == l
            && space.sizes()[self.second] == r
    }
}

/// Applies a product of placed maps, rightmost factor first.
pub fn apply_word(word: &[Placed<'_>], t: &mut [usize]) {
    for p in word.iter().rev() {
        p.apply(t);
    }
}

pub fn check_fits(space: &ProductSpace, word: &[Placed<'_>]) -> Result<()> {
    for p in word {
        if !p.fits(space) {
            return Err(Error::SizeMismatch(format!(
                "operator with legs {:?} does not fit positions ({}, {}) of {:?}",
                p.op.leg_sizes(),
                p.first + 1,
                p.second + 1,
                space.sizes()
            )));
        }
    }
    Ok(())
}

/// Evaluates `lhs` and `rhs` on every point of `space` and records each point
/// where they differ.
pub fn compare_words(
    space: &ProductSpace,
    relation: &str,
    lhs: &[Placed<'_>],
    rhs: &[Placed<'_>],
) -> CheckReport {
    debug_assert!(check_fits(space, lhs).is_ok() && check_fits(space, rhs).is_ok());
    let bad = par::filter_map_range(space.len(), |idx| {
        let start = space.decode(idx);
        let mut l = start.clone();
        let mut r = start.clone();
        apply_word(lhs, &mut l);
        apply_word(rhs, &mut r);
        (l != r).then_some(start)
    });
    let mut report = CheckReport::new();
    report.tick(space.len());
    for w in bad {
        report.fail(relation, w);
    }
    report.finish()
}

/// A bijection of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::NotBijective(format!("image {i} out of range 0..{n}")));
            }
            if seen[i] {
                return Err(Error::NotBijective(format!("image {i} is hit twice")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(f).collect())
    }

    /// The permutation of `space` induced by a word of placed maps.
    pub fn from_word(space: &ProductSpace, word: &[Placed<'_>]) -> Result<Self> {
        check_fits(space, word)?;
        Self::from_fn(space.len(), |idx| {
            let mut t = space.decode(idx);
            apply_word(word, &mut t);
            space.encode(&t)
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.first_moved().is_none()
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, j)| i != *j).map(|(i, _)| i)
    }

    pub fn first_difference(&self, other: &Perm) -> Option<usize> {
        self.images.iter().zip(&other.images).position(|(a, b)| a != b)
    }
}

/// Unranks the `rank`-th permutation of `0..n` in lexicographic order.
pub(crate) fn nth_permutation(n: usize, mut rank: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut fact = vec![1usize; n + 1];
    for k in 1..=n {
        fact[k] = fact[k - 1] * k;
    }
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let q = rank / fact[k];
        rank %= fact[k];
        out.push(pool.remove(q));
    }
    out
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Unranks the `rank`-th function `0..len → 0..base`, most significant entry
/// first, so ranks follow lexicographic order of the value sequence.
pub(crate) fn nth_function(len: usize, base: usize, mut rank: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = rank % base;
        rank /= base;
    }
    out
}
