use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ybset::BinaryOpTable;

/// A finite group given by its multiplication table, identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    size: usize,
    mult: Vec<usize>,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, the identity at 0, associativity and inverses.
    pub fn new(size: usize, mult: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::NotAGroup { axiom: "nonempty", witness: vec![] });
        }
        if mult.len() != size * size {
            return Err(Error::LengthMismatch { expected: size * size, found: mult.len() });
        }
        if let Some(&index) = mult.iter().find(|&&v| v >= size) {
            return Err(Error::IndexOutOfRange { index, size });
        }
        let m = |a: usize, b: usize| mult[a * size + b];
        for a in 0..size {
            if m(0, a) != a || m(a, 0) != a {
                return Err(Error::NotAGroup { axiom: "identity", witness: vec![a] });
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NotAGroup { axiom: "associativity", witness: vec![a, b, c] });
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(size);
        for a in 0..size {
            match (0..size).find(|&b| m(a, b) == 0 && m(b, a) == 0) {
                Some(b) => inverses.push(b),
                None => return Err(Error::NotAGroup { axiom: "inverse", witness: vec![a] }),
            }
        }
        Ok(GroupTable { size, mult, inverses })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(n, (0..n * n).map(|k| (k / n + k % n) % n).collect()).expect("cyclic group")
    }

    /// `G × H` with `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let n = g.size * h.size;
        let mult = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                g.mul(x / h.size, y / h.size) * h.size + h.mul(x % h.size, y % h.size)
            })
            .collect();
        Self::new(n, mult).expect("direct product of groups")
    }

    /// The permutation group generated by `gens`, elements in breadth-first
    /// order from the identity. Multiplication is composition, `(ab)(i) = a(b(i))`.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.first().map_or(0, |g| g.len());
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut next = 0;
        while next < elements.len() {
            let e = elements[next].clone();
            next += 1;
            for g in gens {
                let p: Vec<usize> = g.iter().map(|&i| e[i]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let ab: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                mult.push(index[&ab]);
            }
        }
        Self::new(n, mult)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[usize] {
        &self.mult
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.size + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// `x ◁ y = y⁻¹ x y`.
pub fn conjugation_quandle(group: &GroupTable) -> BinaryOpTable {
    BinaryOpTable::from_fn(group.size, |x, y| group.mul(group.mul(group.inverse(y), x), y))
        .expect("group table is in range")
}
