//! Finite presentations of Bₙ, VBₙ, VPₙ, Hₙ and Yₙ.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::word::{Gen, Letter, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PresentationName {
    Bn,
    Vbn,
    Vpn,
    Hn,
    Yn,
}

impl FromStr for PresentationName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bn" => Ok(PresentationName::Bn),
            "vbn" => Ok(PresentationName::Vbn),
            "vpn" => Ok(PresentationName::Vpn),
            "hn" => Ok(PresentationName::Hn),
            "yn" => Ok(PresentationName::Yn),
            _ => Err(Error::UnsupportedName(s.to_string())),
        }
    }
}

impl fmt::Display for PresentationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PresentationName::Bn => "bn",
            PresentationName::Vbn => "vbn",
            PresentationName::Vpn => "vpn",
            PresentationName::Hn => "hn",
            PresentationName::Yn => "yn",
        };
        f.write_str(s)
    }
}

/// A relator with a label showing the relation it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub label: String,
    pub word: Word,
}

impl Relator {
    /// The relator `lhs · rhs⁻¹` for the relation `lhs = rhs`.
    pub fn relation(lhs: &[Gen], rhs: &[Gen]) -> Self {
        let (l, r) = (Word::from_gens(lhs), Word::from_gens(rhs));
        let rhs_text = if rhs.is_empty() { "e".to_string() } else { r.to_string() };
        Relator { label: format!("{l} = {rhs_text}"), word: l.concat(&r.inverse()) }
    }

    fn commute(a: Gen, b: Gen) -> Self {
        Self::relation(&[a, b], &[b, a])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub name: PresentationName,
    pub n: usize,
    pub generators: Vec<Gen>,
    pub relators: Vec<Relator>,
}

impl Presentation {
    /// `{"generators": [...], "relators": [[...], ...]}` with words as text.
    pub fn export(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name.to_string(),
            "n": self.n,
            "generators": self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relators": self.relators.iter().map(|r| r.word.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.generators.contains(&g)
    }
}

fn distinct(idx: &[usize]) -> bool {
    idx.iter().enumerate().all(|(a, x)| idx[a + 1..].iter().all(|y| x != y))
}

fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn ordered_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    ordered_pairs(n).flat_map(move |(i, j)| (1..=n).filter(move |&k| k != i && k != j).map(move |k| (i, j, k)))
}

/// Far commutation for a family of two-index generators: one relator per
/// unordered pair of generators with four distinct indices.
fn far_commutation(gens: &[Gen], out: &mut Vec<Relator>) {
    for (a, &g) in gens.iter().enumerate() {
        for &h in &gens[a + 1..] {
            let (i, j) = g.indices();
            let (k, l) = h.indices();
            if distinct(&[i, j.unwrap(), k, l.unwrap()]) {
                out.push(Relator::commute(g, h));
            }
        }
    }
}

/// The generators and relators of the named group on `n` strands (`n ≥ 2`).
pub fn presentation(name: PresentationName, n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    use Gen::*;
    let mut generators = Vec::new();
    let mut relators = Vec::new();
    match name {
        PresentationName::Bn | PresentationName::Vbn => {
            generators.extend((1..n).map(Sigma));
            for i in 1..n - 1 {
                relators.push(Relator::relation(&[Sigma(i), Sigma(i + 1), Sigma(i)], &[Sigma(i + 1), Sigma(i), Sigma(i + 1)]));
            }
            for i in 1..n {
                for j in i + 2..n {
                    relators.push(Relator::commute(Sigma(i), Sigma(j)));
                }
            }
            if name == PresentationName::Vbn {
                generators.extend((1..n).map(Rho));
                for i in 1..n {
                    relators.push(Relator::relation(&[Rho(i), Rho(i)], &[]));
                }
                for i in 1..n {
                    for j in i + 2..n {
                        relators.push(Relator::commute(Rho(i), Rho(j)));
                    }
                }
                for i in 1..n - 1 {
                    relators.push(Relator::relation(&[Rho(i), Rho(i + 1), Rho(i)], &[Rho(i + 1), Rho(i), Rho(i + 1)]));
                }
                for i in 1..n {
                    for j in 1..n {
                        if i.abs_diff(j) >= 2 {
                            relators.push(Relator::commute(Sigma(i), Rho(j)));
                        }
                    }
                }
                for i in 1..n - 1 {
                    relators.push(Relator::relation(&[Rho(i), Rho(i + 1), Sigma(i)], &[Sigma(i + 1), Rho(i), Rho(i + 1)]));
                }
            }
        }
        PresentationName::Vpn => {
            generators.extend(ordered_pairs(n).map(|(i, j)| Lambda(i, j)));
            far_commutation(&generators, &mut relators);
            for (k, i, j) in ordered_triples(n) {
                relators.push(Relator::relation(
                    &[Lambda(k, i), Lambda(k, j), Lambda(i, j)],
                    &[Lambda(i, j), Lambda(k, j), Lambda(k, i)],
                ));
            }
        }
        PresentationName::Hn => {
            generators.extend(ordered_pairs(n).map(|(i, j)| X(i, j)));
            far_commutation(&generators, &mut relators);
            for (i, k, j) in ordered_triples(n) {
                relators.push(Relator::relation(&[X(i, k), X(k, j), X(i, k)], &[X(k, j), X(i, k), X(k, j)]));
            }
        }
        PresentationName::Yn => return Ok(yn(n)),
    }
    Ok(Presentation { name, n, generators, relators })
}

fn yn(n: usize) -> Presentation {
    use Gen::*;
    let odd = |i: usize| 2 * i - 1;
    let even = |i: usize| 2 * i;
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let bs: Vec<Gen> = pairs.iter().map(|&(i, j)| B(odd(i), odd(j))).collect();
    let cs: Vec<Gen> = pairs.iter().map(|&(i, j)| C(even(i), even(j))).collect();
    let mut ds: Vec<Gen> = ordered_pairs(n).map(|(k, l)| D(even(k), odd(l))).collect();
    ds.sort();

    let mut relators = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (bi, bj, bk) = (odd(i), odd(j), odd(k));
                relators.push(Relator::relation(&[B(bi, bj), B(bi, bk), B(bj, bk)], &[B(bj, bk), B(bi, bk), B(bi, bj)]));
                let (ci, cj, ck) = (even(i), even(j), even(k));
                relators.push(Relator::relation(&[C(ci, cj), C(ci, ck), C(cj, ck)], &[C(cj, ck), C(ci, ck), C(ci, cj)]));
            }
        }
    }
    for &b in &bs {
        for &c in &cs {
            relators.push(Relator::commute(b, c));
        }
    }
    let disjoint = |g: Gen, h: Gen| {
        let (i, j) = g.indices();
        let (k, l) = h.indices();
        distinct(&[i, j.unwrap(), k, l.unwrap()])
    };
    for family in [&bs, &cs] {
        for &x in family.iter() {
            for &d in &ds {
                if disjoint(x, d) {
                    relators.push(Relator::commute(x, d));
                }
            }
        }
    }
    for (a, &d) in ds.iter().enumerate() {
        for &e in &ds[a + 1..] {
            if disjoint(d, e) {
                relators.push(Relator::commute(d, e));
            }
        }
    }
    for &(i, j) in &pairs {
        for k in (1..=n).filter(|&k| k != i && k != j) {
            let (b, d1, d2) = (B(odd(i), odd(j)), D(even(k), odd(i)), D(even(k), odd(j)));
            relators.push(Relator::relation(&[b, d1, d2], &[d2, d1, b]));
        }
    }
    for &(i, j) in &pairs {
        for k in (1..=n).filter(|&k| k != i && k != j) {
            let (c, d1, d2) = (C(even(i), even(j)), D(even(j), odd(k)), D(even(i), odd(k)));
            relators.push(Relator::relation(&[c, d1, d2], &[d2, d1, c]));
        }
    }
    let mut generators = bs;
    generators.extend(cs);
    generators.extend(ds);
    Presentation { name: PresentationName::Yn, n, generators, relators }
}

/// Whether a letter's generator belongs to the presentation.
pub fn uses_only_declared(p: &Presentation, w: &Word) -> bool {
    w.letters().iter().all(|l: &Letter| p.contains(l.gen))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(p: &Presentation) -> Vec<String> {
        p.generators.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn vp3() {
        let p = presentation(PresentationName::Vpn, 3).unwrap();
        assert_eq!(gens(&p), ["l12", "l13", "l21", "l23", "l31", "l32"]);
        assert_eq!(p.relators.len(), 6);
        assert!(p.relators.iter().any(|r| r.label == "l31 l32 l12 = l12 l32 l31"));
    }

    #[test]
    fn vp_counts() {
        assert!(presentation(PresentationName::Vpn, 2).unwrap().relators.is_empty());
        let p4 = presentation(PresentationName::Vpn, 4).unwrap();
        assert_eq!(p4.generators.len(), 12);
        assert_eq!(p4.relators.len(), 12 + 24);
        assert_eq!(presentation(PresentationName::Hn, 4).unwrap().relators.len(), 12 + 24);
    }

    #[test]
    fn braid_counts() {
        let b4 = presentation(PresentationName::Bn, 4).unwrap();
        assert_eq!(b4.relators.len(), 3);
        let vb3 = presentation(PresentationName::Vbn, 3).unwrap();
        // 1 braid, 2 involutions, 1 ρ braid, 1 mixed
        assert_eq!(vb3.relators.len(), 5);
        let vb4 = presentation(PresentationName::Vbn, 4).unwrap();
        assert_eq!(vb4.relators.len(), 2 + 1 + 3 + 1 + 2 + 2 + 2);
    }

    #[test]
    fn y2_and_y3() {
        let y2 = presentation(PresentationName::Yn, 2).unwrap();
        assert_eq!(gens(&y2), ["b13", "c24", "d23", "d41"]);
        let labels: Vec<&str> = y2.relators.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["b13 c24 = c24 b13", "d23 d41 = d41 d23"]);

        let y3 = presentation(PresentationName::Yn, 3).unwrap();
        assert_eq!(gens(&y3), ["b13", "b15", "b35", "c24", "c26", "c46", "d23", "d25", "d41", "d45", "d61", "d63"]);
        // 2 Yang–Baxter, 9 b–c, 6 b–d, 6 c–d, 9 d–d, 6 mixed
        assert_eq!(y3.relators.len(), 2 + 9 + 6 + 6 + 9 + 6);
        let mixed: Vec<&str> = y3.relators[y3.relators.len() - 6..].iter().map(|r| r.label.as_str()).collect();
        assert_eq!(mixed, [
            "b13 d61 d63 = d63 d61 b13",
            "b15 d41 d45 = d45 d41 b15",
            "b35 d23 d25 = d25 d23 b35",
            "c24 d45 d25 = d25 d45 c24",
            "c26 d63 d23 = d23 d63 c26",
            "c46 d61 d41 = d41 d61 c46",
        ]);
        assert!(y3.relators.iter().all(|r| uses_only_declared(&y3, &r.word)));
    }

    #[test]
    fn yn_generator_count() {
        for n in 2..=5 {
            let p = presentation(PresentationName::Yn, n).unwrap();
            assert_eq!(p.generators.len(), n * (n - 1) + n * (n - 1));
        }
    }

    #[test]
    fn bad_input() {
        assert_eq!(presentation(PresentationName::Vpn, 1), Err(Error::BadN(1)));
        assert!(matches!("zz".parse::<PresentationName>(), Err(Error::UnsupportedName(_))));
    }
}
