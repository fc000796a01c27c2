//! Generators, words, free reduction and a text syntax for words.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator symbol. Indices are 1-based, as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Sigma(usize),
    Rho(usize),
    Lambda(usize, usize),
    X(usize, usize),
    B(usize, usize),
    C(usize, usize),
    D(usize, usize),
    /// A transposition of strands `i` and `j`.
    P(usize, usize),
}

impl Gen {
    pub fn family(&self) -> &'static str {
        match self {
            Gen::Sigma(_) => "sigma",
            Gen::Rho(_) => "rho",
            Gen::Lambda(..) => "lambda",
            Gen::X(..) => "x",
            Gen::B(..) => "b",
            Gen::C(..) => "c",
            Gen::D(..) => "d",
            Gen::P(..) => "P",
        }
    }

    fn prefix(&self) -> &'static str {
        match self {
            Gen::Sigma(_) => "s",
            Gen::Rho(_) => "r",
            Gen::Lambda(..) => "l",
            Gen::X(..) => "x",
            Gen::B(..) => "b",
            Gen::C(..) => "c",
            Gen::D(..) => "d",
            Gen::P(..) => "P",
        }
    }

    pub fn indices(&self) -> (usize, Option<usize>) {
        match *self {
            Gen::Sigma(i) | Gen::Rho(i) => (i, None),
            Gen::Lambda(i, j) | Gen::X(i, j) | Gen::B(i, j) | Gen::C(i, j) | Gen::D(i, j) | Gen::P(i, j) => (i, Some(j)),
        }
    }

    /// Builds a generator from a family name (long or short form) and indices.
    pub fn from_parts(family: &str, i: usize, j: Option<usize>) -> Result<Gen> {
        let two = |f: fn(usize, usize) -> Gen| match j {
            Some(j) if j != i => Ok(f(i, j)),
            Some(_) => Err(Error::BadIndex(format!("{family} needs two distinct indices, got {i},{i}"))),
            None => Err(Error::BadSymbol(format!("{family} needs two indices"))),
        };
        let one = |f: fn(usize) -> Gen| match j {
            None => Ok(f(i)),
            Some(_) => Err(Error::BadSymbol(format!("{family} takes one index"))),
        };
        if i == 0 || j == Some(0) {
            return Err(Error::BadIndex(format!("indices of {family} are 1-based")));
        }
        match family {
            "s" | "sigma" => one(Gen::Sigma),
            "r" | "rho" => one(Gen::Rho),
            "l" | "lambda" => two(Gen::Lambda),
            "x" => two(Gen::X),
            "b" => two(Gen::B),
            "c" => two(Gen::C),
            "d" => two(Gen::D),
            "P" | "p" => two(Gen::P),
            other => Err(Error::BadSymbol(format!("unknown generator family {other:?}"))),
        }
    }

    /// Checks the indices against `n` strands (`Sigma`/`Rho` need `i < n`).
    pub fn check_range(&self, n: usize) -> Result<()> {
        let (i, j) = self.indices();
        let ok = match self {
            Gen::Sigma(_) | Gen::Rho(_) => i < n,
            _ => i <= n && j.is_some_and(|j| j <= n),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadIndex(format!("{self} is out of range for n = {n}")))
        }
    }

    pub fn is_lambda(&self) -> bool {
        matches!(self, Gen::Lambda(..))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.indices() {
            (i, None) => write!(f, "{}{i}", self.prefix()),
            (i, Some(j)) if i < 10 && j < 10 => write!(f, "{}{i}{j}", self.prefix()),
            (i, Some(j)) => write!(f, "{}({i},{j})", self.prefix()),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gen> {
        let w: Word = s.parse()?;
        match w.letters() {
            [l] if !l.inverse => Ok(l.gen),
            _ => Err(Error::BadSymbol(format!("'{s}' is not a single generator"))),
        }
    }
}

impl Serialize for Gen {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Gen {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Gen, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "LetterJson", into = "LetterJson")]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: Gen) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inv(gen: Gen) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LetterJson {
    gen: String,
    i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    e: i8,
}

impl From<Letter> for LetterJson {
    fn from(l: Letter) -> Self {
        let (i, j) = l.gen.indices();
        LetterJson { gen: l.gen.family().to_string(), i, j, e: if l.inverse { -1 } else { 1 } }
    }
}

impl TryFrom<LetterJson> for Letter {
    type Error = Error;

    fn try_from(v: LetterJson) -> Result<Self> {
        let gen = Gen::from_parts(&v.gen, v.i, v.j)?;
        match v.e {
            1 => Ok(Letter::new(gen)),
            -1 => Ok(Letter::inv(gen)),
            e => Err(Error::Parse(format!("exponent must be 1 or -1, got {e}"))),
        }
    }
}

/// A word in generators and their inverses. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: Gen) -> Self {
        Word(vec![Letter::new(g)])
    }

    pub fn from_gens(gens: &[Gen]) -> Self {
        Word(gens.iter().map(|&g| Letter::new(g)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn product(words: &[Word]) -> Word {
        Word(words.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// Replaces each letter by the word `f` assigns to its generator (inverted
    /// for inverse letters).
    pub fn substitute(&self, mut f: impl FnMut(Gen) -> Result<Word>) -> Result<Word> {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = f(l.gen)?;
            out.extend(if l.inverse { img.inverse().0 } else { img.0 });
        }
        Ok(Word(out))
    }

    /// Cancels adjacent `g g⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|l| l.gen.check_range(n))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts tokens such as `l14`, `s1`, `d41^-1`, `lambda(10,12)`, `x_{23}`
    /// and `b13⁻¹`, separated by spaces, `*` or `·`. `e` and `1` are the identity.
    fn from_str(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let mut letters = Vec::new();
        let err = |msg: String| Error::Parse(msg);
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() || c == '*' || c == '·' || c == '.' {
                pos += 1;
                continue;
            }
            if c == '1' && chars.get(pos + 1).is_none_or(|n| n.is_whitespace()) {
                pos += 1;
                continue;
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_alphabetic() {
                pos += 1;
            }
            let name: String = chars[start..pos].iter().collect();
            if name.is_empty() {
                return Err(err(format!("unexpected {c:?} at position {pos}")));
            }
            if name == "e" && chars.get(pos).is_none_or(|n| !n.is_ascii_digit() && *n != '(' && *n != '_') {
                continue;
            }
            if chars.get(pos) == Some(&'_') {
                pos += 1;
            }
            let two = !matches!(name.as_str(), "s" | "sigma" | "r" | "rho");
            let (i, j) = if matches!(chars.get(pos), Some('(') | Some('{')) {
                let close = if chars[pos] == '(' { ')' } else { '}' };
                let end = chars[pos..].iter().position(|&x| x == close).ok_or_else(|| err(format!("unclosed index list after {name}")))? + pos;
                let inner: String = chars[pos + 1..end].iter().collect();
                pos = end + 1;
                let nums: Vec<usize> = inner
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| err(format!("bad index {t:?} in {name}"))))
                    .collect::<Result<_>>()?;
                match nums.as_slice() {
                    [i] if two && close == '}' && inner.trim().len() == 2 => (i / 10, Some(i % 10)),
                    [i] => (*i, None),
                    [i, j] => (*i, Some(*j)),
                    _ => return Err(err(format!("too many indices in {name}({inner})"))),
                }
            } else {
                let d0 = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits: Vec<u32> = chars[d0..pos].iter().map(|c| c.to_digit(10).unwrap()).collect();
                match (digits.as_slice(), two) {
                    ([], _) => return Err(err(format!("{name} needs indices"))),
                    ([a, b], true) => (*a as usize, Some(*b as usize)),
                    (_, true) => {
                        return Err(err(format!("write {name} with parentheses, e.g. {name}(1,12), when an index has several digits")))
                    }
                    (ds, false) => (ds.iter().fold(0, |acc, d| acc * 10 + *d as usize), None),
                }
            };
            let gen = Gen::from_parts(&name, i, j)?;
            let rest: String = chars[pos..].iter().take(5).collect();
            let inverse = if rest.starts_with("^-1") {
                pos += 3;
                true
            } else if rest.starts_with("^{-1}") {
                pos += 5;
                true
            } else if rest.starts_with("⁻¹") {
                pos += 2;
                true
            } else {
                false
            };
            letters.push(Letter { gen, inverse });
        }
        Ok(Word(letters))
    }
}

/// Whether two λ generators commute by the far-commutativity relation, i.e.
/// have disjoint index sets. Equal generators commute trivially.
pub fn vp_commute(a: Gen, b: Gen) -> bool {
    if a == b {
        return true;
    }
    match (a, b) {
        (Gen::Lambda(i, j), Gen::Lambda(k, l)) => i != k && i != l && j != k && j != l,
        _ => false,
    }
}

/// A canonical form for words in a group where some pairs of generators
/// commute and no other relations are used: letters are cancelled across
/// commuting neighbours, then the lexicographically least arrangement is chosen.
/// Two words have the same form exactly when they are equal in that group.
pub fn commutation_normal_form(w: &Word, commute: impl Fn(Gen, Gen) -> bool) -> Word {
    let mut letters = w.free_reduce().0;
    'cancel: loop {
        for a in 0..letters.len() {
            for b in a + 1..letters.len() {
                if letters[b].gen == letters[a].gen {
                    if letters[b].inverse != letters[a].inverse {
                        letters.remove(b);
                        letters.remove(a);
                        continue 'cancel;
                    }
                    break;
                }
                if !commute(letters[a].gen, letters[b].gen) {
                    break;
                }
            }
        }
        break;
    }
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..letters.len() {
            if (0..p).all(|q| commute(letters[q].gen, letters[p].gen)) && best.is_none_or(|b| letters[p] < letters[b]) {
                best = Some(p);
            }
        }
        out.push(letters.remove(best.expect("the first letter is always available")));
    }
    Word(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("l14 l13^-1 s2"), Word(vec![
            Letter::new(Gen::Lambda(1, 4)),
            Letter::inv(Gen::Lambda(1, 3)),
            Letter::new(Gen::Sigma(2)),
        ]));
        assert_eq!(w("lambda(10,12)").to_string(), "l(10,12)");
        assert_eq!(w("d_{41}^{-1}·b13⁻¹"), w("d41^-1 b13^-1"));
        assert_eq!(w("e"), Word::empty());
        assert_eq!(w("s12"), Word::gen(Gen::Sigma(12)));
        assert_eq!(w("x23 * P12").to_string(), "x23 P12");
        assert!("l123".parse::<Word>().is_err());
        assert!("l11".parse::<Word>().is_err());
        assert!("q12".parse::<Word>().is_err());
        let text = "l14 l13 l24 l32^-1";
        assert_eq!(w(text).to_string(), text);
    }

    #[test]
    fn json_round_trip() {
        let word = w("l12 s3^-1");
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(json, r#"[{"gen":"lambda","i":1,"j":2,"e":1},{"gen":"sigma","i":3,"e":-1}]"#);
        assert_eq!(serde_json::from_str::<Word>(&json).unwrap(), word);
        assert!(serde_json::from_str::<Word>(r#"[{"gen":"lambda","i":1,"j":2,"e":2}]"#).is_err());
    }

    #[test]
    fn free_reduction() {
        assert!(w("s1 s1^-1").free_reduce().is_empty());
        assert_eq!(w("l12 l13 l13^-1 l12").free_reduce(), w("l12 l12"));
        assert_eq!(w("l12 l21 l12").free_reduce(), w("l12 l21 l12"));
        assert_eq!(w("s1 s2 s2^-1 s1^-1 s3").free_reduce(), w("s3"));
    }

    #[test]
    fn normal_form() {
        let nf = |s: &str| commutation_normal_form(&w(s), vp_commute);
        assert_eq!(nf("l14 l24 l13 l23"), w("l14 l13 l24 l23"));
        assert_eq!(nf("l13 l24 l13^-1"), w("l24"));
        assert_eq!(nf("l12 l23 l12^-1"), w("l12 l23 l12^-1"));
        assert_eq!(nf("l34 l12"), w("l12 l34"));
    }
}
