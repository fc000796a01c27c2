//! JSON documents for every object the library reads or writes.
//!
//! Each document is an object tagged by `"kind"`. Rationals are written as
//! `"p/q"` (or `"p"` for integers) so that values survive exactly.

use serde::{Deserialize, Serialize};

use crate::braid::Word;
use crate::error::{Error, Result};
use crate::extension::CrossMap;
use crate::group::GroupTable;
use crate::hopf::{AlgebraElement2, HopfData};
use crate::linear::TensorSpace;
use crate::matrix::{format_rational, parse_rational, RationalMatrix, Q};
use crate::product::LegType;
use crate::ybset::{BinaryOpTable, FiniteYBMap, SetMapping};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairLayout {
    pub b: usize,
    pub c: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegJson {
    pub dim: usize,
    #[serde(rename = "type")]
    pub leg_type: LegType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    SetYb {
        size: usize,
        table: Vec<(usize, usize)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pair_layout: Option<PairLayout>,
    },
    Binop {
        size: usize,
        table: Vec<usize>,
    },
    Group {
        size: usize,
        mult: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Mapping {
        domain: usize,
        codomain: usize,
        table: Vec<usize>,
    },
    Cross {
        size_c: usize,
        size_b: usize,
        table: Vec<(usize, usize)>,
    },
    Matrix {
        rows: usize,
        cols: usize,
        entries: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        positions: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        legs: Option<Vec<LegJson>>,
    },
    Hopf {
        dim: usize,
        mult: Vec<String>,
        unit: Vec<String>,
        comult: Vec<String>,
        counit: Vec<String>,
        antipode: Vec<String>,
    },
    Elem2 {
        rows: usize,
        cols: usize,
        coeffs: Vec<String>,
    },
    Words {
        words: Vec<Word>,
    },
}

fn rationals(xs: &[Q]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

fn parse_all(xs: &[String]) -> Result<Vec<Q>> {
    xs.iter().map(|s| parse_rational(s)).collect()
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::SetYb { .. } => "set_yb",
            Document::Binop { .. } => "binop",
            Document::Group { .. } => "group",
            Document::Mapping { .. } => "mapping",
            Document::Cross { .. } => "cross",
            Document::Matrix { .. } => "matrix",
            Document::Hopf { .. } => "hopf",
            Document::Elem2 { .. } => "elem2",
            Document::Words { .. } => "words",
        }
    }

    pub fn parse(text: &str) -> Result<Document> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    fn wrong(&self, want: &str) -> Error {
        Error::Parse(format!("expected a {want} document, found {}", self.kind()))
    }

    pub fn set_yb(m: &FiniteYBMap) -> Document {
        Document::SetYb { size: m.size(), table: m.table().to_vec(), pair_layout: None }
    }

    pub fn extension(m: &FiniteYBMap, b: usize, c: usize) -> Document {
        Document::SetYb { size: m.size(), table: m.table().to_vec(), pair_layout: Some(PairLayout { b, c }) }
    }

    pub fn into_set_yb(self) -> Result<FiniteYBMap> {
        match self {
            Document::SetYb { size, table, .. } => FiniteYBMap::new(size, table),
            other => Err(other.wrong("set_yb")),
        }
    }

    pub fn binop(op: &BinaryOpTable) -> Document {
        Document::Binop { size: op.size(), table: op.table().to_vec() }
    }

    pub fn into_binop(self) -> Result<BinaryOpTable> {
        match self {
            Document::Binop { size, table } => BinaryOpTable::new(size, table),
            other => Err(other.wrong("binop")),
        }
    }

    pub fn group(g: &GroupTable) -> Document {
        Document::Group { size: g.size(), mult: g.table().to_vec(), name: None }
    }

    pub fn into_group(self) -> Result<GroupTable> {
        match self {
            Document::Group { size, mult, .. } => GroupTable::new(size, mult),
            other => Err(other.wrong("group")),
        }
    }

    pub fn mapping(f: &SetMapping) -> Document {
        Document::Mapping { domain: f.domain(), codomain: f.codomain(), table: f.table().to_vec() }
    }

    pub fn into_mapping(self) -> Result<SetMapping> {
        match self {
            Document::Mapping { domain, codomain, table } => SetMapping::new(domain, codomain, table),
            other => Err(other.wrong("mapping")),
        }
    }

    pub fn cross(r: &CrossMap) -> Document {
        Document::Cross { size_c: r.size_c(), size_b: r.size_b(), table: r.table().to_vec() }
    }

    pub fn into_cross(self) -> Result<CrossMap> {
        match self {
            Document::Cross { size_c, size_b, table } => CrossMap::new(size_c, size_b, table),
            other => Err(other.wrong("cross")),
        }
    }

    pub fn matrix(m: &RationalMatrix) -> Document {
        Document::Matrix { rows: m.rows(), cols: m.cols(), entries: rationals(m.entries()), positions: None, legs: None }
    }

    pub fn into_matrix(self) -> Result<RationalMatrix> {
        match self {
            Document::Matrix { rows, cols, entries, .. } => RationalMatrix::new(rows, cols, parse_all(&entries)?),
            other => Err(other.wrong("matrix")),
        }
    }

    /// A matrix together with its placement request: 1-based positions and
    /// the legs of the target space.
    pub fn into_placed(self) -> Result<(RationalMatrix, Vec<usize>, TensorSpace)> {
        match self {
            Document::Matrix { rows, cols, entries, positions: Some(positions), legs: Some(legs) } => {
                let m = RationalMatrix::new(rows, cols, parse_all(&entries)?)?;
                let space = TensorSpace::new(legs.iter().map(|l| (l.dim, l.leg_type)).collect())?;
                Ok((m, positions, space))
            }
            Document::Matrix { .. } => Err(Error::Parse("placement needs \"positions\" and \"legs\"".into())),
            other => Err(other.wrong("matrix")),
        }
    }

    pub fn hopf(h: &HopfData) -> Document {
        Document::Hopf {
            dim: h.dim(),
            mult: rationals(h.mult()),
            unit: rationals(h.unit()),
            comult: rationals(h.comult()),
            counit: rationals(h.counit()),
            antipode: rationals(h.antipode().entries()),
        }
    }

    pub fn into_hopf(self) -> Result<HopfData> {
        match self {
            Document::Hopf { dim, mult, unit, comult, counit, antipode } => {
                let s = RationalMatrix::new(dim, dim, parse_all(&antipode)?)?;
                HopfData::new(dim, parse_all(&mult)?, parse_all(&unit)?, parse_all(&comult)?, parse_all(&counit)?, s)
            }
            other => Err(other.wrong("hopf")),
        }
    }

    pub fn elem2(x: &AlgebraElement2) -> Document {
        Document::Elem2 { rows: x.coeffs.rows(), cols: x.coeffs.cols(), coeffs: rationals(x.coeffs.entries()) }
    }

    pub fn into_elem2(self) -> Result<AlgebraElement2> {
        match self {
            Document::Elem2 { rows, cols, coeffs } => Ok(AlgebraElement2::new(RationalMatrix::new(rows, cols, parse_all(&coeffs)?)?)),
            other => Err(other.wrong("elem2")),
        }
    }

    pub fn into_words(self) -> Result<Vec<Word>> {
        match self {
            Document::Words { words } => Ok(words),
            other => Err(other.wrong("words")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra, fixtures};

    fn round_trip(d: &Document) {
        assert_eq!(&Document::parse(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn set_yb_text() {
        let d = Document::parse(r#"{"kind":"set_yb","size":2,"table":[[0,0],[1,0],[0,1],[1,1]]}"#).unwrap();
        let m = d.clone().into_set_yb().unwrap();
        assert_eq!(m, FiniteYBMap::swap(2));
        assert_eq!(Document::set_yb(&m), d);
        let ext = Document::extension(&m, 2, 1);
        assert!(ext.to_json().contains(r#""pair_layout":{"b":2,"c":1}"#));
        round_trip(&ext);
    }

    #[test]
    fn matrices_keep_exact_values() {
        let d = Document::parse(r#"{"kind":"matrix","rows":1,"cols":2,"entries":["1/3","-2"]}"#).unwrap();
        let m = d.clone().into_matrix().unwrap();
        assert_eq!(m.entries()[0], crate::matrix::q_frac(1, 3));
        assert_eq!(Document::matrix(&m), d);
        assert!(matches!(d.into_placed(), Err(Error::Parse(_))));
        let p = Document::parse(r#"{"kind":"matrix","rows":1,"cols":1,"entries":["2"],"positions":[2],"legs":[{"dim":2,"type":"B"},{"dim":1,"type":"C"}]}"#)
            .unwrap()
            .into_placed()
            .unwrap();
        assert_eq!(p.1, vec![2]);
        assert_eq!(p.2.dim(), 2);
    }

    #[test]
    fn hopf_and_elements() {
        let h = group_algebra(&GroupTable::cyclic(3));
        let d = Document::hopf(&h);
        round_trip(&d);
        assert_eq!(d.into_hopf().unwrap(), h);
        let e = Document::elem2(&fixtures::z2_group_r());
        round_trip(&e);
        assert_eq!(e.into_elem2().unwrap(), fixtures::z2_group_r());
    }

    #[test]
    fn words_and_errors() {
        let d = Document::parse(r#"{"kind":"words","words":[[{"gen":"lambda","i":1,"j":2,"e":1}],[]]}"#).unwrap();
        let ws = d.clone().into_words().unwrap();
        assert_eq!(ws[0].to_string(), "l12");
        assert!(ws[1].is_empty());
        round_trip(&d);
        assert!(matches!(d.into_set_yb(), Err(Error::Parse(_))));
        assert!(matches!(Document::parse(r#"{"kind":"nope"}"#), Err(Error::Parse(_))));
        assert!(matches!(Document::parse(r#"{"kind":"matrix","rows":1,"cols":1,"entries":["1/0"]}"#).unwrap().into_matrix(), Err(Error::Parse(_))));
    }
}
