//! JSON document written by `--format json`, with conversions back to the
//! library types.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use schubert_core::diagrams::{energies, BoxSet, Geometry};
use schubert_core::restriction::HilbertData;
use schubert_core::ring::LaurentPoly;
use schubert_core::tableaux::SetValuedTableau;
use schubert_core::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub d: usize,
    pub w: Vec<i32>,
    pub v: Vec<i32>,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub backend: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_polynomial: Option<PolynomialJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagrams: Option<Vec<DiagramJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tableaux: Option<Vec<TableauJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub exp: Vec<i32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub monomials: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub d_w: usize,
    pub m: Vec<u64>,
    /// Set when the data comes from another root system (type B via D).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub computed_in: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    /// Coefficients of `1, n, n^2, ...` as exact rationals.
    pub coefficients: Vec<String>,
    /// `h(0), h(1), ...` up to the truncation.
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub boxes: Vec<[usize; 2]>,
    pub e1: String,
    pub e2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    #[serde(rename = "box")]
    pub cell: [usize; 2],
    pub entries: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub cells: Vec<CellJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceJson {
    pub degree: usize,
    pub dim: String,
    pub monomials: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub trunc: usize,
    pub slices: Vec<SliceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub backends: Vec<String>,
    pub agree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

pub fn monomials(p: &LaurentPoly) -> Vec<Monomial> {
    p.terms().map(|(e, c)| Monomial { exp: e.clone(), coef: c.to_string() }).collect()
}

pub fn class_to_json(p: &LaurentPoly) -> ClassJson {
    ClassJson { monomials: monomials(p) }
}

pub fn class_from_json(c: &ClassJson, rank: usize) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero(rank);
    for m in &c.monomials {
        let coef: BigInt = m.coef.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", m.coef)))?;
        p = p.try_add(&LaurentPoly::term(m.exp.clone(), coef))?;
    }
    Ok(p)
}

pub fn hilbert_to_json(h: &HilbertData, computed_in: Option<String>) -> HilbertJson {
    HilbertJson { d_w: h.d_w, m: h.m.clone(), computed_in }
}

pub fn hilbert_from_json(h: &HilbertJson) -> HilbertData {
    HilbertData { d_w: h.d_w, m: h.m.clone() }
}

pub fn diagram_to_json(c: &BoxSet, lambda: &[usize]) -> DiagramJson {
    let (e1, e2) = energies(c, lambda);
    DiagramJson { boxes: c.boxes().iter().map(|&(i, j)| [i, j]).collect(), e1: e1.to_string(), e2 }
}

pub fn diagram_from_json(c: &DiagramJson, geometry: Geometry, mu: &[usize]) -> Result<BoxSet> {
    BoxSet::new(geometry, mu.to_vec(), c.boxes.iter().map(|b| (b[0], b[1])))
}

pub fn tableau_to_json(t: &SetValuedTableau) -> TableauJson {
    TableauJson { cells: t.cells().iter().map(|(&(i, j), s)| CellJson { cell: [i, j], entries: s.clone() }).collect() }
}

pub fn tableau_from_json(t: &TableauJson, geometry: Geometry, lambda: &[usize]) -> Result<SetValuedTableau> {
    let cells: BTreeMap<(usize, usize), Vec<usize>> =
        t.cells.iter().map(|c| ((c.cell[0], c.cell[1]), c.entries.clone())).collect();
    SetValuedTableau::new(geometry, lambda.to_vec(), cells)
}
