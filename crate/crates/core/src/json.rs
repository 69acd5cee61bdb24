//! JSON encodings for matrices, polynomials and vector fields.
//!
//! Rationals travel as strings (`"3"`, `"-1/2"`) so values stay exact;
//! polynomial terms are written in canonical graded-lex order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Limits, MultiPoly, PolyVectorField};
use crate::ratmat::{format_rational, parse_rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub nvars: usize,
    pub components: Vec<PolyJson>,
}

impl From<&RationalMatrix> for MatrixJson {
    fn from(m: &RationalMatrix) -> Self {
        MatrixJson {
            rows: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        }
    }
}

impl TryFrom<&MatrixJson> for RationalMatrix {
    type Error = Error;
    fn try_from(j: &MatrixJson) -> Result<Self> {
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        PolyJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    c: format_rational(c),
                    e: m.exponents().to_vec(),
                })
                .collect(),
        }
    }
}

impl PolyJson {
    pub fn to_poly(&self, limits: &Limits) -> Result<MultiPoly> {
        limits.check_nvars(self.nvars)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.e.len() != self.nvars {
                return Err(Error::Parse(format!(
                    "term has {} exponents, expected {}",
                    t.e.len(),
                    self.nvars
                )));
            }
            let degree: u64 = t.e.iter().map(|&e| u64::from(e)).sum();
            if degree > u64::from(limits.max_degree) {
                return Err(Error::ResourceLimit(format!(
                    "term of degree {degree} exceeds the cap of {}",
                    limits.max_degree
                )));
            }
            terms.push((t.e.clone(), parse_rational(&t.c)?));
        }
        MultiPoly::from_terms(self.nvars, terms)
    }
}

impl From<&PolyVectorField> for FieldJson {
    fn from(f: &PolyVectorField) -> Self {
        FieldJson {
            nvars: f.nvars(),
            components: f.components().iter().map(PolyJson::from).collect(),
        }
    }
}

impl FieldJson {
    pub fn to_field(&self, limits: &Limits) -> Result<PolyVectorField> {
        limits.check_nvars(self.nvars)?;
        let components = self
            .components
            .iter()
            .map(|c| c.to_poly(limits))
            .collect::<Result<Vec<_>>>()?;
        PolyVectorField::new(self.nvars, components).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_matrix(s: &str) -> Result<RationalMatrix> {
    RationalMatrix::try_from(&from_str::<MatrixJson>(s)?)
}

pub fn parse_poly(s: &str, limits: &Limits) -> Result<MultiPoly> {
    from_str::<PolyJson>(s)?.to_poly(limits)
}

pub fn parse_field(s: &str, limits: &Limits) -> Result<PolyVectorField> {
    from_str::<FieldJson>(s)?.to_field(limits)
}

pub fn matrix_to_string(m: &RationalMatrix) -> String {
    serde_json::to_string(&MatrixJson::from(m)).expect("plain data serializes")
}

pub fn poly_to_string(p: &MultiPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("plain data serializes")
}

pub fn field_to_string(f: &PolyVectorField) -> String {
    serde_json::to_string(&FieldJson::from(f)).expect("plain data serializes")
}
