//! JSON exchange formats for characters and modules.
//!
//! Both formats carry a `schema` tag. Laurent polynomials are objects from
//! exponent to coefficient; coefficients are written as strings and read from
//! strings or integers. Module matrices are dense, row-major, with exact
//! rational entries written as strings such as `"-1"` or `"1/2"`.

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, CartanType, RootVector};
use crate::error::{KlrError, Result};
use crate::klr::module::{BasisVector, FiniteModule, Matrix, Truncation};
use crate::klr::poly::Coeff;
use crate::laurent::LaurentPoly;
use crate::shuffle::WordSum;
use crate::words::{weight, Word};

pub const CHARACTER_SCHEMA: &str = "klr.character.v1";
pub const MODULE_SCHEMA: &str = "klr.module.v1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub word: Word,
    pub coeff: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterJson {
    #[serde(default = "character_schema")]
    pub schema: String,
    pub weight: RootVector,
    pub terms: Vec<CharacterTerm>,
}

fn character_schema() -> String {
    CHARACTER_SCHEMA.into()
}

/// Terms in decreasing word order.
pub fn character_to_json(datum: &CartanDatum, ch: &WordSum) -> CharacterJson {
    let weight = ch.weight(datum).unwrap_or_else(|| RootVector::zero(datum.rank()));
    let terms: Vec<CharacterTerm> = ch
        .sorted_terms(datum)
        .into_iter()
        .map(|(w, c)| CharacterTerm { word: w.clone(), coeff: c.clone() })
        .collect();
    CharacterJson { schema: CHARACTER_SCHEMA.into(), weight, terms }
}

pub fn character_from_json(datum: &CartanDatum, j: &CharacterJson) -> Result<WordSum> {
    if j.schema != CHARACTER_SCHEMA {
        return Err(KlrError::Parse(format!("unknown character schema {:?}", j.schema)));
    }
    let mut s = WordSum::zero();
    for t in &j.terms {
        t.word.check(datum)?;
        if weight(datum, &t.word.0) != j.weight {
            return Err(KlrError::WeightMismatch(format!("word {} in a character of weight {}", t.word, j.weight)));
        }
        s.add_term(t.word.clone(), t.coeff.clone());
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisJson {
    pub word: Word,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncationJson {
    pub poly_degree: Vec<u32>,
    pub bound: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    #[serde(default = "module_schema")]
    pub schema: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub order: Vec<u8>,
    pub blocks: Vec<RootVector>,
    pub basis: Vec<BasisJson>,
    /// `y[t][row][col]`.
    pub y: Vec<Vec<Vec<String>>>,
    /// `psi[a][row][col]`, `null` at block boundaries.
    pub psi: Vec<Option<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<TruncationJson>,
}

fn module_schema() -> String {
    MODULE_SCHEMA.into()
}

fn dense(m: &Matrix) -> Vec<Vec<String>> {
    let n = m.dim();
    (0..n).map(|r| (0..n).map(|c| m.get(r, c).to_string()).collect()).collect()
}

fn sparse(rows: &[Vec<String>], n: usize) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(KlrError::Parse(format!("matrix is not {n} x {n}")));
    }
    let mut m = Matrix::zero(n);
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            let v: Coeff = x.trim().parse().map_err(|e| KlrError::Parse(format!("matrix entry {x:?}: {e}")))?;
            m.set(r, c, v);
        }
    }
    Ok(m)
}

pub fn module_to_json(m: &FiniteModule) -> ModuleJson {
    ModuleJson {
        schema: MODULE_SCHEMA.into(),
        cartan_type: m.datum.cartan_type().letter().to_string(),
        rank: m.datum.rank(),
        order: m.datum.order().to_vec(),
        blocks: m.blocks.clone(),
        basis: m.basis.iter().map(|b| BasisJson { word: b.word.clone(), degree: b.degree }).collect(),
        y: m.y.iter().map(dense).collect(),
        psi: m.psi.iter().map(|p| p.as_ref().map(dense)).collect(),
        truncation: m.truncation.as_ref().map(|t| TruncationJson { poly_degree: t.poly_degree.clone(), bound: t.bound }),
    }
}

pub fn module_from_json(j: &ModuleJson) -> Result<FiniteModule> {
    if j.schema != MODULE_SCHEMA {
        return Err(KlrError::Parse(format!("unknown module schema {:?}", j.schema)));
    }
    let ty: CartanType = j.cartan_type.parse()?;
    let datum = CartanDatum::with_order(ty, j.rank, Some(j.order.clone()))?;
    let basis: Vec<BasisVector> = j.basis.iter().map(|b| BasisVector { word: b.word.clone(), degree: b.degree }).collect();
    for b in &basis {
        b.word.check(&datum)?;
    }
    if j.blocks.is_empty() {
        return Err(KlrError::Parse("a module needs at least one block".into()));
    }
    let n = basis.len();
    let mut m = FiniteModule::zero_action(&datum, j.blocks.clone(), basis)?;
    if j.y.len() != m.y.len() || j.psi.len() != m.psi.len() {
        return Err(KlrError::Parse(format!(
            "expected {} y and {} psi matrices, got {} and {}",
            m.y.len(),
            m.psi.len(),
            j.y.len(),
            j.psi.len()
        )));
    }
    for (t, rows) in j.y.iter().enumerate() {
        m.y[t] = sparse(rows, n)?;
    }
    for (a, rows) in j.psi.iter().enumerate() {
        match (rows, m.psi[a].is_some()) {
            (Some(rows), true) => m.psi[a] = Some(sparse(rows, n)?),
            (None, false) => {}
            _ => return Err(KlrError::Parse(format!("psi{} does not match the block structure", a + 1))),
        }
    }
    m.truncation = j.truncation.as_ref().map(|t| Truncation { poly_degree: t.poly_degree.clone(), bound: t.bound });
    Ok(m)
}

pub fn module_to_string(m: &FiniteModule) -> String {
    to_pretty_compact(&serde_json::to_value(module_to_json(m)).expect("module serialises"))
}

pub fn module_from_str(s: &str) -> Result<FiniteModule> {
    let j: ModuleJson = serde_json::from_str(s).map_err(|e| KlrError::Parse(e.to_string()))?;
    module_from_json(&j)
}

pub fn laurent_to_value(p: &LaurentPoly) -> serde_json::Value {
    serde_json::to_value(p).expect("polynomial serialises")
}

/// Indented JSON with arrays of scalars kept on one line.
pub fn to_pretty_compact(v: &serde_json::Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalar array"));
        }
        Value::Array(xs) => {
            if xs.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(x, indent + 1, out);
                out.push_str(if k + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) => {
            if m.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (k, (key, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("string key"));
                out.push_str(": ");
                render(x, indent + 1, out);
                out.push_str(if k + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalar")),
    }
}
