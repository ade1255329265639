//! JSON files: algebra tables, rescaling maps and renamings.
//!
//! ```json
//! {
//!   "name": "su2",
//!   "symbols": [],
//!   "generators": ["Jx", "Jy", "Jz"],
//!   "brackets": [
//!     { "a": "Jx", "b": "Jy", "result": [{ "gen": "Jz", "coeff": "i" }] }
//!   ]
//! }
//! ```
//!
//! Omitted pairs bracket to zero. Coefficients use the scalar expression
//! grammar. Exports list brackets in basis order and are byte-stable.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraBuilder, AlgebraError, LieAlgebra, Renaming};
use crate::contraction::RescalingMap;
use crate::expr::{parse_scalar, ExprError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("coefficient of {gen} in [{a}, {b}]: {source}")]
    Coefficient { a: String, b: String, gen: String, source: ExprError },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        FileError::Json { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub gen: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketFile {
    pub a: String,
    pub b: String,
    pub result: Vec<TermFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    #[serde(default)]
    pub symbols: Vec<String>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketFile>,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        let brackets = algebra
            .stored_brackets()
            .map(|((a, b), comb)| BracketFile {
                a: algebra.generator_name(a).to_string(),
                b: algebra.generator_name(b).to_string(),
                result: comb
                    .iter()
                    .map(|(d, c)| TermFile { gen: algebra.generator_name(d).to_string(), coeff: c.to_string() })
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: algebra.name().to_string(),
            symbols: algebra.symbols().to_vec(),
            generators: algebra.generator_names().to_vec(),
            brackets,
        }
    }

    /// Build the table. Conflicting orientations of one pair are kept as
    /// antisymmetry defects for `validate` to report.
    pub fn to_algebra(&self) -> Result<LieAlgebra, FileError> {
        let mut builder = AlgebraBuilder::new(&self.name, self.symbols.clone(), self.generators.clone())?;
        for br in &self.brackets {
            let mut terms = Vec::with_capacity(br.result.len());
            for t in &br.result {
                let coeff = parse_scalar(&t.coeff, &self.symbols).map_err(|source| FileError::Coefficient {
                    a: br.a.clone(),
                    b: br.b.clone(),
                    gen: t.gen.clone(),
                    source,
                })?;
                terms.push((t.gen.as_str(), coeff));
            }
            builder = builder.bracket(&br.a, &br.b, &terms)?;
        }
        Ok(builder.build())
    }
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Read { path: path.display().to_string(), source })
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra, FileError> {
    serde_json::from_str::<AlgebraFile>(text)?.to_algebra()
}

pub fn load_algebra(path: &Path) -> Result<LieAlgebra, FileError> {
    parse_algebra(&read(path)?)
}

/// Pretty JSON with a trailing newline.
pub fn export_algebra(algebra: &LieAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(algebra)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_rescaling(text: &str) -> Result<RescalingMap, FileError> {
    Ok(serde_json::from_str(text)?)
}

pub fn load_rescaling(path: &Path) -> Result<RescalingMap, FileError> {
    parse_rescaling(&read(path)?)
}

pub fn parse_renaming(text: &str) -> Result<Renaming, FileError> {
    let pairs: BTreeMap<String, String> = serde_json::from_str(text)?;
    Ok(Renaming::from_pairs(pairs))
}

pub fn load_renaming(path: &Path) -> Result<Renaming, FileError> {
    parse_renaming(&read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::contraction::tables_equal;

    #[test]
    fn catalog_round_trips_through_json() {
        for name in catalog::NAMES {
            let alg = catalog::algebra(name).unwrap();
            let text = export_algebra(&alg);
            let back = parse_algebra(&text).unwrap();
            assert!(tables_equal(&alg, &back, &Renaming::identity()).unwrap().is_equal(), "{name}");
            assert_eq!(export_algebra(&back), text, "{name}");
        }
    }

    #[test]
    fn reversed_orientation_is_negated() {
        let text =
            r#"{"name":"s","generators":["A","B"],"brackets":[{"a":"B","b":"A","result":[{"gen":"A","coeff":"-2"}]}]}"#;
        let alg = parse_algebra(text).unwrap();
        assert_eq!(alg.bracket_named("A", "B").unwrap().display(&alg).to_string(), "2*A");
    }

    #[test]
    fn conflicting_entries_are_defects() {
        let text = r#"{"name":"s","generators":["A","B"],"brackets":[
            {"a":"A","b":"B","result":[{"gen":"A","coeff":"1"}]},
            {"a":"B","b":"A","result":[{"gen":"A","coeff":"1"}]}]}"#;
        let alg = parse_algebra(text).unwrap();
        assert!(!alg.validate().antisymmetry.is_empty());
    }

    #[test]
    fn errors_have_locations() {
        match parse_algebra("{\"name\": \"x\",\n \"generators\": [1]}") {
            Err(FileError::Json { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let bad = r#"{"name":"s","generators":["A","B"],"brackets":[{"a":"A","b":"B","result":[{"gen":"A","coeff":"2*q"}]}]}"#;
        assert!(matches!(parse_algebra(bad), Err(FileError::Coefficient { .. })));
        let unknown = r#"{"name":"s","generators":["A"],"brackets":[{"a":"A","b":"C","result":[]}]}"#;
        assert!(matches!(parse_algebra(unknown), Err(FileError::Algebra(_))));
    }

    #[test]
    fn maps_parse() {
        let m = parse_rescaling(r#"{"Px": 1, "M": 2}"#).unwrap();
        assert_eq!(m.exponent("M"), Some(2));
        let r = parse_renaming(r#"{"Hb": "H"}"#).unwrap();
        assert_eq!(r.apply("Hb"), "H");
        assert_eq!(r.apply("Px"), "Px");
    }
}
