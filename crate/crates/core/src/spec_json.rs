//! JSON form of algebra specifications.
//!
//! ```json
//! {"name": "H", "field": {"kind": "Q"}, "dim": 4, "basis": ["1","i","j","k"],
//!  "unit": ["1","0","0","0"], "kind": "associative", "table": [[["1","0","0","0"], ...], ...]}
//! ```

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraKind, AlgebraSpec};
use crate::coeff::{FieldDescriptor, FieldValue};
use crate::expr::parse_value;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("parse error in {location}, column {column}: {message}")]
    Expr { location: String, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum FieldJson {
    Q,
    Fp { p: u64 },
    RatFunc { base: Box<FieldJson>, vars: Vec<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindJson {
    Associative,
    Jordan,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub name: String,
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub kind: KindJson,
    pub table: Vec<Vec<Vec<String>>>,
}

impl FieldJson {
    pub fn to_descriptor(&self) -> Result<FieldDescriptor, SpecError> {
        match self {
            FieldJson::Q => Ok(FieldDescriptor::Rationals),
            FieldJson::Fp { p } => FieldDescriptor::prime(*p).map_err(|e| SpecError::Schema(format!("field: {e}"))),
            FieldJson::RatFunc { base, vars } => {
                let base = base.to_descriptor()?;
                let names: Vec<&str> = vars.iter().map(String::as_str).collect();
                FieldDescriptor::rational_functions(base, &names).map_err(|e| SpecError::Schema(format!("field: {e}")))
            }
        }
    }

    pub fn from_descriptor(f: &FieldDescriptor) -> Self {
        match f {
            FieldDescriptor::Rationals => FieldJson::Q,
            FieldDescriptor::PrimeField(p) => FieldJson::Fp { p: *p },
            FieldDescriptor::RationalFunctions(r) => FieldJson::RatFunc {
                base: Box::new(FieldJson::from_descriptor(r.field())),
                vars: r.vars().to_vec(),
            },
        }
    }
}

fn parse_at(text: &str, field: &FieldDescriptor, location: impl Fn() -> String) -> Result<FieldValue, SpecError> {
    parse_value(text, field).map_err(|e| SpecError::Expr {
        location: location(),
        column: e.column,
        message: e.message,
    })
}

impl SpecJson {
    pub fn to_spec(&self) -> Result<Arc<AlgebraSpec<FieldValue>>, SpecError> {
        let field = self.field.to_descriptor()?;
        let m = self.dim;
        if m == 0 {
            return Err(SpecError::Schema("dim must be at least 1".into()));
        }
        if self.basis.len() != m {
            return Err(SpecError::Schema(format!("basis has {} labels, dim is {m}", self.basis.len())));
        }
        if self.unit.len() != m {
            return Err(SpecError::Schema(format!("unit has {} entries, dim is {m}", self.unit.len())));
        }
        if self.table.len() != m {
            return Err(SpecError::Schema(format!("table has {} rows, dim is {m}", self.table.len())));
        }
        let unit = self
            .unit
            .iter()
            .enumerate()
            .map(|(i, s)| parse_at(s, &field, || format!("unit[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut table = Vec::with_capacity(m);
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != m {
                return Err(SpecError::Schema(format!("table[{i}] has {} entries, dim is {m}", row.len())));
            }
            let mut out_row = Vec::with_capacity(m);
            for (j, coords) in row.iter().enumerate() {
                if coords.len() != m {
                    return Err(SpecError::Schema(format!(
                        "table[{i}][{j}] has {} coordinates, dim is {m}",
                        coords.len()
                    )));
                }
                let parsed = coords
                    .iter()
                    .enumerate()
                    .map(|(k, s)| parse_at(s, &field, || format!("table[{i}][{j}][{k}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                out_row.push(parsed);
            }
            table.push(out_row);
        }
        let kind = match self.kind {
            KindJson::Associative => AlgebraKind::Associative,
            KindJson::Jordan => AlgebraKind::Jordan,
        };
        AlgebraSpec::new(self.name.clone(), field, self.basis.clone(), unit, kind, table)
            .map_err(|e| SpecError::Schema(e.to_string()))
    }

    pub fn from_spec(spec: &AlgebraSpec<FieldValue>) -> Self {
        let m = spec.dim();
        SpecJson {
            name: spec.name().to_string(),
            field: FieldJson::from_descriptor(spec.field()),
            dim: m,
            basis: spec.basis_labels().to_vec(),
            unit: spec.unit_coords().iter().map(|v| v.to_string()).collect(),
            kind: match spec.kind() {
                AlgebraKind::Associative => KindJson::Associative,
                AlgebraKind::Jordan => KindJson::Jordan,
            },
            table: (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| spec.product(i, j).iter().map(|v| v.to_string()).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn spec_from_str(text: &str) -> Result<Arc<AlgebraSpec<FieldValue>>, SpecError> {
    let parsed: SpecJson = serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        // strip serde_json's own " at line L column C" suffix
        let message = match message.rfind(" at line ") {
            Some(idx) => message[..idx].to_string(),
            None => message,
        };
        if e.is_data() {
            SpecError::Schema(format!("line {}, column {}: {message}", e.line(), e.column()))
        } else {
            SpecError::Json {
                line: e.line(),
                column: e.column(),
                message,
            }
        }
    })?;
    parsed.to_spec()
}

pub fn load_spec(path: &Path) -> Result<Arc<AlgebraSpec<FieldValue>>, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    spec_from_str(&text)
}

/// Pretty-printed JSON with one product per line.
pub fn spec_to_string(spec: &AlgebraSpec<FieldValue>) -> String {
    let json = SpecJson::from_spec(spec);
    let quote = |s: &String| serde_json::to_string(s).expect("string");
    let list = |v: &[String]| format!("[{}]", v.iter().map(quote).collect::<Vec<_>>().join(", "));
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"name\": {},\n", quote(&json.name)));
    out.push_str(&format!(
        "  \"field\": {},\n",
        serde_json::to_string(&json.field).expect("field")
    ));
    out.push_str(&format!("  \"dim\": {},\n", json.dim));
    out.push_str(&format!("  \"basis\": {},\n", list(&json.basis)));
    out.push_str(&format!("  \"unit\": {},\n", list(&json.unit)));
    out.push_str(&format!(
        "  \"kind\": {},\n",
        serde_json::to_string(&json.kind).expect("kind")
    ));
    out.push_str("  \"table\": [\n");
    for (i, row) in json.table.iter().enumerate() {
        out.push_str("    [\n");
        for (j, coords) in row.iter().enumerate() {
            out.push_str("      ");
            out.push_str(&list(coords));
            out.push_str(if j + 1 < row.len() { ",\n" } else { "\n" });
        }
        out.push_str(if i + 1 < json.table.len() { "    ],\n" } else { "    ]\n" });
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn save_spec(spec: &AlgebraSpec<FieldValue>, path: &Path) -> Result<(), SpecError> {
    std::fs::write(path, spec_to_string(spec)).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn catalog_round_trips() {
        for e in catalog() {
            let text = spec_to_string(&e.spec);
            let back = spec_from_str(&text).unwrap();
            assert!(back.same_structure(&e.spec), "{}", e.id);
            assert_eq!(back.name(), e.spec.name());
        }
    }

    #[test]
    fn truncated_file_is_a_parse_error() {
        let text = spec_to_string(&catalog()[0].spec);
        let cut = &text[..text.len() / 2];
        assert!(matches!(spec_from_str(cut), Err(SpecError::Json { .. })));
    }

    #[test]
    fn schema_errors() {
        let bad_kind = r#"{"name":"x","field":{"kind":"Q"},"dim":1,"basis":["1"],"unit":["1"],"kind":"lie","table":[[["1"]]]}"#;
        assert!(matches!(spec_from_str(bad_kind), Err(SpecError::Schema(_))));
        let bad_dim = r#"{"name":"x","field":{"kind":"Q"},"dim":2,"basis":["1"],"unit":["1"],"kind":"associative","table":[[["1"]]]}"#;
        assert!(matches!(spec_from_str(bad_dim), Err(SpecError::Schema(_))));
        let not_prime = r#"{"name":"x","field":{"kind":"Fp","p":4},"dim":1,"basis":["1"],"unit":["1"],"kind":"associative","table":[[["1"]]]}"#;
        assert!(matches!(spec_from_str(not_prime), Err(SpecError::Schema(_))));
    }

    #[test]
    fn expression_errors_are_located() {
        let text = r#"{"name":"x","field":{"kind":"Q"},"dim":1,"basis":["1"],"unit":["1"],"kind":"associative","table":[[["1 +"]]]}"#;
        match spec_from_str(text) {
            Err(SpecError::Expr { location, column, .. }) => {
                assert_eq!(location, "table[0][0][0]");
                assert_eq!(column, 4);
            }
            other => panic!("{other:?}"),
        }
    }
}
