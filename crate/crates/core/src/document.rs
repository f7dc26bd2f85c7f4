//! JSON matrix documents.
//!
//! ```json
//! {"field": "Qi", "name": "A", "rows": [["19-4i", "0"], ["1/2", "i"]]}
//! {"field": "Fp", "p": 5, "rows": [["1", "4"], ["0", "2"]]}
//! ```
//!
//! Entries are always strings so Q(i) values survive exactly. Written
//! documents use canonical entry formatting and parse back to the same matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rows: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn field_tag(&self) -> Result<FieldTag> {
        FieldTag::from_descriptor(&self.field, self.p)
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let field = self.field_tag()?;
        if let Some(width) = self.rows.first().map(Vec::len) {
            if let Some(bad) = self.rows.iter().position(|r| r.len() != width) {
                return Err(Error::Document(format!(
                    "row {} has {} entries, expected {width}",
                    bad + 1,
                    self.rows[bad].len()
                )));
            }
        }
        Matrix::parse_rows(field, &self.rows)
    }

    pub fn from_matrix(m: &Matrix, name: Option<&str>) -> Self {
        let (field, p) = m.field().descriptor();
        MatrixDocument {
            field: field.to_string(),
            p,
            name: name.map(str::to_string),
            rows: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

/// Parses a document and returns its matrix.
pub fn parse_matrix_json(text: &str) -> Result<Matrix> {
    MatrixDocument::from_json(text)?.to_matrix()
}
