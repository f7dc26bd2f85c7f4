//! Worked-example matrices shipped with the crate.
//!
//! The JSON files under `fixtures/` are compiled in. A directory holding
//! files of the same names can replace them, which is how a corrupted or
//! edited fixture gets exercised.

use std::collections::BTreeMap;
use std::path::Path;

use crate::document::MatrixDocument;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

macro_rules! builtin {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name, ".json")))),*]
    };
}

pub const BUILTIN: &[(&str, &str)] = builtin![
    "gauss5-a",
    "gauss5-p",
    "gauss5-p-inv",
    "split2-a",
    "split2-b",
    "split2-b-inv",
    "split2-witness",
    "index2-a",
    "index2-b",
    "index2-p",
    "index2-a-minus",
];

#[derive(Clone, Debug)]
pub struct FixtureSet {
    sources: BTreeMap<String, String>,
}

impl FixtureSet {
    pub fn builtin() -> Self {
        FixtureSet {
            sources: BUILTIN
                .iter()
                .map(|(n, s)| (n.to_string(), s.to_string()))
                .collect(),
        }
    }

    /// Reads `<name>.json` from `dir` for every built-in fixture name.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut sources = BTreeMap::new();
        for (name, _) in BUILTIN {
            let path = dir.join(format!("{name}.json"));
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Document(format!("fixture {name}: {}: {e}", path.display())))?;
            sources.insert(name.to_string(), text);
        }
        Ok(FixtureSet { sources })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.sources.keys().map(String::as_str)
    }

    pub fn matrix(&self, name: &str) -> Result<Matrix> {
        let text = self
            .sources
            .get(name)
            .ok_or_else(|| Error::Document(format!("no fixture named {name}")))?;
        MatrixDocument::from_json(text)
            .and_then(|d| d.to_matrix())
            .map_err(|e| Error::Document(format!("fixture {name}: {e}")))
    }
}
