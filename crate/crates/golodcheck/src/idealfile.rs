//! The JSON input format describing a selection of minors.
//!
//! ```json
//! {"matrix": {"rows": 2, "cols": 3}, "t": 2,
//!  "minors": [{"rows": [1, 2], "cols": [1, 2]}], "field": "fp:32003"}
//! ```

use std::path::Path;

use anyhow::{anyhow, bail, Context};
use golodcheck_core::{Minor, MinorSelection};
use serde::{Deserialize, Serialize};

use crate::FieldChoice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSize {
    pub rows: usize,
    pub cols: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinorEntry {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub matrix: MatrixSize,
    pub t: usize,
    pub minors: Vec<MinorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
}

impl IdealFile {
    pub fn from_selection(sel: &MinorSelection, field: Option<FieldChoice>) -> Self {
        IdealFile {
            matrix: MatrixSize { rows: sel.m, cols: sel.n },
            t: sel.t,
            minors: sel.minors().iter().map(|m| MinorEntry { rows: m.rows.clone(), cols: m.cols.clone() }).collect(),
            field: field.map(|f| f.tag().to_string()),
        }
    }

    pub fn parse(text: &str) -> anyhow::Result<Self> {
        serde_json::from_str(text).map_err(|e| anyhow!("malformed ideal file: {e}"))
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        Self::parse(&text)
    }

    pub fn field(&self) -> anyhow::Result<Option<FieldChoice>> {
        match &self.field {
            None => Ok(None),
            Some(s) => s.parse().map(Some).map_err(|e| anyhow!("field: {e}")),
        }
    }

    /// Validates sizes and indices and builds the selection.
    pub fn selection(&self) -> anyhow::Result<MinorSelection> {
        let (m, n) = (self.matrix.rows, self.matrix.cols);
        if m == 0 || n == 0 {
            bail!("matrix: rows and cols must be positive");
        }
        if m * n > 31 {
            bail!("matrix: {m}x{n} has more than 31 entries");
        }
        if self.t == 0 || self.t > m.min(n) {
            bail!("t: {} is not between 1 and {}", self.t, m.min(n));
        }
        let minors = self.minors.iter().map(|e| Minor::new(e.rows.clone(), e.cols.clone())).collect();
        MinorSelection::new(m, n, self.t, minors).map_err(|e| anyhow!("minors: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let f = IdealFile::parse(r#"{"matrix":{"rows":2,"cols":3},"t":2,"minors":[{"rows":[1,2],"cols":[1,3]}],"field":"qq"}"#).unwrap();
        assert_eq!(f.field().unwrap(), Some(FieldChoice::Qq));
        let sel = f.selection().unwrap();
        assert_eq!(sel.len(), 1);
        assert_eq!(IdealFile::from_selection(&sel, Some(FieldChoice::Qq)), f);
    }

    #[test]
    fn errors_name_the_field() {
        let dup = r#"{"matrix":{"rows":2,"cols":3},"t":2,"minors":[{"rows":[1,2],"cols":[1,3]},{"rows":[1,2],"cols":[1,3]}]}"#;
        let e = IdealFile::parse(dup).unwrap().selection().unwrap_err().to_string();
        assert!(e.contains("duplicate minor at index 1"), "{e}");
        let bad = r#"{"matrix":{"rows":2,"cols":3},"t":2,"minors":[{"rows":[2,1],"cols":[1,3]}]}"#;
        assert!(IdealFile::parse(bad).unwrap().selection().is_err());
        let unknown = r#"{"matrix":{"rows":2,"cols":3},"t":2,"minor":[]}"#;
        assert!(IdealFile::parse(unknown).unwrap_err().to_string().contains("minor"));
    }
}
