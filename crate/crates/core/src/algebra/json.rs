use serde::{Deserialize, Serialize};

use super::{residuum_from_mul, AlgebraError, Elem, FiniteResiduatedLattice};

/// On-disk form of a finite algebra.
///
/// `leq` entries are `0`/`1`; `imp` may be omitted and is then derived from
/// `mul`. Emission always writes every table row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub size: usize,
    pub leq: Vec<Vec<u64>>,
    pub mul: Vec<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<Elem>>>,
    pub bot: Elem,
    pub top: Elem,
}

impl AlgebraFile {
    /// Loads the tables without checking the axioms.
    pub fn into_tables(self) -> Result<FiniteResiduatedLattice, AlgebraError> {
        if self.leq.len() != self.size {
            return Err(AlgebraError::Shape {
                table: "leq",
                expected: self.size,
            });
        }
        let mut leq = Vec::with_capacity(self.size);
        for (row, r) in self.leq.iter().enumerate() {
            if r.len() != self.size {
                return Err(AlgebraError::Shape {
                    table: "leq",
                    expected: self.size,
                });
            }
            let mut out = Vec::with_capacity(self.size);
            for (col, &value) in r.iter().enumerate() {
                match value {
                    0 => out.push(false),
                    1 => out.push(true),
                    _ => return Err(AlgebraError::NotBoolean { row, col, value }),
                }
            }
            leq.push(out);
        }
        let imp = match self.imp {
            Some(imp) => imp,
            None => residuum_from_mul(&leq, &self.mul, self.bot, self.top)?,
        };
        FiniteResiduatedLattice::from_tables(leq, self.mul, imp, self.bot, self.top)
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl From<&FiniteResiduatedLattice> for AlgebraFile {
    fn from(a: &FiniteResiduatedLattice) -> Self {
        AlgebraFile {
            size: a.size(),
            leq: a
                .leq_table()
                .into_iter()
                .map(|r| r.into_iter().map(u64::from).collect())
                .collect(),
            mul: a.mul_table(),
            imp: Some(a.imp_table()),
            bot: a.bot(),
            top: a.top(),
        }
    }
}

impl FiniteResiduatedLattice {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&AlgebraFile::from(self)).expect("tables serialise")
    }

    /// Parses the JSON file format, derives a missing residuum, and returns
    /// the tables without validating them.
    pub fn from_json(text: &str) -> Result<Self, JsonLoadError> {
        let file = AlgebraFile::from_json(text)?;
        Ok(file.into_tables()?)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum JsonLoadError {
    #[error("malformed algebra JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn emitted_algebra_reloads_identically() {
        for a in [zoo::mv_chain(3), zoo::a_n_chain(4), zoo::godel_chain(2)] {
            let back = FiniteResiduatedLattice::from_json(&a.to_json()).unwrap();
            assert_eq!(back, a);
            assert!(back.validate_axioms().is_valid());
        }
    }

    #[test]
    fn missing_imp_is_derived() {
        let text = r#"{"size": 3, "leq": [[1,1,1],[0,1,1],[0,0,1]],
                       "mul": [[0,0,0],[0,0,1],[0,1,2]], "bot": 0, "top": 2}"#;
        let a = FiniteResiduatedLattice::from_json(text).unwrap();
        assert_eq!(a, zoo::mv_chain(2));
    }

    #[test]
    fn bad_order_entry_is_structural() {
        let text = r#"{"size": 1, "leq": [[2]], "mul": [[0]], "bot": 0, "top": 0}"#;
        let err = FiniteResiduatedLattice::from_json(text).unwrap_err();
        assert!(matches!(
            err,
            JsonLoadError::Algebra(AlgebraError::NotBoolean { value: 2, .. })
        ));
    }
}
