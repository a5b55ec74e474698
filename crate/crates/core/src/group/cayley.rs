use super::{FiniteGroup, MAX_ORDER};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// JSON form of a Cayley table: `{"order": n, "table": [[..]], "names": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTableDocument {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl CayleyTableDocument {
    pub fn from_json(text: &str) -> Result<CayleyTableDocument> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Validates the table; the identity is moved to index 0 and the applied
    /// permutation (`perm[old] = new`) is returned alongside.
    pub fn into_group(self, label: &str) -> Result<(FiniteGroup, Vec<usize>)> {
        let n = self.order;
        if n > MAX_ORDER {
            return Err(Error::SizeCap { what: "cayley document", order: n, cap: MAX_ORDER });
        }
        if self.table.len() != n {
            return Err(Error::Malformed(format!("order {n} but {} rows", self.table.len())));
        }
        if let Some(i) = self.table.iter().position(|r| r.len() != n) {
            return Err(Error::Malformed(format!("row {i} has {} entries", self.table[i].len())));
        }
        let flat: Vec<usize> = self.table.into_iter().flatten().collect();
        FiniteGroup::from_table(label, n, &flat, self.names)
    }

    pub fn load(path: &Path) -> Result<(FiniteGroup, Vec<usize>)> {
        let text = std::fs::read_to_string(path)?;
        let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "file".into());
        CayleyTableDocument::from_json(&text)?.into_group(&label)
    }
}

impl FiniteGroup {
    pub fn to_document(&self) -> CayleyTableDocument {
        CayleyTableDocument { order: self.order(), table: self.table_rows(), names: Some(self.names().to_vec()) }
    }

    pub fn from_cayley_file(path: &Path) -> Result<FiniteGroup> {
        CayleyTableDocument::load(path).map(|(g, _)| g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generalized_quaternion;

    #[test]
    fn two_element_table() {
        let doc = CayleyTableDocument::from_json(r#"{"order":2,"table":[[0,1],[1,0]]}"#).unwrap();
        let (g, perm) = doc.into_group("c2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(perm, vec![0, 1]);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn quaternion_round_trip() {
        let q = generalized_quaternion(8).unwrap();
        let doc = CayleyTableDocument::from_json(&q.to_document().to_json()).unwrap();
        let (back, perm) = doc.into_group("Q8").unwrap();
        assert_eq!(perm, (0..8).collect::<Vec<_>>());
        assert_eq!(back, q);
    }

    #[test]
    fn non_associative_loop_is_named() {
        // The smallest non-associative loop: latin, with identity and inverses.
        let doc = CayleyTableDocument {
            order: 5,
            table: vec![
                vec![0, 1, 2, 3, 4],
                vec![1, 0, 3, 4, 2],
                vec![2, 4, 0, 1, 3],
                vec![3, 2, 4, 0, 1],
                vec![4, 3, 1, 2, 0],
            ],
            names: None,
        };
        let err = doc.into_group("loop").unwrap_err();
        let Error::NotAssociative(i, j, k) = err else {
            panic!("expected associativity failure, got {err:?}");
        };
        let t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        assert_ne!(t[t[i][j]][k], t[i][t[j][k]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        let doc = CayleyTableDocument { order: 2, table: vec![vec![0, 1], vec![1]], names: None };
        assert!(matches!(doc.into_group("x"), Err(Error::Malformed(_))));
    }
}
