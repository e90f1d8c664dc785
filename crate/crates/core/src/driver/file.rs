//! JSON algebra files: `{schema_version, p, dim, labels, sc: [[i, j, k, c]], grading?}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::construct::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::Fp;
use crate::liecore::LieAlgebra;

pub const ALGEBRA_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub p: u32,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `[i, j, k, c]`: `[e_i, e_j]` has coefficient `c` on `e_k`, `i < j`.
    pub sc: Vec<[u64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieAlgebra, grading: Option<&[i64]>) -> Self {
        AlgebraFile {
            schema_version: ALGEBRA_SCHEMA_VERSION,
            p: l.field().p(),
            dim: l.dim(),
            labels: l.labels().to_vec(),
            sc: l
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| [i as u64, j as u64, k as u64, c as u64])
                .collect(),
            grading: grading.map(<[i64]>::to_vec),
        }
    }

    /// Rebuilds the algebra, re-validating the Jacobi identity and grading.
    pub fn to_algebra(&self) -> Result<(LieAlgebra, Option<GradedAlgebra>)> {
        if self.schema_version != ALGEBRA_SCHEMA_VERSION {
            return Err(Error::Format(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        let field = Fp::new(self.p)?;
        let n = self.dim;
        if self.labels.len() != n {
            return Err(Error::Format(format!(
                "{} labels for dimension {n}",
                self.labels.len()
            )));
        }
        let mut l = LieAlgebra::abelian(field, n).with_labels(self.labels.clone());
        let mut rows: std::collections::BTreeMap<(usize, usize), Vec<(usize, i64)>> =
            Default::default();
        for &[i, j, k, c] in &self.sc {
            let (i, j, k) = (i as usize, j as usize, k as usize);
            if i >= j || j >= n || k >= n {
                return Err(Error::Format(format!(
                    "entry [{i}, {j}, {k}, {c}] needs i < j < dim and k < dim"
                )));
            }
            if c >= self.p as u64 {
                return Err(Error::Format(format!(
                    "coefficient {c} is not reduced mod {}",
                    self.p
                )));
            }
            let row = rows.entry((i, j)).or_default();
            if row.iter().any(|&(kk, _)| kk == k) {
                return Err(Error::Format(format!(
                    "duplicate entry for [{i}, {j}] on {k}"
                )));
            }
            row.push((k, c as i64));
        }
        for ((i, j), row) in rows {
            l.set_bracket(i, j, &row)?;
        }
        l.ensure_valid()?;
        let graded = match &self.grading {
            Some(d) => Some(GradedAlgebra::new(l.clone(), d.clone())?),
            None => None,
        };
        Ok((l, graded))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn save_algebra(path: &Path, l: &LieAlgebra, grading: Option<&[i64]>) -> Result<()> {
    let mut text = AlgebraFile::from_algebra(l, grading).to_json()?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn load_algebra(path: &Path) -> Result<(LieAlgebra, Option<GradedAlgebra>)> {
    AlgebraFile::from_json(&std::fs::read_to_string(path)?)?.to_algebra()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{classical, zassenhaus};

    #[test]
    fn sl2_round_trip() {
        let l = classical::sl2(Fp::new(7).unwrap()).unwrap();
        let file = AlgebraFile::from_algebra(&l, None);
        let back = AlgebraFile::from_json(&file.to_json().unwrap()).unwrap();
        let (l2, g) = back.to_algebra().unwrap();
        assert_eq!(l2.structure_constants(), l.structure_constants());
        assert_eq!(l2.labels(), l.labels());
        assert!(g.is_none());
    }

    #[test]
    fn grading_survives() {
        let z = zassenhaus(Fp::new(5).unwrap(), 1).unwrap();
        let file = AlgebraFile::from_algebra(z.algebra(), Some(z.degrees()));
        let (_, g) = AlgebraFile::from_json(&file.to_json().unwrap())
            .unwrap()
            .to_algebra()
            .unwrap();
        assert_eq!(g.unwrap(), z);
    }

    #[test]
    fn corrupt_entry_names_the_triple() {
        let l = classical::sl2(Fp::new(7).unwrap()).unwrap();
        let mut file = AlgebraFile::from_algebra(&l, None);
        // [e, h] = −2e becomes [e, h] = e
        for e in &mut file.sc {
            if e[0] == 0 && e[1] == 1 {
                e[3] = 1;
            }
        }
        assert_eq!(
            file.to_algebra().unwrap_err(),
            Error::JacobiViolation(0, 1, 2)
        );
    }

    #[test]
    fn malformed_entries() {
        let mut file =
            AlgebraFile::from_algebra(&LieAlgebra::abelian(Fp::new(3).unwrap(), 2), None);
        file.sc.push([1, 0, 0, 1]);
        assert!(matches!(file.to_algebra(), Err(Error::Format(_))));
        assert!(AlgebraFile::from_json("{\"p\": 3}").is_err());
    }
}
