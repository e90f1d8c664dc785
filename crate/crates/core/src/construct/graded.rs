//! Lie algebras with a homogeneous basis and an integer grading.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::liecore::LieAlgebra;

/// A Lie algebra whose basis vectors each carry a degree, with
/// `[G_i, G_j] ⊆ G_{i+j}` validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    algebra: LieAlgebra,
    degrees: Vec<i64>,
}

impl GradedAlgebra {
    pub fn new(algebra: LieAlgebra, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: degrees.len(),
            });
        }
        for (i, j, k, _) in algebra.structure_constants() {
            if degrees[k] != degrees[i] + degrees[j] {
                return Err(Error::GradingViolation(i, j, degrees[i] + degrees[j]));
            }
        }
        Ok(GradedAlgebra { algebra, degrees })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> LieAlgebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn basis_of_degree(&self, d: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// `G_d` as a subspace (zero when `d` is unoccupied).
    pub fn component(&self, d: i64) -> Subspace {
        Subspace::coordinate(self.algebra.field(), self.dim(), self.basis_of_degree(d))
    }

    /// Occupied degrees in increasing order.
    pub fn occupied_degrees(&self) -> Vec<i64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `degree → dim G_degree` over occupied degrees.
    pub fn component_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    /// Sum of the components of degree `≥ d`.
    pub fn degree_at_least(&self, d: i64) -> Subspace {
        Subspace::coordinate(
            self.algebra.field(),
            self.dim(),
            (0..self.dim()).filter(|&i| self.degrees[i] >= d),
        )
    }

    /// Whether `u` is spanned by its homogeneous components.
    pub fn is_homogeneous(&self, u: &Subspace) -> bool {
        let total: usize = self
            .occupied_degrees()
            .into_iter()
            .map(|d| u.intersect(&self.component(d)).expect("same ambient").dim())
            .sum();
        total == u.dim()
    }

    /// Exhaustive `[G_i, G_j] ⊆ G_{i+j}` check on component bases.
    pub fn grading_holds(&self) -> bool {
        let degs = self.occupied_degrees();
        let n = self.dim();
        degs.iter().all(|&a| {
            degs.iter().all(|&b| {
                let target = self.component(a + b);
                self.basis_of_degree(a).iter().all(|&i| {
                    self.basis_of_degree(b).iter().all(|&j| {
                        let v = self.algebra.bracket(
                            &crate::exactlin::unit_vector(n, i),
                            &crate::exactlin::unit_vector(n, j),
                        );
                        crate::exactlin::is_zero(&v) || target.contains_vector(&v)
                    })
                })
            })
        })
    }
}
