//! Subspaces of F_p^n in canonical (RREF) form.

use std::cmp::Ordering;
use std::fmt;

use super::field::Fp;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace stored by its reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their RREF bases coincide, so the
/// derived `Eq` and `Hash` are equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Fp, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Fp, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<V: AsRef<[u32]>>(field: Fp, ambient: usize, vectors: &[V]) -> Self {
        let rows: Vec<Vec<u32>> = vectors.iter().map(|v| v.as_ref().to_vec()).collect();
        Self::from_matrix(&Matrix::from_rows(field, ambient, &rows))
    }

    /// Span of standard basis vectors.
    pub fn coordinate(field: Fp, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let mut m = Matrix::zeros(field, idx.len(), ambient);
        for (r, &c) in idx.iter().enumerate() {
            m.set(r, c, 1);
        }
        Subspace {
            basis: m,
            pivots: idx,
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let r = m.rref();
        Subspace {
            basis: r.matrix,
            pivots: r.pivots,
        }
    }

    /// Wraps a matrix already known to be in RREF with no zero rows.
    pub(crate) fn from_rref_unchecked(basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        Subspace { basis, pivots }
    }

    pub fn field(&self) -> Fp {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vectors()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().p(), other.field().p()));
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: other.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis, clearing every pivot coordinate.
    /// The result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let a = out[c];
            if a != 0 {
                f.axpy(&mut out, f.neg(a), self.basis.row(r));
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient_dim(), "vector length mismatch");
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        let f = self.field();
        let mut rebuilt = vec![0; self.ambient_dim()];
        for (r, &a) in coords.iter().enumerate() {
            f.axpy(&mut rebuilt, a, self.basis.row(r));
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn combination(&self, coords: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0; self.ambient_dim()];
        for (r, &a) in coords.iter().enumerate() {
            f.axpy(&mut out, a, self.basis.row(r));
        }
        out
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.dim() <= self.dim() && other.basis().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn with_vectors<V: AsRef<[u32]>>(&self, vectors: &[V]) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.extend(vectors.iter().map(|v| v.as_ref().to_vec()));
        Subspace::span(self.field(), self.ambient_dim(), &rows)
    }

    /// Intersection via the kernel of the joint system `a U = b V`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field(), self.ambient_dim()));
        }
        let f = self.field();
        let stacked = self.basis.vstack(&other.basis).transpose();
        let vecs: Vec<Vec<u32>> = stacked
            .kernel()
            .into_iter()
            .map(|c| self.combination(&c[..self.dim()]))
            .collect();
        Ok(Subspace::span(f, self.ambient_dim(), &vecs))
    }

    /// Standard basis vectors completing the RREF basis to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Linear functionals vanishing on the subspace, as row vectors.
    pub fn annihilator(&self) -> Vec<Vec<u32>> {
        if self.is_zero() {
            return Matrix::identity(self.field(), self.ambient_dim()).row_vectors();
        }
        self.basis.kernel()
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let imgs: Vec<Vec<u32>> = self.basis().map(|v| map.apply(v)).collect();
        Subspace::span(self.field(), map.rows(), &imgs)
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: dimension, then pivot pattern, then entries.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient_dim(), self.dim(), &self.pivots)
            .cmp(&(other.ambient_dim(), other.dim(), &other.pivots))
            .then_with(|| {
                let a: Vec<&[u32]> = self.basis().collect();
                let b: Vec<&[u32]> = other.basis().collect();
                a.cmp(&b)
            })
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}^{}: {:?})",
            self.dim(),
            self.field(),
            self.ambient_dim(),
            self.basis_vectors()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Vec<u32> {
        crate::exactlin::unit_vector(n, i)
    }

    #[test]
    fn lattice_examples() {
        let f5 = Fp::new(5).unwrap();
        let u = Subspace::span(f5, 3, &[e(3, 0)]);
        let v = Subspace::span(f5, 3, &[e(3, 1)]);
        assert_eq!(
            u.sum(&v).unwrap(),
            Subspace::span(f5, 3, &[e(3, 0), e(3, 1)])
        );
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert!(u.intersect(&v).unwrap().is_zero());

        let diag = Subspace::span(f5, 3, &[vec![1, 1, 0]]);
        let plane = Subspace::span(f5, 3, &[e(3, 0), e(3, 1)]);
        assert!(plane.contains(&diag).unwrap());
        assert!(!diag.contains(&plane).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f5 = Fp::new(5).unwrap();
        let u = Subspace::zero(f5, 3);
        let v = Subspace::zero(f5, 4);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
        let w = Subspace::zero(Fp::new(7).unwrap(), 3);
        assert!(matches!(u.contains(&w), Err(Error::FieldMismatch(5, 7))));
    }

    #[test]
    fn coordinates_round_trip() {
        let f7 = Fp::new(7).unwrap();
        let s = Subspace::span(f7, 4, &[vec![1, 2, 0, 3], vec![0, 1, 1, 1]]);
        let v = f7.add_vec(&[2, 4, 0, 6], &[0, 3, 3, 3]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combination(&c), v);
        assert!(s.coordinates(&[0, 0, 0, 1]).is_none());
    }

    #[test]
    fn annihilator_vanishes() {
        let f3 = Fp::new(3).unwrap();
        let s = Subspace::span(f3, 4, &[vec![1, 2, 0, 1]]);
        let ann = s.annihilator();
        assert_eq!(ann.len(), 3);
        for a in &ann {
            assert_eq!(f3.dot(a, s.basis_matrix().row(0)), 0);
        }
    }
}
