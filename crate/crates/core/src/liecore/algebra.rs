//! Lie algebras given by structure constants.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{Fp, Matrix, Subspace};

/// Sparse vector as `(basis index, coefficient)` pairs.
pub type SparseVec = Vec<(usize, u32)>;

/// Finite-dimensional Lie algebra over GF(p).
///
/// Only products `[e_i, e_j]` with `i < j` are stored; `[e_i, e_i] = 0` and
/// antisymmetry are built in.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Fp,
    dim: usize,
    sc: Vec<SparseVec>,
    labels: Vec<String>,
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Outcome of [`LieAlgebra::validate_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub triples_checked: usize,
    pub violations: Vec<(usize, usize, usize)>,
}

impl StructureReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LieAlgebra {
    /// Algebra with all brackets zero.
    pub fn abelian(field: Fp, dim: usize) -> Self {
        LieAlgebra {
            field,
            dim,
            sc: vec![Vec::new(); dim * dim.saturating_sub(1) / 2],
            labels: (0..dim).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Fills the table from a function returning `[e_i, e_j]` for `i < j`.
    pub fn from_bracket_fn<F>(field: Fp, dim: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<u32>,
    {
        let mut alg = LieAlgebra::abelian(field, dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "bracket vector has wrong length");
                alg.sc[pair_index(dim, i, j)] = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c % field.p() != 0)
                    .map(|(k, &c)| (k, c % field.p()))
                    .collect();
            }
        }
        alg
    }

    /// Sets `[e_i, e_j]`; the pair may be given in either order.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[(usize, i64)]) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::Invalid(format!(
                "basis index out of range: ({i}, {j})"
            )));
        }
        if i == j {
            if value.iter().any(|&(_, c)| self.field.reduce(c) != 0) {
                return Err(Error::Invalid(format!("[e{i}, e{i}] must vanish")));
            }
            return Ok(());
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let mut dense = vec![0u32; self.dim];
        for &(k, c) in value {
            if k >= self.dim {
                return Err(Error::Invalid(format!("basis index {k} out of range")));
            }
            dense[k] = self.field.add(dense[k], self.field.reduce(sign * c));
        }
        self.sc[pair_index(self.dim, a, b)] = dense
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "label count mismatch");
        self.labels = labels;
        self
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Stored structure constants `(i, j, k, c)` with `i < j`, in canonical order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for &(k, c) in &self.sc[pair_index(self.dim, i, j)] {
                    out.push((i, j, k, c));
                }
            }
        }
        out
    }

    /// `[e_i, e_j]` as a sparse vector (allocates only for `i > j`).
    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.sc[pair_index(self.dim, i, j)].clone(),
            Greater => self.sc[pair_index(self.dim, j, i)]
                .iter()
                .map(|&(k, c)| (k, self.field.neg(c)))
                .collect(),
        }
    }

    /// Adds `a [e_i, e_j]` into `dst`.
    #[inline]
    fn add_basis_bracket(&self, dst: &mut [u32], a: u32, i: usize, j: usize) {
        let f = self.field;
        use std::cmp::Ordering::*;
        let (entries, a) = match i.cmp(&j) {
            Equal => return,
            Less => (&self.sc[pair_index(self.dim, i, j)], a),
            Greater => (&self.sc[pair_index(self.dim, j, i)], f.neg(a)),
        };
        for &(k, c) in entries {
            dst[k] = f.add(dst[k], f.mul(a, c));
        }
    }

    pub fn bracket(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.dim, "vector length mismatch");
        assert_eq!(y.len(), self.dim, "vector length mismatch");
        let f = self.field;
        let mut out = vec![0; self.dim];
        let ys: Vec<(usize, u32)> = y
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for &(j, yj) in &ys {
                self.add_basis_bracket(&mut out, f.mul(xi, yj), i, j);
            }
        }
        out
    }

    /// `[e_i, y]`
    pub fn bracket_basis_left(&self, i: usize, y: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for (j, &yj) in y.iter().enumerate() {
            if yj != 0 {
                self.add_basis_bracket(&mut out, yj, i, j);
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`; column j is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| {
                let mut out = vec![0; self.dim];
                for (i, &xi) in x.iter().enumerate() {
                    if xi != 0 {
                        self.add_basis_bracket(&mut out, xi, i, j);
                    }
                }
                out
            })
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `ad x` is nilpotent iff `(ad x)^dim = 0`.
    pub fn is_ad_nilpotent(&self, x: &[u32]) -> bool {
        self.ad_matrix(x)
            .pow(self.dim as u64)
            .expect("square")
            .is_zero()
    }

    fn jacobiator_basis(&self, i: usize, j: usize, k: usize) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.dim];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let mut ab = vec![0; self.dim];
            self.add_basis_bracket(&mut ab, 1, a, b);
            // [[a,b],c] = -[c,[a,b]]
            let t = self.bracket_basis_left(c, &ab);
            for (o, v) in out.iter_mut().zip(t) {
                *o = f.sub(*o, v);
            }
        }
        out
    }

    /// Checks `[x, x] = 0` (structural) and Jacobi on every basis triple.
    pub fn validate_structure(&self) -> StructureReport {
        let mut violations = Vec::new();
        let mut checked = 0;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    checked += 1;
                    if self.jacobiator_basis(i, j, k).iter().any(|&x| x != 0) {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        StructureReport {
            triples_checked: checked,
            violations,
        }
    }

    /// Errors with the first violating triple, if any.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate_structure().violations.first() {
            Some(&(i, j, k)) => Err(Error::JacobiViolation(i, j, k)),
            None => Ok(()),
        }
    }

    /// Jacobi identity on random vector triples.
    pub fn jacobi_holds_on_random<R: Rng + ?Sized>(&self, trials: usize, rng: &mut R) -> bool {
        let f = self.field;
        (0..trials).all(|_| {
            let x = f.random_vector(self.dim, rng);
            let y = f.random_vector(self.dim, rng);
            let z = f.random_vector(self.dim, rng);
            let a = self.bracket(&self.bracket(&x, &y), &z);
            let b = self.bracket(&self.bracket(&y, &z), &x);
            let c = self.bracket(&self.bracket(&z, &x), &y);
            f.add_vec(&f.add_vec(&a, &b), &c).iter().all(|&v| v == 0)
        })
    }

    /// Span of all `[u, v]` over basis pairs.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let ub = u.basis_vectors();
        let vb = v.basis_vectors();
        let mut prods = Vec::with_capacity(ub.len() * vb.len());
        for a in &ub {
            for b in &vb {
                let c = self.bracket(a, b);
                if c.iter().any(|&x| x != 0) {
                    prods.push(c);
                }
            }
        }
        Subspace::span(self.field, self.dim, &prods)
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        let ub = u.basis_vectors();
        for (a, x) in ub.iter().enumerate() {
            for y in &ub[a + 1..] {
                if !u.contains_vector(&self.bracket(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_ideal(&self, u: &Subspace) -> bool {
        u.basis()
            .all(|x| (0..self.dim).all(|i| u.contains_vector(&self.bracket_basis_left(i, x))))
    }

    /// Smallest bracket-closed subspace containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let next = cur
                .sum(&self.product_space(&cur, &cur))
                .expect("same ambient");
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// Structure constants of a subalgebra in its own RREF basis.
    pub fn restrict(&self, u: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(u) {
            return Err(Error::NotClosed);
        }
        let basis = u.basis_vectors();
        let d = basis.len();
        let alg = LieAlgebra::from_bracket_fn(self.field, d, |i, j| {
            u.coordinates(&self.bracket(&basis[i], &basis[j]))
                .expect("closed")
        });
        Ok(alg.with_labels((0..d).map(|i| format!("u{i}")).collect()))
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebra(dim {} over {})", self.dim, self.field)?;
        for (i, j, k, c) in self.structure_constants() {
            writeln!(
                f,
                "  [{}, {}] += {}·{}",
                self.labels[i],
                self.labels[j],
                self.field.signed(c),
                self.labels[k]
            )?;
        }
        Ok(())
    }
}
