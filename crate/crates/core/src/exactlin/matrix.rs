//! Dense matrices over GF(p), row-major, with reduced row-echelon form.

use std::fmt;

use super::field::Fp;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod p.
    pub fn from_i64(field: Fp, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix with the given rows. Entries must already be reduced.
    pub fn from_rows(field: Fp, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Fp, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x % field.p();
            }
        }
        m
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    f.axpy(dst, a, other.row(k));
                }
            }
        }
        Ok(out)
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.field.dot(self.row(i), v))
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: f.add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: f.sub_vec(&self.data, &other.data),
        }
    }

    pub fn scaled(&self, a: u32) -> Matrix {
        let mut m = self.clone();
        self.field.scale(&mut m.data, a);
        m
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        Ok(self.mul(other)?.sub(&other.mul(self)?))
    }

    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Unique reduced row-echelon form; zero rows are dropped.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut d = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| d[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    d.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(d[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                d[r * cols + j] = f.mul(d[r * cols + j], inv);
            }
            let (before, rest) = d.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let a = other[c];
                if a != 0 {
                    let na = f.neg(a);
                    for j in c..cols {
                        if pivot_row[j] != 0 {
                            other[j] = f.add(other[j], f.mul(na, pivot_row[j]));
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        d.truncate(r * cols);
        Rref {
            matrix: Matrix {
                field: f,
                rows: r,
                cols,
                data: d,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// A solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i * (self.cols + 1) + j] = self.get(i, j);
            }
            aug.data[i * (self.cols + 1) + self.cols] = b[i] % self.field.p();
        }
        let rr = aug.rref();
        if rr.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (r, &c) in rr.pivots.iter().enumerate() {
            x[c] = rr.matrix.get(r, self.cols);
        }
        Some(x)
    }

    /// Basis of `{x : M x = 0}`, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let rr = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &rr.pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &pc) in rr.pivots.iter().enumerate() {
                v[pc] = f.neg(rr.matrix.get(r, free));
            }
            out.push(v);
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Kernel of a linear map given by the (sparse) images of basis vectors.
///
/// `images[i]` lists `(coordinate, value)` pairs of the image of the i-th
/// domain basis vector. Returns a basis of coefficient vectors `c` (length
/// `images.len()`) with `sum_i c_i images[i] = 0`. Uses incremental echelon
/// reduction, so it stays cheap when images are sparse.
pub fn sparse_kernel(field: Fp, images: &[Vec<(usize, u32)>]) -> Vec<Vec<u32>> {
    use std::collections::{BTreeMap, HashMap};
    type Sparse = BTreeMap<usize, u32>;
    let f = field;
    let axpy = |dst: &mut Sparse, a: u32, src: &Sparse| {
        for (&k, &v) in src {
            let e = dst.entry(k).or_insert(0);
            *e = f.add(*e, f.mul(a, v));
            if *e == 0 {
                dst.remove(&k);
            }
        }
    };
    // pivot column -> (row normalized to leading 1, combination)
    let mut pivots: HashMap<usize, (Sparse, Sparse)> = HashMap::new();
    let mut kernel = Vec::new();
    let n = images.len();
    for (i, img) in images.iter().enumerate() {
        let mut row: Sparse = BTreeMap::new();
        for &(k, v) in img {
            let v = v % f.p();
            if v != 0 {
                let e = row.entry(k).or_insert(0);
                *e = f.add(*e, v);
                if *e == 0 {
                    row.remove(&k);
                }
            }
        }
        let mut combo: Sparse = BTreeMap::new();
        combo.insert(i, 1);
        // Walk the row's columns in increasing order, clearing known pivots.
        let mut cursor = 0usize;
        loop {
            let next = row.range(cursor..).next().map(|(&k, &v)| (k, v));
            let Some((col, val)) = next else {
                kernel.push(combo);
                break;
            };
            if let Some((prow, pcombo)) = pivots.get(&col) {
                let a = f.neg(val);
                axpy(&mut row, a, prow);
                axpy(&mut combo, a, pcombo);
                cursor = col + 1;
            } else {
                let inv = f.inv(val).expect("nonzero");
                for v in row.values_mut() {
                    *v = f.mul(*v, inv);
                }
                for v in combo.values_mut() {
                    *v = f.mul(*v, inv);
                }
                pivots.insert(col, (row, combo));
                break;
            }
        }
    }
    kernel
        .into_iter()
        .map(|c| {
            let mut v = vec![0; n];
            for (k, x) in c {
                v[k] = x;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f5 = f(5);
        let id = Matrix::identity(f5, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank(), 3);

        let z = Matrix::zeros(f5, 2, 4);
        assert_eq!(z.rref().rank(), 0);
        assert_eq!(z.rref().matrix.rows(), 0);

        let m = Matrix::from_i64(f5, &[vec![2, 4], vec![1, 2]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.matrix.row(0), &[1, 2]);
    }

    #[test]
    fn kernel_is_annihilated() {
        let f7 = f(7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let rows: Vec<Vec<u32>> = (0..4).map(|_| f7.random_vector(6, &mut rng)).collect();
            let m = Matrix::from_rows(f7, 6, &rows);
            let ker = m.kernel();
            assert_eq!(ker.len() + m.rank(), 6);
            for v in &ker {
                assert!(m.apply(v).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let f5 = f(5);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let imgs: Vec<Vec<u32>> = (0..7).map(|_| f5.random_vector(4, &mut rng)).collect();
            let sparse: Vec<Vec<(usize, u32)>> = imgs
                .iter()
                .map(|v| {
                    v.iter()
                        .copied()
                        .enumerate()
                        .filter(|&(_, x)| x != 0)
                        .collect()
                })
                .collect();
            let ker = sparse_kernel(f5, &sparse);
            let dense = Matrix::from_columns(f5, 4, &imgs);
            assert_eq!(ker.len(), dense.kernel().len());
            for c in &ker {
                assert!(dense.apply(c).iter().all(|&x| x == 0));
            }
            let km = Matrix::from_rows(f5, 7, &ker);
            assert_eq!(km.rank(), ker.len());
        }
    }

    #[test]
    fn matrix_power() {
        let f5 = f(5);
        // Nilpotent Jordan block.
        let j = Matrix::from_i64(f5, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
        assert!(!j.pow(2).unwrap().is_zero());
        assert!(j.pow(3).unwrap().is_zero());
        assert_eq!(j.pow(0).unwrap(), Matrix::identity(f5, 3));
    }
}
