//! Alternating cochains with values in the adjoint module, stored densely over
//! basis pairs (and sparsely over triples for 3-cochains).

use std::collections::{BTreeMap, BTreeSet};

use crate::exactlin::{is_zero, Fp};
use crate::liecore::LieAlgebra;

/// Index of the basis pair `i < j` among all pairs of `0..n`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A linear map `L → L`, column `i` being `φ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    field: Fp,
    values: Vec<Vec<u32>>,
}

impl Cochain1 {
    pub fn zero(field: Fp, n: usize) -> Self {
        Cochain1 {
            field,
            values: vec![vec![0; n]; n],
        }
    }

    pub fn from_values(field: Fp, values: Vec<Vec<u32>>) -> Self {
        Cochain1 { field, values }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, i: usize) -> &[u32] {
        &self.values[i]
    }

    pub fn eval(&self, x: &[u32]) -> Vec<u32> {
        let n = self.dim();
        let mut out = vec![0; n];
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                self.field.axpy(&mut out, c, &self.values[i]);
            }
        }
        out
    }

    /// Set of `deg k − deg i` over nonzero entries `φ(e_i)_k`.
    pub fn weights(&self, degrees: &[i64]) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for (i, v) in self.values.iter().enumerate() {
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    out.insert(degrees[k] - degrees[i]);
                }
            }
        }
        out
    }
}

/// An alternating bilinear map `L × L → L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    field: Fp,
    n: usize,
    values: Vec<Vec<u32>>,
}

impl Cochain2 {
    pub fn zero(field: Fp, n: usize) -> Self {
        Cochain2 {
            field,
            n,
            values: vec![vec![0; n]; pair_count(n)],
        }
    }

    /// The bracket of `l` viewed as a 2-cochain.
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let mut c = Cochain2::zero(l.field(), n);
        for (i, j, k, v) in l.structure_constants() {
            c.values[pair_index(n, i, j)][k] = v;
        }
        c
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero(v))
    }

    /// `ψ(e_i, e_j)`
    pub fn basis_value(&self, i: usize, j: usize) -> Vec<u32> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.values[pair_index(self.n, i, j)].clone(),
            Equal => vec![0; self.n],
            Greater => self.values[pair_index(self.n, j, i)]
                .iter()
                .map(|&c| self.field.neg(c))
                .collect(),
        }
    }

    /// Sets `ψ(e_i, e_j)` for `i < j` (and hence `ψ(e_j, e_i)`).
    pub fn set(&mut self, i: usize, j: usize, v: Vec<u32>) {
        assert!(i < j, "set expects i < j");
        self.values[pair_index(self.n, i, j)] = v;
    }

    pub fn value_mut(&mut self, i: usize, j: usize) -> &mut Vec<u32> {
        assert!(i < j, "value_mut expects i < j");
        &mut self.values[pair_index(self.n, i, j)]
    }

    pub fn eval(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.n];
        for i in 0..self.n {
            if x[i] == 0 && y[i] == 0 {
                continue;
            }
            for j in i + 1..self.n {
                // x_i y_j − x_j y_i
                let c = f.sub(f.mul(x[i], y[j]), f.mul(x[j], y[i]));
                if c != 0 {
                    f.axpy(&mut out, c, &self.values[pair_index(self.n, i, j)]);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.field.add_vec(a, b))
            .collect();
        Cochain2 {
            field: self.field,
            n: self.n,
            values,
        }
    }

    pub fn scaled(&self, a: u32) -> Cochain2 {
        let mut out = self.clone();
        for v in &mut out.values {
            self.field.scale(v, a);
        }
        out
    }

    /// Set of `deg k − deg i − deg j` over nonzero entries `ψ(e_i, e_j)_k`.
    pub fn weights(&self, degrees: &[i64]) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for (k, &c) in self.values[pair_index(self.n, i, j)].iter().enumerate() {
                    if c != 0 {
                        out.insert(degrees[k] - degrees[i] - degrees[j]);
                    }
                }
            }
        }
        out
    }

    /// The single graded weight, if the cochain is nonzero and homogeneous.
    pub fn weight(&self, degrees: &[i64]) -> Option<i64> {
        let w = self.weights(degrees);
        (w.len() == 1).then(|| *w.iter().next().unwrap())
    }

    /// The part of weight `s`: entries with `deg k = deg i + deg j + s`.
    pub fn component(&self, degrees: &[i64], s: i64) -> Cochain2 {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = &mut out.values[pair_index(self.n, i, j)];
                for (k, c) in v.iter_mut().enumerate() {
                    if degrees[k] - degrees[i] - degrees[j] != s {
                        *c = 0;
                    }
                }
            }
        }
        out
    }

    /// The nonzero entries as `(i, j, k, c)` with `i < j`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for (k, &c) in self.values[pair_index(self.n, i, j)].iter().enumerate() {
                    if c != 0 {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }
}

/// An alternating trilinear map, stored by its nonzero values on basis
/// triples `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3 {
    field: Fp,
    n: usize,
    values: BTreeMap<(usize, usize, usize), Vec<u32>>,
}

impl Cochain3 {
    pub fn zero(field: Fp, n: usize) -> Self {
        Cochain3 {
            field,
            n,
            values: BTreeMap::new(),
        }
    }

    /// Builds the table from its values on basis triples.
    pub fn from_fn<F>(field: Fp, n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize, usize) -> Vec<u32>,
    {
        let mut values = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let v = f(i, j, k);
                    if !is_zero(&v) {
                        values.insert((i, j, k), v);
                    }
                }
            }
        }
        Cochain3 { field, n, values }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of basis triples with a nonzero value.
    pub fn support_size(&self) -> usize {
        self.values.len()
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, usize)> {
        self.values.keys().next().copied()
    }

    pub fn basis_value(&self, i: usize, j: usize, k: usize) -> Vec<u32> {
        let mut idx = [i, j, k];
        if i == j || j == k || i == k {
            return vec![0; self.n];
        }
        // sort, tracking the sign of the permutation
        let mut odd = false;
        for a in 0..3 {
            for b in 0..2 - a {
                if idx[b] > idx[b + 1] {
                    idx.swap(b, b + 1);
                    odd = !odd;
                }
            }
        }
        match self.values.get(&(idx[0], idx[1], idx[2])) {
            None => vec![0; self.n],
            Some(v) if odd => v.iter().map(|&c| self.field.neg(c)).collect(),
            Some(v) => v.clone(),
        }
    }

    pub fn eval(&self, x: &[u32], y: &[u32], z: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.n];
        for (&(i, j, k), v) in &self.values {
            // determinant of the 3×3 minor on rows i, j, k
            let m = |a: usize, b: usize, c: usize| f.mul(f.mul(x[a], y[b]), z[c]);
            let pos = f.add(f.add(m(i, j, k), m(j, k, i)), m(k, i, j));
            let neg = f.add(f.add(m(i, k, j), m(j, i, k)), m(k, j, i));
            let c = f.sub(pos, neg);
            if c != 0 {
                f.axpy(&mut out, c, v);
            }
        }
        out
    }

    pub fn add(&self, other: &Cochain3) -> Cochain3 {
        let mut values = self.values.clone();
        for (key, v) in &other.values {
            let e = values.entry(*key).or_insert_with(|| vec![0; self.n]);
            *e = self.field.add_vec(e, v);
            if is_zero(e) {
                values.remove(key);
            }
        }
        Cochain3 {
            field: self.field,
            n: self.n,
            values,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_a_bijection() {
        let n = 7;
        let mut seen = vec![false; pair_count(n)];
        for i in 0..n {
            for j in i + 1..n {
                let k = pair_index(n, i, j);
                assert!(!seen[k]);
                seen[k] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn alternating_access() {
        let f = Fp::new(5).unwrap();
        let mut c = Cochain2::zero(f, 3);
        c.set(0, 2, vec![1, 2, 3]);
        assert_eq!(c.basis_value(2, 0), vec![4, 3, 2]);
        assert_eq!(c.basis_value(1, 1), vec![0, 0, 0]);
        let x = vec![1, 0, 0];
        let z = vec![0, 0, 1];
        assert_eq!(c.eval(&x, &z), vec![1, 2, 3]);
        assert_eq!(c.eval(&z, &x), vec![4, 3, 2]);
    }

    #[test]
    fn cochain3_sign() {
        let f = Fp::new(7).unwrap();
        let c = Cochain3::from_fn(f, 3, |_, _, _| vec![1, 0, 0]);
        assert_eq!(c.basis_value(1, 0, 2), vec![6, 0, 0]);
        assert_eq!(c.basis_value(2, 0, 1), vec![1, 0, 0]);
        let e = |i| crate::exactlin::unit_vector(3, i);
        assert_eq!(c.eval(&e(1), &e(0), &e(2)), vec![6, 0, 0]);
    }
}
