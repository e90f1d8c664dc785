//! Exhaustive enumeration of the subspace lattice of F_p^n.
//!
//! Subspaces are produced directly in RREF, so every subspace appears exactly
//! once with no deduplication. Order: dimension, then pivot pattern
//! (lexicographic), then free entries (lexicographic, row-major).

use rayon::prelude::*;

use super::field::Fp;
use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Gaussian binomial `[n choose k]_q`, the number of k-dimensional subspaces of F_q^n.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Total number of subspaces of F_q^n (all dimensions).
pub fn subspace_count(n: usize, q: u32) -> u128 {
    (0..=n).map(|k| gaussian_binomial(n, k, q)).sum()
}

/// All k-element pivot patterns of `0..n` in lexicographic order.
pub fn pivot_patterns(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            if n - c < k - cur.len() {
                break;
            }
            cur.push(c);
            go(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Free (row, column) positions of an RREF matrix with the given pivots.
fn free_positions(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..n {
            if !pivots.contains(&c) {
                out.push((r, c));
            }
        }
    }
    out
}

/// Number of subspaces with a given pivot pattern.
pub fn pattern_size(field: Fp, n: usize, pivots: &[usize]) -> u128 {
    (field.p() as u128).pow(free_positions(n, pivots).len() as u32)
}

/// Iterator over the subspaces sharing one pivot pattern.
pub struct PatternIter {
    field: Fp,
    n: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
    done: bool,
}

impl PatternIter {
    pub fn new(field: Fp, n: usize, pivots: Vec<usize>) -> Self {
        let free = free_positions(n, &pivots);
        let counter = vec![0; free.len()];
        PatternIter {
            field,
            n,
            pivots,
            free,
            counter,
            done: false,
        }
    }
}

impl Iterator for PatternIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let mut m = Matrix::zeros(self.field, self.pivots.len(), self.n);
        for (r, &c) in self.pivots.iter().enumerate() {
            m.set(r, c, 1);
        }
        for (&(r, c), &v) in self.free.iter().zip(&self.counter) {
            m.set(r, c, v);
        }
        let out = Subspace::from_rref_unchecked(m, self.pivots.clone());
        // odometer, last free entry fastest
        let p = self.field.p();
        let mut i = self.counter.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counter[i] += 1;
            if self.counter[i] < p {
                break;
            }
            self.counter[i] = 0;
        }
        Some(out)
    }
}

/// Work units for a (possibly filtered) enumeration: one per pivot pattern.
pub fn enumeration_patterns(n: usize, dim_filter: Option<usize>) -> Vec<Vec<usize>> {
    match dim_filter {
        Some(k) => pivot_patterns(n, k),
        None => (0..=n).flat_map(|k| pivot_patterns(n, k)).collect(),
    }
}

/// Number of subspaces an enumeration would produce.
pub fn enumeration_size(field: Fp, n: usize, dim_filter: Option<usize>) -> u128 {
    match dim_filter {
        Some(k) => gaussian_binomial(n, k, field.p()),
        None => subspace_count(n, field.p()),
    }
}

/// Streams every subspace of F_p^n (or only those of dimension `k`).
///
/// Fails before producing anything when the count exceeds `budget`.
pub fn enumerate_subspaces(
    field: Fp,
    n: usize,
    dim_filter: Option<usize>,
    budget: u128,
) -> Result<impl Iterator<Item = Subspace>> {
    if let Some(k) = dim_filter {
        if k > n {
            return Err(Error::Invalid(format!("dimension {k} exceeds ambient {n}")));
        }
    }
    let needed = enumeration_size(field, n, dim_filter);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(enumeration_patterns(n, dim_filter)
        .into_iter()
        .flat_map(move |pat| PatternIter::new(field, n, pat)))
}

/// Runs `keep` on every subspace of F_p^n in parallel (one work unit per pivot
/// pattern) and returns the kept ones in enumeration order, together with the
/// number of subspaces scanned.
pub fn par_filter_subspaces<F>(
    field: Fp,
    n: usize,
    dim_filter: Option<usize>,
    budget: u128,
    keep: F,
) -> Result<(Vec<Subspace>, u128)>
where
    F: Fn(&Subspace) -> bool + Sync,
{
    let needed = enumeration_size(field, n, dim_filter);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let per_pattern: Vec<Vec<Subspace>> = enumeration_patterns(n, dim_filter)
        .into_par_iter()
        .map(|pat| {
            PatternIter::new(field, n, pat)
                .filter(|s| keep(s))
                .collect()
        })
        .collect();
    Ok((per_pattern.into_iter().flatten().collect(), needed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_match_gaussian_binomials() {
        for p in [2u32, 3, 5] {
            let f = Fp::new(p).unwrap();
            for n in 0..=5usize {
                for k in 0..=n {
                    let expected = gaussian_binomial(n, k, p);
                    if expected > 30_000 {
                        continue;
                    }
                    let subs: Vec<Subspace> = enumerate_subspaces(f, n, Some(k), u128::MAX)
                        .unwrap()
                        .collect();
                    assert_eq!(subs.len() as u128, expected, "p={p} n={n} k={k}");
                    let distinct: HashSet<&Subspace> = subs.iter().collect();
                    assert_eq!(distinct.len(), subs.len());
                    for s in &subs {
                        assert_eq!(s.dim(), k);
                        assert_eq!(Subspace::from_matrix(s.basis_matrix()), *s);
                    }
                }
            }
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(gaussian_binomial(3, 1, 5), 31);
        assert_eq!(gaussian_binomial(5, 2, 3), 1210);
        assert_eq!(subspace_count(5, 5), 42_176);
        assert_eq!(subspace_count(5, 3), 2_664);
        assert_eq!(subspace_count(3, 7), 116);
    }

    #[test]
    fn one_dim_count_by_projective_points() {
        // nonzero vectors of F_5^3 up to scale
        let f = Fp::new(5).unwrap();
        let mut lines = HashSet::new();
        for a in 0..5u32 {
            for b in 0..5u32 {
                for c in 0..5u32 {
                    if (a, b, c) != (0, 0, 0) {
                        lines.insert(Subspace::span(f, 3, &[vec![a, b, c]]));
                    }
                }
            }
        }
        assert_eq!(lines.len(), 31);
        let enumerated: HashSet<Subspace> =
            enumerate_subspaces(f, 3, Some(1), 1000).unwrap().collect();
        assert_eq!(enumerated, lines);
    }

    #[test]
    fn zero_dimensional_and_budget() {
        let f = Fp::new(3).unwrap();
        let v: Vec<Subspace> = enumerate_subspaces(f, 2, Some(0), 10).unwrap().collect();
        assert_eq!(v, vec![Subspace::zero(f, 2)]);
        assert!(matches!(
            enumerate_subspaces(f, 5, None, 100),
            Err(Error::BudgetExceeded {
                needed: 2664,
                budget: 100
            })
        ));
    }

    #[test]
    fn pivot_pattern_count_cross_check() {
        // independent count of [5 choose 2]_3 by summing p^(free) over patterns
        let f = Fp::new(3).unwrap();
        let total: u128 = pivot_patterns(5, 2)
            .iter()
            .map(|pat| pattern_size(f, 5, pat))
            .sum();
        assert_eq!(total, 1210);
    }
}
