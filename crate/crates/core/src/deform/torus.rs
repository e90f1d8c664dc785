//! Root-space decompositions with respect to a toral element and the induced
//! weights on 2-cochains.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::construct::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{sparse_kernel, Matrix, Subspace};
use crate::liecore::LieAlgebra;

use super::cochain::{pair_index, Cochain2};

/// Eigenspaces of `ad t`, keyed by eigenvalue in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDecomposition {
    pub spaces: BTreeMap<u32, Subspace>,
}

impl RootDecomposition {
    pub fn dims(&self) -> BTreeMap<u32, usize> {
        self.spaces.iter().map(|(&k, s)| (k, s.dim())).collect()
    }
}

/// Fails with `NotDiagonalizable` when the eigenspaces do not span.
pub fn root_decomposition(l: &LieAlgebra, t: &[u32]) -> Result<RootDecomposition> {
    let f = l.field();
    let n = l.dim();
    let ad = l.ad_matrix(t);
    let mut spaces = BTreeMap::new();
    let mut found = 0;
    for lambda in 0..f.p() {
        let shifted = ad.sub(&Matrix::identity(f, n).scaled(lambda));
        let k = shifted.kernel();
        if !k.is_empty() {
            let s = Subspace::span(f, n, &k);
            found += s.dim();
            spaces.insert(lambda, s);
        }
    }
    if found != n {
        return Err(Error::NotDiagonalizable { found, dim: n });
    }
    Ok(RootDecomposition { spaces })
}

/// `(t·ψ)(x, y) = [t, ψ(x, y)] − ψ([t, x], y) − ψ(x, [t, y])`
pub fn torus_action(l: &LieAlgebra, t: &[u32], psi: &Cochain2) -> Cochain2 {
    let f = l.field();
    let n = l.dim();
    let ad = l.ad_matrix(t);
    let cols: Vec<Vec<u32>> = (0..n).map(|i| ad.column(i)).collect();
    let mut out = Cochain2::zero(f, n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = ad.apply(&psi.basis_value(i, j));
            v = f.sub_vec(&v, &psi.eval(&cols[i], &crate::exactlin::unit_vector(n, j)));
            v = f.sub_vec(&v, &psi.eval(&crate::exactlin::unit_vector(n, i), &cols[j]));
            out.set(i, j, v);
        }
    }
    out
}

/// Splits `ψ` into eigencomponents of the action of `t`, using the Lagrange
/// projections `Π_{μ≠λ} (T − μ)/(λ − μ)`. Zero components are omitted.
pub fn cochain_torus_weights(
    l: &LieAlgebra,
    t: &[u32],
    psi: &Cochain2,
) -> Result<BTreeMap<u32, Cochain2>> {
    root_decomposition(l, t)?;
    let f = l.field();
    let p = f.p();
    // T^k ψ for k < p
    let mut powers = vec![psi.clone()];
    for k in 1..p as usize {
        let next = torus_action(l, t, &powers[k - 1]);
        powers.push(next);
    }
    let mut out = BTreeMap::new();
    for lambda in 0..p {
        // coefficients of Π_{μ≠λ} (X − μ)
        let mut poly = vec![1u32];
        let mut denom = 1u32;
        for mu in (0..p).filter(|&m| m != lambda) {
            let mut next = vec![0; poly.len() + 1];
            for (k, &c) in poly.iter().enumerate() {
                next[k + 1] = f.add(next[k + 1], c);
                next[k] = f.sub(next[k], f.mul(c, mu));
            }
            poly = next;
            denom = f.mul(denom, f.sub(lambda, mu));
        }
        let scale = f.inv(denom)?;
        let mut comp = Cochain2::zero(f, l.dim());
        for (k, &c) in poly.iter().enumerate() {
            if c != 0 {
                comp = comp.add(&powers[k].scaled(f.mul(c, scale)));
            }
        }
        if !comp.is_zero() {
            out.insert(lambda, comp);
        }
    }
    Ok(out)
}

/// `t·E` for the elementary cochain `E(u, v) = (u_a v_b − u_b v_a) e_c`, as
/// sparse entries keyed by `pair_index(i, j) · n + component`. `ad` is `ad t`.
pub fn elementary_torus_image(ad: &Matrix, a: usize, b: usize, c: usize) -> Vec<(usize, u32)> {
    let f = ad.field();
    let n = ad.rows();
    let mut img: HashMap<usize, u32> = HashMap::new();
    let mut add = |i: usize, j: usize, comp: usize, coef: u32| {
        if coef == 0 || i == j {
            return;
        }
        let (i, j, coef) = if i < j {
            (i, j, coef)
        } else {
            (j, i, f.neg(coef))
        };
        let e = img.entry(pair_index(n, i, j) * n + comp).or_insert(0);
        *e = f.add(*e, coef);
    };
    // [t, E(e_a, e_b)] = [t, e_c]
    for r in 0..n {
        add(a, b, r, ad.get(r, c));
    }
    // −E([t, e_i], e_j) over all ordered pairs; folding (j, i) onto (i, j)
    // supplies the −E(e_i, [t, e_j]) term
    for i in 0..n {
        add(i, b, c, f.neg(ad.get(a, i)));
        add(i, a, c, ad.get(b, i));
    }
    let mut v: Vec<(usize, u32)> = img.into_iter().filter(|&(_, c)| c != 0).collect();
    v.sort_unstable();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightVanishingReport {
    pub k: i64,
    /// Elementary cochains `e_a ∧ e_b ↦ e_c` spanning the weight-`k` component.
    pub elementary_cochains: usize,
    /// Dimension of the torus-invariant part of the weight-`k` component.
    pub invariant_dim: usize,
    pub vanishes: bool,
}

/// Computes the torus-invariant cochains inside the graded weight-`k`
/// component and reports whether only zero is left. Requires `1 ≤ k < p`.
pub fn weight_vanishing_check(
    g: &GradedAlgebra,
    t: &[u32],
    k: i64,
) -> Result<WeightVanishingReport> {
    let l = g.algebra();
    let f = l.field();
    if k < 1 || k >= f.p() as i64 {
        return Err(Error::Invalid(format!("weight {k} outside 1..p")));
    }
    let n = l.dim();
    let degrees = g.degrees();
    let ad = l.ad_matrix(t);
    let mut basis = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                if degrees[c] == degrees[a] + degrees[b] + k {
                    basis.push((a, b, c));
                }
            }
        }
    }
    let images: Vec<_> = basis
        .iter()
        .map(|&(a, b, c)| elementary_torus_image(&ad, a, b, c))
        .collect();
    let kernel = sparse_kernel(f, &images);
    Ok(WeightVanishingReport {
        k,
        elementary_cochains: basis.len(),
        invariant_dim: kernel.len(),
        vanishes: kernel.is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::classical;
    use crate::exactlin::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_torus_is_all_weight_zero() {
        let f = Fp::new(5).unwrap();
        let l = classical::sl2(f).unwrap();
        let r = root_decomposition(&l, &[0, 0, 0]).unwrap();
        assert_eq!(r.dims(), BTreeMap::from([(0, 3)]));
    }

    #[test]
    fn sl2_roots() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        // h has eigenvalues 2, 0, −2
        let r = root_decomposition(&l, &[0, 1, 0]).unwrap();
        assert_eq!(r.dims(), BTreeMap::from([(0, 1), (2, 1), (5, 1)]));
        assert!(matches!(
            root_decomposition(&l, &[1, 0, 0]),
            Err(Error::NotDiagonalizable { found: 1, dim: 3 })
        ));
    }

    #[test]
    fn lagrange_components_sum_back() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        let t = [0, 1, 0];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut psi = Cochain2::zero(f, 3);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            psi.set(i, j, f.random_vector(3, &mut rng));
        }
        let comps = cochain_torus_weights(&l, &t, &psi).unwrap();
        let mut total = Cochain2::zero(f, 3);
        for (&lambda, c) in &comps {
            total = total.add(c);
            assert_eq!(torus_action(&l, &t, c), c.scaled(lambda));
        }
        assert_eq!(total, psi);
    }

    #[test]
    fn elementary_images_match_dense_action() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        let t = [1, 2, 3];
        let ad = l.ad_matrix(&t);
        for a in 0..3 {
            for b in a + 1..3 {
                for c in 0..3 {
                    let mut e = Cochain2::zero(f, 3);
                    let mut v = vec![0; 3];
                    v[c] = 1;
                    e.set(a, b, v);
                    let dense = torus_action(&l, &t, &e);
                    let mut expected = Vec::new();
                    for (i, j, k, coef) in dense.entries() {
                        expected.push((pair_index(3, i, j) * 3 + k, coef));
                    }
                    expected.sort_unstable();
                    assert_eq!(elementary_torus_image(&ad, a, b, c), expected);
                }
            }
        }
    }

    #[test]
    fn vanishing_on_sl2() {
        let f = Fp::new(7).unwrap();
        let g = classical::sl2_graded(f).unwrap();
        for k in 1..7 {
            assert!(weight_vanishing_check(&g, &[0, 1, 0], k).unwrap().vanishes);
        }
        // with t = 0 every cochain is invariant
        let r = weight_vanishing_check(&g, &[0, 0, 0], 1).unwrap();
        assert!(!r.vanishes && r.invariant_dim == r.elementary_cochains);
        assert!(weight_vanishing_check(&g, &[0, 1, 0], 7).is_err());
        assert!(weight_vanishing_check(&g, &[0, 1, 0], 0).is_err());
    }
}
