//! Coboundaries, the `*` product, splitting a filtered bracket into graded
//! pieces, and the equations those pieces satisfy.
//!
//! Conventions:
//!
//! * `d¹φ(x, y) = [x, φ(y)] − [y, φ(x)] − φ([x, y])`
//! * `dψ(x, y, z) = Σ_cyc ([ψ(x, y), z] + ψ([x, y], z))`
//! * `φ*ψ(x, y, z) = Σ_cyc φ(ψ(x, y), z)`
//!
//! With these signs the Jacobiator of `[ , ] + ψ` equals `dψ + ψ*ψ`, so a
//! bracket `[ , ] + Σ_s ψ_s` is Lie exactly when `dψ_s + Σ_{i+j=s} ψ_i*ψ_j = 0`
//! for every `s`. The 2-differential is the negative of the usual
//! Chevalley–Eilenberg one, which does not change cocycles or `d ∘ d = 0`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::construct::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::liecore::LieAlgebra;

use super::cochain::{Cochain1, Cochain2, Cochain3};

/// `[v, e_c]`
fn bracket_with_basis_right(l: &LieAlgebra, v: &[u32], c: usize) -> Vec<u32> {
    let f = l.field();
    l.bracket_basis_left(c, v)
        .into_iter()
        .map(|x| f.neg(x))
        .collect()
}

/// `ψ(v, e_c)` for a vector `v`.
fn eval_left_vector(psi: &Cochain2, v: &[(usize, u32)], c: usize) -> Vec<u32> {
    let f = psi.field();
    let mut out = vec![0; psi.dim()];
    for &(r, coef) in v {
        f.axpy(&mut out, coef, &psi.basis_value(r, c));
    }
    out
}

fn sparse(v: &[u32]) -> Vec<(usize, u32)> {
    v.iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .collect()
}

pub fn coboundary1(l: &LieAlgebra, phi: &Cochain1) -> Cochain2 {
    let f = l.field();
    let n = l.dim();
    let mut out = Cochain2::zero(f, n);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = l.bracket_basis_left(i, phi.value(j));
            let b = l.bracket_basis_left(j, phi.value(i));
            v = f.sub_vec(&v, &b);
            for (k, c) in l.basis_bracket(i, j) {
                f.axpy(&mut v, f.neg(c), phi.value(k));
            }
            out.set(i, j, v);
        }
    }
    out
}

pub fn coboundary2(l: &LieAlgebra, psi: &Cochain2) -> Cochain3 {
    let f = l.field();
    let n = l.dim();
    Cochain3::from_fn(f, n, |i, j, k| {
        let mut out = vec![0; n];
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            let pxy = psi.basis_value(x, y);
            out = f.add_vec(&out, &bracket_with_basis_right(l, &pxy, z));
            let xy = l.basis_bracket(x, y);
            out = f.add_vec(&out, &eval_left_vector(psi, &xy, z));
        }
        out
    })
}

pub fn star(phi: &Cochain2, psi: &Cochain2) -> Cochain3 {
    let f = phi.field();
    let n = phi.dim();
    Cochain3::from_fn(f, n, |i, j, k| {
        let mut out = vec![0; n];
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            let v = sparse(&psi.basis_value(x, y));
            out = f.add_vec(&out, &eval_left_vector(phi, &v, z));
        }
        out
    })
}

/// Splits `{x, y} − [x, y]` into graded pieces `ψ_s`, `s ≥ 1`, returned in
/// increasing `s`. Both brackets must be written on the homogeneous basis of `g`.
pub fn decompose_deformation(
    bracket: &LieAlgebra,
    g: &GradedAlgebra,
) -> Result<Vec<(i64, Cochain2)>> {
    if bracket.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: bracket.dim(),
        });
    }
    let f = g.algebra().field();
    let base = Cochain2::from_algebra(g.algebra());
    let deformed = Cochain2::from_algebra(bracket);
    let diff = deformed.add(&base.scaled(f.neg(1)));
    let degrees = g.degrees();
    for (i, j, k, _) in diff.entries() {
        let weight = degrees[k] - degrees[i] - degrees[j];
        if weight <= 0 {
            return Err(Error::NotFilteredDeformation { i, j, weight });
        }
    }
    Ok(diff
        .weights(degrees)
        .into_iter()
        .map(|s| (s, diff.component(degrees, s)))
        .collect())
}

/// `[ , ] + Σ ψ_s` as a Lie algebra on the basis of `g` (not validated).
pub fn reassemble(g: &GradedAlgebra, psis: &[(i64, Cochain2)]) -> LieAlgebra {
    let mut total = Cochain2::from_algebra(g.algebra());
    for (_, p) in psis {
        total = total.add(p);
    }
    LieAlgebra::from_bracket_fn(g.algebra().field(), g.dim(), |i, j| total.basis_value(i, j))
        .with_labels(g.algebra().labels().to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightResidual {
    pub s: i64,
    /// Basis triples on which `dψ_s + Σ ψ_i*ψ_j` is nonzero.
    pub support: usize,
    pub first_triple: Option<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaurerCartanReport {
    pub residuals: Vec<WeightResidual>,
    pub all_zero: bool,
}

impl MaurerCartanReport {
    pub fn residual_at(&self, s: i64) -> Option<&WeightResidual> {
        self.residuals.iter().find(|r| r.s == s)
    }
}

/// Evaluates `dψ_s + Σ_{i+j=s} ψ_i*ψ_j` for every `s` from 1 to twice the
/// largest weight present, the range where either term can be nonzero.
pub fn check_maurer_cartan(g: &GradedAlgebra, psis: &[(i64, Cochain2)]) -> MaurerCartanReport {
    let l = g.algebra();
    let f = l.field();
    let n = l.dim();
    let by_weight: BTreeMap<i64, &Cochain2> = psis.iter().map(|(s, p)| (*s, p)).collect();
    let max = by_weight.keys().max().copied().unwrap_or(0);
    let mut residuals = Vec::new();
    for s in 1..=2 * max {
        let mut r = match by_weight.get(&s) {
            Some(p) => coboundary2(l, p),
            None => Cochain3::zero(f, n),
        };
        for (&i, pi) in &by_weight {
            if let Some(pj) = by_weight.get(&(s - i)) {
                r = r.add(&star(pi, pj));
            }
        }
        residuals.push(WeightResidual {
            s,
            support: r.support_size(),
            first_triple: r.first_nonzero(),
        });
    }
    MaurerCartanReport {
        all_zero: residuals.iter().all(|r| r.support == 0),
        residuals,
    }
}

/// A random linear map strictly raising degree.
pub fn random_degree_raising_map<R: Rng + ?Sized>(g: &GradedAlgebra, rng: &mut R) -> Matrix {
    let f = g.algebra().field();
    let n = g.dim();
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        for k in 0..n {
            if g.degree(k) > g.degree(i) && rng.gen_bool(0.5) {
                m.set(k, i, f.random(rng));
            }
        }
    }
    m
}

/// `{x, y} = u⁻¹[ux, uy]` with `u = I + N`, `N` degree-raising. The result is
/// a Lie bracket whose difference from that of `g` has only positive weights.
pub fn conjugated_deformation(g: &GradedAlgebra, raising: &Matrix) -> Result<LieAlgebra> {
    let l = g.algebra();
    let f = l.field();
    let n = l.dim();
    let u = Matrix::identity(f, n).add(raising);
    // (I + N)⁻¹ = Σ (−N)^k, a finite sum since N is nilpotent
    let neg = raising.scaled(f.neg(1));
    let mut inv = Matrix::identity(f, n);
    let mut power = Matrix::identity(f, n);
    for _ in 0..n {
        power = power.mul(&neg)?;
        if power.is_zero() {
            break;
        }
        inv = inv.add(&power);
    }
    let cols: Vec<Vec<u32>> = (0..n).map(|i| u.column(i)).collect();
    Ok(
        LieAlgebra::from_bracket_fn(f, n, |i, j| inv.apply(&l.bracket(&cols[i], &cols[j])))
            .with_labels(l.labels().to_vec()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::classical;
    use crate::exactlin::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_cochain1<R: Rng>(f: Fp, n: usize, rng: &mut R) -> Cochain1 {
        Cochain1::from_values(f, (0..n).map(|_| f.random_vector(n, rng)).collect())
    }

    #[test]
    fn d_of_zero() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        assert!(coboundary1(&l, &Cochain1::zero(f, 3)).is_zero());
    }

    #[test]
    fn dd_vanishes_on_sl2() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let phi = random_cochain1(f, 3, &mut rng);
            assert!(coboundary2(&l, &coboundary1(&l, &phi)).is_zero());
        }
    }

    #[test]
    fn jacobiator_is_d_plus_star() {
        // for the zero bracket, {,} = ψ and the Jacobiator is ψ*ψ
        let f = Fp::new(5).unwrap();
        let l = classical::sl2(f).unwrap();
        let psi = Cochain2::from_algebra(&l);
        let zero = LieAlgebra::abelian(f, 3);
        assert!(coboundary2(&zero, &psi).is_zero());
        assert!(star(&psi, &psi).is_zero());
    }

    #[test]
    fn identical_brackets_have_no_pieces() {
        let f = Fp::new(7).unwrap();
        let g = classical::sl2_graded(f).unwrap();
        assert!(decompose_deformation(g.algebra(), &g).unwrap().is_empty());
        let report = check_maurer_cartan(&g, &[]);
        assert!(report.all_zero && report.residuals.is_empty());
    }

    #[test]
    fn weight_zero_difference_is_rejected() {
        let f = Fp::new(7).unwrap();
        let g = classical::sl2_graded(f).unwrap();
        let doubled = LieAlgebra::from_bracket_fn(f, 3, |i, j| {
            g.algebra()
                .bracket(
                    &crate::exactlin::unit_vector(3, i),
                    &crate::exactlin::unit_vector(3, j),
                )
                .into_iter()
                .map(|c| f.mul(c, 2))
                .collect()
        });
        assert!(matches!(
            decompose_deformation(&doubled, &g),
            Err(Error::NotFilteredDeformation { weight: 0, .. })
        ));
    }
}
