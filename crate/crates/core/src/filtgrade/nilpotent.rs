//! Executable checks of the structural statements about nilpotent graded
//! subalgebras `N` of a graded sum `G = S ⊗ O_m + D`.

use serde::Serialize;

use crate::construct::{GradedSum, TruncatedPoly};
use crate::error::Result;
use crate::exactlin::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedNilpotentReport {
    pub subalgebra: bool,
    pub homogeneous: bool,
    pub nilpotent: bool,
    /// Homogeneous and nilpotent.
    pub homogeneous_nilpotent: bool,
    /// `N ∩ G_{-1} = e_{-1} ⊗ O_m`.
    pub degree_minus1_full: bool,
    /// The projection of `N ∩ G_0` onto the `D` summand is all of `D`.
    pub pr_d_surjective: bool,
}

impl GradedNilpotentReport {
    pub fn all_hold(&self) -> bool {
        self.subalgebra
            && self.homogeneous_nilpotent
            && self.degree_minus1_full
            && self.pr_d_surjective
    }
}

/// Evidence that an element `e_0 ⊗ f` of `N` makes `N` non-nilpotent:
/// applying `y ↦ [y, e_0 ⊗ f]` `p` times to `e_{-1} ⊗ 1` gives `c · e_{-1} ⊗ f^p`,
/// where `[e_{-1}, e_0] = c e_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonNilpotencyWitness {
    pub f: String,
    pub image: Vec<u32>,
    /// `c · e_{-1} ⊗ f^p`
    pub expected: Vec<u32>,
    pub identity_holds: bool,
    /// The image equals `e_{-1} ⊗ 1`, so the operator does not vanish.
    pub returns_to_start: bool,
    /// The same iteration with `y ↦ [e_0 ⊗ f, y]`, which differs by `(-1)^p`.
    pub left_image: Vec<u32>,
}

/// An element of positive degree in `N`, pulled down to degree 0 by repeated
/// brackets with `e_{-1} ⊗ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentWitness {
    pub degree: i64,
    pub start: Vec<u32>,
    /// `g` with the pulled-down element equal to `e_0 ⊗ g`.
    pub g: String,
    pub pulled_into_n: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentStructureReport {
    pub preconditions_met: bool,
    /// `dim {f : e_0 ⊗ f ∈ N}`
    pub f_dim: usize,
    /// `F = 0` and `N_0 → D` is bijective.
    pub n0_iso_d: bool,
    /// `N ⊆ ⟨e_{-1}, e_0⟩ ⊗ O_m + D`
    pub containment: bool,
    pub descent_witness: Option<DescentWitness>,
    /// Every element of `pr_D N_0` is a nilpotent derivation of `O_m`.
    pub d_nilpotent: bool,
    pub nonnilpotency_witness: Option<NonNilpotencyWitness>,
}

impl NilpotentStructureReport {
    pub fn all_hold(&self) -> bool {
        self.n0_iso_d && self.containment && self.d_nilpotent
    }
}

fn homogeneous_part(g: &GradedSum, n: &Subspace, deg: i64) -> Subspace {
    n.intersect(&g.graded().component(deg))
        .expect("same ambient")
}

/// `pr_D (N ∩ G_0)` as a subspace of `W_m`.
fn projected_d(g: &GradedSum, n: &Subspace) -> Subspace {
    let n0 = homogeneous_part(g, n, 0);
    let imgs: Vec<Vec<u32>> = n0.basis().map(|v| g.project_to_d(v)).collect();
    Subspace::span(g.field(), g.witt().algebra().dim(), &imgs)
}

pub fn check_graded_nilpotent(g: &GradedSum, n: &Subspace) -> Result<GradedNilpotentReport> {
    let l = g.algebra();
    let subalgebra = l.is_subalgebra(n);
    let homogeneous = g.graded().is_homogeneous(n);
    let nilpotent = subalgebra && l.is_nilpotent(n)?;
    let degree_minus1_full = homogeneous_part(g, n, -1) == g.tensor_block(-1)?;
    let pr_d_surjective = projected_d(g, n) == *g.d();
    Ok(GradedNilpotentReport {
        subalgebra,
        homogeneous,
        nilpotent,
        homogeneous_nilpotent: homogeneous && nilpotent,
        degree_minus1_full,
        pr_d_surjective,
    })
}

/// `e_{-1} ⊗ 1` pushed `p` times through `y ↦ [y, x]` (or `[x, y]` when `left`).
fn iterate_ad(g: &GradedSum, x: &[u32], left: bool) -> Result<Vec<u32>> {
    let l = g.algebra();
    let mut y = g.tensor_vector(-1, &g.om().one())?;
    for _ in 0..g.field().p() {
        y = if left {
            l.bracket(x, &y)
        } else {
            l.bracket(&y, x)
        };
    }
    Ok(y)
}

/// The identity behind the non-nilpotency argument for a single `f`.
pub fn nonnilpotency_witness(g: &GradedSum, f: &TruncatedPoly) -> Result<NonNilpotencyWitness> {
    let field = g.field();
    let x = g.tensor_vector(0, f)?;
    let image = iterate_ad(g, &x, false)?;
    let left_image = iterate_ad(g, &x, true)?;
    let (a, b) = (g.s_index_of_degree(-1)?, g.s_index_of_degree(0)?);
    let c = g
        .s()
        .algebra()
        .basis_bracket(a, b)
        .into_iter()
        .find(|&(k, _)| k == a)
        .map_or(0, |(_, c)| c);
    let fp = f.pow(field.p()).scale(c);
    let expected = g.tensor_vector(-1, &fp)?;
    let start = g.tensor_vector(-1, &g.om().one())?;
    Ok(NonNilpotencyWitness {
        f: f.to_string(),
        identity_holds: image == expected,
        returns_to_start: image == start,
        image,
        expected,
        left_image,
    })
}

fn descent_witness(g: &GradedSum, n: &Subspace) -> Result<Option<DescentWitness>> {
    let l = g.algebra();
    let top = g.graded().occupied_degrees().into_iter().max().unwrap_or(0);
    let lower = g.tensor_vector(-1, &g.om().one())?;
    for deg in (1..=top).rev() {
        let part = homogeneous_part(g, n, deg);
        let Some(start) = part.basis().next() else {
            continue;
        };
        let mut y = start.to_vec();
        for _ in 0..deg {
            y = l.bracket(&y, &lower);
        }
        let gpoly = g.tensor_coefficient(0, &y)?;
        return Ok(Some(DescentWitness {
            degree: deg,
            start: start.to_vec(),
            g: gpoly.to_string(),
            pulled_into_n: n.contains_vector(&y),
        }));
    }
    Ok(None)
}

pub fn check_nilpotent_structure(g: &GradedSum, n: &Subspace) -> Result<NilpotentStructureReport> {
    let l2 = check_graded_nilpotent(g, n)?;
    let e0_block = g.tensor_block(0)?;
    let f_space = n.intersect(&e0_block)?;
    let n0 = homogeneous_part(g, n, 0);
    let d_image = projected_d(g, n);
    // N_0 → D is injective iff its kernel N_0 ∩ (S ⊗ O_m) vanishes
    let kernel = n0.intersect(&g.tensor_part())?;
    let n0_iso_d = f_space.is_zero() && kernel.is_zero() && d_image == *g.d();

    let allowed = g.tensor_block(-1)?.sum(&e0_block)?.sum(&g.d_part())?;
    let containment = allowed.contains(n)?;
    let descent_witness = if containment {
        None
    } else {
        descent_witness(g, n)?
    };

    let d_nilpotent = g.witt().consists_of_nilpotent(&d_image);

    let nonnilpotency_witness = if f_space.is_zero() {
        None
    } else {
        let polys: Vec<TruncatedPoly> = f_space
            .basis()
            .map(|v| g.tensor_coefficient(0, v))
            .collect::<Result<_>>()?;
        let f = polys
            .iter()
            .find(|f| f.constant_term() != 0)
            .unwrap_or(&polys[0]);
        Some(nonnilpotency_witness(g, f)?)
    };

    Ok(NilpotentStructureReport {
        preconditions_met: l2.all_hold(),
        f_dim: f_space.dim(),
        n0_iso_d,
        containment,
        descent_witness,
        d_nilpotent,
        nonnilpotency_witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionAudit {
    pub dim_l: usize,
    pub dim_b: usize,
    pub p_pow_m: usize,
    pub dim_d: usize,
    /// `p^m + dim D`
    pub bound: usize,
    pub bound_holds: bool,
    /// `dim L ≤ 2 dim B`
    pub counterexample_inequality: bool,
    /// If the inequality held, `dim D ≥ dim L − dim D − 2 p^m` would follow.
    pub forced_dim_d_lower_bound: i64,
    /// Whether that forced bound reaches `p^m`.
    pub forces_dim_d_ge_pm: bool,
}

/// Compares `dim B` with `p^m + dim D`, and records what `dim L ≤ 2 dim B`
/// would imply for `dim D`.
pub fn dimension_audit(g: &GradedSum, b: &Subspace) -> DimensionAudit {
    dimension_audit_dims(g.dim(), b.dim(), g.om().dim(), g.d().dim())
}

/// [`dimension_audit`] on bare dimensions, for hypothetical configurations.
pub fn dimension_audit_dims(
    dim_l: usize,
    dim_b: usize,
    p_pow_m: usize,
    dim_d: usize,
) -> DimensionAudit {
    let bound = p_pow_m + dim_d;
    let counterexample_inequality = dim_l <= 2 * dim_b;
    let forced = dim_l as i64 - dim_d as i64 - 2 * p_pow_m as i64;
    DimensionAudit {
        dim_l,
        dim_b,
        p_pow_m,
        dim_d,
        bound,
        bound_holds: dim_b <= bound,
        counterexample_inequality,
        forced_dim_d_lower_bound: forced,
        forces_dim_d_ge_pm: counterexample_inequality && forced >= p_pow_m as i64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{zassenhaus, WittAlgebra};
    use crate::exactlin::Fp;

    pub(crate) fn g5() -> GradedSum {
        let f = Fp::new(5).unwrap();
        let s = zassenhaus(f, 1).unwrap();
        let w = WittAlgebra::new(f, 1, 1000).unwrap();
        let d = Subspace::span(f, w.algebra().dim(), &[w.partial(0)]);
        GradedSum::new(&s, &w, &d).unwrap()
    }

    fn standard_n(g: &GradedSum) -> Subspace {
        let om = g.om();
        let mut gens: Vec<Vec<u32>> = g.tensor_block(-1).unwrap().basis_vectors();
        let mut v = g.d_vector(&g.witt().partial(0)).unwrap();
        let x = g.tensor_vector(0, &om.var(0)).unwrap();
        g.field().axpy(&mut v, 1, &x);
        gens.push(v);
        Subspace::span(g.field(), g.dim(), &gens)
    }

    #[test]
    fn standard_n_passes() {
        let g = g5();
        let n = standard_n(&g);
        let r2 = check_graded_nilpotent(&g, &n).unwrap();
        assert!(r2.all_hold(), "{r2:?}");
        let r3 = check_nilpotent_structure(&g, &n).unwrap();
        assert!(r3.preconditions_met && r3.all_hold(), "{r3:?}");
        assert_eq!(r3.f_dim, 0);
        let audit = dimension_audit(&g, &n);
        assert_eq!((audit.dim_b, audit.bound), (6, 6));
        assert!(audit.bound_holds);
    }

    #[test]
    fn e_minus1_block_alone() {
        let g = g5();
        let n = g.tensor_block(-1).unwrap();
        let r = check_graded_nilpotent(&g, &n).unwrap();
        assert!(r.homogeneous_nilpotent && r.degree_minus1_full && !r.pr_d_surjective);
        let audit = dimension_audit(&g, &n);
        assert!(audit.bound_holds && audit.dim_b == 5);
    }

    #[test]
    fn whole_g_is_not_nilpotent() {
        let g = g5();
        let r = check_graded_nilpotent(&g, &g.algebra().whole()).unwrap();
        assert!(!r.homogeneous_nilpotent);
    }

    #[test]
    fn adding_torus_triggers_witness() {
        let g = g5();
        let n = standard_n(&g);
        let t = g.torus().unwrap();
        let n = g.algebra().subalgebra_closure(&n.with_vectors(&[t]));
        let r = check_nilpotent_structure(&g, &n).unwrap();
        assert!(r.f_dim > 0 && !r.n0_iso_d);
        let w = r.nonnilpotency_witness.unwrap();
        assert!(w.identity_holds && w.returns_to_start);
        let f = g.field();
        let neg: Vec<u32> = w.image.iter().map(|&c| f.neg(c)).collect();
        assert_eq!(w.left_image, neg);
    }

    #[test]
    fn positive_degree_breaks_containment() {
        let g = g5();
        let om = g.om();
        let x1 = g.tensor_vector(1, &om.var(0)).unwrap();
        let n = g
            .algebra()
            .subalgebra_closure(&standard_n(&g).with_vectors(&[x1]));
        let r = check_nilpotent_structure(&g, &n).unwrap();
        assert!(!r.containment);
        let w = r.descent_witness.unwrap();
        assert!(w.pulled_into_n);
    }

    #[test]
    fn hypothetical_dims() {
        let a = dimension_audit_dims(26, 6, 5, 1);
        assert!(!a.counterexample_inequality);
    }
}
