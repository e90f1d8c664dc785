//! The experiment suites behind `nilsum suite`: structural checks on a graded
//! sum, the subalgebra census in `W_1`, the deformation calculus, and a smoke
//! test of the solvability theorem on randomly built decomposable algebras.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{classical, semidirect, zassenhaus, GradedAlgebra, GradedSum, WittAlgebra};
use crate::deform::{
    check_maurer_cartan, coboundary1, coboundary2, conjugated_deformation, decompose_deformation,
    random_degree_raising_map, weight_vanishing_check, Cochain1, Cochain2, MaurerCartanReport,
    WeightVanishingReport,
};
use crate::error::{Error, Result};
use crate::exactlin::{unit_vector, Fp, Matrix, Subspace};
use crate::filtgrade::{
    associated_graded, check_graded_nilpotent, check_nilpotent_structure, dimension_audit,
    dimension_audit_dims, gr_embed, nonnilpotency_witness, weisfeiler_filtration, witt_census,
    CensusMode, DimensionAudit, Filtration,
};
use crate::liecore::LieAlgebra;

use super::report::Report;
use super::search::verify_decomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    GradedNilpotent,
    WittCensus,
    Deform,
    TheoremSmoke,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::GradedNilpotent,
        Suite::WittCensus,
        Suite::Deform,
        Suite::TheoremSmoke,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GradedNilpotent => "lemma2_3",
            Suite::WittCensus => "lemma4",
            Suite::Deform => "deform",
            Suite::TheoremSmoke => "theorem_smoke",
        }
    }

    fn default_p(self) -> u32 {
        match self {
            Suite::GradedNilpotent | Suite::Deform => 5,
            Suite::WittCensus => 3,
            Suite::TheoremSmoke => 7,
        }
    }

    fn default_samples(self) -> usize {
        match self {
            Suite::GradedNilpotent => 50,
            Suite::WittCensus => 500,
            Suite::Deform => 200,
            Suite::TheoremSmoke => 100,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite '{s}'")))
    }
}

/// Unset fields fall back to per-suite defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub p: Option<u32>,
    pub m: Option<usize>,
    pub seed: u64,
    pub samples: Option<usize>,
    /// Only meaningful for the Witt census; the other suites are fixed-seed samplers.
    pub exhaustive: bool,
    pub budget_subspaces: u128,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            p: None,
            m: None,
            seed: 1,
            samples: None,
            exhaustive: true,
            budget_subspaces: 1_000_000,
        }
    }
}

pub fn cmd_suite(suite: Suite, params: SuiteParams) -> Result<Report> {
    let field = Fp::new(params.p.unwrap_or(suite.default_p()))?;
    let samples = params.samples.unwrap_or(suite.default_samples());
    let m = params.m.unwrap_or(1);
    let mut report = Report::new(
        "suite",
        json!({"suite": suite.name(), "p": field.p(), "m": m, "samples": samples}),
    );
    match suite {
        Suite::GradedNilpotent => {
            report.seed = Some(params.seed);
            for r in graded_nilpotent_suite(field, samples, params.seed)? {
                report.results.push(r);
            }
        }
        Suite::WittCensus => {
            let mode = if params.exhaustive {
                CensusMode::Exhaustive {
                    budget: params.budget_subspaces,
                }
            } else {
                report.seed = Some(params.seed);
                CensusMode::Sample {
                    samples,
                    seed: params.seed,
                }
            };
            let r = witt_census(field, m, mode)?;
            report.stat("all_below_bound", r.all_below_bound)?;
            report.stat("all_one_dimensional", r.all_one_dimensional)?;
            report.push(&r)?;
        }
        Suite::Deform => {
            report.seed = Some(params.seed);
            let d = deform_suite(field, samples, params.seed)?;
            report.stat("all_hold", d.all_hold())?;
            report.push(&d)?;
        }
        Suite::TheoremSmoke => {
            report.seed = Some(params.seed);
            let t = theorem_smoke(field, samples, params.seed)?;
            report.stat("all_solvable", t.solvable == t.generated)?;
            report.push(&t)?;
        }
    }
    Ok(report)
}

/// `G = W_1(1) ⊗ O_1 + ⟨∂⟩` over `field`.
pub fn standard_graded_sum(field: Fp) -> Result<GradedSum> {
    let s = zassenhaus(field, 1)?;
    let w = WittAlgebra::new(field, 1, 1 << 16)?;
    let d = Subspace::span(field, w.algebra().dim(), &[w.partial(0)]);
    GradedSum::new(&s, &w, &d)
}

/// `N = e_{-1} ⊗ O_m + ⟨∂_1 + e_0 ⊗ x_1⟩`.
pub fn standard_nilpotent(g: &GradedSum) -> Result<Subspace> {
    let mut gens = g.tensor_block(-1)?.basis_vectors();
    let mut v = g.d_vector(&g.witt().partial(0))?;
    let x = g.tensor_vector(0, &g.om().var(0))?;
    g.field().axpy(&mut v, 1, &x);
    gens.push(v);
    Ok(Subspace::span(g.field(), g.dim(), &gens))
}

/// `L_i = G_{≥ i}` for a graded algebra.
pub fn grading_filtration(g: &GradedAlgebra) -> Result<Filtration> {
    let degs = g.occupied_degrees();
    let (lo, hi) = (degs[0], *degs.last().expect("nonempty"));
    let terms = (lo..=hi).map(|i| g.degree_at_least(i)).collect();
    Filtration::new(g.algebra(), lo, terms)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EmbeddingFuzz {
    pub samples: usize,
    pub injective: usize,
    pub preserves_brackets: usize,
    pub dims_add_up: usize,
    /// Subalgebras that are nilpotent, and how many of those have nilpotent `gr`.
    pub nilpotent: usize,
    pub nilpotent_gr_nilpotent: usize,
}

impl EmbeddingFuzz {
    pub fn all_hold(&self) -> bool {
        self.injective == self.samples
            && self.preserves_brackets == self.samples
            && self.dims_add_up == self.samples
            && self.nilpotent_gr_nilpotent == self.nilpotent
    }
}

/// Closure of one to three sparse random elements of `l`.
pub fn random_subalgebra<R: Rng + ?Sized>(l: &LieAlgebra, rng: &mut R) -> Subspace {
    let f = l.field();
    let n = l.dim();
    let k = rng.gen_range(1..=3);
    let gens: Vec<Vec<u32>> = (0..k)
        .map(|_| {
            let mut v = vec![0; n];
            for _ in 0..rng.gen_range(1..=3) {
                v[rng.gen_range(0..n)] = f.random(rng);
            }
            if v.iter().all(|&c| c == 0) {
                v[rng.gen_range(0..n)] = 1;
            }
            v
        })
        .collect();
    l.subalgebra_closure(&Subspace::span(f, n, &gens))
}

pub fn embedding_fuzz<R: Rng + ?Sized>(
    l: &LieAlgebra,
    filt: &Filtration,
    samples: usize,
    rng: &mut R,
) -> Result<EmbeddingFuzz> {
    let mut out = EmbeddingFuzz {
        samples,
        ..Default::default()
    };
    for _ in 0..samples {
        let b = random_subalgebra(l, rng);
        let emb = gr_embed(l, &b, filt)?;
        out.injective += emb.is_injective() as usize;
        out.preserves_brackets += emb.preserves_brackets() as usize;
        let total: usize = emb.source.graded().component_dims().values().sum();
        out.dims_add_up += (total == b.dim()) as usize;
        if l.is_nilpotent(&b)? {
            out.nilpotent += 1;
            let gr = emb.source.graded().algebra();
            out.nilpotent_gr_nilpotent += gr.is_nilpotent(&gr.whole())? as usize;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub filtration_dims: Vec<(i64, usize)>,
    pub gr_dims: Vec<(i64, usize)>,
    pub grading_dims: Vec<(i64, usize)>,
    pub matches_grading: bool,
    pub gr_total_dim: usize,
}

/// Weisfeiler filtration of `G` from `L_0 = Σ_{i≥0} G_i` and its `gr`,
/// compared degree by degree with the grading of `G`.
pub fn filtration_round_trip(g: &GradedAlgebra) -> Result<(RoundTrip, Filtration)> {
    let l = g.algebra();
    let filt = weisfeiler_filtration(l, &g.degree_at_least(0))?;
    let gr = associated_graded(l, &filt)?;
    let gr_dims: Vec<(i64, usize)> = gr.graded().component_dims().into_iter().collect();
    let grading_dims: Vec<(i64, usize)> = g.component_dims().into_iter().collect();
    Ok((
        RoundTrip {
            filtration_dims: filt.dims(),
            matches_grading: gr_dims == grading_dims,
            gr_total_dim: gr_dims.iter().map(|x| x.1).sum(),
            gr_dims,
            grading_dims,
        },
        filt,
    ))
}

fn neg_vec(f: Fp, v: &[u32]) -> Vec<u32> {
    v.iter().map(|&c| f.neg(c)).collect()
}

pub fn graded_nilpotent_suite(field: Fp, samples: usize, seed: u64) -> Result<Vec<Value>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = standard_graded_sum(field)?;
    let l = g.algebra();
    let n = standard_nilpotent(&g)?;
    let mut out = Vec::new();

    out.push(json!({
        "case": "standard_n",
        "dim": n.dim(),
        "graded_checks": check_graded_nilpotent(&g, &n)?,
        "structure": check_nilpotent_structure(&g, &n)?,
        "audit": dimension_audit(&g, &n),
    }));

    let block = g.tensor_block(-1)?;
    out.push(json!({
        "case": "e_minus1_block",
        "graded_checks": check_graded_nilpotent(&g, &block)?,
        "audit": dimension_audit(&g, &block),
    }));
    out.push(json!({"case": "whole", "graded_checks": check_graded_nilpotent(&g, &l.whole())?}));

    let with_torus = l.subalgebra_closure(&n.with_vectors(&[g.torus()?]));
    let r = check_nilpotent_structure(&g, &with_torus)?;
    let left_is_signed = r
        .nonnilpotency_witness
        .as_ref()
        .map(|w| w.left_image == neg_vec(field, &w.image));
    out.push(json!({
        "case": "with_torus",
        "dim": with_torus.dim(),
        "nilpotent": l.is_nilpotent(&with_torus)?,
        "structure": r,
        "left_iteration_is_negated": left_is_signed,
    }));

    let x1 = g.tensor_vector(1, &g.om().var(0))?;
    let raised = l.subalgebra_closure(&n.with_vectors(&[x1]));
    out.push(json!({
        "case": "positive_degree",
        "dim": raised.dim(),
        "nilpotent": l.is_nilpotent(&raised)?,
        "structure": check_nilpotent_structure(&g, &raised)?,
    }));

    // the identity for random f, including f with zero constant term
    let om = g.om();
    let (mut holds, mut returns, mut expect_returns) = (0, 0, 0);
    for _ in 0..samples {
        let f = om.from_coeffs(field.random_vector(om.dim(), &mut rng));
        let w = nonnilpotency_witness(&g, &f)?;
        holds += w.identity_holds as usize;
        returns += w.returns_to_start as usize;
        expect_returns += (f.pow(field.p()) == om.one()) as usize;
    }
    out.push(json!({
        "case": "random_f",
        "samples": samples,
        "identity_holds": holds,
        "returns_to_start": returns,
        "f_pow_p_is_one": expect_returns,
    }));

    // enlargements of N by homogeneous elements of non-negative degree; the
    // bound is audited on those that still satisfy every structural check
    let mut audits: Vec<DimensionAudit> = Vec::new();
    let mut tried = 0;
    for _ in 0..samples {
        let extra = random_subalgebra(l, &mut rng);
        let homog: Vec<Vec<u32>> = extra
            .basis()
            .flat_map(|v| homogeneous_pieces(g.graded(), v))
            .filter(|(d, _)| *d >= 0)
            .map(|(_, v)| v)
            .take(2)
            .collect();
        let b = l.subalgebra_closure(&n.with_vectors(&homog));
        tried += 1;
        if check_graded_nilpotent(&g, &b)?.all_hold() {
            audits.push(dimension_audit(&g, &b));
        }
    }
    out.push(json!({
        "case": "audit_fuzz",
        "tried": tried,
        "qualifying": audits.len(),
        "bound_holds": audits.iter().filter(|a| a.bound_holds).count(),
        "max_dim": audits.iter().map(|a| a.dim_b).max(),
    }));

    out.push(json!({
        "case": "hypothetical",
        "audit": dimension_audit_dims(l.dim(), n.dim(), om.dim(), g.d().dim()),
    }));

    let (trip, filt) = filtration_round_trip(g.graded())?;
    let fuzz = embedding_fuzz(l, &filt, 100, &mut rng)?;
    out.push(json!({"case": "filtration_round_trip", "round_trip": trip, "embedding_fuzz": fuzz}));

    // a solvable algebra with the superdiagonal filtration
    let bn = classical::upper_triangular(field, 4)?;
    let degs: Vec<i64> = classical::triangular_positions(4, false)
        .into_iter()
        .map(|(a, b)| b as i64 - a as i64)
        .collect();
    let graded_b = GradedAlgebra::new(bn, degs)?;
    let filt_b = grading_filtration(&graded_b)?;
    let fuzz_b = embedding_fuzz(graded_b.algebra(), &filt_b, 100, &mut rng)?;
    out.push(json!({"case": "solvable_embedding_fuzz", "embedding_fuzz": fuzz_b}));
    Ok(out)
}

/// The nonzero homogeneous components of `v`, with their degrees.
fn homogeneous_pieces(g: &GradedAlgebra, v: &[u32]) -> Vec<(i64, Vec<u32>)> {
    g.occupied_degrees()
        .into_iter()
        .filter_map(|d| {
            let mut piece = vec![0; v.len()];
            for i in g.basis_of_degree(d) {
                piece[i] = v[i];
            }
            piece.iter().any(|&c| c != 0).then_some((d, piece))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorruptionCheck {
    pub weight: i64,
    pub pair: (usize, usize),
    pub component: usize,
    pub detected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformReport {
    pub p: u32,
    pub dim: usize,
    pub dd_samples: usize,
    pub dd_zero: usize,
    pub sl2_round_trip: MaurerCartanReport,
    pub sl2_weights: Vec<i64>,
    pub sl2_reassembles: bool,
    pub fuzzed: usize,
    pub fuzzed_zero_residual: usize,
    pub fuzzed_reassemble: usize,
    pub corruptions: Vec<CorruptionCheck>,
    pub weight_vanishing: Vec<WeightVanishingReport>,
}

impl DeformReport {
    pub fn all_hold(&self) -> bool {
        self.dd_zero == self.dd_samples
            && self.sl2_round_trip.all_zero
            && self.sl2_reassembles
            && self.fuzzed_zero_residual == self.fuzzed
            && self.fuzzed_reassemble == self.fuzzed
            && self.corruptions.iter().all(|c| c.detected)
            && self.weight_vanishing.iter().all(|w| w.vanishes)
    }
}

/// A graded cochain piece with its weight.
pub type Piece = (i64, Cochain2);

/// `sl2` with the filtration from its Borel subalgebra, written in a basis
/// of representatives skewed by random elements of deeper filtration terms
/// and decomposed as a deformation of its associated graded algebra.
pub fn sl2_borel_deformation<R: Rng + ?Sized>(
    field: Fp,
    rng: &mut R,
) -> Result<(GradedAlgebra, LieAlgebra, Vec<Piece>)> {
    let l = classical::sl2(field)?;
    let borel = Subspace::span(field, 3, &[unit_vector(3, 0), unit_vector(3, 1)]);
    let filt = weisfeiler_filtration(&l, &borel)?;
    let gr = associated_graded(&l, &filt)?;
    let graded = gr.graded().clone();
    let skewed: Vec<Vec<u32>> = gr
        .adapted_basis()
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let deeper = filt.term(graded.degree(k) + 1);
            let shift = deeper.combination(&field.random_vector(deeper.dim(), rng));
            field.add_vec(&v, &shift)
        })
        .collect();
    let basis = Matrix::from_columns(field, 3, &skewed);
    let bracket = LieAlgebra::from_bracket_fn(field, 3, |i, j| {
        basis
            .solve(&l.bracket(&skewed[i], &skewed[j]))
            .expect("skewed representatives form a basis")
    });
    let psis = decompose_deformation(&bracket, &graded)?;
    Ok((graded, bracket, psis))
}

fn same_brackets(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.structure_constants() == b.structure_constants()
}

/// Adds a random nonzero value to a single entry of positive weight.
pub fn corrupt_one_entry<R: Rng + ?Sized>(
    g: &GradedAlgebra,
    psis: &[(i64, Cochain2)],
    rng: &mut R,
) -> (Vec<(i64, Cochain2)>, CorruptionCheck) {
    let f = g.algebra().field();
    let n = g.dim();
    loop {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i >= j {
            continue;
        }
        let targets: Vec<usize> = (0..n)
            .filter(|&k| g.degree(k) > g.degree(i) + g.degree(j))
            .collect();
        if targets.is_empty() {
            continue;
        }
        let k = targets[rng.gen_range(0..targets.len())];
        let s = g.degree(k) - g.degree(i) - g.degree(j);
        let mut out = psis.to_vec();
        let pos = match out.iter().position(|(w, _)| *w == s) {
            Some(pos) => pos,
            None => {
                out.push((s, Cochain2::zero(f, n)));
                out.len() - 1
            }
        };
        let delta = rng.gen_range(1..f.p());
        let cell = out[pos].1.value_mut(i, j);
        cell[k] = f.add(cell[k], delta);
        out.sort_by_key(|(w, _)| *w);
        let check = CorruptionCheck {
            weight: s,
            pair: (i, j),
            component: k,
            detected: false,
        };
        return (out, check);
    }
}

pub fn deform_suite(field: Fp, dd_samples: usize, seed: u64) -> Result<DeformReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gsum = standard_graded_sum(field)?;
    let g = gsum.graded();
    let l = g.algebra();
    let n = l.dim();

    let dd_zero = (0..dd_samples)
        .filter(|_| {
            let phi = Cochain1::from_values(
                field,
                (0..n).map(|_| field.random_vector(n, &mut rng)).collect(),
            );
            coboundary2(l, &coboundary1(l, &phi)).is_zero()
        })
        .count();

    let (sg, adapted, spsis) = sl2_borel_deformation(field, &mut rng)?;
    let sl2_round_trip = check_maurer_cartan(&sg, &spsis);
    let sl2_reassembles = same_brackets(&crate::deform::reassemble(&sg, &spsis), &adapted);

    const FUZZED: usize = 20;
    let (mut zero, mut reassembled) = (0, 0);
    let mut corruptions = Vec::new();
    for _ in 0..FUZZED {
        let raising = random_degree_raising_map(g, &mut rng);
        let deformed = conjugated_deformation(g, &raising)?;
        let psis = decompose_deformation(&deformed, g)?;
        zero += check_maurer_cartan(g, &psis).all_zero as usize;
        reassembled += same_brackets(&crate::deform::reassemble(g, &psis), &deformed) as usize;
        let (bad, mut check) = corrupt_one_entry(g, &psis, &mut rng);
        check.detected = !check_maurer_cartan(g, &bad).all_zero;
        corruptions.push(check);
    }

    let t = gsum.torus()?;
    let weight_vanishing = (1..field.p() as i64)
        .map(|k| weight_vanishing_check(g, &t, k))
        .collect::<Result<Vec<_>>>()?;

    Ok(DeformReport {
        p: field.p(),
        dim: n,
        dd_samples,
        dd_zero,
        sl2_weights: spsis.iter().map(|(s, _)| *s).collect(),
        sl2_round_trip,
        sl2_reassembles,
        fuzzed: FUZZED,
        fuzzed_zero_residual: zero,
        fuzzed_reassemble: reassembled,
        corruptions,
        weight_vanishing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmokeFamily {
    pub name: String,
    pub generated: usize,
    pub decomposition_verified: usize,
    pub solvable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmokeReport {
    pub p: u32,
    pub generated: usize,
    pub decomposition_verified: usize,
    pub solvable: usize,
    pub families: Vec<SmokeFamily>,
    pub dims: Vec<usize>,
}

/// A decomposable algebra together with its nilpotent summands.
pub struct Decomposable {
    pub algebra: LieAlgebra,
    pub a: Subspace,
    pub b: Subspace,
}

fn coords_in(u: &Subspace, v: &Subspace) -> Subspace {
    let vs: Vec<Vec<u32>> = v
        .basis()
        .map(|x| u.coordinates(x).expect("v ⊆ u"))
        .collect();
    Subspace::span(u.field(), u.dim(), &vs)
}

/// A subspace of the diagonal plus all strictly upper-triangular matrices.
pub fn random_triangular_sum<R: Rng + ?Sized>(field: Fp, rng: &mut R) -> Result<Decomposable> {
    let n = rng.gen_range(2..=4);
    let ut = classical::upper_triangular(field, n)?;
    let diag = classical::diagonal_subalgebra(field, n);
    let k = rng.gen_range(1..=n);
    let gens: Vec<Vec<u32>> = (0..k)
        .map(|_| diag.combination(&field.random_vector(n, rng)))
        .collect();
    let torus = Subspace::span(field, ut.dim(), &gens);
    let strict = classical::strictly_upper_subspace(field, n);
    let u = torus.sum(&strict)?;
    Ok(Decomposable {
        algebra: ut.restrict(&u)?,
        a: coords_in(&u, &torus),
        b: coords_in(&u, &strict),
    })
}

/// An abelian algebra acting on `F^k` through polynomials in one matrix.
pub fn random_abelian_extension<R: Rng + ?Sized>(field: Fp, rng: &mut R) -> Result<Decomposable> {
    let a = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=4);
    let rows: Vec<Vec<u32>> = (0..k).map(|_| field.random_vector(k, rng)).collect();
    let m = Matrix::from_rows(field, k, &rows);
    let action = (0..a)
        .map(|_| {
            let mut acc = Matrix::zeros(field, k, k);
            let mut power = Matrix::identity(field, k);
            for _ in 0..k {
                acc = acc.add(&power.scaled(field.random(rng)));
                power = power.mul(&m)?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    let l = semidirect(&LieAlgebra::abelian(field, a), &action)?;
    let dim = l.dim();
    Ok(Decomposable {
        algebra: l,
        a: Subspace::coordinate(field, dim, 0..a),
        b: Subspace::coordinate(field, dim, a..dim),
    })
}

/// `{x, y} = P⁻¹[Px, Py]` for a random invertible `P`, with the summands
/// carried along.
pub fn scramble_basis<R: Rng + ?Sized>(d: Decomposable, rng: &mut R) -> Result<Decomposable> {
    let l = &d.algebra;
    let f = l.field();
    let n = l.dim();
    let p = loop {
        let rows: Vec<Vec<u32>> = (0..n).map(|_| f.random_vector(n, rng)).collect();
        let p = Matrix::from_rows(f, n, &rows);
        if p.rank() == n {
            break p;
        }
    };
    let inv_cols: Vec<Vec<u32>> = (0..n)
        .map(|i| p.solve(&unit_vector(n, i)).expect("invertible"))
        .collect();
    let inv = Matrix::from_columns(f, n, &inv_cols);
    let cols: Vec<Vec<u32>> = (0..n).map(|i| p.column(i)).collect();
    let algebra =
        LieAlgebra::from_bracket_fn(f, n, |i, j| inv.apply(&l.bracket(&cols[i], &cols[j])));
    let pull = |s: &Subspace| s.image(&inv);
    Ok(Decomposable {
        a: pull(&d.a),
        b: pull(&d.b),
        algebra,
    })
}

/// Builds `count` decomposable algebras (alternating between the two
/// families, each in a scrambled basis) and checks that all are solvable.
pub fn theorem_smoke(field: Fp, count: usize, seed: u64) -> Result<SmokeReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut families = vec![
        SmokeFamily {
            name: "torus_plus_strictly_upper".into(),
            generated: 0,
            decomposition_verified: 0,
            solvable: 0,
        },
        SmokeFamily {
            name: "abelian_extension".into(),
            generated: 0,
            decomposition_verified: 0,
            solvable: 0,
        },
    ];
    let mut dims = Vec::with_capacity(count);
    for idx in 0..count {
        let fam = idx % 2;
        let d = if fam == 0 {
            random_triangular_sum(field, &mut rng)?
        } else {
            random_abelian_extension(field, &mut rng)?
        };
        let d = scramble_basis(d, &mut rng)?;
        d.algebra.ensure_valid()?;
        let entry = &mut families[fam];
        entry.generated += 1;
        entry.decomposition_verified += verify_decomposition(&d.algebra, &d.a, &d.b) as usize;
        entry.solvable += d.algebra.is_solvable(&d.algebra.whole())? as usize;
        dims.push(d.algebra.dim());
    }
    Ok(SmokeReport {
        p: field.p(),
        generated: families.iter().map(|f| f.generated).sum(),
        decomposition_verified: families.iter().map(|f| f.decomposition_verified).sum(),
        solvable: families.iter().map(|f| f.solvable).sum(),
        families,
        dims,
    })
}
