//! `check`, `search`, `remarks` and `serialize`.

use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{classical, module_example};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::liecore::{LieAlgebra, CARTAN_RETRIES};

use super::file::save_algebra;
use super::report::Report;
use super::search::{
    search_decomposition, verify_decomposition, SearchBudget, SearchMode, SearchResult,
    SearchStatus,
};
use super::spec::AlgebraSpec;

/// Budget for projective scans (one-dimensional ideals).
pub const POINT_SCAN_BUDGET: u128 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Solvable,
    Nilpotent,
    Center,
    OneDimIdeals,
    DerivedSeries,
    LowerCentralSeries,
    Cartan,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::Solvable,
        Predicate::Nilpotent,
        Predicate::Center,
        Predicate::OneDimIdeals,
        Predicate::DerivedSeries,
        Predicate::LowerCentralSeries,
        Predicate::Cartan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Solvable => "solvable",
            Predicate::Nilpotent => "nilpotent",
            Predicate::Center => "center",
            Predicate::OneDimIdeals => "one_dim_ideals",
            Predicate::DerivedSeries => "derived_series",
            Predicate::LowerCentralSeries => "lower_central_series",
            Predicate::Cartan => "cartan",
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown predicate '{s}'")))
    }
}

fn run_predicate(l: &LieAlgebra, p: Predicate) -> Result<Value> {
    let whole = l.whole();
    Ok(match p {
        Predicate::Solvable => json!(l.is_solvable(&whole)?),
        Predicate::Nilpotent => json!(l.is_nilpotent(&whole)?),
        Predicate::Center => json!(l.center().basis_vectors()),
        Predicate::OneDimIdeals => {
            let ideals = l.one_dim_ideals(POINT_SCAN_BUDGET)?;
            json!(ideals
                .iter()
                .map(Subspace::basis_vectors)
                .collect::<Vec<_>>())
        }
        Predicate::DerivedSeries => json!(l.derived_series(&whole)?.dims()),
        Predicate::LowerCentralSeries => json!(l.lower_central_series(&whole)?.dims()),
        Predicate::Cartan => {
            let h = l.cartan_subalgebra(0, CARTAN_RETRIES)?;
            json!(h.basis_vectors())
        }
    })
}

/// Structure validation plus the requested predicates.
pub fn cmd_check(spec: &AlgebraSpec, predicates: &[Predicate]) -> Result<Report> {
    let built = spec.build()?;
    let l = &built.algebra;
    let mut report = Report::new(
        "check",
        json!({
            "spec": spec.to_string(),
            "predicates": predicates.iter().map(|p| p.name()).collect::<Vec<_>>(),
        }),
    );
    let v = l.validate_structure();
    report.push(&json!({
        "predicate": "validate",
        "value": {
            "valid": v.is_valid(),
            "triples_checked": v.triples_checked,
            "violations": v.violations,
        }
    }))?;
    for &p in predicates {
        report.push(&json!({"predicate": p.name(), "value": run_predicate(l, p)?}))?;
    }
    report.stat("dim", l.dim())?;
    report.stat("p", l.field().p())?;
    Ok(report)
}

fn search_value(spec: &str, l: &LieAlgebra, r: &SearchResult) -> Result<Value> {
    let mut v = serde_json::to_value(r)?;
    if let Value::Object(m) = &mut v {
        m.insert("spec".into(), json!(spec));
        m.insert("dim".into(), json!(l.dim()));
    }
    Ok(v)
}

fn mode_params(mode: SearchMode) -> (Value, Option<u64>) {
    match mode {
        SearchMode::Exhaustive => (json!("exhaustive"), None),
        SearchMode::Randomized { samples, seed } => {
            (json!({"randomized": {"samples": samples}}), Some(seed))
        }
    }
}

pub fn cmd_search(spec: &AlgebraSpec, mode: SearchMode, budget: SearchBudget) -> Result<Report> {
    let built = spec.build()?;
    let (mode_v, seed) = mode_params(mode);
    let mut report = Report::new(
        "search",
        json!({
            "spec": spec.to_string(),
            "mode": mode_v,
            "budget_subspaces": budget.subspaces,
        }),
    );
    report.seed = seed;
    let r = search_decomposition(&built.algebra, mode, budget)?;
    report.push(&search_value(&spec.to_string(), &built.algebra, &r)?)?;
    report.stat("status", r.status)?;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RemarksParams {
    /// Prime and largest size for the triangular family.
    pub p_triangular: u32,
    pub n_max: usize,
    pub p_heisenberg: u32,
    pub p_two_dim: u32,
    pub seed: u64,
    pub samples: usize,
}

impl Default for RemarksParams {
    fn default() -> Self {
        RemarksParams {
            p_triangular: 7,
            n_max: 4,
            p_heisenberg: 5,
            p_two_dim: 3,
            seed: 1,
            samples: 200,
        }
    }
}

impl RemarksParams {
    /// Every sub-experiment at the same prime.
    pub fn at_prime(p: u32) -> Self {
        RemarksParams {
            p_triangular: p,
            p_heisenberg: p,
            p_two_dim: p,
            ..RemarksParams::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularRemark {
    pub n: usize,
    pub status: SearchStatus,
    pub via_fast_path: bool,
    /// Diagonal matrices plus strictly upper-triangular matrices.
    pub diagonal_witness_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeisenbergRemark {
    pub p: u32,
    pub dim: usize,
    pub search_status: SearchStatus,
    /// The Heisenberg copy and the module `V`.
    pub constructed_witness_verified: bool,
    pub one_dim_ideals: usize,
    pub decomposes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoDimRemark {
    pub p: u32,
    pub dim: usize,
    pub status: SearchStatus,
    pub subspaces_scanned: u128,
    pub matches_expectation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
}

pub fn triangular_remark(p: u32, n: usize, budget: SearchBudget) -> Result<TriangularRemark> {
    let f = crate::exactlin::Fp::new(p)?;
    let l = classical::upper_triangular(f, n)?;
    let r = search_decomposition(&l, SearchMode::Exhaustive, budget)?;
    Ok(TriangularRemark {
        n,
        status: r.status,
        via_fast_path: r.witness.as_ref().is_some_and(|w| w.source == "fast_path"),
        diagonal_witness_verified: verify_decomposition(
            &l,
            &classical::diagonal_subalgebra(f, n),
            &classical::strictly_upper_subspace(f, n),
        ),
    })
}

pub fn heisenberg_remark(p: u32, samples: usize, seed: u64) -> Result<HeisenbergRemark> {
    let f = crate::exactlin::Fp::new(p)?;
    let ex = module_example("heisenberg_weyl", f)?;
    let l = ex.semidirect()?;
    let n = l.dim();
    let r = search_decomposition(
        &l,
        SearchMode::Randomized { samples, seed },
        SearchBudget::default(),
    )?;
    let h = Subspace::coordinate(f, n, 0..3);
    let v = Subspace::coordinate(f, n, 3..n);
    let constructed = verify_decomposition(&l, &h, &v);
    Ok(HeisenbergRemark {
        p,
        dim: n,
        search_status: r.status,
        constructed_witness_verified: constructed,
        one_dim_ideals: l.one_dim_ideals(POINT_SCAN_BUDGET)?.len(),
        decomposes: r.status == SearchStatus::DecompositionFound || constructed,
    })
}

pub fn two_dim_remark(p: u32, budget: SearchBudget) -> Result<TwoDimRemark> {
    let f = crate::exactlin::Fp::new(p)?;
    let l = module_example("two_dim_nonabelian", f)?.semidirect()?;
    let r = search_decomposition(&l, SearchMode::Exhaustive, budget)?;
    let discrepancy = (r.status == SearchStatus::DecompositionFound).then(|| {
        let w = r.witness.as_ref().expect("witness present when found");
        format!(
            "found nilpotent subalgebras of dims {} and {} summing to L over GF({p})",
            w.dim_a, w.dim_b
        )
    });
    Ok(TwoDimRemark {
        p,
        dim: l.dim(),
        status: r.status,
        subspaces_scanned: r.stats.subspaces_scanned,
        matches_expectation: r.status == SearchStatus::ExhaustedNone,
        discrepancy,
    })
}

pub fn cmd_remarks(params: RemarksParams, budget: SearchBudget) -> Result<Report> {
    let mut report = Report::new(
        "remarks",
        json!({
            "p_triangular": params.p_triangular,
            "n_max": params.n_max,
            "p_heisenberg": params.p_heisenberg,
            "p_two_dim": params.p_two_dim,
            "samples": params.samples,
        }),
    );
    report.seed = Some(params.seed);
    let tri = (2..=params.n_max)
        .map(|n| triangular_remark(params.p_triangular, n, budget))
        .collect::<Result<Vec<_>>>()?;
    let heis = heisenberg_remark(params.p_heisenberg, params.samples, params.seed)?;
    let two = two_dim_remark(params.p_two_dim, budget)?;
    report.push(&json!({"part": "triangular", "items": tri}))?;
    report.push(&json!({"part": "heisenberg_weyl", "item": heis}))?;
    report.push(&json!({"part": "two_dim_nonabelian", "item": two}))?;
    report.stat(
        "triangular_all_decompose",
        tri.iter()
            .all(|t| t.status == SearchStatus::DecompositionFound),
    )?;
    report.stat(
        "heisenberg_decomposes_without_line_ideal",
        heis.decomposes && heis.one_dim_ideals == 0,
    )?;
    report.stat("two_dim_matches_expectation", two.matches_expectation)?;
    Ok(report)
}

/// Writes the algebra file for `spec` and reports what was written.
pub fn cmd_serialize(spec: &AlgebraSpec, out: &Path) -> Result<Report> {
    let built = spec.build()?;
    save_algebra(out, &built.algebra, built.grading.as_deref())?;
    let mut report = Report::new("serialize", json!({"spec": spec.to_string()}));
    report.push(&json!({
        "dim": built.algebra.dim(),
        "entries": built.algebra.structure_constants().len(),
        "graded": built.grading.is_some(),
    }))?;
    Ok(report)
}
