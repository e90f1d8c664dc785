//! Searching for `L = A + B` with `A`, `B` nilpotent subalgebras.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{par_filter_subspaces, Subspace};
use crate::liecore::{LieAlgebra, CARTAN_RETRIES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    /// `samples` random closures plus structural candidates, from `seed`.
    Randomized {
        samples: usize,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchBudget {
    /// Largest subspace lattice an exhaustive scan may enumerate.
    pub subspaces: u128,
    pub seconds: Option<f64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            subspaces: 1_000_000,
            seconds: Some(600.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    DecompositionFound,
    ExhaustedNone,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `"fast_path"`, `"exhaustive"` or `"randomized"`.
    pub source: String,
    pub dim_a: usize,
    pub dim_b: usize,
    /// RREF bases.
    pub a: Vec<Vec<u32>>,
    pub b: Vec<Vec<u32>>,
}

impl Witness {
    pub fn subspaces(&self, l: &LieAlgebra) -> (Subspace, Subspace) {
        let n = l.dim();
        (
            Subspace::span(l.field(), n, &self.a),
            Subspace::span(l.field(), n, &self.b),
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub subspaces_scanned: u128,
    pub subalgebras_found: usize,
    pub nilpotent_count: usize,
    pub pairs_eligible: u64,
    pub fast_path_tried: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_needed: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub witness: Option<Witness>,
    pub stats: SearchStats,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `A`, `B` are nilpotent subalgebras and `A + B = L`.
pub fn verify_decomposition(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> bool {
    let nil = |u: &Subspace| l.is_subalgebra(u) && l.is_nilpotent(u).unwrap_or(false);
    nil(a) && nil(b) && a.sum(b).is_ok_and(|s| s.is_full())
}

fn witness(l: &LieAlgebra, a: &Subspace, b: &Subspace, source: &str) -> Result<Witness> {
    if !verify_decomposition(l, a, b) {
        return Err(Error::Invalid(format!(
            "{source} candidate failed re-verification"
        )));
    }
    Ok(Witness {
        source: source.into(),
        dim_a: a.dim(),
        dim_b: b.dim(),
        a: a.basis_vectors(),
        b: b.basis_vectors(),
    })
}

/// `H + L²` with `H` a Cartan subalgebra, when `L²` is nilpotent.
pub fn fast_path(l: &LieAlgebra) -> Option<(Subspace, Subspace)> {
    let l2 = l.product_space(&l.whole(), &l.whole());
    if !l.is_nilpotent(&l2).ok()? {
        return None;
    }
    let h = l.cartan_subalgebra(0, CARTAN_RETRIES).ok()?;
    verify_decomposition(l, &h, &l2).then_some((h, l2))
}

fn canonical_order(a: &Subspace, b: &Subspace) -> Ordering {
    b.dim().cmp(&a.dim()).then_with(|| a.cmp(b))
}

/// First pair `(A, B)`, `A ≤ B` in canonical order, with `A + B = L`.
fn find_pair(
    l: &LieAlgebra,
    cands: &[Subspace],
    stats: &mut SearchStats,
) -> Option<(Subspace, Subspace)> {
    let n = l.dim();
    stats.pairs_eligible = (0..cands.len())
        .map(|i| {
            cands[i..]
                .iter()
                .filter(|b| cands[i].dim() + b.dim() >= n)
                .count() as u64
        })
        .sum();
    (0..cands.len()).into_par_iter().find_map_first(|i| {
        let a = &cands[i];
        cands[i..]
            .iter()
            .filter(|b| a.dim() + b.dim() >= n)
            .find(|b| a.sum(b).is_ok_and(|s| s.is_full()))
            .map(|b| (a.clone(), b.clone()))
    })
}

pub fn search_decomposition(
    l: &LieAlgebra,
    mode: SearchMode,
    budget: SearchBudget,
) -> Result<SearchResult> {
    let start = Instant::now();
    let mut stats = SearchStats {
        fast_path_tried: true,
        ..SearchStats::default()
    };
    let done = |status, witness, stats| {
        Ok(SearchResult {
            status,
            witness,
            stats,
            elapsed: start.elapsed(),
        })
    };
    if let Some((h, l2)) = fast_path(l) {
        let w = witness(l, &h, &l2, "fast_path")?;
        return done(SearchStatus::DecompositionFound, Some(w), stats);
    }

    let deadline = budget.seconds.map(|s| start + Duration::from_secs_f64(s));
    let timed_out = AtomicBool::new(false);
    let past_deadline = || {
        if deadline.is_some_and(|d| Instant::now() > d) {
            timed_out.store(true, AtomicOrdering::Relaxed);
            true
        } else {
            false
        }
    };

    let (mut cands, source) = match mode {
        SearchMode::Exhaustive => {
            let scan = par_filter_subspaces(l.field(), l.dim(), None, budget.subspaces, |s| {
                !past_deadline() && l.is_subalgebra(s)
            });
            let (subalgebras, scanned) = match scan {
                Ok(x) => x,
                Err(Error::BudgetExceeded { needed, .. }) => {
                    stats.budget_needed = Some(needed);
                    return done(SearchStatus::BudgetExhausted, None, stats);
                }
                Err(e) => return Err(e),
            };
            stats.subspaces_scanned = scanned;
            stats.subalgebras_found = subalgebras.len();
            let nil: Vec<Subspace> = subalgebras
                .into_par_iter()
                .filter(|s| l.is_nilpotent(s).unwrap_or(false))
                .collect();
            (nil, "exhaustive")
        }
        SearchMode::Randomized { samples, seed } => {
            let subalgebras = random_candidates(l, samples, seed, &past_deadline);
            stats.subspaces_scanned = samples as u128;
            stats.subalgebras_found = subalgebras.len();
            let nil: Vec<Subspace> = subalgebras
                .into_iter()
                .filter(|s| l.is_nilpotent(s).unwrap_or(false))
                .collect();
            (nil, "randomized")
        }
    };
    if timed_out.load(AtomicOrdering::Relaxed) {
        return done(SearchStatus::BudgetExhausted, None, stats);
    }
    cands.sort_by(canonical_order);
    stats.nilpotent_count = cands.len();
    match find_pair(l, &cands, &mut stats) {
        Some((a, b)) => {
            let w = witness(l, &a, &b, source)?;
            done(SearchStatus::DecompositionFound, Some(w), stats)
        }
        None if mode == SearchMode::Exhaustive => done(SearchStatus::ExhaustedNone, None, stats),
        // a random search cannot rule decompositions out
        None => done(SearchStatus::BudgetExhausted, None, stats),
    }
}

fn sparse_random<R: Rng>(l: &LieAlgebra, rng: &mut R) -> Vec<u32> {
    let f = l.field();
    loop {
        let v: Vec<u32> = (0..l.dim())
            .map(|_| if rng.gen_bool(0.4) { f.random(rng) } else { 0 })
            .collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

/// Distinct subalgebras from structural constructions and random closures,
/// deterministic in `seed`.
fn random_candidates(
    l: &LieAlgebra,
    samples: usize,
    seed: u64,
    stop: &dyn Fn() -> bool,
) -> BTreeSet<Subspace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = l.field();
    let n = l.dim();
    let mut out = BTreeSet::new();
    let whole = l.whole();
    out.insert(Subspace::zero(f, n));
    out.insert(whole.clone());
    out.insert(l.center());
    let mut structural = Vec::new();
    for series in [l.derived_series(&whole), l.lower_central_series(&whole)]
        .into_iter()
        .flatten()
    {
        structural.extend(series.chain);
    }
    for t in structural {
        out.insert(l.subalgebra_closure(&l.centralizer(&t)));
        out.insert(t);
    }
    for k in 0..samples {
        if stop() {
            break;
        }
        let x = sparse_random(l, &mut rng);
        if k % 4 == 0 {
            let fit = l.fitting_null_component(&x);
            if l.is_subalgebra(&fit) {
                out.insert(fit);
            }
            let c = l.centralizer(&Subspace::span(f, n, std::slice::from_ref(&x)));
            out.insert(l.subalgebra_closure(&c));
        }
        let extra = rng.gen_range(0..3);
        let mut gens = vec![x];
        for _ in 0..extra {
            gens.push(sparse_random(l, &mut rng));
        }
        out.insert(l.subalgebra_closure(&Subspace::span(f, n, &gens)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{classical, module_example};
    use crate::exactlin::Fp;

    #[test]
    fn sl2_has_no_decomposition() {
        let l = classical::sl2(Fp::new(7).unwrap()).unwrap();
        let r = search_decomposition(&l, SearchMode::Exhaustive, SearchBudget::default()).unwrap();
        assert_eq!(r.status, SearchStatus::ExhaustedNone);
        assert_eq!(r.stats.subspaces_scanned, 2 * 57 + 2);
        assert!(r.witness.is_none());
    }

    #[test]
    fn upper_triangular_via_fast_path() {
        let f = Fp::new(7).unwrap();
        let l = classical::upper_triangular(f, 3).unwrap();
        let r = search_decomposition(&l, SearchMode::Exhaustive, SearchBudget::default()).unwrap();
        assert_eq!(r.status, SearchStatus::DecompositionFound);
        let w = r.witness.unwrap();
        assert_eq!(w.source, "fast_path");
        let (a, b) = w.subspaces(&l);
        assert_eq!(a.dim(), 3);
        assert_eq!(b, classical::strictly_upper_subspace(f, 3));
    }

    #[test]
    fn heisenberg_weyl_randomized() {
        let f = Fp::new(5).unwrap();
        let l = module_example("heisenberg_weyl", f)
            .unwrap()
            .semidirect()
            .unwrap();
        let mode = SearchMode::Randomized {
            samples: 200,
            seed: 7,
        };
        let r = search_decomposition(&l, mode, SearchBudget::default()).unwrap();
        assert_eq!(r.status, SearchStatus::DecompositionFound);
        let again = search_decomposition(&l, mode, SearchBudget::default()).unwrap();
        assert_eq!(
            r,
            SearchResult {
                elapsed: r.elapsed,
                ..again
            }
        );
    }

    #[test]
    fn over_budget_is_reported() {
        let l = classical::sl2(Fp::new(7).unwrap()).unwrap();
        let budget = SearchBudget {
            subspaces: 10,
            seconds: None,
        };
        let r = search_decomposition(&l, SearchMode::Exhaustive, budget).unwrap();
        assert_eq!(r.status, SearchStatus::BudgetExhausted);
        assert_eq!(r.stats.budget_needed, Some(116));
    }
}
