//! Subalgebras `D ⊆ W_m` of nilpotent derivations with no proper nonzero
//! `D`-invariant ideal of `O_m`, and the bound `dim D < p^m`.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::{Derivation, WittAlgebra};
use crate::error::Result;
use crate::exactlin::{par_filter_subspaces, Fp, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    /// Every subspace of `W_m`, refusing to start above `budget` subspaces.
    Exhaustive { budget: u128 },
    /// Closures of 1 to 3 random nilpotent derivations.
    Sample { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub p: u32,
    pub m: usize,
    pub mode: String,
    pub seed: Option<u64>,
    /// Subspaces scanned or samples drawn.
    pub candidates: u128,
    /// Nonzero subalgebras met (exhaustive) or generated (sample).
    pub subalgebras: usize,
    /// Subalgebras consisting of nilpotent derivations.
    pub nilpotent_element: usize,
    /// Sampled closures dropped because some element is not nilpotent.
    pub discarded_non_nilpotent: usize,
    /// Nilpotent-element subalgebras with no proper invariant ideal.
    pub qualifying: usize,
    pub distinct_qualifying: usize,
    pub qualifying_dims: BTreeMap<usize, usize>,
    /// `p^m`
    pub bound: usize,
    pub all_below_bound: bool,
    pub all_one_dimensional: bool,
}

fn qualifies(w: &WittAlgebra, d: &Subspace) -> (bool, bool) {
    let nil = w.consists_of_nilpotent(d);
    (nil, nil && !w.has_proper_invariant_ideal(d))
}

/// `Σ f_i ∂_i` with `f_i` a polynomial in `x_{i+1}, …, x_m` only.
pub fn random_triangular<R: Rng + ?Sized>(w: &WittAlgebra, rng: &mut R) -> Derivation {
    let om = w.om();
    let f = om.field();
    let comps = (0..om.vars())
        .map(|i| {
            let coeffs = (0..om.dim())
                .map(|k| {
                    if om.exponents(k)[..=i].iter().all(|&e| e == 0) {
                        f.random(rng)
                    } else {
                        0
                    }
                })
                .collect();
            om.from_coeffs(coeffs)
        })
        .collect();
    Derivation::new(comps)
}

/// A derivation with coefficients in the square of the maximal ideal; it
/// raises the standard degree and is therefore nilpotent.
pub fn random_degree_raising<R: Rng + ?Sized>(w: &WittAlgebra, rng: &mut R) -> Derivation {
    let om = w.om();
    let f = om.field();
    let comps = (0..om.vars())
        .map(|_| {
            let coeffs = (0..om.dim())
                .map(|k| {
                    if om.exponents(k).iter().sum::<u32>() >= 2 {
                        f.random(rng)
                    } else {
                        0
                    }
                })
                .collect();
            om.from_coeffs(coeffs)
        })
        .collect();
    Derivation::new(comps)
}

const MIXED_ATTEMPTS: usize = 20;

/// One of: triangular, degree-raising, or the sum of both when that sum is
/// nilpotent (falling back to triangular after a few rejections).
pub fn random_nilpotent_derivation<R: Rng + ?Sized>(w: &WittAlgebra, rng: &mut R) -> Derivation {
    match rng.gen_range(0..3) {
        0 => random_triangular(w, rng),
        1 => random_degree_raising(w, rng),
        _ => {
            for _ in 0..MIXED_ATTEMPTS {
                let a = random_triangular(w, rng);
                let b = random_degree_raising(w, rng);
                let comps = a
                    .components()
                    .iter()
                    .zip(b.components())
                    .map(|(x, y)| x.add(y))
                    .collect();
                let d = Derivation::new(comps);
                if d.nilpotency_order().is_some() {
                    return d;
                }
            }
            random_triangular(w, rng)
        }
    }
}

pub fn witt_census(field: Fp, m: usize, mode: CensusMode) -> Result<CensusReport> {
    let w = WittAlgebra::new(field, m, 1 << 16)?;
    let n = w.algebra().dim();
    let bound = w.om().dim();
    let mut dims = BTreeMap::new();
    let mut distinct = BTreeSet::new();
    let (mode_name, seed, candidates, subalgebras, nilpotent_element, discarded, qualifying);
    match mode {
        CensusMode::Exhaustive { budget } => {
            let (subs, scanned) = par_filter_subspaces(field, n, None, budget, |s| {
                !s.is_zero() && w.algebra().is_subalgebra(s)
            })?;
            let flags: Vec<(bool, bool)> = subs.iter().map(|d| qualifies(&w, d)).collect();
            for (d, &(_, q)) in subs.iter().zip(&flags) {
                if q {
                    *dims.entry(d.dim()).or_insert(0) += 1;
                    distinct.insert(d.clone());
                }
            }
            mode_name = "exhaustive";
            seed = None;
            candidates = scanned;
            subalgebras = subs.len();
            nilpotent_element = flags.iter().filter(|f| f.0).count();
            discarded = 0;
            qualifying = flags.iter().filter(|f| f.1).count();
        }
        CensusMode::Sample { samples, seed: s } => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let (mut nil, mut disc, mut qual) = (0, 0, 0);
            for _ in 0..samples {
                let k = rng.gen_range(1..=3);
                let gens: Vec<Vec<u32>> = (0..k)
                    .map(|_| w.vector(&random_nilpotent_derivation(&w, &mut rng)))
                    .collect();
                let d = w
                    .algebra()
                    .subalgebra_closure(&Subspace::span(field, n, &gens));
                let (is_nil, q) = qualifies(&w, &d);
                if !is_nil {
                    disc += 1;
                    continue;
                }
                nil += 1;
                if q {
                    qual += 1;
                    *dims.entry(d.dim()).or_insert(0) += 1;
                    distinct.insert(d);
                }
            }
            mode_name = "sample";
            seed = Some(s);
            candidates = samples as u128;
            subalgebras = samples;
            nilpotent_element = nil;
            discarded = disc;
            qualifying = qual;
        }
    }
    Ok(CensusReport {
        p: field.p(),
        m,
        mode: mode_name.to_string(),
        seed,
        candidates,
        subalgebras,
        nilpotent_element,
        discarded_non_nilpotent: discarded,
        qualifying,
        distinct_qualifying: distinct.len(),
        all_below_bound: dims.keys().all(|&d| d < bound),
        all_one_dimensional: dims.keys().all(|&d| d == 1),
        qualifying_dims: dims,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_m1_exhaustive() {
        let f = Fp::new(3).unwrap();
        let r = witt_census(f, 1, CensusMode::Exhaustive { budget: 1000 }).unwrap();
        assert_eq!(r.candidates, 28);
        assert!(r.qualifying > 0);
        assert!(r.all_one_dimensional && r.all_below_bound);
    }

    #[test]
    fn generators_are_nilpotent() {
        let f = Fp::new(3).unwrap();
        let w = WittAlgebra::new(f, 2, 1000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            assert!(random_triangular(&w, &mut rng).nilpotency_order().is_some());
            assert!(random_degree_raising(&w, &mut rng)
                .nilpotency_order()
                .is_some());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = Fp::new(3).unwrap();
        assert!(witt_census(f, 1, CensusMode::Exhaustive { budget: 10 }).is_err());
    }
}
