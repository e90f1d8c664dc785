//! Descending filtrations `L = L_min ⊇ … ⊇ L_max ⊋ 0` with
//! `[L_i, L_j] ⊆ L_{i+j}`, and the filtration determined by a subalgebra.

use std::collections::HashSet;

use serde::Serialize;

use crate::construct::witt::closure_under;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::liecore::LieAlgebra;

/// Above this many projective points the minimal-submodule search falls back
/// to generators drawn from basis vectors.
pub const EXACT_SUBMODULE_SCAN_LIMIT: u128 = 20_000;

/// How `L_{-1}` was chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmoduleChoice {
    /// `"exact-scan"` or `"basis-refinement"`.
    pub rule: String,
    pub generator: Vec<u32>,
    /// Dimension of the chosen submodule of `L/L_0`.
    pub quotient_dim: usize,
    /// Number of distinct submodules of that dimension met during the search.
    pub distinct_minimal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    min_index: i64,
    /// `terms[k] = L_{min_index + k}`; the term after the last is zero.
    terms: Vec<Subspace>,
    choice: Option<SubmoduleChoice>,
}

impl Filtration {
    /// Validates a filtration of the subalgebra `terms[0]` of `l`.
    pub fn new(l: &LieAlgebra, min_index: i64, mut terms: Vec<Subspace>) -> Result<Self> {
        while terms.last().is_some_and(Subspace::is_zero) {
            terms.pop();
        }
        if terms.is_empty() {
            return Err(Error::Invalid("filtration has no nonzero term".into()));
        }
        for w in terms.windows(2) {
            if !w[0].contains(&w[1])? {
                return Err(Error::Invalid("filtration terms are not descending".into()));
            }
        }
        let f = Filtration {
            min_index,
            terms,
            choice: None,
        };
        if let Some((i, j)) = f.compatibility_violation(l) {
            return Err(Error::Invalid(format!(
                "[L_{i}, L_{j}] is not contained in L_{}",
                i + j
            )));
        }
        Ok(f)
    }

    pub fn min_index(&self) -> i64 {
        self.min_index
    }

    pub fn max_index(&self) -> i64 {
        self.min_index + self.terms.len() as i64 - 1
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        self.min_index..=self.max_index()
    }

    pub fn whole(&self) -> &Subspace {
        &self.terms[0]
    }

    pub fn choice(&self) -> Option<&SubmoduleChoice> {
        self.choice.as_ref()
    }

    /// `L_i`, with `L_i = L_min` below the range and `0` above it.
    pub fn term(&self, i: i64) -> Subspace {
        if i <= self.min_index {
            self.terms[0].clone()
        } else if i > self.max_index() {
            Subspace::zero(self.terms[0].field(), self.terms[0].ambient_dim())
        } else {
            self.terms[(i - self.min_index) as usize].clone()
        }
    }

    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.indices().map(|i| (i, self.term(i).dim())).collect()
    }

    /// First index pair with `[L_i, L_j] ⊄ L_{i+j}`, if any.
    pub fn compatibility_violation(&self, l: &LieAlgebra) -> Option<(i64, i64)> {
        for i in self.indices() {
            for j in self.indices().filter(|&j| j >= i) {
                let prod = l.product_space(&self.term(i), &self.term(j));
                if !self.term(i + j).contains(&prod).expect("same ambient") {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `B_i = B ∩ L_i`.
    pub fn induced(&self, l: &LieAlgebra, b: &Subspace) -> Result<Filtration> {
        if !l.is_subalgebra(b) {
            return Err(Error::NotClosed);
        }
        let terms = self
            .indices()
            .map(|i| b.intersect(&self.term(i)))
            .collect::<Result<Vec<_>>>()?;
        if b.is_zero() {
            return Err(Error::Invalid("cannot filter the zero subalgebra".into()));
        }
        Filtration::new(l, self.min_index, terms)
    }
}

fn ad_operators(l: &LieAlgebra, u: &Subspace) -> Vec<Matrix> {
    u.basis().map(|b| l.ad_matrix(b)).collect()
}

fn choose_minimal_submodule(l: &LieAlgebra, l0: &Subspace) -> (Subspace, SubmoduleChoice) {
    let f = l.field();
    let n = l.dim();
    let ops = ad_operators(l, l0);
    let comp = l0.complement_indices();
    let c = comp.len();
    let p = f.p() as u128;
    let points = (p.pow(c as u32) - 1) / (p - 1);
    let generate = |v: &[u32]| closure_under(&l0.with_vectors(&[v]), &ops);

    let mut best: Option<(Subspace, Vec<u32>)> = None;
    let mut seen_min: HashSet<Subspace> = HashSet::new();
    let mut consider =
        |sub: Subspace, v: Vec<u32>, best: &mut Option<(Subspace, Vec<u32>)>| match best {
            Some((b, _)) if sub.dim() > b.dim() => {}
            Some((b, _)) if sub.dim() == b.dim() => {
                seen_min.insert(sub);
            }
            _ => {
                seen_min.clear();
                seen_min.insert(sub.clone());
                *best = Some((sub, v));
            }
        };
    let rule;
    if points <= EXACT_SUBMODULE_SCAN_LIMIT {
        rule = "exact-scan";
        // projective points of the complement coordinates, leading entry 1
        for lead in 0..c {
            let count = (f.p() as u64).pow((c - lead - 1) as u32);
            for idx in 0..count {
                let mut v = vec![0u32; n];
                v[comp[lead]] = 1;
                let mut rem = idx;
                for k in (lead + 1..c).rev() {
                    v[comp[k]] = (rem % f.p() as u64) as u32;
                    rem /= f.p() as u64;
                }
                let sub = generate(&v);
                consider(sub, v, &mut best);
            }
        }
    } else {
        rule = "basis-refinement";
        for &j in &comp {
            let v = crate::exactlin::unit_vector(n, j);
            let sub = generate(&v);
            consider(sub, v, &mut best);
        }
        // shrink while some basis vector of the current choice generates less
        loop {
            let (cur, _) = best.clone().expect("codimension ≥ 1");
            let mut improved = false;
            for v in cur.basis() {
                let r = l0.reduce(v);
                if crate::exactlin::is_zero(&r) {
                    continue;
                }
                let sub = generate(&r);
                if sub.dim() < cur.dim() {
                    consider(sub, r, &mut best);
                    improved = true;
                    break;
                }
            }
            if !improved {
                break;
            }
        }
    }
    let (sub, generator) = best.expect("codimension ≥ 1");
    let choice = SubmoduleChoice {
        rule: rule.to_string(),
        generator,
        quotient_dim: sub.dim() - l0.dim(),
        distinct_minimal: seen_min.len(),
    };
    (sub, choice)
}

/// The filtration determined by a proper subalgebra `L_0`.
///
/// `L_{-1}` is `L_0` plus a minimal `L_0`-submodule of `L/L_0` (see
/// [`SubmoduleChoice`]); then `L_{i+1} = {x ∈ L_i : [x, L_{-1}] ⊆ L_i}` for
/// `i ≥ 0` and `L_{-i-1} = [L_{-i}, L_{-1}] + L_{-i}`, each to stabilization.
pub fn weisfeiler_filtration(l: &LieAlgebra, l0: &Subspace) -> Result<Filtration> {
    if !l.is_subalgebra(l0) {
        return Err(Error::NotClosed);
    }
    if l0.is_full() {
        return Err(Error::Invalid("L_0 must be a proper subalgebra".into()));
    }
    let (lm1, choice) = choose_minimal_submodule(l, l0);

    let mut down = vec![l0.clone()];
    loop {
        let cur = down.last().unwrap();
        let next = cur.intersect(&l.bracket_preimage(&lm1, cur))?;
        if next == *cur {
            if !cur.is_zero() {
                return Err(Error::Invalid(format!(
                    "descending terms stabilize at a nonzero subspace of dimension {}",
                    cur.dim()
                )));
            }
            break;
        }
        let zero = next.is_zero();
        down.push(next);
        if zero {
            break;
        }
    }

    let mut up = vec![lm1.clone()];
    loop {
        let cur = up.last().unwrap();
        let next = l.product_space(cur, &lm1).sum(cur)?;
        if next == *cur {
            break;
        }
        up.push(next);
    }
    if !up.last().unwrap().is_full() {
        return Err(Error::Invalid(
            "ascending terms stabilize below the whole algebra".into(),
        ));
    }
    let min_index = -(up.len() as i64);
    let mut terms: Vec<Subspace> = up.into_iter().rev().collect();
    terms.extend(down);
    let mut filt = Filtration::new(l, min_index, terms)?;
    filt.choice = Some(choice);
    Ok(filt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::classical;
    use crate::exactlin::{unit_vector, Fp};

    #[test]
    fn sl2_borel() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        let borel = Subspace::span(f, 3, &[unit_vector(3, 0), unit_vector(3, 1)]);
        let filt = weisfeiler_filtration(&l, &borel).unwrap();
        assert_eq!(filt.min_index(), -1);
        assert!(filt.term(-1).is_full());
        assert_eq!(filt.term(0), borel);
        assert_eq!(filt.term(1), Subspace::span(f, 3, &[unit_vector(3, 0)]));
        assert!(filt.term(2).is_zero());
        assert_eq!(filt.choice().unwrap().rule, "exact-scan");
    }

    #[test]
    fn rejects_bad_l0() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        let ef = Subspace::span(f, 3, &[unit_vector(3, 0), unit_vector(3, 2)]);
        assert_eq!(weisfeiler_filtration(&l, &ef), Err(Error::NotClosed));
        assert!(weisfeiler_filtration(&l, &l.whole()).is_err());
    }

    #[test]
    fn rejects_incompatible_terms() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        // L ⊇ ⟨h⟩: [L_0, L_0] = L is not inside L_0 = ⟨h⟩
        let terms = vec![l.whole(), Subspace::span(f, 3, &[unit_vector(3, 1)])];
        assert!(Filtration::new(&l, 0, terms).is_err());
    }
}
