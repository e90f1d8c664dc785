//! The general Witt algebra `W_m = Der(O_m)` and the Zassenhaus algebra `W_1(n)`.

use crate::error::{Error, Result};
use crate::exactlin::{Fp, Matrix, Subspace};
use crate::liecore::LieAlgebra;

use super::graded::GradedAlgebra;
use super::poly::{Derivation, TruncatedPoly, TruncatedPolyAlgebra};

/// `W_m` with basis `x^a ∂_i`, index `i · p^m + index(x^a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittAlgebra {
    om: TruncatedPolyAlgebra,
    algebra: LieAlgebra,
}

/// Result of the invariant-ideal test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantIdealReport {
    /// A proper nonzero D-invariant ideal exists.
    pub proper: bool,
    /// The smallest nonzero D-invariant ideal: the closure of the socle.
    pub minimal_ideal: Subspace,
}

impl WittAlgebra {
    /// Fails when `m · p^m` exceeds `budget`.
    pub fn new(field: Fp, m: usize, budget: usize) -> Result<Self> {
        let om = TruncatedPolyAlgebra::new(field, m, budget)?;
        let dim = m * om.dim();
        if dim > budget {
            return Err(Error::BudgetExceeded {
                needed: dim as u128,
                budget: budget as u128,
            });
        }
        let np = om.dim();
        let algebra = LieAlgebra::from_bracket_fn(field, dim, |u, v| {
            let (i, a) = (u / np, u % np);
            let (j, b) = (v / np, v % np);
            let fa = om.monomial_at(a);
            let fb = om.monomial_at(b);
            // [f∂_i, g∂_j] = f(∂_i g)∂_j − g(∂_j f)∂_i
            let mut out = vec![0; dim];
            let t1 = fa.mul(&fb.partial(i));
            let t2 = fb.mul(&fa.partial(j));
            for (k, &c) in t1.coeffs().iter().enumerate() {
                out[j * np + k] = field.add(out[j * np + k], c);
            }
            for (k, &c) in t2.coeffs().iter().enumerate() {
                out[i * np + k] = field.sub(out[i * np + k], c);
            }
            out
        });
        let labels = (0..dim)
            .map(|u| {
                let (i, a) = (u / np, u % np);
                match om.monomial_label(a).as_str() {
                    "1" => format!("d{}", i + 1),
                    mono => format!("{mono}*d{}", i + 1),
                }
            })
            .collect();
        Ok(WittAlgebra {
            om,
            algebra: algebra.with_labels(labels),
        })
    }

    pub fn om(&self) -> &TruncatedPolyAlgebra {
        &self.om
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> Fp {
        self.om.field()
    }

    pub fn index(&self, var: usize, mono: usize) -> usize {
        var * self.om.dim() + mono
    }

    /// `∂/∂x_{i+1}` as a vector.
    pub fn partial(&self, i: usize) -> Vec<u32> {
        crate::exactlin::unit_vector(self.algebra.dim(), self.index(i, 0))
    }

    pub fn element(&self, f: &TruncatedPoly, var: usize) -> Vec<u32> {
        let mut v = vec![0; self.algebra.dim()];
        let np = self.om.dim();
        v[var * np..(var + 1) * np].copy_from_slice(f.coeffs());
        v
    }

    pub fn derivation(&self, v: &[u32]) -> Derivation {
        let np = self.om.dim();
        Derivation::new(
            (0..self.om.vars())
                .map(|i| self.om.from_coeffs(v[i * np..(i + 1) * np].to_vec()))
                .collect(),
        )
    }

    pub fn vector(&self, d: &Derivation) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.algebra.dim());
        for c in d.components() {
            v.extend_from_slice(c.coeffs());
        }
        v
    }

    /// `(W_m)_0`: derivations whose components have no constant term.
    pub fn zeroth_term(&self) -> Subspace {
        let np = self.om.dim();
        Subspace::coordinate(
            self.field(),
            self.algebra.dim(),
            (0..self.algebra.dim()).filter(|u| u % np != 0),
        )
    }

    /// Operators on `O_m` of the RREF basis of `d`.
    pub fn operators(&self, d: &Subspace) -> Vec<Matrix> {
        d.basis()
            .map(|v| self.derivation(v).operator_matrix())
            .collect()
    }

    /// Whether every element of `d` acts nilpotently on `O_m`.
    ///
    /// By Engel's theorem a Lie algebra of operators consists of nilpotent
    /// operators iff the associative algebra it generates is nilpotent, which
    /// is decided by iterating `V ← Σ_k d_k(V)` from `V = O_m` until it vanishes
    /// or stalls.
    pub fn consists_of_nilpotent(&self, d: &Subspace) -> bool {
        operators_act_nilpotently(&self.operators(d), self.om.dim())
    }

    /// Closure of the socle under multiplication by each `x_i` and under `d`.
    pub fn invariant_ideal_report(&self, d: &Subspace) -> InvariantIdealReport {
        let mut ops: Vec<Matrix> = (0..self.om.vars())
            .map(|i| self.om.mult_matrix(&self.om.var(i)))
            .collect();
        ops.extend(self.operators(d));
        let closure = closure_under(&self.om.socle(), &ops);
        InvariantIdealReport {
            proper: !closure.is_full(),
            minimal_ideal: closure,
        }
    }

    /// Whether `O_m` has a proper nonzero ideal stable under every element of `d`.
    pub fn has_proper_invariant_ideal(&self, d: &Subspace) -> bool {
        self.invariant_ideal_report(d).proper
    }

    /// Whether `ideal` is an ideal of `O_m` stable under `d`.
    pub fn is_invariant_ideal(&self, d: &Subspace, ideal: &Subspace) -> bool {
        let mut ops: Vec<Matrix> = (0..self.om.vars())
            .map(|i| self.om.mult_matrix(&self.om.var(i)))
            .collect();
        ops.extend(self.operators(d));
        ops.iter()
            .all(|op| ideal.basis().all(|v| ideal.contains_vector(&op.apply(v))))
    }
}

/// Smallest subspace containing `start` and stable under every operator.
pub fn closure_under(start: &Subspace, ops: &[Matrix]) -> Subspace {
    let mut cur = start.clone();
    loop {
        let imgs: Vec<Vec<u32>> = ops
            .iter()
            .flat_map(|op| cur.basis().map(|v| op.apply(v)).collect::<Vec<_>>())
            .collect();
        let next = cur.with_vectors(&imgs);
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// Whether the associative algebra generated by `ops` is nilpotent.
pub fn operators_act_nilpotently(ops: &[Matrix], n: usize) -> bool {
    let Some(first) = ops.first() else {
        return true;
    };
    let field = first.field();
    let mut cur = Subspace::full(field, n);
    loop {
        if cur.is_zero() {
            return true;
        }
        let imgs: Vec<Vec<u32>> = ops
            .iter()
            .flat_map(|op| cur.basis().map(|v| op.apply(v)).collect::<Vec<_>>())
            .collect();
        let next = Subspace::span(field, n, &imgs);
        if next.dim() >= cur.dim() {
            return false;
        }
        cur = next;
    }
}

/// `C(n, k) mod p` via Lucas' theorem; zero outside `0 ≤ k ≤ n`.
pub fn binomial_mod_p(n: i64, k: i64, field: Fp) -> u32 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let p = field.p() as i64;
    let (mut n, mut k) = (n, k);
    let mut acc = 1u32;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        let mut c = 1u32;
        for t in 0..ki {
            c = field.mul(c, field.reduce(ni - t));
            c = field.mul(c, field.inv(field.reduce(t + 1)).expect("t + 1 < p"));
        }
        acc = field.mul(acc, c);
        n /= p;
        k /= p;
    }
    acc
}

/// The Zassenhaus algebra `W_1(n)` with its standard grading.
///
/// Basis `e_{-1}, …, e_{p^n - 2}` (index `k` holds `e_{k-1}`), bracket
/// `[e_i, e_j] = (C(i+j+1, j) − C(i+j+1, i)) e_{i+j}`. The Jacobi identity is
/// checked before returning.
pub fn zassenhaus(field: Fp, n: u32) -> Result<GradedAlgebra> {
    let dim = (field.p() as usize).pow(n);
    let top = dim as i64 - 2;
    let alg = LieAlgebra::from_bracket_fn(field, dim, |a, b| {
        let (i, j) = (a as i64 - 1, b as i64 - 1);
        let mut out = vec![0; dim];
        let s = i + j;
        if s <= top {
            let c = field.sub(
                binomial_mod_p(s + 1, j, field),
                binomial_mod_p(s + 1, i, field),
            );
            out[(s + 1) as usize] = c;
        }
        out
    })
    .with_labels((0..dim).map(|k| format!("e{}", k as i64 - 1)).collect());
    alg.ensure_valid()?;
    GradedAlgebra::new(alg, (0..dim).map(|k| k as i64 - 1).collect())
}

/// Checks `W_1(1) ≅ W_1` under `e_i ↦ x^{i+1}∂ / (i+1)!`, comparing every
/// structure constant.
pub fn zassenhaus_matches_witt(field: Fp) -> Result<bool> {
    let z = zassenhaus(field, 1)?;
    let w = WittAlgebra::new(field, 1, 1 << 16)?;
    let p = field.p() as usize;
    let mut fact = vec![1u32; p + 1];
    for k in 1..=p {
        fact[k] = field.mul(fact[k - 1], field.reduce(k as i64));
    }
    // image of e_{k-1}: x^k ∂ scaled by 1/k!
    let image = |k: usize| -> Vec<u32> {
        let mut v = vec![0; p];
        v[w.index(0, k)] = field.inv(fact[k]).expect("k < p");
        v
    };
    for a in 0..p {
        for b in 0..p {
            let zb = z.algebra().basis_bracket(a, b);
            let mut lhs = vec![0; p];
            for (k, c) in zb {
                field.axpy(&mut lhs, c, &image(k));
            }
            let rhs = w.algebra().bracket(&image(a), &image(b));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::unit_vector;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn witt_dimensions_and_bracket() {
        let w = WittAlgebra::new(f(3), 1, 1000).unwrap();
        assert_eq!(w.algebra().dim(), 3);
        let w2 = WittAlgebra::new(f(3), 2, 1000).unwrap();
        assert_eq!(w2.algebra().dim(), 18);
        // [∂, x∂] = ∂
        let d = w.partial(0);
        let xd = unit_vector(3, w.index(0, 1));
        assert_eq!(w.algebra().bracket(&d, &xd), d);
        assert_eq!(w.algebra().labels()[w.index(0, 2)], "x1^2*d1");
        assert!(WittAlgebra::new(f(5), 3, 100).is_err());
    }

    #[test]
    fn witt_bracket_matches_derivation_commutator() {
        let w = WittAlgebra::new(f(3), 2, 1000).unwrap();
        let n = w.algebra().dim();
        for a in 0..n {
            for b in 0..n {
                let (x, y) = (unit_vector(n, a), unit_vector(n, b));
                let direct = w.algebra().bracket(&x, &y);
                let via = w.vector(&w.derivation(&x).bracket(&w.derivation(&y)));
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn lucas() {
        let f5 = f(5);
        assert_eq!(binomial_mod_p(0, 0, f5), 1);
        assert_eq!(binomial_mod_p(0, -1, f5), 0);
        assert_eq!(binomial_mod_p(6, 2, f5), 0); // 15
        assert_eq!(binomial_mod_p(7, 2, f5), 1); // 21
        assert_eq!(binomial_mod_p(30, 5, f5), binomial_mod_p(6, 1, f5)); // Lucas digits (1,1,0)/(0,1,0)
    }

    #[test]
    fn zassenhaus_brackets() {
        let z = zassenhaus(f(5), 1).unwrap();
        let l = z.algebra();
        // [e_{-1}, e_0] = e_{-1}
        assert_eq!(l.basis_bracket(0, 1), vec![(0, 1)]);
        for i in -1..=3i64 {
            let b = l.basis_bracket(1, (i + 1) as usize);
            let expected = f(5).reduce(i);
            if expected == 0 {
                assert!(b.is_empty());
            } else {
                assert_eq!(b, vec![((i + 1) as usize, expected)]);
            }
        }
        let z2 = zassenhaus(f(5), 2).unwrap();
        assert_eq!(z2.dim(), 25);
        assert_eq!(z2.occupied_degrees().first(), Some(&-1));
        assert_eq!(z2.occupied_degrees().last(), Some(&23));
    }

    #[test]
    fn zassenhaus_is_witt_for_n1() {
        assert!(zassenhaus_matches_witt(f(5)).unwrap());
        assert!(zassenhaus_matches_witt(f(7)).unwrap());
    }

    #[test]
    fn invariant_ideals() {
        let w = WittAlgebra::new(f(5), 1, 1000).unwrap();
        let n = w.algebra().dim();
        let d = Subspace::span(w.field(), n, &[w.partial(0)]);
        let r = w.invariant_ideal_report(&d);
        assert!(!r.proper);
        assert!(r.minimal_ideal.is_full());

        let zero = Subspace::zero(w.field(), n);
        let r = w.invariant_ideal_report(&zero);
        assert!(r.proper);
        assert_eq!(r.minimal_ideal, w.om().socle());
        assert!(w.is_invariant_ideal(&zero, &w.om().maximal_ideal()));

        let euler = Subspace::span(w.field(), n, &[unit_vector(n, w.index(0, 1))]);
        assert!(w.has_proper_invariant_ideal(&euler));
        assert!(w.is_invariant_ideal(&euler, &w.om().maximal_ideal()));
        assert!(!w.is_invariant_ideal(&d, &w.om().maximal_ideal()));
    }

    #[test]
    fn nilpotent_families() {
        let w = WittAlgebra::new(f(5), 1, 1000).unwrap();
        let n = w.algebra().dim();
        let d = Subspace::span(w.field(), n, &[w.partial(0)]);
        assert!(w.consists_of_nilpotent(&d));
        let euler = Subspace::span(w.field(), n, &[unit_vector(n, w.index(0, 1))]);
        assert!(!w.consists_of_nilpotent(&euler));
        // ∂ and x^2∂ are each nilpotent but their span is not (contains ∂ + x^2∂ ~ sl2 element)
        let mix = Subspace::span(w.field(), n, &[w.partial(0), unit_vector(n, w.index(0, 2))]);
        assert!(!w.consists_of_nilpotent(&mix));
    }
}
