//! Centralizers, normalizers, Cartan subalgebras and one-dimensional ideals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};

/// Default number of random elements tried by [`LieAlgebra::cartan_subalgebra`].
pub const CARTAN_RETRIES: usize = 64;

impl LieAlgebra {
    /// `{x : [x, u] = 0 for all u ∈ U}`
    pub fn centralizer(&self, u: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for b in u.basis() {
            // x ↦ [x, b] = -ad(b) x; the sign does not change the kernel
            rows.extend(self.ad_matrix(b).row_vectors());
        }
        if rows.is_empty() {
            return self.whole();
        }
        let m = Matrix::from_rows(self.field(), n, &rows);
        Subspace::span(self.field(), n, &m.kernel())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.whole())
    }

    /// `{x : [x, U] ⊆ U}`
    pub fn normalizer(&self, u: &Subspace) -> Subspace {
        self.bracket_preimage(u, u)
    }

    /// `{x : [x, U] ⊆ T}`
    pub fn bracket_preimage(&self, u: &Subspace, target: &Subspace) -> Subspace {
        let f = self.field();
        let n = self.dim();
        let ann = target.annihilator();
        if ann.is_empty() {
            return self.whole();
        }
        let q = Matrix::from_rows(f, n, &ann);
        let mut rows = Vec::new();
        for b in u.basis() {
            rows.extend(
                q.mul(&self.ad_matrix(b))
                    .expect("shapes agree")
                    .row_vectors(),
            );
        }
        if rows.is_empty() {
            return self.whole();
        }
        Subspace::span(f, n, &Matrix::from_rows(f, n, &rows).kernel())
    }

    /// Fitting null component `ker (ad x)^dim`.
    pub fn fitting_null_component(&self, x: &[u32]) -> Subspace {
        let m = self.ad_matrix(x).pow(self.dim() as u64).expect("square");
        Subspace::span(self.field(), self.dim(), &m.kernel())
    }

    /// The Fitting null component of `x` if it is a Cartan subalgebra.
    pub fn cartan_from_element(&self, x: &[u32]) -> Option<Subspace> {
        let h = self.fitting_null_component(x);
        let ok = self.is_subalgebra(&h)
            && self.is_nilpotent(&h).unwrap_or(false)
            && self.normalizer(&h) == h;
        ok.then_some(h)
    }

    /// A Cartan subalgebra found as the null component of a pseudo-random element.
    ///
    /// Deterministic in `seed`. The result is checked to be nilpotent and
    /// self-normalizing before it is returned.
    pub fn cartan_subalgebra(&self, seed: u64, retries: usize) -> Result<Subspace> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..retries {
            let x = self.field().random_vector(self.dim(), &mut rng);
            if let Some(h) = self.cartan_from_element(&x) {
                return Ok(h);
            }
        }
        Err(Error::CartanRetriesExhausted(retries))
    }

    /// All one-dimensional ideals, by scanning projective points.
    ///
    /// `budget` bounds the number of points scanned, `(p^dim - 1)/(p - 1)`.
    pub fn one_dim_ideals(&self, budget: u128) -> Result<Vec<Subspace>> {
        let f = self.field();
        let n = self.dim();
        let p = f.p() as u128;
        let needed = (p.pow(n as u32) - 1) / (p - 1);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let ads: Vec<Matrix> = (0..n)
            .map(|i| self.ad_matrix(&crate::exactlin::unit_vector(n, i)))
            .collect();
        let mut out = Vec::new();
        // normalized representatives: leading entry 1
        for lead in 0..n {
            let tail = n - lead - 1;
            let count = (f.p() as u64).pow(tail as u32);
            for idx in 0..count {
                let mut v = vec![0u32; n];
                v[lead] = 1;
                let mut r = idx;
                for k in (lead + 1..n).rev() {
                    v[k] = (r % f.p() as u64) as u32;
                    r /= f.p() as u64;
                }
                let line = Subspace::from_rref_unchecked(
                    Matrix::from_rows(f, n, &[v.clone()]),
                    vec![lead],
                );
                if ads.iter().all(|ad| line.contains_vector(&ad.apply(&v))) {
                    out.push(line);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{classical, semidirect::module_example, witt::WittAlgebra};
    use crate::exactlin::{unit_vector, Fp};

    #[test]
    fn centers() {
        let f = Fp::new(7).unwrap();
        let a = LieAlgebra::abelian(f, 3);
        assert!(a.center().is_full());
        let sl2 = classical::sl2(f).unwrap();
        assert!(sl2.center().is_zero());
        let h = classical::heisenberg(f);
        assert_eq!(h.center(), Subspace::span(f, 3, &[unit_vector(3, 2)]));
    }

    #[test]
    fn centralizer_of_first_partial_in_w2() {
        let f = Fp::new(3).unwrap();
        let w = WittAlgebra::new(f, 2, 1 << 20).unwrap();
        let n = w.algebra().dim();
        let d1 = Subspace::span(f, n, &[w.partial(0)]);
        // oracle: [x^a ∂_i, ∂_1] = -a_1 x^(a - e_1) ∂_i, so the centralizer is
        // spanned by the basis vectors whose monomial is free of x_1
        let free_of_x1: Vec<usize> = (0..n)
            .filter(|&u| w.om().exponents(u % w.om().dim())[0] == 0)
            .collect();
        assert_eq!(free_of_x1.len(), 6);
        let c = w.algebra().centralizer(&d1);
        assert_eq!(c, Subspace::coordinate(f, n, free_of_x1));
    }

    #[test]
    fn normalizer_of_borel_is_itself() {
        let f = Fp::new(7).unwrap();
        let sl2 = classical::sl2(f).unwrap();
        let b = Subspace::span(f, 3, &[unit_vector(3, 0), unit_vector(3, 1)]);
        assert_eq!(sl2.normalizer(&b), b);
        assert!(sl2.normalizer(&sl2.whole()).is_full());
    }

    #[test]
    fn cartan_examples() {
        let f = Fp::new(7).unwrap();
        let n3 = classical::strictly_upper_triangular(f, 3).unwrap();
        assert!(n3.cartan_subalgebra(1, CARTAN_RETRIES).unwrap().is_full());

        let b2 = classical::two_dim_nonabelian(f);
        let h = b2.cartan_subalgebra(5, CARTAN_RETRIES).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(
            b2.cartan_from_element(&unit_vector(2, 0)).unwrap(),
            Subspace::span(f, 2, &[unit_vector(2, 0)])
        );

        let b3 = classical::upper_triangular(f, 3).unwrap();
        let h = b3.cartan_subalgebra(2, CARTAN_RETRIES).unwrap();
        assert_eq!(h.dim(), 3);
        // a regular diagonal element gives exactly the diagonal
        let diag = classical::upper_triangular_element(f, 3, &[(0, 0, 0), (1, 1, 1), (2, 2, 2)]);
        let hd = b3.cartan_from_element(&diag).unwrap();
        assert_eq!(hd, classical::diagonal_subalgebra(f, 3));
    }

    #[test]
    fn one_dimensional_ideals() {
        let f = Fp::new(7).unwrap();
        assert_eq!(
            LieAlgebra::abelian(f, 2)
                .one_dim_ideals(1000)
                .unwrap()
                .len(),
            8
        );
        assert!(classical::sl2(f)
            .unwrap()
            .one_dim_ideals(1000)
            .unwrap()
            .is_empty());
        let hw = module_example("heisenberg_weyl", Fp::new(5).unwrap()).unwrap();
        let l = hw.semidirect().unwrap();
        assert_eq!(l.dim(), 8);
        assert!(l.one_dim_ideals(1 << 20).unwrap().is_empty());
        assert!(matches!(
            l.one_dim_ideals(10),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
