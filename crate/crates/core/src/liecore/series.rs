//! Derived and lower central series, solvability and nilpotency.

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::Subspace;

/// A descending chain of subspaces, ending at its first repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub chain: Vec<Subspace>,
    pub stabilized: bool,
    pub steps: usize,
}

impl SeriesReport {
    pub fn last(&self) -> &Subspace {
        self.chain.last().expect("chain starts with U")
    }

    pub fn reaches_zero(&self) -> bool {
        self.last().is_zero()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Derived,
    LowerCentral,
}

impl LieAlgebra {
    fn series(&self, u: &Subspace, kind: Kind) -> Result<SeriesReport> {
        if !self.is_subalgebra(u) {
            return Err(Error::NotClosed);
        }
        let mut chain = vec![u.clone()];
        // a strictly decreasing chain in dimension d stabilizes within d steps
        let cap = u.dim() + 1;
        let mut stabilized = false;
        for _ in 0..cap {
            let cur = chain.last().unwrap();
            let next = match kind {
                Kind::Derived => self.product_space(cur, cur),
                Kind::LowerCentral => self.product_space(u, cur),
            };
            if next == *cur {
                stabilized = true;
                break;
            }
            let zero = next.is_zero();
            chain.push(next);
            if zero {
                stabilized = true;
                break;
            }
        }
        let steps = chain.len() - 1;
        Ok(SeriesReport {
            chain,
            stabilized,
            steps,
        })
    }

    /// `U ⊇ [U,U] ⊇ [[U,U],[U,U]] ⊇ …`
    pub fn derived_series(&self, u: &Subspace) -> Result<SeriesReport> {
        self.series(u, Kind::Derived)
    }

    /// `U ⊇ [U,U] ⊇ [U,[U,U]] ⊇ …`
    pub fn lower_central_series(&self, u: &Subspace) -> Result<SeriesReport> {
        self.series(u, Kind::LowerCentral)
    }

    pub fn is_solvable(&self, u: &Subspace) -> Result<bool> {
        Ok(self.derived_series(u)?.reaches_zero())
    }

    pub fn is_nilpotent(&self, u: &Subspace) -> Result<bool> {
        Ok(self.lower_central_series(u)?.reaches_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{classical, witt::zassenhaus};
    use crate::exactlin::{unit_vector, Fp};

    #[test]
    fn abelian_series_vanish_in_one_step() {
        let f = Fp::new(5).unwrap();
        let a = LieAlgebra::abelian(f, 3);
        let d = a.derived_series(&a.whole()).unwrap();
        assert_eq!(d.dims(), vec![3, 0]);
        assert_eq!(
            a.lower_central_series(&a.whole()).unwrap().dims(),
            vec![3, 0]
        );
    }

    #[test]
    fn two_dim_nonabelian() {
        let f = Fp::new(5).unwrap();
        let l = classical::two_dim_nonabelian(f);
        assert_eq!(l.derived_series(&l.whole()).unwrap().dims(), vec![2, 1, 0]);
        let lc = l.lower_central_series(&l.whole()).unwrap();
        assert_eq!(lc.dims(), vec![2, 1]);
        assert!(lc.stabilized);
        assert!(l.is_solvable(&l.whole()).unwrap());
        assert!(!l.is_nilpotent(&l.whole()).unwrap());
    }

    #[test]
    fn sl2_is_perfect() {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        let d = l.derived_series(&l.whole()).unwrap();
        assert_eq!(d.dims(), vec![3]);
        assert!(!l.is_solvable(&l.whole()).unwrap());
    }

    #[test]
    fn classical_predicates() {
        let f = Fp::new(7).unwrap();
        let n3 = classical::strictly_upper_triangular(f, 3).unwrap();
        assert!(n3.is_nilpotent(&n3.whole()).unwrap());
        let sl2 = classical::sl2(f).unwrap();
        let borel = Subspace::span(f, 3, &[unit_vector(3, 0), unit_vector(3, 1)]);
        assert!(sl2.is_solvable(&borel).unwrap());
        assert!(!sl2.is_nilpotent(&borel).unwrap());
        let w = zassenhaus(Fp::new(5).unwrap(), 1).unwrap();
        let l = w.algebra();
        assert!(!l.is_solvable(&l.whole()).unwrap());
        assert!(!l.is_nilpotent(&l.whole()).unwrap());
    }

    #[test]
    fn non_closed_input_is_rejected() {
        let f = Fp::new(7).unwrap();
        let sl2 = classical::sl2(f).unwrap();
        let ef = Subspace::span(f, 3, &[unit_vector(3, 0), unit_vector(3, 2)]);
        assert_eq!(sl2.derived_series(&ef), Err(Error::NotClosed));
        assert_eq!(sl2.is_nilpotent(&ef), Err(Error::NotClosed));
    }
}
