//! Semidirect sums `L ⋉ V` and the two module examples used to separate the
//! class of nilpotent-sum algebras from its neighbours.

use crate::error::{Error, Result};
use crate::exactlin::{Fp, Matrix, Subspace};
use crate::liecore::LieAlgebra;

use super::classical;
use super::witt::closure_under;

/// `L ⋉ V` where `action[i]` is the matrix of `e_i` on `V`.
///
/// Basis: `L` first, then `V`. `V` is an abelian ideal with `[x, v] = x·v`.
pub fn semidirect(l: &LieAlgebra, action: &[Matrix]) -> Result<LieAlgebra> {
    let n = l.dim();
    if action.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: action.len(),
        });
    }
    let r = action.first().map_or(0, Matrix::rows);
    for a in action {
        if a.rows() != r || a.cols() != r || a.field() != l.field() {
            return Err(Error::Invalid(
                "action matrices must be square of one size".into(),
            ));
        }
    }
    check_homomorphism(l, action)?;
    let field = l.field();
    let dim = n + r;
    let alg = LieAlgebra::from_bracket_fn(field, dim, |u, v| {
        let mut out = vec![0; dim];
        if v < n {
            for (k, c) in l.basis_bracket(u, v) {
                out[k] = c;
            }
        } else if u < n {
            let col = action[u].column(v - n);
            out[n..].copy_from_slice(&col);
        }
        out
    });
    let mut labels = l.labels().to_vec();
    labels.extend((0..r).map(|k| format!("v{k}")));
    Ok(alg.with_labels(labels))
}

fn action_of(field: Fp, action: &[Matrix], x: &[u32]) -> Matrix {
    let r = action[0].rows();
    let mut acc = Matrix::zeros(field, r, r);
    for (a, &c) in action.iter().zip(x) {
        if c != 0 {
            acc = acc.add(&a.scaled(c));
        }
    }
    acc
}

/// Checks `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on every basis pair.
pub fn check_homomorphism(l: &LieAlgebra, action: &[Matrix]) -> Result<()> {
    let n = l.dim();
    if n == 0 {
        return Ok(());
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut br = vec![0; n];
            for (k, c) in l.basis_bracket(i, j) {
                br[k] = c;
            }
            let lhs = action_of(l.field(), action, &br);
            let rhs = action[i].commutator(&action[j])?;
            if lhs != rhs {
                return Err(Error::NotHomomorphism(i, j));
            }
        }
    }
    Ok(())
}

/// A Lie algebra together with a representation on `F_p^r`.
#[derive(Clone, Debug)]
pub struct ModuleExample {
    pub name: String,
    pub algebra: LieAlgebra,
    pub action: Vec<Matrix>,
}

impl ModuleExample {
    pub fn module_dim(&self) -> usize {
        self.action.first().map_or(0, Matrix::rows)
    }

    pub fn semidirect(&self) -> Result<LieAlgebra> {
        semidirect(&self.algebra, &self.action)
    }

    /// Kernel of `x ↦ ρ(x)` is zero.
    pub fn is_faithful(&self) -> bool {
        let flat: Vec<Vec<u32>> = self
            .action
            .iter()
            .map(|m| m.row_vectors().concat())
            .collect();
        let len = flat.first().map_or(0, Vec::len);
        Matrix::from_columns(self.algebra.field(), len, &flat)
            .kernel()
            .is_empty()
    }

    /// Submodule generated by `v`.
    pub fn submodule(&self, v: &[u32]) -> Subspace {
        let start = Subspace::span(self.algebra.field(), self.module_dim(), &[v]);
        closure_under(&start, &self.action)
    }

    /// No proper nonzero submodule: every nonzero vector generates `V`.
    ///
    /// Scans projective points; `budget` bounds their number.
    pub fn is_irreducible(&self, budget: u128) -> Result<bool> {
        let f = self.algebra.field();
        let r = self.module_dim();
        let p = f.p() as u128;
        let needed = (p.pow(r as u32) - 1) / (p - 1);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        for lead in 0..r {
            let count = (f.p() as u64).pow((r - lead - 1) as u32);
            for idx in 0..count {
                let mut v = vec![0u32; r];
                v[lead] = 1;
                let mut rem = idx;
                for k in (lead + 1..r).rev() {
                    v[k] = (rem % f.p() as u64) as u32;
                    rem /= f.p() as u64;
                }
                if !self.submodule(&v).is_full() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `⟨h, e⟩` on `V = F_p^p`: `h·v_i = i v_i`, `e·v_i = v_{i+1 mod p}`.
pub fn two_dim_nonabelian_module(field: Fp) -> Result<ModuleExample> {
    let p = field.p() as usize;
    let mut h = Matrix::zeros(field, p, p);
    let mut e = Matrix::zeros(field, p, p);
    for i in 0..p {
        h.set(i, i, i as u32);
        e.set((i + 1) % p, i, 1);
    }
    Ok(ModuleExample {
        name: "two_dim_nonabelian".into(),
        algebra: classical::two_dim_nonabelian(field),
        action: vec![h, e],
    })
}

/// Heisenberg `⟨A, B, Z⟩` on `F_p[t]/(t^p)`: `A = d/dt`, `B = t·`, `Z = 1`.
pub fn heisenberg_weyl_module(field: Fp) -> Result<ModuleExample> {
    let p = field.p() as usize;
    let mut a = Matrix::zeros(field, p, p);
    let mut b = Matrix::zeros(field, p, p);
    for k in 0..p {
        if k > 0 {
            a.set(k - 1, k, k as u32);
        }
        if k + 1 < p {
            b.set(k + 1, k, 1);
        }
    }
    let z = Matrix::identity(field, p);
    Ok(ModuleExample {
        name: "heisenberg_weyl".into(),
        algebra: classical::heisenberg(field),
        action: vec![a, b, z],
    })
}

pub fn module_example(name: &str, field: Fp) -> Result<ModuleExample> {
    if field.p() < 3 {
        return Err(Error::Invalid("module examples need p ≥ 3".into()));
    }
    match name {
        "two_dim_nonabelian" => two_dim_nonabelian_module(field),
        "heisenberg_weyl" => heisenberg_weyl_module(field),
        other => Err(Error::Invalid(format!("unknown module example '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_action_gives_direct_sum() {
        let f = Fp::new(5).unwrap();
        let l = classical::two_dim_nonabelian(f);
        let z = Matrix::zeros(f, 2, 2);
        let s = semidirect(&l, &[z.clone(), z]).unwrap();
        assert_eq!(s.dim(), 4);
        let v = Subspace::coordinate(f, 4, [2, 3]);
        assert!(s.centralizer(&s.whole()).contains(&v).unwrap());
    }

    #[test]
    fn examples_are_valid_faithful_irreducible() {
        let ex = module_example("two_dim_nonabelian", Fp::new(3).unwrap()).unwrap();
        let l = ex.semidirect().unwrap();
        assert_eq!(l.dim(), 5);
        assert!(l.validate_structure().is_valid());
        assert!(ex.is_faithful());
        assert!(ex.is_irreducible(1000).unwrap());

        let hw = module_example("heisenberg_weyl", Fp::new(5).unwrap()).unwrap();
        let l = hw.semidirect().unwrap();
        assert_eq!(l.dim(), 8);
        assert!(l.validate_structure().is_valid());
        assert!(hw.is_faithful());
        assert!(hw.is_irreducible(1000).unwrap());
    }

    #[test]
    fn non_homomorphism_is_rejected() {
        let f = Fp::new(3).unwrap();
        let mut ex = two_dim_nonabelian_module(f).unwrap();
        ex.action[0] = Matrix::identity(f, 3);
        assert!(matches!(ex.semidirect(), Err(Error::NotHomomorphism(0, 1))));
        assert!(module_example("nope", f).is_err());
    }
}
