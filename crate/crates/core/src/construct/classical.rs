//! Small classical algebras: sl2, triangular matrices, Heisenberg, and the
//! two-dimensional non-abelian algebra.

use crate::error::{Error, Result};
use crate::exactlin::{Fp, Matrix, Subspace};
use crate::liecore::LieAlgebra;

use super::graded::GradedAlgebra;

/// `sl2` with basis `e, h, f`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2(field: Fp) -> Result<LieAlgebra> {
    if field.p() == 2 {
        return Err(Error::Invalid("sl2 requires p > 2".into()));
    }
    let mut l = LieAlgebra::abelian(field, 3).with_labels(vec!["e".into(), "h".into(), "f".into()]);
    l.set_bracket(1, 0, &[(0, 2)])?;
    l.set_bracket(1, 2, &[(2, -2)])?;
    l.set_bracket(0, 2, &[(1, 1)])?;
    Ok(l)
}

/// `sl2` with the standard grading `deg f = −1, deg h = 0, deg e = 1`.
pub fn sl2_graded(field: Fp) -> Result<GradedAlgebra> {
    GradedAlgebra::new(sl2(field)?, vec![1, 0, -1])
}

/// `⟨h, e⟩` with `[h, e] = e`.
pub fn two_dim_nonabelian(field: Fp) -> LieAlgebra {
    let mut l = LieAlgebra::abelian(field, 2).with_labels(vec!["h".into(), "e".into()]);
    l.set_bracket(0, 1, &[(1, 1)]).expect("valid indices");
    l
}

/// Heisenberg algebra `⟨A, B, Z⟩` with `[A, B] = Z`.
pub fn heisenberg(field: Fp) -> LieAlgebra {
    let mut l = LieAlgebra::abelian(field, 3).with_labels(vec!["A".into(), "B".into(), "Z".into()]);
    l.set_bracket(0, 1, &[(2, 1)]).expect("valid indices");
    l
}

/// Lie algebra spanned by the given matrices under the commutator.
/// Fails if the span is not closed or the matrices are dependent.
pub fn matrix_lie_algebra(field: Fp, mats: &[Matrix], labels: Vec<String>) -> Result<LieAlgebra> {
    let d = mats.len();
    let flat: Vec<Vec<u32>> = mats.iter().map(|m| m.row_vectors().concat()).collect();
    let len = flat.first().map_or(0, Vec::len);
    let basis = Matrix::from_columns(field, len, &flat);
    if basis.rank() != d {
        return Err(Error::Invalid("matrices are linearly dependent".into()));
    }
    let mut failure = None;
    let alg = LieAlgebra::from_bracket_fn(field, d, |i, j| {
        let c = mats[i].commutator(&mats[j]).expect("square matrices");
        match basis.solve(&c.row_vectors().concat()) {
            Some(x) => x,
            None => {
                failure = Some((i, j));
                vec![0; d]
            }
        }
    });
    if let Some((i, j)) = failure {
        return Err(Error::Invalid(format!(
            "commutator of basis matrices {i} and {j} leaves the span"
        )));
    }
    Ok(alg.with_labels(labels))
}

fn matrix_unit(field: Fp, n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(a, b, 1);
    m
}

/// Index pairs `(a, b)` with `a ≤ b` (or `a < b` when `strict`), lexicographic.
pub fn triangular_positions(n: usize, strict: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            if !(strict && a == b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn triangular(field: Fp, n: usize, strict: bool) -> Result<LieAlgebra> {
    let pos = triangular_positions(n, strict);
    let mats: Vec<Matrix> = pos
        .iter()
        .map(|&(a, b)| matrix_unit(field, n, a, b))
        .collect();
    let labels = pos
        .iter()
        .map(|&(a, b)| format!("E{}{}", a + 1, b + 1))
        .collect();
    matrix_lie_algebra(field, &mats, labels)
}

/// Upper-triangular `n × n` matrices (the standard Borel of `gl_n`).
pub fn upper_triangular(field: Fp, n: usize) -> Result<LieAlgebra> {
    triangular(field, n, false)
}

/// Strictly upper-triangular `n × n` matrices.
pub fn strictly_upper_triangular(field: Fp, n: usize) -> Result<LieAlgebra> {
    triangular(field, n, true)
}

/// Vector in [`upper_triangular`] coordinates from `(row, col, coefficient)` entries.
pub fn upper_triangular_element(field: Fp, n: usize, entries: &[(usize, usize, i64)]) -> Vec<u32> {
    let pos = triangular_positions(n, false);
    let mut v = vec![0; pos.len()];
    for &(a, b, c) in entries {
        let k = pos
            .iter()
            .position(|&q| q == (a, b))
            .expect("upper-triangular position");
        v[k] = field.add(v[k], field.reduce(c));
    }
    v
}

/// The diagonal matrices inside [`upper_triangular`].
pub fn diagonal_subalgebra(field: Fp, n: usize) -> Subspace {
    let pos = triangular_positions(n, false);
    Subspace::coordinate(
        field,
        pos.len(),
        pos.iter()
            .enumerate()
            .filter(|(_, (a, b))| a == b)
            .map(|(k, _)| k),
    )
}

/// The strictly upper-triangular matrices inside [`upper_triangular`].
pub fn strictly_upper_subspace(field: Fp, n: usize) -> Subspace {
    let pos = triangular_positions(n, false);
    Subspace::coordinate(
        field,
        pos.len(),
        pos.iter()
            .enumerate()
            .filter(|(_, (a, b))| a < b)
            .map(|(k, _)| k),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_relations() {
        let f7 = Fp::new(7).unwrap();
        let l = sl2(f7).unwrap();
        assert_eq!(l.basis_bracket(1, 0), vec![(0, 2)]);
        assert!(l.validate_structure().is_valid());
        assert!(l.product_space(&l.whole(), &l.whole()).is_full());
        assert!(sl2(Fp::new(2).unwrap()).is_err());
        assert!(sl2_graded(f7).unwrap().grading_holds());
    }

    #[test]
    fn triangular_algebras() {
        let f = Fp::new(7).unwrap();
        let b = upper_triangular(f, 3).unwrap();
        assert_eq!(b.dim(), 6);
        assert!(b.validate_structure().is_valid());
        let n = strictly_upper_triangular(f, 4).unwrap();
        assert_eq!(n.dim(), 6);
        assert!(n.is_nilpotent(&n.whole()).unwrap());
        let d = diagonal_subalgebra(f, 3);
        assert_eq!(d.dim(), 3);
        assert!(b.product_space(&d, &d).is_zero());
    }

    #[test]
    fn non_closed_matrix_span_is_rejected() {
        let f = Fp::new(5).unwrap();
        let mats = vec![matrix_unit(f, 2, 0, 1), matrix_unit(f, 2, 1, 0)];
        assert!(matrix_lie_algebra(f, &mats, vec!["a".into(), "b".into()]).is_err());
    }
}
