//! Associated graded algebras of filtrations and the embedding `gr B → gr L`.

use std::collections::BTreeMap;

use crate::construct::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Fp, Matrix, Subspace};
use crate::liecore::LieAlgebra;

use super::filtration::Filtration;

/// `gr = ⊕ L_i / L_{i+1}` together with the coset representatives used as its
/// basis.
///
/// In degree `i` the representatives are the RREF basis of the reductions of
/// `L_i` modulo `L_{i+1}`. Basis vectors of `gr` are ordered by degree, then
/// by representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedGraded {
    graded: GradedAlgebra,
    reps: BTreeMap<i64, Subspace>,
    filtration: Filtration,
}

impl AssociatedGraded {
    pub fn graded(&self) -> &GradedAlgebra {
        &self.graded
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    /// Span of the degree-`i` representatives (a complement of `L_{i+1}` in `L_i`).
    pub fn representatives(&self, i: i64) -> Option<&Subspace> {
        self.reps.get(&i)
    }

    /// The representatives of every basis vector of `gr`, as vectors of the
    /// ambient algebra. Together they form a basis of the filtered space.
    pub fn adapted_basis(&self) -> Vec<Vec<u32>> {
        self.reps.values().flat_map(|r| r.basis_vectors()).collect()
    }

    fn offset(&self, i: i64) -> usize {
        self.reps.range(..i).map(|(_, r)| r.dim()).sum()
    }

    /// Coordinates of `x + L_{i+1}` in the degree-`i` block of `gr`, as a full
    /// `gr` vector. `None` if `x ∉ L_i`.
    pub fn symbol(&self, i: i64, x: &[u32]) -> Option<Vec<u32>> {
        let mut out = vec![0; self.graded.dim()];
        if !self.filtration.term(i).contains_vector(x) {
            return None;
        }
        let Some(r) = self.reps.get(&i) else {
            return Some(out);
        };
        let red = self.filtration.term(i + 1).reduce(x);
        let c = r
            .coordinates(&red)
            .expect("reduction lies in the span of representatives");
        let off = self.offset(i);
        out[off..off + c.len()].copy_from_slice(&c);
        Some(out)
    }

    /// Coordinates of `x` in the adapted basis.
    pub fn adapted_coordinates(&self, x: &[u32]) -> Result<Vec<u32>> {
        let f = self.graded.algebra().field();
        let mut w = x.to_vec();
        let mut out = Vec::with_capacity(self.graded.dim());
        if !self.filtration.whole().contains_vector(x) {
            return Err(Error::Invalid(
                "vector is outside the filtered space".into(),
            ));
        }
        for (&i, r) in &self.reps {
            let red = self.filtration.term(i + 1).reduce(&w);
            let c = r.coordinates(&red).expect("w ∈ L_i at this point");
            w = f.sub_vec(&w, &r.combination(&c));
            out.extend(c);
        }
        debug_assert!(crate::exactlin::is_zero(&w));
        Ok(out)
    }

    /// The bracket of `L`, rewritten in the adapted basis. It has the same
    /// basis as `gr` and differs from it only by terms of higher degree.
    pub fn adapted_algebra(&self, l: &LieAlgebra) -> Result<LieAlgebra> {
        let basis = self.adapted_basis();
        let dim = basis.len();
        let mut err = None;
        let alg = LieAlgebra::from_bracket_fn(l.field(), dim, |a, b| {
            match self.adapted_coordinates(&l.bracket(&basis[a], &basis[b])) {
                Ok(c) => c,
                Err(e) => {
                    err.get_or_insert(e);
                    vec![0; dim]
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(alg.with_labels(self.graded.algebra().labels().to_vec())),
        }
    }
}

/// `gr F` for a filtration of (a subalgebra of) `l`. The Jacobi identity of
/// the result is re-validated.
pub fn associated_graded(l: &LieAlgebra, filt: &Filtration) -> Result<AssociatedGraded> {
    if let Some((i, j)) = filt.compatibility_violation(l) {
        return Err(Error::Invalid(format!(
            "[L_{i}, L_{j}] is not contained in L_{}",
            i + j
        )));
    }
    let f = l.field();
    let mut reps = BTreeMap::new();
    for i in filt.indices() {
        let next = filt.term(i + 1);
        let red: Vec<Vec<u32>> = filt.term(i).basis().map(|v| next.reduce(v)).collect();
        let r = Subspace::span(f, l.dim(), &red);
        if !r.is_zero() {
            reps.insert(i, r);
        }
    }
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    let mut labels = Vec::new();
    for (&i, r) in &reps {
        for (k, v) in r.basis().enumerate() {
            basis.push(v.to_vec());
            degrees.push(i);
            labels.push(format!("g{i}_{k}"));
        }
    }
    let mut ag = AssociatedGraded {
        graded: GradedAlgebra::new(LieAlgebra::abelian(f, basis.len()), degrees.clone())?,
        reps,
        filtration: filt.clone(),
    };
    let dim = basis.len();
    let max = filt.max_index();
    let alg = LieAlgebra::from_bracket_fn(f, dim, |a, b| {
        let s = degrees[a] + degrees[b];
        if s > max || s < filt.min_index() {
            return vec![0; dim];
        }
        ag.symbol(s, &l.bracket(&basis[a], &basis[b]))
            .expect("filtration is compatible")
    })
    .with_labels(labels);
    alg.ensure_valid()?;
    ag.graded = GradedAlgebra::new(alg, degrees)?;
    Ok(ag)
}

/// The degreewise map `gr B → gr L`, `x + B_{i+1} ↦ x + L_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEmbedding {
    pub source: AssociatedGraded,
    pub target: AssociatedGraded,
    /// Column `k` is the image of the `k`-th basis vector of `gr B`.
    pub map: Matrix,
}

impl GradedEmbedding {
    pub fn is_injective(&self) -> bool {
        self.map.rank() == self.map.cols()
    }

    /// Whether the map commutes with the brackets on every basis pair.
    pub fn preserves_brackets(&self) -> bool {
        let src = self.source.graded().algebra();
        let tgt = self.target.graded().algebra();
        let n = src.dim();
        let cols: Vec<Vec<u32>> = (0..n).map(|k| self.map.column(k)).collect();
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let lhs = self.map.apply(&src.bracket(
                    &crate::exactlin::unit_vector(n, a),
                    &crate::exactlin::unit_vector(n, b),
                ));
                lhs == tgt.bracket(&cols[a], &cols[b])
            })
        })
    }

    pub fn image(&self) -> Subspace {
        let f: Fp = self.map.field();
        let cols: Vec<Vec<u32>> = (0..self.map.cols()).map(|k| self.map.column(k)).collect();
        Subspace::span(f, self.map.rows(), &cols)
    }
}

/// Builds `gr B` for the induced filtration `B_i = B ∩ L_i` and its map into
/// `gr L`.
pub fn gr_embed(l: &LieAlgebra, b: &Subspace, filt: &Filtration) -> Result<GradedEmbedding> {
    let induced = filt.induced(l, b)?;
    let source = associated_graded(l, &induced)?;
    let target = associated_graded(l, filt)?;
    let f = l.field();
    let mut cols = Vec::new();
    for (&i, r) in &source.reps {
        for v in r.basis() {
            cols.push(target.symbol(i, v).expect("B_i ⊆ L_i"));
        }
    }
    let map = Matrix::from_columns(f, target.graded().dim(), &cols);
    Ok(GradedEmbedding {
        source,
        target,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::classical;
    use crate::exactlin::unit_vector;
    use crate::filtgrade::weisfeiler_filtration;

    fn sl2_setup() -> (LieAlgebra, Filtration, Subspace) {
        let f = Fp::new(7).unwrap();
        let l = classical::sl2(f).unwrap();
        let borel = Subspace::span(f, 3, &[unit_vector(3, 0), unit_vector(3, 1)]);
        let filt = weisfeiler_filtration(&l, &borel).unwrap();
        (l, filt, borel)
    }

    #[test]
    fn sl2_gr_dims() {
        let (l, filt, _) = sl2_setup();
        let gr = associated_graded(&l, &filt).unwrap();
        let dims: Vec<_> = gr.graded().component_dims().into_iter().collect();
        assert_eq!(dims, vec![(-1, 1), (0, 1), (1, 1)]);
        // gr sl2 of this filtration is again sl2-like: [gr_{-1}, gr_1] ≠ 0
        let g = gr.graded();
        let a = g.basis_of_degree(-1)[0];
        let b = g.basis_of_degree(1)[0];
        let n = g.dim();
        assert!(!crate::exactlin::is_zero(
            &g.algebra().bracket(&unit_vector(n, a), &unit_vector(n, b))
        ));
    }

    #[test]
    fn trivial_filtration_gives_l() {
        let (l, _, _) = sl2_setup();
        let filt = Filtration::new(&l, 0, vec![l.whole()]).unwrap();
        let gr = associated_graded(&l, &filt).unwrap();
        assert_eq!(gr.graded().dim(), 3);
        assert_eq!(
            gr.graded().algebra().structure_constants(),
            l.structure_constants()
        );
    }

    #[test]
    fn adapted_algebra_is_l() {
        let (l, filt, _) = sl2_setup();
        let gr = associated_graded(&l, &filt).unwrap();
        let adapted = gr.adapted_algebra(&l).unwrap();
        adapted.ensure_valid().unwrap();
        let basis = gr.adapted_basis();
        for a in 0..3 {
            for b in 0..3 {
                let direct = l.bracket(&basis[a], &basis[b]);
                let via = adapted.bracket(&unit_vector(3, a), &unit_vector(3, b));
                let mut back = vec![0; 3];
                for (k, &c) in via.iter().enumerate() {
                    l.field().axpy(&mut back, c, &basis[k]);
                }
                assert_eq!(direct, back);
            }
        }
    }

    #[test]
    fn borel_embedding() {
        let (l, filt, borel) = sl2_setup();
        let emb = gr_embed(&l, &borel, &filt).unwrap();
        assert!(emb.is_injective());
        assert!(emb.preserves_brackets());
        let dims: Vec<_> = emb.source.graded().component_dims().into_iter().collect();
        assert_eq!(dims, vec![(0, 1), (1, 1)]);

        let whole = gr_embed(&l, &l.whole(), &filt).unwrap();
        assert_eq!(whole.map, Matrix::identity(l.field(), 3));
    }
}
