//! Current algebras `S ⊗ O_m` and graded sums `G = S ⊗ O_m + D`.

use crate::error::{Error, Result};
use crate::exactlin::{Fp, Subspace};
use crate::liecore::LieAlgebra;

use super::graded::GradedAlgebra;
use super::poly::{TruncatedPoly, TruncatedPolyAlgebra};
use super::witt::WittAlgebra;

fn tensor_label(s: &str, mono: &str) -> String {
    format!("{s}⊗{mono}")
}

/// `S ⊗ O_m` with `[s⊗f, t⊗g] = [s,t]⊗fg`; basis `s_a ⊗ x^b` at `a · p^m + b`.
pub fn tensor_with_om(s: &LieAlgebra, om: &TruncatedPolyAlgebra) -> Result<LieAlgebra> {
    if s.field() != om.field() {
        return Err(Error::FieldMismatch(s.field().p(), om.field().p()));
    }
    let field = s.field();
    let np = om.dim();
    let dim = s.dim() * np;
    let alg = LieAlgebra::from_bracket_fn(field, dim, |u, v| {
        let mut out = vec![0; dim];
        let (a, b) = (u / np, u % np);
        let (c, d) = (v / np, v % np);
        if let Some(prod) = om.monomial_product(b, d) {
            for (k, coef) in s.basis_bracket(a, c) {
                out[k * np + prod] = field.add(out[k * np + prod], coef);
            }
        }
        out
    });
    let labels = (0..dim)
        .map(|u| tensor_label(&s.labels()[u / np], &om.monomial_label(u % np)))
        .collect();
    Ok(alg.with_labels(labels))
}

/// `G = S ⊗ O_m + D` graded by `deg(e_i ⊗ f) = i`, `deg D = 0`.
///
/// Basis: the `S ⊗ O_m` block (as in [`tensor_with_om`]) followed by the RREF
/// basis of `D ⊆ W_m`.
#[derive(Clone, Debug)]
pub struct GradedSum {
    graded: GradedAlgebra,
    s: GradedAlgebra,
    witt: WittAlgebra,
    d: Subspace,
}

impl GradedSum {
    pub fn new(s: &GradedAlgebra, witt: &WittAlgebra, d: &Subspace) -> Result<Self> {
        let field = s.algebra().field();
        if field != witt.field() {
            return Err(Error::FieldMismatch(field.p(), witt.field().p()));
        }
        if d.ambient_dim() != witt.algebra().dim() {
            return Err(Error::DimensionMismatch {
                expected: witt.algebra().dim(),
                got: d.ambient_dim(),
            });
        }
        if !witt.algebra().is_subalgebra(d) {
            return Err(Error::NotClosed);
        }
        let om = *witt.om();
        let np = om.dim();
        let sd = s.dim();
        let block = sd * np;
        let dd = d.dim();
        let dim = block + dd;
        let dbasis = d.basis_vectors();
        let dops: Vec<_> = dbasis.iter().map(|v| witt.derivation(v)).collect();
        let tensor = tensor_with_om(s.algebra(), &om)?;
        let alg = LieAlgebra::from_bracket_fn(field, dim, |u, v| {
            let mut out = vec![0; dim];
            match (u < block, v < block) {
                (true, true) => {
                    for (k, c) in tensor.basis_bracket(u, v) {
                        out[k] = c;
                    }
                }
                // u < v, so only the case (tensor, D) occurs: [s⊗f, d] = −s⊗d(f)
                (true, false) => {
                    let (a, b) = (u / np, u % np);
                    let img = dops[v - block].apply(&om.monomial_at(b));
                    for (k, &c) in img.coeffs().iter().enumerate() {
                        out[a * np + k] = field.neg(c);
                    }
                }
                (false, false) => {
                    let w = witt
                        .algebra()
                        .bracket(&dbasis[u - block], &dbasis[v - block]);
                    let coords = d.coordinates(&w).expect("D is closed");
                    out[block..].copy_from_slice(&coords);
                }
                (false, true) => unreachable!("u < v"),
            }
            out
        });
        let mut labels: Vec<String> = tensor.labels().to_vec();
        labels.extend((0..dd).map(|k| {
            let dv = witt.derivation(&dbasis[k]);
            format!("D[{dv}]")
        }));
        let mut degrees: Vec<i64> = (0..block).map(|u| s.degree(u / np)).collect();
        degrees.extend(std::iter::repeat_n(0, dd));
        let graded = GradedAlgebra::new(alg.with_labels(labels), degrees)?;
        Ok(GradedSum {
            graded,
            s: s.clone(),
            witt: witt.clone(),
            d: d.clone(),
        })
    }

    pub fn graded(&self) -> &GradedAlgebra {
        &self.graded
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.graded.algebra()
    }

    pub fn s(&self) -> &GradedAlgebra {
        &self.s
    }

    pub fn witt(&self) -> &WittAlgebra {
        &self.witt
    }

    pub fn om(&self) -> &TruncatedPolyAlgebra {
        self.witt.om()
    }

    /// `D` as a subspace of `W_m`.
    pub fn d(&self) -> &Subspace {
        &self.d
    }

    pub fn field(&self) -> Fp {
        self.graded.algebra().field()
    }

    pub fn dim(&self) -> usize {
        self.graded.dim()
    }

    pub fn m(&self) -> usize {
        self.om().vars()
    }

    fn block(&self) -> usize {
        self.s.dim() * self.om().dim()
    }

    /// Index of `e_a ⊗ x^b`.
    pub fn tensor_index(&self, s_index: usize, mono: usize) -> usize {
        s_index * self.om().dim() + mono
    }

    /// Index in `S` of the unique basis vector of the given degree.
    pub fn s_index_of_degree(&self, deg: i64) -> Result<usize> {
        match self.s.basis_of_degree(deg).as_slice() {
            [i] => Ok(*i),
            other => Err(Error::Invalid(format!(
                "S has {} basis vectors of degree {deg}, expected one",
                other.len()
            ))),
        }
    }

    /// `e_deg ⊗ f`
    pub fn tensor_vector(&self, deg: i64, f: &TruncatedPoly) -> Result<Vec<u32>> {
        let a = self.s_index_of_degree(deg)?;
        let mut v = vec![0; self.dim()];
        let np = self.om().dim();
        v[a * np..(a + 1) * np].copy_from_slice(f.coeffs());
        Ok(v)
    }

    /// Embeds an element of `D ⊆ W_m`.
    pub fn d_vector(&self, w: &[u32]) -> Result<Vec<u32>> {
        let coords = self
            .d
            .coordinates(w)
            .ok_or_else(|| Error::Invalid("derivation is not in D".into()))?;
        let mut v = vec![0; self.dim()];
        v[self.block()..].copy_from_slice(&coords);
        Ok(v)
    }

    /// The `S ⊗ O_m` block for a single `S` basis vector: `e_a ⊗ O_m`.
    pub fn tensor_block(&self, deg: i64) -> Result<Subspace> {
        let a = self.s_index_of_degree(deg)?;
        let np = self.om().dim();
        Ok(Subspace::coordinate(
            self.field(),
            self.dim(),
            a * np..(a + 1) * np,
        ))
    }

    /// All of `S ⊗ O_m`.
    pub fn tensor_part(&self) -> Subspace {
        Subspace::coordinate(self.field(), self.dim(), 0..self.block())
    }

    /// The summand `D` inside `G`.
    pub fn d_part(&self) -> Subspace {
        Subspace::coordinate(self.field(), self.dim(), self.block()..self.dim())
    }

    /// Projection onto `D` alongside `S ⊗ O_m`, as an element of `W_m`.
    pub fn project_to_d(&self, v: &[u32]) -> Vec<u32> {
        self.d.combination(&v[self.block()..])
    }

    /// Projection onto `e_deg ⊗ O_m`, as a polynomial.
    pub fn tensor_coefficient(&self, deg: i64, v: &[u32]) -> Result<TruncatedPoly> {
        let a = self.s_index_of_degree(deg)?;
        let np = self.om().dim();
        Ok(self.om().from_coeffs(v[a * np..(a + 1) * np].to_vec()))
    }

    /// The torus element `e_0 ⊗ 1`.
    pub fn torus(&self) -> Result<Vec<u32>> {
        self.tensor_vector(0, &self.om().one())
    }
}
