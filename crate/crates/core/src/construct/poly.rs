//! Truncated polynomial algebras `O_m = k[x_1..x_m]/(x_1^p, …, x_m^p)` and
//! their derivations.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{Fp, Matrix, Subspace};

/// The algebra `O_m`. Monomial `x^a` has index `Σ a_i p^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedPolyAlgebra {
    field: Fp,
    m: usize,
    dim: usize,
}

/// An element of `O_m`, stored densely over the monomial basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedPoly {
    ctx: TruncatedPolyAlgebra,
    coeffs: Vec<u32>,
}

impl TruncatedPolyAlgebra {
    /// Fails when `p^m` exceeds `budget`.
    pub fn new(field: Fp, m: usize, budget: usize) -> Result<Self> {
        let dim = (field.p() as u128).pow(m as u32);
        if dim > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: dim,
                budget: budget as u128,
            });
        }
        Ok(TruncatedPolyAlgebra {
            field,
            m,
            dim: dim as usize,
        })
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn vars(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn exponents(&self, mut idx: usize) -> Vec<u32> {
        let p = self.field.p() as usize;
        (0..self.m)
            .map(|_| {
                let e = (idx % p) as u32;
                idx /= p;
                e
            })
            .collect()
    }

    /// Index of `x^a`, or `None` when some exponent reaches `p`.
    pub fn index(&self, exps: &[u32]) -> Option<usize> {
        let p = self.field.p();
        let mut idx = 0usize;
        for &e in exps.iter().rev() {
            if e >= p {
                return None;
            }
            idx = idx * p as usize + e as usize;
        }
        Some(idx)
    }

    pub fn zero(&self) -> TruncatedPoly {
        TruncatedPoly {
            ctx: *self,
            coeffs: vec![0; self.dim],
        }
    }

    pub fn one(&self) -> TruncatedPoly {
        self.monomial_at(0)
    }

    pub fn monomial_at(&self, idx: usize) -> TruncatedPoly {
        let mut f = self.zero();
        f.coeffs[idx] = 1;
        f
    }

    pub fn monomial(&self, exps: &[u32]) -> TruncatedPoly {
        match self.index(exps) {
            Some(i) => self.monomial_at(i),
            None => self.zero(),
        }
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(&self, i: usize) -> TruncatedPoly {
        let mut e = vec![0; self.m];
        e[i] = 1;
        self.monomial(&e)
    }

    pub fn from_coeffs(&self, coeffs: Vec<u32>) -> TruncatedPoly {
        assert_eq!(coeffs.len(), self.dim, "coefficient length mismatch");
        let coeffs = coeffs.into_iter().map(|c| c % self.field.p()).collect();
        TruncatedPoly { ctx: *self, coeffs }
    }

    /// Index of `x_1^{p-1} ⋯ x_m^{p-1}`, spanning the socle.
    pub fn socle_index(&self) -> usize {
        self.dim - 1
    }

    pub fn socle(&self) -> Subspace {
        Subspace::coordinate(self.field, self.dim, [self.socle_index()])
    }

    /// The maximal ideal `(x_1, …, x_m)`.
    pub fn maximal_ideal(&self) -> Subspace {
        Subspace::coordinate(self.field, self.dim, 1..self.dim)
    }

    pub fn monomial_label(&self, idx: usize) -> String {
        let exps = self.exponents(idx);
        let parts: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Product of monomials by index, `None` if truncated to zero.
    pub fn monomial_product(&self, a: usize, b: usize) -> Option<usize> {
        let ea = self.exponents(a);
        let eb = self.exponents(b);
        let sum: Vec<u32> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
        self.index(&sum)
    }

    /// Matrix of multiplication by `f`.
    pub fn mult_matrix(&self, f: &TruncatedPoly) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| f.mul(&self.monomial_at(j)).coeffs)
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `∂/∂x_{i+1}`.
    pub fn partial_matrix(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| self.monomial_at(j).partial(i).coeffs)
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }
}

impl TruncatedPoly {
    pub fn ctx(&self) -> TruncatedPolyAlgebra {
        self.ctx
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeffs[0]
    }

    pub fn add(&self, other: &TruncatedPoly) -> TruncatedPoly {
        TruncatedPoly {
            ctx: self.ctx,
            coeffs: self.ctx.field.add_vec(&self.coeffs, &other.coeffs),
        }
    }

    pub fn sub(&self, other: &TruncatedPoly) -> TruncatedPoly {
        TruncatedPoly {
            ctx: self.ctx,
            coeffs: self.ctx.field.sub_vec(&self.coeffs, &other.coeffs),
        }
    }

    pub fn scale(&self, a: u32) -> TruncatedPoly {
        let mut c = self.coeffs.clone();
        self.ctx.field.scale(&mut c, a);
        TruncatedPoly {
            ctx: self.ctx,
            coeffs: c,
        }
    }

    /// Product; monomials with an exponent `≥ p` are dropped.
    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        let ctx = self.ctx;
        let f = ctx.field;
        let mut out = vec![0; ctx.dim];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                if let Some(c) = ctx.monomial_product(a, b) {
                    out[c] = f.add(out[c], f.mul(ca, cb));
                }
            }
        }
        TruncatedPoly { ctx, coeffs: out }
    }

    pub fn pow(&self, e: u32) -> TruncatedPoly {
        let mut acc = self.ctx.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `∂/∂x_{i+1}`
    pub fn partial(&self, i: usize) -> TruncatedPoly {
        let ctx = self.ctx;
        let f = ctx.field;
        let mut out = vec![0; ctx.dim];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            let mut e = ctx.exponents(a);
            if e[i] == 0 {
                continue;
            }
            let k = e[i];
            e[i] -= 1;
            let idx = ctx.index(&e).expect("exponents stay in range");
            out[idx] = f.add(out[idx], f.mul(ca, k));
        }
        TruncatedPoly { ctx, coeffs: out }
    }
}

impl fmt::Debug for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mono = self.ctx.monomial_label(i);
                match (c, mono.as_str()) {
                    (_, "1") => format!("{c}"),
                    (1, _) => mono,
                    _ => format!("{c}*{mono}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// A derivation `Σ f_i ∂/∂x_i` of `O_m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Derivation {
    components: Vec<TruncatedPoly>,
}

impl Derivation {
    pub fn new(components: Vec<TruncatedPoly>) -> Self {
        Derivation { components }
    }

    pub fn zero(om: &TruncatedPolyAlgebra) -> Self {
        Derivation {
            components: vec![om.zero(); om.vars()],
        }
    }

    /// `∂/∂x_{i+1}`
    pub fn partial(om: &TruncatedPolyAlgebra, i: usize) -> Self {
        let mut d = Derivation::zero(om);
        d.components[i] = om.one();
        d
    }

    pub fn ctx(&self) -> TruncatedPolyAlgebra {
        self.components[0].ctx
    }

    pub fn components(&self) -> &[TruncatedPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(TruncatedPoly::is_zero)
    }

    pub fn apply(&self, g: &TruncatedPoly) -> TruncatedPoly {
        let mut out = g.ctx.zero();
        for (i, c) in self.components.iter().enumerate() {
            out = out.add(&c.mul(&g.partial(i)));
        }
        out
    }

    pub fn operator_matrix(&self) -> Matrix {
        let om = self.ctx();
        let cols: Vec<Vec<u32>> = (0..om.dim())
            .map(|j| self.apply(&om.monomial_at(j)).coeffs)
            .collect();
        Matrix::from_columns(om.field(), om.dim(), &cols)
    }

    /// Reads off a derivation from an operator by its values on the variables.
    /// Fails when the operator is not a derivation.
    pub fn from_operator(om: &TruncatedPolyAlgebra, op: &Matrix) -> Result<Self> {
        let components = (0..om.vars())
            .map(|i| {
                let idx = om.index(&{
                    let mut e = vec![0; om.vars()];
                    e[i] = 1;
                    e
                });
                om.from_coeffs(op.column(idx.expect("p ≥ 2")))
            })
            .collect();
        let d = Derivation { components };
        if d.operator_matrix() != *op {
            return Err(Error::Invalid(
                "operator does not satisfy the Leibniz rule".into(),
            ));
        }
        Ok(d)
    }

    /// Commutator `[self, other]` of derivations.
    pub fn bracket(&self, other: &Derivation) -> Derivation {
        let om = self.ctx();
        let components = (0..om.vars())
            .map(|i| {
                let xi = om.var(i);
                self.apply(&other.apply(&xi))
                    .sub(&other.apply(&self.apply(&xi)))
            })
            .collect();
        Derivation { components }
    }

    /// `d^p`, computed as p-fold operator composition and converted back.
    pub fn pth_power(&self) -> Result<Derivation> {
        let om = self.ctx();
        let op = self.operator_matrix().pow(om.field().p() as u64)?;
        Derivation::from_operator(&om, &op)
    }

    /// Least `k` with `d^k = 0` as an operator on `O_m`, or `None`.
    pub fn nilpotency_order(&self) -> Option<usize> {
        let op = self.operator_matrix();
        let n = op.rows();
        let mut power = Matrix::identity(op.field(), n);
        for k in 1..=n {
            power = power.mul(&op).expect("square");
            if power.is_zero() {
                return Some(k);
            }
        }
        None
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*d{}", i + 1))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(p: u32, m: usize) -> TruncatedPolyAlgebra {
        TruncatedPolyAlgebra::new(Fp::new(p).unwrap(), m, 1 << 16).unwrap()
    }

    #[test]
    fn truncation() {
        let o = om(3, 1);
        let x = o.var(0);
        assert!(x.mul(&x.mul(&x)).is_zero());
        assert_eq!(om(3, 2).dim(), 9);
        assert!(TruncatedPolyAlgebra::new(Fp::new(3).unwrap(), 10, 100).is_err());
    }

    #[test]
    fn binomial_product_truncated() {
        let o = om(5, 1);
        let f = o.one().add(&o.var(0));
        let prod = f.mul(&f.pow(4));
        // (1+x)^5 = 1 + x^5 ≡ 1 after truncation (and Frobenius)
        assert_eq!(prod.constant_term(), 1);
        assert_eq!(prod, o.one());
    }

    #[test]
    fn pth_powers_of_derivations() {
        let o = om(5, 1);
        let d = Derivation::partial(&o, 0);
        assert!(d.pth_power().unwrap().is_zero());
        assert_eq!(d.nilpotency_order(), Some(5));
        let euler = Derivation::new(vec![o.var(0)]);
        assert_eq!(euler.pth_power().unwrap(), euler);
        assert_eq!(euler.nilpotency_order(), None);
    }

    #[test]
    fn leibniz_rule() {
        let o = om(3, 2);
        let d = Derivation::new(vec![o.var(1), o.var(0).mul(&o.var(0))]);
        for a in 0..o.dim() {
            for b in 0..o.dim() {
                let (fa, fb) = (o.monomial_at(a), o.monomial_at(b));
                let lhs = d.apply(&fa.mul(&fb));
                let rhs = d.apply(&fa).mul(&fb).add(&fa.mul(&d.apply(&fb)));
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(
            Derivation::from_operator(&o, &d.operator_matrix()).unwrap(),
            d
        );
        assert!(Derivation::from_operator(&o, &Matrix::identity(o.field(), 9)).is_err());
    }
}
