//! Textual algebra specifications such as `sl2:p=7`,
//! `semidirect:heisenberg_weyl,p=5` or `G:S=zassenhaus(5,1),m=1,D=span(d1)`.
//!
//! A top-level spec is `name:args`; nested specs are written `name(args)`.
//! Arguments are positional or `key=value`. Every spec has a canonical
//! textual form (all arguments keyed, in schema order) that parses back to
//! the same value.

use std::fmt;

use crate::construct::{
    classical, module_example, tensor_with_om, zassenhaus, GradedAlgebra, GradedSum,
    TruncatedPolyAlgebra, WittAlgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{Fp, Subspace};
use crate::liecore::LieAlgebra;

const OM_BUDGET: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Int,
    Ident,
    Spec,
    Span,
}

struct Param {
    key: &'static str,
    kind: Kind,
    default: Option<i64>,
}

const fn param(key: &'static str, kind: Kind, default: Option<i64>) -> Param {
    Param { key, kind, default }
}

const P: Param = param("p", Kind::Int, None);

fn schema(name: &str) -> Option<&'static [Param]> {
    static SL2: [Param; 1] = [P];
    static ZASS: [Param; 2] = [P, param("n", Kind::Int, Some(1))];
    static WITT: [Param; 2] = [P, param("m", Kind::Int, Some(1))];
    static SIZED: [Param; 2] = [P, param("n", Kind::Int, None)];
    static SEMI: [Param; 2] = [param("module", Kind::Ident, None), P];
    static TENSOR: [Param; 2] = [param("S", Kind::Spec, None), param("m", Kind::Int, Some(1))];
    static GSUM: [Param; 3] = [
        param("S", Kind::Spec, None),
        param("m", Kind::Int, Some(1)),
        param("D", Kind::Span, None),
    ];
    Some(match name {
        "sl2" | "heisenberg" | "two_dim_nonabelian" => &SL2,
        "zassenhaus" => &ZASS,
        "witt" => &WITT,
        "abelian" | "uppertriangular" | "strictlyuppertriangular" => &SIZED,
        "semidirect" => &SEMI,
        "tensor" => &TENSOR,
        "G" => &GSUM,
        _ => return None,
    })
}

/// One term `c · x^a ∂_i` of a derivation expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationTerm {
    pub coef: i64,
    /// `(variable, exponent)` with variables 1-based, sorted, exponents ≥ 1.
    pub monomial: Vec<(usize, u32)>,
    /// 1-based index of `∂`.
    pub partial: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecValue {
    Int(i64),
    Ident(String),
    Spec(Box<AlgebraSpec>),
    /// A list of derivations of `O_m`, each a sum of terms.
    Span(Vec<Vec<DerivationTerm>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    name: String,
    args: Vec<(String, SpecValue)>,
}

/// A constructed algebra, with its grading when the construction has one.
#[derive(Clone, Debug)]
pub struct BuiltAlgebra {
    pub algebra: LieAlgebra,
    pub grading: Option<Vec<i64>>,
    pub graded_sum: Option<GradedSum>,
}

impl BuiltAlgebra {
    fn plain(algebra: LieAlgebra) -> Self {
        BuiltAlgebra {
            algebra,
            grading: None,
            graded_sum: None,
        }
    }

    fn graded(g: GradedAlgebra) -> Self {
        BuiltAlgebra {
            grading: Some(g.degrees().to_vec()),
            algebra: g.into_algebra(),
            graded_sum: None,
        }
    }

    pub fn graded_algebra(&self) -> Option<GradedAlgebra> {
        let degrees = self.grading.clone()?;
        GradedAlgebra::new(self.algebra.clone(), degrees).ok()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.src[start..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos = start;
            return self.err("expected a name");
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn value(&mut self, kind: Option<Kind>) -> Result<SpecValue> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' => Ok(SpecValue::Int(self.int()?)),
            Some(_) => {
                let at = self.pos;
                let name = self.ident()?;
                if name == "span" && kind != Some(Kind::Spec) {
                    self.expect('(')?;
                    return Ok(SpecValue::Span(self.derivation_list()?));
                }
                self.skip_ws();
                if self.peek() == Some('(') {
                    self.pos += 1;
                    let args = if self.eat(')') {
                        Vec::new()
                    } else {
                        let a = self.arglist()?;
                        self.expect(')')?;
                        a
                    };
                    let spec = AlgebraSpec::normalize(name, args, at)?;
                    Ok(SpecValue::Spec(Box::new(spec)))
                } else if kind == Some(Kind::Spec) {
                    Ok(SpecValue::Spec(Box::new(AlgebraSpec::normalize(
                        name,
                        vec![],
                        at,
                    )?)))
                } else {
                    Ok(SpecValue::Ident(name))
                }
            }
            None => self.err("unexpected end of input"),
        }
    }

    fn arglist(&mut self) -> Result<Vec<(Option<String>, SpecValue, usize)>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            // key=value or a bare value
            let save = self.pos;
            let key = match self.ident() {
                Ok(k) if self.eat('=') => Some(k),
                _ => {
                    self.pos = save;
                    None
                }
            };
            let v = self.value(None)?;
            out.push((key, v, at));
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn derivation_list(&mut self) -> Result<Vec<Vec<DerivationTerm>>> {
        let mut out = Vec::new();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            out.push(self.derivation()?);
            if self.eat(')') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn derivation(&mut self) -> Result<Vec<DerivationTerm>> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let mut t = self.term()?;
            t.coef *= sign;
            terms.push(t);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(terms);
            }
        }
    }

    /// `[c*] (x_i[^e] *)* d_j`
    fn term(&mut self) -> Result<DerivationTerm> {
        let mut coef = 1;
        let mut monomial: Vec<(usize, u32)> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coef *= self.int()?,
                Some('x') => {
                    self.pos += 1;
                    let v = self.int()?;
                    let e = if self.eat('^') { self.int()? } else { 1 };
                    if v < 1 || e < 0 {
                        return self.err("bad variable or exponent");
                    }
                    match monomial.iter_mut().find(|(w, _)| *w == v as usize) {
                        Some(entry) => entry.1 += e as u32,
                        None => monomial.push((v as usize, e as u32)),
                    }
                }
                Some('d') => {
                    self.pos += 1;
                    let j = self.int()?;
                    if j < 1 {
                        return self.err("partial index starts at 1");
                    }
                    monomial.retain(|&(_, e)| e > 0);
                    monomial.sort_unstable();
                    return Ok(DerivationTerm {
                        coef,
                        monomial,
                        partial: j as usize,
                    });
                }
                _ => return self.err("expected a coefficient, x<i> or d<i>"),
            }
            self.expect('*')?;
        }
    }
}

impl AlgebraSpec {
    pub fn parse(src: &str) -> Result<AlgebraSpec> {
        let mut p = Parser { src, pos: 0 };
        let name = p.ident()?;
        let args = if p.eat(':') {
            p.arglist()?
        } else if p.eat('(') {
            if p.eat(')') {
                Vec::new()
            } else {
                let a = p.arglist()?;
                p.expect(')')?;
                a
            }
        } else {
            Vec::new()
        };
        p.skip_ws();
        if p.pos != src.len() {
            return p.err("unexpected trailing input");
        }
        AlgebraSpec::normalize(name, args, 0)
    }

    fn normalize(
        name: String,
        raw: Vec<(Option<String>, SpecValue, usize)>,
        at: usize,
    ) -> Result<Self> {
        let Some(params) = schema(&name) else {
            return Err(Error::Parse {
                pos: at,
                msg: format!("unknown construction '{name}'"),
            });
        };
        let mut slots: Vec<Option<SpecValue>> = vec![None; params.len()];
        let mut next_positional = 0;
        for (key, value, pos) in raw {
            let idx = match key {
                Some(k) => params.iter().position(|p| p.key == k).ok_or(Error::Parse {
                    pos,
                    msg: format!("'{name}' has no parameter '{k}'"),
                })?,
                None => {
                    let i = next_positional;
                    next_positional += 1;
                    if i >= params.len() {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("too many arguments for '{name}'"),
                        });
                    }
                    i
                }
            };
            if slots[idx].is_some() {
                return Err(Error::Parse {
                    pos,
                    msg: format!("parameter '{}' given twice", params[idx].key),
                });
            }
            let value = match (params[idx].kind, value) {
                (Kind::Int, v @ SpecValue::Int(_)) => v,
                (Kind::Ident, v @ SpecValue::Ident(_)) => v,
                (Kind::Spec, v @ SpecValue::Spec(_)) => v,
                (Kind::Spec, SpecValue::Ident(n)) => {
                    SpecValue::Spec(Box::new(AlgebraSpec::normalize(n, vec![], pos)?))
                }
                (Kind::Span, v @ SpecValue::Span(_)) => v,
                (kind, _) => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("parameter '{}' expects {kind:?}", params[idx].key),
                    })
                }
            };
            slots[idx] = Some(value);
        }
        let mut args = Vec::new();
        for (param, slot) in params.iter().zip(slots) {
            match (slot, param.default) {
                (Some(v), _) => args.push((param.key.to_string(), v)),
                (None, Some(d)) => args.push((param.key.to_string(), SpecValue::Int(d))),
                (None, None) => {}
            }
        }
        Ok(AlgebraSpec { name, args })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn get(&self, key: &str) -> Option<&SpecValue> {
        self.args.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    fn int(&self, key: &str) -> Result<i64> {
        match self.get(key) {
            Some(SpecValue::Int(v)) => Ok(*v),
            _ => Err(Error::Invalid(format!(
                "'{}' needs parameter '{key}'",
                self.name
            ))),
        }
    }

    fn usize_arg(&self, key: &str) -> Result<usize> {
        let v = self.int(key)?;
        usize::try_from(v).map_err(|_| Error::Invalid(format!("'{key}' must be non-negative")))
    }

    /// Supplies `p` to this spec and every nested spec that lacks one.
    pub fn with_default_p(mut self, p: u32) -> Self {
        let wants_p = schema(&self.name).is_some_and(|s| s.iter().any(|q| q.key == "p"));
        if wants_p && self.get("p").is_none() {
            let params = schema(&self.name).unwrap();
            let idx = params.iter().position(|q| q.key == "p").unwrap();
            // keep schema order
            let before = params[..idx]
                .iter()
                .filter(|q| self.get(q.key).is_some())
                .count();
            self.args
                .insert(before, ("p".into(), SpecValue::Int(p as i64)));
        }
        for (_, v) in &mut self.args {
            if let SpecValue::Spec(s) = v {
                let inner = (**s).clone().with_default_p(p);
                **s = inner;
            }
        }
        self
    }

    /// The prime of the construction, looking through nested specs.
    pub fn prime(&self) -> Option<u32> {
        if let Some(SpecValue::Int(p)) = self.get("p") {
            return u32::try_from(*p).ok();
        }
        self.args.iter().find_map(|(_, v)| match v {
            SpecValue::Spec(s) => s.prime(),
            _ => None,
        })
    }

    fn field(&self) -> Result<Fp> {
        let p = self.int("p")?;
        let p = u32::try_from(p).map_err(|_| Error::NotPrime(0))?;
        Fp::new(p)
    }

    pub fn build(&self) -> Result<BuiltAlgebra> {
        match self.name.as_str() {
            "sl2" => Ok(BuiltAlgebra::graded(classical::sl2_graded(self.field()?)?)),
            "heisenberg" => Ok(BuiltAlgebra::plain(classical::heisenberg(self.field()?))),
            "two_dim_nonabelian" => Ok(BuiltAlgebra::plain(classical::two_dim_nonabelian(
                self.field()?,
            ))),
            "abelian" => Ok(BuiltAlgebra::plain(LieAlgebra::abelian(
                self.field()?,
                self.usize_arg("n")?,
            ))),
            "uppertriangular" => Ok(BuiltAlgebra::plain(classical::upper_triangular(
                self.field()?,
                self.usize_arg("n")?,
            )?)),
            "strictlyuppertriangular" => Ok(BuiltAlgebra::plain(
                classical::strictly_upper_triangular(self.field()?, self.usize_arg("n")?)?,
            )),
            "zassenhaus" => {
                let n = u32::try_from(self.int("n")?)
                    .map_err(|_| Error::Invalid("n must be positive".into()))?;
                if n == 0 {
                    return Err(Error::Invalid("n must be positive".into()));
                }
                Ok(BuiltAlgebra::graded(zassenhaus(self.field()?, n)?))
            }
            "witt" => {
                let w = WittAlgebra::new(self.field()?, self.usize_arg("m")?, OM_BUDGET)?;
                Ok(BuiltAlgebra::graded(witt_graded(&w)?))
            }
            "semidirect" => {
                let Some(SpecValue::Ident(module)) = self.get("module") else {
                    return Err(Error::Invalid("semidirect needs a module name".into()));
                };
                let ex = module_example(module, self.field()?)?;
                Ok(BuiltAlgebra::plain(ex.semidirect()?))
            }
            "tensor" => {
                let s = self.nested("S")?.build()?;
                let om =
                    TruncatedPolyAlgebra::new(s.algebra.field(), self.usize_arg("m")?, OM_BUDGET)?;
                let alg = tensor_with_om(&s.algebra, &om)?;
                let grading = s
                    .grading
                    .map(|d| (0..alg.dim()).map(|u| d[u / om.dim()]).collect());
                Ok(BuiltAlgebra {
                    algebra: alg,
                    grading,
                    graded_sum: None,
                })
            }
            "G" => {
                let g = self.graded_sum()?;
                Ok(BuiltAlgebra {
                    algebra: g.algebra().clone(),
                    grading: Some(g.graded().degrees().to_vec()),
                    graded_sum: Some(g),
                })
            }
            other => Err(Error::Invalid(format!("unknown construction '{other}'"))),
        }
    }

    fn nested(&self, key: &str) -> Result<&AlgebraSpec> {
        match self.get(key) {
            Some(SpecValue::Spec(s)) => Ok(s),
            _ => Err(Error::Invalid(format!(
                "'{}' needs parameter '{key}'",
                self.name
            ))),
        }
    }

    /// `S ⊗ O_m + D` for a `G:` spec.
    pub fn graded_sum(&self) -> Result<GradedSum> {
        if self.name != "G" {
            return Err(Error::Invalid(format!(
                "'{}' is not a graded sum",
                self.name
            )));
        }
        let s = self
            .nested("S")?
            .build()?
            .graded_algebra()
            .ok_or_else(|| Error::Invalid("S must be a graded construction".into()))?;
        let field = s.algebra().field();
        let w = WittAlgebra::new(field, self.usize_arg("m")?, OM_BUDGET)?;
        let Some(SpecValue::Span(ders)) = self.get("D") else {
            return Err(Error::Invalid("G needs D=span(...)".into()));
        };
        let vectors = ders
            .iter()
            .map(|terms| derivation_vector(&w, terms))
            .collect::<Result<Vec<_>>>()?;
        let d = Subspace::span(field, w.algebra().dim(), &vectors);
        GradedSum::new(&s, &w, &d)
    }
}

/// `W_m` with `deg(x^a ∂_i) = |a| − 1`.
fn witt_graded(w: &WittAlgebra) -> Result<GradedAlgebra> {
    let om = w.om();
    let np = om.dim();
    let degrees = (0..w.algebra().dim())
        .map(|u| om.exponents(u % np).iter().sum::<u32>() as i64 - 1)
        .collect();
    GradedAlgebra::new(w.algebra().clone(), degrees)
}

fn derivation_vector(w: &WittAlgebra, terms: &[DerivationTerm]) -> Result<Vec<u32>> {
    let om = w.om();
    let f = om.field();
    let m = om.vars();
    let mut v = vec![0; w.algebra().dim()];
    for t in terms {
        if t.partial > m || t.monomial.iter().any(|&(x, _)| x > m) {
            return Err(Error::Invalid(format!(
                "derivation uses a variable beyond m = {m}"
            )));
        }
        let mut exps = vec![0; m];
        for &(x, e) in &t.monomial {
            exps[x - 1] = e;
        }
        let Some(mono) = om.index(&exps) else {
            continue; // x_i^p = 0
        };
        let k = w.index(t.partial - 1, mono);
        v[k] = f.add(v[k], f.reduce(t.coef));
    }
    Ok(v)
}

impl fmt::Display for DerivationTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef != 1 {
            write!(f, "{}*", self.coef)?;
        }
        for &(x, e) in &self.monomial {
            if e == 1 {
                write!(f, "x{x}*")?;
            } else {
                write!(f, "x{x}^{e}*")?;
            }
        }
        write!(f, "d{}", self.partial)
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecValue::Int(v) => write!(f, "{v}"),
            SpecValue::Ident(s) => write!(f, "{s}"),
            SpecValue::Spec(s) => write!(f, "{}({})", s.name, s.arg_string()),
            SpecValue::Span(ders) => {
                let parts: Vec<String> = ders
                    .iter()
                    .map(|terms| {
                        let mut s = String::new();
                        for (i, t) in terms.iter().enumerate() {
                            let txt = t.to_string();
                            if i > 0 {
                                s.push('+');
                            }
                            s.push_str(&txt);
                        }
                        s.replace("+-", "-")
                    })
                    .collect();
                write!(f, "span({})", parts.join(","))
            }
        }
    }
}

impl AlgebraSpec {
    fn arg_string(&self) -> String {
        self.args
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{}:{}", self.name, self.arg_string())
        }
    }
}

impl std::str::FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraSpec::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let cases = [
            ("sl2:p=7", "sl2:p=7"),
            ("zassenhaus:p=5", "zassenhaus:p=5,n=1"),
            (
                "semidirect:heisenberg_weyl,p=5",
                "semidirect:module=heisenberg_weyl,p=5",
            ),
            ("uppertriangular:n=3,p=7", "uppertriangular:p=7,n=3"),
            (
                "G:S=zassenhaus(5,1),m=1,D=span(d1)",
                "G:S=zassenhaus(p=5,n=1),m=1,D=span(d1)",
            ),
            (
                "G:S=zassenhaus(5),m=2,D=span(x1^2*d2 - 2*x2*d1, d1)",
                "G:S=zassenhaus(p=5,n=1),m=2,D=span(x1^2*d2-2*x2*d1,d1)",
            ),
        ];
        for (src, canon) in cases {
            let s = AlgebraSpec::parse(src).unwrap();
            assert_eq!(s.to_string(), canon);
            assert_eq!(AlgebraSpec::parse(canon).unwrap(), s);
        }
    }

    #[test]
    fn parse_errors_have_positions() {
        match AlgebraSpec::parse("sl2:p=7,q=3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            AlgebraSpec::parse("nope:p=3"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            AlgebraSpec::parse("sl2:p=7)"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            AlgebraSpec::parse("sl2:p=x"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn builds() {
        let dims = [
            ("sl2:p=7", 3),
            ("zassenhaus:p=5,n=2", 25),
            ("witt:p=3,m=2", 18),
            ("semidirect:heisenberg_weyl,p=5", 8),
            ("semidirect:two_dim_nonabelian,p=3", 5),
            ("uppertriangular:n=3,p=7", 6),
            ("tensor:S=sl2(7),m=1", 21),
            ("G:S=zassenhaus(5,1),m=1,D=span(d1)", 26),
        ];
        for (src, dim) in dims {
            let b = AlgebraSpec::parse(src).unwrap().build().unwrap();
            assert_eq!(b.algebra.dim(), dim, "{src}");
            b.algebra.ensure_valid().unwrap();
        }
    }

    #[test]
    fn default_p_fills_nested_specs() {
        let s = AlgebraSpec::parse("tensor:S=sl2,m=1").unwrap();
        assert!(s.build().is_err());
        let s = s.with_default_p(5);
        assert_eq!(s.to_string(), "tensor:S=sl2(p=5),m=1");
        assert_eq!(s.prime(), Some(5));
        let u = AlgebraSpec::parse("uppertriangular:n=2")
            .unwrap()
            .with_default_p(3);
        assert_eq!(u.to_string(), "uppertriangular:p=3,n=2");
    }
}
