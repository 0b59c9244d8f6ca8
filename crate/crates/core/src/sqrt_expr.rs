//! Elements of the quotient algebra `K(x)[r₁,…,r_k] / (rᵢ² − fᵢ(x))`.
//!
//! An expression is a multilinear combination of square-root symbols with
//! rational-function coefficients. Symbols are identified by their radicand,
//! so expressions built independently over the same radicands compare
//! equal when they agree as algebra elements.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::algebra::{AlgebraicNumber, PuiseuxSeries, RationalFunction};
use crate::error::{domain, Error, Result};
use crate::parser::{parse_error, Env, Expr};

type C = AlgebraicNumber;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtExpression {
    symbols: Vec<RationalFunction>,
    terms: BTreeMap<u32, RationalFunction>,
}

impl SqrtExpression {
    /// The zero element over the given symbols.
    pub fn zero(symbols: &[RationalFunction]) -> Self {
        SqrtExpression {
            symbols: symbols.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_ratfun(symbols: &[RationalFunction], f: RationalFunction) -> Self {
        let mut e = Self::zero(symbols);
        e.add_term(0, f);
        e
    }

    pub fn constant(symbols: &[RationalFunction], c: C) -> Self {
        Self::from_ratfun(symbols, RationalFunction::constant(c))
    }

    /// The symbol `r_i` itself.
    pub fn symbol(symbols: &[RationalFunction], i: usize) -> Self {
        let mut e = Self::zero(symbols);
        e.add_term(1 << i, RationalFunction::one());
        e
    }

    pub fn symbols(&self) -> &[RationalFunction] {
        &self.symbols
    }

    /// Non-zero terms as `(subset mask, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &RationalFunction)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, mask: u32) -> RationalFunction {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a plain rational function, if no symbol occurs.
    pub fn as_ratfun(&self) -> Option<RationalFunction> {
        if self.terms.keys().all(|&k| k == 0) {
            Some(self.coefficient(0))
        } else {
            None
        }
    }

    fn add_term(&mut self, mask: u32, f: RationalFunction) {
        if f.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&mask) {
            Some(old) => old.add(&f),
            None => f,
        };
        if !merged.is_zero() {
            self.terms.insert(mask, merged);
        }
    }

    /// Express `self` over a larger symbol list containing its own symbols.
    fn lift(&self, target: &[RationalFunction]) -> Self {
        if self.symbols == target {
            return self.clone();
        }
        let map: Vec<usize> = self
            .symbols
            .iter()
            .map(|s| target.iter().position(|t| t == s).expect("symbol present"))
            .collect();
        let mut out = Self::zero(target);
        for (&mask, f) in &self.terms {
            let mut m = 0u32;
            for (i, &j) in map.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    m |= 1 << j;
                }
            }
            out.add_term(m, f.clone());
        }
        out
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.symbols == b.symbols {
            return (a.clone(), b.clone());
        }
        let mut all = a.symbols.clone();
        for s in &b.symbols {
            if !all.contains(s) {
                all.push(s.clone());
            }
        }
        (a.lift(&all), b.lift(&all))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (mut a, b) = Self::unify(self, o);
        for (mask, f) in b.terms {
            a.add_term(mask, f);
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_ratfun(&RationalFunction::constant(c.clone()))
    }

    pub fn mul_ratfun(&self, f: &RationalFunction) -> Self {
        let mut out = Self::zero(&self.symbols);
        for (&mask, v) in &self.terms {
            out.add_term(mask, v.mul(f));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = Self::unify(self, o);
        let mut out = Self::zero(&a.symbols);
        for (&ma, fa) in &a.terms {
            for (&mb, fb) in &b.terms {
                let mut f = fa.mul(fb);
                let common = ma & mb;
                for (i, s) in a.symbols.iter().enumerate() {
                    if common >> i & 1 == 1 {
                        f = f.mul(s);
                    }
                }
                out.add_term(ma ^ mb, f);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.symbols, C::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Flip the sign of symbol `i`.
    fn conjugate(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.symbols);
        for (&mask, f) in &self.terms {
            let v = if mask >> i & 1 == 1 {
                f.neg()
            } else {
                f.clone()
            };
            out.add_term(mask, v);
        }
        out
    }

    /// Multiplicative inverse via successive conjugate norms.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("inverse of zero in the square-root algebra");
        }
        let used = self.terms.keys().fold(0u32, |acc, &k| acc | k);
        if used == 0 {
            let f = self.coefficient(0).inv()?;
            return Ok(Self::from_ratfun(&self.symbols, f));
        }
        let i = 31 - used.leading_zeros() as usize;
        let c = self.conjugate(i);
        let n = self.mul(&c);
        if n.is_zero() {
            return Err(Error::Domain(
                "denominator is a zero divisor in the square-root algebra".into(),
            ));
        }
        Ok(c.mul(&n.inv()?))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Evaluate a rational function (in `y`) at this expression.
    pub fn substitute_into(&self, g: &RationalFunction) -> Result<Self> {
        let (n, d) = self.substitute_homogeneous(g);
        n.div(&d)
    }

    /// Numerator and denominator of `g(self)` without dividing.
    pub fn substitute_homogeneous(&self, g: &RationalFunction) -> (Self, Self) {
        let horner = |p: &crate::algebra::Polynomial| {
            let mut acc = Self::zero(&self.symbols);
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(self).add(&Self::constant(&self.symbols, c.clone()));
            }
            acc
        };
        (horner(g.num()), horner(g.den()))
    }

    /// Like `substitute_homogeneous`, after clearing the denominators of the
    /// coefficients so that every product stays polynomial:
    /// with `self = P/D`, returns `Σ nₖ·Pᵏ·D^(m−k)` and `Σ dₖ·Pᵏ·D^(m−k)`.
    pub fn substitute_cleared(&self, g: &RationalFunction) -> (Self, Self) {
        let mut d = crate::algebra::Polynomial::one();
        for f in self.terms.values() {
            let fd = f.den();
            if fd.degree() > 0 && !fd.divides(&d) {
                let common = d.gcd(fd);
                d = d.mul(&fd.exact_div(&common).expect("gcd divides"));
            }
        }
        let dd = RationalFunction::from_poly(d);
        let p = self.mul_ratfun(&dd);
        let m = g.degree();
        let mut dpows = vec![Self::constant(&self.symbols, C::one())];
        for _ in 0..m {
            dpows.push(dpows.last().unwrap().mul_ratfun(&dd));
        }
        let hom = |poly: &crate::algebra::Polynomial| {
            let mut acc = Self::zero(&self.symbols);
            for k in (0..=m).rev() {
                acc = acc.mul(&p).add(&dpows[m - k].scale(&poly.coeff(k)));
            }
            acc
        };
        (hom(g.num()), hom(g.den()))
    }

    /// Numeric value at `x` using principal square roots.
    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let roots: Vec<Complex64> = self
            .symbols
            .iter()
            .map(|s| s.eval_complex(x).sqrt())
            .collect();
        self.eval_with_roots(x, &roots)
    }

    /// Numeric value at `x` with caller-supplied symbol values.
    pub fn eval_with_roots(&self, x: Complex64, roots: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&mask, f) in &self.terms {
            let mut v = f.eval_complex(x);
            for (i, r) in roots.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v *= r;
                }
            }
            acc += v;
        }
        acc
    }

    /// Puiseux expansion of `self(g(y))` around `y = 0`.
    ///
    /// Each symbol `√f` with `f(x) = c·x^v·u(x)`, `u(0) = 1`, expands as
    /// `√c · (x^(1/2))^v · √u`, with the principal root of `c`. The branch of
    /// `x^(1/2)` at `x = g(y)` is `sign · √c_g · y^(w/2) · √u_g` for
    /// `g(y) = c_g·y^w·u_g(y)`.
    pub fn puiseux_at(&self, g: &RationalFunction, sign: i32, prec: i64) -> Result<PuiseuxSeries> {
        let y = PuiseuxSeries::from_poly(&crate::algebra::Polynomial::x(), prec);
        let gs = PuiseuxSeries::compose_ratfun(g, &y)?;
        if gs.valuation() <= 0 {
            return domain("transformation does not vanish at y = 0");
        }
        let half = unit_split(&gs)?;
        let sqrt_x = {
            let (c, w, u) = half;
            let root_u = u.sqrt()?;
            let lead = PuiseuxSeries::monomial(c.sqrt(), w, 2, prec * 2 + w);
            lead.mul(&root_u).scale(&C::from_int(sign as i64))
        };
        let mut roots = Vec::new();
        for f in &self.symbols {
            let fx = PuiseuxSeries::from_poly(&crate::algebra::Polynomial::x(), prec);
            let fs = PuiseuxSeries::compose_ratfun(f, &fx)?;
            let v = fs.valuation();
            let c = fs.coeff(v);
            let unit = fs
                .scale(&c.checked_inv().expect("non-zero"))
                .mul(&PuiseuxSeries::monomial(C::one(), -v, 1, i64::MAX / 8));
            let unit_at_g = compose_unit(&unit, &gs)?;
            let mut r = unit_at_g.sqrt()?.scale(&c.sqrt());
            r = r.mul(&sqrt_x.powi(v)?);
            roots.push(r);
        }
        let mut acc: Option<PuiseuxSeries> = None;
        for (&mask, coef) in &self.terms {
            let mut t = PuiseuxSeries::compose_ratfun(coef, &gs)?;
            for (i, r) in roots.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    t = t.mul(r);
                }
            }
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t),
            });
        }
        Ok(acc.unwrap_or_else(|| PuiseuxSeries::constant(C::zero(), prec)))
    }

    /// Display with symbols named `r1, r2, …`.
    pub fn display(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (&mask, f) in &self.terms {
            let syms: Vec<String> = (0..self.symbols.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| format!("r{}", i + 1))
                .collect();
            let coef = f.display(var);
            let term = if syms.is_empty() {
                coef
            } else if coef == "1" {
                syms.join("*")
            } else {
                format!("({coef})*{}", syms.join("*"))
            };
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&term);
        }
        out
    }

    /// Symbol definitions as `r_i = sqrt(f_i)`.
    pub fn symbol_definitions(&self, var: &str) -> Vec<String> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, s)| format!("r{} = sqrt({})", i + 1, s.display(var)))
            .collect()
    }
}

/// Evaluate a parsed expression in `x` whose free identifiers are either
/// bound constants or the named square-root symbols.
pub fn eval_expr(
    e: &Expr,
    env: &Env,
    names: &[&str],
    radicands: &[RationalFunction],
) -> Result<SqrtExpression> {
    let rec = |a: &Expr| eval_expr(a, env, names, radicands);
    Ok(match e {
        Expr::Num(n) => SqrtExpression::from_ratfun(
            radicands,
            RationalFunction::from_rational(crate::algebra::Q::from_integer(n.clone())),
        ),
        Expr::Var(name, p) => {
            if let Some(k) = names.iter().position(|s| s == name) {
                SqrtExpression::symbol(radicands, k)
            } else if let Some(v) = env.bindings.get(name) {
                SqrtExpression::constant(radicands, v.clone())
            } else if name == "x" {
                SqrtExpression::from_ratfun(radicands, RationalFunction::x())
            } else if name == "i" {
                SqrtExpression::constant(radicands, C::i())
            } else {
                return parse_error(p.line, p.column, format!("unknown identifier '{name}'"));
            }
        }
        Expr::Neg(a) => rec(a)?.neg(),
        Expr::Add(a, b) => rec(a)?.add(&rec(b)?),
        Expr::Sub(a, b) => rec(a)?.sub(&rec(b)?),
        Expr::Mul(a, b) => rec(a)?.mul(&rec(b)?),
        Expr::Div(a, b, _) => rec(a)?.div(&rec(b)?)?,
        Expr::Pow(a, k, _) => {
            let base = rec(a)?;
            let base = if *k < 0 { base.inv()? } else { base };
            base.pow(k.unsigned_abs() as u32)
        }
        Expr::Sqrt(a, p) => match rec(a)?.as_ratfun().and_then(|f| f.as_constant()) {
            Some(c) => SqrtExpression::constant(radicands, c.sqrt()),
            None => return parse_error(p.line, p.column, "sqrt is only allowed on constants"),
        },
    })
}

/// Split an `x`-series `g = c·y^w·u(y)` into `(c, w, u)`.
fn unit_split(g: &PuiseuxSeries) -> Result<(C, i64, PuiseuxSeries)> {
    let w = g.valuation();
    let c = g.coeff(w);
    if c.is_zero() {
        return domain("series vanishes to its precision");
    }
    let u = g
        .scale(&c.checked_inv().expect("non-zero"))
        .mul(&PuiseuxSeries::monomial(
            C::one(),
            -w,
            g.ramification(),
            i64::MAX / 8,
        ));
    Ok((c, w, u))
}

/// `u(g(y))` for an integral series `u` in `x` and `g` of positive valuation.
fn compose_unit(u: &PuiseuxSeries, g: &PuiseuxSeries) -> Result<PuiseuxSeries> {
    let n = u.precision();
    let mut acc = PuiseuxSeries::constant(C::zero(), g.precision());
    for k in (0..n).rev() {
        acc = acc
            .mul(g)
            .add(&PuiseuxSeries::constant(u.coeff(k), g.precision()));
    }
    Ok(acc)
}

impl fmt::Display for SqrtExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}
