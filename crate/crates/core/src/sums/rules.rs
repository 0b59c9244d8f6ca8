//! Generating-function rewrite rules and flattening to nested integrals.

use std::fmt;

use num_complex::Complex64;

use super::{Layer, Prefactor, SumExpr, C};
use crate::algebra::{Polynomial, RationalFunction, Q};
use crate::error::{Error, Result};
use crate::integrals::{eval_word_at, sign_constant, Base, IntegralWord, Letter, WordCombination};

/// The implemented rewrite rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `Σ xⁿ fₙ/n = ∫₀ˣ (1/t) Σ tⁿ fₙ dt`.
    HarmonicDivide,
    /// `Σ xⁿ binom(2n,n) Σᵢ fᵢ` through the kernel `1/(t√(1/4-t))`.
    CentralBinomial,
    /// `Σ xⁿ/(n·binom(2n,n)) Σᵢ fᵢ` with `fᵢ = δ_{1,i}`, the shifted form.
    InverseBinomialShifted,
    /// `Σ xⁿ/(n·binom(2n,n)) Σᵢ fᵢ`, the unshifted form.
    InverseBinomial,
    /// `Σ xⁿ/((2n+1)·binom(2n,n)) Σᵢ fᵢ`.
    InverseBinomialOdd,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::HarmonicDivide,
        Rule::CentralBinomial,
        Rule::InverseBinomialShifted,
        Rule::InverseBinomial,
        Rule::InverseBinomialOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::HarmonicDivide => "harmonic-divide",
            Rule::CentralBinomial => "central-binomial",
            Rule::InverseBinomialShifted => "inverse-binomial-shifted",
            Rule::InverseBinomial => "inverse-binomial",
            Rule::InverseBinomialOdd => "inverse-binomial-odd",
        }
    }
}

fn q(n: i64, d: i64) -> C {
    C::from(Q::new(n.into(), d.into()))
}

/// `r(x) · ∏ (c_a/(x-a))^(1/2)` with base-0 sign constants and distinct
/// points sorted by value.
#[derive(Clone, Debug, PartialEq)]
pub struct Alg {
    pub r: RationalFunction,
    pub roots: Vec<C>,
}

impl Alg {
    pub fn one() -> Self {
        Self::rational(RationalFunction::one())
    }

    pub fn rational(r: RationalFunction) -> Self {
        Alg {
            r,
            roots: Vec::new(),
        }
    }

    fn new(r: RationalFunction, roots: &[C]) -> Self {
        let mut roots = roots.to_vec();
        roots.sort_by(|a, b| {
            let (x, y) = (a.to_complex(), b.to_complex());
            x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im))
        });
        Alg { r, roots }
    }

    fn pole(a: &C) -> RationalFunction {
        let c = C::from_int(sign_constant(a, Base::Zero) as i64);
        RationalFunction::new(Polynomial::constant(c), Polynomial::linear_root(a))
            .expect("non-zero")
    }

    /// `1/t`.
    pub fn inv_t() -> Self {
        Self::rational(Self::pole(&C::zero()))
    }

    /// `1/(t√(1/4-t))`.
    pub fn quarter_kernel() -> Self {
        Self::new(Self::pole(&C::zero()), &[q(1, 4)])
    }

    /// `1/(√t√(4-t))`.
    pub fn four_kernel() -> Self {
        Self::new(RationalFunction::one(), &[C::zero(), C::from_int(4)])
    }

    /// `√x/√(4-x)`.
    pub fn sqrt_ratio() -> Self {
        Self::new(RationalFunction::x(), &[C::zero(), C::from_int(4)])
    }

    pub fn scale(&self, c: &C) -> Self {
        Alg {
            r: self.r.scale(c),
            roots: self.roots.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = self.r.mul(&o.r);
        let mut roots = Vec::new();
        for a in &self.roots {
            if o.roots.contains(a) {
                r = r.mul(&Self::pole(a));
            } else {
                roots.push(a.clone());
            }
        }
        roots.extend(o.roots.iter().filter(|a| !self.roots.contains(a)).cloned());
        Self::new(r, &roots)
    }

    pub fn is_rational(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut v = self.r.eval_complex(x);
        for a in &self.roots {
            let c = sign_constant(a, Base::Zero) as f64;
            v *= (Complex64::new(c, 0.0) / (x - a.to_complex())).sqrt();
        }
        v
    }

    /// Rewrite as a combination of letters, when every piece of the
    /// partial-fraction split lies in the alphabet.
    pub fn letters(&self) -> Result<Vec<(C, Letter)>> {
        let d = crate::integrals::decompose(&self.r);
        let outside =
            || Error::Unsupported(format!("integrand {self} is outside the letter alphabet"));
        if !d.remainder.is_zero() {
            if self.roots.is_empty() {
                return Ok(vec![(C::one(), Letter::generic(self.r.clone()))]);
            }
            return Err(outside());
        }
        let mut out = Vec::new();
        let k = self.roots.len();
        for (j, c) in d.polynomial.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let letter = match (k, j) {
                (0, _) => return Ok(vec![(C::one(), Letter::generic(self.r.clone()))]),
                (_, 0) if k >= 2 => Letter::sqrt_set(self.roots.clone())?,
                (_, j) if j >= 1 && j + 2 <= k => {
                    Letter::power_times_sqrt(self.roots.clone(), j as u32)?
                }
                _ => return Err(outside()),
            };
            out.push((c.clone(), letter));
        }
        for p in &d.poles {
            if self.roots.contains(&p.pole) {
                return Err(outside());
            }
            let ca = C::from_int(sign_constant(&p.pole, Base::Zero) as i64);
            let letter = if k == 0 {
                Letter::rat(p.pole.clone())
            } else {
                Letter::rat_times_sqrt(p.pole.clone(), self.roots.clone())?
            };
            out.push((&p.coefficient * &ca, letter));
        }
        Ok(out)
    }
}

impl fmt::Display for Alg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut r = self.r.clone();
        let mut up = Vec::new();
        let mut down = Vec::new();
        for a in &self.roots {
            let c = C::from_int(sign_constant(a, Base::Zero) as i64);
            let lin = Polynomial::linear_root(a).scale(&c);
            let p = a.to_string().replace(' ', "");
            let name = if a.is_zero() {
                "sqrt(x)".to_string()
            } else if c.is_one() {
                format!("sqrt(x-({p}))")
            } else if p.contains(['+', '-']) {
                format!("sqrt(({p})-x)")
            } else {
                format!("sqrt({p}-x)")
            };
            if lin.divides(r.num()) {
                let n = r.num().exact_div(&lin).expect("divides");
                r = RationalFunction::new(n, r.den().clone()).expect("non-zero");
                up.push(name);
            } else {
                down.push(name);
            }
        }
        let mut num = Vec::new();
        if !r.is_constant() || !r.as_constant().is_some_and(|c| c.is_one()) || up.is_empty() {
            let s = r.display("x");
            if r.is_constant() || (!s.contains(' ') && !s.contains('/')) || self.roots.is_empty() {
                num.push(s);
            } else {
                num.push(format!("({s})"));
            }
        }
        num.extend(up);
        write!(f, "{}", num.join("*"))?;
        if !down.is_empty() {
            if down.len() == 1 {
                write!(f, "/{}", down[0])?;
            } else {
                write!(f, "/({})", down.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `coefficient · alg(x) · H_letters(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coefficient: C,
    pub alg: Alg,
    pub letters: Vec<Letter>,
}

/// A residual generating function `c · Σ_{n≥1} xⁿ · layer`.
#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub coefficient: C,
    pub layer: Layer,
}

impl Node {
    pub fn new(coefficient: C, layer: Layer) -> Self {
        Node { coefficient, layer }
    }

    pub fn from_sum(s: &SumExpr) -> Self {
        Node::new(C::one(), s.outer.clone())
    }

    /// Fold inner layers with a closed form: a delta layer is constant for
    /// `n ≥ 1`, and a bare layer `Σ 1` is `n`.
    fn normalized(&self) -> Node {
        let mut node = self.clone();
        while let Some(inner) = node.layer.inner.clone() {
            if inner.prefactor.delta {
                node.coefficient = &node.coefficient * &inner.sum_at_one();
                node.layer.inner = None;
            } else if inner.prefactor.is_one() && inner.inner.is_none() {
                node.layer.prefactor = node.layer.prefactor.clone().with_power(1);
                node.layer.inner = None;
            } else {
                break;
            }
        }
        node
    }

    /// Terminal series with a closed form: delta-terminated and geometric.
    fn closed_form(&self) -> Option<Term> {
        let p = &self.layer.prefactor;
        if p.delta {
            let r = RationalFunction::x().scale(&(&self.coefficient * &self.layer.sum_at_one()));
            return Some(Term {
                coefficient: C::one(),
                alg: Alg::rational(r),
                letters: Vec::new(),
            });
        }
        if self.layer.inner.is_none() && p.power == 0 && p.binom == 0 && p.odd == 0 {
            let bx = Polynomial::monomial(p.base.clone(), 1);
            let r = RationalFunction::new(bx.clone(), Polynomial::one().sub(&bx)).ok()?;
            return Some(Term {
                coefficient: self.coefficient.clone(),
                alg: Alg::rational(r),
                letters: Vec::new(),
            });
        }
        None
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = SumExpr::new(self.layer.clone());
        if self.coefficient.is_one() {
            write!(f, "{s}")
        } else {
            write!(f, "({})*{s}", self.coefficient)
        }
    }
}

/// A partially rewritten generating function.
#[derive(Clone, Debug, PartialEq)]
pub enum GfExpr {
    Node(Node),
    Closed(Term),
    /// `alg(x) · body(x)`.
    Scaled(Alg, Box<GfExpr>),
    /// `∫₀ˣ kernel(t) · body(t) dt`.
    Integral {
        kernel: Alg,
        body: Box<GfExpr>,
    },
    Sum(Vec<GfExpr>),
}

impl fmt::Display for GfExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfExpr::Node(n) => write!(f, "{n}"),
            GfExpr::Closed(t) => write!(
                f,
                "{}",
                GeneratingFunction {
                    terms: vec![t.clone()]
                }
            ),
            GfExpr::Scaled(a, b) => write!(f, "{a}*[{b}]"),
            GfExpr::Integral { kernel, body } => write!(f, "int_0^x ({kernel})*[{body}] dx"),
            GfExpr::Sum(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join(" + "))
            }
        }
    }
}

/// The inner layer seen by a binomial rule: the actual one, or `δ_{1,i}`
/// when the node has none.
fn inner_or_delta(l: &Layer) -> Layer {
    match &l.inner {
        Some(i) => (**i).clone(),
        None => Layer::new(Prefactor::one().with_delta(), None),
    }
}

fn shifted(node: &Node, p: Prefactor, inner: &Layer) -> GfExpr {
    GfExpr::Node(Node::new(
        node.coefficient.clone(),
        Layer {
            prefactor: p.mul(&inner.prefactor),
            inner: inner.inner.clone(),
        },
    ))
}

/// Apply one rule to a node; `None` when the pattern does not match.
pub fn apply_rule(rule: Rule, node: &Node) -> Option<GfExpr> {
    let p = &node.layer.prefactor;
    let binom_only = |power: i32, binom: i32, odd: i32| {
        p.base.is_one() && !p.delta && p.power == power && p.binom == binom && p.odd == odd
    };
    match rule {
        Rule::HarmonicDivide => {
            if p.power >= 0 {
                return None;
            }
            let mut layer = node.layer.clone();
            layer.prefactor.power += 1;
            Some(GfExpr::Integral {
                kernel: Alg::inv_t(),
                body: Box::new(GfExpr::Node(Node::new(node.coefficient.clone(), layer))),
            })
        }
        Rule::CentralBinomial => {
            if !binom_only(0, 1, 0) {
                return None;
            }
            let f = inner_or_delta(&node.layer);
            Some(GfExpr::Scaled(
                Alg::new(RationalFunction::constant(q(1, 4)), &[q(1, 4)]),
                Box::new(GfExpr::Integral {
                    kernel: Alg::quarter_kernel(),
                    body: Box::new(shifted(
                        node,
                        Prefactor::one().with_power(1).with_binom(1),
                        &f,
                    )),
                }),
            ))
        }
        Rule::InverseBinomialShifted => {
            if !binom_only(-1, -1, 0) {
                return None;
            }
            let f = inner_or_delta(&node.layer);
            if f.prefactor != Prefactor::one().with_delta() || f.inner.is_some() {
                return None;
            }
            Some(GfExpr::Scaled(
                Alg::sqrt_ratio(),
                Box::new(GfExpr::Integral {
                    kernel: Alg::four_kernel(),
                    body: Box::new(GfExpr::Closed(Term {
                        coefficient: node.coefficient.clone(),
                        alg: Alg::one(),
                        letters: Vec::new(),
                    })),
                }),
            ))
        }
        Rule::InverseBinomial => {
            if !binom_only(-1, -1, 0) {
                return None;
            }
            let f = inner_or_delta(&node.layer);
            Some(GfExpr::Sum(vec![
                shifted(node, Prefactor::one().with_power(-1).with_binom(-1), &f),
                GfExpr::Scaled(
                    Alg::sqrt_ratio(),
                    Box::new(GfExpr::Integral {
                        kernel: Alg::four_kernel(),
                        body: Box::new(shifted(node, Prefactor::one().with_binom(-1), &f)),
                    }),
                ),
            ]))
        }
        Rule::InverseBinomialOdd => {
            if !binom_only(0, -1, -1) {
                return None;
            }
            let f = inner_or_delta(&node.layer);
            Some(GfExpr::Scaled(
                Alg::new(RationalFunction::from_int(2), &[C::zero(), C::from_int(4)]),
                Box::new(GfExpr::Integral {
                    kernel: Alg::four_kernel(),
                    body: Box::new(shifted(node, Prefactor::one().with_binom(-1), &f)),
                }),
            ))
        }
    }
}

/// A fully rewritten generating function.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GeneratingFunction {
    pub terms: Vec<Term>,
}

impl GeneratingFunction {
    fn push(&mut self, t: Term) {
        if t.coefficient.is_zero() || t.alg.r.is_zero() {
            return;
        }
        if let Some(pos) = self
            .terms
            .iter()
            .position(|u| u.alg == t.alg && u.letters == t.letters)
        {
            let s = &self.terms[pos].coefficient + &t.coefficient;
            if s.is_zero() {
                self.terms.remove(pos);
            } else {
                self.terms[pos].coefficient = s;
            }
        } else {
            self.terms.push(t);
        }
    }

    fn from_terms(terms: Vec<Term>) -> Self {
        let mut out = Self::default();
        for t in terms {
            out.push(t);
        }
        out
    }

    /// The words, when no algebraic prefactor other than a constant remains.
    pub fn words(&self) -> Option<WordCombination> {
        let mut out = WordCombination::zero();
        for t in &self.terms {
            if !t.alg.is_rational() || t.letters.is_empty() {
                return None;
            }
            let c = t.alg.r.as_constant()?;
            out.add_term(
                &t.coefficient * &c,
                IntegralWord::new(t.letters.clone(), Base::Zero),
            );
        }
        Some(out)
    }

    /// Numeric value at `x`.
    pub fn eval(&self, x: Complex64, tol: f64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let w = IntegralWord::new(t.letters.clone(), Base::Zero);
            let h = eval_word_at(&w, x, tol)?;
            acc += t.coefficient.to_complex() * t.alg.eval(x) * h;
        }
        Ok(acc)
    }

    /// Terms in a canonical order, for order-independent comparison.
    pub fn sorted(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by_key(|t| {
            let w = IntegralWord::new(t.letters.clone(), Base::Zero);
            (w.body(), t.alg.to_string())
        });
        GeneratingFunction { terms }
    }

    pub fn latex(&self) -> String {
        if let Some(w) = self.words() {
            return w.latex();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let w = IntegralWord::new(t.letters.clone(), Base::Zero);
                let mut s = String::new();
                if !t.coefficient.is_one() {
                    s.push_str(&format!("\\left({}\\right)", t.coefficient));
                }
                s.push_str(&format!("\\left({}\\right)", t.alg));
                if !t.letters.is_empty() {
                    s.push_str(&w.latex());
                }
                s
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for GeneratingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(w) = self.words() {
            return write!(f, "{w}");
        }
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mut factors = Vec::new();
                if !t.coefficient.is_one() {
                    factors.push(format!("({})", t.coefficient));
                }
                let a = t.alg.to_string();
                if a != "1" || t.letters.is_empty() {
                    factors.push(if a.contains(" + ") || a.contains(" - ") {
                        format!("({a})")
                    } else {
                        a
                    });
                }
                if !t.letters.is_empty() {
                    factors.push(IntegralWord::new(t.letters.clone(), Base::Zero).body());
                }
                factors.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Strategy for choosing among applicable rules.
#[derive(Clone, Copy)]
enum Search {
    First,
    All,
}

fn rewrite_node(node: &Node, search: Search) -> Result<Vec<Vec<Term>>> {
    let node = node.normalized();
    if let Some(t) = node.closed_form() {
        return Ok(vec![vec![t]]);
    }
    let mut results = Vec::new();
    let mut first_error = None;
    for rule in Rule::ALL {
        let Some(e) = apply_rule(rule, &node) else {
            continue;
        };
        match flatten(&e, search) {
            Ok(mut r) => {
                results.append(&mut r);
                if matches!(search, Search::First) {
                    break;
                }
            }
            Err(err) => {
                first_error.get_or_insert(err);
            }
        }
    }
    if results.is_empty() {
        return Err(first_error
            .unwrap_or_else(|| Error::Unsupported(format!("no rewrite rule applies to {node}"))));
    }
    Ok(results)
}

fn cartesian(parts: Vec<Vec<Vec<Term>>>) -> Vec<Vec<Term>> {
    let mut acc: Vec<Vec<Term>> = vec![Vec::new()];
    for options in parts {
        let mut next = Vec::new();
        for a in &acc {
            for o in &options {
                let mut v = a.clone();
                v.extend(o.iter().cloned());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

fn flatten(e: &GfExpr, search: Search) -> Result<Vec<Vec<Term>>> {
    match e {
        GfExpr::Node(n) => rewrite_node(n, search),
        GfExpr::Closed(t) => Ok(vec![vec![t.clone()]]),
        GfExpr::Scaled(a, body) => Ok(flatten(body, search)?
            .into_iter()
            .map(|ts| {
                ts.into_iter()
                    .map(|t| Term {
                        alg: t.alg.mul(a),
                        ..t
                    })
                    .collect()
            })
            .collect()),
        GfExpr::Integral { kernel, body } => {
            let mut out = Vec::new();
            for ts in flatten(body, search)? {
                let mut v = Vec::new();
                for t in ts {
                    for (c, l) in kernel.mul(&t.alg).letters()? {
                        let mut letters = vec![l];
                        letters.extend(t.letters.iter().cloned());
                        v.push(Term {
                            coefficient: &t.coefficient * &c,
                            alg: Alg::one(),
                            letters,
                        });
                    }
                }
                out.push(v);
            }
            Ok(out)
        }
        GfExpr::Sum(parts) => {
            let mut options = Vec::new();
            for p in parts {
                options.push(flatten(p, search)?);
            }
            Ok(cartesian(options))
        }
    }
}

/// Rewrite outermost-first, trying HarmonicDivide before the binomial rules and
/// backtracking when a branch leaves the rule or letter alphabet.
pub fn to_generating_function(s: &SumExpr) -> Result<GeneratingFunction> {
    let mut r = rewrite_node(&Node::from_sum(s), Search::First)?;
    Ok(GeneratingFunction::from_terms(r.swap_remove(0)))
}

/// Every complete rewrite reachable by some order of rule choices.
pub fn all_rewrites(s: &SumExpr) -> Result<Vec<GeneratingFunction>> {
    Ok(rewrite_node(&Node::from_sum(s), Search::All)?
        .into_iter()
        .map(GeneratingFunction::from_terms)
        .collect())
}
