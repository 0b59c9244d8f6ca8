//! Nested integrals as words over an alphabet of integrands: shuffle
//! products, change of variables and partial-fraction re-lettering.

mod numeric;
mod partial;
mod transform;

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{AlgebraicNumber, Polynomial, RationalFunction};
use crate::error::{Error, Result};

pub use numeric::{eval_combination, eval_word, eval_word_at, DEFAULT_TOLERANCE};
pub use partial::{
    decompose, expand_decompositions, partial_fraction_letters, Decomposition, PolePart,
};
pub use transform::{transform_word, transform_word_at};

type C = AlgebraicNumber;

/// Base point of a nested integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `∫_0^x f₁(t₁) ∫_0^{t₁} f₂(t₂) … dt`.
    Zero,
    /// `∫_x^1 f₁(t₁) ∫_{t₁}^1 f₂(t₂) … dt`.
    One,
}

impl Base {
    pub fn value(self) -> C {
        match self {
            Base::Zero => C::zero(),
            Base::One => C::one(),
        }
    }

    pub fn digit(self) -> u8 {
        match self {
            Base::Zero => 0,
            Base::One => 1,
        }
    }
}

/// `csgn` of a nonzero number: the sign of the real part, or of the
/// imaginary part on the imaginary axis.
fn csgn(z: &C) -> i32 {
    match z.re().sign() {
        0 => z.im().sign(),
        s => s,
    }
}

/// The sign `c_a` that makes `c_a/(t-a)` positive next to the base point:
/// `sgn(-a+0)` for base 0 and `sgn(1-a-0)` for base 1.
pub fn sign_constant(a: &C, base: Base) -> i32 {
    let w = &base.value() - a;
    if w.is_zero() {
        return match base {
            Base::Zero => 1,
            Base::One => -1,
        };
    }
    csgn(&w)
}

/// A rational letter together with an optional partial-fraction split.
#[derive(Clone, Debug)]
pub struct GenericLetter {
    pub f: RationalFunction,
    pub decomposition: Option<Decomposition>,
}

impl PartialEq for GenericLetter {
    fn eq(&self, o: &Self) -> bool {
        self.f == o.f
    }
}

/// An integrand of a nested integral.
#[derive(Clone, Debug, PartialEq)]
pub enum Letter {
    /// `c_a/(t-a)`.
    Rat(C),
    /// `∏ (c_aᵢ/(t-aᵢ))^(1/2)`, at least two distinct points.
    SqrtSet(Vec<C>),
    /// `c_a/(t-a) · ∏ (c_aᵢ/(t-aᵢ))^(1/2)` with `a` outside the set.
    RatTimesSqrt(C, Vec<C>),
    /// `t^j · ∏ (c_aᵢ/(t-aᵢ))^(1/2)` with `1 ≤ j ≤ k-2`.
    PowerTimesSqrt(Vec<C>, u32),
    /// Any rational function of `t`.
    Generic(GenericLetter),
}

fn sort_points(mut v: Vec<C>) -> Result<Vec<C>> {
    v.sort_by(|a, b| {
        let (x, y) = (a.to_complex(), b.to_complex());
        x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im))
    });
    for w in v.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Usage(format!(
                "repeated point {} in a square-root set",
                w[0]
            )));
        }
    }
    Ok(v)
}

impl Letter {
    pub fn rat(a: C) -> Letter {
        Letter::Rat(a)
    }

    pub fn sqrt_set(points: Vec<C>) -> Result<Letter> {
        if points.len() < 2 {
            return Err(Error::Usage(
                "a square-root set needs at least two points".into(),
            ));
        }
        Ok(Letter::SqrtSet(sort_points(points)?))
    }

    pub fn rat_times_sqrt(a: C, points: Vec<C>) -> Result<Letter> {
        if points.is_empty() {
            return Err(Error::Usage(
                "a square-root set needs at least one point".into(),
            ));
        }
        if points.contains(&a) {
            return Err(Error::Usage(format!(
                "pole {a} must not lie in the square-root set"
            )));
        }
        Ok(Letter::RatTimesSqrt(a, sort_points(points)?))
    }

    pub fn power_times_sqrt(points: Vec<C>, j: u32) -> Result<Letter> {
        let k = points.len() as u32;
        if j < 1 || j + 2 > k {
            return Err(Error::Usage(format!(
                "power {j} is outside 1..=k-2 for a set of {k} points"
            )));
        }
        Ok(Letter::PowerTimesSqrt(sort_points(points)?, j))
    }

    pub fn generic(f: RationalFunction) -> Letter {
        Letter::Generic(GenericLetter {
            f,
            decomposition: None,
        })
    }

    /// `(ρ, [(aᵢ, c_aᵢ)])` with the letter equal to `ρ(t)·∏ (c_aᵢ/(t-aᵢ))^(1/2)`.
    pub fn exact_parts(&self, base: Base) -> (RationalFunction, Vec<(C, i32)>) {
        let pole = |a: &C| {
            let c = C::from_int(sign_constant(a, base) as i64);
            RationalFunction::new(Polynomial::constant(c), Polynomial::linear_root(a))
                .expect("non-zero denominator")
        };
        let roots = |set: &[C]| {
            set.iter()
                .map(|a| (a.clone(), sign_constant(a, base)))
                .collect()
        };
        match self {
            Letter::Rat(a) => (pole(a), Vec::new()),
            Letter::SqrtSet(s) => (RationalFunction::one(), roots(s)),
            Letter::RatTimesSqrt(a, s) => (pole(a), roots(s)),
            Letter::PowerTimesSqrt(s, j) => (
                RationalFunction::from_poly(Polynomial::monomial(C::one(), *j as usize)),
                roots(s),
            ),
            Letter::Generic(g) => (g.f.clone(), Vec::new()),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Letter::Rat(_) | Letter::Generic(_))
    }

    /// Points where the letter is singular or branches.
    pub fn singular_points(&self) -> Vec<C> {
        match self {
            Letter::Rat(a) => vec![a.clone()],
            Letter::SqrtSet(s) => s.clone(),
            Letter::RatTimesSqrt(a, s) => {
                let mut v = s.clone();
                v.push(a.clone());
                v
            }
            Letter::PowerTimesSqrt(s, _) => s.clone(),
            Letter::Generic(_) => Vec::new(),
        }
    }

    /// Twice the order of vanishing at `p` (negative for a singularity).
    pub fn twice_order_at(&self, p: &C, base: Base) -> i64 {
        let (rho, roots) = self.exact_parts(base);
        let ord = |poly: &Polynomial| {
            let mut q = poly.clone();
            let mut k = 0i64;
            let lin = Polynomial::linear_root(p);
            while !q.is_zero() && q.eval(p).is_zero() {
                q = q.exact_div(&lin).expect("root divides");
                k += 1;
            }
            k
        };
        let r = 2 * (ord(rho.num()) - ord(rho.den()));
        r - roots.iter().filter(|(a, _)| a == p).count() as i64
    }

    fn fmt_point(a: &C) -> String {
        a.to_string().replace(' ', "")
    }

    fn fmt_set(s: &[C]) -> String {
        let parts: Vec<String> = s.iter().map(Self::fmt_point).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Rat(a) => write!(f, "{}", Self::fmt_point(a)),
            Letter::SqrtSet(s) => write!(f, "{}", Self::fmt_set(s)),
            Letter::RatTimesSqrt(a, s) => {
                write!(f, "({},{})", Self::fmt_point(a), Self::fmt_set(s))
            }
            Letter::PowerTimesSqrt(s, j) => write!(f, "({},{})", Self::fmt_set(s), j),
            Letter::Generic(g) => write!(f, "R({})", g.f.display("t").replace(' ', "")),
        }
    }
}

/// A nested integral `prefactor · ∫ letters`, outermost letter first.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralWord {
    pub letters: Vec<Letter>,
    pub base: Base,
    pub prefactor: C,
}

impl IntegralWord {
    pub fn new(letters: Vec<Letter>, base: Base) -> Self {
        IntegralWord {
            letters,
            base,
            prefactor: C::one(),
        }
    }

    pub fn empty(base: Base) -> Self {
        Self::new(Vec::new(), base)
    }

    pub fn with_prefactor(mut self, c: C) -> Self {
        self.prefactor = c;
        self
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters and base only, in the `H[…]` syntax.
    pub fn body(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        match self.base {
            Base::Zero => format!("H[{}]", parts.join(",")),
            Base::One => format!("H[{}; base=1]", parts.join(",")),
        }
    }

    /// LaTeX in H-notation.
    pub fn latex(&self) -> String {
        let letters: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l {
                Letter::Generic(g) => format!("\\left[{}\\right]", g.f.display("t")),
                other => other.to_string().replace('{', "\\{").replace('}', "\\}"),
            })
            .collect();
        let h = format!("\\mathrm{{H}}_{{{}}}(x)", letters.join(","));
        let h = if self.base == Base::One {
            format!("{h}\\big|_{{\\text{{base }}1}}")
        } else {
            h
        };
        if self.prefactor.is_one() {
            h
        } else {
            format!("\\left({}\\right){}", self.prefactor, h)
        }
    }
}

impl fmt::Display for IntegralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefactor.is_one() {
            write!(f, "{}", self.body())
        } else {
            let p = self.prefactor.to_string();
            let compound = p.len() > 1 && (p[1..].contains(" + ") || p[1..].contains(" - "));
            if compound {
                write!(f, "({p})*{}", self.body())
            } else {
                write!(f, "{p}*{}", self.body())
            }
        }
    }
}

/// A linear combination of words; each stored word has prefactor one.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WordCombination {
    terms: Vec<(C, IntegralWord)>,
}

impl WordCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: IntegralWord) -> Self {
        let mut out = Self::zero();
        out.add_word(w);
        out
    }

    pub fn terms(&self) -> &[(C, IntegralWord)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c·w`, merging like terms and dropping zeros.
    pub fn add_term(&mut self, c: C, mut w: IntegralWord) {
        let c = &c * &w.prefactor;
        w.prefactor = C::one();
        if c.is_zero() {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|(_, v)| *v == w) {
            let s = &self.terms[pos].0 + &c;
            if s.is_zero() {
                self.terms.remove(pos);
            } else {
                self.terms[pos].0 = s;
            }
            return;
        }
        self.terms.push((c, w));
    }

    pub fn add_word(&mut self, w: IntegralWord) {
        self.add_term(C::one(), w);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (c, w) in &o.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (d, w) in &self.terms {
            out.add_term(c * d, w.clone());
        }
        out
    }

    /// Terms sorted by their text, for order-independent comparison.
    pub fn sorted(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by_key(|(_, w)| w.body());
        WordCombination { terms }
    }

    pub fn latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| w.clone().with_prefactor(c.clone()).latex())
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| w.clone().with_prefactor(c.clone()).to_string())
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Shuffle product: all interleavings that keep the internal letter orders.
pub fn shuffle(u: &IntegralWord, v: &IntegralWord) -> Result<WordCombination> {
    if u.base != v.base {
        return Err(Error::Usage(
            "shuffle of words with different base points".into(),
        ));
    }
    let mut out = WordCombination::zero();
    let mut acc = Vec::with_capacity(u.len() + v.len());
    interleave(&u.letters, &v.letters, &mut acc, &mut |letters| {
        out.add_word(IntegralWord::new(letters.to_vec(), u.base));
    });
    Ok(out.scale(&(&u.prefactor * &v.prefactor)))
}

fn interleave(a: &[Letter], b: &[Letter], acc: &mut Vec<Letter>, emit: &mut dyn FnMut(&[Letter])) {
    if a.is_empty() && b.is_empty() {
        emit(acc);
        return;
    }
    if let Some((first, rest)) = a.split_first() {
        acc.push(first.clone());
        interleave(rest, b, acc, emit);
        acc.pop();
    }
    if let Some((first, rest)) = b.split_first() {
        acc.push(first.clone());
        interleave(a, rest, acc, emit);
        acc.pop();
    }
}

/// Number of interleavings counted with multiplicity.
pub fn shuffle_term_count(c: &WordCombination) -> C {
    c.terms.iter().fold(C::zero(), |acc, (k, _)| &acc + k)
}

/// Numeric value of the letter at a point, principal square roots.
pub fn eval_letter(l: &Letter, t: Complex64, base: Base) -> Complex64 {
    let (rho, roots) = l.exact_parts(base);
    let mut v = rho.eval_complex(t);
    for (a, c) in roots {
        v *= (Complex64::new(c as f64, 0.0) / (t - a.to_complex())).sqrt();
    }
    v
}

#[cfg(test)]
mod tests;
