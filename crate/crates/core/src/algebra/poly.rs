//! Dense univariate polynomials over algebraic numbers.

use std::fmt;

use num_complex::Complex64;

use super::number::AlgebraicNumber;
use super::rational::Q;
use crate::error::{domain, Result};

type C = AlgebraicNumber;

/// A polynomial with coefficients stored in ascending degree order.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<C>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(C::is_zero) {
            coeffs.pop();
        }
        C::align(&mut coeffs);
        Polynomial { coeffs }
    }

    pub fn from_rationals(coeffs: &[Q]) -> Self {
        Self::new(coeffs.iter().cloned().map(C::from).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    /// `c·x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// `x − a`.
    pub fn linear_root(a: &C) -> Self {
        Self::new(vec![-a.clone(), C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    /// Lowest-degree non-zero coefficient and its degree.
    pub fn trailing(&self) -> Option<(usize, C)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(C::is_real)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(C::is_rational)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(C::conj).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().checked_inv().expect("non-zero leading");
        self.scale(&inv)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: v }
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return domain("polynomial division by zero");
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = d.leading().checked_inv().expect("non-zero leading");
        let mut q = vec![C::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * b);
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return domain("polynomial division is not exact");
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        if (self.degree() == 0 && !self.is_zero()) || (o.degree() == 0 && !o.is_zero()) {
            return Self::one();
        }
        let mut a = self.monic();
        let mut b = o.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("non-zero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("non-zero divisor");
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().checked_inv().expect("non-zero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &C::from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_complex();
        }
        acc
    }

    /// Numeric coefficients, for repeated fast evaluation.
    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(C::to_complex).collect()
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Yun's decomposition: `self = c · ∏ aᵢ^i` with monic, squarefree,
    /// pairwise coprime `aᵢ` (entry `i−1` of the result holds `aᵢ`).
    pub fn yun(&self) -> Result<Vec<Self>> {
        if self.is_zero() {
            return domain("squarefree decomposition of the zero polynomial");
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return Ok(out);
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0)?;
        let mut c = fp.exact_div(&a0)?;
        let mut d = c.sub(&b.derivative());
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            b = b.exact_div(&a)?;
            if b.degree() == 0 {
                break;
            }
            c = d.exact_div(&a)?;
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|p| p.degree() == 0) {
            out.pop();
        }
        Ok(out)
    }

    /// Split `self = c·s·q²` with `s` monic squarefree and `q` monic.
    /// Returns `(c, s, q)`.
    /// `self = c·h²` with `h` monic, found by extracting the square root
    /// coefficient by coefficient from the top.
    pub fn monic_sqrt(&self) -> Option<(C, Self)> {
        if self.is_zero() || self.degree() % 2 == 1 {
            return None;
        }
        let c = self.leading();
        let p = self.scale(&c.checked_inv().expect("non-zero leading"));
        let n = p.degree();
        let k = n / 2;
        let mut h = vec![C::zero(); k + 1];
        h[k] = C::one();
        let half = C::from(Q::new(1.into(), 2.into()));
        for j in 1..=k {
            let mut acc = p.coeff(n - j);
            for i in 1..j {
                acc = &acc - &(&h[k - i] * &h[k - j + i]);
            }
            h[k - j] = &acc * &half;
        }
        let h = Self::new(h);
        if h.mul(&h) == p {
            Some((c, h))
        } else {
            None
        }
    }

    pub fn squarefree_split(&self) -> Result<(C, Self, Self)> {
        let parts = self.yun()?;
        let mut s = Self::one();
        let mut q = Self::one();
        for (i, a) in parts.iter().enumerate() {
            let m = i + 1;
            if m % 2 == 1 {
                s = s.mul(a);
            }
            q = q.mul(&a.pow((m / 2) as u32));
        }
        Ok((self.leading(), s, q))
    }

    /// `(s, q)` with `self = c·s·q²`, `s` monic squarefree.
    pub fn squarefree_part(&self) -> Result<(Self, Self)> {
        let (_, s, q) = self.squarefree_split()?;
        Ok((s, q))
    }

    /// Monic squarefree radical `p / gcd(p, p′)`.
    pub fn radical(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("radical of the zero polynomial");
        }
        let f = self.monic();
        f.exact_div(&f.gcd(&f.derivative()))
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == 0
    }

    /// Display with the given variable name.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (neg, body) = coefficient_term(c, k, var);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn var_power(k: usize, var: &str) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Sign and magnitude text for `c·var^k`.
pub(crate) fn coefficient_term(c: &C, k: usize, var: &str) -> (bool, String) {
    let s = c.to_string();
    let compound = s.len() > 1 && (s[1..].contains(" + ") || s[1..].contains(" - "));
    let (neg, mag) = if compound {
        (false, format!("({s})"))
    } else if let Some(rest) = s.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, s)
    };
    let vp = var_power(k, var);
    let body = if vp.is_empty() {
        mag
    } else if mag == "1" {
        vp
    } else {
        format!("{mag}*{vp}")
    };
    (neg, body)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}
