//! Rational functions in canonical form: coprime numerator and denominator,
//! denominator monic.

use std::fmt;

use num_complex::Complex64;

use super::number::AlgebraicNumber;
use super::poly::Polynomial;
use super::rational::Q;
use crate::error::{domain, Result};

type C = AlgebraicNumber;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Build `num/den` in canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return domain("rational function with zero denominator");
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = if num.degree() == 0 || den.degree() == 0 {
            Polynomial::one()
        } else {
            num.gcd(&den)
        };
        let (mut n, mut d) = if g.degree() > 0 {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        } else {
            (num, den)
        };
        if !d.is_monic() {
            let inv = d.leading().checked_inv().expect("non-zero");
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_rational(v: Q) -> Self {
        Self::constant(C::from(v))
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(C::from_int(v))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn conj(&self) -> Self {
        RationalFunction {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("non-zero");
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("non-zero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let cancel = |n: &Polynomial, d: &Polynomial| {
            let g = n.gcd(d);
            if g.degree() == 0 {
                (n.clone(), d.clone())
            } else {
                (
                    n.exact_div(&g).expect("gcd divides"),
                    d.exact_div(&g).expect("gcd divides"),
                )
            }
        };
        let (a, d) = cancel(&self.num, &o.den);
        let (c, b) = cancel(&o.num, &self.den);
        let num = a.mul(&c);
        let den = b.mul(&d);
        if den.is_monic() {
            return RationalFunction { num, den };
        }
        let inv = den.leading().checked_inv().expect("non-zero");
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("inverse of the zero rational function");
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        Self::new(n, self.den.mul(&self.den)).expect("non-zero")
    }

    pub fn eval(&self, x: &C) -> Result<C> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return domain("rational function evaluated at a pole");
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.num.eval_complex(x) / self.den.eval_complex(x)
    }

    /// `self(g(y))`, computed by homogenization.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        let (n, d) = self.compose_parts(g);
        if d.is_zero() {
            return domain("composition makes the denominator vanish identically");
        }
        Self::new(n, d)
    }

    /// Numerator and denominator of `self(g(y))` before cancellation:
    /// `num(p/q)·q^m` and `den(p/q)·q^m` with `m = self.degree()`.
    pub fn compose_parts(&self, g: &Self) -> (Polynomial, Polynomial) {
        let m = self.degree();
        let p = &g.num;
        let q = &g.den;
        let mut qpows = vec![Polynomial::one()];
        let mut ppows = vec![Polynomial::one()];
        for _ in 0..m {
            qpows.push(qpows.last().unwrap().mul(q));
            ppows.push(ppows.last().unwrap().mul(p));
        }
        let hom = |f: &Polynomial| {
            let mut acc = Polynomial::zero();
            for (k, c) in f.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc = acc.add(&ppows[k].mul(&qpows[m - k]).scale(c));
            }
            acc
        };
        (hom(&self.num), hom(&self.den))
    }

    /// Decide whether `self = c·h²`; returns `(c, h)` with `h` in canonical
    /// form (monic numerator and denominator).
    pub fn is_square(&self) -> Option<(C, RationalFunction)> {
        if self.is_zero() {
            return None;
        }
        let (cn, qn) = self.num.monic_sqrt()?;
        let (_, qd) = self.den.monic_sqrt()?;
        Some((cn, RationalFunction { num: qn, den: qd }))
    }

    /// Display with the given variable name.
    pub fn display(&self, var: &str) -> String {
        let n = self.num.display(var);
        if self.den.degree() == 0 {
            return n;
        }
        let d = self.den.display(var);
        let wrap = |s: String, single: bool| if single { s } else { format!("({s})") };
        let n_single = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
            && !n.contains(" + ")
            && !n[1..].contains(" - ");
        let d_single = self.den.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
            && !d.contains(" + ")
            && !d.contains(" - ")
            && !d.contains('*');
        format!("{}/{}", wrap(n, n_single), wrap(d, d_single))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        let f = rf(&[3], &[-1, 3]);
        assert_eq!(
            f.den(),
            &Polynomial::from_rationals(&[
                Q::new((-1).into(), 3.into()),
                Q::from_integer(1.into())
            ])
        );
        assert_eq!(f.num(), &p(&[1]));
        assert_eq!(rf(&[-1, 0, 1], &[1, 1]), rf(&[-1, 1], &[1]));
    }

    #[test]
    fn composition_examples() {
        let f = rf(&[0, 0, 1], &[1]);
        let g = rf(&[1, 1], &[1]);
        assert_eq!(f.compose(&g).unwrap(), rf(&[1, 2, 1], &[1]));
        // -8 x (x + 1) at x = y/2 → -2y² - 4y
        let f = rf(&[0, -8, -8], &[1]);
        let g = RationalFunction::from_poly(Polynomial::from_rationals(&[
            Q::from_integer(0.into()),
            Q::new(1.into(), 2.into()),
        ]));
        assert_eq!(f.compose(&g).unwrap(), rf(&[0, -4, -2], &[1]));
        let f = rf(&[0, 0, 2], &[1, 0, 0, 0, 1]);
        assert_eq!(f.compose(&RationalFunction::x()).unwrap(), f);
        // 1/(x-1) at x = 1 collapses
        let f = rf(&[1], &[-1, 1]);
        assert!(f.compose(&RationalFunction::one()).is_err());
    }

    #[test]
    fn square_detection() {
        let f = rf(&[0, 0, 4], &[1, 2, 1]);
        let (c, h) = f.is_square().unwrap();
        assert_eq!(c, C::from_int(4));
        assert_eq!(h, rf(&[0, 1], &[1, 1]));
        assert!(rf(&[0, 0, 0, 1], &[1]).is_square().is_none());
        // 2y²(1+y²)²/(y⁴+1)²
        let num = p(&[0, 0, 2]).mul(&p(&[1, 0, 1]).pow(2));
        let den = p(&[1, 0, 0, 0, 1]).pow(2);
        let (c, h) = RationalFunction::new(num, den)
            .unwrap()
            .is_square()
            .unwrap();
        assert_eq!(c, C::from_int(2));
        assert_eq!(h, rf(&[0, 1, 0, 1], &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn display_rf() {
        assert_eq!(
            rf(&[0, 0, 2], &[1, 0, 0, 0, 1]).display("y"),
            "2*y^2/(y^4 + 1)"
        );
        assert_eq!(rf(&[1], &[0, 1]).display("u"), "1/u");
    }
}
