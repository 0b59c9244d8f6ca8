//! Truncated Puiseux series `Σ c_k t^k` in `t = y^(1/e)`.
//!
//! A series knows its ramification index `e`, the exponent `val` of its first
//! stored coefficient and an absolute precision `prec`: every exponent below
//! `prec` (in units of `1/e`) is exact, nothing beyond is claimed.

use num_integer::Integer;

use super::number::AlgebraicNumber;
use super::poly::Polynomial;
use super::ratfun::RationalFunction;
use crate::error::{domain, Result};

type C = AlgebraicNumber;

/// Bound on the number of coefficients produced from an exact input.
const MAX_TERMS: i64 = 256;

#[derive(Clone, Debug)]
pub struct PuiseuxSeries {
    ram: i64,
    val: i64,
    coeffs: Vec<C>,
    prec: i64,
}

impl PuiseuxSeries {
    fn build(ram: i64, val: i64, coeffs: Vec<C>, prec: i64) -> Self {
        let mut s = PuiseuxSeries {
            ram,
            val,
            coeffs,
            prec,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let keep = (self.prec - self.val).max(0) as usize;
        self.coeffs.truncate(keep);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.val = self.prec;
            return;
        }
        self.coeffs.drain(..lead);
        self.val += lead as i64;
    }

    /// A polynomial in `y` as an integral series known up to `y^prec`.
    pub fn from_poly(p: &Polynomial, prec: i64) -> Self {
        Self::build(1, 0, p.coeffs().to_vec(), prec)
    }

    pub fn constant(c: C, prec: i64) -> Self {
        Self::build(1, 0, vec![c], prec)
    }

    /// `c·y^(num/ram)` known exactly up to the given precision (in `1/ram`).
    pub fn monomial(c: C, num: i64, ram: i64, prec: i64) -> Self {
        Self::build(ram, num, vec![c], prec)
    }

    pub fn ramification(&self) -> i64 {
        self.ram
    }

    /// Exponent of the leading term, in units of `1/ram`.
    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> C {
        if k < self.val || k >= self.prec {
            return C::zero();
        }
        self.coeffs
            .get((k - self.val) as usize)
            .cloned()
            .unwrap_or_else(C::zero)
    }

    fn refine(&self, ram: i64) -> Self {
        if ram == self.ram {
            return self.clone();
        }
        let f = ram / self.ram;
        let mut coeffs = vec![C::zero(); (self.coeffs.len().max(1) - 1) * f as usize + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * f as usize] = c.clone();
        }
        if self.coeffs.is_empty() {
            coeffs.clear();
        }
        Self::build(ram, self.val * f, coeffs, self.prec * f)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let r = a.ram.lcm(&b.ram);
        (a.refine(r), b.refine(r))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        let prec = a.prec.min(b.prec);
        let val = a.val.min(b.val);
        let n = (prec - val).max(0) as usize;
        let coeffs = (0..n as i64)
            .map(|k| a.coeff(val + k) + b.coeff(val + k))
            .collect();
        Self::build(a.ram, val, coeffs, prec)
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        s.coeffs = s.coeffs.iter().map(|c| -c).collect();
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut s = self.clone();
        s.coeffs = s.coeffs.iter().map(|v| v * c).collect();
        s.normalize();
        s
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        let prec = (a.val + b.prec).min(b.val + a.prec);
        let val = a.val + b.val;
        let n = (prec - val).max(0) as usize;
        let mut coeffs = vec![C::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if i >= n {
                break;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                coeffs[i + j] = &coeffs[i + j] + &(x * y);
            }
        }
        Self::build(a.ram, val, coeffs, prec)
    }

    /// Multiplicative inverse; the leading coefficient must be known.
    pub fn inv(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return domain("inverse of a series that vanishes to its precision");
        }
        let rel = (self.prec - self.val).min(MAX_TERMS);
        let c0inv = self.coeffs[0].checked_inv().expect("non-zero leading");
        let n = rel as usize;
        let mut out: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(c0inv.clone());
                continue;
            }
            let mut acc = C::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                acc = &acc + &(&self.coeffs[j] * &out[k - j]);
            }
            out.push(-(&acc * &c0inv));
        }
        Ok(Self::build(self.ram, -self.val, out, -self.val + rel))
    }

    /// Square root with the principal root of the leading coefficient.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return domain("square root of a series that vanishes to its precision");
        }
        let s = if self.val % 2 != 0 {
            self.refine(self.ram * 2)
        } else {
            self.clone()
        };
        let rel = (s.prec - s.val).min(MAX_TERMS) as usize;
        let c0 = &s.coeffs[0];
        let r0 = c0.sqrt();
        let two_r0_inv = (&r0 * &C::from_int(2)).checked_inv().expect("non-zero");
        let mut out: Vec<C> = Vec::with_capacity(rel);
        out.push(r0);
        for k in 1..rel {
            let mut acc = s.coeffs.get(k).cloned().unwrap_or_else(C::zero);
            for j in 1..k {
                acc = &acc - &(&out[j] * &out[k - j]);
            }
            out.push(&acc * &two_r0_inv);
        }
        let val = s.val / 2;
        Ok(Self::build(s.ram, val, out, val + rel as i64))
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::build(base.ram, 0, vec![C::one()], i64::MAX / 4);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn compose_poly(p: &Polynomial, s: &Self) -> Self {
        let cap = s.prec.max(0);
        let mut acc = Self::build(s.ram, 0, Vec::new(), cap);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(s).add(&Self::build(s.ram, 0, vec![c.clone()], cap));
        }
        acc
    }

    /// `f(s)` for a rational function `f`.
    pub fn compose_ratfun(f: &RationalFunction, s: &Self) -> Result<Self> {
        let n = Self::compose_poly(f.num(), s);
        let d = Self::compose_poly(f.den(), s);
        Ok(n.mul(&d.inv()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_one_plus_y_squared() {
        let s = PuiseuxSeries::from_poly(&Polynomial::from_ints(&[1, 1]), 12);
        let r = s.sqrt().unwrap();
        let back = r.mul(&r);
        assert_eq!(back.precision(), 12);
        for k in 0..12 {
            let want = if k <= 1 { C::one() } else { C::zero() };
            assert_eq!(back.coeff(k), want);
        }
        assert_eq!(r.coeff(2), C::from(crate::algebra::rational::qf(-1, 8)));
    }

    #[test]
    fn ramified_root() {
        // √(4y + 4y²) = 2 y^(1/2) (1 + y/2 - y²/8 ...)
        let s = PuiseuxSeries::from_poly(&Polynomial::from_ints(&[0, 4, 4]), 10);
        let r = s.sqrt().unwrap();
        assert_eq!(r.ramification(), 2);
        assert_eq!(r.valuation(), 1);
        assert_eq!(r.coeff(1), C::from_int(2));
        assert_eq!(r.coeff(3), C::from_int(1));
        let sq = r.mul(&r);
        assert_eq!(sq.coeff(2), C::from_int(4));
        assert_eq!(sq.coeff(4), C::from_int(4));
        assert_eq!(sq.coeff(6), C::zero());
    }

    #[test]
    fn inverse_with_pole() {
        let s = PuiseuxSeries::from_poly(&Polynomial::from_ints(&[0, 1, 1]), 10);
        let i = s.inv().unwrap();
        assert_eq!(i.valuation(), -1);
        assert_eq!(i.coeff(-1), C::one());
        assert_eq!(i.coeff(0), C::from_int(-1));
        assert_eq!(i.mul(&s).coeff(0), C::one());
    }

    #[test]
    fn ratfun_composition() {
        // 1/(1 - x) at x = y: geometric series
        let f = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[1, -1])).unwrap();
        let y = PuiseuxSeries::from_poly(&Polynomial::x(), 8);
        let g = PuiseuxSeries::compose_ratfun(&f, &y).unwrap();
        for k in 0..8 {
            assert_eq!(g.coeff(k), C::one());
        }
    }
}
