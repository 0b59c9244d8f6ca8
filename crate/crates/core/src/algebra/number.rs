//! Complex algebraic numbers as pairs of real tower elements.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::rational::Q;
use super::tower::RealAlgebraic;

/// An element `re + im·i` with both parts in a real quadratic tower.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    re: RealAlgebraic,
    im: RealAlgebraic,
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl AlgebraicNumber {
    pub fn new(re: RealAlgebraic, im: RealAlgebraic) -> Self {
        let (re, im) = RealAlgebraic::unify(&re, &im);
        AlgebraicNumber { re, im }
    }

    pub fn real(re: RealAlgebraic) -> Self {
        AlgebraicNumber {
            im: RealAlgebraic::zero(),
            re,
        }
    }

    pub fn from_rational(v: Q) -> Self {
        Self::real(RealAlgebraic::from_rational(v))
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(RealAlgebraic::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        AlgebraicNumber {
            re: RealAlgebraic::zero(),
            im: RealAlgebraic::one(),
        }
    }

    pub fn re(&self) -> &RealAlgebraic {
        &self.re
    }

    pub fn im(&self) -> &RealAlgebraic {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real value, if the imaginary part vanishes.
    pub fn as_real(&self) -> Option<&RealAlgebraic> {
        if self.is_real() {
            Some(&self.re)
        } else {
            None
        }
    }

    pub fn to_rational(&self) -> Option<Q> {
        if self.is_real() {
            self.re.to_rational()
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.to_rational().is_some()
    }

    pub fn conj(&self) -> Self {
        AlgebraicNumber {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|²` as a real number.
    pub fn norm_sq(&self) -> RealAlgebraic {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Sign of a real number; `None` for non-real input.
    pub fn real_sign(&self) -> Option<i32> {
        self.as_real().map(RealAlgebraic::sign)
    }

    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_real() {
            return Some(Self::real(self.re.checked_inv()?));
        }
        let n = self.norm_sq().checked_inv()?;
        Some(AlgebraicNumber::new(&self.re * &n, -(&self.im * &n)))
    }

    /// Principal square root, extending the tower when needed.
    pub fn sqrt(&self) -> Self {
        if self.is_real() {
            if self.re.sign() >= 0 {
                return Self::real(self.re.sqrt().expect("non-negative"));
            }
            let r = (-self.re.clone()).sqrt().expect("positive");
            return AlgebraicNumber {
                re: RealAlgebraic::zero(),
                im: r,
            };
        }
        let m = self.norm_sq().sqrt().expect("positive norm");
        let half = RealAlgebraic::from_rational(Q::new(1.into(), 2.into()));
        let re = ((m + self.re.clone()) * half).sqrt().expect("non-negative");
        let im = self.im.clone() / (RealAlgebraic::from_int(2) * re.clone());
        AlgebraicNumber::new(re, im)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Bring several numbers into one common tower.
    pub fn align(values: &mut [Self]) {
        let mut parts: Vec<RealAlgebraic> = Vec::with_capacity(2 * values.len());
        for v in values.iter() {
            parts.push(v.re.clone());
            parts.push(v.im.clone());
        }
        RealAlgebraic::align(&mut parts);
        for (k, v) in values.iter_mut().enumerate() {
            v.re = parts[2 * k].clone();
            v.im = parts[2 * k + 1].clone();
        }
    }
}

impl From<RealAlgebraic> for AlgebraicNumber {
    fn from(v: RealAlgebraic) -> Self {
        Self::real(v)
    }
}

impl From<Q> for AlgebraicNumber {
    fn from(v: Q) -> Self {
        Self::from_rational(v)
    }
}

impl From<i64> for AlgebraicNumber {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

fn add(x: &AlgebraicNumber, y: &AlgebraicNumber) -> AlgebraicNumber {
    AlgebraicNumber::new(&x.re + &y.re, &x.im + &y.im)
}

fn sub(x: &AlgebraicNumber, y: &AlgebraicNumber) -> AlgebraicNumber {
    AlgebraicNumber::new(&x.re - &y.re, &x.im - &y.im)
}

fn mul(x: &AlgebraicNumber, y: &AlgebraicNumber) -> AlgebraicNumber {
    if x.is_real() && y.is_real() {
        return AlgebraicNumber::real(&x.re * &y.re);
    }
    AlgebraicNumber::new(&x.re * &y.re - &x.im * &y.im, &x.re * &y.im + &x.im * &y.re)
}

fn div(x: &AlgebraicNumber, y: &AlgebraicNumber) -> AlgebraicNumber {
    mul(
        x,
        &y.checked_inv().expect("division by zero algebraic number"),
    )
}

macro_rules! ops {
    ($trait:ident, $method:ident, $f:ident) => {
        impl std::ops::$trait for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                $f(&self, &rhs)
            }
        }
        impl<'a> std::ops::$trait<&'a AlgebraicNumber> for &'a AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &'a AlgebraicNumber) -> AlgebraicNumber {
                $f(self, rhs)
            }
        }
        impl<'a> std::ops::$trait<&'a AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &'a AlgebraicNumber) -> AlgebraicNumber {
                $f(&self, rhs)
            }
        }
    };
}

ops!(Add, add, add);
ops!(Sub, sub, sub);
ops!(Mul, mul, mul);
ops!(Div, div, div);

impl std::ops::Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl std::ops::Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        -self.clone()
    }
}

impl Zero for AlgebraicNumber {
    fn zero() -> Self {
        AlgebraicNumber::zero()
    }
    fn is_zero(&self) -> bool {
        AlgebraicNumber::is_zero(self)
    }
}

impl One for AlgebraicNumber {
    fn one() -> Self {
        AlgebraicNumber::one()
    }
}

fn is_compound(s: &str) -> bool {
    s[1..].contains(" + ") || s[1..].contains(" - ")
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let neg = self.im.is_negative();
        let im_txt = if im_abs.is_one() {
            "i".to_string()
        } else {
            let s = im_abs.to_string();
            if is_compound(&s) {
                format!("({s})*i")
            } else {
                format!("{s}*i")
            }
        };
        if self.re.is_zero() {
            return write!(f, "{}{}", if neg { "-" } else { "" }, im_txt);
        }
        let re = self.re.to_string();
        let re = if is_compound(&re) {
            format!("({re})")
        } else {
            re
        };
        write!(f, "{} {} {}", re, if neg { "-" } else { "+" }, im_txt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_int(v)
    }

    #[test]
    fn complex_arith() {
        let i = AlgebraicNumber::i();
        assert_eq!(&i * &i, n(-1));
        let z = n(3) + n(4) * i.clone();
        assert_eq!(z.norm_sq(), RealAlgebraic::from_int(25));
        assert_eq!(&z * &z.checked_inv().unwrap(), n(1));
    }

    #[test]
    fn principal_sqrt() {
        let z = n(-4).sqrt();
        assert_eq!(z, n(2) * AlgebraicNumber::i());
        let w = (n(3) + n(4) * AlgebraicNumber::i()).sqrt();
        assert_eq!(w, n(2) + AlgebraicNumber::i());
        let j = AlgebraicNumber::i().sqrt();
        assert_eq!(&j * &j, AlgebraicNumber::i());
        assert!(j.re().is_positive());
    }

    #[test]
    fn display_complex() {
        let i = AlgebraicNumber::i();
        assert_eq!((n(1) - i.clone()).to_string(), "1 - i");
        assert_eq!((n(2) * i.clone()).to_string(), "2*i");
        let s2 = n(2).sqrt();
        assert_eq!((n(1) + s2.clone() * i).to_string(), "1 + sqrt(2)*i");
    }
}
