//! Helpers on arbitrary-precision rationals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn sqrt_exact(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Q::zero());
    }
    let n = sqrt_int(x.numer())?;
    let d = sqrt_int(x.denom())?;
    Some(Q::new(n, d))
}

fn sqrt_int(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Split a positive rational as `s^2 * m` with `m` an integer free of small
/// square factors. Trial division stops at 10^4; a leftover large square
/// factor only costs minimality, never correctness.
pub fn square_split(x: &Q) -> (Q, BigInt) {
    debug_assert!(x.is_positive());
    // x = p/q = (p*q) / q^2
    let mut m = x.numer() * x.denom();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(10_000u32);
    while p <= limit && &p * &p <= m {
        let pp = &p * &p;
        while m.is_multiple_of(&pp) {
            m /= &pp;
            s *= &p;
        }
        p += 1u32;
    }
    if let Some(r) = sqrt_int(&m) {
        s *= &r;
        m = BigInt::one();
    }
    (Q::new(s, x.denom().clone()), m)
}

pub fn to_f64(x: &Q) -> f64 {
    // Scale to keep precision for huge numerators/denominators.
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => n / d,
        _ => {
            let bits = x.numer().bits() as i64 - x.denom().bits() as i64;
            let shift = 60 - bits;
            let scaled = if shift >= 0 {
                (x.numer() << shift as usize) / x.denom()
            } else {
                x.numer() / (x.denom() << (-shift) as usize)
            };
            scaled.to_f64().unwrap_or(0.0) * 2f64.powi(-shift as i32)
        }
    }
}

/// Sign as -1, 0, 1.
pub fn sign(x: &Q) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Best rational approximation with denominator at most `max_den`.
pub fn rationalize_f64(v: f64, max_den: i64) -> Option<Q> {
    if !v.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut x = v;
    for _ in 0..64 {
        let a = x.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = x - a;
        if frac.abs() < 1e-12 {
            break;
        }
        x = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(Q::new(BigInt::from(h1), BigInt::from(k1)))
}
