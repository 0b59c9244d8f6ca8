//! Numerical values of nested integrals by DE-Sinc indefinite integration.
//!
//! The segment from the base point to the argument is mapped by the
//! tanh-sinh transformation onto the real line and sampled on one uniform
//! grid. Each layer is integrated cumulatively on that grid with the Sinc
//! indefinite-integration weights `1/2 + Si(πk)/π`, so every inner layer is
//! available exactly at the nodes of the next outer one.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use num_complex::Complex64;
use num_rational::BigRational;

use super::{Base, IntegralWord, Letter, WordCombination};
use crate::algebra::sturm::sturm_root_count;
use crate::algebra::{AlgebraicNumber, Polynomial, RealAlgebraic};
use crate::error::{Error, Result};

type C = AlgebraicNumber;

/// Default target accuracy.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

const HALF_WIDTH: f64 = 4.5;
const MIN_STEPS: usize = 16;
const MAX_STEPS: usize = 2048;

fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// `Si(πk)` for `k = 0, 1, …`, accumulated segment by segment.
fn si_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let gl = gauss_legendre(24);
        let len = 4 * MAX_STEPS + 2;
        let mut out = Vec::with_capacity(len);
        out.push(0.0);
        let mut acc = 0.0;
        for k in 1..len {
            let (lo, hi) = (PI * (k - 1) as f64, PI * k as f64);
            let (mid, half) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
            let seg: f64 = gl
                .iter()
                .map(|(x, w)| {
                    let t = mid + half * x;
                    w * t.sin() / t
                })
                .sum();
            acc += seg * half;
            out.push(acc);
        }
        out
    })
}

fn sinc_weight(k: i64) -> f64 {
    let s = si_table()[k.unsigned_abs() as usize];
    0.5 + k.signum() as f64 * s / PI
}

/// A grid point: offsets from the base point and to the endpoint.
struct Point {
    d: Complex64,
    e: Complex64,
}

enum Factor {
    /// A rational function, shifted to the base point and to the endpoint.
    Rational {
        num_lo: Vec<Complex64>,
        den_lo: Vec<Complex64>,
        num_hi: Vec<Complex64>,
        den_hi: Vec<Complex64>,
    },
    /// `(c/(t-a))^(1/2)` with `lo = b-a`, `hi = z-a`.
    SqrtPole {
        lo: Complex64,
        hi: Complex64,
        c: f64,
    },
}

fn horner(c: &[Complex64], s: Complex64) -> Complex64 {
    c.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, v| acc * s + v)
}

fn shift_numeric(p: &Polynomial, z: Complex64) -> Vec<Complex64> {
    let mut c = p.to_complex_coeffs();
    let n = c.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let next = c[j + 1];
            c[j] += z * next;
        }
    }
    c
}

fn shift_exact(p: &Polynomial, b: &C) -> Vec<Complex64> {
    p.compose(&Polynomial::new(vec![b.clone(), C::one()]))
        .to_complex_coeffs()
}

impl Factor {
    fn eval(&self, p: &Point) -> Complex64 {
        let near_base = p.d.norm() <= p.e.norm();
        match self {
            Factor::Rational {
                num_lo,
                den_lo,
                num_hi,
                den_hi,
            } => {
                if near_base {
                    horner(num_lo, p.d) / horner(den_lo, p.d)
                } else {
                    horner(num_hi, -p.e) / horner(den_hi, -p.e)
                }
            }
            Factor::SqrtPole { lo, hi, c } => {
                let diff = if near_base { lo + p.d } else { hi - p.e };
                (Complex64::new(*c, 0.0) / diff).sqrt()
            }
        }
    }
}

fn compile(letter: &Letter, base: Base, z: Complex64) -> Vec<Factor> {
    let b = base.value();
    let (rho, roots) = letter.exact_parts(base);
    let mut out = vec![Factor::Rational {
        num_lo: shift_exact(rho.num(), &b),
        den_lo: shift_exact(rho.den(), &b),
        num_hi: shift_numeric(rho.num(), z),
        den_hi: shift_numeric(rho.den(), z),
    }];
    for (a, c) in roots {
        out.push(Factor::SqrtPole {
            lo: (&b - &a).to_complex(),
            hi: z - a.to_complex(),
            c: c as f64,
        });
    }
    out
}

fn grid_value(letters: &[Vec<Factor>], span: Complex64, n: usize) -> Complex64 {
    let h = HALF_WIDTH / n as f64;
    let m = 2 * n + 1;
    let mut pts = Vec::with_capacity(m);
    let mut jac = Vec::with_capacity(m);
    for k in 0..m {
        let tau = (k as f64 - n as f64) * h;
        let w = FRAC_PI_2 * tau.sinh();
        let u = 1.0 / (1.0 + (-2.0 * w).exp());
        let v = 1.0 / (1.0 + (2.0 * w).exp());
        pts.push(Point {
            d: span * u,
            e: span * v,
        });
        jac.push(span * (PI * tau.cosh() * u * v * h));
    }
    let mut inner = vec![Complex64::new(1.0, 0.0); m];
    for (idx, factors) in letters.iter().enumerate().rev() {
        let f: Vec<Complex64> = (0..m)
            .map(|k| {
                let v = factors
                    .iter()
                    .fold(Complex64::new(1.0, 0.0), |acc, fac| acc * fac.eval(&pts[k]));
                v * inner[k] * jac[k]
            })
            .collect();
        if idx == 0 {
            return f.iter().sum();
        }
        let weights: Vec<f64> = (0..2 * m - 1)
            .map(|k| sinc_weight(k as i64 - (m as i64 - 1)))
            .collect();
        inner = (0..m)
            .map(|i| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, fj) in f.iter().enumerate() {
                    acc += fj * weights[i + m - 1 - j];
                }
                acc
            })
            .collect();
    }
    Complex64::new(1.0, 0.0)
}

fn exact_point(z: Complex64) -> Result<C> {
    let conv = |v: f64| {
        BigRational::from_float(v)
            .map(RealAlgebraic::from_rational)
            .ok_or_else(|| Error::Domain(format!("non-finite argument {v}")))
    };
    Ok(C::new(conv(z.re)?, conv(z.im)?))
}

/// Is `p` strictly inside the segment from `b` to `z`?
fn on_open_segment(p: Complex64, b: Complex64, z: Complex64) -> bool {
    let s = (p - b) / (z - b);
    s.im.abs() <= 1e-14 * s.norm().max(1.0) && s.re > 1e-14 && s.re < 1.0 - 1e-14
}

fn deflate(p: &Polynomial, r: &C) -> Polynomial {
    let lin = Polynomial::linear_root(r);
    let mut q = p.clone();
    while !q.is_zero() && q.degree() > 0 && q.eval(r).is_zero() {
        q = q.exact_div(&lin).expect("root divides");
    }
    q
}

/// Reject words whose value is not a convergent integral along the segment.
fn check(w: &IntegralWord, z: &C) -> Result<()> {
    let b = w.base.value();
    let (bc, zc) = (b.to_complex(), z.to_complex());
    for (i, l) in w.letters.iter().enumerate() {
        for p in l.singular_points() {
            if on_open_segment(p.to_complex(), bc, zc) {
                return Err(Error::Divergence(format!(
                    "letter {} (position {}) is singular at {} inside the integration path",
                    l,
                    i + 1,
                    p
                )));
            }
        }
        if let Letter::Generic(g) = l {
            let den = g.f.den();
            if den.degree() > 0 && den.is_real() && b.is_real() && z.is_real() {
                let d = deflate(&deflate(den, &b), z);
                let (lo, hi) = if b.re() < z.re() {
                    (b.re(), z.re())
                } else {
                    (z.re(), b.re())
                };
                if d.degree() > 0 && sturm_root_count(&d, lo, hi)? > 0 {
                    return Err(Error::Divergence(format!(
                        "letter {} (position {}) has a pole inside the integration path",
                        l,
                        i + 1
                    )));
                }
            }
        }
    }
    let mut e = 0i64;
    for (i, l) in w.letters.iter().enumerate().rev() {
        let t = l.twice_order_at(&b, w.base) + e;
        if t <= -2 {
            return Err(Error::Divergence(format!(
                "the integral starting at letter {} (position {}) diverges at the base point {}",
                l,
                i + 1,
                b
            )));
        }
        e = t + 2;
    }
    let mut e = 0i64;
    for (i, l) in w.letters.iter().enumerate().rev() {
        let t = l.twice_order_at(z, w.base) + e;
        if i == 0 && t <= -2 {
            return Err(Error::Divergence(format!(
                "the outermost letter {l} is not integrable at the endpoint {z}"
            )));
        }
        e = if t < -2 { t + 2 } else { 0 };
    }
    Ok(())
}

/// Value of the word at a complex argument, integrating along the straight
/// segment from the base point.
pub fn eval_word_at(w: &IntegralWord, z: Complex64, tol: f64) -> Result<Complex64> {
    let pre = w.prefactor.to_complex();
    if w.letters.is_empty() {
        return Ok(pre);
    }
    let ze = exact_point(z)?;
    check(w, &ze)?;
    let span = z - w.base.value().to_complex();
    if span.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let letters: Vec<Vec<Factor>> = w.letters.iter().map(|l| compile(l, w.base, z)).collect();
    let orientation = match w.base {
        Base::One if w.letters.len() % 2 == 1 => -1.0,
        _ => 1.0,
    };
    let mut prev: Option<Complex64> = None;
    let mut n = MIN_STEPS;
    loop {
        let v = grid_value(&letters, span, n) * orientation;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Accuracy {
                estimate: f64::NAN,
                error: f64::INFINITY,
            });
        }
        if let Some(p) = prev {
            let err = (v - p).norm();
            if err <= tol * v.norm().max(1.0) {
                return Ok(v * pre);
            }
            if n >= MAX_STEPS {
                return Err(Error::Accuracy {
                    estimate: (v * pre).re,
                    error: err,
                });
            }
        }
        prev = Some(v);
        n *= 2;
    }
}

/// Real value of the word at `x`; errors if the value is not real.
pub fn eval_word(w: &IntegralWord, x: f64, tol: f64) -> Result<f64> {
    real_part(eval_word_at(w, Complex64::new(x, 0.0), tol)?, tol)
}

fn real_part(v: Complex64, tol: f64) -> Result<f64> {
    if v.im.abs() > tol.max(1e-12) * v.norm().max(1.0) * 100.0 {
        return Err(Error::Domain(format!(
            "value {} + {}i is not real",
            v.re, v.im
        )));
    }
    Ok(v.re)
}

/// Value of a linear combination of words at a complex argument.
pub fn eval_combination(c: &WordCombination, z: Complex64, tol: f64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, w) in c.terms() {
        acc += k.to_complex() * eval_word_at(w, z, tol)?;
    }
    Ok(acc)
}
