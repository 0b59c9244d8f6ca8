//! Change of variables `t = g(u)` applied uniformly to every level of a word.

use num_complex::Complex64;

use super::{eval_letter, Base, IntegralWord, Letter};
use crate::algebra::{AlgebraicNumber, Polynomial, RationalFunction};
use crate::catalog::Transformation;
use crate::error::{Error, Result};
use crate::verifier::square_after_compose;

type C = AlgebraicNumber;

/// Rewrite `w` under the transformation, sampling the branch of every
/// square-root letter inside the validity domain.
pub fn transform_word(w: &IntegralWord, t: &Transformation) -> Result<IntegralWord> {
    let u0 = match w.base {
        Base::One => Complex64::new(0.5, 0.0),
        Base::Zero => t.eval_inverse(Complex64::new(1.0 / 16.0, 0.0)),
    };
    transform_word_at(w, &t.g, u0)
}

/// Rewrite `w` under `t = g(u)`. Each letter `f` becomes `f(g(u))·g′(u)`
/// with square roots replaced by their rational images, whose signs match
/// the principal branches at `u0`. Letters are normalized to a monic
/// denominator and a numerator with lowest coefficient one; the scalars go
/// into the prefactor.
pub fn transform_word_at(
    w: &IntegralWord,
    g: &RationalFunction,
    u0: Complex64,
) -> Result<IntegralWord> {
    let b = w.base.value();
    if g.eval(&b)? != b {
        return Err(Error::Usage(format!(
            "the transformation does not fix the base point {b}"
        )));
    }
    let dg = g.derivative();
    let mut out = IntegralWord::empty(w.base).with_prefactor(w.prefactor.clone());
    for l in &w.letters {
        let (rho, roots) = l.exact_parts(w.base);
        let mut f = rho.compose(g)?.mul(&dg);
        if !roots.is_empty() {
            let mut radicand = Polynomial::one();
            let mut linear = Polynomial::one();
            for (a, c) in &roots {
                let lin = Polynomial::linear_root(a);
                radicand = radicand.mul(&lin.scale(&C::from_int(*c as i64)));
                linear = linear.mul(&lin);
            }
            let (kappa, root) = square_after_compose(&radicand, g).ok_or_else(|| {
                Error::Usage(format!(
                    "the transformation does not rationalize {} in letter {l}",
                    radicand.display("t")
                ))
            })?;
            let linear = RationalFunction::from_poly(linear).compose(g)?;
            f = f.mul(&root).div(&linear)?.scale(&kappa.sqrt());
            let u = u0;
            let expected = eval_letter(l, g.eval_complex(u), w.base) * dg.eval_complex(u);
            let got = f.eval_complex(u);
            if (got + expected).norm() < (got - expected).norm() {
                f = f.neg();
            }
        }
        let (f, scalar) = normalize(f);
        out.prefactor = &out.prefactor * &scalar;
        out.letters.push(Letter::generic(f));
    }
    Ok(out)
}

fn normalize(f: RationalFunction) -> (RationalFunction, C) {
    match f.num().trailing() {
        Some((_, c)) => {
            let inv = c.checked_inv().expect("non-zero");
            (f.scale(&inv), c)
        }
        None => (f, C::one()),
    }
}
