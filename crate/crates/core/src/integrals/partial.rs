//! Partial fractions of rational letters over the field of their coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{sign_constant, GenericLetter, IntegralWord, Letter, WordCombination};
use crate::algebra::{AlgebraicNumber, Polynomial, RationalFunction, Q};
use crate::error::{Error, Result};

type C = AlgebraicNumber;

/// `coefficient/(t - pole)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolePart {
    pub pole: C,
    pub coefficient: C,
}

/// `f = Σ cᵢ/(t-aᵢ) + polynomial + remainder`, where the remainder has no
/// simple pole with a root in the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub poles: Vec<PolePart>,
    pub polynomial: Polynomial,
    pub remainder: RationalFunction,
}

impl Decomposition {
    /// The rational function the parts add up to.
    pub fn resum(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_poly(self.polynomial.clone()).add(&self.remainder);
        for p in &self.poles {
            let term = RationalFunction::new(
                Polynomial::constant(p.coefficient.clone()),
                Polynomial::linear_root(&p.pole),
            )
            .expect("non-zero denominator");
            acc = acc.add(&term);
        }
        acc
    }

    fn is_single_pole(&self) -> bool {
        self.poles.len() == 1 && self.polynomial.is_zero() && self.remainder.is_zero()
    }
}

const MAX_CANDIDATE: i64 = 1 << 20;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n > BigInt::from(MAX_CANDIDATE) {
        return None;
    }
    let n = i64::try_from(&n).ok()?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots of a polynomial with rational coefficients.
fn rational_roots(p: &Polynomial) -> Vec<C> {
    let coeffs: Option<Vec<Q>> = p.coeffs().iter().map(|c| c.to_rational()).collect();
    let Some(coeffs) = coeffs else {
        return Vec::new();
    };
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        out.push(C::zero());
    }
    let (Some(ps), Some(qs)) = (
        divisors(&ints[low]),
        divisors(ints.last().expect("non-zero")),
    ) else {
        return out;
    };
    for pn in &ps {
        for qd in &qs {
            for s in [1, -1] {
                let r = C::from(Q::new(pn * s, qd.clone()));
                if !out.contains(&r) && p.eval(&r).is_zero() {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Roots in the coefficient field of a squarefree polynomial.
fn field_roots(p: &Polynomial) -> Vec<C> {
    let mut roots = rational_roots(p);
    let mut rest = p.clone();
    for r in &roots {
        rest = rest
            .exact_div(&Polynomial::linear_root(r))
            .expect("root divides");
    }
    match rest.degree() {
        1 => roots.push(-(&rest.coeff(0) / &rest.coeff(1))),
        2 => {
            let (a, b, c) = (rest.coeff(2), rest.coeff(1), rest.coeff(0));
            let disc = &(&b * &b) - &(&(&C::from_int(4) * &a) * &c);
            let root = disc.as_real().and_then(|d| {
                if d.sign() >= 0 {
                    d.sqrt_in_tower().map(C::real)
                } else {
                    (-d.clone())
                        .sqrt_in_tower()
                        .map(|s| C::new(crate::algebra::RealAlgebraic::zero(), s))
                }
            });
            if let Some(s) = root {
                let two_a = &C::from_int(2) * &a;
                roots.push(&(&(-b.clone()) + &s) / &two_a);
                roots.push(&(&(-b) - &s) / &two_a);
            }
        }
        _ => {}
    }
    roots
}

/// Partial-fraction decomposition over the simple poles with roots in the
/// coefficient field.
pub fn decompose(f: &RationalFunction) -> Decomposition {
    let den = f.den();
    let simple = den
        .yun()
        .ok()
        .and_then(|parts| parts.into_iter().next())
        .unwrap_or_else(Polynomial::one);
    let dd = den.derivative();
    let mut poles = Vec::new();
    let mut rest = f.clone();
    if simple.degree() > 0 {
        for r in field_roots(&simple) {
            let c = &f.num().eval(&r) / &dd.eval(&r);
            let term =
                RationalFunction::new(Polynomial::constant(c.clone()), Polynomial::linear_root(&r))
                    .expect("non-zero denominator");
            rest = rest.sub(&term);
            poles.push(PolePart {
                pole: r,
                coefficient: c,
            });
        }
    }
    let (q, r) = rest
        .num()
        .div_rem(rest.den())
        .expect("non-zero denominator");
    let remainder = RationalFunction::new(r, rest.den().clone()).expect("non-zero denominator");
    Decomposition {
        poles,
        polynomial: q,
        remainder,
    }
}

/// Split every letter into partial fractions. A letter that is a single
/// `c/(t-a)` becomes `Rat(a)` with `c/c_a` moved into the prefactor; other
/// letters keep their form and carry the decomposition.
pub fn partial_fraction_letters(w: &IntegralWord) -> Result<IntegralWord> {
    let mut out =
        IntegralWord::new(Vec::with_capacity(w.len()), w.base).with_prefactor(w.prefactor.clone());
    for l in &w.letters {
        let Letter::Generic(g) = l else {
            return Err(Error::Usage(format!(
                "partial fractions need rational letters, found {l}"
            )));
        };
        let d = decompose(&g.f);
        if d.is_single_pole() {
            let p = &d.poles[0];
            let ca = C::from_int(sign_constant(&p.pole, w.base) as i64);
            out.prefactor = &out.prefactor * &(&p.coefficient * &ca);
            out.letters.push(Letter::Rat(p.pole.clone()));
        } else {
            out.letters.push(Letter::Generic(GenericLetter {
                f: g.f.clone(),
                decomposition: Some(d),
            }));
        }
    }
    Ok(out)
}

/// Multiply out the attached decompositions into a combination of words.
pub fn expand_decompositions(w: &IntegralWord) -> WordCombination {
    let mut partial: Vec<(C, Vec<Letter>)> = vec![(w.prefactor.clone(), Vec::new())];
    for l in &w.letters {
        let options: Vec<(C, Letter)> = match l {
            Letter::Generic(GenericLetter {
                decomposition: Some(d),
                ..
            }) => {
                let mut v: Vec<(C, Letter)> = d
                    .poles
                    .iter()
                    .map(|p| {
                        let ca = C::from_int(sign_constant(&p.pole, w.base) as i64);
                        (&p.coefficient * &ca, Letter::Rat(p.pole.clone()))
                    })
                    .collect();
                if !d.polynomial.is_zero() {
                    v.push((
                        C::one(),
                        Letter::generic(RationalFunction::from_poly(d.polynomial.clone())),
                    ));
                }
                if !d.remainder.is_zero() {
                    v.push((C::one(), Letter::generic(d.remainder.clone())));
                }
                v
            }
            other => vec![(C::one(), other.clone())],
        };
        let mut next = Vec::with_capacity(partial.len() * options.len());
        for (c, letters) in &partial {
            for (k, opt) in &options {
                let mut ls = letters.clone();
                ls.push(opt.clone());
                next.push((c * k, ls));
            }
        }
        partial = next;
    }
    let mut out = WordCombination::zero();
    for (c, letters) in partial {
        out.add_term(c, IntegralWord::new(letters, w.base));
    }
    out
}
