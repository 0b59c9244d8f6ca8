//! Exact real-root counting with Sturm sequences.

use super::number::AlgebraicNumber;
use super::poly::Polynomial;
use super::tower::RealAlgebraic;
use crate::error::{domain, Error, Result};

fn sign_at(p: &Polynomial, x: &AlgebraicNumber) -> Result<i32> {
    p.eval(x)
        .real_sign()
        .ok_or_else(|| Error::Domain("Sturm sequence requires real coefficients".into()))
}

fn sign_changes(seq: &[Polynomial], x: &AlgebraicNumber) -> Result<usize> {
    let mut last = 0;
    let mut n = 0;
    for p in seq {
        let s = sign_at(p, x)?;
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    Ok(n)
}

/// The Sturm sequence of `p` (assumed squarefree).
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("non-zero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_root_count(p: &Polynomial, lo: &RealAlgebraic, hi: &RealAlgebraic) -> Result<usize> {
    if p.is_zero() {
        return domain("root count of the zero polynomial");
    }
    if !p.is_real() {
        return domain("Sturm sequence requires real coefficients");
    }
    if lo >= hi {
        return domain("empty interval for root counting");
    }
    let lo = AlgebraicNumber::real(lo.clone());
    let hi = AlgebraicNumber::real(hi.clone());
    if p.degree() == 0 {
        return Ok(0);
    }
    for (x, name) in [(&lo, "lower"), (&hi, "upper")] {
        if p.eval(x).is_zero() {
            return Err(Error::EndpointRoot(format!(
                "polynomial vanishes at the {name} endpoint {x}"
            )));
        }
    }
    let r = p.radical()?;
    let seq = sturm_sequence(&r);
    let a = sign_changes(&seq, &lo)?;
    let b = sign_changes(&seq, &hi)?;
    Ok(a.saturating_sub(b))
}
