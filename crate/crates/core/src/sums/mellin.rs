//! Mellin representations `c₀ + Σⱼ cⱼⁿ·M[fⱼ](n)` with opaque integrands.

use std::fmt;

use super::C;
use crate::algebra::{Polynomial, RationalFunction, RealAlgebraic};
use crate::error::{Error, Result};

/// `multipliers(x) · tag(x)`: an opaque function with rational factors
/// attached, kept as a list in order of application.
#[derive(Clone, Debug, PartialEq)]
pub struct MellinIntegrand {
    pub tag: String,
    pub multipliers: Vec<RationalFunction>,
}

impl MellinIntegrand {
    pub fn tag(tag: &str) -> Self {
        MellinIntegrand {
            tag: tag.to_string(),
            multipliers: Vec::new(),
        }
    }

    pub fn times(&self, f: RationalFunction) -> Self {
        let mut out = self.clone();
        out.multipliers.push(f);
        out
    }
}

impl fmt::Display for MellinIntegrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in self.multipliers.iter().rev() {
            write!(f, "({})*", m.display("x"))?;
        }
        write!(f, "{}(x)", self.tag)
    }
}

/// `coefficient · baseⁿ · M[integrand](n)`, or at the fixed argument
/// `at` when it is `Some`.
#[derive(Clone, Debug, PartialEq)]
pub struct MellinTerm {
    pub coefficient: C,
    pub base: C,
    pub integrand: MellinIntegrand,
    pub at: Option<u64>,
}

impl MellinTerm {
    pub fn is_constant(&self) -> bool {
        self.at.is_some()
    }
}

impl fmt::Display for MellinTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign_free = self.coefficient.to_string();
        if !self.coefficient.is_one() {
            write!(f, "({sign_free})*")?;
        }
        let arg = match self.at {
            Some(k) => k.to_string(),
            None => {
                if !self.base.is_one() {
                    write!(f, "({})^n*", self.base)?;
                }
                "n".into()
            }
        };
        write!(f, "M[{}]({arg})", self.integrand)
    }
}

/// `c₀ + Σ terms`; terms with a fixed argument are `n`-independent.
#[derive(Clone, Debug, PartialEq)]
pub struct MellinRep {
    pub c0: C,
    pub terms: Vec<MellinTerm>,
    /// Some integrand has a pole in `[0,1]`, so the Mellin integral needs
    /// regularization.
    pub needs_regularization: bool,
}

impl MellinRep {
    /// `baseⁿ·M[f](n)`.
    pub fn single(base: C, f: MellinIntegrand) -> Self {
        MellinRep {
            c0: C::zero(),
            terms: vec![MellinTerm {
                coefficient: C::one(),
                base,
                integrand: f,
                at: None,
            }],
            needs_regularization: false,
        }
    }

    /// Every term has the shape `cⁿ·M[f](n)` or is `n`-independent.
    pub fn has_valid_shape(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.at.is_some() || !t.base.is_zero())
    }
}

impl fmt::Display for MellinRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.c0.is_zero() {
            parts.push(self.c0.to_string());
        }
        parts.extend(self.terms.iter().map(|t| t.to_string()));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))?;
        if self.needs_regularization {
            write!(f, "  [regularization needed]")?;
        }
        Ok(())
    }
}

/// `Σ_{i=1}^{n} cⁱ·M[f](i) = cⁿ·M[x/(x-1/c)·f](n) - M[x/(x-1/c)·f](0)`.
pub fn mellin_sum_rule(c: &C, f: &MellinIntegrand) -> Result<MellinRep> {
    let inv = c
        .checked_inv()
        .ok_or_else(|| Error::Domain("the Mellin sum rule needs c ≠ 0".into()))?;
    let kernel = RationalFunction::new(Polynomial::x(), Polynomial::linear_root(&inv))?;
    let g = f.times(kernel);
    let singular = inv
        .as_real()
        .is_some_and(|v| v.sign() >= 0 && *v <= RealAlgebraic::one());
    Ok(MellinRep {
        c0: C::zero(),
        terms: vec![
            MellinTerm {
                coefficient: C::one(),
                base: c.clone(),
                integrand: g.clone(),
                at: None,
            },
            MellinTerm {
                coefficient: -C::one(),
                base: C::one(),
                integrand: g,
                at: Some(0),
            },
        ],
        needs_regularization: singular,
    })
}
