//! Rationalizing transformations of minimal degree for the supported
//! radicand cases, their inverses and square-root images.

mod complex;
mod general;
mod real;

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{AlgebraicNumber, RationalFunction};
use crate::error::{Error, Result};
use crate::parser::{parse_expr, Env};
use crate::radicands::{CaseTag, RadicandCase};
use crate::sqrt_expr::{eval_expr, SqrtExpression};

type C = AlgebraicNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    General,
    RealUnitInterval,
    ComplexUnitInterval,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::General => "general",
            Variant::RealUnitInterval => "real01",
            Variant::ComplexUnitInterval => "complex01",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "general" => Some(Variant::General),
            "real01" => Some(Variant::RealUnitInterval),
            "complex01" => Some(Variant::ComplexUnitInterval),
            _ => None,
        }
    }

    pub fn is_unit_interval(self) -> bool {
        self != Variant::General
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Formula family of a transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GeneralSquare,
    GeneralLinear,
    GeneralQuadraticZero,
    GeneralQuadratic,
    GeneralTwoLinearZero,
    GeneralTwoLinear,
    GeneralThreeZero,
    GeneralThree,
    RealSquare,
    RealLinear,
    RealQuadraticZero,
    RealQuadraticZeroUnit,
    RealQuadratic,
    RealTwoLinearZero,
    RealTwoLinear,
    RealThreeZero,
    RealThree,
    ComplexTwoLinear,
    ComplexThreeZero,
    ComplexThree,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::GeneralSquare => "general/linear-zero",
            Family::GeneralLinear => "general/linear",
            Family::GeneralQuadraticZero => "general/quadratic-zero",
            Family::GeneralQuadratic => "general/quadratic",
            Family::GeneralTwoLinearZero => "general/two-linear-zero",
            Family::GeneralTwoLinear => "general/two-linear",
            Family::GeneralThreeZero => "general/three-quadratic-zero",
            Family::GeneralThree => "general/three-quadratic",
            Family::RealSquare => "real01/linear-zero",
            Family::RealLinear => "real01/linear",
            Family::RealQuadraticZero => "real01/quadratic-zero",
            Family::RealQuadraticZeroUnit => "real01/quadratic-zero-unit",
            Family::RealQuadratic => "real01/quadratic",
            Family::RealTwoLinearZero => "real01/two-linear-zero",
            Family::RealTwoLinear => "real01/two-linear",
            Family::RealThreeZero => "real01/three-quadratic-zero",
            Family::RealThree => "real01/three-quadratic",
            Family::ComplexTwoLinear => "complex01/two-linear",
            Family::ComplexThreeZero => "complex01/three-quadratic-zero",
            Family::ComplexThree => "complex01/three-quadratic",
        }
    }
}

/// Square root of a radicand in `x` as a rational function of `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct SqrtImage {
    /// Radicand (or product of radicands) in `x`.
    pub radicand: RationalFunction,
    /// `image(y)² = radicand(g(y))`.
    pub image: RationalFunction,
}

#[derive(Clone, Debug)]
pub struct Transformation {
    pub family: Family,
    pub variant: Variant,
    pub case: CaseTag,
    /// Named constants appearing in the formulas (α, β, …).
    pub constants: Vec<(String, C)>,
    /// `x = g(y)`.
    pub g: RationalFunction,
    pub inverse: SqrtExpression,
    /// The `w(1)·x / w(x)` form, when one exists.
    pub alternate_inverse: Option<SqrtExpression>,
    pub images: Vec<SqrtImage>,
    pub validity: String,
    /// Möbius parameter applied on top of the catalog formula.
    pub lambda: Option<C>,
}

impl Transformation {
    /// `max(deg num, deg den)` of `g`.
    pub fn degree(&self) -> usize {
        self.g.degree()
    }

    /// Points of `[0,1]` where the primary inverse has a removable singularity.
    pub fn removable_points(&self) -> Vec<C> {
        let mut out: Vec<C> = Vec::new();
        for (_, coef) in self.inverse.terms() {
            let d = coef.den();
            if d.degree() == 1 {
                let r = -(&d.coeff(0) / &d.coeff(1));
                let inside = r
                    .as_real()
                    .is_some_and(|v| v.sign() >= 0 && *v <= crate::algebra::RealAlgebraic::one());
                if inside && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
        out
    }

    /// Numeric inverse with principal square roots, preferring the
    /// alternate form, which has no removable singularities inside `(0,1]`.
    pub fn eval_inverse(&self, x: Complex64) -> Complex64 {
        match &self.alternate_inverse {
            Some(alt) => alt.eval_complex(x),
            None => self.inverse.eval_complex(x),
        }
    }
}

/// Constant bindings and formula transcription helpers.
pub(crate) struct Formulas {
    env: Env,
    constants: Vec<(String, C)>,
}

impl Formulas {
    pub(crate) fn new() -> Self {
        Formulas {
            env: Env::new(),
            constants: Vec::new(),
        }
    }

    /// Bind a parameter of the case.
    pub(crate) fn bind(&mut self, name: &str, v: C) -> C {
        self.env.bindings.insert(name.to_string(), v.clone());
        v
    }

    /// Bind a derived constant that is reported with the transformation.
    pub(crate) fn derive(&mut self, name: &str, src: &str) -> Result<C> {
        let v = self.constant(src)?;
        self.constants.push((name.to_string(), v.clone()));
        Ok(self.bind(name, v))
    }

    pub(crate) fn constant(&self, src: &str) -> Result<C> {
        parse_expr(src)?.to_constant(&self.env)
    }

    fn ratfun(&self, src: &str, var: &str) -> Result<RationalFunction> {
        let mut env = self.env.clone().with_var(var);
        parse_expr(src)?.to_rational_function(&mut env)
    }

    pub(crate) fn in_y(&self, src: &str) -> Result<RationalFunction> {
        self.ratfun(src, "y")
    }

    pub(crate) fn in_x(&self, src: &str) -> Result<RationalFunction> {
        self.ratfun(src, "x")
    }

    /// An element of the square-root algebra; `symbols` pairs each symbol
    /// name with its radicand in `x`.
    pub(crate) fn sqrt_expr(&self, src: &str, symbols: &[(&str, &str)]) -> Result<SqrtExpression> {
        let names: Vec<&str> = symbols.iter().map(|s| s.0).collect();
        let radicands = symbols
            .iter()
            .map(|s| self.in_x(s.1))
            .collect::<Result<Vec<_>>>()?;
        eval_expr(&parse_expr(src)?, &self.env, &names, &radicands)
    }

    pub(crate) fn image(&self, radicand: &str, image: &str) -> Result<SqrtImage> {
        Ok(SqrtImage {
            radicand: self.in_x(radicand)?,
            image: self.in_y(image)?,
        })
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn finish(
        self,
        family: Family,
        variant: Variant,
        case: &CaseTag,
        g: RationalFunction,
        inverse: SqrtExpression,
        alternate_inverse: Option<SqrtExpression>,
        images: Vec<SqrtImage>,
        validity: &str,
    ) -> Transformation {
        Transformation {
            family,
            variant,
            case: case.clone(),
            constants: self.constants,
            g,
            inverse,
            alternate_inverse,
            images,
            validity: validity.to_string(),
            lambda: None,
        }
    }
}

/// The general transformation for a classified case.
pub fn general_transformation(case: &CaseTag) -> Result<Transformation> {
    general::build(case)
}

/// The unit-interval transformation for an eligible case.
pub fn unit_interval_transformation(
    case: &RadicandCase,
    variant: Variant,
) -> Result<Transformation> {
    match variant {
        Variant::General => general_transformation(&case.tag),
        Variant::RealUnitInterval => {
            if let Some(v) = case.real.violated() {
                return Err(Error::Usage(format!(
                    "the real unit-interval variant is not applicable; violated condition: {v}"
                )));
            }
            real::build(&case.tag)
        }
        Variant::ComplexUnitInterval => {
            if let Some(v) = case.complex.violated() {
                return Err(Error::Usage(format!(
                    "the complex unit-interval variant is not applicable; violated condition: {v}"
                )));
            }
            match &case.complex_config {
                Some(cfg) => complex::build(&case.tag, cfg),
                None => Err(Error::Usage(
                    "the complex unit-interval variant is not applicable".into(),
                )),
            }
        }
    }
}

/// Dispatch on the variant.
pub fn transformation(case: &RadicandCase, variant: Variant) -> Result<Transformation> {
    unit_interval_transformation(case, variant)
}

/// Reparameterize by `h(y) = y / ((1-λ)y + λ)` with `λ > 0`.
pub fn compose_moebius(t: &Transformation, lambda: &C) -> Result<Transformation> {
    if !t.variant.is_unit_interval() {
        return Err(Error::Usage(
            "Möbius reparameterization applies to unit-interval variants".into(),
        ));
    }
    match lambda.real_sign() {
        Some(s) if s > 0 => {}
        _ => {
            return Err(Error::Domain(
                "lambda must be a positive real number".into(),
            ))
        }
    }
    let one = C::one();
    let h = RationalFunction::new(
        crate::algebra::Polynomial::x(),
        crate::algebra::Polynomial::new(vec![lambda.clone(), &one - lambda]),
    )?;
    let h_inv = |y: &SqrtExpression| -> Result<SqrtExpression> {
        let syms = y.symbols().to_vec();
        let num = y.scale(lambda);
        let den = y
            .scale(&(lambda - &one))
            .add(&SqrtExpression::constant(&syms, one.clone()));
        num.div(&den)
    };
    let lambda_total = match &t.lambda {
        None => lambda.clone(),
        Some(l) => {
            // h_λ ∘ h_μ = h_{λμ}
            l * lambda
        }
    };
    Ok(Transformation {
        g: t.g.compose(&h)?,
        inverse: h_inv(&t.inverse)?,
        alternate_inverse: t.alternate_inverse.as_ref().map(h_inv).transpose()?,
        images: t
            .images
            .iter()
            .map(|im| {
                Ok(SqrtImage {
                    radicand: im.radicand.clone(),
                    image: im.image.compose(&h)?,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        lambda: if lambda_total.is_one() {
            None
        } else {
            Some(lambda_total)
        },
        ..t.clone()
    })
}

#[cfg(test)]
mod tests;
