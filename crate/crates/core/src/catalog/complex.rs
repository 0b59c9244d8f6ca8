use super::{Family, Formulas, Transformation, Variant};
use crate::algebra::AlgebraicNumber;
use crate::error::Result;
use crate::radicands::{CaseTag, ComplexConfig};

type C = AlgebraicNumber;

/// Bind `a`, its conjugate and the real quantities `re`, `im`, `|a|²` and
/// `|(a-1)/a|` under the given suffix.
fn bind_complex(f: &mut Formulas, k: usize, a: &C) {
    f.bind(&format!("a{k}"), a.clone());
    f.bind(&format!("b{k}"), a.conj());
    f.bind(&format!("re{k}"), C::real(a.re().clone()));
    f.bind(&format!("im{k}"), C::real(a.im().clone()));
    f.bind(&format!("n{k}"), C::real(a.norm_sq()));
    let ratio = &(a - &C::one()) / a;
    f.bind(&format!("m{k}"), C::real(ratio.norm_sq()).sqrt());
}

pub(super) fn build(case: &CaseTag, config: &ComplexConfig) -> Result<Transformation> {
    let mut f = Formulas::new();
    let v = Variant::ComplexUnitInterval;
    match config {
        ComplexConfig::ConjugatePair { a1 } => {
            bind_complex(&mut f, 1, a1);
            f.derive("alpha", "1+m1+sqrt(2*(1-re1/n1+m1))")?;
            let s = [("r1", "(a1-x)/a1"), ("r2", "(b1-x)/b1")];
            let g = f.in_y("4*n1*alpha*y*(y^2-2*re1*alpha*y+n1*alpha^2)/(y^2-n1*alpha^2)^2")?;
            let inv = f.sqrt_expr("n1*alpha*(1-r1)*(1-r2)/x", &s)?;
            let alt = f.sqrt_expr("alpha*x/((1+r1)*(1+r2))", &s)?;
            let re = "(y^2-2*re1*alpha*y+n1*alpha^2)/(-y^2+n1*alpha^2)";
            let im = "2*im1*alpha*y/(-y^2+n1*alpha^2)";
            let img = vec![
                f.image("(a1-x)/a1", &format!("{re}+i*{im}"))?,
                f.image("(b1-x)/b1", &format!("{re}-i*{im}"))?,
            ];
            let note = "g maps [0,1] bijectively and increasingly onto itself; \
                        the primary inverse has a removable singularity at x = 0";
            Ok(f.finish(
                Family::ComplexTwoLinear,
                v,
                case,
                g,
                inv,
                Some(alt),
                img,
                note,
            ))
        }
        ComplexConfig::ConjugatePairWithZero { a1 } => {
            bind_complex(&mut f, 1, a1);
            f.derive("alpha", "m1")?;
            f.derive("beta", "sqrt((1-re1/n1+alpha)/2)")?;
            let q = "((n1-re1-n1*alpha)*y^4+2*re1*y^2+n1-re1+n1*alpha)";
            let s = [("r1", "x"), ("r2", "(a1-x)/a1"), ("r3", "(b1-x)/b1")];
            let g = f.in_y(&format!("2*n1*y^2/{q}"))?;
            let inv = f.sqrt_expr("-i*n1*beta/im1*(r2-r3)*r1/x", &s)?;
            let alt = f.sqrt_expr("2*beta*x/(r1*r2+r1*r3)", &s)?;
            let re = format!("(n1-re1+n1*alpha)*y/(beta*{q})");
            let im = format!("im1*y^3/(beta*{q})");
            let img = vec![
                f.image("x*(a1-x)/a1", &format!("{re}+i*{im}"))?,
                f.image("x*(b1-x)/b1", &format!("{re}-i*{im}"))?,
                f.image(
                    "(a1-x)*(b1-x)/(a1*b1)",
                    &format!("(-(n1-re1-n1*alpha)*y^4+n1-re1+n1*alpha)/{q}"),
                )?,
            ];
            let note = "g maps [0,1] bijectively and increasingly onto itself; \
                        square roots of the radicands are taken as pairwise products of \
                        sqrt(x), sqrt((a1-x)/a1), sqrt((conj(a1)-x)/conj(a1)), so the \
                        inverse and all images hold for every x";
            Ok(f.finish(
                Family::ComplexThreeZero,
                v,
                case,
                g,
                inv,
                Some(alt),
                img,
                note,
            ))
        }
        ComplexConfig::RealAndConjugatePair { a1, a2 } => {
            f.bind("a1", C::real(a1.clone()));
            bind_complex(&mut f, 2, a2);
            f.derive("alpha", "m2+sqrt((a1-1)/a1)*sqrt(2*(1-re2/n2+m2))")?;
            let q = "((a1^2-4*a1*re2-4*im2^2)*y^4+8*a1*n2*(1+alpha)*y^3\
                     -2*a1*n2*(a1+2*re2)*(1+alpha)^2*y^2+a1^2*n2^2*(1+alpha)^4)";
            let s = [
                ("r1", "(a1-x)/a1"),
                ("r2", "(a2-x)/a2"),
                ("r3", "(b2-x)/b2"),
            ];
            let g = f.in_y(&format!(
                "-4*a1*n2*y*(y-a1*(1+alpha))*(y^2-2*re2*(1+alpha)*y+n2*(1+alpha)^2)/{q}"
            ))?;
            let inv = f.sqrt_expr(
                "-a1*n2*(1+alpha)/((a1^2-4*a1*re2-4*im2^2)*x+4*a1*n2)*(2*x-a1-2*re2\
                 +a1*r1*(r2+r3)+(2*re2-a1)*r2*r3+2*i*im2*r1*(r2-r3))",
                &s,
            )?;
            let alt = f.sqrt_expr("(1+alpha)*x/(1+r1*r2+r1*r3+r2*r3)", &s)?;
            let p = "((2*re2-a1)*y^2-2*n2*(1+alpha)*y+a1*n2*(1+alpha)^2)";
            let r = "((a1^2+4*im2^2)*y^4-4*a1*(a1*re2+2*im2^2)*(1+alpha)*y^3\
                     +6*a1^2*n2*(1+alpha)^2*y^2-4*a1^2*re2*n2*(1+alpha)^3*y+a1^2*n2^2*(1+alpha)^4)";
            let re = format!("a1*(y^2-2*re2*(1+alpha)*y+n2*(1+alpha)^2)*{p}/{q}");
            let im = format!("2*im2*y*(y-a1*(1+alpha))*{p}/{q}");
            let img = vec![
                f.image("(a1-x)*(a2-x)/(a1*a2)", &format!("{re}-i*{im}"))?,
                f.image("(a1-x)*(b2-x)/(a1*b2)", &format!("{re}+i*{im}"))?,
                f.image("(a2-x)*(b2-x)/(a2*b2)", &format!("{r}/{q}"))?,
            ];
            let note = "g maps [0,1] bijectively and increasingly onto itself; \
                        square roots of the radicands are taken as pairwise products of \
                        sqrt((ai-x)/ai), so the inverse and all images hold for every x; \
                        the primary inverse may have a removable singularity where its \
                        prefactor denominator vanishes";
            Ok(f.finish(Family::ComplexThree, v, case, g, inv, Some(alt), img, note))
        }
    }
}
