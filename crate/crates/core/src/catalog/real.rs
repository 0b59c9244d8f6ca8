use super::{Family, Formulas, Transformation, Variant};
use crate::error::Result;
use crate::radicands::CaseTag;

const ON_UNIT: &str = "g maps [0,1] bijectively and increasingly onto itself; \
inverse holds identically in the square-root algebra";

pub(super) fn build(case: &CaseTag) -> Result<Transformation> {
    let mut f = Formulas::new();
    let v = Variant::RealUnitInterval;
    match case {
        CaseTag::OneLinear { a } if a.is_zero() => {
            let g = f.in_y("y^2")?;
            let inv = f.sqrt_expr("r1", &[("r1", "x")])?;
            let alt = f.sqrt_expr("x/r1", &[("r1", "x")])?;
            let img = vec![f.image("x", "y")?];
            Ok(f.finish(Family::RealSquare, v, case, g, inv, Some(alt), img, ON_UNIT))
        }
        CaseTag::OneLinear { a } => {
            f.bind("a", a.clone());
            f.derive("alpha", "sqrt(1-1/a)")?;
            let s = [("r1", "(a-x)/a")];
            let g = f.in_y("y*((1-2*a+2*a*alpha)*y+2*a*(1-alpha))")?;
            let inv = f.sqrt_expr("a*(1+alpha)*(1-r1)", &s)?;
            let alt = f.sqrt_expr("(1+alpha)*x/(1+r1)", &s)?;
            let img = vec![f.image("(a-x)/a", "(alpha-1)*y+1")?];
            Ok(f.finish(Family::RealLinear, v, case, g, inv, Some(alt), img, ON_UNIT))
        }
        CaseTag::OneQuadratic { c0, c1 } if c0.is_zero() => {
            let a = f.bind("a", -c1.clone());
            if a.is_one() {
                let s = [("r1", "x*(1-x)")];
                let g = f.in_y("y^2/(2*y^2-2*y+1)")?;
                let inv = f.sqrt_expr("(x-r1)/(2*x-1)", &s)?;
                let alt = f.sqrt_expr("x/(x+r1)", &s)?;
                let img = vec![f.image("x*(1-x)", "y*(1-y)/(2*y^2-2*y+1)")?];
                let note = "g maps [0,1] bijectively and increasingly onto itself; \
                            the primary inverse has a removable singularity at x = 1/2";
                return Ok(f.finish(
                    Family::RealQuadraticZeroUnit,
                    v,
                    case,
                    g,
                    inv,
                    Some(alt),
                    img,
                    note,
                ));
            }
            f.derive("alpha", "sqrt(1-1/a)")?;
            let s = [("r1", "x*(a-x)/a")];
            let g = f.in_y("a*y^2/(y^2+a-1)")?;
            let inv = f.sqrt_expr("a*alpha*r1/(a-x)", &s)?;
            let alt = f.sqrt_expr("alpha*x/r1", &s)?;
            let img = vec![f.image("x*(a-x)/a", "a*alpha*y/(y^2+a-1)")?];
            Ok(f.finish(
                Family::RealQuadraticZero,
                v,
                case,
                g,
                inv,
                Some(alt),
                img,
                ON_UNIT,
            ))
        }
        CaseTag::OneQuadratic { c0, c1 } => {
            f.bind("c0", c0.clone());
            f.bind("c1", c1.clone());
            f.derive("alpha", "sqrt(1+(c1+1)/c0)")?;
            let s = [("r1", "(x^2+c1*x+c0)/c0")];
            let g = f.in_y("y*(c1*y+2*c0*(1+alpha))/(1+2*c0+c1+2*c0*alpha-y^2)")?;
            let inv = f.sqrt_expr("c0*(1+alpha)*(r1-1)/(x+c1)", &s)?;
            let alt = f.sqrt_expr("(1+alpha)*x/(1+r1)", &s)?;
            let img = vec![f.image(
                "(x^2+c1*x+c0)/c0",
                "(1+2*c0+c1+2*c0*alpha+c1*(1+alpha)*y+y^2)/(1+2*c0+c1+2*c0*alpha-y^2)",
            )?];
            let note = "g maps [0,1] bijectively and increasingly onto itself; \
                        the primary inverse has a removable singularity at x = -c1";
            Ok(f.finish(Family::RealQuadratic, v, case, g, inv, Some(alt), img, note))
        }
        CaseTag::TwoLinear { a1, a2 } if a2.is_zero() => {
            f.bind("a", a1.clone());
            f.derive("alpha", "sqrt(1-1/a)")?;
            let s = [("r1", "x"), ("r2", "(a-x)/a")];
            let g = f.in_y("4*y^2/((1-alpha)*y^2+1+alpha)^2")?;
            let inv = f.sqrt_expr("a*(1+alpha)*(1-r2)/r1", &s)?;
            let alt = f.sqrt_expr("(1+alpha)*r1/(1+r2)", &s)?;
            let img = vec![
                f.image("x", "2*y/((1-alpha)*y^2+1+alpha)")?,
                f.image("(a-x)/a", "(1-2*a*(1+alpha)+y^2)/(1-2*a*(1+alpha)-y^2)")?,
            ];
            Ok(f.finish(
                Family::RealTwoLinearZero,
                v,
                case,
                g,
                inv,
                Some(alt),
                img,
                ON_UNIT,
            ))
        }
        CaseTag::TwoLinear { a1, a2 } => {
            f.bind("a1", a1.clone());
            f.bind("a2", a2.clone());
            f.derive("alpha", "(1+sqrt(1-1/a1))*(1+sqrt(1-1/a2))")?;
            let s = [("r1", "(a1-x)/a1"), ("r2", "(a2-x)/a2")];
            let g = f.in_y("4*a1*a2*alpha*y*(y-a1*alpha)*(y-a2*alpha)/(y^2-a1*a2*alpha^2)^2")?;
            let inv = f.sqrt_expr("a1*a2*alpha*(1-r1)*(1-r2)/x", &s)?;
            let alt = f.sqrt_expr("alpha*x/((1+r1)*(1+r2))", &s)?;
            let img = vec![
                f.image(
                    "(a1-x)/a1",
                    "(y^2-2*a2*alpha*y+a1*a2*alpha^2)/(-y^2+a1*a2*alpha^2)",
                )?,
                f.image(
                    "(a2-x)/a2",
                    "(y^2-2*a1*alpha*y+a1*a2*alpha^2)/(-y^2+a1*a2*alpha^2)",
                )?,
            ];
            let note = "g maps [0,1] bijectively and increasingly onto itself; \
                        the primary inverse has a removable singularity at x = 0";
            Ok(f.finish(Family::RealTwoLinear, v, case, g, inv, Some(alt), img, note))
        }
        CaseTag::ThreeQuadratic { a1, a2, a3 } if a3.is_zero() => {
            f.bind("a1", a1.clone());
            f.bind("a2", a2.clone());
            f.derive("beta1", "sqrt(1-1/a1)")?;
            f.derive("beta2", "sqrt(1-1/a2)")?;
            f.derive("alpha", "sqrt((1-1/a1)*(1-1/a2))")?;
            f.bind("s1", f.constant("a1+a2")?);
            f.bind("s2", f.constant("a1*a2")?);
            let s = [("r1", "x"), ("r2", "(a1-x)/a1"), ("r3", "(a2-x)/a2")];
            let den = "((-s1+2*s2*(1-alpha))*y^4+2*s1*y^2-s1+2*s2*(1+alpha))";
            let g = f.in_y(&format!("4*s2*y^2/{den}"))?;
            let inv = f.sqrt_expr("a1*a2*(beta1+beta2)*(r1*r2-r1*r3)/((a1-a2)*x)", &s)?;
            let alt = f.sqrt_expr("(beta1+beta2)*x/(r1*r2+r1*r3)", &s)?;
            let img = vec![
                f.image(
                    "x*(a1-x)/a1",
                    &format!("2*s2*y*((beta1-beta2)*y^2+beta1+beta2)/{den}"),
                )?,
                f.image(
                    "x*(a2-x)/a2",
                    &format!("2*s2*y*((beta2-beta1)*y^2+beta1+beta2)/{den}"),
                )?,
                f.image(
                    "(a1-x)*(a2-x)/(a1*a2)",
                    &format!("((s1-2*s2*(1-alpha))*y^4-s1+2*s2*(1+alpha))/{den}"),
                )?,
            ];
            let note = "g maps [0,1] bijectively and increasingly onto itself; \
                        square roots of the radicands are taken as pairwise products of \
                        sqrt(x), sqrt((a1-x)/a1), sqrt((a2-x)/a2), so the inverse and all \
                        images hold for every x";
            Ok(f.finish(Family::RealThreeZero, v, case, g, inv, Some(alt), img, note))
        }
        CaseTag::ThreeQuadratic { a1, a2, a3 } => {
            f.bind("a1", a1.clone());
            f.bind("a2", a2.clone());
            f.bind("a3", a3.clone());
            f.derive(
                "alpha",
                "sqrt((1-1/a1)*(1-1/a2))+sqrt((1-1/a1)*(1-1/a3))+sqrt((1-1/a2)*(1-1/a3))",
            )?;
            f.bind("s1", f.constant("a1+a2+a3")?);
            f.bind("s2", f.constant("a1*a2+a1*a3+a2*a3")?);
            f.bind("s3", f.constant("a1*a2*a3")?);
            let q = "((s1^2-4*s2)*y^4+8*s3*(1+alpha)*y^3-2*s1*s3*(1+alpha)^2*y^2+s3^2*(1+alpha)^4)";
            let s = [
                ("r1", "(a1-x)/a1"),
                ("r2", "(a2-x)/a2"),
                ("r3", "(a3-x)/a3"),
            ];
            let g = f.in_y(&format!(
                "-4*s3*y*(y-a1*(1+alpha))*(y-a2*(1+alpha))*(y-a3*(1+alpha))/{q}"
            ))?;
            let inv = f.sqrt_expr(
                "-s3*(1+alpha)/((s1^2-4*s2)*x+4*s3)*(2*x-s1+(s1-2*a3)*r1*r2+(s1-2*a2)*r1*r3+(s1-2*a1)*r2*r3)",
                &s,
            )?;
            let alt = f.sqrt_expr("(1+alpha)*x/(1+r1*r2+r1*r3+r2*r3)", &s)?;
            let p = |i: usize| format!("((s1-2*a{i})*y^2-2*s3/a{i}*(1+alpha)*y+s3*(1+alpha)^2)");
            let mut img = Vec::new();
            for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                img.push(f.image(
                    &format!("(a{i}-x)*(a{j}-x)/(a{i}*a{j})"),
                    &format!("{}*{}/{q}", p(i), p(j)),
                )?);
            }
            let note = "g maps [0,1] bijectively and increasingly onto itself; \
                        square roots of the radicands are taken as pairwise products of \
                        sqrt((ai-x)/ai), so the inverse and all images hold for every x; \
                        the primary inverse may have a removable singularity at \
                        x = -4*s3/(s1^2-4*s2)";
            Ok(f.finish(Family::RealThree, v, case, g, inv, Some(alt), img, note))
        }
        CaseTag::Empty | CaseTag::NoTransformation { .. } => super::general::build(case),
    }
}
