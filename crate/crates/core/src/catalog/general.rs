use super::{Family, Formulas, Transformation, Variant};
use crate::error::{Error, Result};
use crate::radicands::CaseTag;

const VALIDITY: &str = "inverse holds identically in the square-root algebra; \
principal roots select the branch with g^-1(g(y)) = y near y = 0";

pub(super) fn build(case: &CaseTag) -> Result<Transformation> {
    let mut f = Formulas::new();
    let v = Variant::General;
    match case {
        CaseTag::OneLinear { a } if a.is_zero() => {
            let inv = f.sqrt_expr("r1", &[("r1", "x")])?;
            let img = vec![f.image("x", "y")?];
            let g = f.in_y("y^2")?;
            Ok(f.finish(Family::GeneralSquare, v, case, g, inv, None, img, VALIDITY))
        }
        CaseTag::OneLinear { a } => {
            f.bind("a", a.clone());
            let g = f.in_y("-4*a*y*(y+1)")?;
            let inv = f.sqrt_expr("(r1-sqrt(-a))/(2*sqrt(-a))", &[("r1", "x-a")])?;
            let img = vec![f.image("x-a", "sqrt(-a)*(2*y+1)")?];
            Ok(f.finish(Family::GeneralLinear, v, case, g, inv, None, img, VALIDITY))
        }
        CaseTag::OneQuadratic { c0, c1 } if c0.is_zero() => {
            f.bind("c1", c1.clone());
            let g = f.in_y("c1*y^2/(4*(y+1))")?;
            let inv = f.sqrt_expr("2/c1*(x+r1)", &[("r1", "x^2+c1*x")])?;
            let img = vec![f.image("x^2+c1*x", "c1*y*(y+2)/(4*(y+1))")?];
            Ok(f.finish(
                Family::GeneralQuadraticZero,
                v,
                case,
                g,
                inv,
                None,
                img,
                VALIDITY,
            ))
        }
        CaseTag::OneQuadratic { c0, c1 } => {
            f.bind("c0", c0.clone());
            f.bind("c1", c1.clone());
            let g = f.in_y("4*c0*y/((c1^2-4*c0)*y^2-2*c1*y+1)")?;
            let inv = f.sqrt_expr(
                "(c1*x+2*c0-2*sqrt(c0)*r1)/((c1^2-4*c0)*x)",
                &[("r1", "x^2+c1*x+c0")],
            )?;
            let img = vec![f.image(
                "x^2+c1*x+c0",
                "sqrt(c0)*((c1^2-4*c0)*y^2-1)/((c1^2-4*c0)*y^2-2*c1*y+1)",
            )?];
            Ok(f.finish(
                Family::GeneralQuadratic,
                v,
                case,
                g,
                inv,
                None,
                img,
                VALIDITY,
            ))
        }
        CaseTag::TwoLinear { a1, a2 } if a2.is_zero() => {
            f.bind("a1", a1.clone());
            let g = f.in_y("4*a1*y^2/(y^2+1)^2")?;
            let inv = f.sqrt_expr(
                "sqrt(a1)*r1/(sqrt(-a1)*x)*(sqrt(-a1)-r2)",
                &[("r1", "x"), ("r2", "x-a1")],
            )?;
            let img = vec![
                f.image("x", "2*sqrt(a1)*y/(y^2+1)")?,
                f.image("x-a1", "sqrt(-a1)*(y^2-1)/(y^2+1)")?,
            ];
            Ok(f.finish(
                Family::GeneralTwoLinearZero,
                v,
                case,
                g,
                inv,
                None,
                img,
                VALIDITY,
            ))
        }
        CaseTag::TwoLinear { a1, a2 } => {
            f.bind("a1", a1.clone());
            f.bind("a2", a2.clone());
            let g = f.in_y("4*a1*a2*y*(y-a1)*(y-a2)/(y^2-a1*a2)^2")?;
            let inv = f.sqrt_expr(
                "(a1+sqrt(-a1)*r1)*(a2+sqrt(-a2)*r2)/x",
                &[("r1", "x-a1"), ("r2", "x-a2")],
            )?;
            let img = vec![
                f.image("x-a1", "sqrt(-a1)*(y^2-2*a2*y+a1*a2)/(y^2-a1*a2)")?,
                f.image("x-a2", "sqrt(-a2)*(y^2-2*a1*y+a1*a2)/(y^2-a1*a2)")?,
            ];
            Ok(f.finish(
                Family::GeneralTwoLinear,
                v,
                case,
                g,
                inv,
                None,
                img,
                VALIDITY,
            ))
        }
        CaseTag::ThreeQuadratic { a1, a2, a3 } if a3.is_zero() => {
            f.bind("a1", a1.clone());
            f.bind("a2", a2.clone());
            let g = f.in_y("4*a1*a2*y^2/((a1-a2)^2*y^4+2*(a1+a2)*y^2+1)")?;
            let inv = f.sqrt_expr(
                "sqrt(a1*a2)/((a1-a2)*x)*(r1/sqrt(-a1)-r2/sqrt(-a2))",
                &[("r1", "x*(x-a1)"), ("r2", "x*(x-a2)")],
            )?;
            let den = "((a1-a2)^2*y^4+2*(a1+a2)*y^2+1)";
            let img = vec![
                f.image(
                    "x*(x-a1)",
                    &format!("2*a1*sqrt(-a2)*y*((a1-a2)*y^2+1)/{den}"),
                )?,
                f.image(
                    "x*(x-a2)",
                    &format!("2*a2*sqrt(-a1)*y*((a2-a1)*y^2+1)/{den}"),
                )?,
            ];
            Ok(f.finish(
                Family::GeneralThreeZero,
                v,
                case,
                g,
                inv,
                None,
                img,
                VALIDITY,
            ))
        }
        CaseTag::ThreeQuadratic { a1, a2, a3 } => {
            f.bind("a1", a1.clone());
            f.bind("a2", a2.clone());
            f.bind("a3", a3.clone());
            f.derive("s1", "a1+a2+a3")?;
            f.derive("s2", "a1*a2+a1*a3+a2*a3")?;
            f.derive("s3", "a1*a2*a3")?;
            let g = f.in_y(
                "-4*a1*a2*a3*y*(y-a1)*(y-a2)*(y-a3)/((s1^2-4*s2)*y^4+8*s3*y^3-2*s1*s3*y^2+s3^2)",
            )?;
            let inv = f.sqrt_expr(
                "s3/((s1^2-4*s2)*x+4*s3)*(s1-2*x-(s1-2*a3)/sqrt(a1*a2)*r1-(s1-2*a2)/sqrt(a1*a3)*r2\
                 +a1*(s1-2*a1)/(sqrt(a1*a2)*sqrt(a1*a3)*(x-a1))*r1*r2)",
                &[("r1", "(x-a1)*(x-a2)"), ("r2", "(x-a1)*(x-a3)")],
            )?;
            Ok(f.finish(
                Family::GeneralThree,
                v,
                case,
                g,
                inv,
                None,
                Vec::new(),
                VALIDITY,
            ))
        }
        CaseTag::Empty => Err(Error::Usage(
            "all radicands are squares; no transformation is needed".into(),
        )),
        CaseTag::NoTransformation { witness, .. } => Err(Error::Usage(format!(
            "no rationalizing transformation exists: {} is squarefree of degree {}",
            witness.display("x"),
            witness.degree()
        ))),
    }
}
