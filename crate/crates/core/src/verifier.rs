//! Independent certification of transformations.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::sturm::sturm_root_count;
use crate::algebra::{AlgebraicNumber, Polynomial, RationalFunction, RealAlgebraic};
use crate::catalog::Transformation;
use crate::radicands::RadicandSet;
use crate::sqrt_expr::SqrtExpression;

type C = AlgebraicNumber;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Clause {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Clause {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadicandEntry {
    pub radicand: String,
    pub pass: bool,
    /// `f(g(y)) = constant · root²` when `pass`.
    pub constant: Option<String>,
    pub root: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalizeReport {
    pub pass: bool,
    pub entries: Vec<RadicandEntry>,
}

/// `f(g) = c·h²` for a polynomial `f`, via the unreduced composition
/// `A / q^m` with `q = den(g)`.
pub(crate) fn square_after_compose(
    f: &Polynomial,
    g: &RationalFunction,
) -> Option<(C, RationalFunction)> {
    let m = f.degree();
    let (a, _) = RationalFunction::from_poly(f.clone()).compose_parts(g);
    if a.is_zero() {
        return None;
    }
    let q = g.den();
    let a = if m % 2 == 1 { a.mul(q) } else { a };
    let (c, h) = a.monic_sqrt()?;
    let root = RationalFunction::new(h, q.pow(m.div_ceil(2) as u32)).ok()?;
    Some((c, root))
}

/// Check that `f(g(y))` is a constant times a square for every reduced radicand.
pub fn verify_rationalizes(g: &RationalFunction, set: &RadicandSet) -> RationalizeReport {
    let entries: Vec<RadicandEntry> = set
        .reduced
        .iter()
        .map(|f| match square_after_compose(f, g) {
            Some((c, h)) => RadicandEntry {
                radicand: f.display("x"),
                pass: true,
                constant: Some(c.to_string()),
                root: Some(h.display("y")),
            },
            None => RadicandEntry {
                radicand: f.display("x"),
                pass: false,
                constant: None,
                root: None,
            },
        })
        .collect();
    RationalizeReport {
        pass: !g.is_constant() && entries.iter().all(|e| e.pass),
        entries,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InverseReport {
    pub pass: bool,
    /// `g(g⁻¹(x)) − x` as an unreduced quotient, or the structural failure.
    pub residual: String,
}

/// Reduce `g(g⁻¹(x)) − x` in the square-root algebra.
pub fn verify_inverse(g: &RationalFunction, inverse: &SqrtExpression) -> InverseReport {
    let (num, den) = inverse.substitute_cleared(g);
    if den.is_zero() {
        return InverseReport {
            pass: false,
            residual: "structural failure: denominator of g vanishes at the inverse".into(),
        };
    }
    let x = SqrtExpression::from_ratfun(inverse.symbols(), RationalFunction::x());
    let diff = num.sub(&x.mul(&den));
    if diff.is_zero() {
        return InverseReport {
            pass: true,
            residual: "0".into(),
        };
    }
    InverseReport {
        pass: false,
        residual: format!("({}) / ({})", diff.display("x"), den.display("x")),
    }
}

/// Check that every stored image squares to its radicand composed with `g`.
pub fn verify_images(t: &Transformation) -> Clause {
    for im in &t.images {
        let (a, b) = im.radicand.compose_parts(&t.g);
        let n = im.image.num();
        let d = im.image.den();
        let same = !b.is_zero() && n.mul(n).mul(&b) == a.mul(&d.mul(d));
        match same {
            true => {}
            false => {
                return Clause::new(
                    "images",
                    false,
                    format!(
                        "image of sqrt({}) does not square correctly",
                        im.radicand.display("x")
                    ),
                )
            }
        }
    }
    Clause::new(
        "images",
        true,
        format!("{} images square exactly", t.images.len()),
    )
}

/// Primary and alternate inverse agree in the square-root algebra.
pub fn verify_alternate(t: &Transformation) -> Clause {
    match &t.alternate_inverse {
        None => Clause::new("alternate inverse", true, "no alternate form"),
        Some(alt) => {
            let same = alt.sub(&t.inverse).is_zero();
            Clause::new(
                "alternate inverse",
                same,
                if same {
                    "equal to the primary inverse"
                } else {
                    "differs from the primary inverse"
                },
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BijectionCertificate {
    pub pass: bool,
    pub clauses: Vec<Clause>,
}

impl BijectionCertificate {
    pub fn failing(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.pass)
    }
}

fn real_poly(p: &Polynomial) -> bool {
    p.is_real()
}

/// Remove the factors `y` and `y − 1` while they divide `p`.
fn deflate_boundary(p: &Polynomial) -> Polynomial {
    let mut p = p.clone();
    for root in [C::zero(), C::one()] {
        let lin = Polynomial::linear_root(&root);
        while !p.is_zero() && p.eval(&root).is_zero() {
            p = p.exact_div(&lin).expect("root divides");
        }
    }
    p
}

/// Exact certificate that `g` maps `[0,1]` increasingly onto itself.
pub fn verify_unit_interval_bijection(g: &RationalFunction) -> BijectionCertificate {
    let mut clauses = Vec::new();
    let zero = RealAlgebraic::zero();
    let one = RealAlgebraic::one();
    let real = real_poly(g.num()) && real_poly(g.den());
    clauses.push(Clause::new("real coefficients", real, ""));
    if !real {
        return BijectionCertificate {
            pass: false,
            clauses,
        };
    }
    let den = g.den();
    let den_ok = !den.eval(&C::zero()).is_zero()
        && !den.eval(&C::one()).is_zero()
        && matches!(sturm_root_count(den, &zero, &one), Ok(0));
    clauses.push(Clause::new(
        "denominator root-free on [0,1]",
        den_ok,
        format!("den = {}", den.display("y")),
    ));
    if !den_ok {
        return BijectionCertificate {
            pass: false,
            clauses,
        };
    }
    let g0 = g.eval(&C::zero()).ok();
    clauses.push(Clause::new(
        "g(0) = 0",
        g0.as_ref().is_some_and(|v| v.is_zero()),
        g0.map(|v| v.to_string()).unwrap_or_default(),
    ));
    let g1 = g.eval(&C::one()).ok();
    clauses.push(Clause::new(
        "g(1) = 1",
        g1.as_ref().is_some_and(|v| v.is_one()),
        g1.map(|v| v.to_string()).unwrap_or_default(),
    ));
    let d = g.derivative();
    let p = deflate_boundary(d.num());
    let increasing = if p.is_zero() {
        false
    } else {
        let half = C::from(crate::algebra::rational::qf(1, 2));
        let positive_mid = d.eval(&half).is_ok_and(|v| v.real_sign() == Some(1));
        positive_mid && matches!(sturm_root_count(&p, &zero, &one), Ok(0))
    };
    clauses.push(Clause::new(
        "g strictly increasing on (0,1)",
        increasing,
        format!("numerator of g' without boundary roots: {}", p.display("y")),
    ));
    BijectionCertificate {
        pass: clauses.iter().all(|c| c.pass),
        clauses,
    }
}

/// Check `g⁻¹(g(y)) = y + O(y^order)` as a Puiseux series, trying both
/// branches of `x^(1/2)`.
pub fn verify_puiseux_branch(t: &Transformation, order: i64) -> Clause {
    let prec = 2 * order + 8;
    let mut last = String::from("expansion failed");
    for sign in [1, -1] {
        let s = match t.inverse.puiseux_at(&t.g, sign, prec) {
            Ok(s) => s,
            Err(e) => {
                last = e.to_string();
                continue;
            }
        };
        let e = s.ramification();
        if s.precision() < order * e {
            last = format!("precision {} below y^{order}", s.precision());
            continue;
        }
        let bad = (s.valuation().min(0)..order * e).find(|&k| {
            let want = if k == e { C::one() } else { C::zero() };
            s.coeff(k) != want
        });
        match bad {
            None => {
                return Clause::new(
                    "puiseux branch",
                    true,
                    format!("g^-1(g(y)) = y + O(y^{order}) with sqrt(x) branch {sign:+}"),
                )
            }
            Some(k) => last = format!("coefficient of y^({k}/{e}) is {}", s.coeff(k)),
        }
    }
    Clause::new("puiseux branch", false, last)
}

/// Largest `|g(g⁻¹(x)) − x|` over the sample points, with principal roots.
pub fn numeric_probe(t: &Transformation, xs: &[f64]) -> f64 {
    xs.iter()
        .map(|&x| {
            let xc = Complex64::new(x, 0.0);
            let y = t.eval_inverse(xc);
            (t.g.eval_complex(y) - xc).norm()
        })
        .fold(0.0, f64::max)
}

/// All checks applicable to a transformation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub pass: bool,
    pub rationalizes: RationalizeReport,
    pub inverse: InverseReport,
    pub clauses: Vec<Clause>,
    pub bijection: Option<BijectionCertificate>,
}

pub fn certify(t: &Transformation, set: &RadicandSet) -> Certificate {
    let rationalizes = verify_rationalizes(&t.g, set);
    let inverse = verify_inverse(&t.g, &t.inverse);
    let mut clauses = vec![verify_images(t), verify_alternate(t)];
    let bijection = if t.variant.is_unit_interval() {
        Some(verify_unit_interval_bijection(&t.g))
    } else {
        clauses.push(verify_puiseux_branch(t, 11));
        None
    };
    let pass = rationalizes.pass
        && inverse.pass
        && clauses.iter().all(|c| c.pass)
        && bijection.as_ref().is_none_or(|b| b.pass);
    Certificate {
        pass,
        rationalizes,
        inverse,
        clauses,
        bijection,
    }
}
