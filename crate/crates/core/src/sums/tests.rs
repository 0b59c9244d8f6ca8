use super::*;
use crate::integrals::DEFAULT_TOLERANCE;
use crate::parser::{parse_constant, parse_sum};

fn series_check(src: &str, x: f64, tol: f64) {
    let s = parse_sum(src).unwrap();
    let gf = to_generating_function(&s).unwrap_or_else(|e| panic!("{src}: {e}"));
    let want = s.eval_series(x, 200);
    let got = gf.eval(Complex64::new(x, 0.0), DEFAULT_TOLERANCE).unwrap();
    assert!(
        (want - got).norm() < tol,
        "{src} at {x}: {want} vs {got} ({gf})"
    );
}

#[test]
fn central_binomial() {
    let s = parse_sum("sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))").unwrap();
    let gf = to_generating_function(&s).unwrap();
    assert_eq!(gf.to_string(), "H[0,{0,4},{0,4}] + H[{0,4},4,{0,4}]");
    let w = gf.words().unwrap();
    assert_eq!(w.len(), 2);
    assert!(w.terms().iter().all(|(c, _)| c.is_one()));
    let want = s.eval_series(0.2, 200);
    let got = gf
        .eval(Complex64::new(0.2, 0.0), DEFAULT_TOLERANCE)
        .unwrap();
    assert!((want - got).norm() < 1e-6, "{want} {got}");
}

#[test]
fn central_binomial_steps() {
    let s = parse_sum("sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))").unwrap();
    let node = Node::from_sum(&s);
    let step = apply_rule(Rule::HarmonicDivide, &node).unwrap();
    assert_eq!(
        step.to_string(),
        "int_0^x (1/x)*[sum(x^n * inv(n*binom(2n,n)) * S(inv(i)))] dx"
    );
    for r in [
        Rule::CentralBinomial,
        Rule::InverseBinomialShifted,
        Rule::InverseBinomial,
        Rule::InverseBinomialOdd,
    ] {
        assert!(apply_rule(r, &node).is_none(), "{r:?}");
    }
    let GfExpr::Integral { body, .. } = step else {
        panic!()
    };
    let GfExpr::Node(inner) = *body else { panic!() };
    let step = apply_rule(Rule::InverseBinomial, &inner).unwrap();
    assert_eq!(
        step.to_string(),
        "sum(x^n * inv(n^2*binom(2n,n))) + sqrt(x)/sqrt(4-x)*[int_0^x (1/(sqrt(x)*sqrt(4-x)))*[sum(x^n * inv(n*binom(2n,n)))] dx]"
    );
    let delta = parse_sum("sum(x^n * inv(n*binom(2n,n)))").unwrap();
    let gf = to_generating_function(&delta).unwrap();
    assert_eq!(gf.to_string(), "sqrt(x)/sqrt(4-x)*H[{0,4}]");
}

#[test]
fn rule_patterns() {
    let node = |src: &str| Node::from_sum(&parse_sum(src).unwrap());
    assert!(apply_rule(
        Rule::CentralBinomial,
        &node("sum(x^n * binom(2n,n) * S(inv(i)))")
    )
    .is_some());
    assert!(apply_rule(
        Rule::CentralBinomial,
        &node("sum(x^n * n*binom(2n,n) * S(inv(i)))")
    )
    .is_none());
    assert!(apply_rule(
        Rule::InverseBinomialShifted,
        &node("sum(x^n * inv(n*binom(2n,n)) * S(inv(i)))")
    )
    .is_none());
    assert!(apply_rule(
        Rule::InverseBinomialShifted,
        &node("sum(x^n * inv(n*binom(2n,n)) * S(delta(1,i)))")
    )
    .is_some());
    assert!(apply_rule(
        Rule::InverseBinomialOdd,
        &node("sum(x^n * inv((2n+1)*binom(2n,n)) * S(inv(i)))")
    )
    .is_some());
    assert!(apply_rule(Rule::HarmonicDivide, &node("sum(x^n * binom(2n,n))")).is_none());
}

#[test]
fn rule_identities_by_series() {
    series_check("sum(x^n * inv(n))", 0.5, 1e-6);
    series_check("sum(x^n * inv(n^2))", 0.5, 1e-6);
    series_check("sum(x^n * (-1)^n * inv(n))", 0.5, 1e-6);
    series_check("sum(x^n * inv(n*binom(2n,n)))", 0.2, 1e-6);
    series_check("sum(x^n * inv(n^2*binom(2n,n)))", 0.2, 1e-6);
    series_check("sum(x^n * inv(n*binom(2n,n)) * S(inv(i)))", 0.2, 1e-6);
    series_check("sum(x^n * inv(n*binom(2n,n)) * S(inv(i^2)))", 0.2, 1e-6);
    series_check("sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))", 0.2, 1e-6);
    series_check(
        "sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i) * S(inv(j))))",
        0.2,
        1e-6,
    );
}

#[test]
fn geometric_and_delta() {
    let s = parse_sum("sum(x^n * delta(1,n))").unwrap();
    assert_eq!(to_generating_function(&s).unwrap().to_string(), "x");
    let s = parse_sum("sum(x^n * inv(n))").unwrap();
    let gf = to_generating_function(&s).unwrap();
    assert_eq!(gf.to_string(), "H[1]");
    let v = gf
        .eval(Complex64::new(0.5, 0.0), DEFAULT_TOLERANCE)
        .unwrap();
    assert!((v.re + (0.5f64).ln()).abs() < 1e-12);
}

#[test]
fn unsupported_patterns() {
    let s = parse_sum("sum(x^n * binom(2n,n)^2)").unwrap();
    let err = to_generating_function(&s).unwrap_err();
    assert!(
        matches!(err, crate::error::Error::Unsupported(ref m) if m.contains("binom(2n,n)^2")),
        "{err}"
    );
    let s = parse_sum("sum(x^n * inv(n) * S(inv(i)))").unwrap();
    let err = to_generating_function(&s).unwrap_err();
    assert!(
        matches!(err, crate::error::Error::Unsupported(ref m) if m.contains("sum(x^n * S(inv(i)))")),
        "{err}"
    );
}

#[test]
fn confluence() {
    for src in [
        "sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))",
        "sum(x^n * inv(n*binom(2n,n)) * S(inv(i)))",
        "sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i) * S(inv(j))))",
    ] {
        let s = parse_sum(src).unwrap();
        let all = all_rewrites(&s).unwrap();
        let first = to_generating_function(&s).unwrap().sorted();
        for r in &all {
            assert_eq!(r.sorted(), first, "{src}");
        }
    }
}

#[test]
fn round_trip() {
    for src in [
        "sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))",
        "sum(x^n)",
        "sum(x^n * delta(1,n))",
        "sum(x^n * 2^n * n * binom(2n,n) * S(inv((2i+1)) * S(j^2)))",
        "sum(x^n * (-1/2)^n * inv(n*binom(2n,n)^2))",
        "sum(x^n * S(1))",
    ] {
        let s = parse_sum(src).unwrap();
        assert_eq!(s.to_string(), src);
    }
    let s = parse_sum("sum(x^n * 1/n * S(1/i))").unwrap();
    assert_eq!(s.to_string(), "sum(x^n * inv(n) * S(inv(i)))");
}

#[test]
fn mellin_rule() {
    let phi = MellinIntegrand::tag("phi");
    let r = mellin_sum_rule(&C::from_int(-1), &phi).unwrap();
    assert_eq!(
        r.to_string(),
        "(-1)^n*M[(x/(x + 1))*phi(x)](n) + (-1)*M[(x/(x + 1))*phi(x)](0)"
    );
    assert!(!r.needs_regularization);
    assert!(r.has_valid_shape());
    let r = mellin_sum_rule(&C::one(), &phi).unwrap();
    assert!(r.needs_regularization);
    assert_eq!(
        r.terms[0].integrand.multipliers[0].display("x"),
        "x/(x - 1)"
    );
    assert!(matches!(
        mellin_sum_rule(&C::zero(), &phi),
        Err(crate::error::Error::Domain(_))
    ));
    let c = parse_constant("2").unwrap();
    let once = mellin_sum_rule(&c, &phi).unwrap();
    let twice = mellin_sum_rule(&c, &once.terms[0].integrand).unwrap();
    let k = twice.terms[0].integrand.multipliers.clone();
    assert_eq!(k.len(), 2);
    assert_eq!(k[0], k[1]);
    assert_eq!(k[0].display("x"), "x/(x - 1/2)");
}
