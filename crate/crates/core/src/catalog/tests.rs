use super::*;
use crate::parser::{parse_constant, parse_rational_function};
use crate::radicands::analyze;

fn rf(s: &str) -> RationalFunction {
    parse_rational_function(s).unwrap()
}

fn c(s: &str) -> C {
    parse_constant(s).unwrap()
}

fn case_of(radicands: &[&str]) -> RadicandCase {
    let fs: Vec<_> = radicands.iter().map(|s| rf(s)).collect();
    analyze(&fs).unwrap().1
}

#[test]
fn general_examples() {
    let t = general_transformation(&CaseTag::OneLinear { a: C::zero() }).unwrap();
    assert_eq!(t.g, rf("y^2"));
    assert_eq!(t.inverse.display("x"), "r1");
    let t = general_transformation(&CaseTag::OneLinear { a: C::from_int(2) }).unwrap();
    assert_eq!(t.g, rf("-8*y*(y+1)"));
    let t = general_transformation(&CaseTag::TwoLinear {
        a1: C::one(),
        a2: C::zero(),
    })
    .unwrap();
    assert_eq!(t.g, rf("4*y^2/(y^2+1)^2"));
    let t = general_transformation(&CaseTag::ThreeQuadratic {
        a1: C::from_int(-1),
        a2: C::one(),
        a3: C::zero(),
    })
    .unwrap();
    assert_eq!(t.g, rf("-4*y^2/(4*y^4+1)"));
    assert!(general_transformation(&CaseTag::Empty).is_err());
}

#[test]
fn paired_roots_real() {
    let case = case_of(&["x*(1+x)", "x*(1-x)"]);
    let t = unit_interval_transformation(&case, Variant::RealUnitInterval).unwrap();
    assert_eq!(t.g, rf("2*y^2/(y^4+1)"));
    let syms = [("u", "1+x"), ("v", "1-x"), ("w", "x")];
    let want = Formulas::new()
        .sqrt_expr("(u-v)/(sqrt(2)*w)", &syms)
        .unwrap();
    assert!(t.inverse.sub(&want).is_zero());
    let plus = t
        .images
        .iter()
        .find(|i| i.radicand == rf("x*(1+x)"))
        .unwrap();
    assert_eq!(plus.image, rf("y*(1+y^2)/(y^4+1)").scale(&c("sqrt(2)")));
    let minus = t
        .images
        .iter()
        .find(|i| i.radicand == rf("x*(1-x)"))
        .unwrap();
    assert_eq!(minus.image, rf("y*(1-y^2)/(y^4+1)").scale(&c("sqrt(2)")));
}

#[test]
fn unit_special_and_linear() {
    let case = case_of(&["x*(1-x)"]);
    let t = unit_interval_transformation(&case, Variant::RealUnitInterval).unwrap();
    assert_eq!(t.family, Family::RealQuadraticZeroUnit);
    assert_eq!(t.g, rf("y^2/(2*y^2-2*y+1)"));
    assert_eq!(t.removable_points(), vec![c("1/2")]);

    let case = case_of(&["x+1"]);
    let t = unit_interval_transformation(&case, Variant::RealUnitInterval).unwrap();
    assert_eq!(t.constants[0].1, c("sqrt(2)"));
    let want = rf("y*((3-2*y)*y)")
        .scale(&C::zero())
        .add(&rf("y^2").scale(&c("3-2*sqrt(2)")))
        .add(&rf("y").scale(&c("2*(sqrt(2)-1)")));
    assert_eq!(t.g, want);
    assert_eq!(t.g.eval(&C::one()).unwrap(), C::one());
}

#[test]
fn ineligible_variant_is_usage_error() {
    let case = case_of(&["x-1/2"]);
    match unit_interval_transformation(&case, Variant::RealUnitInterval) {
        Err(Error::Usage(m)) => assert!(m.contains("a = 1/2")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn moebius() {
    let case = case_of(&["x"]);
    let t = unit_interval_transformation(&case, Variant::RealUnitInterval).unwrap();
    let t2 = compose_moebius(&t, &C::from_int(2)).unwrap();
    assert_eq!(t2.g, rf("y^2/(2-y)^2"));
    assert_eq!(t2.degree(), 2);
    let back = compose_moebius(&t2, &c("1/2")).unwrap();
    assert_eq!(back.g, t.g);
    assert!(back.inverse.sub(&t.inverse).is_zero());
    assert!(back.lambda.is_none());
    let same = compose_moebius(&t, &C::one()).unwrap();
    assert_eq!(same.g, t.g);
    assert!(compose_moebius(&t, &C::from_int(-1)).is_err());
}

#[test]
fn complex_pair_constants() {
    let case = case_of(&["x^2+1"]);
    let t = unit_interval_transformation(&case, Variant::ComplexUnitInterval).unwrap();
    assert_eq!(t.family, Family::ComplexTwoLinear);
    // alpha = (1 + sqrt(1 - 1/i)) (1 + sqrt(1 + 1/i)) with principal roots
    let i = C::i();
    let b1 = (&C::one() - &i.checked_inv().unwrap()).sqrt();
    let b2 = (&C::one() - &i.conj().checked_inv().unwrap()).sqrt();
    let alpha = &(&C::one() + &b1) * &(&C::one() + &b2);
    assert_eq!(t.constants[0].1, alpha);
}
