#![allow(dead_code)]

use radix::algebra::{AlgebraicNumber, RationalFunction};
use radix::catalog::{self, Family, Transformation, Variant};
use radix::parser::{parse_constant, parse_rational_function_with, Env};
use radix::radicands::{analyze, CaseTag, RadicandSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type C = AlgebraicNumber;

pub const GENERAL: [Family; 8] = [
    Family::GeneralSquare,
    Family::GeneralLinear,
    Family::GeneralQuadraticZero,
    Family::GeneralQuadratic,
    Family::GeneralTwoLinearZero,
    Family::GeneralTwoLinear,
    Family::GeneralThreeZero,
    Family::GeneralThree,
];

pub const REAL: [Family; 9] = [
    Family::RealSquare,
    Family::RealLinear,
    Family::RealQuadraticZero,
    Family::RealQuadraticZeroUnit,
    Family::RealQuadratic,
    Family::RealTwoLinearZero,
    Family::RealTwoLinear,
    Family::RealThreeZero,
    Family::RealThree,
];

pub const COMPLEX: [Family; 3] = [
    Family::ComplexTwoLinear,
    Family::ComplexThreeZero,
    Family::ComplexThree,
];

pub fn c(s: &str) -> C {
    parse_constant(s).unwrap()
}

fn rational(rng: &mut ChaCha8Rng) -> C {
    let p: i64 = rng.gen_range(-9..=9);
    let q: i64 = rng.gen_range(1..=4);
    c(&format!("{p}/{q}"))
}

fn nonzero(rng: &mut ChaCha8Rng) -> C {
    loop {
        let v = rational(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A nonzero constant, occasionally non-real.
fn general_constant(rng: &mut ChaCha8Rng) -> C {
    let re = rational(rng);
    if rng.gen_bool(0.25) {
        &re + &(&nonzero(rng) * &C::i())
    } else if re.is_zero() {
        C::one()
    } else {
        re
    }
}

fn distinct(rng: &mut ChaCha8Rng, n: usize, draw: fn(&mut ChaCha8Rng) -> C) -> Vec<C> {
    let mut out: Vec<C> = Vec::new();
    while out.len() < n {
        let v = draw(rng);
        if !v.is_zero() && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// `a < 0` or `a >= 1`.
fn admissible_real(rng: &mut ChaCha8Rng) -> C {
    let q: i64 = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        let p: i64 = rng.gen_range(1..=12);
        c(&format!("-{p}/{q}"))
    } else {
        let p: i64 = rng.gen_range(q..=4 * q);
        c(&format!("{p}/{q}"))
    }
}

fn complex_root(rng: &mut ChaCha8Rng) -> C {
    &rational(rng) + &(&nonzero(rng) * &C::i())
}

fn radicands(srcs: &[&str], bind: &[(&str, &C)]) -> Vec<RationalFunction> {
    srcs.iter()
        .map(|s| {
            let mut env = Env::new().with_var("x");
            for (n, v) in bind {
                env = env.bind(n, (*v).clone());
            }
            parse_rational_function_with(s, &mut env).unwrap()
        })
        .collect()
}

/// One random instance of a family: the radicand set and its transformation.
pub fn draw(family: Family, rng: &mut ChaCha8Rng) -> (RadicandSet, Transformation) {
    use Family::*;
    let general = |tag: CaseTag, srcs: Vec<RationalFunction>| {
        let (set, _) = analyze(&srcs).unwrap();
        let t = catalog::general_transformation(&tag).unwrap();
        (set, t)
    };
    let unit = |srcs: Vec<RationalFunction>, variant: Variant, lambda: Option<C>| {
        let (set, case) = analyze(&srcs).unwrap();
        let mut t = catalog::unit_interval_transformation(&case, variant)
            .unwrap_or_else(|e| panic!("{family:?}: {e}"));
        if let Some(l) = lambda {
            t = catalog::compose_moebius(&t, &l).unwrap();
        }
        assert_eq!(t.family, family, "dispatch for {:?}", case.tag);
        (set, t)
    };
    let lambda = |rng: &mut ChaCha8Rng| {
        let p: i64 = rng.gen_range(1..=9);
        let q: i64 = rng.gen_range(1..=9);
        c(&format!("{p}/{q}"))
    };
    match family {
        GeneralSquare => general(CaseTag::OneLinear { a: C::zero() }, radicands(&["x"], &[])),
        GeneralLinear => {
            let a = general_constant(rng);
            general(
                CaseTag::OneLinear { a: a.clone() },
                radicands(&["x-a"], &[("a", &a)]),
            )
        }
        GeneralQuadraticZero => {
            let c1 = general_constant(rng);
            general(
                CaseTag::OneQuadratic {
                    c0: C::zero(),
                    c1: c1.clone(),
                },
                radicands(&["x^2+c1*x"], &[("c1", &c1)]),
            )
        }
        GeneralQuadratic => loop {
            let c0 = general_constant(rng);
            let c1 = rational(rng);
            if &c1 * &c1 == &C::from_int(4) * &c0 {
                continue;
            }
            break general(
                CaseTag::OneQuadratic {
                    c0: c0.clone(),
                    c1: c1.clone(),
                },
                radicands(&["x^2+c1*x+c0"], &[("c0", &c0), ("c1", &c1)]),
            );
        },
        GeneralTwoLinearZero => {
            let a1 = general_constant(rng);
            general(
                CaseTag::TwoLinear {
                    a1: a1.clone(),
                    a2: C::zero(),
                },
                radicands(&["x", "x-a1"], &[("a1", &a1)]),
            )
        }
        GeneralTwoLinear => {
            let a = distinct(rng, 2, general_constant);
            general(
                CaseTag::TwoLinear {
                    a1: a[0].clone(),
                    a2: a[1].clone(),
                },
                radicands(&["x-a1", "x-a2"], &[("a1", &a[0]), ("a2", &a[1])]),
            )
        }
        GeneralThreeZero => {
            let a = distinct(rng, 2, general_constant);
            general(
                CaseTag::ThreeQuadratic {
                    a1: a[0].clone(),
                    a2: a[1].clone(),
                    a3: C::zero(),
                },
                radicands(&["x*(x-a1)", "x*(x-a2)"], &[("a1", &a[0]), ("a2", &a[1])]),
            )
        }
        GeneralThree => {
            let a = distinct(rng, 3, general_constant);
            general(
                CaseTag::ThreeQuadratic {
                    a1: a[0].clone(),
                    a2: a[1].clone(),
                    a3: a[2].clone(),
                },
                radicands(
                    &["(x-a1)*(x-a2)", "(x-a1)*(x-a3)"],
                    &[("a1", &a[0]), ("a2", &a[1]), ("a3", &a[2])],
                ),
            )
        }
        RealSquare => unit(
            radicands(&["x"], &[]),
            Variant::RealUnitInterval,
            Some(lambda(rng)),
        ),
        RealLinear => {
            let a = admissible_real(rng);
            unit(
                radicands(&["x-a"], &[("a", &a)]),
                Variant::RealUnitInterval,
                None,
            )
        }
        RealQuadraticZero => {
            let a = loop {
                let a = admissible_real(rng);
                if !a.is_one() {
                    break a;
                }
            };
            unit(
                radicands(&["x*(x-a)"], &[("a", &a)]),
                Variant::RealUnitInterval,
                None,
            )
        }
        RealQuadraticZeroUnit => unit(
            radicands(&["x*(1-x)"], &[]),
            Variant::RealUnitInterval,
            Some(lambda(rng)),
        ),
        RealQuadratic => loop {
            let c0 = nonzero(rng);
            let c1 = rational(rng);
            let srcs = radicands(&["x^2+c1*x+c0"], &[("c0", &c0), ("c1", &c1)]);
            let (_, case) = analyze(&srcs).unwrap();
            if !matches!(case.tag, CaseTag::OneQuadratic { .. }) || !case.real.eligible {
                continue;
            }
            break unit(srcs, Variant::RealUnitInterval, None);
        },
        RealTwoLinearZero => {
            let a = admissible_real(rng);
            unit(
                radicands(&["x", "x-a"], &[("a", &a)]),
                Variant::RealUnitInterval,
                None,
            )
        }
        RealTwoLinear => {
            let a = distinct(rng, 2, admissible_real);
            unit(
                radicands(&["x-a1", "x-a2"], &[("a1", &a[0]), ("a2", &a[1])]),
                Variant::RealUnitInterval,
                None,
            )
        }
        RealThreeZero => {
            let a = distinct(rng, 2, admissible_real);
            unit(
                radicands(&["x*(x-a1)", "x*(x-a2)"], &[("a1", &a[0]), ("a2", &a[1])]),
                Variant::RealUnitInterval,
                None,
            )
        }
        RealThree => {
            let a = distinct(rng, 3, admissible_real);
            unit(
                radicands(
                    &["(x-a1)*(x-a2)", "(x-a1)*(x-a3)"],
                    &[("a1", &a[0]), ("a2", &a[1]), ("a3", &a[2])],
                ),
                Variant::RealUnitInterval,
                None,
            )
        }
        ComplexTwoLinear => {
            let a = complex_root(rng);
            unit(
                radicands(&["x-a"], &[("a", &a)]),
                Variant::ComplexUnitInterval,
                None,
            )
        }
        ComplexThreeZero => {
            let a = complex_root(rng);
            unit(
                radicands(&["x*(x-a)"], &[("a", &a)]),
                Variant::ComplexUnitInterval,
                None,
            )
        }
        ComplexThree => {
            let a1 = admissible_real(rng);
            let a2 = complex_root(rng);
            unit(
                radicands(&["(x-a1)*(x-a2)"], &[("a1", &a1), ("a2", &a2)]),
                Variant::ComplexUnitInterval,
                None,
            )
        }
    }
}

pub const OBSTRUCTION_ROOTS: [i64; 6] = [-2, -1, 0, 1, 2, 3];

/// `∏ (x − r)^e` over the roots in `OBSTRUCTION_ROOTS`.
pub fn root_product(exponents: &[u32]) -> RationalFunction {
    let mut p = radix::algebra::Polynomial::one();
    for (r, e) in OBSTRUCTION_ROOTS.iter().zip(exponents) {
        p = p.mul(&radix::algebra::Polynomial::linear_root(&C::from_int(*r)).pow(*e));
    }
    RationalFunction::from_poly(p)
}

/// Expected case name from the F₂-span of the odd-multiplicity masks,
/// computed by enumerating every combination.
pub fn brute_force_case(masks: &[u32]) -> &'static str {
    let n = masks.len();
    let mut span = Vec::new();
    for combo in 0u32..(1 << n) {
        let v = (0..n)
            .filter(|k| combo >> k & 1 == 1)
            .fold(0u32, |acc, k| acc ^ masks[k]);
        span.push(v);
    }
    if span.iter().any(|v| v.count_ones() >= 3) {
        return "NoTransformation";
    }
    let support = span.iter().fold(0u32, |acc, v| acc | v).count_ones();
    let mut distinct: Vec<u32> = span.into_iter().filter(|v| *v != 0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    match (support, distinct.len()) {
        (0, _) => "Empty",
        (1, _) => "OneLinear",
        (2, 1) => "OneQuadratic",
        (2, _) => "TwoLinear",
        _ => "ThreeQuadratic",
    }
}

/// Radicand sets of one or two products of distinct roots, plus triples
/// of products of at most two roots.
pub fn obstruction_corpus() -> Vec<Vec<u32>> {
    let subsets: Vec<u32> = (1u32..64).collect();
    let mut out: Vec<Vec<u32>> = subsets.iter().map(|s| vec![*s]).collect();
    for (i, a) in subsets.iter().enumerate() {
        for b in &subsets[i + 1..] {
            out.push(vec![*a, *b]);
        }
    }
    let small: Vec<u32> = subsets
        .iter()
        .copied()
        .filter(|s| s.count_ones() <= 2)
        .collect();
    for i in 0..small.len() {
        for j in i + 1..small.len() {
            for k in j + 1..small.len() {
                out.push(vec![small[i], small[j], small[k]]);
            }
        }
    }
    out
}

pub fn mask_radicand(mask: u32) -> RationalFunction {
    let e: Vec<u32> = (0..OBSTRUCTION_ROOTS.len())
        .map(|k| mask >> k & 1)
        .collect();
    root_product(&e)
}

/// Classify every corpus entry; returns the disagreements with the oracle.
pub fn obstruction_disagreements() -> Vec<String> {
    let mut bad = Vec::new();
    for masks in obstruction_corpus() {
        let fs: Vec<RationalFunction> = masks.iter().map(|m| mask_radicand(*m)).collect();
        let expected = brute_force_case(&masks);
        match analyze(&fs) {
            Ok((set, case)) => {
                if case.tag.name() != expected {
                    bad.push(format!("{masks:?}: {} vs {expected}", case.tag.name()));
                } else if let CaseTag::NoTransformation { witness, subset } = &case.tag {
                    if !witness_is_sound(&set, witness, subset) {
                        bad.push(format!("{masks:?}: unsound witness {witness}"));
                    }
                }
            }
            Err(e) => bad.push(format!("{masks:?}: {e}")),
        }
    }
    bad
}

/// Squarefree of degree ≥ 3 and a product of reduced radicands times a square.
pub fn witness_is_sound(
    set: &RadicandSet,
    witness: &radix::algebra::Polynomial,
    subset: &[usize],
) -> bool {
    if !witness.is_squarefree() || witness.degree() < 3 {
        return false;
    }
    let prod = subset
        .iter()
        .fold(radix::algebra::Polynomial::one(), |acc, &k| {
            acc.mul(&set.reduced[k])
        });
    RationalFunction::new(witness.clone(), prod)
        .ok()
        .and_then(|q| q.is_square())
        .is_some()
}

/// Flip the sign of the lowest nonzero coefficient in the first radicand
/// under a square root.
fn flip_symbol_sign(
    inverse: &radix::sqrt_expr::SqrtExpression,
) -> radix::sqrt_expr::SqrtExpression {
    use radix::algebra::Polynomial;
    use radix::sqrt_expr::SqrtExpression;
    let mut symbols = inverse.symbols().to_vec();
    let first = &symbols[0];
    let mut coeffs = first.num().coeffs().to_vec();
    let k = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("non-zero radicand");
    coeffs[k] = -coeffs[k].clone();
    symbols[0] = RationalFunction::new(Polynomial::new(coeffs), first.den().clone()).unwrap();
    let mut out = SqrtExpression::zero(&symbols);
    for (mask, coef) in inverse.terms() {
        out = out.add(&term_expr(&SqrtExpression::zero(&symbols), mask, coef));
    }
    out
}

fn term_expr(
    inverse: &radix::sqrt_expr::SqrtExpression,
    mask: u32,
    coef: &RationalFunction,
) -> radix::sqrt_expr::SqrtExpression {
    use radix::sqrt_expr::SqrtExpression;
    let symbols = inverse.symbols();
    let mut e = SqrtExpression::from_ratfun(symbols, coef.clone());
    for k in 0..symbols.len() {
        if mask >> k & 1 == 1 {
            e = e.mul(&SqrtExpression::symbol(symbols, k));
        }
    }
    e
}

/// Six corruptions of a transformation: coefficient bump, sign flip and
/// dropped factor, each applied to `g` and to the inverse.
pub fn mutants(t: &Transformation) -> Vec<(&'static str, Transformation)> {
    use radix::algebra::Polynomial;
    let mut out = Vec::new();
    let with_g = |g: RationalFunction| {
        let mut m = t.clone();
        m.g = g;
        m
    };
    let with_inverse = |inv: radix::sqrt_expr::SqrtExpression| {
        let mut m = t.clone();
        m.inverse = inv;
        m.alternate_inverse = None;
        m
    };

    let num = t.g.num();
    let mut bumped = num.coeffs().to_vec();
    let top = bumped.len() - 1;
    bumped[top] = &bumped[top] + &C::one();
    out.push((
        "coefficient bump in g",
        with_g(RationalFunction::new(Polynomial::new(bumped), t.g.den().clone()).unwrap()),
    ));
    out.push(("sign flip in g", with_g(t.g.neg())));
    let y = Polynomial::x();
    let dropped = if y.divides(num) {
        RationalFunction::new(num.exact_div(&y).unwrap(), t.g.den().clone()).unwrap()
    } else {
        RationalFunction::new(num.clone(), t.g.den().exact_div(&y).unwrap()).unwrap()
    };
    out.push(("dropped factor in g", with_g(dropped)));

    let (mask, coef) = t
        .inverse
        .terms()
        .max_by_key(|(m, _)| m.count_ones())
        .map(|(m, c)| (m, c.clone()))
        .expect("non-zero inverse");
    let old = term_expr(&t.inverse, mask, &coef);
    let bumped = term_expr(&t.inverse, mask, &coef.add(&RationalFunction::one()));
    out.push((
        "coefficient bump in the inverse",
        with_inverse(t.inverse.sub(&old).add(&bumped)),
    ));
    out.push((
        "sign flip in the inverse",
        with_inverse(flip_symbol_sign(&t.inverse)),
    ));
    let lower = mask & (mask - 1);
    let dropped = term_expr(&t.inverse, lower, &coef);
    out.push((
        "dropped factor in the inverse",
        with_inverse(t.inverse.sub(&old).add(&dropped)),
    ));
    out
}

/// Families used for the seeded mutants.
pub const MUTANT_FAMILIES: [Family; 5] = [
    Family::GeneralLinear,
    Family::GeneralThreeZero,
    Family::RealTwoLinear,
    Family::RealThreeZero,
    Family::ComplexTwoLinear,
];

/// Expected degree of `g`: two for a single root or quadratic, four
/// otherwise. Complex variants rationalize the conjugate closure.
pub fn minimal_degree(set: &RadicandSet, t: &Transformation) -> usize {
    let tag = if t.variant == Variant::ComplexUnitInterval {
        let mut closure = set.originals.clone();
        closure.extend(set.originals.iter().map(|f| f.conj()));
        analyze(&closure).unwrap().1.tag
    } else {
        t.case.clone()
    };
    match tag {
        CaseTag::OneLinear { .. } | CaseTag::OneQuadratic { .. } => 2,
        _ => 4,
    }
}
