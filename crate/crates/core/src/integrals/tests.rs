use super::*;
use crate::catalog::{unit_interval_transformation, Variant};
use crate::parser::{parse_constant, parse_rational_function};
use crate::radicands::analyze;

fn rf(s: &str) -> RationalFunction {
    parse_rational_function(s).unwrap()
}

fn c(s: &str) -> C {
    parse_constant(s).unwrap()
}

fn ci(n: i64) -> C {
    C::from_int(n)
}

fn word(letters: Vec<Letter>) -> IntegralWord {
    IntegralWord::new(letters, Base::Zero)
}

fn paired_roots_word() -> IntegralWord {
    IntegralWord::new(
        vec![
            Letter::rat(ci(0)),
            Letter::sqrt_set(vec![ci(0), ci(-1)]).unwrap(),
            Letter::sqrt_set(vec![ci(0), ci(-1)]).unwrap(),
            Letter::sqrt_set(vec![ci(0), ci(1)]).unwrap(),
        ],
        Base::One,
    )
}

fn paired_roots_transformation() -> crate::catalog::Transformation {
    let fs = [rf("x*(1+x)"), rf("x*(1-x)")];
    let case = analyze(&fs).unwrap().1;
    unit_interval_transformation(&case, Variant::RealUnitInterval).unwrap()
}

#[test]
fn sign_constants() {
    assert_eq!(sign_constant(&ci(0), Base::Zero), 1);
    assert_eq!(sign_constant(&ci(4), Base::Zero), -1);
    assert_eq!(sign_constant(&ci(-1), Base::Zero), 1);
    assert_eq!(sign_constant(&ci(1), Base::One), -1);
    assert_eq!(sign_constant(&ci(0), Base::One), 1);
    assert_eq!(sign_constant(&ci(2), Base::One), -1);
    assert_eq!(sign_constant(&C::i(), Base::Zero), -1);
}

#[test]
fn letter_constraints() {
    assert!(Letter::sqrt_set(vec![ci(0)]).is_err());
    assert!(Letter::sqrt_set(vec![ci(0), ci(0)]).is_err());
    assert!(Letter::rat_times_sqrt(ci(1), vec![ci(1), ci(2)]).is_err());
    assert!(Letter::power_times_sqrt(vec![ci(0), ci(1)], 1).is_err());
    assert!(Letter::power_times_sqrt(vec![ci(0), ci(1), ci(2)], 1).is_ok());
    assert!(Letter::power_times_sqrt(vec![ci(0), ci(1), ci(2)], 2).is_err());
    assert_eq!(
        Letter::sqrt_set(vec![ci(4), ci(0)]).unwrap(),
        Letter::SqrtSet(vec![ci(0), ci(4)])
    );
}

#[test]
fn shuffle_small_cases() {
    let (a, b, cc) = (Letter::rat(ci(1)), Letter::rat(ci(2)), Letter::rat(ci(3)));
    let s = shuffle(&word(vec![a.clone()]), &word(vec![b.clone()])).unwrap();
    let want = WordCombination::from_word(word(vec![a.clone(), b.clone()])).add(
        &WordCombination::from_word(word(vec![b.clone(), a.clone()])),
    );
    assert_eq!(s.sorted(), want.sorted());

    let s = shuffle(&word(vec![a.clone()]), &word(vec![b.clone(), cc.clone()])).unwrap();
    assert_eq!(s.len(), 3);
    for w in [
        vec![a.clone(), b.clone(), cc.clone()],
        vec![b.clone(), a.clone(), cc.clone()],
        vec![b.clone(), cc.clone(), a.clone()],
    ] {
        assert!(s.terms().iter().any(|(k, v)| v.letters == w && k.is_one()));
    }

    let s = shuffle(
        &word(vec![a.clone(), b.clone()]),
        &word(vec![cc.clone(), Letter::rat(ci(4))]),
    )
    .unwrap();
    assert_eq!(s.len(), 6);
    assert_eq!(shuffle_term_count(&s), ci(6));
}

#[test]
fn shuffle_multiplicities_and_prefactors() {
    let a = Letter::rat(ci(1));
    let u = word(vec![a.clone()]).with_prefactor(ci(2));
    let v = word(vec![a.clone()]).with_prefactor(ci(3));
    let s = shuffle(&u, &v).unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!(s.terms()[0].0, ci(12));
    assert!(shuffle(
        &word(vec![a.clone()]),
        &IntegralWord::new(vec![a], Base::One)
    )
    .is_err());
}

#[test]
fn empty_word_is_one() {
    let e = word(vec![]);
    assert!((eval_word(&e, 0.3, DEFAULT_TOLERANCE).unwrap() - 1.0).abs() < 1e-15);
    let u = word(vec![Letter::rat(ci(-1))]);
    let s = shuffle(&e, &u).unwrap();
    assert_eq!(s, WordCombination::from_word(u));
}

#[test]
fn single_logarithm() {
    let w = word(vec![Letter::rat(ci(-1))]);
    let v = eval_word(&w, 0.5, DEFAULT_TOLERANCE).unwrap();
    assert!((v - 1.5f64.ln()).abs() < 1e-12, "{v}");
}

#[test]
fn arccos_letter() {
    let w = word(vec![Letter::sqrt_set(vec![ci(0), ci(4)]).unwrap()]);
    let v = eval_word(&w, 1.0, DEFAULT_TOLERANCE).unwrap();
    assert!((v - std::f64::consts::FRAC_PI_3).abs() < 1e-10, "{v}");
    for k in 1..10 {
        let x = k as f64 / 10.0;
        let v = eval_word(&w, x, DEFAULT_TOLERANCE).unwrap();
        assert!((v - (1.0 - x / 2.0).acos()).abs() < 1e-10, "{x}: {v}");
    }
}

#[test]
fn divergent_words_are_rejected() {
    let w = word(vec![Letter::rat(ci(0))]);
    assert!(matches!(
        eval_word(&w, 0.5, DEFAULT_TOLERANCE),
        Err(Error::Divergence(_))
    ));
    let w = IntegralWord::new(vec![Letter::rat(ci(1))], Base::One);
    assert!(matches!(
        eval_word(&w, 0.5, DEFAULT_TOLERANCE),
        Err(Error::Divergence(_))
    ));
    let w = word(vec![Letter::rat(C::from(crate::algebra::Q::new(
        1.into(),
        2.into(),
    )))]);
    assert!(matches!(
        eval_word(&w, 0.75, DEFAULT_TOLERANCE),
        Err(Error::Divergence(_))
    ));
}

#[test]
fn base_one_logarithm() {
    let w = IntegralWord::new(vec![Letter::rat(ci(0))], Base::One);
    let v = eval_word(&w, 0.25, DEFAULT_TOLERANCE).unwrap();
    assert!((v - (-(0.25f64).ln())).abs() < 1e-12, "{v}");
}

#[test]
fn depth_two_polylog() {
    let w = word(vec![Letter::rat(ci(0)), Letter::rat(ci(1))]);
    for x in [0.25, 0.5, 0.75] {
        let v = eval_word(&w, x, DEFAULT_TOLERANCE).unwrap();
        let li2: f64 = (1..4000).map(|k| x.powi(k) / (k * k) as f64).sum();
        assert!((v - li2).abs() < 1e-10, "{x}: {v} {li2}");
    }
}

#[test]
fn numeric_shuffle() {
    let u = word(vec![Letter::rat(ci(-1)), Letter::rat(ci(1))]);
    let v = word(vec![Letter::rat(ci(2)), Letter::rat(ci(-3))]);
    let s = shuffle(&u, &v).unwrap();
    for x in [0.25, 0.5, 0.75] {
        let lhs = eval_word(&u, x, DEFAULT_TOLERANCE).unwrap()
            * eval_word(&v, x, DEFAULT_TOLERANCE).unwrap();
        let rhs = eval_combination(&s, Complex64::new(x, 0.0), DEFAULT_TOLERANCE).unwrap();
        assert!((lhs - rhs.re).abs() < 1e-8, "{x}: {lhs} {rhs}");
    }
}

#[test]
fn transform_single_pole() {
    let w = word(vec![Letter::rat(ci(3))]);
    let out = transform_word_at(&w, &rf("y^2"), Complex64::new(0.5, 0.0)).unwrap();
    let Letter::Generic(g) = &out.letters[0] else {
        panic!()
    };
    let got = g.f.scale(&out.prefactor);
    assert_eq!(got, rf("2*y/(y^2-3)").scale(&ci(-1)));
    assert_eq!(
        transform_word_at(&word(vec![]), &rf("y^2"), Complex64::new(0.5, 0.0)).unwrap(),
        word(vec![])
    );
    assert!(transform_word_at(&w, &rf("y^2+1"), Complex64::new(0.5, 0.0)).is_err());
}

#[test]
fn transform_rejects_unrationalized_root() {
    let w = word(vec![Letter::sqrt_set(vec![ci(0), ci(4)]).unwrap()]);
    let err = transform_word_at(&w, &rf("y^2"), Complex64::new(0.5, 0.0)).unwrap_err();
    assert!(matches!(err, Error::Usage(_)));
}

#[test]
fn paired_roots_transform() {
    let t = paired_roots_transformation();
    let out = transform_word(&paired_roots_word(), &t).unwrap();
    assert_eq!(out.prefactor, c("32*sqrt(2)"));
    let want = [
        "1/u - 2*u^3/(u^4+1)",
        "(1-u^2)/(u^4+1)",
        "(1-u^2)/(u^4+1)",
        "(1+u^2)/(u^4+1)",
    ];
    for (l, s) in out.letters.iter().zip(want) {
        assert_eq!(*l, Letter::generic(rf(s)), "{l}");
    }
}

#[test]
fn paired_roots_numeric() {
    let t = paired_roots_transformation();
    let w = paired_roots_word();
    let out = transform_word(&w, &t).unwrap();
    for x in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let lhs = eval_word(&w, x, DEFAULT_TOLERANCE).unwrap();
        let y = t.eval_inverse(Complex64::new(x, 0.0)).re;
        let rhs = eval_word(&out, y, DEFAULT_TOLERANCE).unwrap();
        assert!((lhs - rhs).abs() < 1e-8, "{x}: {lhs} {rhs}");
    }
}

#[test]
fn partial_fractions() {
    let w = word(vec![
        Letter::generic(rf("2*y/(y^2-4)")),
        Letter::generic(rf("1/(u-3)")),
    ]);
    let p = partial_fraction_letters(&w).unwrap();
    let Letter::Generic(g) = &p.letters[0] else {
        panic!()
    };
    let d = g.decomposition.as_ref().unwrap();
    assert_eq!(d.poles.len(), 2);
    assert!(d.poles.iter().all(|q| q.coefficient.is_one()));
    assert_eq!(d.resum(), g.f);
    assert_eq!(p.letters[1], Letter::Rat(ci(3)));
    assert_eq!(p.prefactor, ci(-1));

    let f = rf("1/u - 2*u^3/(u^4+1)");
    let d = partial::decompose(&f);
    assert_eq!(
        d.poles,
        vec![PolePart {
            pole: ci(0),
            coefficient: ci(1)
        }]
    );
    assert_eq!(d.remainder, rf("-2*u^3/(u^4+1)"));
    assert_eq!(d.resum(), f);

    let f = rf("(1-u^2)/(u^4+1)");
    let d = partial::decompose(&f);
    assert!(d.poles.is_empty());
    assert_eq!(d.remainder, f);
}

#[test]
fn expansion_is_multilinear() {
    let w = word(vec![
        Letter::generic(rf("2*y/(y^2-4)")),
        Letter::generic(rf("1/(u+1)+u")),
    ]);
    let p = partial_fraction_letters(&w).unwrap();
    let e = expand_decompositions(&p);
    assert_eq!(e.len(), 4);
    for x in [0.25, 0.5] {
        let lhs = eval_word(&w, x, DEFAULT_TOLERANCE).unwrap();
        let rhs = eval_combination(&e, Complex64::new(x, 0.0), DEFAULT_TOLERANCE).unwrap();
        assert!((lhs - rhs.re).abs() < 1e-10, "{x}: {lhs} {rhs}");
    }
}

#[test]
fn display_forms() {
    let w = IntegralWord::new(
        vec![
            Letter::rat(ci(0)),
            Letter::sqrt_set(vec![ci(0), ci(4)]).unwrap(),
            Letter::rat_times_sqrt(ci(0), vec![c("1/4")]).unwrap(),
        ],
        Base::One,
    )
    .with_prefactor(ci(2));
    assert_eq!(w.to_string(), "2*H[0,{0,4},(0,{1/4}); base=1]");
}
