use proptest::prelude::*;

use radix::algebra::{AlgebraicNumber, Polynomial, PuiseuxSeries, RationalFunction};
use radix::parser::parse_constant;

type C = AlgebraicNumber;

fn q() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

/// Elements of `Q(√2, √3, i)`.
fn number() -> impl Strategy<Value = C> {
    (q(), q(), q(), q()).prop_map(|((a, b), (c, d), (e, f), (g, h))| {
        parse_constant(&format!(
            "{a}/{b} + {c}/{d}*sqrt(2) + {e}/{f}*sqrt(3) + {g}/{h}*i"
        ))
        .unwrap()
    })
}

fn nonzero_number() -> impl Strategy<Value = C> {
    number().prop_filter("non-zero", |c| !c.is_zero())
}

fn rational_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, 1..=max_degree + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    rational_poly(max_degree).prop_filter("non-zero", |p| !p.is_zero())
}

fn ratfun(max_degree: usize) -> impl Strategy<Value = RationalFunction> {
    (rational_poly(max_degree), nonzero_poly(max_degree))
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in number(), b in number(), c in number()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn inverse_round_trip(a in nonzero_number()) {
        let inv = a.checked_inv().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn square_roots_square_back(a in number()) {
        let s = a.sqrt();
        prop_assert_eq!(&s * &s, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn squarefree_part_reconstructs(
        factors in prop::collection::vec((-3i64..=3, 1u32..=3), 1..=4),
        scale in prop::sample::select(vec![-3i64, -1, 2, 5]),
    ) {
        let mut p = Polynomial::constant(C::from_int(scale));
        for (a, e) in &factors {
            p = p.mul(&Polynomial::linear_root(&C::from_int(*a)).pow(*e));
        }
        prop_assume!(p.degree() <= 8);
        let (c, s, sq) = p.squarefree_split().unwrap();
        prop_assert!(s.is_squarefree());
        prop_assert_eq!(s.scale(&c).mul(&sq.mul(&sq)), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compose_is_associative(f in ratfun(3), g in ratfun(3), h in ratfun(3)) {
        let gh = g.compose(&h);
        let fg = f.compose(&g);
        if let (Ok(gh), Ok(fg)) = (gh, fg) {
            let left = f.compose(&gh);
            let right = fg.compose(&h);
            if let (Ok(l), Ok(r)) = (left, right) {
                prop_assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn squares_are_recognized(h in ratfun(3), c in nonzero_number()) {
        prop_assume!(!h.is_zero());
        let f = h.mul(&h).scale(&c);
        let (c2, h2) = f.is_square().expect("a square times a constant");
        prop_assert_eq!(h2.mul(&h2).scale(&c2), f);
        let ratio = h2.div(&h).unwrap();
        prop_assert!(ratio.is_constant());
    }
}

#[test]
fn puiseux_square_root_squares_back() {
    for order in [4, 8, 12] {
        let one_plus_x = Polynomial::from_ints(&[1, 1]);
        let s = PuiseuxSeries::from_poly(&one_plus_x, order).sqrt().unwrap();
        let sq = s.mul(&s).sub(&PuiseuxSeries::from_poly(&one_plus_x, order));
        assert!(sq.is_zero_to_precision(), "order {order}");
    }
}
