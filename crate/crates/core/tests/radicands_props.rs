mod common;

use proptest::prelude::*;

use radix::algebra::{Polynomial, RationalFunction};
use radix::radicands::{analyze, normalize, CaseTag};

use common::{brute_force_case, mask_radicand, root_product, witness_is_sound, C};

fn exponents() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=3, 6).prop_filter("non-constant", |e| e.iter().any(|k| *k > 0))
}

fn radicand_set() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(exponents(), 1..=3)
}

fn odd_mask(e: &[u32]) -> u32 {
    e.iter()
        .enumerate()
        .fold(0, |acc, (k, m)| if m % 2 == 1 { acc | 1 << k } else { acc })
}

fn square() -> impl Strategy<Value = RationalFunction> {
    (-3i64..=3, 1i64..=3).prop_map(|(r, c)| {
        let lin = Polynomial::linear_root(&C::from_int(r)).pow(2);
        RationalFunction::from_poly(lin.scale(&C::from_int(c * c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normalize_is_idempotent(set in radicand_set()) {
        let fs: Vec<RationalFunction> = set.iter().map(|e| root_product(e)).collect();
        let once = normalize(&fs).unwrap();
        let again: Vec<RationalFunction> = once
            .reduced
            .iter()
            .map(|p| RationalFunction::from_poly(p.clone()))
            .collect();
        prop_assert_eq!(normalize(&again).unwrap().reduced, once.reduced);
    }

    #[test]
    fn classification_matches_brute_force(set in radicand_set()) {
        let fs: Vec<RationalFunction> = set.iter().map(|e| root_product(e)).collect();
        let masks: Vec<u32> = set.iter().map(|e| odd_mask(e)).collect();
        let (r, case) = analyze(&fs).unwrap();
        prop_assert_eq!(case.tag.name(), brute_force_case(&masks));
        if let CaseTag::NoTransformation { witness, subset } = &case.tag {
            prop_assert!(witness_is_sound(&r, witness, subset));
        }
    }

    #[test]
    fn classification_ignores_squares_and_order(
        set in radicand_set(),
        squares in prop::collection::vec(square(), 3),
        rotate in 0usize..3,
    ) {
        let fs: Vec<RationalFunction> = set.iter().map(|e| root_product(e)).collect();
        let (_, base) = analyze(&fs).unwrap();
        let mut changed: Vec<RationalFunction> =
            fs.iter().zip(&squares).map(|(f, s)| f.mul(s)).collect();
        let k = rotate % changed.len();
        changed.rotate_left(k);
        let (_, other) = analyze(&changed).unwrap();
        prop_assert_eq!(other.tag, base.tag);
    }

    #[test]
    fn witnesses_reconstruct_originals(set in radicand_set()) {
        let fs: Vec<RationalFunction> = set.iter().map(|e| root_product(e)).collect();
        let r = normalize(&fs).unwrap();
        for (f, w) in fs.iter().zip(&r.witnesses) {
            let prod = w
                .subset
                .iter()
                .fold(Polynomial::one(), |acc, &k| acc.mul(&r.reduced[k]));
            let rebuilt = RationalFunction::from_poly(prod)
                .mul(&w.cofactor.mul(&w.cofactor))
                .scale(&w.constant);
            prop_assert_eq!(&rebuilt, f);
        }
    }
}

#[test]
fn three_roots_in_one_radicand_are_obstructed() {
    let (_, case) = analyze(&[mask_radicand(0b11100)]).unwrap();
    assert_eq!(case.tag.name(), "NoTransformation");
}
