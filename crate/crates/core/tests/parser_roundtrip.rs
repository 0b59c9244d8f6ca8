use radix::algebra::AlgebraicNumber;
use radix::integrals::{Base, IntegralWord, Letter};
use radix::parser::{parse_constant, parse_rational_function, parse_sum, parse_word};
use radix::sums::{Layer, Prefactor, SumExpr};
use radix::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = AlgebraicNumber;

fn c(s: &str) -> C {
    parse_constant(s).unwrap()
}

const POINTS: [&str; 10] = [
    "0", "1", "-1", "4", "1/4", "1/2", "-2", "sqrt(2)", "1+i", "-i",
];
const PREFACTORS: [&str; 7] = ["1", "2", "-3/2", "32*sqrt(2)", "1+sqrt(2)", "i", "-1"];
const RATFUNS: [&str; 5] = [
    "1",
    "t",
    "(1-t^2)/(t^4+1)",
    "1/t-2*t^3/(t^4+1)",
    "(3*t+1/2)/(t^2-2)",
];

fn points(rng: &mut ChaCha8Rng, k: usize) -> Vec<C> {
    POINTS.choose_multiple(rng, k).map(|s| c(s)).collect()
}

fn letter(rng: &mut ChaCha8Rng) -> Letter {
    match rng.gen_range(0..5) {
        0 => Letter::rat(c(POINTS.choose(rng).unwrap())),
        1 => {
            let k = rng.gen_range(2..=4);
            Letter::sqrt_set(points(rng, k)).unwrap()
        }
        2 => {
            let k = rng.gen_range(2..=4);
            let mut s = points(rng, k);
            let a = s.pop().unwrap();
            Letter::rat_times_sqrt(a, s).unwrap()
        }
        3 => {
            let k = rng.gen_range(3..=5);
            let j = rng.gen_range(1..=k - 2) as u32;
            Letter::power_times_sqrt(points(rng, k), j).unwrap()
        }
        _ => Letter::generic(parse_rational_function(RATFUNS.choose(rng).unwrap()).unwrap()),
    }
}

fn word(rng: &mut ChaCha8Rng) -> IntegralWord {
    let n = rng.gen_range(0..=5);
    let letters = (0..n).map(|_| letter(rng)).collect();
    let base = if rng.gen_bool(0.5) {
        Base::Zero
    } else {
        Base::One
    };
    IntegralWord::new(letters, base).with_prefactor(c(PREFACTORS.choose(rng).unwrap()))
}

fn prefactor(rng: &mut ChaCha8Rng, allow_delta: bool) -> Prefactor {
    let mut p = Prefactor::one()
        .with_power(rng.gen_range(-2..=2))
        .with_binom(rng.gen_range(-1..=1))
        .with_odd(rng.gen_range(-1..=1));
    if rng.gen_bool(0.3) {
        p = p.with_base(c(["2", "-1", "1/3", "-1/2"].choose(rng).unwrap()));
    }
    if allow_delta && rng.gen_bool(0.1) {
        p = p.with_delta();
    }
    p
}

fn layer(rng: &mut ChaCha8Rng, depth: usize) -> Layer {
    let inner = (depth < 3 && rng.gen_bool(0.6)).then(|| layer(rng, depth + 1));
    Layer::new(prefactor(rng, depth > 0), inner)
}

#[test]
fn word_corpus_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let w = word(&mut rng);
        let text = w.to_string();
        let back = parse_word(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(back, w, "{text}");
        assert_eq!(back.to_string(), text);
    }
}

#[test]
fn sum_corpus_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let s = SumExpr::new(layer(&mut rng, 0));
        let text = s.to_string();
        let back = parse_sum(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(back, s, "{text}");
        assert_eq!(back.to_string(), text);
    }
}

#[test]
fn word_examples() {
    let w = parse_word("H[0,{0,4},{0,4}; base=0]").unwrap();
    assert_eq!(w.len(), 3);
    assert_eq!(w.letters[0], Letter::rat(c("0")));
    assert_eq!(
        w.letters[1],
        Letter::sqrt_set(vec![c("0"), c("4")]).unwrap()
    );
    assert_eq!(w.to_string(), "H[0,{0,4},{0,4}]");
    let w = parse_word("H[; base=0]").unwrap();
    assert!(w.is_empty());
    let w = parse_word("H[0, {0,-1}, (1/2,{0,4}), ({0,1,4},1) | base=1]").unwrap();
    assert_eq!(w.base, Base::One);
    assert_eq!(
        w.letters[2],
        Letter::rat_times_sqrt(c("1/2"), vec![c("0"), c("4")]).unwrap()
    );
    assert_eq!(
        w.letters[3],
        Letter::power_times_sqrt(vec![c("0"), c("1"), c("4")], 1).unwrap()
    );
    let w = parse_word("(1+sqrt(2))*H[(1+i)/2]").unwrap();
    assert_eq!(w.prefactor, c("1+sqrt(2)"));
    assert_eq!(w.letters[0], Letter::rat(c("1/2+i/2")));
}

#[test]
fn sum_examples() {
    let s = parse_sum("sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))").unwrap();
    assert_eq!(s.depth(), 2);
    assert_eq!(
        s.outer.prefactor,
        Prefactor::one().with_power(-2).with_binom(-1)
    );
    let inner = s.outer.inner.as_ref().unwrap();
    assert_eq!(inner.prefactor, Prefactor::one().with_power(-1));
    assert!(inner.inner.is_none());
    assert_eq!(
        parse_sum("sum(x^n*1/(n^2*binom(2*n,n))*S(1/i))").unwrap(),
        s
    );
}

#[test]
fn errors_carry_positions() {
    for (src, col) in [
        ("H[0,{0}]", 5),
        ("H[0,{1,1}]", 5),
        ("H[0,(1,{1,2})]", 5),
        ("H[0; base=2]", 11),
        ("H[0.5]", 4),
        ("H[0", 4),
        ("sum(x^n * foo(n))", 11),
        ("sum(x^n * inv(delta(1,n)))", 11),
    ] {
        let r = if src.starts_with("sum") {
            parse_sum(src).map(|_| ())
        } else {
            parse_word(src).map(|_| ())
        };
        match r {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!((line, column), (1, col), "{src}");
            }
            other => panic!("{src}: {other:?}"),
        }
    }
}
