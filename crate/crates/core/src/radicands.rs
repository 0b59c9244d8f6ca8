//! Normalization and classification of radicand sets.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::{AlgebraicNumber, Polynomial, RationalFunction, RealAlgebraic};
use crate::error::{domain, Result};

type C = AlgebraicNumber;

/// How an original radicand is recovered from the reduced set:
/// `original = constant · cofactor² · ∏_{j ∈ subset} reduced[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub constant: C,
    pub cofactor: RationalFunction,
    pub subset: Vec<usize>,
}

/// A radicand set reduced to monic squarefree polynomials, none dividing
/// another.
#[derive(Clone, Debug)]
pub struct RadicandSet {
    pub originals: Vec<RationalFunction>,
    pub reduced: Vec<Polynomial>,
    pub witnesses: Vec<Witness>,
}

/// Pairwise coprime monic factors whose products give every input.
pub(crate) fn coprime_base(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut base: Vec<Polynomial> = Vec::new();
    for p in polys {
        let m = p.monic();
        if m.degree() > 0 && !base.contains(&m) {
            base.push(m);
        }
    }
    'outer: loop {
        for i in 0..base.len() {
            for j in (i + 1)..base.len() {
                let g = base[i].gcd(&base[j]);
                if g.degree() == 0 {
                    continue;
                }
                let a = base[i].exact_div(&g).expect("gcd divides");
                let b = base[j].exact_div(&g).expect("gcd divides");
                base.remove(j);
                base.remove(i);
                for q in [g, a, b] {
                    let q = q.monic();
                    if q.degree() > 0 && !base.contains(&q) {
                        base.push(q);
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    sort_polys(&mut base);
    base
}

/// Bit vector of the atoms dividing a squarefree polynomial.
pub(crate) fn atom_vector(p: &Polynomial, atoms: &[Polynomial]) -> u64 {
    let mut v = 0u64;
    for (k, a) in atoms.iter().enumerate() {
        if a.divides(p) {
            v |= 1 << k;
        }
    }
    v
}

fn poly_key(p: &Polynomial) -> (usize, String) {
    (p.degree(), p.to_string())
}

fn sort_polys(v: &mut [Polynomial]) {
    v.sort_by_key(poly_key);
}

fn product_of(atoms: &[Polynomial], v: u64) -> Polynomial {
    let mut p = Polynomial::one();
    for (k, a) in atoms.iter().enumerate() {
        if v >> k & 1 == 1 {
            p = p.mul(a);
        }
    }
    p
}

fn subset_product(reduced: &[Polynomial], subset: &[usize]) -> Polynomial {
    subset
        .iter()
        .fold(Polynomial::one(), |acc, &j| acc.mul(&reduced[j]))
}

/// Row-reduced basis of the span of `vectors` over F₂, each row paired with
/// the set of input indices (as a bit mask) that sums to it.
fn f2_basis(vectors: &[u64]) -> Vec<(u64, u64)> {
    let mut rows: Vec<(u64, u64)> = Vec::new();
    for (j, &v) in vectors.iter().enumerate() {
        let mut cur = (v, 1u64 << j);
        for &(r, c) in &rows {
            let pivot = 63 - r.leading_zeros();
            if cur.0 >> pivot & 1 == 1 {
                cur = (cur.0 ^ r, cur.1 ^ c);
            }
        }
        if cur.0 == 0 {
            continue;
        }
        let pivot = 63 - cur.0.leading_zeros();
        for row in rows.iter_mut() {
            if row.0 >> pivot & 1 == 1 {
                row.0 ^= cur.0;
                row.1 ^= cur.1;
            }
        }
        rows.push(cur);
    }
    rows
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|k| mask >> k & 1 == 1).collect()
}

/// Reduce a radicand set to monic squarefree polynomials with no element
/// dividing another.
pub fn normalize(originals: &[RationalFunction]) -> Result<RadicandSet> {
    let mut parts = Vec::new();
    for f in originals {
        if f.is_zero() {
            return domain("zero radicand");
        }
        let (_, sn, _) = f.num().squarefree_split()?;
        let (_, sd, _) = f.den().squarefree_split()?;
        let s = sn.mul(&sd);
        if s.degree() > 0 && !parts.contains(&s) {
            parts.push(s);
        }
    }
    sort_polys(&mut parts);
    loop {
        let mut changed = false;
        'scan: for i in 0..parts.len() {
            for j in 0..parts.len() {
                if i == j || parts[i].degree() > parts[j].degree() {
                    continue;
                }
                if parts[i].divides(&parts[j]) {
                    let q = parts[j].exact_div(&parts[i])?.monic();
                    parts.remove(j);
                    if q.degree() > 0 && !parts.contains(&q) {
                        parts.push(q);
                    }
                    changed = true;
                    break 'scan;
                }
            }
        }
        if !changed {
            break;
        }
    }
    sort_polys(&mut parts);
    let reduced = parts;

    let mut all = reduced.clone();
    let mut sq_parts = Vec::new();
    for f in originals {
        let (_, sn, _) = f.num().squarefree_split()?;
        let (_, sd, _) = f.den().squarefree_split()?;
        let s = sn.mul(&sd);
        all.push(s.clone());
        sq_parts.push(s);
    }
    let atoms = coprime_base(&all);
    let vecs: Vec<u64> = reduced.iter().map(|p| atom_vector(p, &atoms)).collect();
    let basis = f2_basis(&vecs);
    let mut witnesses = Vec::new();
    for (f, s) in originals.iter().zip(&sq_parts) {
        let mut target = atom_vector(s, &atoms);
        let mut combo = 0u64;
        for &(r, c) in &basis {
            let pivot = 63 - r.leading_zeros();
            if target >> pivot & 1 == 1 {
                target ^= r;
                combo ^= c;
            }
        }
        debug_assert_eq!(target, 0, "original lies in the span of the reduced set");
        let subset = mask_to_indices(combo);
        let prod = RationalFunction::from_poly(subset_product(&reduced, &subset));
        let rest = f.div(&prod)?;
        let (constant, cofactor) = rest
            .is_square()
            .expect("quotient by the matching subset is a square");
        witnesses.push(Witness {
            constant,
            cofactor,
            subset,
        });
    }
    Ok(RadicandSet {
        originals: originals.to_vec(),
        reduced,
        witnesses,
    })
}

/// The classified shape of a reduced radicand set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseTag {
    Empty,
    OneLinear {
        a: C,
    },
    OneQuadratic {
        c0: C,
        c1: C,
    },
    TwoLinear {
        a1: C,
        a2: C,
    },
    ThreeQuadratic {
        a1: C,
        a2: C,
        a3: C,
    },
    /// A squarefree polynomial of degree ≥ 3 that equals the product of the
    /// reduced radicands indexed by `subset` times a square.
    NoTransformation {
        witness: Polynomial,
        subset: Vec<usize>,
    },
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Empty => "Empty",
            CaseTag::OneLinear { .. } => "OneLinear",
            CaseTag::OneQuadratic { .. } => "OneQuadratic",
            CaseTag::TwoLinear { .. } => "TwoLinear",
            CaseTag::ThreeQuadratic { .. } => "ThreeQuadratic",
            CaseTag::NoTransformation { .. } => "NoTransformation",
        }
    }

    /// Parameters as `(name, value)` pairs for display.
    pub fn parameters(&self) -> Vec<(&'static str, String)> {
        match self {
            CaseTag::Empty => vec![],
            CaseTag::OneLinear { a } => vec![("a", a.to_string())],
            CaseTag::OneQuadratic { c0, c1 } => {
                vec![("c0", c0.to_string()), ("c1", c1.to_string())]
            }
            CaseTag::TwoLinear { a1, a2 } => vec![("a1", a1.to_string()), ("a2", a2.to_string())],
            CaseTag::ThreeQuadratic { a1, a2, a3 } => vec![
                ("a1", a1.to_string()),
                ("a2", a2.to_string()),
                ("a3", a3.to_string()),
            ],
            CaseTag::NoTransformation { witness, .. } => vec![("witness", witness.to_string())],
        }
    }
}

/// One checked condition of a variant's admissibility test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub condition: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub eligible: bool,
    pub checks: Vec<Check>,
}

impl Admissibility {
    fn from_checks(checks: Vec<Check>) -> Self {
        Admissibility {
            eligible: checks.iter().all(|c| c.holds),
            checks,
        }
    }

    fn fail(reason: &str) -> Self {
        Self::from_checks(vec![Check {
            condition: reason.to_string(),
            holds: false,
        }])
    }

    /// First violated condition, if any.
    pub fn violated(&self) -> Option<&str> {
        self.checks
            .iter()
            .find(|c| !c.holds)
            .map(|c| c.condition.as_str())
    }
}

/// Admissible conjugate configurations of `F ∪ conj(F)` for the complex
/// unit-interval variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexConfig {
    /// Two linear radicands with roots `a1` and `conj(a1)`.
    ConjugatePair { a1: C },
    /// Three quadratics with roots `a1`, `conj(a1)` and `0`.
    ConjugatePairWithZero { a1: C },
    /// Three quadratics with a real root `a1` and roots `a2`, `conj(a2)`.
    RealAndConjugatePair { a1: RealAlgebraic, a2: C },
}

#[derive(Clone, Debug)]
pub struct RadicandCase {
    pub tag: CaseTag,
    pub real: Admissibility,
    pub complex: Admissibility,
    pub complex_config: Option<ComplexConfig>,
}

fn root_of_linear(p: &Polynomial) -> C {
    debug_assert!(p.degree() == 1 && p.is_monic());
    -p.coeff(0)
}

fn root_category(a: &C) -> u8 {
    if a.is_zero() {
        2
    } else if a.is_real() {
        0
    } else {
        1
    }
}

/// Canonical root order: non-zero reals ascending, then non-real roots (by
/// real part, conjugate pairs with positive imaginary part first), zero last.
pub fn root_order(a: &C, b: &C) -> Ordering {
    let (ca, cb) = (root_category(a), root_category(b));
    if ca != cb {
        return ca.cmp(&cb);
    }
    let by_re = a.re().cmp(b.re());
    if by_re != Ordering::Equal {
        return by_re;
    }
    let by_abs_im = a.im().abs().cmp(&b.im().abs());
    if by_abs_im != Ordering::Equal {
        return by_abs_im;
    }
    b.im().cmp(a.im())
}

fn sorted_roots(mut roots: Vec<C>) -> Vec<C> {
    roots.sort_by(root_order);
    roots
}

/// Classify a normalized set (tag only).
pub fn classify_tag(r: &RadicandSet) -> CaseTag {
    let reduced = &r.reduced;
    for (j, p) in reduced.iter().enumerate() {
        if p.degree() >= 3 {
            return CaseTag::NoTransformation {
                witness: p.clone(),
                subset: vec![j],
            };
        }
    }
    let atoms = coprime_base(reduced);
    let vecs: Vec<u64> = reduced.iter().map(|p| atom_vector(p, &atoms)).collect();
    let basis = f2_basis(&vecs);
    let degree_of = |v: u64| -> usize {
        atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| v >> k & 1 == 1)
            .map(|(_, a)| a.degree())
            .sum()
    };
    let obstruction = |v: u64, combo: u64| CaseTag::NoTransformation {
        witness: product_of(&atoms, v),
        subset: mask_to_indices(combo),
    };
    if basis.len() >= 3 {
        let (v, c) = basis
            .iter()
            .fold((0u64, 0u64), |acc, &(r, c)| (acc.0 ^ r, acc.1 ^ c));
        return obstruction(v, c);
    }
    let mut elements: Vec<(u64, u64)> = basis.clone();
    if basis.len() == 2 {
        elements.push((basis[0].0 ^ basis[1].0, basis[0].1 ^ basis[1].1));
    }
    for &(v, c) in &elements {
        if degree_of(v) >= 3 {
            return obstruction(v, c);
        }
    }
    match basis.len() {
        0 => CaseTag::Empty,
        1 => {
            let p = product_of(&atoms, basis[0].0);
            if p.degree() == 1 {
                CaseTag::OneLinear {
                    a: root_of_linear(&p),
                }
            } else {
                CaseTag::OneQuadratic {
                    c0: p.coeff(0),
                    c1: p.coeff(1),
                }
            }
        }
        _ => {
            let used: u64 = elements.iter().fold(0, |acc, &(v, _)| acc | v);
            let lin: Vec<&Polynomial> = atoms
                .iter()
                .enumerate()
                .filter(|(k, _)| used >> k & 1 == 1)
                .map(|(_, a)| a)
                .collect();
            debug_assert!(lin.iter().all(|a| a.degree() == 1));
            let roots = sorted_roots(lin.iter().map(|a| root_of_linear(a)).collect());
            if roots.len() == 2 {
                CaseTag::TwoLinear {
                    a1: roots[0].clone(),
                    a2: roots[1].clone(),
                }
            } else {
                CaseTag::ThreeQuadratic {
                    a1: roots[0].clone(),
                    a2: roots[1].clone(),
                    a3: roots[2].clone(),
                }
            }
        }
    }
}

fn check(condition: impl Into<String>, holds: bool) -> Check {
    Check {
        condition: condition.into(),
        holds,
    }
}

/// `a < 0 or a ≥ 1` for a real root, recorded as a check.
fn root_outside(name: &str, a: &C) -> Check {
    match a.as_real() {
        Some(r) => {
            let ok = r.is_negative() || *r >= RealAlgebraic::one();
            check(
                format!("{name} < 0 or {name} >= 1 for {name} = {a}"),
                ok,
            )
        }
        None => check(format!("{name} = {a} is real"), false),
    }
}

fn is_real_check(name: &str, a: &C) -> Check {
    check(format!("{name} = {a} is real"), a.is_real())
}

/// Conditions under which the real unit-interval variant applies.
pub fn real_admissibility(tag: &CaseTag) -> Admissibility {
    match tag {
        CaseTag::Empty => Admissibility::from_checks(vec![]),
        CaseTag::NoTransformation { .. } => {
            Admissibility::fail("no rationalizing transformation exists")
        }
        CaseTag::OneLinear { a } => {
            if a.is_zero() {
                Admissibility::from_checks(vec![check("a = 0", true)])
            } else {
                Admissibility::from_checks(vec![root_outside("a", a)])
            }
        }
        CaseTag::OneQuadratic { c0, c1 } => {
            if !(c0.is_real() && c1.is_real()) {
                return Admissibility::from_checks(vec![
                    is_real_check("c0", c0),
                    is_real_check("c1", c1),
                ]);
            }
            if c0.is_zero() {
                let a = -c1.clone();
                return Admissibility::from_checks(vec![root_outside("a", &a)]);
            }
            let r0 = c0.re().clone();
            let r1 = c1.re().clone();
            let one = RealAlgebraic::one();
            let four = RealAlgebraic::from_int(4);
            let disc = &(&r1 * &r1) - &(&four * &r0);
            let pos = &r0 * &(&(&r0 + &r1) + &one);
            let mid = &(&RealAlgebraic::from_int(2) * &r0) + &r1;
            let in_band = mid.is_negative() && mid > -one.clone();
            let two_real = disc.is_positive();
            Admissibility::from_checks(vec![
                check("c0 != 0", true),
                check("c1^2 != 4*c0", !disc.is_zero()),
                check("c0*(c0 + c1 + 1) >= 0", pos.sign() >= 0),
                check(
                    "not both -1 < 2*c0 + c1 < 0 and c1^2 > 4*c0",
                    !(in_band && two_real),
                ),
            ])
        }
        CaseTag::TwoLinear { a1, a2 } => {
            let mut checks = Vec::new();
            for (n, a) in [("a1", a1), ("a2", a2)] {
                if !a.is_zero() {
                    checks.push(root_outside(n, a));
                }
            }
            Admissibility::from_checks(checks)
        }
        CaseTag::ThreeQuadratic { a1, a2, a3 } => {
            let mut checks = Vec::new();
            for (n, a) in [("a1", a1), ("a2", a2), ("a3", a3)] {
                if !a.is_zero() {
                    checks.push(root_outside(n, a));
                }
            }
            Admissibility::from_checks(checks)
        }
    }
}

fn is_conjugate_pair(a: &C, b: &C) -> bool {
    !a.is_real() && *b == a.conj()
}

/// Conditions under which the complex unit-interval variant applies, judged
/// on the classification of `F ∪ conj(F)`.
pub fn complex_admissibility(closure_tag: &CaseTag) -> (Admissibility, Option<ComplexConfig>) {
    let purely_real = |roots: &[&C]| roots.iter().all(|a| a.is_real());
    match closure_tag {
        CaseTag::TwoLinear { a1, a2 } => {
            if is_conjugate_pair(a1, a2) {
                (
                    Admissibility::from_checks(vec![check("a2 = conj(a1) != a1", true)]),
                    Some(ComplexConfig::ConjugatePair { a1: a1.clone() }),
                )
            } else if purely_real(&[a1, a2]) {
                (
                    Admissibility::fail("configuration is real; use the real variant"),
                    None,
                )
            } else {
                (Admissibility::fail("a2 = conj(a1) != a1"), None)
            }
        }
        CaseTag::ThreeQuadratic { a1, a2, a3 } => {
            if a3.is_zero() && is_conjugate_pair(a1, a2) {
                return (
                    Admissibility::from_checks(vec![
                        check("a3 = 0", true),
                        check("a2 = conj(a1) != a1", true),
                    ]),
                    Some(ComplexConfig::ConjugatePairWithZero { a1: a1.clone() }),
                );
            }
            if a1.is_real() && !a1.is_zero() && is_conjugate_pair(a2, a3) {
                let c = root_outside("a1", a1);
                let ok = c.holds;
                let adm = Admissibility::from_checks(vec![c, check("a3 = conj(a2) != a2", true)]);
                let cfg = ok.then(|| ComplexConfig::RealAndConjugatePair {
                    a1: a1.re().clone(),
                    a2: a2.clone(),
                });
                return (adm, cfg);
            }
            if purely_real(&[a1, a2, a3]) {
                return (
                    Admissibility::fail("configuration is real; use the real variant"),
                    None,
                );
            }
            (
                Admissibility::fail("one root real (or zero) and the other two complex conjugates"),
                None,
            )
        }
        CaseTag::NoTransformation { .. } => (
            Admissibility::fail(
                "F together with its conjugate admits no rationalizing transformation",
            ),
            None,
        ),
        CaseTag::Empty => (Admissibility::fail("all radicands are squares; no transformation is needed"), None),
        CaseTag::OneQuadratic { c0, c1 } if c0.is_real() && c1.is_real() => {
            let disc = &(c1 * c1) - &(&C::from_int(4) * c0);
            if disc.real_sign() == Some(-1) {
                let a1 = &(&disc.sqrt() - c1) / &C::from_int(2);
                (
                    Admissibility::from_checks(vec![check(
                        "roots form a pair a1, conj(a1) with a1 != conj(a1)",
                        true,
                    )]),
                    Some(ComplexConfig::ConjugatePair { a1 }),
                )
            } else {
                (
                    Admissibility::fail("configuration is real; use the real variant"),
                    None,
                )
            }
        }
        CaseTag::OneLinear { .. } | CaseTag::OneQuadratic { .. } => (
            Admissibility::fail("configuration is real; use the real variant"),
            None,
        ),
    }
}

/// Classify a normalized set and record both unit-interval admissibilities.
pub fn classify(r: &RadicandSet) -> Result<RadicandCase> {
    let tag = classify_tag(r);
    let real = real_admissibility(&tag);
    let mut closure: Vec<RationalFunction> = r
        .reduced
        .iter()
        .map(|p| RationalFunction::from_poly(p.clone()))
        .collect();
    for p in &r.reduced {
        closure.push(RationalFunction::from_poly(p.conj()));
    }
    let closure_set = normalize(&closure)?;
    let closure_tag = classify_tag(&closure_set);
    let (complex, complex_config) = complex_admissibility(&closure_tag);
    Ok(RadicandCase {
        tag,
        real,
        complex,
        complex_config,
    })
}

/// Normalize and classify in one step.
pub fn analyze(originals: &[RationalFunction]) -> Result<(RadicandSet, RadicandCase)> {
    let set = normalize(originals)?;
    let case = classify(&set)?;
    Ok((set, case))
}
