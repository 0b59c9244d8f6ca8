//! Real towers of quadratic extensions `Q(√d₁)(√d₂)…` and their elements.
//!
//! An element of a tower with `k` generators is stored as `2^k` rational
//! coordinates. Bit `i` of a coordinate index says whether generator `i`
//! divides the basis monomial, so the lower half of a coordinate vector is the
//! part free of the top generator and the upper half its coefficient. Every
//! generator is the positive square root of a positive element of the field
//! below that is not already a square there, which makes the coordinates of an
//! element unique and gives every element an exactly decidable sign.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use super::rational::{self, Q};

/// The generators of a tower; `gens[i]` holds the radicand of generator `i`
/// as coordinates over the first `i` generators.
#[derive(Debug, PartialEq, Eq)]
pub struct Tower {
    gens: Vec<Vec<Q>>,
}

impl Tower {
    /// The tower with no generators, i.e. the rationals.
    pub fn rationals() -> Arc<Tower> {
        static BASE: OnceLock<Arc<Tower>> = OnceLock::new();
        BASE.get_or_init(|| Arc::new(Tower { gens: Vec::new() }))
            .clone()
    }

    pub fn depth(&self) -> usize {
        self.gens.len()
    }

    fn dim(&self) -> usize {
        1 << self.gens.len()
    }

    /// Radicand of generator `i` as an element of the tower below it.
    pub fn generator_radicand(self: &Arc<Self>, i: usize) -> RealAlgebraic {
        let prefix = Arc::new(Tower {
            gens: self.gens[..i].to_vec(),
        });
        RealAlgebraic {
            tower: prefix,
            coords: self.gens[i].clone(),
        }
    }

    fn extend(&self, radicand: Vec<Q>) -> Arc<Tower> {
        debug_assert_eq!(radicand.len(), self.dim());
        let mut gens = self.gens.clone();
        gens.push(radicand);
        Arc::new(Tower { gens })
    }

    fn is_prefix_of(&self, other: &Tower) -> bool {
        self.gens.len() <= other.gens.len() && self.gens[..] == other.gens[..self.gens.len()]
    }
}

fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

fn all_zero(x: &[Q]) -> bool {
    x.iter().all(Zero::is_zero)
}

fn add_vec(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_vec(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn scale_vec(x: &[Q], s: &Q) -> Vec<Q> {
    x.iter().map(|a| a * s).collect()
}

fn mul_at(t: &Tower, level: usize, x: &[Q], y: &[Q]) -> Vec<Q> {
    if level == 0 {
        return vec![&x[0] * &y[0]];
    }
    let h = 1 << (level - 1);
    let (a, b) = x.split_at(h);
    let (c, e) = y.split_at(h);
    let bz = all_zero(b);
    let ez = all_zero(e);
    let mut out = Vec::with_capacity(2 * h);
    if bz && ez {
        out.extend(mul_at(t, level - 1, a, c));
        out.extend(zeros(h));
        return out;
    }
    if bz {
        out.extend(mul_at(t, level - 1, a, c));
        out.extend(mul_at(t, level - 1, a, e));
        return out;
    }
    if ez {
        out.extend(mul_at(t, level - 1, a, c));
        out.extend(mul_at(t, level - 1, b, c));
        return out;
    }
    let d = &t.gens[level - 1];
    let ac = mul_at(t, level - 1, a, c);
    let be = mul_at(t, level - 1, b, e);
    let bed = mul_at(t, level - 1, &be, d);
    out.extend(add_vec(&ac, &bed));
    let ae = mul_at(t, level - 1, a, e);
    let bc = mul_at(t, level - 1, b, c);
    out.extend(add_vec(&ae, &bc));
    out
}

fn inv_at(t: &Tower, level: usize, x: &[Q]) -> Vec<Q> {
    if level == 0 {
        return vec![x[0].recip()];
    }
    let h = 1 << (level - 1);
    let (a, b) = x.split_at(h);
    if all_zero(b) {
        let mut out = inv_at(t, level - 1, a);
        out.extend(zeros(h));
        return out;
    }
    let d = &t.gens[level - 1];
    // 1/(a + b√d) = (a - b√d) / (a² - b² d)
    let aa = mul_at(t, level - 1, a, a);
    let bb = mul_at(t, level - 1, b, b);
    let bbd = mul_at(t, level - 1, &bb, d);
    let n = sub_vec(&aa, &bbd);
    let ni = inv_at(t, level - 1, &n);
    let mut out = mul_at(t, level - 1, a, &ni);
    let nb: Vec<Q> = mul_at(t, level - 1, b, &ni)
        .into_iter()
        .map(|v| -v)
        .collect();
    out.extend(nb);
    out
}

fn sign_at(t: &Tower, level: usize, x: &[Q]) -> i32 {
    if level == 0 {
        return rational::sign(&x[0]);
    }
    let h = 1 << (level - 1);
    let (a, b) = x.split_at(h);
    let sb = sign_at(t, level - 1, b);
    let sa = sign_at(t, level - 1, a);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return if sa == 0 { sb } else { sa };
    }
    // Opposite signs: compare a² with b² d.
    let d = &t.gens[level - 1];
    let aa = mul_at(t, level - 1, a, a);
    let bb = mul_at(t, level - 1, b, b);
    let bbd = mul_at(t, level - 1, &bb, d);
    let diff = sub_vec(&aa, &bbd);
    sign_at(t, level - 1, &diff) * sa
}

/// Some square root of `x` inside the tower, if one exists (sign unspecified).
fn sqrt_at(t: &Tower, level: usize, x: &[Q]) -> Option<Vec<Q>> {
    if level == 0 {
        return rational::sqrt_exact(&x[0]).map(|r| vec![r]);
    }
    let h = 1 << (level - 1);
    let (a, b) = x.split_at(h);
    let d = &t.gens[level - 1];
    if all_zero(b) {
        if let Some(r) = sqrt_at(t, level - 1, a) {
            let mut out = r;
            out.extend(zeros(h));
            return Some(out);
        }
        // √a = √(a/d) · √d
        let dinv = inv_at(t, level - 1, d);
        let ad = mul_at(t, level - 1, a, &dinv);
        if let Some(r) = sqrt_at(t, level - 1, &ad) {
            let mut out = zeros(h);
            out.extend(r);
            return Some(out);
        }
        return None;
    }
    // (p + q√d)² = p² + q² d + 2pq√d
    let aa = mul_at(t, level - 1, a, a);
    let bb = mul_at(t, level - 1, b, b);
    let bbd = mul_at(t, level - 1, &bb, d);
    let norm = sub_vec(&aa, &bbd);
    let n = sqrt_at(t, level - 1, &norm)?;
    let half = Q::new(1.into(), 2.into());
    for cand in [add_vec(a, &n), sub_vec(a, &n)] {
        let cand = scale_vec(&cand, &half);
        if all_zero(&cand) {
            continue;
        }
        if let Some(p) = sqrt_at(t, level - 1, &cand) {
            let p2 = scale_vec(&p, &Q::from_integer(2.into()));
            let qv = mul_at(t, level - 1, b, &inv_at(t, level - 1, &p2));
            let mut out = p;
            out.extend(qv);
            if mul_at(t, level, &out, &out) == x {
                return Some(out);
            }
        }
    }
    None
}

/// How to move coordinates of one tower into another.
#[derive(Debug)]
enum Embedding {
    /// Source is a prefix of the target: zero padding.
    Pad,
    /// Image of each source generator in the target.
    Images(Vec<Vec<Q>>),
}

#[derive(Debug)]
struct Merge {
    tower: Arc<Tower>,
    a: Embedding,
    b: Embedding,
}

fn embed(coords: &[Q], emb: &Embedding, target: &Tower) -> Vec<Q> {
    match emb {
        Embedding::Pad => {
            let mut out = coords.to_vec();
            out.resize(target.dim(), Q::zero());
            out
        }
        Embedding::Images(images) => {
            let level = images.len();
            eval_images(coords, level, images, target)
        }
    }
}

fn eval_images(coords: &[Q], level: usize, images: &[Vec<Q>], target: &Tower) -> Vec<Q> {
    let n = target.dim();
    if level == 0 {
        let mut out = zeros(n);
        out[0] = coords[0].clone();
        return out;
    }
    let h = 1 << (level - 1);
    let lo = eval_images(&coords[..h], level - 1, images, target);
    if all_zero(&coords[h..]) {
        return lo;
    }
    let hi = eval_images(&coords[h..], level - 1, images, target);
    let prod = mul_at(target, target.depth(), &hi, &images[level - 1]);
    add_vec(&lo, &prod)
}

fn pad_to(v: &[Q], n: usize) -> Vec<Q> {
    let mut out = v.to_vec();
    out.resize(n, Q::zero());
    out
}

fn merge_towers(a: &Arc<Tower>, b: &Arc<Tower>) -> Merge {
    let mut tower = a.clone();
    let mut images: Vec<Vec<Q>> = Vec::with_capacity(b.depth());
    for j in 0..b.depth() {
        let rad = eval_images(&b.gens[j], j, &images, &tower);
        let level = tower.depth();
        let img = match sqrt_at(&tower, level, &rad) {
            Some(mut s) => {
                if sign_at(&tower, level, &s) < 0 {
                    s = s.into_iter().map(|v| -v).collect();
                }
                s
            }
            None => {
                tower = tower.extend(rad);
                let n = tower.dim();
                for im in images.iter_mut() {
                    *im = pad_to(im, n);
                }
                let mut g = zeros(n);
                g[n / 2] = Q::one();
                g
            }
        };
        images.push(img);
    }
    let n = tower.dim();
    for im in images.iter_mut() {
        *im = pad_to(im, n);
    }
    Merge {
        tower,
        a: Embedding::Pad,
        b: Embedding::Images(images),
    }
}

type MergeEntry = (Arc<Tower>, Arc<Tower>, Arc<Merge>);

thread_local! {
    static MERGE_CACHE: RefCell<Vec<MergeEntry>> = const { RefCell::new(Vec::new()) };
}

fn merged(a: &Arc<Tower>, b: &Arc<Tower>) -> Arc<Merge> {
    let hit = MERGE_CACHE.with(|c| {
        c.borrow()
            .iter()
            .find(|(x, y, _)| Arc::ptr_eq(x, a) && Arc::ptr_eq(y, b))
            .map(|(_, _, m)| m.clone())
    });
    if let Some(m) = hit {
        return m;
    }
    let m = Arc::new(merge_towers(a, b));
    MERGE_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= 64 {
            c.remove(0);
        }
        c.push((a.clone(), b.clone(), m.clone()));
    });
    m
}

/// A real algebraic number living in a quadratic tower.
#[derive(Clone)]
pub struct RealAlgebraic {
    tower: Arc<Tower>,
    coords: Vec<Q>,
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealAlgebraic({self})")
    }
}

impl RealAlgebraic {
    pub fn from_rational(v: Q) -> Self {
        RealAlgebraic {
            tower: Tower::rationals(),
            coords: vec![v],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rational::q(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Q::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Q::one())
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        all_zero(&self.coords)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && all_zero(&self.coords[1..])
    }

    /// The value as a rational, if it has no irrational part.
    pub fn to_rational(&self) -> Option<Q> {
        if all_zero(&self.coords[1..]) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        all_zero(&self.coords[1..])
    }

    /// Move into the tower `target`, which must contain this element's tower.
    fn lift_to(&self, target: &Arc<Tower>) -> Self {
        if Arc::ptr_eq(&self.tower, target) {
            return self.clone();
        }
        if self.tower.is_prefix_of(target) {
            return RealAlgebraic {
                tower: target.clone(),
                coords: pad_to(&self.coords, target.dim()),
            };
        }
        let (a, _) = Self::unify(&RealAlgebraic::from_coords(target.clone()), self);
        let (_, b) = Self::unify(&a, self);
        b
    }

    fn from_coords(tower: Arc<Tower>) -> Self {
        let n = tower.dim();
        RealAlgebraic {
            tower,
            coords: zeros(n),
        }
    }

    /// Bring two elements into a common tower.
    pub fn unify(x: &Self, y: &Self) -> (Self, Self) {
        if Arc::ptr_eq(&x.tower, &y.tower) {
            return (x.clone(), y.clone());
        }
        if x.tower.is_prefix_of(&y.tower) {
            return (
                RealAlgebraic {
                    tower: y.tower.clone(),
                    coords: pad_to(&x.coords, y.tower.dim()),
                },
                y.clone(),
            );
        }
        if y.tower.is_prefix_of(&x.tower) {
            return (
                x.clone(),
                RealAlgebraic {
                    tower: x.tower.clone(),
                    coords: pad_to(&y.coords, x.tower.dim()),
                },
            );
        }
        let m = merged(&x.tower, &y.tower);
        let xc = embed(&x.coords, &m.a, &m.tower);
        let yc = embed(&y.coords, &m.b, &m.tower);
        (
            RealAlgebraic {
                tower: m.tower.clone(),
                coords: xc,
            },
            RealAlgebraic {
                tower: m.tower.clone(),
                coords: yc,
            },
        )
    }

    /// Bring a whole slice into one common tower.
    pub fn align(values: &mut [Self]) {
        if values.len() < 2 {
            return;
        }
        let mut acc = values[0].clone();
        for v in values.iter().skip(1) {
            if !Arc::ptr_eq(&acc.tower, &v.tower) {
                acc = Self::unify(&acc, v).0;
            }
        }
        let target = acc.tower;
        for v in values.iter_mut() {
            if !Arc::ptr_eq(&v.tower, &target) {
                *v = v.lift_to(&target);
            }
        }
    }

    pub fn sign(&self) -> i32 {
        sign_at(&self.tower, self.tower.depth(), &self.coords)
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RealAlgebraic {
            tower: self.tower.clone(),
            coords: inv_at(&self.tower, self.tower.depth(), &self.coords),
        })
    }

    /// Positive square root inside the current tower, without extending it.
    pub fn sqrt_in_tower(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let r = sqrt_at(&self.tower, self.tower.depth(), &self.coords)?;
        let r = RealAlgebraic {
            tower: self.tower.clone(),
            coords: r,
        };
        Some(r.abs())
    }

    /// Positive square root of a non-negative element, extending the tower
    /// when the root is not already present.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if let Some(r) = self.sqrt_in_tower() {
            return Some(r);
        }
        if let Some(v) = self.to_rational() {
            let (s, m) = rational::square_split(&v);
            let m = RealAlgebraic::from_rational(Q::from_integer(m));
            let root = m.lift_to(&self.tower).adjoin_root();
            return Some(root * RealAlgebraic::from_rational(s));
        }
        Some(self.adjoin_root())
    }

    fn adjoin_root(&self) -> Self {
        if let Some(r) = self.sqrt_in_tower() {
            return r;
        }
        let tower = self.tower.extend(self.coords.clone());
        let n = tower.dim();
        let mut coords = zeros(n);
        coords[n / 2] = Q::one();
        RealAlgebraic { tower, coords }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RealAlgebraic::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let gens = generator_values(&self.tower);
        eval_f64(&self.coords, &gens)
    }
}

fn generator_values(t: &Tower) -> Vec<f64> {
    let mut vals: Vec<f64> = Vec::with_capacity(t.depth());
    for g in &t.gens {
        let r = eval_f64(g, &vals);
        vals.push(r.max(0.0).sqrt());
    }
    vals
}

fn eval_f64(coords: &[Q], gens: &[f64]) -> f64 {
    coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| {
            let mut m = rational::to_f64(c);
            for (i, g) in gens.iter().enumerate() {
                if idx >> i & 1 == 1 {
                    m *= g;
                }
            }
            m
        })
        .sum()
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.tower, &other.tower) {
            return self.coords == other.coords;
        }
        let (a, b) = Self::unify(self, other);
        a.coords == b.coords
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign().cmp(&0)
    }
}

impl From<Q> for RealAlgebraic {
    fn from(v: Q) -> Self {
        Self::from_rational(v)
    }
}

impl From<i64> for RealAlgebraic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl std::ops::$trait for RealAlgebraic {
            type Output = RealAlgebraic;
            fn $method(self, rhs: RealAlgebraic) -> RealAlgebraic {
                let (a, b) = if Arc::ptr_eq(&self.tower, &rhs.tower) {
                    (self, rhs)
                } else {
                    RealAlgebraic::unify(&self, &rhs)
                };
                let f: fn(&Tower, &[Q], &[Q]) -> Vec<Q> = $body;
                let coords = f(&a.tower, &a.coords, &b.coords);
                RealAlgebraic {
                    tower: a.tower,
                    coords,
                }
            }
        }
        impl<'a> std::ops::$trait<&'a RealAlgebraic> for &'a RealAlgebraic {
            type Output = RealAlgebraic;
            fn $method(self, rhs: &'a RealAlgebraic) -> RealAlgebraic {
                std::ops::$trait::$method(self.clone(), rhs.clone())
            }
        }
    };
}

binop!(Add, add, |_, x, y| add_vec(x, y));
binop!(Sub, sub, |_, x, y| sub_vec(x, y));
binop!(Mul, mul, |t, x, y| mul_at(t, t.depth(), x, y));

impl std::ops::Div for RealAlgebraic {
    type Output = RealAlgebraic;
    fn div(self, rhs: RealAlgebraic) -> RealAlgebraic {
        let inv = rhs
            .checked_inv()
            .expect("division by zero algebraic number");
        std::ops::Mul::mul(self, inv)
    }
}

impl std::ops::Neg for RealAlgebraic {
    type Output = RealAlgebraic;
    fn neg(self) -> RealAlgebraic {
        RealAlgebraic {
            tower: self.tower,
            coords: self.coords.into_iter().map(|v| -v).collect(),
        }
    }
}

fn fmt_rational(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn monomial_name(tower: &Arc<Tower>, idx: usize) -> String {
    let mut parts = Vec::new();
    for i in 0..tower.depth() {
        if idx >> i & 1 == 1 {
            parts.push(format!("sqrt({})", tower.generator_radicand(i)));
        }
    }
    parts.join("*")
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if idx == 0 {
                fmt_rational(&mag)
            } else if mag.is_one() {
                monomial_name(&self.tower, idx)
            } else {
                format!("{}*{}", fmt_rational(&mag), monomial_name(&self.tower, idx))
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else if neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{q, qf};

    fn r(n: i64) -> RealAlgebraic {
        RealAlgebraic::from_int(n)
    }

    #[test]
    fn sqrt2_arith() {
        let s2 = r(2).sqrt().unwrap();
        assert_eq!(s2.clone() * s2.clone(), r(2));
        assert!(s2.is_positive());
        let x = r(3) - r(2) * s2.clone();
        // 3 - 2√2 = (√2 - 1)² > 0
        assert!(x.is_positive());
        assert_eq!((s2.clone() - r(1)).pow(2), x);
        let inv = x.checked_inv().unwrap();
        assert_eq!(inv * x, r(1));
    }

    #[test]
    fn rational_split_on_adjoin() {
        let s12 = r(12).sqrt().unwrap();
        let s3 = r(3).sqrt().unwrap();
        assert_eq!(s12, r(2) * s3);
    }

    #[test]
    fn existing_root_found_in_multiquadratic() {
        let s2 = r(2).sqrt().unwrap();
        let s3 = r(3).sqrt().unwrap();
        let p = s2.clone() * s3.clone();
        let s6 = r(6).lift_to(p.tower()).sqrt_in_tower().unwrap();
        assert_eq!(s6, p);
        assert_eq!(p.tower().depth(), 2);
    }

    #[test]
    fn nested_root_denests() {
        // √(3 + 2√2) = 1 + √2
        let s2 = r(2).sqrt().unwrap();
        let x = r(3) + r(2) * s2.clone();
        let root = x.sqrt().unwrap();
        assert_eq!(root, r(1) + s2.clone());
        assert_eq!(root.tower().depth(), 1);
        // √(3 - 2√2) = √2 - 1 (positive root)
        let y = r(3) - r(2) * s2.clone();
        assert_eq!(y.sqrt().unwrap(), s2 - r(1));
    }

    #[test]
    fn nested_generator() {
        let s2 = r(2).sqrt().unwrap();
        let w = (r(2) + r(2) * s2.clone()).sqrt().unwrap();
        assert_eq!(w.tower().depth(), 2);
        assert_eq!(w.clone() * w.clone(), r(2) + r(2) * s2);
        assert!((w.to_f64() - (2.0 + 2.0 * 2f64.sqrt()).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn merge_independent_towers() {
        let s2 = r(2).sqrt().unwrap();
        let s3 = r(3).sqrt().unwrap();
        let s6 = r(6).sqrt().unwrap();
        // three separately built towers
        assert_eq!(s2.clone() * s3.clone(), s6);
        let sum = s2.clone() + s3.clone() + s6.clone();
        assert!((sum.to_f64() - (2f64.sqrt() + 3f64.sqrt() + 6f64.sqrt())).abs() < 1e-13);
    }

    #[test]
    fn merge_respects_positive_branch() {
        let s8 = r(8).sqrt().unwrap(); // 2√2
        let s2 = r(2).sqrt().unwrap();
        let a = (r(3) + s8).sqrt().unwrap(); // 1 + √2
        assert_eq!(a - s2, r(1));
    }

    #[test]
    fn sign_and_order() {
        let s2 = r(2).sqrt().unwrap();
        let s3 = r(3).sqrt().unwrap();
        assert!(s3 > s2);
        let x = s2.clone() * RealAlgebraic::from(qf(7, 5)) - RealAlgebraic::from(q(2));
        assert_eq!(x.sign(), -1); // 1.979... < 2
        assert!(r(-2).sqrt().is_none());
    }

    #[test]
    fn display_forms() {
        let s2 = r(2).sqrt().unwrap();
        assert_eq!(format!("{}", r(1) - s2.clone()), "1 - sqrt(2)");
        assert_eq!(
            format!("{}", RealAlgebraic::from(qf(-3, 2)) * s2.clone()),
            "-3/2*sqrt(2)"
        );
        let w = (r(2) + r(2) * s2).sqrt().unwrap();
        assert_eq!(format!("{w}"), "sqrt(2 + 2*sqrt(2))");
    }
}
