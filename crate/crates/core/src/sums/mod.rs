//! Nested sums over a fixed prefactor alphabet, their generating functions
//! by rewrite rules, and Mellin representations as symbolic data.

mod mellin;
mod rules;

use std::fmt;

use num_complex::Complex64;

use crate::algebra::AlgebraicNumber;

pub use mellin::{mellin_sum_rule, MellinIntegrand, MellinRep, MellinTerm};
pub use rules::{
    all_rewrites, apply_rule, to_generating_function, Alg, GeneratingFunction, GfExpr, Node, Rule,
    Term,
};

type C = AlgebraicNumber;

/// `base^k · k^power · binom(2k,k)^binom · (2k+1)^odd · δ_{1,k}^[delta]`
/// as a function of the summation index `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Prefactor {
    pub base: C,
    pub power: i32,
    pub binom: i32,
    pub odd: i32,
    pub delta: bool,
}

impl Default for Prefactor {
    fn default() -> Self {
        Self::one()
    }
}

impl Prefactor {
    pub fn one() -> Self {
        Prefactor {
            base: C::one(),
            power: 0,
            binom: 0,
            odd: 0,
            delta: false,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn with_power(mut self, e: i32) -> Self {
        self.power += e;
        self
    }

    pub fn with_binom(mut self, e: i32) -> Self {
        self.binom += e;
        self
    }

    pub fn with_odd(mut self, e: i32) -> Self {
        self.odd += e;
        self
    }

    pub fn with_base(mut self, b: C) -> Self {
        self.base = &self.base * &b;
        self
    }

    pub fn with_delta(mut self) -> Self {
        self.delta = true;
        self
    }

    pub fn mul(&self, o: &Self) -> Self {
        Prefactor {
            base: &self.base * &o.base,
            power: self.power + o.power,
            binom: self.binom + o.binom,
            odd: self.odd + o.odd,
            delta: self.delta || o.delta,
        }
    }

    /// Reciprocal; `None` when a Kronecker delta would be inverted.
    pub fn inv(&self) -> Option<Self> {
        if self.delta {
            return None;
        }
        Some(Prefactor {
            base: self.base.checked_inv()?,
            power: -self.power,
            binom: -self.binom,
            odd: -self.odd,
            delta: false,
        })
    }

    /// Exact value at `k = 1`.
    pub fn at_one(&self) -> C {
        let pw = |b: i64, e: i32| {
            let v = C::from_int(b).pow(e.unsigned_abs());
            if e < 0 {
                v.checked_inv().expect("non-zero")
            } else {
                v
            }
        };
        &(&self.base * &pw(2, self.binom)) * &pw(3, self.odd)
    }

    /// Numeric value at `k ≥ 1`, given `binom(2k,k)`.
    fn eval(&self, k: u64, binom: f64, base: Complex64) -> Complex64 {
        if self.delta && k != 1 {
            return Complex64::new(0.0, 0.0);
        }
        let kf = k as f64;
        let mut v = base.powu(k as u32);
        v *= kf.powi(self.power) * binom.powi(self.binom) * (2.0 * kf + 1.0).powi(self.odd);
        v
    }

    fn display(&self, var: &str) -> Vec<String> {
        let mut num = Vec::new();
        let mut den = Vec::new();
        if !self.base.is_one() {
            let b = self.base.to_string();
            if b.chars().all(|c| c.is_ascii_digit()) {
                num.push(format!("{b}^{var}"));
            } else {
                num.push(format!("({})^{var}", b.replace(' ', "")));
            }
        }
        let pow = |name: String, e: i32| {
            if e.abs() == 1 {
                name
            } else {
                format!("{name}^{}", e.abs())
            }
        };
        let atoms = [
            (var.to_string(), self.power),
            (format!("binom(2{var},{var})"), self.binom),
            (format!("(2{var}+1)"), self.odd),
        ];
        for (name, e) in atoms {
            if e > 0 {
                num.push(pow(name, e));
            } else if e < 0 {
                den.push(pow(name, e));
            }
        }
        if self.delta {
            num.push(format!("delta(1,{var})"));
        }
        if !den.is_empty() {
            num.push(format!("inv({})", den.join("*")));
        }
        num
    }
}

/// One summation layer: `Σ_{k=1}^{upper} prefactor(k) · inner(k)`, where
/// a missing inner layer stands for the constant one.
#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub prefactor: Prefactor,
    pub inner: Option<Box<Layer>>,
}

/// Canonical index name of the layer at the given depth.
pub fn index_name(depth: usize) -> String {
    const NAMES: [&str; 6] = ["n", "i", "j", "k", "l", "m"];
    NAMES
        .get(depth)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("i{depth}"))
}

impl Layer {
    pub fn new(prefactor: Prefactor, inner: Option<Layer>) -> Self {
        Layer {
            prefactor,
            inner: inner.map(Box::new),
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.inner.as_ref().map_or(0, |l| l.depth())
    }

    /// Exact value of the inner sum of this layer at upper limit one.
    pub fn sum_at_one(&self) -> C {
        let inner = self.inner.as_ref().map_or(C::one(), |l| l.sum_at_one());
        &self.prefactor.at_one() * &inner
    }

    /// `Σ_{k=1}^{n} prefactor(k)·inner(k)` for `n = 1..=terms`, index `n-1`.
    fn partial_sums(&self, terms: usize) -> Vec<Complex64> {
        let inner = match &self.inner {
            Some(l) => l.partial_sums(terms),
            None => vec![Complex64::new(1.0, 0.0); terms],
        };
        let base = self.prefactor.base.to_complex();
        let mut out = Vec::with_capacity(terms);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut binom = 1.0;
        for k in 1..=terms {
            binom *= (4 * k - 2) as f64 / k as f64;
            acc += self.prefactor.eval(k as u64, binom, base) * inner[k - 1];
            out.push(acc);
        }
        out
    }

    fn display_factors(&self, depth: usize) -> Vec<String> {
        let mut parts = self.prefactor.display(&index_name(depth));
        if let Some(l) = &self.inner {
            parts.push(format!("S({})", l.display_inner(depth + 1)));
        }
        parts
    }

    fn display_inner(&self, depth: usize) -> String {
        let parts = self.display_factors(depth);
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" * ")
        }
    }
}

/// `Σ_{n≥1} xⁿ · outer`, with nested inner sums.
#[derive(Clone, Debug, PartialEq)]
pub struct SumExpr {
    pub outer: Layer,
}

impl SumExpr {
    pub fn new(outer: Layer) -> Self {
        SumExpr { outer }
    }

    pub fn depth(&self) -> usize {
        self.outer.depth()
    }

    /// Direct summation of the first `terms` terms of the series.
    pub fn eval_series(&self, x: f64, terms: usize) -> Complex64 {
        let inner = match &self.outer.inner {
            Some(l) => l.partial_sums(terms),
            None => vec![Complex64::new(1.0, 0.0); terms],
        };
        let base = self.outer.prefactor.base.to_complex();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut binom = 1.0;
        let mut xn = 1.0;
        for n in 1..=terms {
            binom *= (4 * n - 2) as f64 / n as f64;
            xn *= x;
            acc += self.outer.prefactor.eval(n as u64, binom, base) * inner[n - 1] * xn;
        }
        acc
    }
}

impl fmt::Display for SumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum(x^n")?;
        for p in self.outer.display_factors(0) {
            write!(f, " * {p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests;
