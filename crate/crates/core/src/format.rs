//! JSON and LaTeX renderings shared by the command-line front end.

use serde_json::{json, Value};

use crate::algebra::{Polynomial, RationalFunction};
use crate::catalog::Transformation;
use crate::integrals::{Base, IntegralWord, Letter, WordCombination};
use crate::radicands::{CaseTag, RadicandCase, RadicandSet};
use crate::sqrt_expr::SqrtExpression;
use crate::sums::GeneratingFunction;

/// Version of the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

fn coefficients(p: &Polynomial) -> Value {
    Value::from(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

pub fn ratfun_json(f: &RationalFunction, var: &str) -> Value {
    json!({
        "text": f.display(var),
        "numerator": coefficients(f.num()),
        "denominator": coefficients(f.den()),
    })
}

pub fn sqrt_expr_json(e: &SqrtExpression, var: &str) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(mask, f)| {
            let symbols: Vec<String> = (0..e.symbols().len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| format!("r{}", i + 1))
                .collect();
            json!({ "symbols": symbols, "coefficient": f.display(var) })
        })
        .collect();
    json!({
        "text": e.display(var),
        "symbols": e.symbol_definitions(var),
        "terms": terms,
    })
}

pub fn case_json(case: &RadicandCase) -> Value {
    let params: serde_json::Map<String, Value> = case
        .tag
        .parameters()
        .into_iter()
        .map(|(k, v)| (k.to_string(), Value::from(v)))
        .collect();
    json!({
        "tag": case.tag.name(),
        "parameters": params,
        "real01": case.real,
        "complex01": case.complex,
    })
}

pub fn radicand_set_json(set: &RadicandSet) -> Value {
    json!({
        "originals": set.originals.iter().map(|f| f.display("x")).collect::<Vec<_>>(),
        "reduced": set.reduced.iter().map(|p| p.display("x")).collect::<Vec<_>>(),
    })
}

pub fn transformation_json(t: &Transformation) -> Value {
    json!({
        "family": t.family.name(),
        "variant": t.variant.name(),
        "case": t.case.name(),
        "degree": t.degree(),
        "constants": t.constants.iter().map(|(n, v)| json!({"name": n, "value": v.to_string()})).collect::<Vec<_>>(),
        "g": ratfun_json(&t.g, "y"),
        "inverse": sqrt_expr_json(&t.inverse, "x"),
        "alternate_inverse": t.alternate_inverse.as_ref().map(|e| sqrt_expr_json(e, "x")),
        "images": t.images.iter().map(|i| json!({
            "radicand": i.radicand.display("x"),
            "image": ratfun_json(&i.image, "y"),
        })).collect::<Vec<_>>(),
        "validity": t.validity,
        "lambda": t.lambda.as_ref().map(|l| l.to_string()),
    })
}

fn base_digit(b: Base) -> u8 {
    b.digit()
}

pub fn letter_json(l: &Letter) -> Value {
    let pts =
        |s: &[crate::algebra::AlgebraicNumber]| s.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    match l {
        Letter::Rat(a) => json!({"kind": "rat", "pole": a.to_string()}),
        Letter::SqrtSet(s) => json!({"kind": "sqrt_set", "points": pts(s)}),
        Letter::RatTimesSqrt(a, s) => {
            json!({"kind": "rat_times_sqrt", "pole": a.to_string(), "points": pts(s)})
        }
        Letter::PowerTimesSqrt(s, j) => {
            json!({"kind": "power_times_sqrt", "points": pts(s), "power": j})
        }
        Letter::Generic(g) => json!({
            "kind": "rational",
            "numerator": g.f.num().display("t"),
            "denominator": g.f.den().display("t"),
        }),
    }
}

pub fn word_json(w: &IntegralWord) -> Value {
    json!({
        "text": w.to_string(),
        "base": base_digit(w.base),
        "prefactor": w.prefactor.to_string(),
        "letters": w.letters.iter().map(letter_json).collect::<Vec<_>>(),
    })
}

pub fn combination_json(c: &WordCombination) -> Value {
    json!({
        "text": c.to_string(),
        "terms": c.terms().iter().map(|(k, w)| json!({
            "coefficient": k.to_string(),
            "word": word_json(w),
        })).collect::<Vec<_>>(),
    })
}

pub fn generating_function_json(g: &GeneratingFunction) -> Value {
    json!({
        "text": g.to_string(),
        "terms": g.terms.iter().map(|t| json!({
            "coefficient": t.coefficient.to_string(),
            "prefactor": t.alg.to_string(),
            "word": word_json(&IntegralWord::new(t.letters.clone(), Base::Zero)),
        })).collect::<Vec<_>>(),
    })
}

/// Convert the plain text syntax of expressions to LaTeX.
pub fn latex_text(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i..].starts_with(&['s', 'q', 'r', 't', '(']) {
            let mut depth = 0;
            let mut j = i + 4;
            while j < chars.len() {
                match chars[j] {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    _ => {}
                }
                j += 1;
            }
            let inner: String = chars[i + 5..j.min(chars.len())].iter().collect();
            out.push_str(&format!("\\sqrt{{{}}}", latex_text(&inner)));
            i = j + 1;
            continue;
        }
        match chars[i] {
            '*' => out.push_str(" \\, "),
            '^' => {
                let mut j = i + 1;
                while j < chars.len()
                    && (chars[j].is_ascii_digit() || (j == i + 1 && chars[j] == '-'))
                {
                    j += 1;
                }
                let e: String = chars[i + 1..j].iter().collect();
                out.push_str(&format!("^{{{e}}}"));
                i = j;
                continue;
            }
            c => out.push(c),
        }
        i += 1;
    }
    out
}

pub fn ratfun_latex(f: &RationalFunction, var: &str) -> String {
    if f.den().is_constant() {
        latex_text(&f.display(var))
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            latex_text(&f.num().display(var)),
            latex_text(&f.den().display(var))
        )
    }
}

pub fn transformation_latex(t: &Transformation) -> String {
    let mut lines = vec![format!("x = g(y) = {}", ratfun_latex(&t.g, "y"))];
    let mut inv = latex_text(&t.inverse.display("x"));
    for (k, d) in t.inverse.symbol_definitions("x").iter().enumerate() {
        let r = format!("r{}", k + 1);
        let rad = d.split_once(" = ").map(|(_, v)| v).unwrap_or(d);
        inv = inv.replace(&r, &latex_text(rad));
    }
    lines.push(format!("y = g^{{-1}}(x) = {inv}"));
    for i in &t.images {
        lines.push(format!(
            "\\sqrt{{{}}} = {}",
            latex_text(&i.radicand.display("x")),
            ratfun_latex(&i.image, "y")
        ));
    }
    lines.join(" \\\\\n")
}

/// Human-readable description of a classification tag.
pub fn case_text(tag: &CaseTag) -> String {
    let params: Vec<String> = tag
        .parameters()
        .into_iter()
        .map(|(k, v)| format!("{k} = {v}"))
        .collect();
    if params.is_empty() {
        tag.name().to_string()
    } else {
        format!("{} ({})", tag.name(), params.join(", "))
    }
}
