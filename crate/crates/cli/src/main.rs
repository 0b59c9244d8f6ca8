use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use radix::algebra::{Polynomial, RationalFunction};
use radix::catalog::{compose_moebius, transformation, Transformation, Variant};
use radix::format::{self, SCHEMA_VERSION};
use radix::integrals::{
    eval_word, eval_word_at, partial_fraction_letters, transform_word, Base, IntegralWord, Letter,
    DEFAULT_TOLERANCE,
};
use radix::parser::{parse_constant, parse_rational_function, parse_sum, parse_word};
use radix::radicands::{analyze, CaseTag, RadicandCase, RadicandSet};
use radix::sums::to_generating_function;
use radix::verifier::certify;
use radix::Error;

const EXIT_PARSE: u8 = 1;
const EXIT_NO_TRANSFORMATION: u8 = 2;
const EXIT_INELIGIBLE: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;
const EXIT_DIVERGENCE: u8 = 5;
const EXIT_CHECK_FAILED: u8 = 6;

const CHECK_TOLERANCE: f64 = 1e-8;
const SERIES_TOLERANCE: f64 = 1e-6;

#[derive(Parser)]
#[command(
    name = "radix",
    version,
    about = "Rationalize square roots in nested integrals and sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    General,
    Real01,
    Complex01,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::General => Variant::General,
            VariantArg::Real01 => Variant::RealUnitInterval,
            VariantArg::Complex01 => Variant::ComplexUnitInterval,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify radicands and print a rationalizing transformation.
    Rationalize {
        /// Radicands in `x`, e.g. "x*(1+x)".
        #[arg(required = true)]
        radicands: Vec<String>,
        #[arg(long, value_enum, default_value = "general")]
        variant: VariantArg,
        /// Möbius parameter λ > 0 for unit-interval variants.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Certify the transformation by exact checks.
        #[arg(long)]
        verify: bool,
    },
    /// Apply a rationalizing change of variables to a nested integral.
    TransformIntegral {
        /// Word such as "H[0,{0,-1},{0,-1},{0,1}; base=1]".
        word: String,
        /// Radicands to rationalize; inferred from the letters when omitted.
        #[arg(long, num_args = 1..)]
        radicands: Vec<String>,
        /// Defaults to real01 for base 1 and general for base 0.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Compare both sides numerically at sample points.
        #[arg(long)]
        check: bool,
        /// Split the transformed letters into partial fractions.
        #[arg(long)]
        partial_fractions: bool,
    },
    /// Rewrite the generating function of a nested sum as nested integrals.
    Sum2int {
        /// Sum such as "sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))".
        sum: String,
        /// Compare with the first N terms of the series.
        #[arg(long, value_name = "N")]
        check_series: Option<usize>,
        /// Sample point for the series check.
        #[arg(long, default_value = "1/5")]
        x: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Evaluate a nested integral numerically.
    Eval {
        word: String,
        /// Argument, as an exact constant or a decimal number.
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Target accuracy; defaults to RADIX_PRECISION or 1e-10.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

/// Failure with its exit code; the message goes to stderr.
struct Failure {
    code: u8,
    message: String,
    output: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::Usage(_) | Error::Domain(_) | Error::EndpointRoot(_) => EXIT_INELIGIBLE,
            Error::Unsupported(_) => EXIT_UNSUPPORTED,
            Error::Divergence(_) => EXIT_DIVERGENCE,
            Error::Accuracy { .. } => EXIT_CHECK_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
            output: None,
        }
    }
}

type Outcome = Result<String, Failure>;

fn default_tolerance() -> f64 {
    std::env::var("RADIX_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .map(|v| if v >= 1.0 { 10f64.powf(-v) } else { v })
        .filter(|v| *v > 0.0)
        .unwrap_or(DEFAULT_TOLERANCE)
}

fn parse_point(s: &str) -> Result<Complex64, Failure> {
    if let Ok(v) = s.trim().parse::<f64>() {
        return Ok(Complex64::new(v, 0.0));
    }
    Ok(parse_constant(s)?.to_complex())
}

fn envelope(command: &str, body: Value) -> String {
    let mut v = json!({ "schema": SCHEMA_VERSION, "command": command });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    serde_json::to_string_pretty(&v).expect("serializable")
}

fn parse_radicands(src: &[String]) -> Result<Vec<RationalFunction>, Failure> {
    src.iter()
        .map(|s| parse_rational_function(s).map_err(Failure::from))
        .collect()
}

fn build_transformation(
    case: &RadicandCase,
    variant: Variant,
    lambda: Option<&str>,
) -> Result<Transformation, Failure> {
    let t = transformation(case, variant)?;
    match lambda {
        Some(l) => {
            let l = parse_constant(l)?;
            Ok(compose_moebius(&t, &l)?)
        }
        None => Ok(t),
    }
}

fn no_transformation(set: &RadicandSet, case: &RadicandCase, format: Format) -> Failure {
    let CaseTag::NoTransformation { witness, .. } = &case.tag else {
        unreachable!("called for obstructed cases only");
    };
    let output = match format {
        Format::Json => envelope(
            "rationalize",
            json!({
                "radicands": format::radicand_set_json(set),
                "case": format::case_json(case),
                "transformation": null,
            }),
        ),
        _ => format!("case: NoTransformation\nwitness: {}", witness.display("x")),
    };
    Failure {
        code: EXIT_NO_TRANSFORMATION,
        message: format!(
            "no rationalizing transformation exists: {} is squarefree of degree {}",
            witness.display("x"),
            witness.degree()
        ),
        output: Some(output),
    }
}

fn plain_transformation(t: &Transformation) -> Vec<String> {
    let mut lines = vec![
        format!("family: {}", t.family.name()),
        format!("variant: {}", t.variant),
        format!("g(y) = {}", t.g.display("y")),
        format!("inverse: y = {}", t.inverse.display("x")),
    ];
    for d in t.inverse.symbol_definitions("x") {
        lines.push(format!("  {d}"));
    }
    if let Some(alt) = &t.alternate_inverse {
        lines.push(format!("alternate inverse: y = {}", alt.display("x")));
        for d in alt.symbol_definitions("x") {
            lines.push(format!("  {d}"));
        }
    }
    for (n, v) in &t.constants {
        lines.push(format!("constant {n} = {v}"));
    }
    for i in &t.images {
        lines.push(format!(
            "sqrt({}) = {}",
            i.radicand.display("x"),
            i.image.display("y")
        ));
    }
    if let Some(l) = &t.lambda {
        lines.push(format!("lambda = {l}"));
    }
    lines.push(format!("validity: {}", t.validity));
    lines
}

fn cmd_rationalize(
    radicands: &[String],
    variant: Variant,
    lambda: Option<&str>,
    format: Format,
    verify: bool,
) -> Outcome {
    let fs = parse_radicands(radicands)?;
    let (set, case) = analyze(&fs)?;
    if matches!(case.tag, CaseTag::NoTransformation { .. }) {
        return Err(no_transformation(&set, &case, format));
    }
    if case.tag == CaseTag::Empty {
        return Ok(match format {
            Format::Json => envelope(
                "rationalize",
                json!({
                    "radicands": format::radicand_set_json(&set),
                    "case": format::case_json(&case),
                    "transformation": format::ratfun_json(&RationalFunction::x(), "y"),
                }),
            ),
            Format::Latex => "x = y".to_string(),
            Format::Plain => {
                "case: Empty\nall radicands are squares; the identity x = y rationalizes them"
                    .into()
            }
        });
    }
    let t = build_transformation(&case, variant, lambda)?;
    let cert = verify.then(|| certify(&t, &set));
    let out = match format {
        Format::Json => envelope(
            "rationalize",
            json!({
                "radicands": format::radicand_set_json(&set),
                "case": format::case_json(&case),
                "transformation": format::transformation_json(&t),
                "certificate": cert,
            }),
        ),
        Format::Latex => format::transformation_latex(&t),
        Format::Plain => {
            let mut lines = vec![
                format!("case: {}", format::case_text(&case.tag)),
                format!(
                    "reduced radicands: {}",
                    set.reduced
                        .iter()
                        .map(|p| p.display("x"))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            ];
            lines.extend(plain_transformation(&t));
            if let Some(c) = &cert {
                lines.push(format!(
                    "verification: {}",
                    if c.pass { "pass" } else { "FAIL" }
                ));
                lines.push(format!("  rationalizes: {}", c.rationalizes.pass));
                lines.push(format!(
                    "  inverse: {} (residual {})",
                    c.inverse.pass, c.inverse.residual
                ));
                for cl in &c.clauses {
                    lines.push(format!("  {}: {} {}", cl.name, cl.pass, cl.detail));
                }
                if let Some(b) = &c.bijection {
                    lines.push(format!("  bijection on [0,1]: {}", b.pass));
                }
            }
            lines.join("\n")
        }
    };
    match cert {
        Some(c) if !c.pass => Err(Failure {
            code: EXIT_CHECK_FAILED,
            message: "verification failed".into(),
            output: Some(out),
        }),
        _ => Ok(out),
    }
}

/// `∏ (x - a)` over the square-root points of each letter.
fn radicands_of(w: &IntegralWord) -> Vec<RationalFunction> {
    let mut out: Vec<RationalFunction> = Vec::new();
    for l in &w.letters {
        let pts = match l {
            Letter::SqrtSet(s) | Letter::RatTimesSqrt(_, s) | Letter::PowerTimesSqrt(s, _) => s,
            _ => continue,
        };
        let p = pts.iter().fold(Polynomial::one(), |acc, a| {
            acc.mul(&Polynomial::linear_root(a))
        });
        let f = RationalFunction::from_poly(p);
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

const SAMPLES: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

#[allow(clippy::too_many_arguments)]
fn cmd_transform(
    word: &str,
    radicands: &[String],
    variant: Option<Variant>,
    lambda: Option<&str>,
    format: Format,
    check: bool,
    partial: bool,
) -> Outcome {
    let w = parse_word(word)?;
    let fs = if radicands.is_empty() {
        radicands_of(&w)
    } else {
        parse_radicands(radicands)?
    };
    let variant = variant.unwrap_or(match w.base {
        Base::One => Variant::RealUnitInterval,
        Base::Zero => Variant::General,
    });
    let (out, t) = if fs.is_empty() {
        (w.clone(), None)
    } else {
        let (set, case) = analyze(&fs)?;
        if matches!(case.tag, CaseTag::NoTransformation { .. }) {
            return Err(no_transformation(&set, &case, format));
        }
        if case.tag == CaseTag::Empty {
            (w.clone(), None)
        } else {
            let t = build_transformation(&case, variant, lambda)?;
            (transform_word(&w, &t)?, Some(t))
        }
    };
    let split = if partial {
        Some(partial_fraction_letters(&out)?)
    } else {
        None
    };
    let mut report = Vec::new();
    let mut ok = true;
    if check {
        let tol = default_tolerance();
        for x in SAMPLES {
            let lhs = eval_word(&w, x, tol)?;
            let y = t.as_ref().map_or(Complex64::new(x, 0.0), |t| {
                t.eval_inverse(Complex64::new(x, 0.0))
            });
            let rhs = eval_word_at(&out, y, tol)?;
            let diff = (rhs - lhs).norm();
            ok &= diff < CHECK_TOLERANCE;
            report.push((x, y, lhs, rhs.re, diff));
        }
    }
    let text = match format {
        Format::Json => envelope(
            "transform-integral",
            json!({
                "input": format::word_json(&w),
                "transformation": t.as_ref().map(format::transformation_json),
                "output": format::word_json(&out),
                "partial_fractions": split.as_ref().map(|s| s.letters.iter().map(|l| match l {
                    Letter::Generic(g) => json!({
                        "letter": l.to_string(),
                        "poles": g.decomposition.as_ref().map(|d| d.poles.iter().map(|p| json!({
                            "pole": p.pole.to_string(),
                            "coefficient": p.coefficient.to_string(),
                        })).collect::<Vec<_>>()),
                        "polynomial": g.decomposition.as_ref().map(|d| d.polynomial.display("t")),
                        "remainder": g.decomposition.as_ref().map(|d| d.remainder.display("t")),
                    }),
                    other => json!({ "letter": other.to_string() }),
                }).collect::<Vec<_>>()),
                "check": check.then(|| json!({
                    "pass": ok,
                    "tolerance": CHECK_TOLERANCE,
                    "samples": report.iter().map(|(x, y, l, r, d)| json!({
                        "x": x, "y": { "re": y.re, "im": y.im }, "original": l, "transformed": r, "difference": d,
                    })).collect::<Vec<_>>(),
                })),
            }),
        ),
        Format::Latex => out.latex(),
        Format::Plain => {
            let mut lines = Vec::new();
            if let Some(t) = &t {
                lines.push(format!("g(y) = {}", t.g.display("y")));
            }
            lines.push(out.to_string());
            if let Some(s) = &split {
                lines.push("partial fractions:".into());
                for l in &s.letters {
                    if let Letter::Generic(g) = l {
                        if let Some(d) = &g.decomposition {
                            let mut parts: Vec<String> = d
                                .poles
                                .iter()
                                .map(|p| format!("({})/(t - ({}))", p.coefficient, p.pole))
                                .collect();
                            if !d.polynomial.is_zero() {
                                parts.push(d.polynomial.display("t"));
                            }
                            if !d.remainder.is_zero() {
                                parts.push(d.remainder.display("t"));
                            }
                            lines.push(format!("  {l} = {}", parts.join(" + ")));
                            continue;
                        }
                    }
                    lines.push(format!("  {l}"));
                }
                if !s.prefactor.is_one() || s.letters.iter().any(|l| matches!(l, Letter::Rat(_))) {
                    lines.push(format!("  word: {s}"));
                }
            }
            for (x, y, l, r, d) in &report {
                lines.push(format!("check x = {x}: y = {}, original {l:.12}, transformed {r:.12}, difference {d:.2e}", complex_text(*y)));
            }
            if check {
                lines.push(format!("check: {}", if ok { "pass" } else { "FAIL" }));
            }
            lines.join("\n")
        }
    };
    if ok {
        Ok(text)
    } else {
        Err(Failure {
            code: EXIT_CHECK_FAILED,
            message: "numeric check failed".into(),
            output: Some(text),
        })
    }
}

fn complex_text(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.12}", z.re)
    } else {
        format!("{:.12} {:+.12}i", z.re, z.im)
    }
}

fn cmd_sum2int(sum: &str, check: Option<usize>, x: &str, format: Format) -> Outcome {
    let s = parse_sum(sum)?;
    let gf = to_generating_function(&s)?;
    let mut series = None;
    if let Some(n) = check {
        let xv = parse_point(x)?;
        if xv.im != 0.0 {
            return Err(Error::Domain("the series check needs a real sample point".into()).into());
        }
        let direct = s.eval_series(xv.re, n);
        let value = gf.eval(xv, default_tolerance())?;
        let diff = (direct - value).norm();
        series = Some((xv.re, n, direct, value, diff));
    }
    let ok = series.as_ref().is_none_or(|s| s.4 < SERIES_TOLERANCE);
    let text = match format {
        Format::Json => envelope(
            "sum2int",
            json!({
                "input": s.to_string(),
                "output": format::generating_function_json(&gf),
                "series_check": series.map(|(x, n, d, v, diff)| json!({
                    "x": x, "terms": n, "direct": d.re, "integrals": v.re,
                    "difference": diff, "tolerance": SERIES_TOLERANCE, "pass": ok,
                })),
            }),
        ),
        Format::Latex => gf.latex(),
        Format::Plain => {
            let mut lines = vec![gf.to_string()];
            if let Some((x, n, d, v, diff)) = series {
                lines.push(format!(
                    "series check x = {x}, {n} terms: direct {:.12}, integrals {:.12}, difference {diff:.2e}: {}",
                    d.re,
                    v.re,
                    if ok { "pass" } else { "FAIL" }
                ));
            }
            lines.join("\n")
        }
    };
    if ok {
        Ok(text)
    } else {
        Err(Failure {
            code: EXIT_CHECK_FAILED,
            message: "series check failed".into(),
            output: Some(text),
        })
    }
}

fn cmd_eval(word: &str, x: &str, tol: Option<f64>, format: Format) -> Outcome {
    let w = parse_word(word)?;
    let z = parse_point(x)?;
    let tol = tol.unwrap_or_else(default_tolerance);
    let v = eval_word_at(&w, z, tol)?;
    let real = v.im.abs() <= tol * v.norm().max(1.0);
    Ok(match format {
        Format::Json => envelope(
            "eval",
            json!({
                "word": format::word_json(&w),
                "x": { "re": z.re, "im": z.im },
                "tolerance": tol,
                "value": { "re": v.re, "im": if real { 0.0 } else { v.im } },
            }),
        ),
        Format::Latex => {
            if real {
                format!("{} = {:.10}", w.latex(), v.re)
            } else {
                format!("{} = {:.10} {:+.10} i", w.latex(), v.re, v.im)
            }
        }
        Format::Plain => {
            if real {
                format!("{:.10}", v.re)
            } else {
                format!("{:.10} {:+.10}i", v.re, v.im)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Rationalize {
            radicands,
            variant,
            lambda,
            format,
            verify,
        } => cmd_rationalize(
            radicands,
            (*variant).into(),
            lambda.as_deref(),
            *format,
            *verify,
        ),
        Command::TransformIntegral {
            word,
            radicands,
            variant,
            lambda,
            format,
            check,
            partial_fractions,
        } => cmd_transform(
            word,
            radicands,
            variant.map(Variant::from),
            lambda.as_deref(),
            *format,
            *check,
            *partial_fractions,
        ),
        Command::Sum2int {
            sum,
            check_series,
            x,
            format,
        } => cmd_sum2int(sum, *check_series, x, *format),
        Command::Eval {
            word,
            x,
            tol,
            format,
        } => cmd_eval(word, x, *tol, *format),
    };
    match result {
        Ok(out) => {
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.output {
                let _ = writeln!(std::io::stdout(), "{out}");
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
