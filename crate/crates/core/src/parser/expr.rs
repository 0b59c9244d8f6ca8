//! Arithmetic expressions over exact constants and one variable.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::lexer::{parse_error, Cursor, Tok};
use crate::algebra::{AlgebraicNumber, Polynomial, RationalFunction, Q};
use crate::error::Result;

type C = AlgebraicNumber;

/// Source position of a node, used for evaluation errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Var(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i64, Pos),
    Sqrt(Box<Expr>, Pos),
}

fn pos_of(c: &Cursor) -> Pos {
    let t = c.token();
    Pos {
        line: t.line,
        column: t.column,
    }
}

/// Parse a full expression from the cursor (stops before an unknown token).
pub fn parse_expr_at(c: &mut Cursor) -> Result<Expr> {
    let mut lhs = parse_term(c)?;
    loop {
        match c.peek() {
            Tok::Plus => {
                c.advance();
                let rhs = parse_term(c)?;
                lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
            }
            Tok::Minus => {
                c.advance();
                let rhs = parse_term(c)?;
                lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
            }
            _ => return Ok(lhs),
        }
    }
}

fn parse_term(c: &mut Cursor) -> Result<Expr> {
    let mut lhs = parse_unary(c)?;
    loop {
        match c.peek() {
            Tok::Star => {
                c.advance();
                let rhs = parse_unary(c)?;
                lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
            }
            Tok::Slash => {
                c.advance();
                let p = pos_of(c);
                let rhs = parse_unary(c)?;
                lhs = Expr::Div(Box::new(lhs), Box::new(rhs), p);
            }
            Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
                return c.error("implicit multiplication is not allowed; use '*'");
            }
            _ => return Ok(lhs),
        }
    }
}

pub(crate) fn parse_unary(c: &mut Cursor) -> Result<Expr> {
    if c.eat(&Tok::Minus) {
        return Ok(Expr::Neg(Box::new(parse_unary(c)?)));
    }
    if c.eat(&Tok::Plus) {
        return parse_unary(c);
    }
    parse_power(c)
}

fn parse_int_exponent(c: &mut Cursor) -> Result<i64> {
    let paren = c.eat(&Tok::LParen);
    let neg = c.eat(&Tok::Minus);
    let v = match c.advance() {
        Tok::Int(n) => match i64::try_from(&n) {
            Ok(v) if v <= 64 => v,
            _ => return c.error("exponent is too large"),
        },
        other => {
            return c.error(format!(
                "exponent must be an integer literal, found {}",
                other.describe()
            ))
        }
    };
    if paren {
        c.expect(&Tok::RParen)?;
    }
    Ok(if neg { -v } else { v })
}

fn parse_power(c: &mut Cursor) -> Result<Expr> {
    let base = parse_atom(c)?;
    if *c.peek() == Tok::Caret {
        c.advance();
        let p = pos_of(c);
        let e = parse_int_exponent(c)?;
        return Ok(Expr::Pow(Box::new(base), e, p));
    }
    Ok(base)
}

fn parse_atom(c: &mut Cursor) -> Result<Expr> {
    let p = pos_of(c);
    match c.advance() {
        Tok::Int(n) => Ok(Expr::Num(n)),
        Tok::LParen => {
            let e = parse_expr_at(c)?;
            c.expect(&Tok::RParen)?;
            Ok(e)
        }
        Tok::Ident(name) => {
            if name == "sqrt" {
                c.expect(&Tok::LParen)?;
                let e = parse_expr_at(c)?;
                c.expect(&Tok::RParen)?;
                return Ok(Expr::Sqrt(Box::new(e), p));
            }
            if *c.peek() == Tok::LParen {
                return parse_error(p.line, p.column, format!("unknown function '{name}'"));
            }
            Ok(Expr::Var(name, p))
        }
        other => parse_error(
            p.line,
            p.column,
            format!("expected an expression, found {}", other.describe()),
        ),
    }
}

/// Parse a complete expression.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut c = Cursor::new(src)?;
    let e = parse_expr_at(&mut c)?;
    c.expect_end()?;
    Ok(e)
}

/// Evaluation context: named constants and the (single) free variable.
#[derive(Default, Clone)]
pub struct Env {
    pub bindings: HashMap<String, C>,
    pub var: Option<String>,
}

impl Env {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, name: &str, value: C) -> Self {
        self.bindings.insert(name.to_string(), value);
        self
    }

    /// Fix the variable name in advance; other free identifiers are errors.
    pub fn with_var(mut self, name: &str) -> Self {
        self.var = Some(name.to_string());
        self
    }
}

impl Expr {
    /// Evaluate to a rational function in the single free variable.
    pub fn to_rational_function(&self, env: &mut Env) -> Result<RationalFunction> {
        match self {
            Expr::Num(n) => Ok(RationalFunction::from_rational(Q::from_integer(n.clone()))),
            Expr::Var(name, p) => {
                if let Some(v) = env.bindings.get(name) {
                    return Ok(RationalFunction::constant(v.clone()));
                }
                if name == "i" {
                    return Ok(RationalFunction::constant(C::i()));
                }
                match &env.var {
                    Some(v) if v == name => Ok(RationalFunction::x()),
                    Some(v) => parse_error(
                        p.line,
                        p.column,
                        format!("unexpected identifier '{name}' (the variable is '{v}')"),
                    ),
                    None => {
                        env.var = Some(name.clone());
                        Ok(RationalFunction::x())
                    }
                }
            }
            Expr::Neg(a) => Ok(a.to_rational_function(env)?.neg()),
            Expr::Add(a, b) => Ok(a
                .to_rational_function(env)?
                .add(&b.to_rational_function(env)?)),
            Expr::Sub(a, b) => Ok(a
                .to_rational_function(env)?
                .sub(&b.to_rational_function(env)?)),
            Expr::Mul(a, b) => Ok(a
                .to_rational_function(env)?
                .mul(&b.to_rational_function(env)?)),
            Expr::Div(a, b, p) => {
                let n = a.to_rational_function(env)?;
                let d = b.to_rational_function(env)?;
                if d.is_zero() {
                    return parse_error(p.line, p.column, "division by zero");
                }
                Ok(n.div(&d).expect("non-zero divisor"))
            }
            Expr::Pow(a, e, p) => {
                let b = a.to_rational_function(env)?;
                if *e < 0 && b.is_zero() {
                    return parse_error(p.line, p.column, "negative power of zero");
                }
                Ok(b.pow(*e as i32).expect("non-zero base"))
            }
            Expr::Sqrt(a, p) => {
                let v = a.to_rational_function(env)?;
                match v.as_constant() {
                    Some(c) => Ok(RationalFunction::constant(c.sqrt())),
                    None => parse_error(
                        p.line,
                        p.column,
                        "sqrt is only allowed on constants; give radicands without sqrt",
                    ),
                }
            }
        }
    }

    /// Evaluate to a constant; free identifiers are errors.
    pub fn to_constant(&self, env: &Env) -> Result<C> {
        let mut env = env.clone();
        let probe = "\u{0}";
        env.var = Some(probe.to_string());
        let f = self.to_rational_function(&mut env)?;
        match f.as_constant() {
            Some(c) => Ok(c),
            None => unreachable!("probe variable never appears in source"),
        }
    }
}

/// Parse a rational function in one variable (named freely).
pub fn parse_rational_function(src: &str) -> Result<RationalFunction> {
    parse_rational_function_with(src, &mut Env::new())
}

pub fn parse_rational_function_with(src: &str, env: &mut Env) -> Result<RationalFunction> {
    parse_expr(src)?.to_rational_function(env)
}

/// Parse a polynomial; rational functions with non-constant denominators are
/// rejected.
pub fn parse_polynomial(src: &str) -> Result<Polynomial> {
    let f = parse_rational_function(src)?;
    if !f.is_polynomial() {
        return parse_error(1, 1, "expected a polynomial");
    }
    Ok(f.num()
        .scale(&f.den().leading().checked_inv().expect("non-zero")))
}

/// Parse an exact constant (integers, fractions, sqrt, i, bound names).
pub fn parse_constant(src: &str) -> Result<C> {
    parse_constant_with(src, &Env::new())
}

pub fn parse_constant_with(src: &str, env: &Env) -> Result<C> {
    parse_expr(src)?.to_constant(env)
}
