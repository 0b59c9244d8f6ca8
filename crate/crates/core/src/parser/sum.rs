//! `sum(x^n * f(n) * S(g(i) * S(…)))` nested-sum syntax.

use num_bigint::BigInt;

use super::expr::{parse_expr_at, Env};
use super::lexer::{Cursor, Tok};
use crate::error::Result;
use crate::sums::{Layer, Prefactor, SumExpr};

fn int_exponent(c: &mut Cursor) -> Result<i32> {
    if !c.eat(&Tok::Caret) {
        return Ok(1);
    }
    match c.advance() {
        Tok::Int(n) => match i32::try_from(&n) {
            Ok(v) if v <= 64 => Ok(v),
            _ => c.error("exponent is too large"),
        },
        other => c.error(format!(
            "expected an integer exponent, found {}",
            other.describe()
        )),
    }
}

fn is_ident(c: &Cursor, k: usize, name: &str) -> bool {
    matches!(c.peek_at(k), Tok::Ident(s) if s == name)
}

fn expect_var(c: &mut Cursor, var: &str) -> Result<()> {
    c.expect_ident(var)
}

/// `2n` or `2*n`.
fn two_var(c: &mut Cursor, var: &str) -> Result<()> {
    c.expect(&Tok::Int(BigInt::from(2)))?;
    c.eat(&Tok::Star);
    expect_var(c, var)
}

fn pow(p: Prefactor, e: i32) -> Option<Prefactor> {
    let mut out = Prefactor::one();
    let base = if e < 0 { p.inv()? } else { p };
    for _ in 0..e.unsigned_abs() {
        out = out.mul(&base);
    }
    Some(out)
}

/// An atom of the prefactor alphabet in the index `var`.
fn atom(c: &mut Cursor, var: &str) -> Result<Prefactor> {
    let start = c.position();
    let p = match c.peek().clone() {
        Tok::Ident(s) if s == var => {
            c.advance();
            Prefactor::one().with_power(1)
        }
        Tok::Ident(s) if s == "binom" => {
            c.advance();
            c.expect(&Tok::LParen)?;
            two_var(c, var)?;
            c.expect(&Tok::Comma)?;
            expect_var(c, var)?;
            c.expect(&Tok::RParen)?;
            Prefactor::one().with_binom(1)
        }
        Tok::Ident(s) if s == "delta" => {
            c.advance();
            c.expect(&Tok::LParen)?;
            c.expect(&Tok::Int(BigInt::from(1)))?;
            c.expect(&Tok::Comma)?;
            expect_var(c, var)?;
            c.expect(&Tok::RParen)?;
            return Ok(Prefactor::one().with_delta());
        }
        Tok::Ident(s) if s == "inv" => {
            c.advance();
            c.expect(&Tok::LParen)?;
            let p = product(c, var)?;
            c.expect(&Tok::RParen)?;
            match p.inv() {
                Some(v) => v,
                None => {
                    c.reset(start);
                    return c.error("a Kronecker delta cannot be inverted");
                }
            }
        }
        Tok::Int(n) if *c.peek_at(1) == Tok::Caret && is_ident(c, 2, var) => {
            c.advance();
            c.advance();
            c.advance();
            return Ok(
                Prefactor::one().with_base(crate::algebra::AlgebraicNumber::from(
                    crate::algebra::Q::from_integer(n),
                )),
            );
        }
        Tok::Int(n) if n == BigInt::from(1) => {
            c.advance();
            Prefactor::one()
        }
        Tok::LParen => {
            c.advance();
            if *c.peek() == Tok::Int(BigInt::from(2)) {
                let save = c.position();
                let odd = two_var(c, var).is_ok()
                    && c.eat(&Tok::Plus)
                    && c.eat(&Tok::Int(BigInt::from(1)))
                    && c.eat(&Tok::RParen);
                if odd {
                    Prefactor::one().with_odd(1)
                } else {
                    c.reset(save);
                    paren_tail(c, var)?
                }
            } else {
                paren_tail(c, var)?
            }
        }
        other => {
            return c.error(format!(
                "expected a prefactor in '{var}', found {}",
                other.describe()
            ))
        }
    };
    let e = int_exponent(c)?;
    match pow(p, e) {
        Some(v) => Ok(v),
        None => {
            c.reset(start);
            c.error("a Kronecker delta cannot be inverted")
        }
    }
}

/// After `(`: either `(c)^var` with a constant `c`, or a parenthesized product.
fn paren_tail(c: &mut Cursor, var: &str) -> Result<Prefactor> {
    let save = c.position();
    if let Ok(e) = parse_expr_at(c) {
        if c.eat(&Tok::RParen) && *c.peek() == Tok::Caret && is_ident(c, 1, var) {
            c.advance();
            c.advance();
            let b = e.to_constant(&Env::new())?;
            if b.is_zero() {
                return c.error("the base of a power must be non-zero");
            }
            return Ok(Prefactor::one().with_base(b));
        }
    }
    c.reset(save);
    let p = product(c, var)?;
    c.expect(&Tok::RParen)?;
    Ok(p)
}

fn product(c: &mut Cursor, var: &str) -> Result<Prefactor> {
    let mut p = atom(c, var)?;
    loop {
        if c.eat(&Tok::Star) {
            p = p.mul(&atom(c, var)?);
        } else if c.eat(&Tok::Slash) {
            match atom(c, var)?.inv() {
                Some(v) => p = p.mul(&v),
                None => return c.error("a Kronecker delta cannot be inverted"),
            }
        } else {
            return Ok(p);
        }
    }
}

/// Factors of a layer, ending optionally with `S(…)`.
fn layer(c: &mut Cursor, var: &str, depth: usize) -> Result<Layer> {
    let mut p = Prefactor::one();
    let mut inner = None;
    let mut divide = false;
    loop {
        if is_ident(c, 0, "S") && *c.peek_at(1) == Tok::LParen {
            if divide {
                return c.error("an inner sum cannot be a divisor");
            }
            c.advance();
            c.advance();
            let v = match c.peek() {
                Tok::Ident(s) if s != "binom" && s != "delta" && s != "inv" && s != "S" => {
                    s.clone()
                }
                _ => crate::sums::index_name(depth + 1),
            };
            inner = Some(layer(c, &v, depth + 1)?);
            c.expect(&Tok::RParen)?;
            if !matches!(c.peek(), Tok::RParen | Tok::End) {
                return c.error("the inner sum must be the last factor");
            }
            break;
        }
        let a = atom(c, var)?;
        p = if divide {
            match a.inv() {
                Some(v) => p.mul(&v),
                None => return c.error("a Kronecker delta cannot be inverted"),
            }
        } else {
            p.mul(&a)
        };
        if c.eat(&Tok::Star) {
            divide = false;
        } else if c.eat(&Tok::Slash) {
            divide = true;
        } else {
            break;
        }
    }
    Ok(Layer::new(p, inner))
}

/// Parse a nested sum weighted by `xⁿ`.
pub fn parse_sum(src: &str) -> Result<SumExpr> {
    let mut c = Cursor::new(src)?;
    c.expect_ident("sum")?;
    c.expect(&Tok::LParen)?;
    c.expect_ident("x")?;
    c.expect(&Tok::Caret)?;
    let var = match c.advance() {
        Tok::Ident(s) => s,
        other => {
            return c.error(format!(
                "expected the summation index, found {}",
                other.describe()
            ))
        }
    };
    let outer = if c.eat(&Tok::Star) {
        layer(&mut c, &var, 0)?
    } else {
        Layer::new(Prefactor::one(), None)
    };
    c.expect(&Tok::RParen)?;
    c.expect_end()?;
    Ok(SumExpr::new(outer))
}
