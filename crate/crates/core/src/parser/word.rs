//! `c*H[l₁, l₂, …; base=0|1]` integral-word syntax.

use super::expr::{parse_expr_at, parse_unary, Env, Expr, Pos};
use super::lexer::{Cursor, Tok};
use crate::algebra::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::integrals::{Base, IntegralWord, Letter};

type C = AlgebraicNumber;

fn constant(e: &Expr) -> Result<C> {
    e.to_constant(&Env::new())
}

fn point(c: &mut Cursor) -> Result<C> {
    let e = parse_expr_at(c)?;
    constant(&e)
}

fn point_set(c: &mut Cursor) -> Result<Vec<C>> {
    c.expect(&Tok::LBrace)?;
    let mut out = vec![point(c)?];
    while c.eat(&Tok::Comma) {
        out.push(point(c)?);
    }
    c.expect(&Tok::RBrace)?;
    Ok(out)
}

/// Report a semantic failure at the start of the offending letter.
fn at_error<T>(pos: (usize, usize), e: Error) -> Result<T> {
    match e {
        Error::Parse { .. } => Err(e),
        other => super::parse_error(pos.0, pos.1, other.to_string()),
    }
}

fn letter(c: &mut Cursor) -> Result<Letter> {
    let start = (c.token().line, c.token().column);
    let wrap = |r: Result<Letter>| r.or_else(|e| at_error(start, e));
    match c.peek().clone() {
        Tok::Ident(name) if name == "R" && *c.peek_at(1) == Tok::LParen => {
            c.advance();
            c.advance();
            let e = parse_expr_at(c)?;
            c.expect(&Tok::RParen)?;
            let f = e.to_rational_function(&mut Env::new());
            wrap(f.map(Letter::generic))
        }
        Tok::LBrace => {
            let s = point_set(c)?;
            wrap(Letter::sqrt_set(s))
        }
        Tok::LParen if *c.peek_at(1) == Tok::LBrace => {
            c.advance();
            let s = point_set(c)?;
            c.expect(&Tok::Comma)?;
            let j = match c.peek() {
                Tok::Int(n) => u32::try_from(n).ok(),
                _ => None,
            };
            let Some(j) = j else {
                return c.error("expected a power after the point set");
            };
            c.advance();
            c.expect(&Tok::RParen)?;
            wrap(Letter::power_times_sqrt(s, j))
        }
        Tok::LParen => {
            let save = c.position();
            c.advance();
            if let Ok(e) = parse_expr_at(c) {
                if c.eat(&Tok::Comma) && *c.peek() == Tok::LBrace {
                    let s = point_set(c)?;
                    c.expect(&Tok::RParen)?;
                    let a = constant(&e).or_else(|err| at_error(start, err))?;
                    return wrap(Letter::rat_times_sqrt(a, s));
                }
            }
            c.reset(save);
            let a = point(c).or_else(|e| at_error(start, e))?;
            Ok(Letter::rat(a))
        }
        _ => {
            let a = point(c).or_else(|e| at_error(start, e))?;
            Ok(Letter::rat(a))
        }
    }
}

fn is_word_start(c: &Cursor, k: usize) -> bool {
    matches!(c.peek_at(k), Tok::Ident(s) if s == "H") && *c.peek_at(k + 1) == Tok::LBracket
}

fn prefactor(c: &mut Cursor) -> Result<C> {
    let mut factors: Vec<(bool, Expr)> = Vec::new();
    let mut divide = false;
    loop {
        let e = parse_unary(c)?;
        factors.push((divide, e));
        match c.peek() {
            Tok::Star if is_word_start(c, 1) => {
                c.advance();
                break;
            }
            Tok::Star => {
                c.advance();
                divide = false;
            }
            Tok::Slash => {
                c.advance();
                divide = true;
            }
            _ => return c.error("expected '*H[' after the prefactor"),
        }
    }
    let pos = Pos { line: 1, column: 1 };
    let mut acc: Option<Expr> = None;
    for (div, e) in factors {
        acc = Some(match acc {
            None => e,
            Some(a) if div => Expr::Div(Box::new(a), Box::new(e), pos),
            Some(a) => Expr::Mul(Box::new(a), Box::new(e)),
        });
    }
    constant(&acc.expect("at least one factor"))
}

/// Parse a word, optionally preceded by a constant prefactor.
pub fn parse_word(src: &str) -> Result<IntegralWord> {
    let mut c = Cursor::new(src)?;
    let pre = if is_word_start(&c, 0) {
        C::one()
    } else {
        prefactor(&mut c)?
    };
    c.expect_ident("H")?;
    c.expect(&Tok::LBracket)?;
    let mut letters = Vec::new();
    if !matches!(c.peek(), Tok::Semi | Tok::Pipe | Tok::RBracket) {
        letters.push(letter(&mut c)?);
        while c.eat(&Tok::Comma) {
            letters.push(letter(&mut c)?);
        }
    }
    let mut base = Base::Zero;
    if c.eat(&Tok::Semi) || c.eat(&Tok::Pipe) {
        c.expect_ident("base")?;
        c.expect(&Tok::Equals)?;
        base = match c.peek() {
            Tok::Int(n) if *n == 0.into() => Base::Zero,
            Tok::Int(n) if *n == 1.into() => Base::One,
            _ => return c.error("base must be 0 or 1"),
        };
        c.advance();
    }
    c.expect(&Tok::RBracket)?;
    c.expect_end()?;
    Ok(IntegralWord::new(letters, base).with_prefactor(pre))
}
