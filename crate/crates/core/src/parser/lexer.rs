//! Tokenizer shared by all input grammars.

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Pipe,
    Equals,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::End => "end of input".into(),
            t => format!("'{}'", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Pipe => "|",
            Tok::Equals => "=",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
    /// Whether whitespace separates this token from the previous one.
    pub spaced: bool,
}

pub fn parse_error<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        column,
        message: message.into(),
    })
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    let mut spaced = false;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            spaced = true;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            spaced = true;
            continue;
        }
        let (l0, c0) = (line, col);
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                return parse_error(
                    line,
                    col + (i - start),
                    "decimal literals are not supported; write an exact fraction",
                );
            }
            let text: String = chars[start..i].iter().collect();
            col += i - start;
            Tok::Int(text.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            col += i - start;
            Tok::Ident(text)
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '|' => Tok::Pipe,
                '=' => Tok::Equals,
                '.' => {
                    return parse_error(
                        line,
                        col,
                        "decimal literals are not supported; write an exact fraction",
                    )
                }
                _ => return parse_error(line, col, format!("unexpected character '{c}'")),
            };
            i += 1;
            col += 1;
            t
        };
        out.push(Token {
            tok,
            line: l0,
            column: c0,
            spaced,
        });
        spaced = false;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
        spaced,
    });
    Ok(out)
}

/// Cursor over a token stream.
pub struct Cursor {
    toks: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub fn new(src: &str) -> Result<Self> {
        Ok(Cursor {
            toks: tokenize(src)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    pub fn token(&self) -> &Token {
        &self.toks[self.pos]
    }

    pub fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = self.token();
        parse_error(t.line, t.column, message)
    }

    pub fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            self.error(format!(
                "expected {}, found {}",
                t.describe(),
                self.peek().describe()
            ))
        }
    }

    pub fn expect_ident(&mut self, name: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == name => {
                self.advance();
                Ok(())
            }
            other => {
                let d = other.describe();
                self.error(format!("expected '{name}', found {d}"))
            }
        }
    }

    pub fn expect_end(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.error(format!("unexpected {}", self.peek().describe()))
        }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn reset(&mut self, pos: usize) {
        self.pos = pos;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let t = tokenize("x^2 +\n 13").unwrap();
        assert_eq!(t[0].tok, Tok::Ident("x".into()));
        assert_eq!(t[3].tok, Tok::Plus);
        assert_eq!((t[4].line, t[4].column), (2, 2));
        assert!(matches!(
            tokenize("1.5"),
            Err(Error::Parse {
                line: 1,
                column: 2,
                ..
            })
        ));
        assert!(tokenize("x # y").is_err());
    }
}
