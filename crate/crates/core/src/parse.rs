//! Parsing and printing of polynomial expressions in the single variable `x`.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! input  := ('+' | '-')? expr
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := int | 'x' | '(' expr ')'
//! ```
//!
//! A sign is allowed only once, at the very start of the input. `^` does not
//! chain, and multiplication is never implicit (`2x` is rejected).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    UnexpectedEnd {
        expected: &'static str,
    },
    BadExponent(String),
    ChainedExponent,
    UnknownIdentifier(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "expected {expected}, found end of input")
            }
            ParseErrorKind::BadExponent(s) => {
                write!(
                    f,
                    "exponent must be a nonnegative decimal integer, found `{s}`"
                )
            }
            ParseErrorKind::ChainedExponent => {
                f.write_str("chained `^` is ambiguous; use parentheses")
            }
            ParseErrorKind::UnknownIdentifier(s) => {
                write!(f, "unknown identifier `{s}`; the only variable is `x`")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::X => "x".into(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let n: BigInt = s[pos..end].parse().expect("digit run parses");
            toks.push((pos, Tok::Int(n)));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let ident = &s[pos..end];
            if ident != "x" {
                return Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnknownIdentifier(ident.to_string()),
                });
            }
            toks.push((pos, Tok::X));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnexpectedChar(c),
                })
            }
        };
        toks.push((pos, tok));
        chars.next();
    }
    toks.push((s.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            Tok::End => ParseErrorKind::UnexpectedEnd { expected },
            t => ParseErrorKind::UnexpectedToken {
                found: t.describe(),
                expected,
            },
        };
        ParseError {
            position: self.pos(),
            kind,
        }
    }

    fn input(&mut self) -> Result<IntPoly, ParseError> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let p = self.expr_tail(if negate { -first } else { first })?;
        if *self.peek() != Tok::End {
            return Err(self.unexpected("`+`, `-`, `*` or end of input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let first = self.term()?;
        self.expr_tail(first)
    }

    fn expr_tail(&mut self, mut acc: IntPoly) -> Result<IntPoly, ParseError> {
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let exp = match self.bump() {
            Tok::Int(n) => u32::try_from(&n).map_err(|_| ParseError {
                position: pos,
                kind: ParseErrorKind::BadExponent(n.to_string()),
            })?,
            other => {
                return Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::BadExponent(other.describe()),
                })
            }
        };
        if *self.peek() == Tok::Caret {
            return Err(ParseError {
                position: self.pos(),
                kind: ParseErrorKind::ChainedExponent,
            });
        }
        Ok(base.pow(exp))
    }

    fn base(&mut self) -> Result<IntPoly, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(IntPoly::constant(n))
            }
            Tok::X => {
                self.bump();
                Ok(IntPoly::x())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("an integer, `x` or `(`")),
        }
    }
}

/// Parses a polynomial expression and returns its full expansion.
pub fn parse_poly(s: &str) -> Result<IntPoly, ParseError> {
    let toks = tokenize(s)?;
    Parser { toks, at: 0 }.input()
}

/// Canonical text form: descending degree, `2*x^3 - x + 1`, zero as `0`.
pub fn format_poly(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if k == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push('x');
        if k > 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
    out
}

impl std::str::FromStr for IntPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}
