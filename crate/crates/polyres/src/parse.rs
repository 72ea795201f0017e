//! Recursive-descent parser for the polynomial text grammar.
//!
//! Terms are integer literals, the variable `x`, and parenthesized
//! subexpressions, combined with `+ - * ^`. Exponents are non-negative
//! integer literals. Implicit multiplication is rejected: write `3*x`,
//! not `3x`. The parser expands everything into canonical form, so
//! parse-then-format-then-parse is a fixed point.

use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use thiserror::Error;

/// Largest accepted exponent.
pub const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent overflow at position {pos}: exponent exceeds {MAX_EXPONENT}")]
    ExponentOverflow { pos: usize },
}

pub fn parse_poly(text: &str) -> Result<IntPolynomial, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        len: text.len(),
    };
    let poly = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(poly),
        Some((at, c)) => Err(p.unexpected(at, c)),
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn unexpected(&self, at: usize, c: char) -> ParseError {
        let msg = if c.is_ascii_digit() || c == 'x' || c == '(' {
            format!("unexpected `{c}` (implicit multiplication is not allowed; write `3*x`)")
        } else {
            format!("unexpected character `{c}`")
        };
        ParseError::Syntax { pos: at, msg }
    }

    fn end_error(&self) -> ParseError {
        ParseError::Syntax {
            pos: self.len,
            msg: "unexpected end of input".into(),
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some((_, '+')) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some((_, '-')) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some((_, '*')) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := '-' factor | primary ('^' exponent)?
    fn factor(&mut self) -> Result<IntPolynomial, ParseError> {
        self.skip_ws();
        if let Some((_, '-')) = self.peek() {
            self.bump();
            let inner = self.factor()?;
            return Ok(-&inner);
        }
        let base = self.primary()?;
        self.skip_ws();
        if let Some((_, '^')) = self.peek() {
            self.bump();
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    // primary := INT | 'x' | '(' expr ')'
    fn primary(&mut self) -> Result<IntPolynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some((_, 'x')) => {
                self.bump();
                Ok(IntPolynomial::monomial(1, 1))
            }
            Some((_, '(')) => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                match self.bump() {
                    Some((_, ')')) => Ok(inner),
                    Some((at, c)) => Err(ParseError::Syntax {
                        pos: at,
                        msg: format!("expected `)`, found `{c}`"),
                    }),
                    None => Err(self.end_error()),
                }
            }
            Some((_, c)) if c.is_ascii_digit() => {
                let digits = self.digits()?;
                Ok(IntPolynomial::constant(
                    digits.parse::<BigInt>().expect("digit run parses"),
                ))
            }
            Some((at, c)) => Err(self.unexpected(at, c)),
            None => Err(self.end_error()),
        }
    }

    // exponent := non-negative integer literal, capped
    fn exponent(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = match self.peek() {
            Some((at, c)) if c.is_ascii_digit() => at,
            Some((at, c)) => {
                return Err(ParseError::Syntax {
                    pos: at,
                    msg: format!("expected a non-negative integer exponent, found `{c}`"),
                })
            }
            None => return Err(self.end_error()),
        };
        let digits = self.digits()?;
        match digits.parse::<u64>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(ParseError::ExponentOverflow { pos: start }),
        }
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let mut s = String::new();
        while let Some((_, c)) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        debug_assert!(!s.is_empty());
        Ok(s)
    }
}
