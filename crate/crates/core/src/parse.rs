//! Recursive-descent parser for polynomial expressions in `x`:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | 'x' ('^' uint)? | '(' expr ')' | '-' factor
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant and multiplication is never implicit.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{Rat, UPoly};

const MAX_EXPONENT: usize = 4096;

pub fn parse_poly(text: &str) -> Result<UPoly> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(Error::EmptyInput);
    }
    let poly = p.expr()?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error("an operator or end of input"));
    }
    Ok(poly)
}

/// Parses a `;`-separated list such as `x; x^2; x^3 + x`.
pub fn parse_poly_list(text: &str) -> Result<Vec<UPoly>> {
    text.split(';').map(parse_poly).collect()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<UPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<UPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<UPoly> {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("`)`"));
                }
                Ok(inner)
            }
            Some('x') => {
                self.pos += 1;
                if self.eat('^') {
                    self.skip_ws();
                    let e = self.digits("an exponent")?;
                    let e: usize = e
                        .parse()
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or_else(|| self.error("an exponent of at most 4096"))?;
                    Ok(UPoly::monomial(Rat::one(), e))
                } else {
                    Ok(UPoly::x())
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits("a number")?.parse().unwrap();
                if self.eat('/') {
                    self.skip_ws();
                    let at = self.pos;
                    let den: BigInt = self.digits("a denominator")?.parse().unwrap();
                    if den == BigInt::from(0) {
                        return Err(Error::Syntax {
                            position: at,
                            expected: "a nonzero denominator".into(),
                        });
                    }
                    Ok(UPoly::constant(Rat::new(num, den)))
                } else {
                    Ok(UPoly::constant(Rat::from_int(num)))
                }
            }
            _ => Err(self.error("a number, `x`, `(` or `-`")),
        }
    }

    fn digits(&mut self, expected: &str) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(expected));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}
