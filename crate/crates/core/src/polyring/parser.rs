//! Polynomial expression parser.
//!
//! Grammar: `+ - * ^` with parentheses, unsigned integer and `n/d` rational
//! literals, identifiers `[A-Za-z][A-Za-z0-9_]*`. Multiplication is always
//! explicit (`2x` is an error) and exponents are unsigned integers.

use super::{Polynomial, VariableSet};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn parse_polynomial<C: Scalar>(input: &str, vars: &VariableSet) -> Result<Polynomial<C>> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens, pos: 0, end: input.len() };
    let f = parser.expr(vars)?;
    parser.expect_end()?;
    Ok(f)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(s[start..i].to_string())));
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
                continue;
            }
            _ => return Err(err(i, format!("unexpected character `{}`", c))),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_end(&self) -> Result<()> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(err(self.here(), "unexpected trailing input"))
        }
    }

    /// expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr<C: Scalar>(&mut self, vars: &VariableSet) -> Result<Polynomial<C>> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.advance();
            }
            Some(Tok::Plus) => {
                self.advance();
            }
            _ => {}
        }
        let first = self.term(vars)?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    let t = self.term(vars)?;
                    acc = acc.checked_add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.advance();
                    let t = self.term(vars)?;
                    acc = acc.checked_sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// term := factor ('*' factor)*
    fn term<C: Scalar>(&mut self, vars: &VariableSet) -> Result<Polynomial<C>> {
        let mut acc = self.factor(vars)?;
        while self.peek() == Some(&Tok::Star) {
            self.advance();
            let f = self.factor(vars)?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(acc)
    }

    /// factor := base ('^' uint)?
    fn factor<C: Scalar>(&mut self, vars: &VariableSet) -> Result<Polynomial<C>> {
        let base = self.base(vars)?;
        if self.peek() == Some(&Tok::Caret) {
            self.advance();
            let at = self.here();
            match self.advance() {
                Some(Tok::Int(digits)) => {
                    let e: u32 = digits
                        .parse()
                        .map_err(|_| err(at, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(at, "expected an unsigned integer exponent")),
            }
        }
        Ok(base)
    }

    /// base := '(' expr ')' | int ['/' int] | ident
    fn base<C: Scalar>(&mut self, vars: &VariableSet) -> Result<Polynomial<C>> {
        let at = self.here();
        match self.advance() {
            Some(Tok::LParen) => {
                let inner = self.expr(vars)?;
                let at = self.here();
                match self.advance() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(at, "expected `)`")),
                }
            }
            Some(Tok::Int(digits)) => {
                let n = C::from_decimal_str(&digits)
                    .ok_or_else(|| err(at, "bad integer literal"))?;
                if self.peek() == Some(&Tok::Slash) {
                    self.advance();
                    let at = self.here();
                    match self.advance() {
                        Some(Tok::Int(dd)) => {
                            let d = C::from_decimal_str(&dd)
                                .ok_or_else(|| err(at, "bad integer literal"))?;
                            if d.is_zero() {
                                return Err(err(at, "zero denominator"));
                            }
                            Ok(Polynomial::constant(vars, n / d))
                        }
                        _ => Err(err(at, "expected a denominator")),
                    }
                } else {
                    Ok(Polynomial::constant(vars, n))
                }
            }
            Some(Tok::Ident(name)) => Polynomial::variable_named(vars, &name),
            Some(_) => Err(err(at, "expected a literal, variable, or `(`")),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn vars() -> VariableSet {
        VariableSet::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial<BigRational> {
        parse_polynomial(s, &vars()).unwrap()
    }

    fn perr(s: &str) -> Error {
        parse_polynomial::<BigRational>(s, &vars()).unwrap_err()
    }

    #[test]
    fn grouping_and_precedence() {
        assert_eq!(p("(x + y)^2"), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("2*x^3"), p("2*(x^3)"));
        assert_eq!(p("-x - (-y)"), p("y - x"));
    }

    #[test]
    fn rational_literals() {
        assert_eq!(p("3/4*x"), p("3*x") .scale(&BigRational::new(1.into(), 4.into())));
        assert_eq!(p("7/2 - 3"), p("1/2"));
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(matches!(perr("2x"), Error::Parse { .. }));
        assert!(matches!(perr("x y"), Error::Parse { .. }));
    }

    #[test]
    fn negative_exponents_are_rejected() {
        assert!(matches!(perr("x^-1"), Error::Parse { .. }));
        assert!(matches!(perr("x^(2)"), Error::Parse { .. }));
    }

    #[test]
    fn division_is_only_for_literals() {
        assert!(matches!(perr("x/2"), Error::Parse { .. }));
        assert!(matches!(perr("1/0"), Error::Parse { .. }));
    }

    #[test]
    fn unknown_variables_are_reported() {
        assert_eq!(perr("x + z"), Error::UnknownVariable("z".into()));
    }

    #[test]
    fn display_round_trips() {
        for s in ["x^2 - y", "-2*x + 1/2", "0", "3/7*x*y^4 - x - 5"] {
            let f = p(s);
            assert_eq!(parse_polynomial::<BigRational>(&f.to_string(), &vars()).unwrap(), f);
        }
    }
}
