//! Flat `key=value` language describing one call to [`expand`].
//!
//! ```text
//! # Legendre generating function, third order
//! family=power(-1/2)
//! c1=-2u  c2=1
//! order=3
//! ```
//!
//! Keys: `family` (`power(<rational>)`, `exp`, or `explicit(<d1>,<d2>,...)`),
//! `d0` (explicit families only; defaults to 1), `c<degree>` (rational or
//! polynomial-in-`u` literal such as `5/2*u^3 - 3/2*u`), and `order`.
//! Whitespace between entries is free and `#` starts a comment.

use crate::engine::expand;
use crate::{Derivatives, Expansion, Poly, Rational, RationalPerturbation, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Power(Rational),
    Exp,
    Explicit {
        at_one: Rational,
        values: Vec<Rational>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSpec {
    pub family: Family,
    /// `(degree, coefficient)` in the order written.
    pub terms: Vec<(usize, Poly)>,
    pub order: usize,
}

impl ExpansionSpec {
    pub fn derivatives(&self) -> Derivatives {
        match &self.family {
            Family::Power(alpha) => Derivatives::PowerAlpha(alpha.clone()),
            Family::Exp => Derivatives::ExpShifted,
            Family::Explicit { at_one, values } => {
                Derivatives::explicit_with_base(at_one.clone(), values.clone())
            }
        }
    }

    pub fn perturbation(&self) -> Result<RationalPerturbation> {
        RationalPerturbation::for_order(self.terms.iter().cloned(), self.order)
    }

    pub fn expand(&self) -> Result<Expansion> {
        expand(&self.derivatives(), &self.perturbation()?, self.order)
    }
}

/// Renders in the same language [`parse_spec`] reads.
impl fmt::Display for ExpansionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Power(alpha) => write!(f, "family=power({alpha})")?,
            Family::Exp => f.write_str("family=exp")?,
            Family::Explicit { at_one, values } => {
                f.write_str("family=explicit(")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str(")")?;
                if !at_one.is_one() {
                    write!(f, " d0={at_one}")?;
                }
            }
        }
        for (degree, c) in &self.terms {
            write!(f, " c{degree}={c}")?;
        }
        write!(f, " order={}", self.order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub message: String,
}

#[derive(Clone, Copy)]
struct Pos {
    offset: usize,
    line: usize,
    column: usize,
}

struct Cursor<'a> {
    src: &'a str,
    pos: Pos,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src,
            pos: Pos {
                offset: 0,
                line: 1,
                column: 1,
            },
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos.offset..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos.offset += c.len_utf8();
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn skip_blank(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos.offset;
        while self.peek().is_some_and(&pred) {
            self.bump();
        }
        &self.src[start..self.pos.offset]
    }

    /// Whitespace-delimited word at `at`, for error messages.
    fn token_at(&self, at: Pos) -> String {
        let word: String = self.src[at.offset..]
            .chars()
            .take_while(|c| !c.is_whitespace())
            .collect();
        if word.is_empty() {
            "end of input".into()
        } else {
            word
        }
    }

    fn error_at(&self, at: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            line: at.line,
            column: at.column,
            token: self.token_at(at),
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn digits(&mut self) -> std::result::Result<BigInt, ParseError> {
        let at = self.pos;
        let text = self.take_while(|c| c.is_ascii_digit());
        if text.is_empty() {
            return Err(self.error_at(at, "expected a number"));
        }
        Ok(text.parse().expect("ascii digits parse as an integer"))
    }

    fn usize(&mut self) -> std::result::Result<usize, ParseError> {
        let at = self.pos;
        let text = self.take_while(|c| c.is_ascii_digit());
        if text.is_empty() {
            return Err(self.error_at(at, "expected a non-negative integer"));
        }
        text.parse()
            .map_err(|_| self.error_at(at, "integer out of range"))
    }

    fn unsigned_rational(&mut self) -> std::result::Result<Rational, ParseError> {
        let at = self.pos;
        let numer = self.digits()?;
        let denom = if self.eat('/') {
            self.digits()?
        } else {
            BigInt::one()
        };
        if denom.is_zero() {
            return Err(self.error_at(at, "zero denominator"));
        }
        Ok(Rational::new(numer, denom))
    }

    fn rational(&mut self) -> std::result::Result<Rational, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let value = self.unsigned_rational()?;
        Ok(if negative { -value } else { value })
    }

    /// `q`, `q*u^k`, `qu^k`, `u^k`, with `^1` optional.
    fn term(&mut self) -> std::result::Result<Poly, ParseError> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let q = self.unsigned_rational()?;
            if self.eat('*') {
                if self.peek() != Some('u') {
                    return Err(self.error("expected `u` after `*`"));
                }
            } else if self.peek() != Some('u') {
                return Ok(Poly::constant(q));
            }
            q
        } else if self.peek() == Some('u') {
            Rational::one()
        } else {
            return Err(self.error("expected a rational or `u` term"));
        };
        self.expect('u')?;
        let degree = if self.eat('^') { self.usize()? } else { 1 };
        Ok(Poly::monomial(coeff, degree))
    }

    fn polynomial(&mut self) -> std::result::Result<Poly, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut total = if negative { -first } else { first };
        loop {
            let save = self.pos;
            self.skip_blank();
            let negative = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => {
                    self.pos = save;
                    return Ok(total);
                }
            };
            self.bump();
            self.skip_blank();
            let term = self.term()?;
            total = if negative { total - term } else { total + term };
        }
    }

    fn family(&mut self) -> std::result::Result<Family, ParseError> {
        let at = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        match name {
            "exp" => Ok(Family::Exp),
            "power" => {
                self.skip_blank();
                self.expect('(')?;
                self.skip_blank();
                let alpha = self.rational()?;
                self.skip_blank();
                self.expect(')')?;
                Ok(Family::Power(alpha))
            }
            "explicit" => {
                self.skip_blank();
                self.expect('(')?;
                self.skip_blank();
                let mut values = Vec::new();
                if !self.eat(')') {
                    loop {
                        values.push(self.rational()?);
                        self.skip_blank();
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                        self.skip_blank();
                    }
                }
                Ok(Family::Explicit {
                    at_one: Rational::one(),
                    values,
                })
            }
            _ => Err(self.error_at(
                at,
                "unknown family (expected power(..), exp, or explicit(..))",
            )),
        }
    }
}

/// Parses one expansion specification.
pub fn parse_spec(text: &str) -> std::result::Result<ExpansionSpec, ParseError> {
    let mut cur = Cursor::new(text);
    let mut family: Option<Family> = None;
    let mut at_one: Option<(Pos, Rational)> = None;
    let mut order: Option<usize> = None;
    let mut terms = Vec::new();
    let mut term_positions = Vec::new();
    let mut degrees = BTreeSet::new();

    loop {
        cur.skip_blank();
        if cur.peek().is_none() {
            break;
        }
        let entry = cur.pos;
        let key = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if key.is_empty() {
            return Err(cur.error("expected a `key=value` entry"));
        }
        cur.skip_blank();
        cur.expect('=')?;
        cur.skip_blank();
        match key {
            "family" => {
                if family.is_some() {
                    return Err(cur.error_at(entry, "duplicate family"));
                }
                family = Some(cur.family()?);
            }
            "order" => {
                if order.is_some() {
                    return Err(cur.error_at(entry, "duplicate order"));
                }
                order = Some(cur.usize()?);
            }
            "d0" => {
                if at_one.is_some() {
                    return Err(cur.error_at(entry, "duplicate d0"));
                }
                at_one = Some((entry, cur.rational()?));
            }
            _ if key.starts_with('c')
                && key.len() > 1
                && key[1..].bytes().all(|b| b.is_ascii_digit()) =>
            {
                let degree: usize = key[1..]
                    .parse()
                    .map_err(|_| cur.error_at(entry, "degree out of range"))?;
                if degree == 0 {
                    return Err(cur.error_at(entry, "perturbation degree must be at least 1"));
                }
                if !degrees.insert(degree) {
                    return Err(cur.error_at(entry, format!("duplicate degree {degree}")));
                }
                terms.push((degree, cur.polynomial()?));
                term_positions.push(entry);
            }
            _ => return Err(cur.error_at(entry, format!("unknown key `{key}`"))),
        }
        if cur.peek().is_some_and(|c| !c.is_whitespace() && c != '#') {
            return Err(cur.error("unexpected character after value"));
        }
    }

    let Some(mut family) = family else {
        return Err(cur.error("missing `family=`"));
    };
    let Some(order) = order else {
        return Err(cur.error("missing `order=`"));
    };
    for ((degree, _), at) in terms.iter().zip(&term_positions) {
        if *degree > order {
            return Err(cur.error_at(*at, format!("degree {degree} exceeds order {order}")));
        }
    }
    if let Some((at, value)) = at_one {
        match &mut family {
            Family::Explicit { at_one, .. } => *at_one = value,
            _ => return Err(cur.error_at(at, "d0 only applies to family=explicit(..)")),
        }
    }
    Ok(ExpansionSpec {
        family,
        terms,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::ratio;

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d).unwrap()
    }

    #[test]
    fn legendre_setup() {
        let spec = parse_spec("family=power(-1/2) c1=-2u c2=1 order=3").unwrap();
        assert_eq!(spec.family, Family::Power(q(-1, 2)));
        assert_eq!(
            spec.terms,
            vec![
                (1, Poly::monomial(q(-2, 1), 1)),
                (2, Poly::constant(q(1, 1)))
            ]
        );
        assert_eq!(spec.order, 3);
        let series = spec.expand().unwrap();
        assert_eq!(series.coefficient(3).to_string(), "5/2*u^3 - 3/2*u");
    }

    #[test]
    fn no_terms_is_valid() {
        let spec = parse_spec("family=power(-1/2) order=0").unwrap();
        let series = spec.expand().unwrap();
        assert_eq!(series.coefficients(), &[Poly::constant(q(1, 1))]);
    }

    #[test]
    fn zero_denominator() {
        let err = parse_spec("c1=1/0").unwrap_err();
        assert_eq!(err.message, "zero denominator");
        assert_eq!((err.line, err.column), (1, 4));
        assert_eq!(err.token, "1/0");
    }

    #[test]
    fn error_cases() {
        let cases = [
            (
                "family=power(1/2) c2=1 c2=3 order=3",
                "duplicate degree 2",
                1,
                24,
            ),
            (
                "family=power(1/2)\n  c5=1 order=3",
                "degree 5 exceeds order 3",
                2,
                3,
            ),
            ("family=log order=1", "unknown family", 1, 8),
            ("family=exp c0=1 order=1", "at least 1", 1, 12),
            ("family=exp order=2 zz=1", "unknown key", 1, 20),
            ("family=exp c1=1", "missing `order=`", 1, 16),
            ("family=exp c1=1/ order=2", "expected a number", 1, 17),
            ("family=power(2) d0=3 order=1", "d0 only applies", 1, 17),
        ];
        for (text, message, line, column) in cases {
            let err = parse_spec(text).unwrap_err();
            assert!(err.message.contains(message), "{text}: {err}");
            assert_eq!((err.line, err.column), (line, column), "{text}: {err}");
        }
    }

    #[test]
    fn polynomial_literals_and_layout() {
        let text = "
            # comment line
            family = explicit(1, -1, 2)   d0 = 3/2
            c1 = 5/2*u^3 - 3/2*u
            c2 = -u^2 + 1/3
            order = 2
        ";
        let spec = parse_spec(text).unwrap();
        assert_eq!(
            spec.family,
            Family::Explicit {
                at_one: q(3, 2),
                values: vec![q(1, 1), q(-1, 1), q(2, 1)]
            }
        );
        assert_eq!(
            spec.terms[0].1,
            Poly::new(vec![q(0, 1), q(-3, 2), q(0, 1), q(5, 2)])
        );
        assert_eq!(spec.terms[1].1, Poly::new(vec![q(1, 3), q(0, 1), q(-1, 1)]));
        assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn rendering() {
        let spec = parse_spec("family=power(-1/2) c1=-2u c2=1 order=3").unwrap();
        assert_eq!(spec.to_string(), "family=power(-1/2) c1=-2*u c2=1 order=3");
    }
}
