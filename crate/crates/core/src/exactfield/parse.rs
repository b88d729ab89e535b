//! Text form of scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' '-'? digits)?
//! atom   := digits | 'i' | symbol | 'conj' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Rational literals are written as quotients, `3/4`. Unary minus binds
//! looser than `^`, so `-z1^2` is `-(z1^2)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::chart::Chart;
use super::gaussian::GQ;
use super::scalar::Scalar;
use super::ExactError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownSymbol(String),
    DivisionByZero,
}

/// A parse failure at a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "column {}: {m}", self.column),
            ParseErrorKind::UnknownSymbol(s) => {
                write!(f, "column {}: unknown symbol `{s}`", self.column)
            }
            ParseErrorKind::DivisionByZero => write!(f, "column {}: division by zero", self.column),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[s..i].iter().collect();
            toks.push((Tok::Num(text.parse().unwrap()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[s..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(ParseError {
                column: col,
                kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
            });
        }
    }
    Ok(Lexer {
        toks,
        end: chars.len() + 1,
    })
}

struct Parser<'a> {
    lx: Lexer,
    pos: usize,
    chart: &'a Chart,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.lx.toks.get(self.pos).map_or(self.lx.end, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.col(),
            kind: ParseErrorKind::Syntax(msg.into()),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                self.pos += 1;
                let col = self.col();
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|_| ParseError {
                    column: col,
                    kind: ParseErrorKind::DivisionByZero,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ParseError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Num(k)) => {
                let k: i64 = match i64::try_from(k) {
                    Ok(k) if k <= 10_000 => k,
                    _ => return self.err("exponent too large"),
                };
                self.pos += 1;
                if neg {
                    -k
                } else {
                    k
                }
            }
            _ => return self.err("expected an integer exponent"),
        };
        base.pow(e).map_err(|_| ParseError {
            column: col,
            kind: ParseErrorKind::DivisionByZero,
        })
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                Ok(Scalar::constant(GQ::from_rational(
                    BigRational::from_integer(k),
                )))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "i" {
                    return Ok(Scalar::i());
                }
                if name == "conj" {
                    if !self.eat('(') {
                        return self.err("expected `(` after conj");
                    }
                    let v = self.expr()?;
                    if !self.eat(')') {
                        return self.err("expected `)`");
                    }
                    return Ok(v.conjugate(self.chart));
                }
                match self.chart.index_of(&name) {
                    Ok(a) => Ok(Scalar::var(a)),
                    Err(_) => Err(ParseError {
                        column: col,
                        kind: ParseErrorKind::UnknownSymbol(name),
                    }),
                }
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of expression"),
        }
    }
}

/// Parse and evaluate an expression over the symbols of `chart`.
pub fn parse_scalar(src: &str, chart: &Chart) -> Result<Scalar, ParseError> {
    let mut p = Parser {
        lx: lex(src)?,
        pos: 0,
        chart,
    };
    let v = p.expr()?;
    if p.pos != p.lx.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

impl Scalar {
    pub fn parse(src: &str, chart: &Chart) -> Result<Scalar, ExactError> {
        Ok(parse_scalar(src, chart)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c() -> Chart {
        Chart::standard(2)
    }

    #[test]
    fn literals_and_precedence() {
        let c = c();
        assert_eq!(parse_scalar("3/4", &c).unwrap(), Scalar::ratio(3, 4));
        assert_eq!(
            parse_scalar("1/2*i", &c).unwrap(),
            Scalar::constant(GQ::from_parts(0, 1, 1, 2))
        );
        assert_eq!(parse_scalar("-2^2", &c).unwrap(), Scalar::int(-4));
        assert_eq!(parse_scalar("(1+i)*(1-i)", &c).unwrap(), Scalar::int(2));
        assert_eq!(parse_scalar("2^-1", &c).unwrap(), Scalar::ratio(1, 2));
    }

    #[test]
    fn symbols_and_conj() {
        let c = c();
        let v = parse_scalar("conj(i*z1) + w11 + conj(w11)", &c).unwrap();
        let want = Scalar::i().neg().mul(&Scalar::var(c.zb(0)));
        assert_eq!(v, want);
        let q = parse_scalar("(z1^2 - zb1^2)/(z1 - zb1)", &c).unwrap();
        assert_eq!(q, parse_scalar("z1+zb1", &c).unwrap());
    }

    #[test]
    fn positioned_errors() {
        let c = c();
        let e = parse_scalar("z1^^2", &c).unwrap_err();
        assert_eq!(e.column, 4);
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_scalar("z1 + q3", &c).unwrap_err();
        assert_eq!(
            e,
            ParseError {
                column: 6,
                kind: ParseErrorKind::UnknownSymbol("q3".into())
            }
        );
        assert_eq!(
            parse_scalar("1/(z1-z1)", &c).unwrap_err().kind,
            ParseErrorKind::DivisionByZero
        );
        assert_eq!(parse_scalar("(z1", &c).unwrap_err().column, 4);
        assert!(parse_scalar("z1 z2", &c).is_err());
        assert!(parse_scalar("", &c).is_err());
    }

    #[test]
    fn canonical_text_round_trips() {
        let c = c();
        for src in [
            "z1*zb2 - 3/2*w12^2",
            "(1+i)/(z1 + 2*wb12)",
            "w11^3*z2/(z1*zb1 - 1)",
            "(i*z1 - w22)/(3*z2)",
            "-1/2",
        ] {
            let v = parse_scalar(src, &c).unwrap();
            let t = v.to_text(&c);
            assert_eq!(parse_scalar(&t, &c).unwrap(), v, "{src} -> {t}");
        }
    }
}
