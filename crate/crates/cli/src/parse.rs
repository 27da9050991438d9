//! Parser for equations `... y(x+2) ... y(x+1) ... y(x) ... = 0` and for
//! bare rational functions.

use std::fmt;

use ddgalois_core::{QPoly, QRatFunc, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::CliError;

const MAX_EXPONENT: i64 = 1000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var,
    /// `y(x+k)`
    Y(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    var: u8,
}

fn perr(position: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { position, message: message.into() }
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), CliError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(perr(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    /// The part of `y(x+k)` after `y`.
    fn y_term(&mut self) -> Result<usize, CliError> {
        self.expect(b'(')?;
        self.expect(b'x')?;
        self.skip_ws();
        let k = if self.src.get(self.pos) == Some(&b'+') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let k = self.integer().ok_or_else(|| perr(at, "expected a shift"))?;
            k.to_usize().filter(|k| *k <= 2).ok_or_else(|| perr(at, "only y(x), y(x+1) and y(x+2) are allowed"))?
        } else {
            0
        };
        self.expect(b')')?;
        Ok(k)
    }

    fn next(&mut self) -> Result<(usize, Tok), CliError> {
        self.skip_ws();
        let at = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((at, Tok::End));
        };
        self.pos += 1;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' => Tok::Eq,
            b'y' if self.var == b'x' => Tok::Y(self.y_term()?),
            c if c == self.var => Tok::Var,
            c if c.is_ascii_digit() => {
                self.pos -= 1;
                Tok::Int(self.integer().ok_or_else(|| perr(at, "bad integer"))?)
            }
            c => return Err(perr(at, format!("unexpected character '{}'", c as char))),
        };
        Ok((at, tok))
    }
}

/// `y_coeffs[k] * y(x+k) + constant`.
#[derive(Clone, Debug)]
struct Lin {
    y: [QRatFunc; 3],
    k: QRatFunc,
}

impl Lin {
    fn constant(k: QRatFunc) -> Self {
        Lin { y: [QRatFunc::zero(), QRatFunc::zero(), QRatFunc::zero()], k }
    }

    fn has_y(&self) -> bool {
        self.y.iter().any(|c| !c.is_zero())
    }

    fn map(&self, f: impl Fn(&QRatFunc) -> QRatFunc) -> Self {
        Lin { y: [f(&self.y[0]), f(&self.y[1]), f(&self.y[2])], k: f(&self.k) }
    }

    fn add(&self, o: &Self, sign: bool) -> Self {
        let op = |a: &QRatFunc, b: &QRatFunc| if sign { a + b } else { a - b };
        Lin {
            y: [op(&self.y[0], &o.y[0]), op(&self.y[1], &o.y[1]), op(&self.y[2], &o.y[2])],
            k: op(&self.k, &o.k),
        }
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, var: u8) -> Result<Self, CliError> {
        let mut lex = Lexer { src: src.as_bytes(), pos: 0, var };
        let (at, tok) = lex.next()?;
        Ok(Parser { lex, tok, at })
    }

    fn bump(&mut self) -> Result<(), CliError> {
        let (at, tok) = self.lex.next()?;
        self.at = at;
        self.tok = tok;
        Ok(())
    }

    fn expr(&mut self) -> Result<Lin, CliError> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.tok {
                Tok::Plus => true,
                Tok::Minus => false,
                _ => return Ok(acc),
            };
            self.bump()?;
            acc = acc.add(&self.term()?, sign);
        }
    }

    fn term(&mut self) -> Result<Lin, CliError> {
        let mut acc = self.unary()?;
        loop {
            let (mul, at) = match self.tok {
                Tok::Star => (true, self.at),
                Tok::Slash => (false, self.at),
                _ => return Ok(acc),
            };
            self.bump()?;
            let rhs = self.unary()?;
            acc = if mul {
                match (acc.has_y(), rhs.has_y()) {
                    (true, true) => return Err(perr(at, "product of two y-terms")),
                    (false, _) => rhs.map(|c| c * &acc.k),
                    (true, false) => acc.map(|c| c * &rhs.k),
                }
            } else {
                if rhs.has_y() {
                    return Err(perr(at, "division by a y-term"));
                }
                let inv = rhs.k.inv().map_err(|_| perr(at, "division by zero"))?;
                acc.map(|c| c * &inv)
            };
        }
    }

    fn unary(&mut self) -> Result<Lin, CliError> {
        if self.tok == Tok::Minus {
            self.bump()?;
            return Ok(self.unary()?.map(|c| -c));
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64, CliError> {
        let at = self.at;
        let paren = self.tok == Tok::LParen;
        if paren {
            self.bump()?;
        }
        let neg = self.tok == Tok::Minus;
        if neg {
            self.bump()?;
        }
        let Tok::Int(n) = &self.tok else {
            return Err(perr(self.at, "expected an integer exponent"));
        };
        let n = n.to_i64().filter(|n| *n <= MAX_EXPONENT).ok_or_else(|| perr(at, "exponent too large"))?;
        self.bump()?;
        if paren {
            self.close()?;
        }
        Ok(if neg { -n } else { n })
    }

    fn close(&mut self) -> Result<(), CliError> {
        if self.tok != Tok::RParen {
            return Err(perr(self.at, "expected ')'"));
        }
        self.bump()
    }

    fn power(&mut self) -> Result<Lin, CliError> {
        let base = self.atom()?;
        if self.tok != Tok::Caret {
            return Ok(base);
        }
        let at = self.at;
        self.bump()?;
        let e = self.exponent()?;
        if base.has_y() {
            return Err(perr(at, "power of a y-term"));
        }
        let p = base.k.powi(e).map_err(|_| perr(at, "negative power of zero"))?;
        Ok(Lin::constant(p))
    }

    fn atom(&mut self) -> Result<Lin, CliError> {
        let at = self.at;
        let out = match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(n) => Lin::constant(QRatFunc::constant(Rational::from_integer(n))),
            Tok::Var => Lin::constant(QRatFunc::x()),
            Tok::Y(k) => {
                let mut l = Lin::constant(QRatFunc::zero());
                l.y[k] = QRatFunc::one();
                l
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(perr(self.at, "expected ')'"));
                }
                inner
            }
            Tok::End => return Err(perr(at, "unexpected end of input")),
            t => return Err(perr(at, format!("unexpected token {t:?}"))),
        };
        self.bump()?;
        Ok(out)
    }

    fn finish(&self) -> Result<(), CliError> {
        if self.tok == Tok::End {
            Ok(())
        } else {
            Err(perr(self.at, "unexpected trailing input"))
        }
    }
}

/// A monic second-order equation `y(x+2) + a y(x+1) + b y(x) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquationInput {
    pub a: QRatFunc,
    pub b: QRatFunc,
    pub source: String,
}

impl EquationInput {
    pub fn new(a: QRatFunc, b: QRatFunc) -> Self {
        let mut e = EquationInput { a, b, source: String::new() };
        e.source = e.to_string();
        e
    }
}

impl fmt::Display for EquationInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y(x+2)")?;
        if !self.a.is_zero() {
            write!(f, " + ({})*y(x+1)", self.a)?;
        }
        write!(f, " + ({})*y(x) = 0", self.b)
    }
}

pub fn parse_equation(text: &str) -> Result<EquationInput, CliError> {
    let mut p = Parser::new(text, b'x')?;
    let lhs = p.expr()?;
    let lin = if p.tok == Tok::Eq {
        p.bump()?;
        let rhs = p.expr()?;
        lhs.add(&rhs, false)
    } else {
        lhs
    };
    p.finish()?;
    if !lin.k.is_zero() {
        return Err(perr(0, "the equation has a term without y"));
    }
    let lead = &lin.y[2];
    if lead.is_zero() {
        return Err(CliError::Order("the coefficient of y(x+2) vanishes".into()));
    }
    let inv = lead.inv().map_err(CliError::Core)?;
    let (a, b) = (&lin.y[1] * &inv, &lin.y[0] * &inv);
    if b.is_zero() {
        return Err(CliError::Order("the coefficient of y(x) vanishes".into()));
    }
    Ok(EquationInput { a, b, source: text.trim().to_string() })
}

pub fn parse_ratfunc(text: &str) -> Result<QRatFunc, CliError> {
    let mut p = Parser::new(text, b'x')?;
    let e = p.expr()?;
    p.finish()?;
    if e.has_y() {
        return Err(perr(0, "expected a rational function of x"));
    }
    Ok(e.k)
}

/// Polynomial in `t`, as used for `--number-field`.
pub fn parse_field_poly(text: &str) -> Result<QPoly, CliError> {
    let mut p = Parser::new(text, b't')?;
    let e = p.expr()?;
    p.finish()?;
    if !e.k.is_polynomial() {
        return Err(perr(0, "expected a polynomial in t"));
    }
    Ok(e.k.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> QRatFunc {
        QRatFunc::new(QPoly::from_ints(n), QPoly::from_ints(d))
    }

    #[test]
    fn examples() {
        let e = parse_equation("y(x+2) - (2*x+1)*y(x+1) + x^2*y(x) = 0").unwrap();
        assert_eq!((e.a, e.b), (rf(&[-1, -2], &[1]), rf(&[0, 0, 1], &[1])));
        let e = parse_equation("2*y(x+2) + y(x) = 0").unwrap();
        assert_eq!((e.a, e.b), (QRatFunc::zero(), rf(&[1], &[2])));
        assert!(matches!(parse_equation("y(x+2) + x*y(x+1) = 0"), Err(CliError::Order(_))));
        let e = parse_equation("y(x+2)+((x+1)/(2*x))*y(x)=0").unwrap();
        assert_eq!(e.b, rf(&[1, 1], &[0, 2]));
        let e = parse_equation("y(x) x^-1 = 0");
        assert!(matches!(e, Err(CliError::Parse { .. })));
    }

    #[test]
    fn sides_and_powers() {
        let e = parse_equation("y(x+2) = -y(x) * x^(-1) + y(x+1)/x").unwrap();
        assert_eq!((e.a, e.b), (rf(&[-1], &[0, 1]), rf(&[1], &[0, 1])));
        assert_eq!(parse_ratfunc("-x^2").unwrap(), rf(&[0, 0, -1], &[1]));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_equation("y(x+2) + * y(x)") {
            Err(CliError::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        match parse_equation("y(x+3) + y(x)") {
            Err(CliError::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_equation("y(x+2) * y(x)"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_equation("y(x+2) + 1"), Err(CliError::Parse { .. })));
    }

    #[test]
    fn round_trip() {
        let e = parse_equation("y(x+2) + (1/2*x - 3)/(x^2 + 1)*y(x+1) - 7/3*y(x)").unwrap();
        let again = parse_equation(&e.to_string()).unwrap();
        assert_eq!((e.a, e.b), (again.a, again.b));
        assert_eq!(parse_field_poly("t^2 - 5").unwrap(), QPoly::from_ints(&[-5, 0, 1]));
    }
}
