//! Rational expressions in one variable.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' UINT)*
//! atom  := UINT | IDENT | '(' expr ')'
//! ```
//!
//! Exponents are unsigned integer literals; `y^-1` is rejected (write `1/y`).
//! There is no implicit multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{BigRat, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A parse failure at a byte offset, with the set of tokens that would have
/// been accepted there.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("division by an expression that is identically zero at byte {offset}")]
    DivisionByZeroConstant { offset: usize },
    #[error("unknown variable {found:?} at byte {offset} (expected {expected:?})")]
    UnknownVariable {
        offset: usize,
        found: String,
        expected: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return Err(SyntaxError {
                    offset: start,
                    expected: vec!["integer", "identifier", "operator", "'('", "')'"],
                    found: format!("character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

/// A parsed subtree and, when a variable was given, its value in ℚ(var).
type Node = (Expr, Option<RatFunc>);

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    var: Option<&'a str>,
}

const ATOM_START: [&str; 4] = ["integer", "identifier", "'('", "'-'"];

fn lift(a: Option<RatFunc>, b: Option<RatFunc>, f: impl FnOnce(RatFunc, RatFunc) -> RatFunc) -> Option<RatFunc> {
    Some(f(a?, b?))
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ExprError {
        ExprError::Syntax(SyntaxError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        })
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let (mut lhs, mut val) = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let (rhs, v) = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                    val = lift(val, v, |a, b| a + b);
                }
                Tok::Minus => {
                    self.bump();
                    let (rhs, v) = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                    val = lift(val, v, |a, b| a - b);
                }
                _ => return Ok((lhs, val)),
            }
        }
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let (mut lhs, mut val) = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let (rhs, v) = self.unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                    val = lift(val, v, |a, b| a * b);
                }
                Tok::Slash => {
                    let offset = self.offset();
                    self.bump();
                    let (rhs, v) = self.unary()?;
                    if v.as_ref().is_some_and(RatFunc::is_zero) {
                        return Err(ExprError::DivisionByZeroConstant { offset });
                    }
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                    val = lift(val, v, |a, b| a.checked_div(&b).expect("nonzero divisor"));
                }
                _ => return Ok((lhs, val)),
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let (e, v) = self.unary()?;
            return Ok((Expr::Neg(Box::new(e)), v.map(|v| -v)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let (mut base, mut val) = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let Tok::Int(n) = self.peek().clone() else {
                return Err(self.error(&["unsigned integer exponent"]));
            };
            let Ok(k) = u32::try_from(&n) else {
                return Err(self.error(&["exponent below 2^32"]));
            };
            self.bump();
            base = Expr::Pow(Box::new(base), k);
            val = val.map(|b| {
                if b.is_zero() && k == 0 {
                    RatFunc::one()
                } else {
                    RatFunc::from_coprime(b.num().pow(k), b.den().pow(k))
                }
            });
        }
        Ok((base, val))
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let v = self.var.map(|_| RatFunc::constant(BigRat::from_integer(n.clone())));
                Ok((Expr::Int(n), v))
            }
            Tok::Ident(s) => {
                self.bump();
                let v = match self.var {
                    Some(var) if var == s => Some(RatFunc::x()),
                    Some(var) => {
                        return Err(ExprError::UnknownVariable {
                            offset,
                            found: s,
                            expected: var.to_string(),
                        })
                    }
                    None => None,
                };
                Ok((Expr::Var(s), v))
            }
            Tok::LParen => {
                self.bump();
                let node = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["')'", "operator"]));
                }
                self.bump();
                Ok(node)
            }
            _ => Err(self.error(&ATOM_START)),
        }
    }
}

fn parse_with(text: &str, var: Option<&str>) -> Result<Node, ExprError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        var,
    };
    let node = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(node)
}

pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    match parse_with(text, None) {
        Ok((e, _)) => Ok(e),
        Err(ExprError::Syntax(e)) => Err(e),
        Err(e) => unreachable!("no lowering without a variable: {e}"),
    }
}

/// Parse and lower in one step; lowering errors point at the offending token.
pub fn parse_ratfunc(text: &str, var: &str) -> Result<RatFunc, ExprError> {
    let (_, v) = parse_with(text, Some(var))?;
    Ok(v.expect("lowered when a variable is given"))
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    fn write_at(&self, out: &mut String, min_prec: u8) {
        let paren = self.precedence() < min_prec;
        if paren {
            out.push('(');
        }
        match self {
            Expr::Int(n) => out.push_str(&n.to_string()),
            Expr::Var(v) => out.push_str(v),
            Expr::Neg(x) => {
                out.push('-');
                x.write_at(out, 3);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(out, 1);
                out.push_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " });
                b.write_at(out, 2);
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(out, 2);
                out.push(if matches!(self, Expr::Mul(..)) { '*' } else { '/' });
                b.write_at(out, 3);
            }
            Expr::Pow(b, k) => {
                b.write_at(out, 4);
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
        if paren {
            out.push(')');
        }
    }

    /// Lower to a canonical rational function in `var`. Error offsets refer
    /// to the printed form of `self`.
    pub fn to_ratfunc(&self, var: &str) -> Result<RatFunc, ExprError> {
        parse_ratfunc(&self.to_string(), var)
    }

    pub fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Int(n) if n.is_zero())
    }
}

impl fmt::Display for Expr {
    /// Minimal parenthesization; the output reparses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_at(&mut s, 0);
        f.write_str(&s)
    }
}
