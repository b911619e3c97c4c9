//! Boolean expression front end.
//!
//! Grammar, loosest binding first, all binary operators left-associative:
//!
//! ```text
//! or   := xor ("|" xor)*
//! xor  := and ("^" and)*
//! and  := unary ("&" unary)*
//! unary:= "~" unary | "(" or ")" | "0" | "1" | "x" digits
//! ```
//! `!` is accepted as a synonym of `~`.

use std::fmt;

use crate::error::{Error, Result};
use crate::oracle::TruthTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Xor(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, valuation: &[bool]) -> bool {
        match self {
            Expr::Const(v) => *v,
            Expr::Var(i) => valuation[*i],
            Expr::Not(a) => !a.eval(valuation),
            Expr::And(a, b) => a.eval(valuation) && b.eval(valuation),
            Expr::Or(a, b) => a.eval(valuation) || b.eval(valuation),
            Expr::Xor(a, b) => a.eval(valuation) ^ b.eval(valuation),
        }
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Const(_) => None,
            Expr::Var(i) => Some(*i),
            Expr::Not(a) => a.max_var(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// Truth table by direct evaluation over every valuation.
    pub fn to_truth_table(&self, arity: usize) -> Result<TruthTable> {
        if let Some(index) = self.max_var().filter(|&v| v >= arity) {
            return Err(Error::VariableOutOfRange {
                index,
                arity,
                offset: 0,
            });
        }
        TruthTable::from_fn(arity, |i| {
            let v: Vec<bool> = (0..arity).map(|k| (i >> (arity - 1 - k)) & 1 == 1).collect();
            self.eval(&v)
        })
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(v) => write!(f, "{}", u8::from(*v)),
            Expr::Var(i) => write!(f, "x{i}"),
            Expr::Not(a) => write!(f, "~{a}"),
            Expr::And(a, b) => write!(f, "({a} & {b})"),
            Expr::Or(a, b) => write!(f, "({a} | {b})"),
            Expr::Xor(a, b) => write!(f, "({a} ^ {b})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    fn binary(
        &mut self,
        op: u8,
        operand: fn(&mut Self) -> Result<Expr>,
        build: fn(Box<Expr>, Box<Expr>) -> Expr,
    ) -> Result<Expr> {
        let mut lhs = operand(self)?;
        while self.peek() == Some(op) {
            self.pos += 1;
            let rhs = operand(self)?;
            lhs = build(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr> {
        self.binary(b'|', Self::xor, Expr::Or)
    }

    fn xor(&mut self) -> Result<Expr> {
        self.binary(b'^', Self::and, Expr::Xor)
    }

    fn and(&mut self) -> Result<Expr> {
        self.binary(b'&', Self::unary, Expr::And)
    }

    fn unary(&mut self) -> Result<Expr> {
        let start = self.pos;
        match self.peek() {
            Some(b'~') | Some(b'!') => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.unary()?)))
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.or()?;
                if self.peek() != Some(b')') {
                    return Err(self.error(self.pos, format!("unclosed `(` opened at byte {open}")));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Expr::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Expr::Const(true))
            }
            Some(b'x') | Some(b'X') => {
                let var_start = self.pos;
                self.pos += 1;
                let digits_start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if digits_start == self.pos {
                    return Err(self.error(digits_start, "expected variable index after `x`"));
                }
                let text = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap();
                let index: usize = text
                    .parse()
                    .map_err(|_| self.error(digits_start, "variable index too large"))?;
                if index >= self.arity {
                    return Err(Error::VariableOutOfRange {
                        index,
                        arity: self.arity,
                        offset: var_start,
                    });
                }
                Ok(Expr::Var(index))
            }
            Some(c) => Err(self.error(self.pos, format!("unexpected `{}`", c as char))),
            None => Err(self.error(start.max(self.pos), "unexpected end of input")),
        }
    }
}

/// Parses `src` as an expression over `x0..x{arity-1}`.
pub fn parse_expr(src: &str, arity: usize) -> Result<Expr> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        arity,
    };
    let e = p.or()?;
    if let Some(c) = p.peek() {
        return Err(p.error(p.pos, format!("unexpected `{}`", c as char)));
    }
    Ok(e)
}
