use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::lexer::{lex, Tok};
use super::{canonical_function, Expr, ExprError};
use crate::rootdata::RootDatum;

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    rank: usize,
    allow_vars: bool,
}

/// Parses `src` for the root datum `d`; theta arity and T indices are checked
/// against its rank.
pub fn parse_hecke_expr(src: &str, d: &RootDatum) -> Result<Expr, ExprError> {
    parse_inner(src, d.rank(), false)
}

pub(crate) fn parse_inner(src: &str, rank: usize, allow_vars: bool) -> Result<Expr, ExprError> {
    let mut p = Parser { src, toks: lex(src)?, pos: 0, rank, allow_vars };
    let e = p.expr()?;
    p.expect(&Tok::Eof)?;
    Ok(e)
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::syntax(self.src, self.offset(), message))
    }

    fn expect(&mut self, t: &Tok) -> Result<(), ExprError> {
        if self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", t.describe(), self.peek().describe()))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(Expr::Neg(Box::new(rhs))));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while self.peek() == &Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let a = self.atom()?;
        if self.peek() == &Tok::Caret {
            self.bump();
            self.expect(&Tok::Minus)?;
            if self.peek() != &Tok::Int(BigInt::from(1)) {
                return self.error("only the exponent -1 is allowed here");
            }
            self.bump();
            return Ok(Expr::Inv(Box::new(a)));
        }
        Ok(a)
    }

    fn signed_int(&mut self) -> Result<i64, ExprError> {
        let neg = self.peek() == &Tok::Minus;
        if neg {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Int(n) => {
                let v = n.to_i64().map(|v| if neg { -v } else { v });
                match v {
                    Some(v) => {
                        self.bump();
                        Ok(v)
                    }
                    None => self.error("integer out of range"),
                }
            }
            t => self.error(format!("expected integer, found {}", t.describe())),
        }
    }

    fn int_list(&mut self) -> Result<(Vec<i64>, usize), ExprError> {
        let start = self.offset();
        self.expect(&Tok::LBrack)?;
        let mut out = Vec::new();
        if self.peek() == &Tok::RBrack {
            self.bump();
            return Ok((out, start));
        }
        loop {
            out.push(self.signed_int()?);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBrack => {
                    self.bump();
                    return Ok((out, start));
                }
                t => return self.error(format!("expected ',' or ']', found {}", t.describe())),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::IntLit(n))
            }
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let at = self.offset();
                self.bump();
                self.ident(name, at)
            }
            t => self.error(format!("expected an expression, found {}", t.describe())),
        }
    }

    fn ident(&mut self, name: String, at: usize) -> Result<Expr, ExprError> {
        match name.as_str() {
            "v" => {
                if self.peek() == &Tok::Caret {
                    // `v^-1` is a power of v, not an inverse
                    self.bump();
                    let k = self.signed_int()?;
                    let k = i32::try_from(k).or_else(|_| self.error("exponent out of range"))?;
                    return Ok(Expr::VPow(k));
                }
                Ok(Expr::VPow(1))
            }
            "theta" | "T" if self.peek() != &Tok::LBrack => {
                if self.allow_vars {
                    Ok(Expr::Var(name))
                } else {
                    self.error(format!("expected '[' after {name}"))
                }
            }
            "theta" => {
                let (coords, start) = self.int_list()?;
                if coords.len() != self.rank {
                    return Err(ExprError::Arity { offset: start, what: "theta coordinates", expected: self.rank, found: coords.len() });
                }
                Ok(Expr::Theta(coords))
            }
            "T" => {
                let (word, start) = self.int_list()?;
                if let Some(&bad) = word.iter().find(|&&i| i < 1 || i as usize > self.rank) {
                    return Err(ExprError::syntax(
                        self.src,
                        start,
                        format!("T index {bad} outside 1..={}", self.rank),
                    ));
                }
                Ok(Expr::T(word.into_iter().map(|i| i as usize).collect()))
            }
            _ => {
                let Some(f) = canonical_function(&name) else {
                    return Err(ExprError::syntax(self.src, at, format!("unknown name '{name}'")));
                };
                self.expect(&Tok::LParen)?;
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(Expr::Apply(f.to_string(), Box::new(e)))
            }
        }
    }
}
