//! A small language for Hecke algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^-1']
//! atom   := INT | 'v' ['^' SINT] | 'theta[' ints ']' | 'T[' ints ']'
//!         | IDENT '(' expr ')' | '(' expr ')' | '-' atom
//! ```
//!
//! `T[i,j]` is the product `T_i T_j` with 1-based indices. The functions `IM`,
//! `iota` and `KIM` apply the involutions of the same names.

mod lexer;
mod parser;
mod spec;

use num_bigint::BigInt;
use thiserror::Error;

use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::laurent::LaurentPoly;
use crate::rootdata::Weight;

pub use parser::parse_hecke_expr;
pub use spec::parse_morphism_spec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    IntLit(BigInt),
    VPow(i32),
    Theta(Vec<i64>),
    /// 1-based simple reflection indices.
    T(Vec<usize>),
    /// A bare `T` or `theta`, only meaningful inside a morphism rule.
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Inv(Box<Expr>),
    Apply(String, Box<Expr>),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at line {line}, column {col} (offset {offset}): {message}")]
    Syntax { offset: usize, line: usize, col: usize, message: String },
    #[error("{what} at offset {offset}: expected {expected} entries, found {found}")]
    Arity { offset: usize, what: &'static str, expected: usize, found: usize },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unbound {0}; bare generators are only allowed in morphism rules")]
    Unbound(String),
    #[error("{0}")]
    Spec(String),
}

impl ExprError {
    pub(crate) fn syntax(src: &str, offset: usize, message: impl Into<String>) -> Self {
        let before = &src[..offset.min(src.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ExprError::Syntax { offset, line, col, message: message.into() }
    }

    pub fn offset(&self) -> Option<usize> {
        match self {
            ExprError::Syntax { offset, .. } | ExprError::Arity { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}

/// Known functions and the involution each one names.
pub const FUNCTIONS: &[&str] = &["IM", "iota", "KIM"];

pub(crate) fn canonical_function(name: &str) -> Option<&'static str> {
    match name {
        "IM" | "im" => Some("IM"),
        "iota" => Some("iota"),
        "KIM" | "k_im" | "kIM" => Some("KIM"),
        _ => None,
    }
}

/// Values for bare `T` and `theta`.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    pub t: Option<HeckeElt>,
    pub theta: Option<HeckeElt>,
}

pub fn eval_expr(e: &Expr, h: &HeckeAlgebra) -> Result<HeckeElt, ExprError> {
    eval_with(e, h, &Bindings::default())
}

pub fn eval_with(e: &Expr, h: &HeckeAlgebra, b: &Bindings) -> Result<HeckeElt, ExprError> {
    Ok(match e {
        Expr::IntLit(n) => h.scalar(LaurentPoly::constant(n.clone())),
        Expr::VPow(k) => h.scalar(LaurentPoly::monomial(1, *k)),
        Expr::Theta(c) => h.theta(&Weight(c.clone())),
        Expr::T(word) => {
            let mut out = h.one();
            for &i in word {
                out = h.mul_t_right(&out, i - 1);
            }
            out
        }
        Expr::Var(name) => {
            let v = if name == "T" { &b.t } else { &b.theta };
            v.clone().ok_or_else(|| ExprError::Unbound(name.clone()))?
        }
        Expr::Add(x, y) => &eval_with(x, h, b)? + &eval_with(y, h, b)?,
        Expr::Mul(x, y) => h.mul(&eval_with(x, h, b)?, &eval_with(y, h, b)?),
        Expr::Neg(x) => -&eval_with(x, h, b)?,
        Expr::Inv(x) => {
            let v = eval_with(x, h, b)?;
            h.inverse(&v).ok_or_else(|| ExprError::NotInvertible(v.to_string()))?
        }
        Expr::Apply(f, x) => {
            let v = eval_with(x, h, b)?;
            match f.as_str() {
                "IM" => h.im(&v),
                "iota" => h.iota(&v),
                _ => h.k_im(&v),
            }
        }
    })
}

/// Parses and evaluates `src` in `h`.
pub fn eval_str(src: &str, h: &HeckeAlgebra) -> Result<HeckeElt, ExprError> {
    eval_expr(&parse_hecke_expr(src, h.datum())?, h)
}

#[cfg(test)]
mod tests;
