use super::parser::parse_inner;
use super::{canonical_function, eval_with, Bindings, Expr, ExprError};
use crate::hecke::{AlgebraMorphismSpec, HeckeAlgebra, Twist};
use crate::rootdata::Weight;

fn shift_error(src: &str, base: usize, e: ExprError) -> ExprError {
    match e {
        ExprError::Syntax { offset, message, .. } => ExprError::syntax(src, base + offset, message),
        ExprError::Arity { offset, what, expected, found } => ExprError::Arity { offset: base + offset, what, expected, found },
        other => other,
    }
}

/// Parses a generator-image string.
///
/// Either a preset (`identity`, `IM`, `iota`, `KIM`) or `;`-separated rules
/// `T -> expr`, `T[i] -> expr`, `theta -> expr`, `theta[x] -> expr` and
/// `v -> -v`. In a rule for all `T` (or all `theta`) the bare name stands for
/// the generator being mapped. Generators without a rule map to themselves.
pub fn parse_morphism_spec(src: &str, h: &HeckeAlgebra) -> Result<AlgebraMorphismSpec, ExprError> {
    let rank = h.rank();
    let trimmed = src.trim();
    if trimmed == "identity" || trimmed == "id" {
        return Ok(AlgebraMorphismSpec::identity(rank));
    }
    match canonical_function(trimmed) {
        Some("IM") => return Ok(AlgebraMorphismSpec::iwahori_matsumoto(rank)),
        Some("iota") => return Ok(AlgebraMorphismSpec::iota(rank)),
        Some(_) => return Ok(AlgebraMorphismSpec::k_im(rank)),
        None => {}
    }
    let mut spec = AlgebraMorphismSpec::identity(rank);
    let mut base = 0;
    for rule in src.split(';') {
        let rule_base = base;
        base += rule.len() + 1;
        if rule.trim().is_empty() {
            continue;
        }
        let Some(arrow) = rule.find("->") else {
            return Err(ExprError::syntax(src, rule_base + rule.len(), "expected '->'"));
        };
        let lhs = rule[..arrow].trim();
        let rhs_base = rule_base + arrow + 2;
        let rhs = &rule[arrow + 2..];
        if lhs == "v" {
            spec.twist = match rhs.trim() {
                "v" => Twist::Identity,
                "-v" => Twist::NegV,
                _ => return Err(ExprError::Spec("v can only map to v or -v".into())),
            };
            continue;
        }
        let lhs_expr = parse_inner(lhs, rank, true).map_err(|e| shift_error(src, rule_base, e))?;
        let rhs_expr = parse_inner(rhs, rank, true).map_err(|e| shift_error(src, rhs_base, e))?;
        match lhs_expr {
            Expr::Var(name) if name == "T" => {
                for i in 0..rank {
                    let b = Bindings { t: Some(h.t_alpha(i)), theta: None };
                    spec.image_of_t.insert(i, eval_with(&rhs_expr, h, &b)?);
                }
            }
            Expr::Var(_) => {
                let keys: Vec<Weight> = spec.image_of_theta.keys().cloned().collect();
                for x in keys {
                    let b = Bindings { t: None, theta: Some(h.theta(&x)) };
                    spec.image_of_theta.insert(x, eval_with(&rhs_expr, h, &b)?);
                }
            }
            Expr::T(word) if word.len() == 1 => {
                spec.image_of_t.insert(word[0] - 1, eval_with(&rhs_expr, h, &Bindings::default())?);
            }
            Expr::Theta(x) => {
                let x = Weight(x);
                if !spec.image_of_theta.contains_key(&x) {
                    return Err(ExprError::Spec(format!("theta{x} is not a generator; use ± a fundamental weight")));
                }
                spec.image_of_theta.insert(x, eval_with(&rhs_expr, h, &Bindings::default())?);
            }
            _ => return Err(ExprError::Spec(format!("cannot assign to '{lhs}'"))),
        }
    }
    Ok(spec)
}
