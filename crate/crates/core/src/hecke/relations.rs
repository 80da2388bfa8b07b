use std::collections::HashMap;

use rayon::prelude::*;

use super::{AlgebraMorphismSpec, HeckeAlgebra, HeckeElt, MorphismError};
use crate::laurent::LaurentPoly;
use crate::rootdata::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationStatus {
    Pass,
    Fail,
    Skipped,
}

impl RelationStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationStatus::Pass => "pass",
            RelationStatus::Fail => "fail",
            RelationStatus::Skipped => "skipped",
        }
    }
}

/// Outcome of one relation instance under a morphism spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    /// Roman numeral of the defining relation, `i` through `vi`.
    pub relation: &'static str,
    /// Human-readable instance, with 1-based root indices.
    pub instance: String,
    pub status: RelationStatus,
    /// `LHS - RHS` in text form when the instance fails.
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct RelationOptions {
    /// Max-norm bound on the weights in relations (iii), (iv), (v).
    pub weight_bound: i64,
    /// Run the weight sweeps even when the rank exceeds 2.
    pub allow_high_rank: bool,
}

impl Default for RelationOptions {
    fn default() -> Self {
        Self { weight_bound: 3, allow_high_rank: false }
    }
}

/// All integer vectors of the given length with max-norm at most `bound`.
pub fn weight_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-bound..=bound).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

fn check(relation: &'static str, instance: String, lhs: &HeckeElt, rhs: &HeckeElt) -> RelationCheck {
    let diff = lhs - rhs;
    if diff.is_zero() {
        RelationCheck { relation, instance, status: RelationStatus::Pass, witness: None }
    } else {
        RelationCheck { relation, instance, status: RelationStatus::Fail, witness: Some(diff.to_string()) }
    }
}

fn skipped(relation: &'static str, rank: usize) -> RelationCheck {
    RelationCheck {
        relation,
        instance: format!("weight sweep at rank {rank}"),
        status: RelationStatus::Skipped,
        witness: None,
    }
}

impl HeckeAlgebra {
    /// Checks the defining relations on the images of the generators under `spec`.
    ///
    /// Scalars in the relations are twisted the same way the spec twists them.
    pub fn verify_relations(
        &self,
        spec: &AlgebraMorphismSpec,
        opts: RelationOptions,
    ) -> Result<Vec<RelationCheck>, MorphismError> {
        let d = self.datum();
        let r = self.rank();
        let tw = |c: LaurentPoly| self.scalar(spec.twist.apply(&c));
        let t: Vec<HeckeElt> = (0..r).map(|i| self.spec_t(spec, i)).collect::<Result<_, _>>()?;
        let mut out = Vec::new();

        for i in 0..r {
            for j in i + 1..r {
                let n = d.braid_order(i, j).expect("distinct indices");
                let lhs = self.product((0..n).map(|k| if k % 2 == 0 { &t[i] } else { &t[j] }));
                let rhs = self.product((0..n).map(|k| if k % 2 == 0 { &t[j] } else { &t[i] }));
                out.push(check("i", format!("braid T[{}],T[{}] length {n}", i + 1, j + 1), &lhs, &rhs));
            }
        }

        out.push(check("ii", "theta_0 = 1".into(), &self.spec_theta(spec, &Weight::zero(r))?, &self.one()));

        for i in 0..r {
            let ti = &t[i];
            let lhs = self.mul(&(ti + &tw(LaurentPoly::v_inv())), &(ti - &tw(LaurentPoly::v())));
            out.push(check("vi", format!("quadratic T[{}]", i + 1), &lhs, &HeckeElt::zero()));
        }

        if r > 2 && !opts.allow_high_rank {
            for rel in ["iii", "iv", "v"] {
                out.push(skipped(rel, r));
            }
            return Ok(out);
        }

        let b = opts.weight_bound;
        let small = weight_box(r, b);
        let images: HashMap<Weight, HeckeElt> = weight_box(r, 2 * b)
            .into_par_iter()
            .map(|x| {
                let img = self.spec_theta(spec, &x);
                img.map(|img| (x, img))
            })
            .collect::<Result<_, _>>()?;

        let pairs: Vec<(&Weight, &Weight)> =
            small.iter().flat_map(|x| small.iter().map(move |y| (x, y))).collect();
        let iii: Vec<RelationCheck> = pairs
            .par_iter()
            .map(|(x, y)| {
                let lhs = self.mul(&images[*x], &images[*y]);
                let rhs = &images[&(*x + *y)];
                check("iii", format!("theta{x} theta{y}"), &lhs, rhs)
            })
            .collect();
        out.extend(iii);

        let singles: Vec<(usize, &Weight)> =
            (0..r).flat_map(|i| small.iter().map(move |x| (i, x))).collect();
        let iv_v: Vec<Result<Option<RelationCheck>, MorphismError>> = singles
            .par_iter()
            .map(|&(i, x)| {
                let ti = &t[i];
                let n = x.coords()[i];
                if n == 0 {
                    let lhs = self.mul(ti, &images[x]);
                    let rhs = self.mul(&images[x], ti);
                    Ok(Some(check("iv", format!("T[{}] theta{x}", i + 1), &lhs, &rhs)))
                } else if n == 1 {
                    let y = x - &d.simple_root(i);
                    let rhs = self.product([ti, &self.spec_theta(spec, &y)?, ti]);
                    Ok(Some(check("v", format!("T[{}] theta{y} T[{}]", i + 1, i + 1), &images[x], &rhs)))
                } else {
                    Ok(None)
                }
            })
            .collect();
        for c in iv_v {
            if let Some(c) = c? {
                out.push(c);
            }
        }
        Ok(out)
    }
}
