use std::time::{Duration, Instant};

use super::{run_trials, timed, SuiteError, SuiteParams};
use crate::expr::parse_morphism_spec;
use crate::hecke::{AlgebraMorphismSpec, HeckeAlgebra, RelationOptions, RelationStatus};
use crate::hecke::weight_box;
use crate::laurent::LaurentPoly;
use crate::random::random_hecke;
use crate::report::{Check, Status};
use crate::rootdata::WeylElt;

fn word(w: &WeylElt) -> String {
    let idx: Vec<String> = w.word().iter().map(|i| (i + 1).to_string()).collect();
    format!("T[{}]", idx.join(","))
}

fn mismatch(what: &str, got: &impl ToString, want: &impl ToString) -> String {
    format!("{what}: got {}, expected {}", got.to_string(), want.to_string())
}

/// One check per relation, failing with the first failing instance.
pub fn relation_checks(h: &HeckeAlgebra, spec: &AlgebraMorphismSpec, label: &str, bound: i64) -> Result<Vec<Check>, SuiteError> {
    let start = Instant::now();
    let opts = RelationOptions { weight_bound: bound, allow_high_rank: false };
    let results = h.verify_relations(spec, opts).map_err(|e| SuiteError::InvalidParams(e.to_string()))?;
    let elapsed = start.elapsed();
    let mut out = Vec::new();
    for rel in ["i", "ii", "iii", "iv", "v", "vi"] {
        let group: Vec<_> = results.iter().filter(|c| c.relation == rel).collect();
        let name = format!("hecke/{label}/relation-{rel}");
        let mut check = if let Some(f) = group.iter().find(|c| c.status == RelationStatus::Fail) {
            Check::fail(&name, format!("{}: {}", f.instance, f.witness.clone().unwrap_or_default()))
        } else if !group.is_empty() && group.iter().all(|c| c.status == RelationStatus::Skipped) {
            Check::new(&name, Status::Skipped)
        } else {
            Check::pass(&name)
        };
        // the relations are verified in one pass, timed once
        let t = if rel == "i" { elapsed } else { Duration::ZERO };
        check = check.with_trials(group.len()).with_elapsed(t);
        out.push(check);
    }
    Ok(out)
}

fn generator_check(h: &HeckeAlgebra, bound: i64) -> Result<(), String> {
    let r = h.rank();
    let c = h.scalar(&LaurentPoly::v() - &LaurentPoly::v_inv());
    for i in 0..r {
        let want = &h.t_alpha(i) - &c;
        let got = h.k_im(&h.t_alpha(i));
        if got != want {
            return Err(mismatch(&format!("k_im(T[{}])", i + 1), &got, &want));
        }
    }
    for x in weight_box(r, bound) {
        let got = h.k_im(&h.theta(&x));
        let want = h.theta(&-&x);
        if got != want {
            return Err(mismatch(&format!("k_im(theta{x})"), &got, &want));
        }
    }
    Ok(())
}

fn involution_check(h: &HeckeAlgebra) -> Result<(), String> {
    let elements = h.datum().all_elements().map_err(|e| e.to_string())?;
    for x in weight_box(h.rank(), 2) {
        for w in &elements {
            let b = h.basis(&x, w);
            let name = format!("theta{x} * {}", word(w));
            if h.im(&h.im(&b)) != b {
                return Err(format!("IM(IM({name})) != {name}"));
            }
            if h.iota(&h.iota(&b)) != b {
                return Err(format!("iota(iota({name})) != {name}"));
            }
            if h.k_im(&h.k_im(&b)) != b {
                return Err(format!("k_im(k_im({name})) != {name}"));
            }
            if h.im(&h.iota(&b)) != h.iota(&h.im(&b)) {
                return Err(format!("IM and iota do not commute on {name}"));
            }
        }
    }
    Ok(())
}

fn small_t_check(h: &HeckeAlgebra) -> Result<(), String> {
    let q = LaurentPoly::monomial(1, 2);
    for i in 0..h.rank() {
        let t = h.small_t(i);
        let got = h.k_im(&t);
        let stated = &(-&t) + &h.scalar(&q - &LaurentPoly::one());
        if got != stated {
            return Err(mismatch(&format!("k_im(t[{}])", i + 1), &got, &stated));
        }
        let inv = h.inverse(&t).ok_or("t is not invertible")?;
        if h.mul(&t, &inv) != h.one() {
            return Err(format!("t[{}] * t[{}]^-1 != 1", i + 1, i + 1));
        }
        let via_inverse = -&inv.scale(&q);
        if got != via_inverse {
            return Err(mismatch(&format!("k_im(t[{}]) vs -q t^-1", i + 1), &got, &via_inverse));
        }
    }
    Ok(())
}

pub fn hecke_checks(p: &SuiteParams, seed: u64) -> Result<Vec<Check>, SuiteError> {
    let mut out = Vec::new();
    for label in &p.types {
        let h = HeckeAlgebra::from_label(label).map_err(|e| SuiteError::InvalidParams(e.to_string()))?;
        if let Some(s) = &p.spec {
            let spec = parse_morphism_spec(s, &h).map_err(|e| SuiteError::InvalidParams(e.to_string()))?;
            out.extend(relation_checks(&h, &spec, label, p.weight_bound)?);
            continue;
        }
        out.push(timed(&format!("hecke/{label}/generators"), || generator_check(&h, p.weight_bound)));
        out.extend(relation_checks(&h, &AlgebraMorphismSpec::k_im(h.rank()), label, p.weight_bound)?);
        let name = format!("hecke/{label}/homomorphism");
        out.push(run_trials(&name, p.trials_or(500), seed, |r| {
            let a = random_hecke(r, &h, 3, 2);
            let b = random_hecke(r, &h, 3, 2);
            let lhs = h.k_im(&h.mul(&a, &b));
            let rhs = h.mul(&h.k_im(&a), &h.k_im(&b));
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("a = {a}, b = {b}"))
            }
        }));
        if h.rank() <= 2 {
            out.push(timed(&format!("hecke/{label}/involutions"), || involution_check(&h)));
        } else {
            out.push(Check::skipped(format!("hecke/{label}/involutions")));
        }
        out.push(timed(&format!("hecke/{label}/small-t"), || small_t_check(&h)));
    }
    Ok(out)
}
