use proptest::prelude::*;

use super::*;
use crate::hecke::{AlgebraMorphismSpec, RelationOptions};
use crate::rootdata::RootDatum;

fn a1() -> HeckeAlgebra {
    HeckeAlgebra::from_label("A1").unwrap()
}

#[test]
fn parses_examples() {
    let d = RootDatum::from_label("A1").unwrap();
    assert_eq!(
        parse_hecke_expr("theta[1] * T[1]", &d).unwrap(),
        Expr::Mul(Box::new(Expr::Theta(vec![1])), Box::new(Expr::T(vec![1])))
    );
    assert_eq!(parse_hecke_expr("IM(T[1])", &d).unwrap(), Expr::Apply("IM".into(), Box::new(Expr::T(vec![1]))));
    assert_eq!(parse_hecke_expr("v^-1", &d).unwrap(), Expr::VPow(-1));
    assert_eq!(parse_hecke_expr(" - 3 ", &d).unwrap(), Expr::Neg(Box::new(Expr::IntLit(3.into()))));
}

#[test]
fn syntax_error_offsets() {
    let d = RootDatum::from_label("A1").unwrap();
    let e = parse_hecke_expr("theta[1,", &d).unwrap_err();
    assert_eq!(e.offset(), Some(8));
    let e = parse_hecke_expr("T[1] +\n  * 2", &d).unwrap_err();
    match e {
        ExprError::Syntax { line, col, offset, .. } => assert_eq!((line, col, offset), (2, 3, 9)),
        other => panic!("{other}"),
    }
    assert!(matches!(parse_hecke_expr("theta[1,2]", &d), Err(ExprError::Arity { .. })));
    assert!(parse_hecke_expr("T[2]", &d).is_err());
    assert!(parse_hecke_expr("foo(T[1])", &d).is_err());
    assert!(parse_hecke_expr("T", &d).is_err());
    assert!(parse_hecke_expr("T[1]^2", &d).is_err());
}

#[test]
fn evaluates_examples() {
    let h = a1();
    let expected = eval_str("T[1] - v + v^-1", &h).unwrap();
    assert_eq!(eval_str("KIM(T[1])", &h).unwrap(), expected);
    assert_eq!(eval_str("T[1]^-1", &h).unwrap(), expected);
    assert_eq!(eval_str("theta[0]", &h).unwrap(), h.one());
    assert_eq!(eval_str("T[1] * T[1]^-1", &h).unwrap(), h.one());
    assert!(matches!(eval_str("(T[1] + 1)^-1", &h), Err(ExprError::NotInvertible(_))));
    assert_eq!(
        eval_str("T[1] * theta[1]", &h).unwrap().to_string(),
        "(v - v^-1) * theta[1] * T[] + theta[-1] * T[1]"
    );
}

#[test]
fn spec_strings() {
    let h = HeckeAlgebra::from_label("B2").unwrap();
    let r = h.rank();
    assert_eq!(parse_morphism_spec("KIM", &h).unwrap(), AlgebraMorphismSpec::k_im(r));
    assert_eq!(parse_morphism_spec("identity", &h).unwrap(), AlgebraMorphismSpec::identity(r));
    let s = parse_morphism_spec("T -> T - v + v^-1; theta -> theta^-1; v -> -v", &h).unwrap();
    assert_eq!(s, AlgebraMorphismSpec::k_im(r));
    let s = parse_morphism_spec("T -> -T + v - v^-1; theta->theta^-1", &h).unwrap();
    assert_eq!(s, AlgebraMorphismSpec::iwahori_matsumoto(r));
    let s = parse_morphism_spec("T[1] -> T[1]", &h).unwrap();
    assert_eq!(s, AlgebraMorphismSpec::identity(r));
    let e = parse_morphism_spec("T -> T +", &h).unwrap_err();
    assert_eq!(e.offset(), Some(8));
}

#[test]
fn negative_control_spec_fails_quadratic_relation() {
    let h = a1();
    let s = parse_morphism_spec("T->T+1", &h).unwrap();
    let checks = h.verify_relations(&s, RelationOptions::default()).unwrap();
    assert!(checks.iter().any(|c| c.relation == "vi" && c.status == crate::hecke::RelationStatus::Fail && c.witness.is_some()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn render_round_trips(seed in any::<u64>(), label in prop::sample::select(vec!["A1", "A2", "B2", "G2", "A1xA1"])) {
        let h = HeckeAlgebra::from_label(label).unwrap();
        let mut r = crate::random::rng(seed);
        let x = crate::random::random_hecke(&mut r, &h, 4, 3);
        let back = eval_str(&x.to_string(), &h).unwrap();
        prop_assert_eq!(back, x);
    }
}
