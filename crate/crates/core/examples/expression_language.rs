//! Parsing and evaluating Hecke expressions and generator-image strings.

use koszul_hecke::expr::{eval_str, parse_hecke_expr, parse_morphism_spec};
use koszul_hecke::hecke::{HeckeAlgebra, RelationOptions, RelationStatus};

fn main() {
    let h = HeckeAlgebra::from_label("B2").unwrap();
    for src in ["KIM(T[1])", "T[1]^-1", "theta[1,0] * T[2,1] - v^2", "iota(IM(theta[0,1] * T[1]))"] {
        println!("{src:<30} = {}", eval_str(src, &h).unwrap());
    }

    match parse_hecke_expr("theta[1,", h.datum()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("error at offset {:?}: {e}", e.offset()),
    }

    let a1 = HeckeAlgebra::from_label("A1").unwrap();
    let spec = parse_morphism_spec("T -> T + 1", &a1).unwrap();
    let checks = a1.verify_relations(&spec, RelationOptions::default()).unwrap();
    for c in checks.iter().filter(|c| c.status == RelationStatus::Fail) {
        println!("T -> T + 1 breaks ({}) at {}: {}", c.relation, c.instance, c.witness.as_deref().unwrap_or(""));
    }
}
