//! Arithmetic in Z[v, v^-1].

use koszul_hecke::laurent::LaurentPoly;

fn main() {
    let v = LaurentPoly::v();
    let vi = LaurentPoly::v_inv();
    let c = &v - &vi;
    println!("v - v^-1        = {c}");
    println!("(v - v^-1)^3    = {}", c.pow(3));
    println!("at v -> -v      = {}", c.substitute_neg_v());

    let q = LaurentPoly::monomial(1, 2);
    let qi = q.inverse().expect("monomials are units");
    println!("q = {q}, q^-1 = {qi}, q q^-1 = {}", &q * &qi);
    println!("1 + v invertible: {}", (&LaurentPoly::one() + &v).inverse().is_some());

    let big = LaurentPoly::monomial(3, -1).pow(40);
    println!("(3 v^-1)^40     = {big}");
}
