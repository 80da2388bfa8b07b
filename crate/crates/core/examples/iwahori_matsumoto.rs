//! The Iwahori-Matsumoto involution, the sign involution iota and their
//! composite k_im, checked against the defining relations.

use koszul_hecke::hecke::{AlgebraMorphismSpec, HeckeAlgebra, RelationOptions, RelationStatus};
use koszul_hecke::rootdata::Weight;

fn main() {
    let h = HeckeAlgebra::from_label("A2").unwrap();
    let t1 = h.t_alpha(0);
    let th = h.theta(&Weight(vec![1, 0]));
    println!("IM(T1)         = {}", h.im(&t1));
    println!("iota(T1)       = {}", h.iota(&t1));
    println!("k_im(T1)       = {}", h.k_im(&t1));
    println!("k_im(theta)    = {}", h.k_im(&th));
    println!("k_im(t1)       = {}", h.k_im(&h.small_t(0)));

    let x = h.mul(&th, &h.mul(&t1, &h.t_alpha(1)));
    println!("k_im(k_im(x)) == x: {}", h.k_im(&h.k_im(&x)) == x);
    println!("IM iota == iota IM: {}", h.im(&h.iota(&x)) == h.iota(&h.im(&x)));

    let opts = RelationOptions { weight_bound: 2, ..Default::default() };
    for (name, spec) in [("KIM", AlgebraMorphismSpec::k_im(2)), ("IM", AlgebraMorphismSpec::iwahori_matsumoto(2))] {
        let checks = h.verify_relations(&spec, opts).unwrap();
        let failed = checks.iter().filter(|c| c.status == RelationStatus::Fail).count();
        println!("{name}: {} relation instances, {failed} failed", checks.len());
    }
}
