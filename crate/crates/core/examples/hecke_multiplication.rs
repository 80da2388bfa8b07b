//! Products in the Bernstein basis theta_x T_w.

use koszul_hecke::hecke::HeckeAlgebra;
use koszul_hecke::rootdata::Weight;

fn main() {
    let h = HeckeAlgebra::from_label("A1").unwrap();
    let t = h.t_alpha(0);
    let th = h.theta(&Weight(vec![1]));
    println!("A1:");
    println!("  T theta[1]   = {}", h.mul(&t, &th));
    println!("  T^2          = {}", h.mul(&t, &t));
    println!("  T^-1         = {}", h.t_alpha_inv(0));
    println!("  t = v T      = {}", h.small_t(0));

    let b2 = HeckeAlgebra::from_label("B2").unwrap();
    let x = b2.mul(&b2.theta(&Weight(vec![1, -1])), &b2.t_alpha(1));
    let y = b2.mul(&b2.t_alpha(0), &b2.theta(&Weight(vec![0, 1])));
    println!("B2:");
    println!("  x     = {x}");
    println!("  y     = {y}");
    println!("  x y   = {}", b2.mul(&x, &y));
    let braid = |i, j| b2.product([&b2.t_alpha(i), &b2.t_alpha(j), &b2.t_alpha(i), &b2.t_alpha(j)]);
    println!("  braid relation holds: {}", braid(0, 1) == braid(1, 0));
}
