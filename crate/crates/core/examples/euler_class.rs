//! Graded Euler classes: they see only cohomology, alternate on cones and
//! pick up (-1)^n v^m under shifts.

use std::sync::Arc;

use koszul_hecke::dg::{free_module, multiplication_cone, ChainMap, SubspacePair, Window};
use koszul_hecke::linalg::q;

fn main() {
    let pair = SubspacePair::from_ints(2, &[vec![1, 0]], &[vec![1, 1]]).unwrap();
    let a = Arc::new(pair.build_t());
    let w = Window::new(None, Some(6));

    let free = free_module(&a, (0, 0), w).unwrap();
    println!("free module: chain dims {:?}", free.dim_table());
    println!("  cohomology {:?}", free.cohomology());
    println!("  euler      {}", free.euler_class());
    println!("  chain sum  {}", free.chain_euler_class());

    let cone = multiplication_cone(&a, &[1], (0, 0), w).unwrap();
    println!("cone of y1: euler {}", cone.euler_class());

    let f = ChainMap::identity(&free).scale(&q(3));
    let c = free.cone(&free, &f);
    println!("cone of 3 id: cohomology {:?}, euler {}", c.cohomology(), c.euler_class());

    let s = free.shift(1, 2);
    println!("free[1]<2>: euler {}", s.euler_class());
}
