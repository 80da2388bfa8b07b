//! Linear Koszul duality at a point: kappa, its grading rule and double
//! duality.

use koszul_hecke::dg::{free_module, DgModule, SubspacePair, Window};
use koszul_hecke::koszul::DualityContext;

fn main() {
    let pair = SubspacePair::from_ints(2, &[vec![1, 0]], &[vec![1, 1]]).unwrap();
    let ctx = DualityContext::new(pair, Window::new(Some(-8), None)).unwrap();
    println!("source: {} odd, {} even generators", ctx.source.n_ext(), ctx.source.n_sym());
    println!("target: {} odd, {} even generators", ctx.target.n_ext(), ctx.target.n_sym());

    let point = DgModule::skyscraper(ctx.source.clone(), (0, 0));
    let k = ctx.kappa(&point).unwrap();
    println!("kappa(point) on {}: {:?}", k.window(), k.cohomology());

    let m = free_module(&ctx.source, (0, 0), Window::new(None, Some(4))).unwrap();
    let km = ctx.kappa(&m).unwrap();
    println!("kappa(free) on {}: {:?}", km.window(), km.cohomology());

    let (n, s) = (1, 2);
    let lhs = ctx.kappa(&m.shift(n, s)).unwrap();
    let rhs = km.shift(s - n, -s);
    let w = lhs.window().intersect(&rhs.window());
    println!("kappa(M[1]<2>) = kappa(M)[1]<-2> on {w}: {}", lhs.cohomology().restrict(&w) == rhs.cohomology().restrict(&w));

    let back = ctx.dual().kappa(&km).unwrap();
    let w = back.window().intersect(&m.window());
    println!("double dual on {w}: {:?} vs {:?}", back.cohomology().restrict(&w), m.cohomology().restrict(&w));
}
