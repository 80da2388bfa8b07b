//! Convolution at a point and the transform frak_K, which sends the unit for
//! F to the unit for the annihilator of F.

use koszul_hecke::convolution::{convolve, frak_k, unit, ConvContext};
use koszul_hecke::dg::{free_module, Window};

fn main() {
    let ctx = ConvContext::from_ints(2, &[vec![1, 2]], Window::bounded(-8, 8)).unwrap();
    let dual = ctx.dual();
    let show = |vs: &[Vec<koszul_hecke::linalg::Q>]| -> Vec<Vec<String>> { vs.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect() };
    println!("F = {:?}, annihilator = {:?}", show(ctx.f()), show(dual.f()));

    let u = unit(&ctx, 8);
    println!("unit_F: {:?}", u.cohomology());

    let image = frak_k(&ctx, &u, false).unwrap();
    let target = unit(&dual, 8);
    let w = image.window().intersect(&target.window());
    println!("frak_K(unit_F) on {w}: {:?}", image.cohomology().restrict(&w));
    println!("unit of annihilator:     {:?}", target.cohomology().restrict(&w));

    let m = free_module(ctx.algebra(), (0, 0), ctx.growth_window(4)).unwrap();
    let left = convolve(&ctx, &u, &m).unwrap();
    let w = left.window().intersect(&m.window());
    println!("unit * M == M on {w}: {}", left.cohomology().restrict(&w) == m.cohomology().restrict(&w));

    let lhs = frak_k(&ctx, &convolve(&ctx, &m, &u).unwrap(), false).unwrap();
    let rhs = convolve(&dual, &frak_k(&ctx, &m, false).unwrap(), &image).unwrap();
    let w = lhs.window().intersect(&rhs.window());
    println!("frak_K(M * unit) == frak_K(M) * frak_K(unit) on {w}: {}", lhs.cohomology().restrict(&w) == rhs.cohomology().restrict(&w));
}
