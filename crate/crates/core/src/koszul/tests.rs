use std::sync::Arc;

use super::*;
use crate::dg::{free_module, DgModule, SubspacePair, Window};

fn ctx(n: usize, f1: &[Vec<i64>], f2: &[Vec<i64>], lo: i64) -> DualityContext {
    let p = SubspacePair::from_ints(n, f1, f2).unwrap();
    DualityContext::new(p, Window::new(Some(lo), None)).unwrap()
}

#[test]
fn point_goes_to_polynomial_ring() {
    let c = ctx(1, &[], &[], -8);
    let m = DgModule::skyscraper(c.source.clone(), (0, 0));
    let k = c.kappa(&m).unwrap();
    k.check_invariants().unwrap();
    let h = k.cohomology();
    for j in 0..=4 {
        assert_eq!(h.get((0, -2 * j)), 1);
    }
    assert_eq!(h.total(), 5);
}

#[test]
fn free_exterior_module_goes_to_point() {
    let c = ctx(1, &[], &[], -8);
    let m = free_module(&c.source, (0, 0), Window::FULL).unwrap();
    assert_eq!(m.total_dim(), 2);
    let k = c.kappa(&m).unwrap();
    k.check_invariants().unwrap();
    let h = k.cohomology();
    assert_eq!(h.total(), 1);
    assert_eq!(h.get((0, 0)), 1);
}

#[test]
fn dualize_is_an_involution() {
    let p = SubspacePair::from_ints(2, &[vec![1, 0]], &[vec![1, 1]]).unwrap();
    let a = Arc::new(p.build_t());
    let m = free_module(&a, (0, 0), Window::new(None, Some(6))).unwrap();
    let dd = dualize(&dualize(&m));
    assert_eq!(dd.dims(), m.dims());
    assert_eq!(dd.window(), m.window());
    dualize(&m).check_invariants().unwrap();
}

#[test]
fn dual_algebra_matches_r() {
    let p = SubspacePair::from_ints(3, &[vec![1, 2, 0]], &[vec![0, 1, 1], vec![1, 0, 0]]).unwrap();
    let t = p.build_t();
    let r = p.build_r();
    let k = koszul_dual_algebra(&t);
    assert_eq!(k.diff(), r.diff());
    assert_eq!(k.ext().iter().map(|g| g.bidegree).collect::<Vec<_>>(), r.ext().iter().map(|g| g.bidegree).collect::<Vec<_>>());
}

#[test]
fn grading_identity_on_free_module() {
    let c = ctx(2, &[vec![1, 0]], &[vec![1, 1]], -10);
    let m = free_module(&c.source, (0, 0), Window::new(None, Some(4))).unwrap();
    for n in -2..=2 {
        for s in -2..=2 {
            let lhs = c.kappa(&m.shift(n, s)).unwrap();
            let rhs = c.kappa(&m).unwrap().shift(s - n, -s);
            let w = lhs.window().intersect(&rhs.window());
            assert_eq!(lhs.cohomology().restrict(&w), rhs.cohomology().restrict(&w), "n={n} m={s}");
        }
    }
}

#[test]
fn double_duality_on_free_module() {
    let c = ctx(2, &[vec![1, 0]], &[vec![1, 1]], -8);
    let m = free_module(&c.source, (0, 0), Window::new(None, Some(8))).unwrap();
    let k = c.kappa(&m).unwrap();
    let back = c.dual().kappa(&k).unwrap();
    back.check_invariants().unwrap();
    let w = back.window().intersect(&m.window());
    assert_eq!(back.cohomology().restrict(&w), m.cohomology().restrict(&w));
}

#[test]
fn perturbed_sign_breaks_d_squared() {
    let c = ctx(2, &[vec![1, 0]], &[vec![1, 1]], -6);
    let m = free_module(&c.source, (0, 0), Window::new(None, Some(6))).unwrap();
    for p in [SignPerturbation::DropKoszulSign, SignPerturbation::DropTwistSign] {
        let k = c.kappa_perturbed(&m, p).unwrap();
        let err = k.check_invariants().unwrap_err();
        assert_eq!(err.kind, "d^2 = 0", "{p:?}");
    }
}

#[test]
fn rejects_module_truncated_on_the_complete_side() {
    let c = ctx(1, &[], &[vec![1]], -6);
    let m = DgModule::skyscraper(c.source.clone(), (0, 0)).with_window(Window::new(Some(-2), None));
    assert!(matches!(c.kappa(&m), Err(DgError::WindowTooSmall(_))));
}

#[test]
fn random_grading_identity_and_double_duality() {
    use crate::random::{random_module, random_pair, rng};
    let mut r = rng(5);
    for _ in 0..12 {
        let p = random_pair(&mut r, 3);
        let c = DualityContext::new(p, Window::new(Some(-6), None)).unwrap();
        let m = random_module(&mut r, &c.source, 4, 12);
        let k = c.kappa(&m).unwrap();
        k.check_invariants().unwrap();
        for (n, s) in [(1, 0), (0, 1), (-1, 2), (2, -1)] {
            let lhs = c.kappa(&m.shift(n, s)).unwrap();
            let rhs = k.shift(s - n, -s);
            let w = lhs.window().intersect(&rhs.window());
            assert_eq!(lhs.cohomology().restrict(&w), rhs.cohomology().restrict(&w));
        }
        let back = c.dual().kappa(&k).unwrap();
        let w = back.window().intersect(&m.window());
        assert_eq!(back.cohomology().restrict(&w), m.cohomology().restrict(&w));
    }
}
