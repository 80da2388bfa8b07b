use proptest::prelude::*;

use koszul_hecke::dg::{module_from_json, module_to_json, Window};
use koszul_hecke::hecke::HeckeAlgebra;
use koszul_hecke::koszul::{dualize, DualityContext};
use koszul_hecke::laurent::LaurentPoly;
use koszul_hecke::random::{random_hecke, random_module, random_pair, rng};

fn types() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A1", "A1xA1", "A2", "B2", "G2"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hecke_multiplication_is_associative_and_unital(seed in any::<u64>(), label in types()) {
        let h = HeckeAlgebra::from_label(label).unwrap();
        let mut r = rng(seed);
        let (a, b, c) = (random_hecke(&mut r, &h, 3, 2), random_hecke(&mut r, &h, 3, 2), random_hecke(&mut r, &h, 3, 2));
        prop_assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
        prop_assert_eq!(h.mul(&a, &h.one()), a.clone());
        prop_assert_eq!(h.mul(&(&a + &b), &c), &h.mul(&a, &c) + &h.mul(&b, &c));
    }

    #[test]
    fn k_im_is_an_involutive_homomorphism(seed in any::<u64>(), label in types()) {
        let h = HeckeAlgebra::from_label(label).unwrap();
        let mut r = rng(seed);
        let (a, b) = (random_hecke(&mut r, &h, 3, 2), random_hecke(&mut r, &h, 3, 2));
        prop_assert_eq!(h.k_im(&h.k_im(&a)), a.clone());
        prop_assert_eq!(h.k_im(&h.mul(&a, &b)), h.mul(&h.k_im(&a), &h.k_im(&b)));
        prop_assert_eq!(h.k_im(&a), h.iota(&h.im(&a)));
    }

    #[test]
    fn euler_class_rules(seed in any::<u64>(), n in -2i64..=2, m in -2i64..=2) {
        let mut r = rng(seed);
        let ctx = DualityContext::new(random_pair(&mut r, 3), Window::new(Some(-8), None)).unwrap();
        let a = random_module(&mut r, &ctx.source, 4, 12);
        let b = random_module(&mut r, &ctx.source, 4, 12);
        prop_assert_eq!(a.euler_class(), a.cohomology_module().euler_class());
        prop_assert_eq!(a.direct_sum(&b).euler_class(), &a.euler_class() + &b.euler_class());
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(a.shift(n, m).euler_class(), &LaurentPoly::monomial(sign, m as i32) * &a.euler_class());
    }

    #[test]
    fn modules_survive_json_and_double_dualization(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = DualityContext::new(random_pair(&mut r, 3), Window::new(Some(-8), None)).unwrap();
        let m = random_module(&mut r, &ctx.source, 4, 12);
        let back = module_from_json(&module_to_json(&m)).unwrap();
        prop_assert!(back == m);
        let dd = dualize(&dualize(&m));
        prop_assert_eq!(dd.dims(), m.dims());
        prop_assert_eq!(dd.cohomology(), m.cohomology());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn kappa_respects_the_grading_rule(seed in any::<u64>(), n in -2i64..=2, m in -2i64..=2) {
        let mut r = rng(seed);
        let ctx = DualityContext::new(random_pair(&mut r, 2), Window::new(Some(-8), None)).unwrap();
        let x = random_module(&mut r, &ctx.source, 4, 8);
        let lhs = ctx.kappa(&x.shift(n, m)).unwrap();
        let rhs = ctx.kappa(&x).unwrap().shift(m - n, -m);
        let w = lhs.window().intersect(&rhs.window());
        prop_assert_eq!(lhs.cohomology().restrict(&w), rhs.cohomology().restrict(&w));
    }
}
