//! Seeded generators for subspace pairs, dg-modules and Hecke elements.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dg::{free_module, multiplication_cone, Bideg, DgModule, KoszulAlgebra, SubspacePair, Window};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::laurent::LaurentPoly;
use crate::linalg::{q, Matrix, Q};
use crate::rootdata::Weight;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of trial `i` of a suite run with `seed`.
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    rng(seed ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15)).gen()
}

fn random_vectors(rng: &mut Rng64, n: usize, k: usize) -> Vec<Vec<i64>> {
    loop {
        let vs: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let qs: Vec<Vec<Q>> = vs.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
        if crate::linalg::rank_of_vectors(&qs, n) == k {
            return vs;
        }
    }
}

/// A subspace of `Q^n` of dimension `k` with a small integer basis.
pub fn random_subspace(rng: &mut Rng64, n: usize, k: usize) -> Vec<Vec<i64>> {
    random_vectors(rng, n, k)
}

/// A pair of subspaces in an ambient space of dimension at most `max_n`.
pub fn random_pair(rng: &mut Rng64, max_n: usize) -> SubspacePair {
    let n = rng.gen_range(1..=max_n);
    random_pair_of_dim(rng, n)
}

/// A pair of subspaces of `Q^n`.
pub fn random_pair_of_dim(rng: &mut Rng64, n: usize) -> SubspacePair {
    let d1 = rng.gen_range(0..=n);
    let d2 = rng.gen_range(0..=n);
    let f1 = random_vectors(rng, n, d1);
    let f2 = random_vectors(rng, n, d2);
    SubspacePair::from_ints(n, &f1, &f2).expect("independent by construction")
}

/// The window that cuts a module over `a` at distance `depth` on its growth side.
pub fn growth_window(a: &KoszulAlgebra, depth: i64) -> Window {
    if a.growth_sign() > 0 {
        Window::new(None, Some(depth))
    } else {
        Window::new(Some(-depth), None)
    }
}

fn random_unimodular(rng: &mut Rng64, n: usize) -> (Matrix, Matrix) {
    let mut p = Matrix::identity(n);
    let mut inv = Matrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            return (p.neg(), inv.neg());
        }
        return (p, inv);
    }
    for _ in 0..n + 1 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = *[-2, -1, 1, 2].choose(rng).unwrap();
        let mut e = Matrix::identity(n);
        e.set(i, j, q(c));
        let mut e_inv = Matrix::identity(n);
        e_inv.set(i, j, q(-c));
        p = e.mul(&p);
        inv = inv.mul(&e_inv);
    }
    (p, inv)
}

/// Changes basis in every component by a random unimodular integer matrix.
pub fn conjugate(rng: &mut Rng64, m: &DgModule) -> DgModule {
    let a = m.algebra().clone();
    let bases: std::collections::BTreeMap<Bideg, (Matrix, Matrix)> =
        m.dims().iter().map(|(b, n)| (*b, random_unimodular(rng, *n))).collect();
    let conj = |src: Bideg, tgt: Bideg, x: &Matrix| match (bases.get(&src), bases.get(&tgt)) {
        (Some((_, si)), Some((tp, _))) => tp.mul(x).mul(si),
        _ => x.clone(),
    };
    let d = m.dims().keys().map(|&b| (b, conj(b, (b.0 + 1, b.1), &m.d_at(b)))).collect();
    let actions = (0..a.n_gens())
        .map(|g| {
            let p = a.generator(g).bidegree;
            m.dims().keys().map(|&b| (b, conj(b, (b.0 + p.0, b.1 + p.1), &m.action_at(g, b)))).collect()
        })
        .collect();
    DgModule::new(a, m.dims().clone(), d, actions, m.window()).expect("conjugation preserves shapes")
}

fn random_bideg(rng: &mut Rng64) -> Bideg {
    (rng.gen_range(-2..=2), rng.gen_range(-2..=2))
}

/// A two-term acyclic complex `Q -> Q` with zero action.
fn acyclic_piece(rng: &mut Rng64, a: &Arc<KoszulAlgebra>) -> DgModule {
    let b = random_bideg(rng);
    let mut dims = std::collections::BTreeMap::new();
    dims.insert(b, 1);
    dims.insert((b.0 + 1, b.1), 1);
    let c = *[-2i64, -1, 1, 3].choose(rng).unwrap();
    let d = [(b, Matrix::from_int_rows(&[vec![c]]))].into_iter().collect();
    let actions = vec![Default::default(); a.n_gens()];
    DgModule::new(a.clone(), dims, d, actions, Window::FULL).expect("valid complex")
}

/// One building block: a skyscraper, a truncated free module, a cone of a
/// multiplication map, or an acyclic two-term complex.
fn random_block(rng: &mut Rng64, a: &Arc<KoszulAlgebra>, depth: i64) -> DgModule {
    let w = growth_window(a, depth);
    match rng.gen_range(0..4) {
        0 => DgModule::skyscraper(a.clone(), random_bideg(rng)),
        1 => {
            let b = (rng.gen_range(-1..=1), 0);
            free_module(a, b, w).expect("bounded window")
        }
        2 if a.n_sym() > 0 => {
            let mut e = vec![0; a.n_sym()];
            e[rng.gen_range(0..a.n_sym())] = 1;
            multiplication_cone(a, &e, (0, 0), w).expect("bounded window")
        }
        _ => acyclic_piece(rng, a),
    }
}

/// A random module over `a`, truncated at `depth` on the growth side, with at
/// most `max_bidegrees` nonzero components.
pub fn random_module(rng: &mut Rng64, a: &Arc<KoszulAlgebra>, depth: i64, max_bidegrees: usize) -> DgModule {
    loop {
        let blocks = rng.gen_range(1..=2);
        let mut m = random_block(rng, a, depth);
        for _ in 1..blocks {
            m = m.direct_sum(&random_block(rng, a, depth));
        }
        if rng.gen_bool(0.5) {
            let (n, s) = (rng.gen_range(-1..=1), 0);
            m = m.shift(n, s);
        }
        let m = conjugate(rng, &m);
        if m.dims().len() <= max_bidegrees {
            return m;
        }
    }
}

/// `c * id + (h d + d h)` for a random scalar `c` and a random degree `-1`
/// map `h` commuting with the action, which here means `h = 0` unless the
/// action vanishes.
pub fn random_endomorphism(rng: &mut Rng64, m: &DgModule) -> crate::dg::ChainMap {
    let c: i64 = rng.gen_range(-2..=2);
    let mut f = crate::dg::ChainMap::identity(m).scale(&q(c));
    let trivial = (0..m.algebra().n_gens()).all(|g| m.dims().keys().all(|&b| m.action_at(g, b).is_zero()));
    if trivial {
        for &b in m.dims().keys() {
            let below = (b.0 - 1, b.1);
            let (nb, nl) = (m.dim(b), m.dim(below));
            if nl == 0 {
                continue;
            }
            let h = Matrix::from_rows_with_cols(
                (0..nl).map(|_| (0..nb).map(|_| q(rng.gen_range(-1..=1))).collect()).collect(),
                nb,
            );
            // h: M^b -> M^{b-1}; adds d h at b and h d at b - 1
            let dh = m.d_at(below).mul(&h);
            let entry = f.maps.entry(b).or_insert_with(|| Matrix::zeros(nb, nb));
            *entry = entry.add(&dh);
            let hd = h.mul(&m.d_at(below));
            let entry = f.maps.entry(below).or_insert_with(|| Matrix::zeros(nl, nl));
            *entry = entry.add(&hd);
        }
    }
    f
}

/// A Laurent polynomial with at most `terms` terms, coefficients in `[-3, 3]`
/// and exponents in `[-3, 3]`.
pub fn random_laurent(rng: &mut Rng64, terms: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        p += &LaurentPoly::monomial(rng.gen_range(-3..=3i64), rng.gen_range(-3..=3));
    }
    p
}

/// A Hecke element with a few Bernstein monomials.
pub fn random_hecke(rng: &mut Rng64, h: &HeckeAlgebra, terms: usize, bound: i64) -> HeckeElt {
    let elements = h.datum().all_elements().expect("finite Weyl group");
    let rank = h.rank();
    let mut out = HeckeElt::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let x = Weight((0..rank).map(|_| rng.gen_range(-bound..=bound)).collect());
        let w = elements.choose(rng).expect("nonempty group").clone();
        out.add_term(x, w, random_laurent(rng, 2));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_modules_are_valid() {
        let mut r = rng(7);
        for _ in 0..40 {
            let p = random_pair(&mut r, 3);
            for a in [Arc::new(p.build_t()), Arc::new(p.build_r())] {
                let m = random_module(&mut r, &a, 4, 12);
                m.check_invariants().unwrap();
                assert!(m.dims().len() <= 12);
                let f = random_endomorphism(&mut r, &m);
                assert!(f.is_chain_map(&m, &m));
            }
        }
    }

    #[test]
    fn euler_class_matches_cohomology() {
        let mut r = rng(11);
        for _ in 0..40 {
            let p = random_pair(&mut r, 3);
            let a = Arc::new(p.build_t());
            let m = random_module(&mut r, &a, 4, 12);
            assert_eq!(m.chain_euler_class(), m.euler_class());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_pair(&mut rng(3), 3);
        let b = random_pair(&mut rng(3), 3);
        assert_eq!(a, b);
        assert_ne!(trial_seed(1, 0), trial_seed(1, 1));
    }
}
