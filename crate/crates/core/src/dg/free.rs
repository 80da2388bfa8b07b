//! Free modules and cones of multiplication maps, truncated to a window.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Bideg, ChainMap, DgError, DgModule, KoszulAlgebra, ModuleBuilder, Window};
use crate::linalg::{Matrix, Q};

/// Basis key of the free module: even exponents and the set of odd generators.
pub type FreeKey = (Vec<u32>, u32);

fn wedge_sign(set: u32, k: usize) -> Q {
    if (set & ((1u32 << k) - 1)).count_ones() % 2 == 1 {
        -Q::one()
    } else {
        Q::one()
    }
}

fn bump(e: &[u32], l: usize) -> Vec<u32> {
    let mut e = e.to_vec();
    e[l] += 1;
    e
}

/// Bidegree of the monomial `y^e x_I` relative to its generator.
///
/// Panics if `e` is longer than the number of even generators.
pub fn monomial_bidegree(a: &KoszulAlgebra, e: &[u32], set: u32) -> Bideg {
    let mut b = (0, 0);
    for (l, &k) in e.iter().enumerate() {
        let p = a.sym()[l].bidegree;
        b = (b.0 + p.0 * k as i64, b.1 + p.1 * k as i64);
    }
    for (k, g) in a.ext().iter().enumerate() {
        if set & (1 << k) != 0 {
            b = (b.0 + g.bidegree.0, b.1 + g.bidegree.1);
        }
    }
    b
}

/// The free module of rank one generated in bidegree `base`, keeping only
/// internal degrees in `window`.
pub fn free_module_keyed(a: &Arc<KoszulAlgebra>, base: Bideg, window: Window) -> Result<ModuleBuilder<FreeKey>, DgError> {
    let ne = a.n_ext();
    let ns = a.n_sym();
    if ne > 16 {
        return Err(DgError::Algebra("too many odd generators".into()));
    }
    let w = a.internal_weight();
    let edge = if w > 0 { window.hi } else { window.lo };
    let top = match edge {
        Some(e) => ((e - base.1) / w).max(-1),
        None if ns == 0 => ne as i64,
        None => return Err(DgError::WindowTooSmall("a free module needs a bound on its growth side".into())),
    };
    let mut b = ModuleBuilder::new(a.clone(), window);
    let mut keys = Vec::new();
    for total in 0..=top.max(0) as usize {
        for set in 0u32..(1 << ne) {
            let k = set.count_ones() as usize;
            if k > total {
                continue;
            }
            for e in a.sym_monomials(total - k) {
                let mb = monomial_bidegree(a, &e, set);
                let key = (e, set);
                if b.add_basis(key.clone(), (base.0 + mb.0, base.1 + mb.1)) {
                    keys.push(key);
                }
            }
        }
    }
    let diff = a.diff();
    for key in &keys {
        let (e, set) = key;
        let mut t = 0;
        for k in 0..ne {
            if set & (1 << k) == 0 {
                continue;
            }
            let sg = if t % 2 == 1 { -Q::one() } else { Q::one() };
            for l in 0..ns {
                let c = diff.get(l, k);
                if !c.is_zero() {
                    b.add_d(key, &(bump(e, l), set & !(1 << k)), &sg * c);
                }
            }
            t += 1;
        }
        for k in 0..ne {
            if set & (1 << k) == 0 {
                b.add_action(k, key, &(e.clone(), set | (1 << k)), wedge_sign(*set, k));
            }
        }
        for l in 0..ns {
            b.add_action(ne + l, key, &(bump(e, l), *set), Q::one());
        }
    }
    Ok(b)
}

pub fn free_module(a: &Arc<KoszulAlgebra>, base: Bideg, window: Window) -> Result<DgModule, DgError> {
    free_module_keyed(a, base, window)?.build()
}

/// Cone of right multiplication by the even monomial `y^e` on the free module
/// generated at `base`.
pub fn multiplication_cone(a: &Arc<KoszulAlgebra>, e: &[u32], base: Bideg, window: Window) -> Result<DgModule, DgError> {
    if e.len() != a.n_sym() {
        return Err(DgError::Module(format!("exponent has {} entries for {} even generators", e.len(), a.n_sym())));
    }
    let shift = monomial_bidegree(a, e, 0);
    let tgt = free_module_keyed(a, base, window)?;
    let src = free_module_keyed(a, (base.0 - shift.0, base.1 - shift.1), window)?;
    let mut f = ChainMap::default();
    for (bd, keys) in src.basis() {
        let tkeys = tgt.basis().get(bd).cloned().unwrap_or_default();
        let mut m = Matrix::zeros(tkeys.len(), keys.len());
        for (c, (ex, set)) in keys.iter().enumerate() {
            let prod: Vec<u32> = ex.iter().zip(e).map(|(x, y)| x + y).collect();
            if let Some(r) = tkeys.iter().position(|k| k.0 == prod && k.1 == *set) {
                m.set(r, c, Q::one());
            }
        }
        f.maps.insert(*bd, m);
    }
    Ok(tgt.build()?.cone(&src.build()?, &f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::SubspacePair;

    fn koszul_line() -> Arc<KoszulAlgebra> {
        Arc::new(SubspacePair::from_ints(1, &[], &[vec![1]]).unwrap().build_t())
    }

    #[test]
    fn free_module_is_a_resolution_of_the_point() {
        let a = koszul_line();
        let m = free_module(&a, (0, 0), Window::new(None, Some(8))).unwrap();
        m.check_invariants().unwrap();
        // Q[y] ⊗ Λ(x) with dx = y is quasi-isomorphic to Q, up to the cut
        let h = m.cohomology();
        assert_eq!(h.get((0, 0)), 1);
        assert_eq!(h.restrict(&Window::new(None, Some(6))).total(), 1);
    }

    #[test]
    fn cone_of_multiplication_is_valid() {
        let p = SubspacePair::from_ints(2, &[vec![1, 0]], &[vec![1, 1], vec![0, 1]]).unwrap();
        let a = Arc::new(p.build_t());
        let c = multiplication_cone(&a, &[1, 0], (0, 0), Window::new(None, Some(6))).unwrap();
        c.check_invariants().unwrap();
    }
}
