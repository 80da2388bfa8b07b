//! The extended affine Hecke algebra in the Bernstein basis `theta_x T_w`.

mod elt;
mod morphism;
mod relations;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use elt::HeckeElt;
pub use morphism::{AlgebraMorphismSpec, MorphismError, Twist};
pub use relations::{weight_box, RelationCheck, RelationOptions, RelationStatus};

use crate::laurent::LaurentPoly;
use crate::rootdata::{RootDatum, Weight, WeylElt};

/// `v - v^-1`
pub fn v_minus_v_inv() -> LaurentPoly {
    &LaurentPoly::v() - &LaurentPoly::v_inv()
}

/// Multiplication context for the Hecke algebra of a fixed root datum.
///
/// Caches the normal forms of `T_w theta_y` and `T_u T_w`; the caches are
/// shared between threads.
pub struct HeckeAlgebra {
    datum: Arc<RootDatum>,
    t_theta: RwLock<HashMap<(WeylElt, Weight), HeckeElt>>,
    t_t: RwLock<HashMap<(WeylElt, WeylElt), HeckeElt>>,
}

impl std::fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HeckeAlgebra").field("type", &self.datum.label()).finish()
    }
}

impl HeckeAlgebra {
    pub fn new(datum: RootDatum) -> Self {
        Self::from_arc(Arc::new(datum))
    }

    pub fn from_arc(datum: Arc<RootDatum>) -> Self {
        Self { datum, t_theta: RwLock::default(), t_t: RwLock::default() }
    }

    pub fn from_label(label: &str) -> Result<Self, crate::rootdata::RootDataError> {
        Ok(Self::new(RootDatum::from_label(label)?))
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn one(&self) -> HeckeElt {
        self.theta(&Weight::zero(self.rank()))
    }

    /// `theta_x T_e`
    pub fn theta(&self, x: &Weight) -> HeckeElt {
        assert_eq!(x.rank(), self.rank(), "weight has wrong rank");
        HeckeElt::monomial(LaurentPoly::one(), x.clone(), WeylElt::identity())
    }

    /// `T_{s_i}`
    pub fn t_alpha(&self, i: usize) -> HeckeElt {
        assert!(i < self.rank(), "simple root index out of range");
        HeckeElt::monomial(LaurentPoly::one(), Weight::zero(self.rank()), self.datum.simple_reflection(i))
    }

    /// `t_alpha = v T_alpha`
    pub fn small_t(&self, i: usize) -> HeckeElt {
        self.t_alpha(i).scale(&LaurentPoly::v())
    }

    /// `T_w`
    pub fn t_w(&self, w: &WeylElt) -> HeckeElt {
        HeckeElt::monomial(LaurentPoly::one(), Weight::zero(self.rank()), w.clone())
    }

    /// `theta_x T_w`
    pub fn basis(&self, x: &Weight, w: &WeylElt) -> HeckeElt {
        HeckeElt::monomial(LaurentPoly::one(), x.clone(), w.clone())
    }

    pub fn scalar(&self, c: LaurentPoly) -> HeckeElt {
        self.one().scale(&c)
    }

    /// Right multiplication by `T_{s_i}`, using the quadratic relation.
    pub fn mul_t_right(&self, a: &HeckeElt, i: usize) -> HeckeElt {
        let d = &self.datum;
        let s = d.simple_reflection(i);
        let q = v_minus_v_inv();
        let mut out = HeckeElt::zero();
        for ((x, w), c) in a.terms() {
            let ws = d.weyl_mul(w, &s);
            out.add_term(x.clone(), ws.clone(), c.clone());
            if ws.length() < w.length() {
                out.add_term(x.clone(), w.clone(), c * &q);
            }
        }
        out
    }

    /// `T_{s_i} theta_x` in normal form (Bernstein-Lusztig commutation).
    fn t_simple_theta(&self, i: usize, x: &Weight) -> HeckeElt {
        let d = &self.datum;
        let s = d.simple_reflection(i);
        let alpha = d.simple_root(i);
        let mut out = HeckeElt::monomial(LaurentPoly::one(), d.act(&s, x), s);
        let n = x.coords()[i];
        let q = v_minus_v_inv();
        let e = WeylElt::identity();
        if n > 0 {
            for k in 0..n {
                out.add_term(x - &alpha.scale(k), e.clone(), q.clone());
            }
        } else if n < 0 {
            let mq = -&q;
            for k in 1..=-n {
                out.add_term(x + &alpha.scale(k), e.clone(), mq.clone());
            }
        }
        out
    }

    /// `T_w theta_y` in normal form.
    fn t_w_theta(&self, w: &WeylElt, y: &Weight) -> HeckeElt {
        if w.is_identity() {
            return self.theta(y);
        }
        let key = (w.clone(), y.clone());
        if let Some(hit) = self.t_theta.read().unwrap().get(&key) {
            return hit.clone();
        }
        let d = &self.datum;
        let i = *w.word().last().unwrap();
        let prefix = d.weyl_mul(w, &d.simple_reflection(i));
        let step = self.t_simple_theta(i, y);
        let mut out = HeckeElt::zero();
        for ((z, u), c) in step.terms() {
            let inner = self.t_w_theta(&prefix, z).scale(c);
            if u.is_identity() {
                out += &inner;
            } else {
                out += &self.mul_t_right(&inner, i);
            }
        }
        self.t_theta.write().unwrap().insert(key, out.clone());
        out
    }

    /// `T_u T_w` in normal form.
    fn t_u_t_w(&self, u: &WeylElt, w: &WeylElt) -> HeckeElt {
        let key = (u.clone(), w.clone());
        if let Some(hit) = self.t_t.read().unwrap().get(&key) {
            return hit.clone();
        }
        let mut out = self.t_w(u);
        for &i in w.word() {
            out = self.mul_t_right(&out, i);
        }
        self.t_t.write().unwrap().insert(key, out.clone());
        out
    }

    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for ((x, u), ca) in a.terms() {
            for ((y, w), cb) in b.terms() {
                let cab = ca * cb;
                for ((z, u2), c1) in self.t_w_theta(u, y).terms() {
                    let xz = x + z;
                    let c = &cab * c1;
                    for ((_, w2), c2) in self.t_u_t_w(u2, w).terms() {
                        out.add_term(xz.clone(), w2.clone(), &c * c2);
                    }
                }
            }
        }
        out
    }

    /// Product of a list of elements, left to right.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a HeckeElt>) -> HeckeElt {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &HeckeElt, n: u32) -> HeckeElt {
        let mut out = self.one();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    /// `T_{s_i}^{-1} = T_{s_i} - (v - v^-1)`.
    pub fn t_alpha_inv(&self, i: usize) -> HeckeElt {
        &self.t_alpha(i) - &self.scalar(v_minus_v_inv())
    }

    /// Inverse of `T_w`, as the reversed product of inverse generators.
    pub fn t_w_inv(&self, w: &WeylElt) -> HeckeElt {
        let mut out = self.one();
        for &i in w.word().iter().rev() {
            out = self.mul(&out, &self.t_alpha_inv(i));
        }
        out
    }

    /// Inverse of a unit monomial `c theta_x T_w` with `c = ±v^k`.
    ///
    /// Returns `None` for anything else; general invertibility is not decided.
    pub fn inverse(&self, a: &HeckeElt) -> Option<HeckeElt> {
        if a.num_terms() != 1 {
            return None;
        }
        let ((x, w), c) = a.terms().next().unwrap();
        let c_inv = c.inverse()?;
        Some(self.mul(&self.t_w_inv(w), &self.theta(&-x)).scale(&c_inv))
    }

    /// Image of `theta_x T_w` under the closed-form `iota`.
    pub fn iota(&self, a: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for ((x, w), c) in a.terms() {
            let mut c = c.substitute_neg_v();
            if w.length() % 2 == 1 {
                c = -c;
            }
            out.add_term(x.clone(), w.clone(), c);
        }
        out
    }

    /// The Iwahori-Matsumoto involution.
    pub fn im(&self, a: &HeckeElt) -> HeckeElt {
        self.apply_morphism(&AlgebraMorphismSpec::iwahori_matsumoto(self.rank()), a)
            .expect("IM spec covers all generators")
    }

    /// `iota o IM`.
    pub fn k_im(&self, a: &HeckeElt) -> HeckeElt {
        self.iota(&self.im(a))
    }
}

#[cfg(test)]
mod tests;
