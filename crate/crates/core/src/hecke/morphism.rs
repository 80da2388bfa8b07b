use std::collections::BTreeMap;

use thiserror::Error;

use super::{v_minus_v_inv, HeckeAlgebra, HeckeElt};
use crate::laurent::LaurentPoly;
use crate::rootdata::{Weight, WeylElt};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("no image given for T[{}]", .0 + 1)]
    MissingT(usize),
    #[error("no image given for theta{0}")]
    MissingTheta(Weight),
}

/// How a morphism acts on scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Identity,
    /// `v -> -v`
    NegV,
}

impl Twist {
    pub fn apply(self, c: &LaurentPoly) -> LaurentPoly {
        match self {
            Twist::Identity => c.clone(),
            Twist::NegV => c.substitute_neg_v(),
        }
    }
}

/// Images of the generators `T_i` and `theta_{±omega_i}`, plus a scalar twist.
///
/// Extended to all of the algebra along the canonical reduced word of `w` and the
/// decomposition of `x` into signed fundamental weights.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMorphismSpec {
    pub image_of_t: BTreeMap<usize, HeckeElt>,
    pub image_of_theta: BTreeMap<Weight, HeckeElt>,
    pub twist: Twist,
}

impl AlgebraMorphismSpec {
    /// Builds a spec from per-generator closures.
    pub fn from_fns(
        rank: usize,
        t: impl Fn(usize) -> HeckeElt,
        theta: impl Fn(&Weight) -> HeckeElt,
        twist: Twist,
    ) -> Self {
        let image_of_t = (0..rank).map(|i| (i, t(i))).collect();
        let mut image_of_theta = BTreeMap::new();
        for i in 0..rank {
            let w = Weight::fundamental(rank, i);
            image_of_theta.insert(w.clone(), theta(&w));
            let m = -&w;
            image_of_theta.insert(m.clone(), theta(&m));
        }
        Self { image_of_t, image_of_theta, twist }
    }

    pub fn identity(rank: usize) -> Self {
        Self::from_fns(rank, |i| t_gen(rank, i), |x| theta_gen(x), Twist::Identity)
    }

    /// `T_i -> -T_i^-1 = -T_i + v - v^-1`, `theta_x -> theta_{-x}`.
    pub fn iwahori_matsumoto(rank: usize) -> Self {
        let c = HeckeElt::monomial(v_minus_v_inv(), Weight::zero(rank), WeylElt::identity());
        Self::from_fns(rank, |i| &c - &t_gen(rank, i), |x| theta_gen(&-x), Twist::Identity)
    }

    /// `T_i -> -T_i`, `theta_x -> theta_x`, `v -> -v`.
    pub fn iota(rank: usize) -> Self {
        Self::from_fns(rank, |i| -&t_gen(rank, i), theta_gen, Twist::NegV)
    }

    /// `T_i -> T_i - v + v^-1`, `theta_x -> theta_{-x}`, `v -> -v`.
    pub fn k_im(rank: usize) -> Self {
        let c = HeckeElt::monomial(v_minus_v_inv(), Weight::zero(rank), WeylElt::identity());
        Self::from_fns(rank, |i| &t_gen(rank, i) - &c, |x| theta_gen(&-x), Twist::NegV)
    }
}

fn t_gen(rank: usize, i: usize) -> HeckeElt {
    HeckeElt::monomial(LaurentPoly::one(), Weight::zero(rank), WeylElt::simple(i))
}

fn theta_gen(x: &Weight) -> HeckeElt {
    HeckeElt::monomial(LaurentPoly::one(), x.clone(), WeylElt::identity())
}

impl HeckeAlgebra {
    pub fn spec_t(&self, spec: &AlgebraMorphismSpec, i: usize) -> Result<HeckeElt, MorphismError> {
        spec.image_of_t.get(&i).cloned().ok_or(MorphismError::MissingT(i))
    }

    /// Image of `theta_x`, as a product of images of `theta_{±omega_i}`.
    pub fn spec_theta(&self, spec: &AlgebraMorphismSpec, x: &Weight) -> Result<HeckeElt, MorphismError> {
        let r = self.rank();
        let mut out = self.one();
        for (i, &n) in x.coords().iter().enumerate() {
            if n == 0 {
                continue;
            }
            let g = Weight::fundamental(r, i).scale(n.signum());
            let img = spec.image_of_theta.get(&g).ok_or_else(|| MorphismError::MissingTheta(g.clone()))?;
            for _ in 0..n.abs() {
                out = self.mul(&out, img);
            }
        }
        Ok(out)
    }

    /// Applies a spec, factoring each `T_w` along the given word function.
    fn apply_with(
        &self,
        spec: &AlgebraMorphismSpec,
        a: &HeckeElt,
        word: impl Fn(&WeylElt) -> Vec<usize>,
    ) -> Result<HeckeElt, MorphismError> {
        let mut out = HeckeElt::zero();
        for ((x, w), c) in a.terms() {
            let mut term = self.spec_theta(spec, x)?;
            for i in word(w) {
                term = self.mul(&term, &self.spec_t(spec, i)?);
            }
            out += &term.scale(&spec.twist.apply(c));
        }
        Ok(out)
    }

    pub fn apply_morphism(&self, spec: &AlgebraMorphismSpec, a: &HeckeElt) -> Result<HeckeElt, MorphismError> {
        self.apply_with(spec, a, |w| w.word().to_vec())
    }

    /// Same as [`HeckeAlgebra::apply_morphism`] but factoring `T_w` along an
    /// alternative reduced word (greatest left descent first).
    pub fn apply_morphism_alt_word(
        &self,
        spec: &AlgebraMorphismSpec,
        a: &HeckeElt,
    ) -> Result<HeckeElt, MorphismError> {
        self.apply_with(spec, a, |w| self.datum().alternative_reduced_word(w))
    }
}
