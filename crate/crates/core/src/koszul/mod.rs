//! Linear Koszul duality at a point: `kappa = regrade ∘ transform ∘ dualize`.
//!
//! The transform sends a module `N` over `A = Sym(y) ⊗ Λ(x)` to `S ⊗ N`, where
//! `S` is the target algebra before regrading, with differential
//! `d_S ⊗ 1 + 1 ⊗ d_N + K` and `K` the twisting element pairing target
//! generators with source generators. Everything is generic in the sign of the
//! internal weight, so the same code computes the duality in both directions.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::dg::{Bideg, DgError, DgModule, Generator, KoszulAlgebra, ModuleBuilder, SubspacePair, Window};
use crate::linalg::{Matrix, Q};

/// Deliberate sign errors, used only to check that the invariant checks bite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignPerturbation {
    #[default]
    None,
    /// Use `+1 ⊗ d_N` instead of the Koszul sign `(-1)^{|s|}`.
    DropKoszulSign,
    /// Drop the sign `(-1)^{|s|}` in the twisting term of odd source generators.
    DropTwistSign,
}

/// Graded dual: component `(i, j)` is the dual of `M^{-i,-j}`, and every
/// structure map is the plain transpose.
pub fn dualize(m: &DgModule) -> DgModule {
    let a = m.algebra();
    let neg = |b: Bideg| (-b.0, -b.1);
    let dims = m.dims().iter().map(|(b, n)| (neg(*b), *n)).collect();
    let d = m.d_table().iter().map(|(b, x)| (neg((b.0 + 1, b.1)), x.transpose())).collect();
    let actions = (0..a.n_gens())
        .map(|g| {
            let p = a.generator(g).bidegree;
            m.action_table(g).iter().map(|(b, x)| (neg((b.0 + p.0, b.1 + p.1)), x.transpose())).collect()
        })
        .collect();
    DgModule::new(a.clone(), dims, d, actions, m.window().negate()).expect("transposes have matching shapes")
}

/// Moves `(i, j)` to `(i + sign * j, j)` and re-attaches the result to `algebra`.
pub fn regrade(m: &DgModule, sign: i64, algebra: Arc<KoszulAlgebra>) -> DgModule {
    let mv = |b: Bideg| (b.0 + sign * b.1, b.1);
    let src = m.algebra();
    assert_eq!(src.n_ext(), algebra.n_ext());
    assert_eq!(src.n_sym(), algebra.n_sym());
    for g in 0..algebra.n_gens() {
        assert_eq!(mv(src.generator(g).bidegree), algebra.generator(g).bidegree, "regrading does not match algebra");
    }
    let dims = m.dims().iter().map(|(b, n)| (mv(*b), *n)).collect();
    let d = m.d_table().iter().map(|(b, x)| (mv(*b), x.clone())).collect();
    let actions = (0..algebra.n_gens())
        .map(|g| m.action_table(g).iter().map(|(b, x)| (mv(*b), x.clone())).collect())
        .collect();
    DgModule::new(algebra, dims, d, actions, m.window()).expect("regrading preserves shapes")
}

/// The algebra with odd generators dual to the even ones of `a` and vice
/// versa, internal weight negated, and differential `-d^T`.
pub fn koszul_dual_algebra(a: &KoszulAlgebra) -> KoszulAlgebra {
    let w = a.internal_weight();
    let ext = a.sym().iter().map(|g| Generator { name: format!("{}*", g.name), bidegree: (-1, -w) }).collect();
    let sym = a.ext().iter().map(|g| Generator { name: format!("{}*", g.name), bidegree: (0, -w) }).collect();
    KoszulAlgebra::with_weight(ext, sym, a.diff().transpose().neg(), -w).expect("dual of a valid algebra")
}

/// Data of a twisted Koszul transform from modules over `source` to modules
/// over `target`.
#[derive(Clone, Debug)]
pub struct KoszulTransform {
    source: Arc<KoszulAlgebra>,
    target: Arc<KoszulAlgebra>,
    /// Target generators before regrading.
    pre: Arc<KoszulAlgebra>,
    /// Pairs even target generators with odd source ones: `n_sym(target) x n_ext(source)`.
    alpha: Matrix,
    /// Pairs odd target generators with even source ones: `n_ext(target) x n_sym(source)`.
    beta: Matrix,
}

impl KoszulTransform {
    pub fn new(
        source: Arc<KoszulAlgebra>,
        target: Arc<KoszulAlgebra>,
        alpha: Matrix,
        beta: Matrix,
    ) -> Result<Self, DgError> {
        let w = source.internal_weight();
        if w.abs() != 2 {
            return Err(DgError::Algebra("source generators must have internal degree ±2".into()));
        }
        if target.internal_weight() != -w {
            return Err(DgError::Algebra("target internal weight must be opposite to the source".into()));
        }
        if alpha.shape() != (target.n_sym(), source.n_ext()) || beta.shape() != (target.n_ext(), source.n_sym()) {
            return Err(DgError::Algebra("pairing matrices have the wrong shape".into()));
        }
        // d(K) = 0
        let dk = alpha.mul(&source.diff().transpose()).add(&target.diff().mul(&beta));
        if !dk.is_zero() {
            return Err(DgError::Algebra("twisting element is not closed".into()));
        }
        let sigma = w.signum();
        let pre_gen = |g: &Generator| {
            let (i, j) = g.bidegree;
            Generator { name: g.name.clone(), bidegree: (i - sigma * j, j) }
        };
        let pre = KoszulAlgebra::with_weight(
            target.ext().iter().map(pre_gen).collect(),
            target.sym().iter().map(pre_gen).collect(),
            target.diff().clone(),
            -w,
        )?;
        Ok(Self { source, target, pre: Arc::new(pre), alpha, beta })
    }

    /// Transform with the identity pairing into [`koszul_dual_algebra`]-shaped `target`.
    pub fn canonical(source: Arc<KoszulAlgebra>, target: Arc<KoszulAlgebra>) -> Result<Self, DgError> {
        let alpha = Matrix::identity(source.n_ext());
        let beta = Matrix::identity(source.n_sym());
        Self::new(source, target, alpha, beta)
    }

    pub fn source(&self) -> &Arc<KoszulAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<KoszulAlgebra> {
        &self.target
    }

    /// Growth sign of the source; the output grows the opposite way.
    pub fn source_sign(&self) -> i64 {
        self.source.growth_sign()
    }

    /// `S ⊗ N` before regrading, keeping internal degrees inside `window`.
    pub fn transform(&self, n: &DgModule, window: Window, perturb: SignPerturbation) -> Result<DgModule, DgError> {
        if n.algebra() != &self.source {
            return Err(DgError::Module("module is not over the source algebra".into()));
        }
        let pre = &self.pre;
        let sigma = self.source_sign();
        let (ne, ns) = (pre.n_ext(), pre.n_sym());
        let src_ext = self.source.n_ext();
        let w_abs = 2i64;
        // how many target generators fit between a component and the window edge
        let max_deg = |j: i64| -> Result<usize, DgError> {
            if ns == 0 {
                return Ok(ne);
            }
            let edge = if sigma > 0 { window.lo } else { window.hi };
            let edge = edge.ok_or_else(|| DgError::WindowTooSmall("output window needs a bound on its growth side".into()))?;
            Ok((sigma * (j - edge)).max(-1).div_euclid(w_abs).max(0) as usize)
        };

        type Key = (Vec<u32>, u32, Bideg, usize);
        let mut b: ModuleBuilder<Key> = ModuleBuilder::new(pre.clone(), window);
        let sbideg = |e: &[u32], set: u32| -> Bideg {
            let deg = e.iter().sum::<u32>() as i64;
            let k = set.count_ones() as i64;
            (2 * deg + k, -sigma * 2 * (deg + k))
        };
        let mut keys: Vec<Key> = Vec::new();
        for (&nb, &dim) in n.dims() {
            let top = max_deg(nb.1)?;
            for total in 0..=top {
                for set in 0u32..(1 << ne) {
                    let k = set.count_ones() as usize;
                    if k > total {
                        continue;
                    }
                    for e in crate::dg::monomials(ns, total - k) {
                        let sb = sbideg(&e, set);
                        for idx in 0..dim {
                            let key = (e.clone(), set, nb, idx);
                            if b.add_basis(key.clone(), (sb.0 + nb.0, sb.1 + nb.1)) {
                                keys.push(key);
                            }
                        }
                    }
                }
            }
        }

        let bump = |e: &[u32], a: usize| {
            let mut e = e.to_vec();
            e[a] += 1;
            e
        };
        let d_b = pre.diff();
        for key in &keys {
            let (e, set, nb, idx) = key;
            let parity_s = set.count_ones() % 2 == 1;
            let s_sign = if parity_s { -Q::one() } else { Q::one() };
            // d_S on the exterior factor
            let mut t = 0;
            for l in 0..ne {
                if set & (1 << l) == 0 {
                    continue;
                }
                let sg = if t % 2 == 1 { -Q::one() } else { Q::one() };
                for a in 0..ns {
                    let c = d_b.get(a, l);
                    if !c.is_zero() {
                        b.add_d(key, &(bump(e, a), set & !(1 << l), *nb, *idx), &sg * c);
                    }
                }
                t += 1;
            }
            // 1 ⊗ d_N with the Koszul sign
            let koszul = if perturb == SignPerturbation::DropKoszulSign { Q::one() } else { s_sign.clone() };
            let dn = n.d_at(*nb);
            let tb = (nb.0 + 1, nb.1);
            for r in 0..dn.rows() {
                let c = dn.get(r, *idx);
                if !c.is_zero() {
                    b.add_d(key, &(e.clone(), *set, tb, r), &koszul * c);
                }
            }
            // twisting term: even target generators against odd source generators
            let twist = if perturb == SignPerturbation::DropTwistSign { Q::one() } else { s_sign.clone() };
            for k in 0..src_ext {
                let act = n.action_at(k, *nb);
                if act.is_zero() {
                    continue;
                }
                let p = self.source.generator(k).bidegree;
                let tb = (nb.0 + p.0, nb.1 + p.1);
                for a in 0..ns {
                    let al = self.alpha.get(a, k);
                    if al.is_zero() {
                        continue;
                    }
                    for r in 0..act.rows() {
                        let c = act.get(r, *idx);
                        if !c.is_zero() {
                            b.add_d(key, &(bump(e, a), *set, tb, r), &twist * al * c);
                        }
                    }
                }
            }
            // odd target generators against even source generators
            for l in 0..self.source.n_sym() {
                let g = src_ext + l;
                let act = n.action_at(g, *nb);
                if act.is_zero() {
                    continue;
                }
                let p = self.source.generator(g).bidegree;
                let tb = (nb.0 + p.0, nb.1 + p.1);
                for bb in 0..ne {
                    let be = self.beta.get(bb, l);
                    if be.is_zero() || set & (1 << bb) != 0 {
                        continue;
                    }
                    let wedge = wedge_sign(*set, bb);
                    for r in 0..act.rows() {
                        let c = act.get(r, *idx);
                        if !c.is_zero() {
                            b.add_d(key, &(e.clone(), set | (1 << bb), tb, r), &wedge * be * c);
                        }
                    }
                }
            }
            // left multiplication by target generators
            for bb in 0..ne {
                if set & (1 << bb) == 0 {
                    b.add_action(bb, key, &(e.clone(), set | (1 << bb), *nb, *idx), wedge_sign(*set, bb));
                }
            }
            for a in 0..ns {
                b.add_action(ne + a, key, &(bump(e, a), *set, *nb, *idx), Q::one());
            }
        }
        b.build()
    }

    /// The output window of [`KoszulTransform::apply`] for an input with window `w`.
    pub fn output_window(&self, input: Window, depth: Window) -> Result<Window, DgError> {
        let sigma = self.source_sign();
        if sigma > 0 {
            if input.lo.is_some() {
                return Err(DgError::WindowTooSmall("input is truncated on its complete side".into()));
            }
            let lo = match (depth.lo, input.hi) {
                (Some(l), Some(h)) => Some(l.max(-h)),
                (l, h) => l.or(h.map(|h| -h)),
            };
            Ok(Window::new(lo, None))
        } else {
            if input.hi.is_some() {
                return Err(DgError::WindowTooSmall("input is truncated on its complete side".into()));
            }
            let hi = match (depth.hi, input.lo) {
                (Some(h), Some(l)) => Some(h.min(-l)),
                (h, l) => h.or(l.map(|l| -l)),
            };
            Ok(Window::new(None, hi))
        }
    }

    /// `regrade ∘ transform ∘ dualize`, computed to the given depth.
    pub fn apply(&self, m: &DgModule, depth: Window) -> Result<DgModule, DgError> {
        self.apply_perturbed(m, depth, SignPerturbation::None)
    }

    pub fn apply_perturbed(&self, m: &DgModule, depth: Window, perturb: SignPerturbation) -> Result<DgModule, DgError> {
        if m.algebra() != &self.source {
            return Err(DgError::Module("module is not over the source algebra".into()));
        }
        let out_window = self.output_window(m.window(), depth)?;
        let n = dualize(m);
        let t = self.transform(&n, out_window, perturb)?;
        Ok(regrade(&t, self.source_sign(), self.target.clone()))
    }
}

/// Sign of `y_b ∧ y_I` relative to the sorted wedge: `(-1)^{#{i in I : i < b}}`.
fn wedge_sign(set: u32, b: usize) -> Q {
    if (set & ((1u32 << b) - 1)).count_ones() % 2 == 1 {
        -Q::one()
    } else {
        Q::one()
    }
}

/// Duality data for a pair `F1, F2 ⊆ E`: modules over `source` go to modules
/// over `target`, exact on `window` (its growth-side end sets the depth).
#[derive(Clone, Debug)]
pub struct DualityContext {
    pub pair: SubspacePair,
    pub source: Arc<KoszulAlgebra>,
    pub target: Arc<KoszulAlgebra>,
    pub window: Window,
    transform: KoszulTransform,
}

impl DualityContext {
    /// Modules over `T` go to modules over `R`.
    pub fn new(pair: SubspacePair, window: Window) -> Result<Self, DgError> {
        if window.is_empty() {
            return Err(DgError::WindowTooSmall("empty window".into()));
        }
        let t = Arc::new(pair.build_t());
        let r = Arc::new(pair.build_r());
        let transform = KoszulTransform::canonical(t.clone(), r.clone())?;
        Ok(Self { pair, source: t, target: r, window, transform })
    }

    /// The same pair with the roles of `T` and `R` exchanged and the window
    /// negated, so that it bounds the growth side of the new target.
    pub fn dual(&self) -> Self {
        let transform = KoszulTransform::canonical(self.target.clone(), self.source.clone())
            .expect("the dual pairing is closed as well");
        Self {
            pair: self.pair.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            window: self.window.negate(),
            transform,
        }
    }

    pub fn transform(&self) -> &KoszulTransform {
        &self.transform
    }

    pub fn kappa(&self, m: &DgModule) -> Result<DgModule, DgError> {
        self.transform.apply(m, self.window)
    }

    pub fn kappa_perturbed(&self, m: &DgModule, perturb: SignPerturbation) -> Result<DgModule, DgError> {
        self.transform.apply_perturbed(m, self.window, perturb)
    }
}

/// Scalar helper for building twisted pairings.
pub fn half() -> Q {
    Q::new(1.into(), 2.into())
}

#[cfg(test)]
mod tests;
