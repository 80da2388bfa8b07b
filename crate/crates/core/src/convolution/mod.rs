//! Convolution of dg-modules over the derived self-intersection of `F ⊆ V`
//! at a one-point base, its unit, and the duality `frak_K`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::dg::{Bideg, DgError, DgModule, Generator, KoszulAlgebra, ModuleBuilder, Window};
use crate::koszul::{half, KoszulTransform};
use crate::linalg::{q, Matrix, Q};

/// `F ⊆ V = Q^n` with the algebra `Sym(F^∨ ⊕ F^∨) ⊗ Λ(V^∨)`.
///
/// Odd generators `xi_a` are the coordinate functionals of `V`; the even ones
/// are two copies of the dual basis of `F`, and `d xi_a = (xi_a|_F, -xi_a|_F)`.
/// With `sign = -1` every internal degree is negated.
#[derive(Clone, Debug)]
pub struct ConvContext {
    n: usize,
    f: Vec<Vec<Q>>,
    sign: i64,
    algebra: Arc<KoszulAlgebra>,
    /// Bounds the growth side of `frak_K` outputs.
    pub window: Window,
}

impl ConvContext {
    pub fn new(n: usize, f: Vec<Vec<Q>>, sign: i64, window: Window) -> Result<Self, DgError> {
        if f.iter().any(|v| v.len() != n) || crate::linalg::rank_of_vectors(&f, n) != f.len() {
            return Err(DgError::Subspace("F needs an independent basis of vectors in V".into()));
        }
        let sign = sign.signum();
        if sign == 0 {
            return Err(DgError::Algebra("sign must be ±1".into()));
        }
        let m = f.len();
        let w = 2 * sign;
        let dual_name = if sign > 0 { "xi" } else { "e" };
        let (p1, p2) = if sign > 0 { ("phi", "phi'") } else { ("psi", "psi'") };
        let ext = (0..n).map(|a| Generator { name: format!("{dual_name}{a}"), bidegree: (-1, w) }).collect();
        let sym = (0..m)
            .map(|k| Generator { name: format!("{p1}{k}"), bidegree: (0, w) })
            .chain((0..m).map(|k| Generator { name: format!("{p2}{k}"), bidegree: (0, w) }))
            .collect();
        let mut diff = Matrix::zeros(2 * m, n);
        for (k, v) in f.iter().enumerate() {
            for a in 0..n {
                diff.set(k, a, v[a].clone());
                diff.set(m + k, a, -v[a].clone());
            }
        }
        let algebra = Arc::new(KoszulAlgebra::with_weight(ext, sym, diff, w)?);
        Ok(Self { n, f, sign, algebra, window })
    }

    pub fn from_ints(n: usize, f: &[Vec<i64>], window: Window) -> Result<Self, DgError> {
        let f = f.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
        Self::new(n, f, 1, window)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &[Vec<Q>] {
        &self.f
    }

    pub fn f_dim(&self) -> usize {
        self.f.len()
    }

    pub fn sign(&self) -> i64 {
        self.sign
    }

    pub fn algebra(&self) -> &Arc<KoszulAlgebra> {
        &self.algebra
    }

    /// `F^⊥ ⊆ V^∨` with the opposite sign and the window negated.
    pub fn dual(&self) -> ConvContext {
        let perp = Matrix::from_rows_with_cols(self.f.clone(), self.n).nullspace();
        ConvContext::new(self.n, perp, -self.sign, self.window.negate()).expect("null space basis is independent")
    }

    /// The same subspace with every internal degree negated.
    pub fn inverted(&self) -> ConvContext {
        ConvContext::new(self.n, self.f.clone(), -self.sign, self.window.negate()).expect("valid context")
    }

    /// The window cutting modules at `depth` on their growth side.
    pub fn growth_window(&self, depth: i64) -> Window {
        if self.sign > 0 {
            Window::new(None, Some(depth))
        } else {
            Window::new(Some(-depth), None)
        }
    }
}

/// Structure sheaf of the diagonal copy of `F`: `Sym(F^∨)` with both copies
/// acting by multiplication, odd generators by zero, truncated at `depth`.
pub fn unit(ctx: &ConvContext, depth: i64) -> DgModule {
    let m = ctx.f_dim();
    let w = 2 * ctx.sign;
    let window = ctx.growth_window(depth);
    let mut b: ModuleBuilder<Vec<u32>> = ModuleBuilder::new(ctx.algebra.clone(), window);
    let mut keys = Vec::new();
    let top = if m == 0 { 0 } else { depth.max(0) / 2 };
    for deg in 0..=top as usize {
        for e in crate::dg::monomials(m, deg) {
            if b.add_basis(e.clone(), (0, w * deg as i64)) {
                keys.push(e);
            }
        }
    }
    for e in &keys {
        for k in 0..m {
            let mut t = e.clone();
            t[k] += 1;
            b.add_action(ctx.n + k, e, &t, Q::one());
            b.add_action(ctx.n + m + k, e, &t, Q::one());
        }
    }
    b.build().expect("unit is well formed")
}

/// `M[0]<m>`: an internal-degree character.
pub fn twist_by_character(m: &DgModule, k: i64) -> DgModule {
    m.shift(0, k)
}

fn min_j(m: &DgModule) -> Option<i64> {
    m.dims().keys().map(|b| b.1).min()
}

fn max_j(m: &DgModule) -> Option<i64> {
    m.dims().keys().map(|b| b.1).max()
}

fn sign_of(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

fn wedge_sign(set: u32, k: usize) -> Q {
    sign_of((set & ((1u32 << k) - 1)).count_ones() % 2 == 1)
}

/// The window on which `M1 ⋆ M2` is exact.
pub fn convolve_window(ctx: &ConvContext, m1: &DgModule, m2: &DgModule) -> Window {
    let (w1, w2) = (m1.window(), m2.window());
    if ctx.sign > 0 {
        let a = w1.hi.zip(min_j(m2)).map(|(h, l)| h + l);
        let b = w2.hi.zip(min_j(m1)).map(|(h, l)| h + l);
        let hi = match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        Window::new(None, hi)
    } else {
        let a = w1.lo.zip(max_j(m2)).map(|(l, h)| l + h);
        let b = w2.lo.zip(max_j(m1)).map(|(l, h)| l + h);
        let lo = match (a, b) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, y) => x.or(y),
        };
        Window::new(lo, None)
    }
}

/// `M1 ⋆ M2`: the derived tensor product of `M2` and `M1` over the middle copy
/// of `Sym(F^∨)`, computed by a Koszul resolution of `M1`.
///
/// The result is `Λ(u) ⊗ M2 ⊗ M1` with `u_k` dual to `f_k` in bidegree
/// `(-1, 2 sign)`; the first copy acts through `M2`, the second through `M1`.
pub fn convolve(ctx: &ConvContext, m1: &DgModule, m2: &DgModule) -> Result<DgModule, DgError> {
    let a = &ctx.algebra;
    if m1.algebra() != a || m2.algebra() != a {
        return Err(DgError::Module("convolution factors must be over the context algebra".into()));
    }
    let n = ctx.n;
    let m = ctx.f_dim();
    let w = 2 * ctx.sign;
    let window = convolve_window(ctx, m1, m2);
    type Key = (u32, Bideg, usize, Bideg, usize);
    let mut b: ModuleBuilder<Key> = ModuleBuilder::new(a.clone(), window);
    let mut keys = Vec::new();
    for set in 0u32..(1 << m) {
        let k = set.count_ones() as i64;
        for (&b2, &d2) in m2.dims() {
            for (&b1, &d1) in m1.dims() {
                let bd = (-k + b2.0 + b1.0, w * k + b2.1 + b1.1);
                for i2 in 0..d2 {
                    for i1 in 0..d1 {
                        let key = (set, b2, i2, b1, i1);
                        if b.add_basis(key, bd) {
                            keys.push(key);
                        }
                    }
                }
            }
        }
    }
    let col = |mat: &Matrix, c: usize| -> Vec<(usize, Q)> {
        (0..mat.rows()).filter_map(|r| {
            let x = mat.get(r, c);
            (!x.is_zero()).then(|| (r, x.clone()))
        }).collect()
    };
    let gen = |g: usize| a.generator(g).bidegree;
    let add = |x: Bideg, y: Bideg| (x.0 + y.0, x.1 + y.1);
    for key in &keys {
        let &(set, b2, i2, b1, i1) = key;
        let s_i = sign_of(set.count_ones() % 2 == 1);
        let s_i2 = sign_of((set.count_ones() as i64 + b2.0).rem_euclid(2) == 1);
        // Koszul differential
        let mut t = 0;
        for kk in 0..m {
            if set & (1 << kk) == 0 {
                continue;
            }
            let sg = sign_of(t % 2 == 1);
            let rest = set & !(1 << kk);
            let g1 = n + kk;
            let g2 = n + m + kk;
            for (r, c) in col(&m1.action_at(g1, b1), i1) {
                b.add_d(key, &(rest, b2, i2, add(b1, gen(g1)), r), &sg * &c);
            }
            for (r, c) in col(&m2.action_at(g2, b2), i2) {
                b.add_d(key, &(rest, add(b2, gen(g2)), r, b1, i1), -(&sg * &c));
            }
            t += 1;
        }
        for (r, c) in col(&m2.d_at(b2), i2) {
            b.add_d(key, &(set, (b2.0 + 1, b2.1), r, b1, i1), &s_i * &c);
        }
        for (r, c) in col(&m1.d_at(b1), i1) {
            b.add_d(key, &(set, b2, i2, (b1.0 + 1, b1.1), r), &s_i2 * &c);
        }
        // outer copies
        for kk in 0..m {
            let g1 = n + kk;
            let g2 = n + m + kk;
            for (r, c) in col(&m2.action_at(g1, b2), i2) {
                b.add_action(g1, key, &(set, add(b2, gen(g1)), r, b1, i1), c);
            }
            for (r, c) in col(&m1.action_at(g2, b1), i1) {
                b.add_action(g2, key, &(set, b2, i2, add(b1, gen(g2)), r), c);
            }
        }
        // odd generators: coproduct plus a correction through the resolution
        for xa in 0..n {
            for kk in 0..m {
                let c = &ctx.f[kk][xa];
                if !c.is_zero() && set & (1 << kk) == 0 {
                    let s = wedge_sign(set, kk);
                    b.add_action(xa, key, &(set | (1 << kk), b2, i2, b1, i1), -(c * s));
                }
            }
            for (r, c) in col(&m2.action_at(xa, b2), i2) {
                b.add_action(xa, key, &(set, add(b2, gen(xa)), r, b1, i1), &s_i * &c);
            }
            for (r, c) in col(&m1.action_at(xa, b1), i1) {
                b.add_action(xa, key, &(set, b2, i2, add(b1, gen(xa)), r), &s_i2 * &c);
            }
        }
    }
    b.build()
}

/// The transform underlying `frak_K`, from modules over `ctx` to modules over
/// `ctx.dual()`.
///
/// Odd generators of each side pair with the average of the two copies of
/// even generators on the other side.
pub fn frak_k_transform(ctx: &ConvContext) -> Result<KoszulTransform, DgError> {
    let dual = ctx.dual();
    let (n, m, mp) = (ctx.n, ctx.f_dim(), dual.f_dim());
    let h = half();
    let mut alpha = Matrix::zeros(2 * mp, n);
    for (l, eta) in dual.f.iter().enumerate() {
        for a in 0..n {
            let x = &eta[a] * &h;
            alpha.set(l, a, x.clone());
            alpha.set(mp + l, a, x);
        }
    }
    let mut beta = Matrix::zeros(n, 2 * m);
    for (k, f) in ctx.f.iter().enumerate() {
        for bb in 0..n {
            let x = &f[bb] * &h;
            beta.set(bb, k, x.clone());
            beta.set(bb, m + k, x);
        }
    }
    KoszulTransform::new(ctx.algebra.clone(), dual.algebra.clone(), alpha, beta)
}

/// `frak_K(M)` over `ctx.dual()`; with `invert` the internal grading is
/// negated as well and the result lives over `ctx.dual().inverted()`.
pub fn frak_k(ctx: &ConvContext, m: &DgModule, invert: bool) -> Result<DgModule, DgError> {
    let t = frak_k_transform(ctx)?;
    let out = t.apply(m, ctx.window)?;
    if !invert {
        return Ok(out);
    }
    Ok(invert_internal(&out, ctx.dual().inverted().algebra.clone()))
}

/// Sends `(i, j)` to `(i, -j)` over an algebra with negated generator weights.
pub fn invert_internal(m: &DgModule, algebra: Arc<KoszulAlgebra>) -> DgModule {
    let mv = |b: Bideg| (b.0, -b.1);
    let dims = m.dims().iter().map(|(b, n)| (mv(*b), *n)).collect();
    let d = m.dims().keys().map(|&b| (mv(b), m.d_at(b))).collect();
    let actions = (0..algebra.n_gens())
        .map(|g| m.dims().keys().map(|&b| (mv(b), m.action_at(g, b))).collect())
        .collect();
    let w = m.window();
    DgModule::new(algebra, dims, d, actions, Window::new(w.hi.map(|h| -h), w.lo.map(|l| -l)))
        .expect("reflection preserves shapes")
}
