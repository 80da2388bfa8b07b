use rand::Rng;

use super::{run_trial_group, run_trials, SuiteError, SuiteParams};
use crate::dg::{free_module, multiplication_cone, ChainMap, DgModule, Window};
use crate::koszul::{DualityContext, SignPerturbation};
use crate::laurent::LaurentPoly;
use crate::linalg::Matrix;
use crate::random::{random_endomorphism, random_module, random_pair, random_pair_of_dim, growth_window, Rng64};
use crate::report::Check;

const MAX_BIDEGREES: usize = 12;

/// Sampling parameters shared by every check of the suite.
struct Sampler {
    dim: Option<usize>,
    window: Window,
    depth: i64,
}

impl Sampler {
    fn new(p: &SuiteParams) -> Self {
        Self { dim: p.dim, window: Window::new(Some(p.lo()), None), depth: p.hi().min(4) }
    }

    fn draw(&self, r: &mut Rng64) -> Result<(DualityContext, DgModule), String> {
        let pair = match self.dim {
            Some(n) => random_pair_of_dim(r, n),
            None => random_pair(r, 3),
        };
        let ctx = DualityContext::new(pair, self.window).map_err(|e| e.to_string())?;
        // acyclic summands stay possible; only wholly acyclic samples are redrawn
        loop {
            let m = random_module(r, &ctx.source, self.depth, MAX_BIDEGREES);
            if !m.cohomology().is_empty() {
                return Ok((ctx, m));
            }
        }
    }
}

fn same_within(what: &str, lhs: &DgModule, rhs: &DgModule, extra: &Window) -> Result<(), String> {
    let w = lhs.window().intersect(&rhs.window()).intersect(extra);
    let (a, b) = (lhs.cohomology().restrict(&w), rhs.cohomology().restrict(&w));
    if a == b {
        Ok(())
    } else {
        Err(format!("{what} on {w}: {a:?} vs {b:?}"))
    }
}

fn equal_poly(what: &str, got: &LaurentPoly, want: &LaurentPoly) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn sign_power(n: i64, m: i64) -> LaurentPoly {
    let c = if n.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::monomial(c, m as i32)
}

/// The dual context, truncated just above the top internal degree of `m`.
/// Double duality is compared there; a deeper window only adds cost.
fn return_context(ctx: &DualityContext, m: &DgModule) -> DualityContext {
    let top = m.dims().keys().map(|b| b.1).max().unwrap_or(0) + 2;
    let mut d = ctx.dual();
    d.window = d.window.intersect(&Window::new(None, Some(top)));
    d
}

fn euler_check(m: &DgModule) -> Result<(), String> {
    let e = m.euler_class();
    equal_poly("euler_class(H(M))", &m.cohomology_module().euler_class(), &e)?;
    equal_poly("alternating sum of chain dimensions", &m.chain_euler_class(), &e)
}

/// `f: M -> M ⊕ N` given by an endomorphism of `M` followed by inclusion.
fn into_first_summand(m: &DgModule, sum: &DgModule, e: &ChainMap) -> ChainMap {
    let maps = m
        .dims()
        .iter()
        .map(|(&b, &n)| {
            let mut x = Matrix::zeros(sum.dim(b), n);
            x.set_block(0, 0, &e.at(b, n, n));
            (b, x)
        })
        .collect();
    ChainMap { maps }
}

fn cone_check(r: &mut Rng64, s: &Sampler) -> Result<(), String> {
    let (ctx, m) = s.draw(r)?;
    let n = random_module(r, &ctx.source, s.depth, MAX_BIDEGREES);
    let sum = m.direct_sum(&n);
    let f = into_first_summand(&m, &sum, &random_endomorphism(r, &m));
    if !f.is_chain_map(&m, &sum) {
        return Err("sampled map is not a chain map".into());
    }
    let c = sum.cone(&m, &f);
    c.check_invariants().map_err(|e| format!("cone: {e}"))?;
    equal_poly("euler_class(M ⊕ N)", &sum.euler_class(), &(&m.euler_class() + &n.euler_class()))?;
    equal_poly("euler_class(cone)", &c.euler_class(), &(&sum.euler_class() - &m.euler_class()))
}

fn shift_check(r: &mut Rng64, s: &Sampler) -> Result<(), String> {
    let (_, m) = s.draw(r)?;
    let e = m.euler_class();
    for n in -2..=2 {
        for k in -2..=2 {
            let got = m.shift(n, k).euler_class();
            equal_poly(&format!("euler_class(M[{n}]<{k}>)"), &got, &(&sign_power(n, k) * &e))?;
        }
    }
    Ok(())
}

fn invariants_check(r: &mut Rng64, s: &Sampler) -> Result<(), String> {
    let (ctx, m) = s.draw(r)?;
    let k = ctx.kappa(&m).map_err(|e| e.to_string())?;
    k.check_invariants().map_err(|e| format!("kappa(M): {e}"))?;
    let back = return_context(&ctx, &m).kappa(&k).map_err(|e| e.to_string())?;
    back.check_invariants().map_err(|e| format!("kappa'(kappa(M)): {e}"))
}

fn exactness_check(r: &mut Rng64, s: &Sampler) -> Result<(), String> {
    let (ctx, m) = s.draw(r)?;
    let acyclic = m.cone(&m, &ChainMap::identity(&m));
    if !acyclic.cohomology().is_empty() {
        return Err("cone of the identity has cohomology".into());
    }
    let k = ctx.kappa(&acyclic).map_err(|e| e.to_string())?;
    let h = k.cohomology().restrict(&k.window());
    if h.is_empty() {
        Ok(())
    } else {
        Err(format!("kappa of an acyclic module has cohomology {h:?}"))
    }
}

/// Grading identity for every `|n|, |m| <= 2`, and double duality, on one sample.
fn duality_checks(r: &mut Rng64, s: &Sampler) -> Vec<Result<(), String>> {
    let (ctx, m) = match s.draw(r) {
        Ok(x) => x,
        Err(e) => return vec![Err(e.clone()), Err(e)],
    };
    let k = match ctx.kappa(&m) {
        Ok(k) => k,
        Err(e) => return vec![Err(e.to_string()), Err(e.to_string())],
    };
    let grading = (|| {
        for n in -2..=2 {
            for t in -2..=2 {
                let lhs = ctx.kappa(&m.shift(n, t)).map_err(|e| e.to_string())?;
                let rhs = k.shift(t - n, -t);
                same_within(&format!("kappa(M[{n}]<{t}>)"), &lhs, &rhs, &Window::FULL)?;
            }
        }
        Ok(())
    })();
    let double = return_context(&ctx, &m)
        .kappa(&k)
        .map_err(|e| e.to_string())
        .and_then(|back| same_within("kappa'(kappa(M)) vs M", &back, &m, &Window::FULL));
    vec![grading, double]
}

fn d_squared_fails(m: &DgModule) -> bool {
    m.dims().keys().any(|&b| !m.d_at((b.0 + 1, b.1)).mul(&m.d_at(b)).is_zero())
}

/// A context whose source has odd and even generators and a nonzero
/// differential, with a module containing a free summand and a multiplication
/// cone. Elsewhere the sign changes can amount to a change of basis.
fn control_sample(r: &mut Rng64, s: &Sampler) -> Result<(DualityContext, DgModule), String> {
    for _ in 0..1000 {
        let (ctx, m) = s.draw(r)?;
        let a = &ctx.source;
        if a.n_ext() == 0 || a.n_sym() == 0 || a.diff().is_zero() {
            continue;
        }
        let w = growth_window(a, s.depth);
        let mut e = vec![0; a.n_sym()];
        e[r.gen_range(0..a.n_sym())] = 1;
        let free = free_module(a, (0, 0), w).map_err(|e| e.to_string())?;
        let cone = multiplication_cone(a, &e, (0, 0), w).map_err(|e| e.to_string())?;
        let m = m.direct_sum(&free).direct_sum(&cone);
        return Ok((ctx, m));
    }
    Err("no context with a nonzero differential in 1000 draws".into())
}

/// The perturbed transform must break `d^2 = 0`.
fn control_trial(r: &mut Rng64, s: &Sampler) -> Result<(), String> {
    let (ctx, m) = control_sample(r, s)?;
    let p = if r.gen_bool(0.5) { SignPerturbation::DropKoszulSign } else { SignPerturbation::DropTwistSign };
    let bad = ctx.kappa_perturbed(&m, p).map_err(|e| e.to_string())?;
    if d_squared_fails(&bad) {
        Ok(())
    } else {
        Err(format!("{p:?} keeps d^2 = 0 over {:?}", ctx.pair))
    }
}

pub fn koszul_checks(p: &SuiteParams, seed: u64) -> Result<Vec<Check>, SuiteError> {
    let s = Sampler::new(p);
    let mut out = vec![
        run_trials("koszul/euler-class", p.trials_or(200), seed, |r| s.draw(r).and_then(|(_, m)| euler_check(&m))),
        run_trials("koszul/cone-alternation", p.trials_or(100), seed, |r| cone_check(r, &s)),
        run_trials("koszul/shift-formula", p.trials_or(100), seed, |r| shift_check(r, &s)),
        run_trials("koszul/invariants", p.trials_or(100), seed, |r| invariants_check(r, &s)).with_window(s.window),
        run_trials("koszul/exactness", p.trials_or(50), seed, |r| exactness_check(r, &s)).with_window(s.window),
    ];
    let names = ["koszul/grading-identity".to_string(), "koszul/double-duality".to_string()];
    for c in run_trial_group(&names, p.trials_or(100), seed, |r| duality_checks(r, &s)) {
        out.push(c.with_window(s.window));
    }
    let control = run_trials("koszul/negative-control", p.trials_or(50), seed, |r| control_trial(r, &s));
    out.push(control);
    Ok(out)
}
