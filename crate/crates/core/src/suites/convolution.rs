use rand::Rng;

use super::{run_trials, timed, SuiteError, SuiteParams};
use crate::convolution::{convolve, frak_k, twist_by_character, unit, ConvContext};
use crate::dg::{BigradedDims, DgModule, Window};
use crate::random::{random_module, random_subspace, Rng64};
use crate::report::Check;

const MAX_BIDEGREES: usize = 6;
const MODULE_DEPTH: i64 = 4;

/// A random module with nonzero cohomology, so that comparisons are not
/// between zero objects.
fn sample_module(r: &mut Rng64, c: &ConvContext) -> DgModule {
    loop {
        let m = random_module(r, c.algebra(), MODULE_DEPTH, MAX_BIDEGREES);
        if !m.cohomology().is_empty() {
            return m;
        }
    }
}

fn context(r: &mut Rng64, n: usize, k: usize, window: Window) -> Result<ConvContext, String> {
    let f = random_subspace(r, n, k);
    ConvContext::from_ints(n, &f, window).map_err(|e| e.to_string())
}

fn restricted(m: &DgModule, w: &Window) -> BigradedDims {
    m.cohomology().restrict(w)
}

fn same_within(what: &str, lhs: &DgModule, rhs: &DgModule, extra: &Window) -> Result<(), String> {
    let w = lhs.window().intersect(&rhs.window()).intersect(extra);
    let (a, b) = (restricted(lhs, &w), restricted(rhs, &w));
    if a == b {
        Ok(())
    } else {
        Err(format!("{what} on {w}: {a:?} vs {b:?}"))
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

/// `(n, dim F)` pairs covered by the suite.
fn shapes(p: &SuiteParams, max_n: usize) -> Vec<(usize, usize)> {
    let ns: Vec<usize> = match p.dim {
        Some(n) => vec![n],
        None => (1..=max_n).collect(),
    };
    ns.into_iter()
        .flat_map(|n| {
            let ks: Vec<usize> = match p.fdim {
                Some(k) => vec![k],
                None => (0..=n).collect(),
            };
            ks.into_iter().filter(move |&k| k <= n).map(move |k| (n, k))
        })
        .collect()
}

fn random_shape(r: &mut Rng64, p: &SuiteParams, max_n: usize) -> (usize, usize) {
    let s = shapes(p, max_n);
    s[r.gen_range(0..s.len())]
}

/// Depth cap for the compatibility check, whose far side grows with four
/// polynomial generators when `F = 0` and `n = 2`.
const COMPAT_DEPTH: i64 = 8;
const PER_SHAPE: usize = 3;

fn unit_image_trial(i: usize, r: &mut Rng64, shapes: &[(usize, usize)], window: Window) -> Result<(), String> {
    let (n, k) = shapes[i / PER_SHAPE];
    let c = context(r, n, k, window)?;
    let image = frak_k(&c, &unit(&c, window.hi.unwrap_or(0)), false).map_err(err)?;
    let d = c.dual();
    let target = unit(&d, -window.lo.unwrap_or(0));
    let w = image.window().intersect(&target.window());
    if restricted(&target, &w).is_empty() {
        return Err(format!("empty comparison window {w}"));
    }
    same_within(&format!("frak_K(unit) for F = {:?}", c.f()), &image, &target, &Window::FULL)
}

fn compatibility_trial(c: &ConvContext, r: &mut Rng64) -> Result<(), String> {
    let m1 = sample_module(r, c);
    let m2 = sample_module(r, c);
    let lhs = frak_k(c, &convolve(c, &m1, &m2).map_err(err)?, false).map_err(err)?;
    let (k1, k2) = (frak_k(c, &m1, false).map_err(err)?, frak_k(c, &m2, false).map_err(err)?);
    let rhs = convolve(&c.dual(), &k1, &k2).map_err(err)?;
    same_within("frak_K(M1 * M2) vs frak_K(M1) * frak_K(M2)", &lhs, &rhs, &Window::FULL)
}

fn unit_law_trial(r: &mut Rng64, p: &SuiteParams) -> Result<(), String> {
    let (n, k) = random_shape(r, p, 2);
    let c = context(r, n, k, p.window)?;
    let u = unit(&c, p.hi());
    let m = sample_module(r, &c);
    same_within("unit * M vs M", &convolve(&c, &u, &m).map_err(err)?, &m, &Window::FULL)?;
    same_within("M * unit vs M", &convolve(&c, &m, &u).map_err(err)?, &m, &Window::FULL)
}

fn associativity_trial(r: &mut Rng64, p: &SuiteParams) -> Result<(), String> {
    let (n, k) = random_shape(r, p, 2);
    let c = context(r, n, k, p.window)?;
    let ms: Vec<DgModule> = (0..3).map(|_| sample_module(r, &c)).collect();
    let left = convolve(&c, &convolve(&c, &ms[0], &ms[1]).map_err(err)?, &ms[2]).map_err(err)?;
    let right = convolve(&c, &ms[0], &convolve(&c, &ms[1], &ms[2]).map_err(err)?).map_err(err)?;
    let w = left.window().intersect(&right.window());
    let (a, b) = (restricted(&left, &w).euler(), restricted(&right, &w).euler());
    if a == b {
        Ok(())
    } else {
        Err(format!("euler classes on {w}: {a} vs {b}"))
    }
}

fn invariants_trial(r: &mut Rng64, p: &SuiteParams) -> Result<(), String> {
    let (n, k) = random_shape(r, p, 2);
    let c = context(r, n, k, p.window)?;
    let m1 = sample_module(r, &c);
    let m2 = sample_module(r, &c);
    convolve(&c, &m1, &m2).map_err(err)?.check_invariants().map_err(|e| format!("M1 * M2: {e}"))?;
    frak_k(&c, &m1, false).map_err(err)?.check_invariants().map_err(|e| format!("frak_K(M): {e}"))?;
    let inv = frak_k(&c, &m1, true).map_err(err)?;
    if inv.algebra() != c.dual().inverted().algebra() {
        return Err("inverted frak_K lands over the wrong algebra".into());
    }
    inv.check_invariants().map_err(|e| format!("inverted frak_K(M): {e}"))
}

/// `frak_K(unit<m>) = unit_{F^⊥}[m]<-m>`.
fn twist_trial(r: &mut Rng64, p: &SuiteParams) -> Result<(), String> {
    let (n, k) = random_shape(r, p, 2);
    let c = context(r, n, k, p.window)?;
    let u = unit(&c, p.hi());
    let perp = unit(&c.dual(), -p.lo());
    for m in -2..=2 {
        let lhs = frak_k(&c, &twist_by_character(&u, m), false).map_err(err)?;
        same_within(&format!("frak_K(unit<{m}>)"), &lhs, &perp.shift(m, -m), &Window::FULL)?;
    }
    Ok(())
}

pub fn convolution_checks(p: &SuiteParams, seed: u64) -> Result<Vec<Check>, SuiteError> {
    let mut out = Vec::new();
    let unit_shapes = shapes(p, 3);
    out.push(
        super::run_indexed("convolution/unit-image", unit_shapes.len() * PER_SHAPE, seed, |i, r| {
            unit_image_trial(i, r, &unit_shapes, p.window)
        })
        .with_window(p.window),
    );
    let compat_window = p.window.intersect(&Window::bounded(-COMPAT_DEPTH, COMPAT_DEPTH));
    for (n, k) in shapes(p, 2) {
        // F = V is where the odd action degenerates; it is named apart
        let full = if k == n { "-full" } else { "" };
        let name = format!("convolution/compatibility/n{n}-f{k}{full}");
        let check = run_trials(&name, p.trials_or(50), seed, |r| {
            let c = context(r, n, k, compat_window)?;
            compatibility_trial(&c, r)
        });
        out.push(check.with_window(compat_window));
    }
    let trials = p.trials_or(50);
    out.push(run_trials("convolution/unit-law", trials, seed, |r| unit_law_trial(r, p)).with_window(p.window));
    out.push(run_trials("convolution/associativity", trials, seed, |r| associativity_trial(r, p)).with_window(p.window));
    out.push(run_trials("convolution/invariants", trials, seed, |r| invariants_trial(r, p)));
    out.push(run_trials("convolution/twist", p.trials_or(20), seed, |r| twist_trial(r, p)).with_window(p.window));
    out.push(timed("convolution/point", || {
        let c = ConvContext::from_ints(1, &[], p.window).map_err(err)?;
        let pt = DgModule::skyscraper(c.algebra().clone(), (0, 0));
        same_within("pt * pt vs pt", &convolve(&c, &pt, &pt).map_err(err)?, &pt, &Window::FULL)
    }));
    Ok(out)
}
