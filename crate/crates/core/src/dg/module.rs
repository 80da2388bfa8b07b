use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use super::{Bideg, BigradedDims, DgError, KoszulAlgebra, Window};
use crate::laurent::LaurentPoly;
use crate::linalg::{q, Matrix};

fn add(b: Bideg, p: Bideg) -> Bideg {
    (b.0 + p.0, b.1 + p.1)
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// A failed structural check, located at a source bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantViolation {
    pub kind: &'static str,
    pub bidegree: Bideg,
    pub generators: Vec<usize>,
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.kind, self.bidegree)?;
        if !self.generators.is_empty() {
            write!(f, " for generators {:?}", self.generators)?;
        }
        Ok(())
    }
}

/// A bigraded dg-module, stored as explicit components and sparse matrices.
///
/// Maps absent from the tables are zero. Zero components and zero matrices are
/// never stored, so equality is structural.
#[derive(Clone, PartialEq)]
pub struct DgModule {
    algebra: Arc<KoszulAlgebra>,
    dims: BTreeMap<Bideg, usize>,
    /// Differential out of each source bidegree.
    d: BTreeMap<Bideg, Matrix>,
    /// For each generator, its action out of each source bidegree.
    actions: Vec<BTreeMap<Bideg, Matrix>>,
    window: Window,
}

impl fmt::Debug for DgModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DgModule")
            .field("dims", &BigradedDims(self.dims.clone()))
            .field("window", &self.window)
            .finish()
    }
}

impl DgModule {
    pub fn new(
        algebra: Arc<KoszulAlgebra>,
        dims: BTreeMap<Bideg, usize>,
        d: BTreeMap<Bideg, Matrix>,
        actions: Vec<BTreeMap<Bideg, Matrix>>,
        window: Window,
    ) -> Result<Self, DgError> {
        if actions.len() != algebra.n_gens() {
            return Err(DgError::Module(format!(
                "{} action tables for {} generators",
                actions.len(),
                algebra.n_gens()
            )));
        }
        let dims: BTreeMap<Bideg, usize> = dims.into_iter().filter(|(_, n)| *n > 0).collect();
        let dim = |b: Bideg| dims.get(&b).copied().unwrap_or(0);
        let clean = |maps: BTreeMap<Bideg, Matrix>, shift: Bideg, what: &str| {
            let mut out = BTreeMap::new();
            for (b, m) in maps {
                let want = (dim(add(b, shift)), dim(b));
                if m.shape() != want {
                    return Err(DgError::Module(format!(
                        "{what} at {b:?} has shape {:?}, expected {want:?}",
                        m.shape()
                    )));
                }
                if !m.is_zero() {
                    out.insert(b, m);
                }
            }
            Ok(out)
        };
        let d = clean(d, (1, 0), "differential")?;
        let mut acts = Vec::with_capacity(actions.len());
        for (g, a) in actions.into_iter().enumerate() {
            acts.push(clean(a, algebra.generator(g).bidegree, "action")?);
        }
        Ok(Self { algebra, dims, d, actions: acts, window })
    }

    /// The zero module.
    pub fn zero(algebra: Arc<KoszulAlgebra>) -> Self {
        let n = algebra.n_gens();
        Self { algebra, dims: BTreeMap::new(), d: BTreeMap::new(), actions: vec![BTreeMap::new(); n], window: Window::FULL }
    }

    /// One-dimensional module at `b` with every generator acting by zero.
    pub fn skyscraper(algebra: Arc<KoszulAlgebra>, b: Bideg) -> Self {
        let mut m = Self::zero(algebra);
        m.dims.insert(b, 1);
        m
    }

    pub fn algebra(&self) -> &Arc<KoszulAlgebra> {
        &self.algebra
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn with_window(mut self, w: Window) -> Self {
        self.window = w;
        self
    }

    pub fn dims(&self) -> &BTreeMap<Bideg, usize> {
        &self.dims
    }

    pub fn dim(&self, b: Bideg) -> usize {
        self.dims.get(&b).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn dim_table(&self) -> BigradedDims {
        BigradedDims(self.dims.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Differential `(i, j) -> (i + 1, j)`.
    pub fn d_at(&self, b: Bideg) -> Matrix {
        self.d.get(&b).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(add(b, (1, 0))), self.dim(b)))
    }

    /// Action of generator `g` out of bidegree `b`.
    pub fn action_at(&self, g: usize, b: Bideg) -> Matrix {
        let p = self.algebra.generator(g).bidegree;
        self.actions[g].get(&b).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(add(b, p)), self.dim(b)))
    }

    pub(crate) fn d_table(&self) -> &BTreeMap<Bideg, Matrix> {
        &self.d
    }

    pub(crate) fn action_table(&self, g: usize) -> &BTreeMap<Bideg, Matrix> {
        &self.actions[g]
    }

    /// Dimensions of cohomology at every bidegree.
    pub fn cohomology(&self) -> BigradedDims {
        let ranks: BTreeMap<Bideg, usize> = self.d.par_iter().map(|(b, m)| (*b, m.rank())).collect();
        let mut out = BigradedDims::default();
        for (&b, &n) in &self.dims {
            let r_out = ranks.get(&b).copied().unwrap_or(0);
            let r_in = ranks.get(&(b.0 - 1, b.1)).copied().unwrap_or(0);
            out.insert(b, n - r_out - r_in);
        }
        out
    }

    /// `sum (-1)^i dim H^i_j v^j`
    pub fn euler_class(&self) -> LaurentPoly {
        self.cohomology().euler()
    }

    /// Euler class of the underlying chain complex, `sum (-1)^i dim M^i_j v^j`.
    pub fn chain_euler_class(&self) -> LaurentPoly {
        self.dim_table().euler()
    }

    /// Cohomology as a module with zero differential and zero actions.
    pub fn cohomology_module(&self) -> DgModule {
        let mut m = Self::zero(self.algebra.clone());
        m.dims = self.cohomology().0;
        m.window = self.window;
        m
    }

    /// `M[n]<m>`: component `(i, j)` moves to `(i - n, j + m)`.
    pub fn shift(&self, n: i64, m: i64) -> DgModule {
        let mv = |b: Bideg| (b.0 - n, b.1 + m);
        let d_sign = q(sign(n.rem_euclid(2) == 1));
        let actions = self
            .actions
            .iter()
            .enumerate()
            .map(|(g, a)| {
                let s = q(sign((n * self.algebra.degree(g)).rem_euclid(2) == 1));
                a.iter().map(|(b, x)| (mv(*b), x.scale(&s))).collect()
            })
            .collect();
        DgModule {
            algebra: self.algebra.clone(),
            dims: self.dims.iter().map(|(b, n)| (mv(*b), *n)).collect(),
            d: self.d.iter().map(|(b, x)| (mv(*b), x.scale(&d_sign))).collect(),
            actions,
            window: self.window.shift(m),
        }
    }

    /// Direct sum; the basis of `self` comes first in every component.
    pub fn direct_sum(&self, other: &DgModule) -> DgModule {
        assert_eq!(self.algebra, other.algebra, "direct sum over different algebras");
        let mut dims = self.dims.clone();
        for (b, n) in &other.dims {
            *dims.entry(*b).or_insert(0) += n;
        }
        let block = |b: Bideg, shift: Bideg, x: Matrix, y: Matrix| {
            let t = add(b, shift);
            let mut m = Matrix::zeros(self.dim(t) + other.dim(t), self.dim(b) + other.dim(b));
            m.set_block(0, 0, &x);
            m.set_block(self.dim(t), self.dim(b), &y);
            m
        };
        let d = dims.keys().map(|&b| (b, block(b, (1, 0), self.d_at(b), other.d_at(b)))).collect();
        let actions = (0..self.algebra.n_gens())
            .map(|g| {
                let p = self.algebra.generator(g).bidegree;
                dims.keys().map(|&b| (b, block(b, p, self.action_at(g, b), other.action_at(g, b)))).collect()
            })
            .collect();
        DgModule::new(self.algebra.clone(), dims, d, actions, self.window.intersect(&other.window))
            .expect("block matrices have matching shapes")
    }

    /// Drops every component whose internal degree lies outside `w`.
    pub fn restrict(&self, w: Window) -> DgModule {
        let keep = |b: &Bideg| w.contains(b.1);
        let actions = self
            .actions
            .iter()
            .enumerate()
            .map(|(g, a)| {
                let p = self.algebra.generator(g).bidegree;
                a.iter().filter(|(b, _)| keep(b) && keep(&add(**b, p))).map(|(b, x)| (*b, x.clone())).collect()
            })
            .collect();
        DgModule {
            algebra: self.algebra.clone(),
            dims: self.dims.iter().filter(|(b, _)| keep(b)).map(|(b, n)| (*b, *n)).collect(),
            d: self.d.iter().filter(|(b, _)| keep(b)).map(|(b, x)| (*b, x.clone())).collect(),
            actions,
            window: self.window.intersect(&w),
        }
    }

    /// Replaces the algebra by another with identically shaped generators.
    pub fn with_algebra(mut self, algebra: Arc<KoszulAlgebra>) -> Self {
        assert_eq!(algebra.n_gens(), self.algebra.n_gens());
        self.algebra = algebra;
        self
    }

    /// Checks `d^2 = 0`, the Leibniz rule, `x^2 = 0` for odd generators and
    /// graded commutativity of the generator actions.
    pub fn check_invariants(&self) -> Result<(), InvariantViolation> {
        let a = &self.algebra;
        let bidegs: Vec<Bideg> = self.dims.keys().copied().collect();
        for &b in &bidegs {
            let dd = self.d_at(add(b, (1, 0))).mul(&self.d_at(b));
            if !dd.is_zero() {
                return Err(InvariantViolation { kind: "d^2 = 0", bidegree: b, generators: vec![] });
            }
        }
        for g in 0..a.n_gens() {
            let p = a.generator(g).bidegree;
            let s = q(sign(p.0.rem_euclid(2) == 1));
            let dg = a.diff_of(g);
            for &b in &bidegs {
                let lhs = self
                    .d_at(add(b, p))
                    .mul(&self.action_at(g, b))
                    .sub(&self.action_at(g, add(b, (1, 0))).mul(&self.d_at(b)).scale(&s));
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for (l, c) in dg.iter().enumerate() {
                    if !c.is_zero() {
                        rhs = rhs.add(&self.action_at(a.n_ext() + l, b).scale(c));
                    }
                }
                if lhs != rhs {
                    return Err(InvariantViolation { kind: "Leibniz rule", bidegree: b, generators: vec![g] });
                }
            }
        }
        for g in 0..a.n_gens() {
            let pg = a.generator(g).bidegree;
            for h in g..a.n_gens() {
                let ph = a.generator(h).bidegree;
                let s = q(sign((pg.0 * ph.0).rem_euclid(2) == 1));
                for &b in &bidegs {
                    let gh = self.action_at(g, add(b, ph)).mul(&self.action_at(h, b));
                    let hg = self.action_at(h, add(b, pg)).mul(&self.action_at(g, b));
                    let ok = if g == h && a.is_ext(g) { gh.is_zero() } else { gh == hg.scale(&s) };
                    if !ok {
                        let kind = if g == h { "odd generators square to zero" } else { "graded commutativity" };
                        return Err(InvariantViolation { kind, bidegree: b, generators: vec![g, h] });
                    }
                }
            }
        }
        Ok(())
    }

    /// Mapping cone of `f: source -> self`: `self ⊕ source[1]` with
    /// `d(n, m) = (dn + f m, -dm)`.
    pub fn cone(&self, source: &DgModule, f: &ChainMap) -> DgModule {
        let shifted = source.shift(1, 0);
        let mut out = self.direct_sum(&shifted);
        for (&b, n) in &out.dims {
            let m_src = (b.0 + 1, b.1);
            let fm = f.at(m_src, source.dim(m_src), self.dim(m_src));
            if fm.is_zero() {
                continue;
            }
            // f maps source^{i+1} (sitting in degree i) to self^{i+1}
            let t = (b.0 + 1, b.1);
            let mut m = out.d.get(&b).cloned().unwrap_or_else(|| Matrix::zeros(out.dim(t), *n));
            m.set_block(0, self.dim(b), &fm);
            out.d.insert(b, m);
        }
        out
    }
}

/// A degree-`(0,0)` map of modules, given by one matrix per source bidegree.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ChainMap {
    pub maps: BTreeMap<Bideg, Matrix>,
}

impl ChainMap {
    pub fn at(&self, b: Bideg, src_dim: usize, tgt_dim: usize) -> Matrix {
        self.maps.get(&b).cloned().unwrap_or_else(|| Matrix::zeros(tgt_dim, src_dim))
    }

    pub fn identity(m: &DgModule) -> Self {
        Self { maps: m.dims().iter().map(|(b, n)| (*b, Matrix::identity(*n))).collect() }
    }

    pub fn scale(&self, c: &crate::linalg::Q) -> Self {
        Self { maps: self.maps.iter().map(|(b, m)| (*b, m.scale(c))).collect() }
    }

    /// Whether this commutes with the differentials and all generator actions.
    pub fn is_chain_map(&self, src: &DgModule, tgt: &DgModule) -> bool {
        let a = src.algebra();
        for &b in src.dims().keys() {
            let f = |b: Bideg| self.at(b, src.dim(b), tgt.dim(b));
            let up = (b.0 + 1, b.1);
            if tgt.d_at(b).mul(&f(b)) != f(up).mul(&src.d_at(b)) {
                return false;
            }
            for g in 0..a.n_gens() {
                let t = add(b, a.generator(g).bidegree);
                if tgt.action_at(g, b).mul(&f(b)) != f(t).mul(&src.action_at(g, b)) {
                    return false;
                }
            }
        }
        true
    }
}
