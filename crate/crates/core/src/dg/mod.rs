//! Finite-dimensional bigraded dg-modules over Koszul dg-algebras, over `Q`.
//!
//! Bidegrees are `(i, j)`: cohomological degree `i`, internal degree `j`.
//! Differentials have bidegree `(1, 0)`.

mod algebra;
mod builder;
mod free;
mod json;
mod module;
mod pair;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use algebra::{monomials, Generator, KoszulAlgebra};
pub use builder::ModuleBuilder;
pub use free::{free_module, free_module_keyed, monomial_bidegree, multiplication_cone, FreeKey};
pub use json::{module_from_json, module_to_json};
pub use module::{ChainMap, DgModule, InvariantViolation};
pub use pair::SubspacePair;

pub type Bideg = (i64, i64);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DgError {
    #[error("invalid algebra: {0}")]
    Algebra(String),
    #[error("invalid module: {0}")]
    Module(String),
    #[error("invalid subspace data: {0}")]
    Subspace(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("json: {0}")]
    Json(String),
}

/// Range of internal degrees on which a (possibly truncated) module is exact.
///
/// `None` on a side means nothing was cut off on that side.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Window {
    pub const FULL: Window = Window { lo: None, hi: None };

    pub fn new(lo: Option<i64>, hi: Option<i64>) -> Self {
        Self { lo, hi }
    }

    pub fn bounded(lo: i64, hi: i64) -> Self {
        Self { lo: Some(lo), hi: Some(hi) }
    }

    pub fn contains(&self, j: i64) -> bool {
        self.lo.is_none_or(|l| j >= l) && self.hi.is_none_or(|h| j <= h)
    }

    pub fn is_empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(l), Some(h)) if l > h)
    }

    pub fn intersect(&self, other: &Window) -> Window {
        let lo = match (self.lo, other.lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Window { lo, hi }
    }

    pub fn shift(&self, m: i64) -> Window {
        Window { lo: self.lo.map(|l| l + m), hi: self.hi.map(|h| h + m) }
    }

    /// `j -> -j`
    pub fn negate(&self) -> Window {
        Window { lo: self.hi.map(|h| -h), hi: self.lo.map(|l| -l) }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: Option<i64>, inf: &str| x.map_or(inf.to_string(), |v| v.to_string());
        write!(f, "[{}, {}]", s(self.lo, "-inf"), s(self.hi, "+inf"))
    }
}

/// Finite table `(i, j) -> dimension`, zero entries omitted.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BigradedDims(pub BTreeMap<Bideg, usize>);

impl BigradedDims {
    pub fn insert(&mut self, b: Bideg, n: usize) {
        if n > 0 {
            *self.0.entry(b).or_insert(0) += n;
        }
    }

    pub fn get(&self, b: Bideg) -> usize {
        self.0.get(&b).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries with internal degree inside `w`.
    pub fn restrict(&self, w: &Window) -> BigradedDims {
        BigradedDims(self.0.iter().filter(|(b, _)| w.contains(b.1)).map(|(b, n)| (*b, *n)).collect())
    }

    /// Re-indexes along `(i, j) -> (i - n, j + m)`.
    pub fn shift(&self, n: i64, m: i64) -> BigradedDims {
        BigradedDims(self.0.iter().map(|((i, j), d)| ((i - n, j + m), *d)).collect())
    }

    pub fn sum(&self, other: &BigradedDims) -> BigradedDims {
        let mut out = self.clone();
        for (b, n) in &other.0 {
            out.insert(*b, *n);
        }
        out
    }

    /// `sum (-1)^i dim_{i,j} v^j`
    pub fn euler(&self) -> crate::laurent::LaurentPoly {
        crate::laurent::LaurentPoly::from_terms(self.0.iter().map(|((i, j), n)| {
            let n = *n as i64;
            (*j as i32, if i.rem_euclid(2) == 0 { n } else { -n })
        }))
    }
}

impl fmt::Debug for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, ((i, j), n)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{j}): {n}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
