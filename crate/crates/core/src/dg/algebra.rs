use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Bideg, DgError};
use crate::linalg::{Matrix, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub bidegree: Bideg,
}

/// `Sym(even generators) ⊗ Λ(odd generators)` with a linear differential
/// sending odd generators to the span of even ones.
///
/// Generators are indexed with the odd ones first: index `k < n_ext()` is
/// `ext[k]`, index `n_ext() + l` is `sym[l]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulAlgebra {
    ext: Vec<Generator>,
    sym: Vec<Generator>,
    /// `d(ext_k) = sum_l diff[l][k] sym_l`; shape `sym.len() x ext.len()`.
    diff: Matrix,
    /// Common internal degree of the generators, kept even when there are none.
    weight: i64,
}

impl KoszulAlgebra {
    /// Infers the internal weight from the generators, defaulting to 2.
    pub fn new(ext: Vec<Generator>, sym: Vec<Generator>, diff: Matrix) -> Result<Self, DgError> {
        let weight = ext.iter().chain(&sym).map(|g| g.bidegree.1).next().unwrap_or(2);
        Self::with_weight(ext, sym, diff, weight)
    }

    pub fn with_weight(ext: Vec<Generator>, sym: Vec<Generator>, diff: Matrix, weight: i64) -> Result<Self, DgError> {
        if diff.shape() != (sym.len(), ext.len()) {
            return Err(DgError::Algebra(format!(
                "differential has shape {:?}, expected {:?}",
                diff.shape(),
                (sym.len(), ext.len())
            )));
        }
        for g in &ext {
            if g.bidegree.0.rem_euclid(2) != 1 {
                return Err(DgError::Algebra(format!("odd generator {} has even degree", g.name)));
            }
        }
        for g in &sym {
            if g.bidegree.0.rem_euclid(2) != 0 {
                return Err(DgError::Algebra(format!("even generator {} has odd degree", g.name)));
            }
        }
        if weight == 0 || ext.iter().chain(&sym).any(|g| g.bidegree.1 != weight) {
            return Err(DgError::Algebra("generators must share one nonzero internal degree".into()));
        }
        for (k, e) in ext.iter().enumerate() {
            for (l, s) in sym.iter().enumerate() {
                let (p, q) = e.bidegree;
                if !diff.get(l, k).is_zero() && s.bidegree != (p + 1, q) {
                    return Err(DgError::Algebra(format!(
                        "d({}) involves {} of the wrong bidegree",
                        e.name, s.name
                    )));
                }
            }
        }
        Ok(Self { ext, sym, diff, weight })
    }

    pub fn ext(&self) -> &[Generator] {
        &self.ext
    }

    pub fn sym(&self) -> &[Generator] {
        &self.sym
    }

    pub fn diff(&self) -> &Matrix {
        &self.diff
    }

    pub fn n_ext(&self) -> usize {
        self.ext.len()
    }

    pub fn n_sym(&self) -> usize {
        self.sym.len()
    }

    pub fn n_gens(&self) -> usize {
        self.ext.len() + self.sym.len()
    }

    pub fn generator(&self, g: usize) -> &Generator {
        if g < self.ext.len() {
            &self.ext[g]
        } else {
            &self.sym[g - self.ext.len()]
        }
    }

    pub fn is_ext(&self, g: usize) -> bool {
        g < self.ext.len()
    }

    /// Cohomological degree of generator `g`.
    pub fn degree(&self, g: usize) -> i64 {
        self.generator(g).bidegree.0
    }

    /// The common internal degree of the generators.
    pub fn internal_weight(&self) -> i64 {
        self.weight
    }

    /// Sign of the internal weight: modules grow in this direction.
    pub fn growth_sign(&self) -> i64 {
        self.weight.signum()
    }

    /// `d(g)` as coefficients on the even generators (zero for even `g`).
    pub fn diff_of(&self, g: usize) -> Vec<Q> {
        if self.is_ext(g) {
            self.diff.column(g)
        } else {
            vec![Q::default(); self.sym.len()]
        }
    }

    /// All exponent vectors of even monomials of polynomial degree `deg`.
    pub fn sym_monomials(&self, deg: usize) -> Vec<Vec<u32>> {
        monomials(self.sym.len(), deg)
    }
}

/// Exponent vectors with `n` entries summing to `deg`, in lexicographic order.
pub fn monomials(n: usize, deg: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg as u32).rev() {
        for mut rest in monomials(n - 1, deg - first as usize) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(2, 3).len(), 4);
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(0, 0), vec![Vec::<u32>::new()]);
        assert!(monomials(0, 1).is_empty());
    }

    #[test]
    fn rejects_wrong_parity() {
        let g = |n: &str, b| Generator { name: n.into(), bidegree: b };
        assert!(KoszulAlgebra::new(vec![g("x", (0, 2))], vec![], Matrix::zeros(0, 1)).is_err());
        assert!(KoszulAlgebra::new(vec![g("x", (-1, 2))], vec![g("y", (1, 2))], Matrix::zeros(1, 1)).is_err());
        let ok = KoszulAlgebra::new(
            vec![g("x", (-1, 2))],
            vec![g("y", (0, 2))],
            Matrix::from_rows(vec![vec![q(1)]]),
        );
        assert!(ok.is_ok());
    }
}
