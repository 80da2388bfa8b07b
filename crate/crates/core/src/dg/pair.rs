use num_traits::{One, Zero};

use super::{DgError, Generator, KoszulAlgebra};
use crate::linalg::{rank_of_vectors, Matrix, Q};

/// Two subspaces `F1, F2` of `E = Q^n`, given by bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePair {
    n: usize,
    f1: Vec<Vec<Q>>,
    f2: Vec<Vec<Q>>,
}

impl SubspacePair {
    pub fn new(n: usize, f1: Vec<Vec<Q>>, f2: Vec<Vec<Q>>) -> Result<Self, DgError> {
        for (name, basis) in [("F1", &f1), ("F2", &f2)] {
            if basis.iter().any(|v| v.len() != n) {
                return Err(DgError::Subspace(format!("{name} vector of wrong length")));
            }
            if rank_of_vectors(basis, n) != basis.len() {
                return Err(DgError::Subspace(format!("{name} basis is not independent")));
            }
        }
        Ok(Self { n, f1, f2 })
    }

    pub fn from_ints(n: usize, f1: &[Vec<i64>], f2: &[Vec<i64>]) -> Result<Self, DgError> {
        let conv = |b: &[Vec<i64>]| b.iter().map(|v| v.iter().map(|&x| crate::linalg::q(x)).collect()).collect();
        Self::new(n, conv(f1), conv(f2))
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn f1(&self) -> &[Vec<Q>] {
        &self.f1
    }

    pub fn f2(&self) -> &[Vec<Q>] {
        &self.f2
    }

    /// Standard basis vectors completing `F1` to a basis of `E`, chosen greedily.
    pub fn complement(&self) -> Vec<Vec<Q>> {
        let mut span = self.f1.clone();
        let mut out = Vec::new();
        for i in 0..self.n {
            let mut e = vec![Q::zero(); self.n];
            e[i] = Q::one();
            span.push(e.clone());
            if rank_of_vectors(&span, self.n) == span.len() {
                out.push(e);
            } else {
                span.pop();
            }
        }
        out
    }

    /// Basis of `F1^perp` dual to the complement basis of `E/F1`.
    pub fn f1_perp(&self) -> Vec<Vec<Q>> {
        let k = self.f1.len();
        let cols: Vec<Vec<Q>> = self.f1.iter().cloned().chain(self.complement()).collect();
        let inv = Matrix::from_columns(&cols, self.n).inverse().expect("basis of E");
        (k..self.n).map(|r| inv.row(r).to_vec()).collect()
    }

    /// Basis of `F2^perp`, as the null space of the `F2` basis.
    pub fn f2_perp(&self) -> Vec<Vec<Q>> {
        Matrix::from_rows_with_cols(self.f2.clone(), self.n).nullspace()
    }

    /// The restriction map `F1^perp -> F2^vee`: entry `[b][a] = eps_a(f2_b)`.
    pub fn restriction(&self) -> Matrix {
        let eps = self.f1_perp();
        let mut m = Matrix::zeros(self.f2.len(), eps.len());
        for (b, f) in self.f2.iter().enumerate() {
            for (a, e) in eps.iter().enumerate() {
                m.set(b, a, dot(e, f));
            }
        }
        m
    }

    /// `Sym(F1^perp[1] -> F2^vee)`: odd generators in bidegree `(-1, 2)`, even in `(0, 2)`.
    pub fn build_t(&self) -> KoszulAlgebra {
        let ext = (0..self.n - self.f1.len()).map(|a| gen(format!("eps{a}"), (-1, 2))).collect();
        let sym = (0..self.f2.len()).map(|b| gen(format!("f{b}^"), (0, 2))).collect();
        KoszulAlgebra::with_weight(ext, sym, self.restriction(), 2).expect("well-formed by construction")
    }

    /// Odd generators `F2` in `(-1, -2)`, even generators `E/F1` in `(0, -2)`,
    /// differential minus the composite `F2 -> E -> E/F1`.
    pub fn build_r(&self) -> KoszulAlgebra {
        let ext = (0..self.f2.len()).map(|b| gen(format!("f{b}"), (-1, -2))).collect();
        let sym = (0..self.n - self.f1.len()).map(|a| gen(format!("c{a}"), (0, -2))).collect();
        KoszulAlgebra::with_weight(ext, sym, self.restriction().transpose().neg(), -2).expect("well-formed by construction")
    }

    /// The pair `(F1^perp, F2^perp)` inside `E^vee`.
    pub fn dual(&self) -> SubspacePair {
        SubspacePair { n: self.n, f1: self.f1_perp(), f2: self.f2_perp() }
    }
}

fn gen(name: String, bidegree: (i64, i64)) -> Generator {
    Generator { name, bidegree }
}

pub(crate) fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn build_t_examples() {
        let p = SubspacePair::from_ints(1, &[], &[]).unwrap();
        let t = p.build_t();
        assert_eq!((t.n_ext(), t.n_sym()), (1, 0));
        assert_eq!(t.ext()[0].bidegree, (-1, 2));

        let p = SubspacePair::from_ints(1, &[], &[vec![1]]).unwrap();
        let t = p.build_t();
        assert_eq!(t.diff(), &Matrix::from_int_rows(&[vec![1]]));

        let p = SubspacePair::from_ints(2, &[vec![1, 0]], &[vec![1, 0]]).unwrap();
        let t = p.build_t();
        assert_eq!((t.n_ext(), t.n_sym()), (1, 1));
        // the odd generator is e2^vee and vanishes on F2
        assert_eq!(p.f1_perp(), vec![vec![q(0), q(1)]]);
        assert!(t.diff().is_zero());
    }

    #[test]
    fn build_r_examples() {
        let p = SubspacePair::from_ints(1, &[], &[]).unwrap();
        let r = p.build_r();
        assert_eq!((r.n_ext(), r.n_sym()), (0, 1));
        assert_eq!(r.sym()[0].bidegree, (0, -2));

        let p = SubspacePair::from_ints(1, &[vec![1]], &[vec![1]]).unwrap();
        let r = p.build_r();
        assert_eq!((r.n_ext(), r.n_sym()), (1, 0));
        assert_eq!(r.ext()[0].bidegree, (-1, -2));

        let p = SubspacePair::from_ints(2, &[vec![1, 0]], &[vec![1, 0]]).unwrap();
        let r = p.build_r();
        assert_eq!((r.n_ext(), r.n_sym()), (1, 1));
        assert!(r.diff().is_zero());
    }

    #[test]
    fn perp_spaces_annihilate() {
        let p = SubspacePair::from_ints(3, &[vec![1, 2, 0], vec![0, 1, -1]], &[vec![2, 0, 1]]).unwrap();
        for e in p.f1_perp() {
            for f in p.f1() {
                assert!(dot(&e, f).is_zero());
            }
        }
        for e in p.f2_perp() {
            assert!(dot(&e, &p.f2()[0]).is_zero());
        }
        assert_eq!(p.f2_perp().len(), 2);
        // eps_a pairs with the complement basis as the identity
        let c = p.complement();
        let eps = p.f1_perp();
        for (a, e) in eps.iter().enumerate() {
            for (b, v) in c.iter().enumerate() {
                assert_eq!(dot(e, v), if a == b { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn rejects_dependent_basis() {
        assert!(SubspacePair::from_ints(2, &[vec![1, 1], vec![2, 2]], &[]).is_err());
        assert!(SubspacePair::from_ints(2, &[vec![1]], &[]).is_err());
    }
}
