//! Exact sparse matrices over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

static ZERO: LazyLock<Q> = LazyLock::new(Q::zero);

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

type SparseRow = BTreeMap<usize, Q>;

/// A `rows x cols` matrix stored as sparse rows without explicit zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![SparseRow::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_rows_with_cols(rows, c)
    }

    /// Like [`Matrix::from_rows`] but with an explicit column count, so that
    /// zero-row matrices keep their shape.
    pub fn from_rows_with_cols(rows: Vec<Vec<Q>>, cols: usize) -> Self {
        assert!(rows.iter().all(|x| x.len() == cols), "ragged rows");
        let data = rows
            .into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect::<Vec<SparseRow>>();
        Self { rows: data.len(), cols, data }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn from_columns(cols: &[Vec<Q>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        assert!(j < self.cols, "column out of range");
        self.data[i].get(&j).unwrap_or(&ZERO)
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        assert!(j < self.cols, "column out of range");
        if x.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, x);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Q) {
        let y = self.get(i, j) + x;
        self.set(i, j, y);
    }

    pub fn row(&self, i: usize) -> Vec<Q> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    /// Nonzero entries of row `i` in column order.
    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &Q)> {
        self.data[i].iter().map(|(j, x)| (*j, x))
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Nonzero entries of column `j` in row order.
    pub fn column_entries(&self, j: usize) -> Vec<(usize, Q)> {
        (0..self.rows).filter_map(|i| self.data[i].get(&j).map(|x| (i, x.clone()))).collect()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                m.data[*j].insert(i, x.clone());
            }
        }
        m
    }

    fn map(&self, f: impl Fn(&Q) -> Q) -> Self {
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, x)| (*j, f(x))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.map(|x| x * c)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add");
        let mut m = self.clone();
        for (i, r) in other.data.iter().enumerate() {
            for (j, x) in r {
                m.add_at(i, *j, x);
            }
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = SparseRow::new();
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                    }
                }
                acc.retain(|_, x| !x.is_zero());
                acc
            })
            .collect();
        Self { rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        self.data.iter().map(|r| r.iter().fold(Q::zero(), |acc, (j, a)| acc + a * &v[*j])).collect()
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            self.data[r0 + i].retain(|j, _| *j < c0 || *j >= c0 + block.cols);
            for (j, x) in &block.data[i] {
                self.data[r0 + i].insert(c0 + j, x.clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let data = (0..rows)
            .map(|i| self.data[r0 + i].range(c0..c0 + cols).map(|(j, x)| (j - c0, x.clone())).collect())
            .collect();
        Matrix { rows, cols, data }
    }

    /// Rank by sparse elimination, reducing each row against the pivots found
    /// so far; sparse rows are processed first to limit fill-in.
    pub fn rank(&self) -> usize {
        let mut order: Vec<&SparseRow> = self.data.iter().filter(|r| !r.is_empty()).collect();
        order.sort_by_key(|r| r.len());
        let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for r in order {
            let mut row = r.clone();
            while let Some((&c, lead)) = row.iter().next() {
                let Some(p) = pivots.get(&c) else {
                    // normalize so that later reductions stay small
                    let inv = lead.recip();
                    for x in row.values_mut() {
                        *x *= &inv;
                    }
                    pivots.insert(c, row);
                    break;
                };
                let f = lead.clone();
                for (j, x) in p {
                    let e = row.entry(*j).or_insert_with(Q::zero);
                    *e -= &f * x;
                    if e.is_zero() {
                        row.remove(j);
                    }
                }
            }
        }
        pivots.len()
    }

    fn dense(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.dense();
        let (rows, cols) = self.shape();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows {
                if i == r || m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].clone();
                for j in 0..cols {
                    let x = &m[i][j] - &f * &m[r][j];
                    m[i][j] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Matrix::from_rows_with_cols(m, cols), pivots)
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(k, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    /// Largest absolute value of any numerator or denominator, for diagnostics.
    pub fn height(&self) -> BigInt {
        self.data
            .iter()
            .flat_map(|r| r.values())
            .map(|x| x.numer().abs().max(x.denom().clone()))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", r.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Rank of a list of vectors of common length.
pub fn rank_of_vectors(vs: &[Vec<Q>], len: usize) -> usize {
    Matrix::from_rows_with_cols(vs.to_vec(), len).rank()
}
