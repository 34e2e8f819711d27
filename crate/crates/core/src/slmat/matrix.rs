use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussq::GaussianRational;
use crate::perm::Permutation;

type Q = GaussianRational;

/// Determinant of a row-major `n x n` array by exact elimination.
pub fn determinant(n: usize, entries: &[Q]) -> Q {
    debug_assert_eq!(entries.len(), n * n);
    let mut a = entries.to_vec();
    let mut det = Q::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
            return Q::zero();
        };
        if p != k {
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k].clone();
        det = &det * &pivot;
        let pivot_inv = pivot.inv();
        for i in k + 1..n {
            if a[i * n + k].is_zero() {
                continue;
            }
            let f = &a[i * n + k] * &pivot_inv;
            for j in k..n {
                let d = &f * &a[k * n + j];
                a[i * n + j] -= &d;
            }
        }
    }
    det
}

/// An `n x n` matrix over Q(i) with determinant exactly 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixWire", into = "MatrixWire")]
pub struct SLMatrix {
    n: usize,
    entries: Vec<Q>,
}

impl SLMatrix {
    /// Row-major constructor; checks the shape and `det = 1`.
    pub fn new(n: usize, entries: Vec<Q>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        let det = determinant(n, &entries);
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(SLMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// Convenience for integer matrices, e.g. `SLMatrix::from_ints([[2, 1], [1, 1]])`.
    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Result<Self> {
        Self::new(N, rows.iter().flatten().map(|&x| Q::from_int(x)).collect())
    }

    /// Caller guarantees `det = 1` (e.g. a product of SL_n elements).
    pub(crate) fn from_raw(n: usize, entries: Vec<Q>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        SLMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Q::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Q::one();
        }
        SLMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn trace(&self) -> Q {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        SLMatrix { n, entries }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Self {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a[i * n + k].is_zero())
                .expect("SL_n matrices are invertible");
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                    inv.swap(p * n + j, k * n + j);
                }
            }
            let pivot_inv = a[k * n + k].inv();
            for j in 0..n {
                a[k * n + j] = &a[k * n + j] * &pivot_inv;
                inv[k * n + j] = &inv[k * n + j] * &pivot_inv;
            }
            for i in 0..n {
                if i == k || a[i * n + k].is_zero() {
                    continue;
                }
                let f = a[i * n + k].clone();
                for j in 0..n {
                    let da = &f * &a[k * n + j];
                    a[i * n + j] -= &da;
                    let di = &f * &inv[k * n + j];
                    inv[i * n + j] -= &di;
                }
            }
        }
        SLMatrix { n, entries: inv }
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => self.get(i, j).is_one(),
                std::cmp::Ordering::Greater => self.get(i, j).is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// For a monomial matrix (one nonzero per row and column) the
    /// permutation sending column `j` to the row of its nonzero entry.
    pub fn monomial_permutation(&self) -> Option<Permutation> {
        let n = self.n;
        let mut images = Vec::with_capacity(n);
        for j in 0..n {
            let mut rows = (0..n).filter(|&i| !self.get(i, j).is_zero());
            let i = rows.next()?;
            if rows.next().is_some() {
                return None;
            }
            images.push(i);
        }
        Permutation::from_images(images).ok()
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial_permutation().is_some()
    }

    pub fn leading_submatrix_det(&self, k: usize) -> Q {
        let sub: Vec<Q> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        determinant(k, &sub)
    }
}

impl<'b> Mul<&'b SLMatrix> for &SLMatrix {
    type Output = SLMatrix;
    fn mul(self, rhs: &'b SLMatrix) -> SLMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Q::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        SLMatrix { n, entries }
    }
}

impl Mul<SLMatrix> for SLMatrix {
    type Output = SLMatrix;
    fn mul(self, rhs: SLMatrix) -> SLMatrix {
        &self * &rhs
    }
}

impl fmt::Debug for SLMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for SLMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `{"n": 2, "entries": [["1","2"],["3","7"]]}`
#[derive(Serialize, Deserialize)]
pub(crate) struct MatrixWire {
    n: usize,
    entries: Vec<Vec<Q>>,
}

impl TryFrom<MatrixWire> for SLMatrix {
    type Error = Error;
    fn try_from(w: MatrixWire) -> Result<Self> {
        if w.entries.len() != w.n {
            return Err(Error::DimensionMismatch {
                expected: w.n,
                got: w.entries.len(),
            });
        }
        SLMatrix::from_rows(w.entries)
    }
}

impl From<SLMatrix> for MatrixWire {
    fn from(m: SLMatrix) -> Self {
        MatrixWire {
            n: m.n,
            entries: m.rows(),
        }
    }
}
