use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::SLMatrix;
use crate::error::{Error, Result};
use crate::gaussq::GaussianRational;
use crate::perm::Permutation;

type Q = GaussianRational;

/// Diagonal element `diag(t_1, .., t_n)` of SL_n: nonzero entries with
/// product 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TorusWire", into = "TorusWire")]
pub struct TorusElement {
    diag: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TorusWire {
    diag: Vec<Q>,
}

impl TryFrom<TorusWire> for TorusElement {
    type Error = Error;
    fn try_from(w: TorusWire) -> Result<Self> {
        TorusElement::new(w.diag)
    }
}

impl From<TorusElement> for TorusWire {
    fn from(t: TorusElement) -> Self {
        TorusWire { diag: t.diag }
    }
}

impl TorusElement {
    pub fn new(diag: Vec<Q>) -> Result<Self> {
        if diag.len() < 2 {
            return Err(Error::InvalidDimension(diag.len()));
        }
        if let Some(k) = diag.iter().position(|x| x.is_zero()) {
            return Err(Error::NotInTorus(format!("entry {k} is zero")));
        }
        let prod: Q = diag.iter().cloned().product();
        if !prod.is_one() {
            return Err(Error::NotInTorus(format!("product of entries is {prod}")));
        }
        Ok(TorusElement { diag })
    }

    /// `diag(s, 1/s)`; panics for `s = 0`.
    pub fn sl2(s: Q) -> Self {
        let inv = s.inv();
        TorusElement { diag: vec![s, inv] }
    }

    pub(crate) fn from_raw(diag: Vec<Q>) -> Self {
        TorusElement { diag }
    }

    pub fn identity(n: usize) -> Self {
        TorusElement {
            diag: vec![Q::one(); n],
        }
    }

    /// Reads the diagonal of a diagonal SL_n matrix.
    pub fn from_matrix(m: &SLMatrix) -> Result<Self> {
        if !m.is_diagonal() {
            return Err(Error::NotInTorus("matrix is not diagonal".into()));
        }
        Ok(TorusElement {
            diag: (0..m.n()).map(|i| m.get(i, i).clone()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Q] {
        &self.diag
    }

    pub fn get(&self, i: usize) -> &Q {
        &self.diag[i]
    }

    pub fn is_identity(&self) -> bool {
        self.diag.iter().all(|x| x.is_one())
    }

    pub fn mul(&self, other: &TorusElement) -> TorusElement {
        assert_eq!(self.n(), other.n());
        TorusElement {
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn inverse(&self) -> TorusElement {
        TorusElement {
            diag: self.diag.iter().map(Q::inv).collect(),
        }
    }

    pub fn to_matrix(&self) -> SLMatrix {
        let n = self.n();
        let mut entries = vec![Q::zero(); n * n];
        for (i, x) in self.diag.iter().enumerate() {
            entries[i * n + i] = x.clone();
        }
        SLMatrix::from_raw(n, entries)
    }

    /// `self * m` (scales rows).
    pub fn left_mul(&self, m: &SLMatrix) -> SLMatrix {
        let n = m.n();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| &self.diag[i] * m.get(i, j))
            .collect();
        SLMatrix::from_raw(n, entries)
    }

    /// `m * self` (scales columns).
    pub fn right_mul(&self, m: &SLMatrix) -> SLMatrix {
        let n = m.n();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j) * &self.diag[j])
            .collect();
        SLMatrix::from_raw(n, entries)
    }

    /// `w t w^{-1}` for any monomial `w` with permutation `perm`: entry
    /// `perm(i)` of the result is `t_i`.
    pub fn permuted(&self, perm: &Permutation) -> TorusElement {
        let mut diag = vec![Q::zero(); self.n()];
        for (i, x) in self.diag.iter().enumerate() {
            diag[perm.apply(i)] = x.clone();
        }
        TorusElement { diag }
    }

    /// True iff conjugation by `self` and by `other` agree on every matrix,
    /// i.e. the two differ by a scalar factor.
    pub fn same_conjugation(&self, other: &TorusElement) -> bool {
        let ratio = &other.diag[0] / &self.diag[0];
        self.diag
            .iter()
            .zip(&other.diag)
            .all(|(a, b)| *b == a * &ratio)
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "diag(")?;
        for (k, x) in self.diag.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A preimage in N of a Weyl group element: a monomial matrix of
/// determinant 1. [`weyl_lift`] gives the canonical one, a signed
/// permutation matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LiftWire", into = "LiftWire")]
pub struct WeylLift {
    perm: Permutation,
    matrix: SLMatrix,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct LiftWire {
    perm: Permutation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<SLMatrix>,
}

impl TryFrom<LiftWire> for WeylLift {
    type Error = Error;
    fn try_from(w: LiftWire) -> Result<Self> {
        match w.matrix {
            None => Ok(weyl_lift(&w.perm)),
            Some(m) => {
                let lift = WeylLift::from_matrix(m)?;
                if lift.perm != w.perm {
                    return Err(Error::NotWeylLift);
                }
                Ok(lift)
            }
        }
    }
}

impl From<WeylLift> for LiftWire {
    fn from(l: WeylLift) -> Self {
        LiftWire {
            perm: l.perm,
            matrix: Some(l.matrix),
        }
    }
}

impl WeylLift {
    /// Accepts any monomial matrix of determinant 1.
    pub fn from_matrix(matrix: SLMatrix) -> Result<Self> {
        let perm = matrix.monomial_permutation().ok_or(Error::NotWeylLift)?;
        Ok(WeylLift { perm, matrix })
    }

    pub fn identity(n: usize) -> Self {
        weyl_lift(&Permutation::identity(n))
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn matrix(&self) -> &SLMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    /// Exact matrix inverse; generally differs from `weyl_lift(perm^-1)` by
    /// a torus element.
    pub fn inverse(&self) -> WeylLift {
        let n = self.n();
        let mut entries = vec![Q::zero(); n * n];
        for j in 0..n {
            let i = self.perm.apply(j);
            entries[j * n + i] = self.matrix.get(i, j).inv();
        }
        WeylLift {
            perm: self.perm.inverse(),
            matrix: SLMatrix::from_raw(n, entries),
        }
    }

    fn scaled(&self, j: usize, x: &Q) -> Q {
        let c = self.matrix.get(self.perm.apply(j), j);
        if c.is_one() {
            x.clone()
        } else if (-c).is_one() {
            -x
        } else {
            c * x
        }
    }

    /// `self * m`: row `j` of `m` moves to row `perm(j)`.
    pub fn mul_left(&self, m: &SLMatrix) -> SLMatrix {
        let n = self.n();
        let mut entries = vec![Q::zero(); n * n];
        for j in 0..n {
            let i = self.perm.apply(j);
            for k in 0..n {
                entries[i * n + k] = self.scaled(j, m.get(j, k));
            }
        }
        SLMatrix::from_raw(n, entries)
    }

    /// `m * self`: column `perm(j)` of `m` moves to column `j`.
    pub fn mul_right(&self, m: &SLMatrix) -> SLMatrix {
        let n = self.n();
        let mut entries = vec![Q::zero(); n * n];
        for j in 0..n {
            let src = self.perm.apply(j);
            for i in 0..n {
                entries[i * n + j] = self.scaled(j, m.get(i, src));
            }
        }
        SLMatrix::from_raw(n, entries)
    }

    pub fn is_canonical(&self) -> bool {
        *self == weyl_lift(&self.perm)
    }

    /// `d` with `self = d * weyl_lift(perm)`; a sign matrix when `self` is
    /// a signed permutation matrix.
    pub fn torus_part(&self) -> TorusElement {
        let canon = weyl_lift(&self.perm);
        TorusElement::from_matrix(&(&self.matrix * &canon.matrix.transpose()))
            .expect("lifts of one permutation differ by a torus element")
    }
}

impl fmt::Debug for WeylLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylLift({:?}, {:?})", self.perm, self.matrix)
    }
}

/// The fixed lift of a permutation: entry `(perm(i), i)` is 1 for `i > 0`
/// and `sign(perm)` for `i = 0`, giving determinant 1. For the transposition
/// of S_2 this is `[[0, 1], [-1, 0]]`.
pub fn weyl_lift(perm: &Permutation) -> WeylLift {
    let n = perm.len();
    let mut entries = vec![Q::zero(); n * n];
    for i in 0..n {
        entries[perm.apply(i) * n + i] = Q::one();
    }
    if perm.sign() < 0 {
        entries[perm.apply(0) * n] = -Q::one();
    }
    WeylLift {
        perm: perm.clone(),
        matrix: SLMatrix::from_raw(n, entries),
    }
}

/// Splits a monomial `m` as `t * weyl_lift(perm)`.
pub fn split_monomial_left(m: &SLMatrix) -> Result<(TorusElement, WeylLift)> {
    let perm = m.monomial_permutation().ok_or(Error::NotMonomial)?;
    let lift = weyl_lift(&perm);
    let t = TorusElement::from_matrix(&(m * &lift.matrix.transpose()))?;
    Ok((t, lift))
}

/// Splits a monomial `m` as `weyl_lift(perm) * t`.
pub fn split_monomial_right(m: &SLMatrix) -> Result<(WeylLift, TorusElement)> {
    let perm = m.monomial_permutation().ok_or(Error::NotMonomial)?;
    let lift = weyl_lift(&perm);
    let t = TorusElement::from_matrix(&(&lift.matrix.transpose() * m))?;
    Ok((lift, t))
}

/// Integer exponents `z[j][i]` with `kappa(a)_j = prod_i a_i^z[j][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaExponents {
    z: Vec<Vec<i32>>,
}

impl KappaExponents {
    /// Exponents for SL_{r+1}: `kappa(a) = (a_1, a_2/a_1, .., a_r/a_{r-1}, 1/a_r)`.
    pub fn for_rank(r: usize) -> Self {
        let n = r + 1;
        let mut z = vec![vec![0; r]; n];
        for (j, row) in z.iter_mut().enumerate() {
            if j < r {
                row[j] = 1;
            }
            if j > 0 {
                row[j - 1] = -1;
            }
        }
        KappaExponents { z }
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.z
    }

    pub fn column_sums(&self) -> Vec<i32> {
        let r = self.z.first().map_or(0, Vec::len);
        (0..r)
            .map(|i| self.z.iter().map(|row| row[i]).sum())
            .collect()
    }

    /// Evaluates the monomials; `None` if some argument is zero.
    pub fn apply(&self, a: &[Q]) -> Option<Vec<Q>> {
        if a.iter().any(Q::is_zero) {
            return None;
        }
        Some(
            self.z
                .iter()
                .map(|row| row.iter().zip(a).map(|(&e, x)| x.powi(e)).product())
                .collect(),
        )
    }
}

/// Inverse of the principal-minor map on the torus:
/// `kappa(a_1, .., a_r) = diag(a_1, a_2/a_1, .., a_r/a_{r-1}, 1/a_r)`.
pub fn kappa(a: &[Q]) -> Result<TorusElement> {
    if a.is_empty() {
        return Err(Error::InvalidDimension(1));
    }
    if let Some(k) = a.iter().position(Q::is_zero) {
        return Err(Error::ZeroArgument(k));
    }
    let r = a.len();
    let mut diag = Vec::with_capacity(r + 1);
    diag.push(a[0].clone());
    for k in 1..r {
        diag.push(&a[k] / &a[k - 1]);
    }
    diag.push(a[r - 1].inv());
    Ok(TorusElement { diag })
}
