use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::SLMatrix;
use super::torus::{kappa, weyl_lift, TorusElement, WeylLift};
use crate::error::{Error, Result};
use crate::gaussq::GaussianRational;
use crate::perm::Permutation;

type Q = GaussianRational;

/// Coordinates of a point of U^-U: the strict-lower entries of `v` and the
/// strict-upper entries of `u` for the matrix `v * u`, each listed
/// row-major. There are `n(n-1)/2` of each.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CellPoint {
    pub n: usize,
    pub lower: Vec<Q>,
    pub upper: Vec<Q>,
}

pub(crate) fn lower_positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|i| (0..i).map(move |j| (i, j)))
}

pub(crate) fn upper_positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

impl CellPoint {
    pub fn new(n: usize, lower: Vec<Q>, upper: Vec<Q>) -> Result<Self> {
        let m = n * (n - 1) / 2;
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        for len in [lower.len(), upper.len()] {
            if len != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    got: len,
                });
            }
        }
        Ok(CellPoint { n, lower, upper })
    }

    pub fn origin(n: usize) -> Self {
        let m = n * (n - 1) / 2;
        CellPoint {
            n,
            lower: vec![Q::zero(); m],
            upper: vec![Q::zero(); m],
        }
    }

    /// Affine coordinates: `upper` followed by `lower`. For n = 2 this is
    /// `(alpha, beta)` for `[[1, alpha], [beta, 1 + alpha*beta]]`.
    pub fn coords(&self) -> Vec<Q> {
        self.upper.iter().chain(&self.lower).cloned().collect()
    }

    pub fn from_coords(n: usize, coords: &[Q]) -> Result<Self> {
        let m = n * (n - 1) / 2;
        if coords.len() != 2 * m {
            return Err(Error::DimensionMismatch {
                expected: 2 * m,
                got: coords.len(),
            });
        }
        Self::new(n, coords[m..].to_vec(), coords[..m].to_vec())
    }

    pub fn is_origin(&self) -> bool {
        self.lower.iter().chain(&self.upper).all(Q::is_zero)
    }
}

/// `g = v * t * u` on the big cell.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GaussFactors {
    pub v: SLMatrix,
    pub t: TorusElement,
    pub u: SLMatrix,
}

impl GaussFactors {
    pub fn product(&self) -> SLMatrix {
        &self.t.right_mul(&self.v) * &self.u
    }
}

/// `g = u1 * w * t * u2` with `u1` in U_w.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BruhatFactors {
    pub u1: SLMatrix,
    pub w: WeylLift,
    pub t: TorusElement,
    pub u2: SLMatrix,
}

impl BruhatFactors {
    pub fn product(&self) -> SLMatrix {
        &(&self.u1 * &self.t.right_mul(self.w.matrix())) * &self.u2
    }
}

/// `g = n1 * point_to_matrix(point)` with `n1 = w * t` in N.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NCellFactors {
    pub w: WeylLift,
    pub t: TorusElement,
    pub point: CellPoint,
}

impl NCellFactors {
    pub fn n1(&self) -> SLMatrix {
        self.t.right_mul(self.w.matrix())
    }
}

/// Leading principal minors `delta_1(g), .., delta_{n-1}(g)`.
pub fn principal_minors(g: &SLMatrix) -> Vec<Q> {
    (1..g.n()).map(|k| g.leading_submatrix_det(k)).collect()
}

/// All leading principal minors are nonzero.
pub fn in_big_cell(g: &SLMatrix) -> bool {
    // Elimination without pivoting succeeds exactly on the big cell.
    gauss_decompose(g).is_ok()
}

/// All leading principal minors equal 1, i.e. `g = v * u`.
pub fn in_cell_u(g: &SLMatrix) -> bool {
    principal_minors(g).iter().all(Q::is_one)
}

/// Unique `g = v * t * u` with `v` lower and `u` upper unitriangular.
pub fn gauss_decompose(g: &SLMatrix) -> Result<GaussFactors> {
    let n = g.n();
    let mut upper = g.entries().to_vec();
    let mut lower = SLMatrix::identity(n).entries().to_vec();
    for k in 0..n {
        let pivot = upper[k * n + k].clone();
        let Some(pivot_inv) = pivot.checked_inv() else {
            return Err(Error::NotInBigCell);
        };
        for i in k + 1..n {
            if upper[i * n + k].is_zero() {
                continue;
            }
            let f = &upper[i * n + k] * &pivot_inv;
            for j in k..n {
                let d = &f * &upper[k * n + j];
                upper[i * n + j] -= &d;
            }
            lower[i * n + k] = f;
        }
    }
    let t = TorusElement::from_raw((0..n).map(|k| upper[k * n + k].clone()).collect());
    let t_inv = t.inverse();
    let u = t_inv.left_mul(&SLMatrix::from_raw(n, upper));
    Ok(GaussFactors {
        v: SLMatrix::from_raw(n, lower),
        t,
        u,
    })
}

/// `kappa(principal_minors(g))`: the torus part of `g` on the big cell.
pub fn delta_star(g: &SLMatrix) -> Result<TorusElement> {
    kappa(&principal_minors(g)).map_err(|_| Error::NotInBigCell)
}

pub fn point_to_matrix(p: &CellPoint) -> SLMatrix {
    let n = p.n;
    let mut v = SLMatrix::identity(n).entries().to_vec();
    let mut u = v.clone();
    for ((i, j), x) in lower_positions(n).zip(&p.lower) {
        v[i * n + j] = x.clone();
    }
    for ((i, j), x) in upper_positions(n).zip(&p.upper) {
        u[i * n + j] = x.clone();
    }
    &SLMatrix::from_raw(n, v) * &SLMatrix::from_raw(n, u)
}

pub fn matrix_to_point(g: &SLMatrix) -> Result<CellPoint> {
    let f = gauss_decompose(g).map_err(|_| Error::NotInCellU)?;
    if !f.t.is_identity() {
        return Err(Error::NotInCellU);
    }
    let n = g.n();
    Ok(CellPoint {
        n,
        lower: lower_positions(n)
            .map(|(i, j)| f.v.get(i, j).clone())
            .collect(),
        upper: upper_positions(n)
            .map(|(i, j)| f.u.get(i, j).clone())
            .collect(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LeftFactor {
    Upper,
    Lower,
}

/// `g = left * lift * t * right` with `left` unitriangular of the requested
/// shape and `right` upper unitriangular.
struct MonomialReduction {
    left: Vec<Q>,
    lift: WeylLift,
    t: TorusElement,
    right: Vec<Q>,
}

// Row operations only add multiples of a pivot row to rows on the `side`
// of it, and column operations only add multiples of a pivot column to
// later columns, so the accumulated transforms stay unitriangular. Their
// inverses are tracked directly.
fn reduce_to_monomial(g: &SLMatrix, side: LeftFactor) -> MonomialReduction {
    let n = g.n();
    let mut m = g.entries().to_vec();
    let mut left = SLMatrix::identity(n).entries().to_vec();
    let mut right = left.clone();
    let mut used = vec![false; n];
    let mut images = vec![0; n];
    for j in 0..n {
        let mut candidates = (0..n).filter(|&i| !used[i] && !m[i * n + j].is_zero());
        let pivot_row = match side {
            LeftFactor::Upper => candidates.next_back(),
            LeftFactor::Lower => candidates.next(),
        }
        .expect("invertible matrix has a pivot in every column");
        used[pivot_row] = true;
        images[j] = pivot_row;
        let pivot_inv = m[pivot_row * n + j].inv();
        let rows: Vec<usize> = match side {
            LeftFactor::Upper => (0..pivot_row).collect(),
            LeftFactor::Lower => (pivot_row + 1..n).collect(),
        };
        for k in rows {
            if m[k * n + j].is_zero() {
                continue;
            }
            // row_k -= c * row_pivot
            let c = &m[k * n + j] * &pivot_inv;
            for l in 0..n {
                let d = &c * &m[pivot_row * n + l];
                m[k * n + l] -= &d;
            }
            // left^{-1} <- left^{-1} (I + c E_{k,pivot})
            for r in 0..n {
                let d = &c * &left[r * n + k];
                left[r * n + pivot_row] += &d;
            }
        }
        for l in j + 1..n {
            if m[pivot_row * n + l].is_zero() {
                continue;
            }
            // col_l -= c * col_j; only the pivot row is nonzero in col_j now
            let c = &m[pivot_row * n + l] * &pivot_inv;
            m[pivot_row * n + l] = Q::zero();
            // right^{-1} <- (I + c E_{j,l}) right^{-1}
            for r in 0..n {
                let d = &c * &right[l * n + r];
                right[j * n + r] += &d;
            }
        }
    }
    let perm = Permutation::from_images(images).expect("pivots form a permutation");
    let lift = weyl_lift(&perm);
    let t = TorusElement::from_raw(
        (0..n)
            .map(|j| lift.matrix().get(perm.apply(j), j) * &m[perm.apply(j) * n + j])
            .collect(),
    );
    MonomialReduction {
        left,
        lift,
        t,
        right,
    }
}

/// Factors a unitriangular `b` as `first * second` where `first` is
/// supported (off the diagonal) on positions accepted by `in_first` and
/// `second` on the remaining off-diagonal positions of `b`'s shape.
fn split_unitriangular(
    n: usize,
    b: &[Q],
    upper: bool,
    in_first: impl Fn(usize, usize) -> bool,
) -> (Vec<Q>, Vec<Q>) {
    let mut first = SLMatrix::identity(n).entries().to_vec();
    let mut second = first.clone();
    for dist in 1..n {
        for a in 0..n - dist {
            let (i, j) = if upper { (a, a + dist) } else { (a + dist, a) };
            let (lo, hi) = (i.min(j), i.max(j));
            let mut rest = b[i * n + j].clone();
            for k in lo + 1..hi {
                let d = &first[i * n + k] * &second[k * n + j];
                rest -= &d;
            }
            if in_first(i, j) {
                first[i * n + j] = rest;
            } else {
                second[i * n + j] = rest;
            }
        }
    }
    (first, second)
}

/// `w^{-1} a w`.
fn conj_by_lift_inverse(w: &WeylLift, a: &SLMatrix) -> SLMatrix {
    &(&w.matrix().transpose() * a) * w.matrix()
}

/// Bruhat decomposition relative to the upper-triangular Borel subgroup.
pub fn bruhat_decompose(g: &SLMatrix) -> BruhatFactors {
    let n = g.n();
    let red = reduce_to_monomial(g, LeftFactor::Upper);
    let inv = red.lift.perm().inverse();
    // u1 takes the positions (i, j) with w^{-1}(i) > w^{-1}(j)
    let (u1, rest) = split_unitriangular(n, &red.left, true, |i, j| inv.apply(i) > inv.apply(j));
    let rest = conj_by_lift_inverse(&red.lift, &SLMatrix::from_raw(n, rest));
    let u2 = &red.t.inverse().left_mul(&red.t.right_mul(&rest)) * &SLMatrix::from_raw(n, red.right);
    BruhatFactors {
        u1: SLMatrix::from_raw(n, u1),
        w: red.lift,
        t: red.t,
        u2,
    }
}

/// `g = (w t) * p` with `w t` in N and `p` in U^-U. The permutation is the
/// one with `g` in `B^- w B`; for `g` in the big cell this gives
/// `n1 = delta_star(g)`.
pub fn n_cell_factor(g: &SLMatrix) -> NCellFactors {
    let n = g.n();
    let red = reduce_to_monomial(g, LeftFactor::Lower);
    let inv = red.lift.perm().inverse();
    let (a, b) = split_unitriangular(n, &red.left, false, |i, j| inv.apply(i) > inv.apply(j));
    let t_inv = red.t.inverse();
    let conj_t = |x: &SLMatrix| t_inv.left_mul(&red.t.right_mul(x));
    let v = conj_t(&conj_by_lift_inverse(&red.lift, &SLMatrix::from_raw(n, a)));
    let u = &conj_t(&conj_by_lift_inverse(&red.lift, &SLMatrix::from_raw(n, b)))
        * &SLMatrix::from_raw(n, red.right);
    let point = CellPoint {
        n,
        lower: lower_positions(n)
            .map(|(i, j)| v.get(i, j).clone())
            .collect(),
        upper: upper_positions(n)
            .map(|(i, j)| u.get(i, j).clone())
            .collect(),
    };
    NCellFactors {
        w: red.lift,
        t: red.t,
        point,
    }
}
