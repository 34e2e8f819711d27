//! SL_2: N-double cosets, pairs of tori, T-double cosets and pairs of
//! semisimple elements.
//!
//! The slice `U^- U` of SL_2 is the plane of points `(alpha, beta)` with
//! matrix `[[1, alpha], [beta, 1 + alpha*beta]]`. Its N-orbits are the
//! origin, the union of the three small strata, and for each `a` in the
//! fundamental domain of `a -> -1 - a` the set of points of `M` with
//! `alpha*beta` in `{a, -1 - a}`. Every label is computed from rational
//! invariants, so no square roots are taken even where the connecting group
//! element needs them.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussq::{kflat_rep, GaussianRational};
use crate::paction::{FnMap, GeneratorSet};
use crate::perm::Permutation;
use crate::slmat::{gauss_decompose, n_cell_factor, weyl_lift, CellPoint, SLMatrix, TorusElement};

type Q = GaussianRational;

/// A point `(alpha, beta)` of the SL_2 slice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellPoint2 {
    pub alpha: Q,
    pub beta: Q,
}

impl CellPoint2 {
    pub fn new(alpha: Q, beta: Q) -> Self {
        CellPoint2 { alpha, beta }
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Self {
        Self::new(Q::from_int(alpha), Q::from_int(beta))
    }

    /// `1 + alpha*beta`, the lower-right entry.
    pub fn d(&self) -> Q {
        Q::one() + &self.alpha * &self.beta
    }

    pub fn matrix(&self) -> SLMatrix {
        SLMatrix::from_rows(vec![
            vec![Q::one(), self.alpha.clone()],
            vec![self.beta.clone(), self.d()],
        ])
        .expect("determinant is 1")
    }

    pub fn from_cell_point(p: &CellPoint) -> Result<Self> {
        if p.n != 2 {
            return Err(Error::InvalidDimension(p.n));
        }
        Ok(Self::new(p.upper[0].clone(), p.lower[0].clone()))
    }

    pub fn to_cell_point(&self) -> CellPoint {
        CellPoint {
            n: 2,
            lower: vec![self.beta.clone()],
            upper: vec![self.alpha.clone()],
        }
    }
}

/// `w_l(alpha, beta) = (beta^{-1}(1 + alpha beta), -beta)`.
pub fn wl(p: &CellPoint2) -> Option<CellPoint2> {
    let bi = p.beta.checked_inv()?;
    Some(CellPoint2::new(bi * p.d(), -&p.beta))
}

/// `w_r(alpha, beta) = (-alpha^{-1}, alpha(1 + alpha beta))`.
pub fn wr(p: &CellPoint2) -> Option<CellPoint2> {
    let ai = p.alpha.checked_inv()?;
    Some(CellPoint2::new(-ai, &p.alpha * &p.d()))
}

/// `w_d(alpha, beta) = (-beta (1 + alpha beta)^{-1}, -alpha(1 + alpha beta))`.
pub fn wd(p: &CellPoint2) -> Option<CellPoint2> {
    let d = p.d();
    let di = d.checked_inv()?;
    Some(CellPoint2::new(-(&p.beta * &di), -(&p.alpha * &d)))
}

/// `t_s(alpha, beta) = (s^2 alpha, s^{-2} beta)` for `s = diag(s, 1/s)`.
pub fn ts_sl2(p: &CellPoint2, s: &Q) -> CellPoint2 {
    let s2 = s * s;
    CellPoint2::new(&p.alpha * &s2, &p.beta / &s2)
}

/// The closed-form generators on coordinates `(alpha, beta)`, with the same
/// names as [`crate::nhat::sl2_generators`].
pub fn closed_form_generators() -> GeneratorSet {
    fn lift(f: fn(&CellPoint2) -> Option<CellPoint2>) -> Arc<FnMap> {
        Arc::new(FnMap::new(2, move |x| {
            let q = f(&CellPoint2::new(x[0].clone(), x[1].clone()))?;
            Some(vec![q.alpha, q.beta])
        }))
    }
    fn scale(s: Q) -> Arc<FnMap> {
        Arc::new(FnMap::new(2, move |x| {
            let q = ts_sl2(&CellPoint2::new(x[0].clone(), x[1].clone()), &s);
            Some(vec![q.alpha, q.beta])
        }))
    }
    let mut set = GeneratorSet::new();
    set.add_involution("wl", lift(wl));
    set.add_involution("wr", lift(wr));
    set.add_involution("wd", lift(wd));
    set.add_pair("t", scale(Q::from_int(2)), scale(Q::from_frac(1, 2)));
    set
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stratum {
    /// `alpha != 0`, `beta != 0`, `alpha beta != -1`.
    M,
    /// `alpha = 0`, `beta != 0`.
    M01,
    /// `alpha != 0`, `beta = 0`.
    M10,
    /// `alpha beta = -1`.
    Mminus1,
    OriginPoint,
}

pub fn stratify(p: &CellPoint2) -> Stratum {
    match (p.alpha.is_zero(), p.beta.is_zero()) {
        (true, true) => Stratum::OriginPoint,
        (true, false) => Stratum::M01,
        (false, true) => Stratum::M10,
        (false, false) if p.d().is_zero() => Stratum::Mminus1,
        (false, false) => Stratum::M,
    }
}

/// Label of an N-orbit on the slice, equivalently of an N-double coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum OrbitLabel {
    /// The coset `N` itself.
    Origin,
    /// The coset of `g_alpha`, `alpha` in the fundamental domain.
    Coset { alpha: Q },
}

impl OrbitLabel {
    /// The representative: `e` or `g_alpha`.
    pub fn representative(&self) -> SLMatrix {
        match self {
            OrbitLabel::Origin => SLMatrix::identity(2),
            OrbitLabel::Coset { alpha } => g_alpha(alpha),
        }
    }
}

/// `g_alpha = [[1, alpha], [1, 1 + alpha]]`, the point `(alpha, 1)`.
pub fn g_alpha(alpha: &Q) -> SLMatrix {
    CellPoint2::new(alpha.clone(), Q::one()).matrix()
}

pub fn canonical_label(p: &CellPoint2) -> OrbitLabel {
    match stratify(p) {
        Stratum::OriginPoint => OrbitLabel::Origin,
        Stratum::M01 | Stratum::M10 | Stratum::Mminus1 => OrbitLabel::Coset { alpha: Q::zero() },
        Stratum::M => OrbitLabel::Coset {
            alpha: kflat_rep(&(&p.alpha * &p.beta)),
        },
    }
}

/// Decides directly whether `q = n1 p n2` for some `n1, n2` in N over the
/// algebraic closure. For each pair of Weyl elements, with
/// `A = w1 p w2` and `n1 = diag(a, 1/a) w1`, `n2 = w2 diag(b, 1/b)`, the
/// equation reads `[[x A00, y A01], [A10 / y, A11 / x]] = q` with
/// `x = ab`, `y = a/b`; any nonzero `x, y` come from some `a, b`.
pub fn label_oracle(p: &CellPoint2, q: &CellPoint2) -> bool {
    let e = weyl_lift(&Permutation::identity(2));
    let w = weyl_lift(&Permutation::transposition(2, 0, 1));
    let m = p.matrix();
    let (qa, qb) = (&q.alpha, &q.beta);
    for w1 in [&e, &w] {
        for w2 in [&e, &w] {
            let a = &(w1.matrix() * &m) * w2.matrix();
            let (a00, a01, a10, a11) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
            if a00.is_zero() || a11 * a00 != q.d() {
                continue;
            }
            let ok = if a01.is_zero() {
                qa.is_zero() && (a10.is_zero() == qb.is_zero())
            } else {
                let y = qa / a01;
                !y.is_zero() && &(a10 / &y) == qb
            };
            if ok {
                return true;
            }
        }
    }
    false
}

/// Label of `N g N`.
pub fn classify_coset(g: &SLMatrix) -> Result<OrbitLabel> {
    if g.n() != 2 {
        return Err(Error::InvalidDimension(g.n()));
    }
    let f = n_cell_factor(g);
    Ok(canonical_label(&CellPoint2::from_cell_point(&f.point)?))
}

/// Label of the pair of tori `(g T g^{-1}, h T h^{-1})` up to simultaneous
/// conjugation: `Origin` for `(T, T)`, `Coset(alpha)` for
/// `(g_alpha T g_alpha^{-1}, T)`.
pub fn tori_pair_label(g: &SLMatrix, h: &SLMatrix) -> Result<OrbitLabel> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: h.n(),
        });
    }
    classify_coset(&(&h.inverse() * g))
}

/// Representative of a T-double coset `T g T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum TRep {
    /// `g_alpha`, any `alpha`.
    GAlpha {
        alpha: Q,
    },
    /// `[[0, 1], [-1, 1]]`.
    WOne,
    /// `[[0, 1], [-1, 0]]`.
    W,
    /// `[[1, 1], [0, 1]]`.
    UOne,
    E,
}

impl TRep {
    pub fn matrix(&self) -> SLMatrix {
        match self {
            TRep::GAlpha { alpha } => g_alpha(alpha),
            TRep::WOne => SLMatrix::from_ints([[0, 1], [-1, 1]]).expect("det 1"),
            TRep::W => weyl_lift(&Permutation::transposition(2, 0, 1))
                .matrix()
                .clone(),
            TRep::UOne => SLMatrix::from_ints([[1, 1], [0, 1]]).expect("det 1"),
            TRep::E => SLMatrix::identity(2),
        }
    }
}

/// On the big cell, `T g T` meets the slice in one orbit of
/// `(alpha, beta) -> (s^2 alpha, s^{-2} beta)`, classified by `alpha beta`
/// and the vanishing pattern. Off it, `g = [[0, b], [c, d]]` and only
/// whether `d = 0` survives.
pub fn t_double_coset_rep(g: &SLMatrix) -> Result<TRep> {
    if g.n() != 2 {
        return Err(Error::InvalidDimension(g.n()));
    }
    let Ok(f) = gauss_decompose(g) else {
        return Ok(if g.get(1, 1).is_zero() {
            TRep::W
        } else {
            TRep::WOne
        });
    };
    // point of t^{-1} g: alpha = u01, beta = v10 t0 / t1; alpha beta = g01 g10 is T x T invariant
    let alpha = f.u.get(0, 1).clone();
    let beta = &(f.v.get(1, 0) * f.t.get(0)) / f.t.get(1);
    Ok(match (alpha.is_zero(), beta.is_zero()) {
        (true, true) => TRep::E,
        (false, true) => TRep::UOne,
        (true, false) => TRep::GAlpha { alpha: Q::zero() },
        (false, false) => TRep::GAlpha {
            alpha: alpha * beta,
        },
    })
}

/// G-orbit on `C_t x C_t'` for regular semisimple `t = diag(s, 1/s)`,
/// `t' = diag(r, 1/r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum SemisimpleOrbit {
    /// The orbit of `(g_alpha t g_alpha^{-1}, t')`.
    OAlpha { alpha: Q },
    /// Upper triangular with diagonal `t`, paired with `t'`.
    OUPlus,
    /// Lower triangular with diagonal `w t w^{-1}`, paired with `t'`.
    OVMinus,
    /// The orbit of `(t, t')`.
    OTPlus,
    /// The orbit of `(w t w^{-1}, t')`.
    OTMinus,
}

fn regular_parameter(t: &TorusElement) -> Result<Q> {
    if t.n() != 2 {
        return Err(Error::InvalidDimension(t.n()));
    }
    let s = t.get(0).clone();
    if s.is_one() || (-&s).is_one() {
        return Err(Error::CentralTorus);
    }
    Ok(s)
}

fn check_class(x: &SLMatrix, s: &Q, which: &str) -> Result<()> {
    if x.n() != 2 {
        return Err(Error::InvalidDimension(x.n()));
    }
    // det is 1 by construction; distinct eigenvalues make equal traces
    // sufficient for conjugacy.
    if x.trace() != s + &s.inv() {
        return Err(Error::NotSemisimplePair(format!(
            "{which} has trace {} but the class of diag({s}, {}) has trace {}",
            x.trace(),
            s.inv(),
            s + &s.inv()
        )));
    }
    Ok(())
}

/// Eigenvector of a 2x2 matrix for the eigenvalue `lambda`.
fn eigenvector(y: &SLMatrix, lambda: &Q) -> [Q; 2] {
    let (a, b, c, d) = (y.get(0, 0), y.get(0, 1), y.get(1, 0), y.get(1, 1));
    if !b.is_zero() {
        [b.clone(), lambda - a]
    } else if !c.is_zero() {
        [lambda - d, c.clone()]
    } else if a == lambda {
        [Q::one(), Q::zero()]
    } else {
        [Q::zero(), Q::one()]
    }
}

/// `(tr(XY) - sr - 1/(sr)) / (Delta_t Delta_t')`, `Delta_t = s - 1/s`.
fn alpha_invariant(x: &SLMatrix, y: &SLMatrix, s: &Q, r: &Q) -> Q {
    let sr = s * r;
    let num = (x * y).trace() - &sr - sr.inv();
    let den = (s - &s.inv()) * (r - &r.inv());
    num / den
}

/// Conjugates the pair so that `Y = diag(r, 1/r)` and reads the orbit off
/// the shape of `X`. Relative to the given ordering of `t` and `t'`.
pub fn ss_pair_classify(
    x: &SLMatrix,
    y: &SLMatrix,
    t: &TorusElement,
    tp: &TorusElement,
) -> Result<SemisimpleOrbit> {
    let s = regular_parameter(t)?;
    let r = regular_parameter(tp)?;
    check_class(x, &s, "X")?;
    check_class(y, &r, "Y")?;
    let [p00, p10] = eigenvector(y, &r);
    let [p01, p11] = eigenvector(y, &r.inv());
    let det = &p00 * &p11 - &p01 * &p10;
    let p = SLMatrix::from_rows(vec![vec![p00, &p01 / &det], vec![p10, &p11 / &det]])
        .expect("eigenvectors of distinct eigenvalues are independent");
    let xp = &(&p.inverse() * x) * &p;
    let upper = !xp.get(0, 1).is_zero();
    let lower = !xp.get(1, 0).is_zero();
    let first_is_s = *xp.get(0, 0) == s;
    Ok(match (upper, lower) {
        (true, true) => SemisimpleOrbit::OAlpha {
            alpha: alpha_invariant(x, y, &s, &r),
        },
        (true, false) if first_is_s => SemisimpleOrbit::OUPlus,
        (true, false) => SemisimpleOrbit::OAlpha { alpha: -Q::one() },
        (false, true) if first_is_s => SemisimpleOrbit::OAlpha { alpha: Q::zero() },
        (false, true) => SemisimpleOrbit::OVMinus,
        (false, false) if first_is_s => SemisimpleOrbit::OTPlus,
        (false, false) => SemisimpleOrbit::OTMinus,
    })
}

/// Fiber of `tr(XY)` containing an orbit and how the orbit sits in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adherence {
    pub fiber_value: Q,
    pub dimension: u8,
    pub closed: bool,
    /// `closure(O) \ O`.
    pub boundary: Vec<SemisimpleOrbit>,
}

/// Fibers of `tr(XY)` are single closed 3-dimensional orbits except at
/// `sr + 1/(sr)` and `r/s + s/r`, where two 3-dimensional orbits share the
/// closed 2-dimensional orbit in their closures.
pub fn adherence(o: &SemisimpleOrbit, t: &TorusElement, tp: &TorusElement) -> Result<Adherence> {
    let s = regular_parameter(t)?;
    let r = regular_parameter(tp)?;
    let sr = &s * &r;
    let l0 = &sr + &sr.inv();
    let lm1 = &r / &s + &s / &r;
    let open = |fiber_value: Q, boundary: SemisimpleOrbit| Adherence {
        fiber_value,
        dimension: 3,
        closed: false,
        boundary: vec![boundary],
    };
    let closed = |fiber_value: Q, dimension: u8| Adherence {
        fiber_value,
        dimension,
        closed: true,
        boundary: Vec::new(),
    };
    Ok(match o {
        SemisimpleOrbit::OAlpha { alpha } if alpha.is_zero() => open(l0, SemisimpleOrbit::OTPlus),
        SemisimpleOrbit::OAlpha { alpha } if (-alpha).is_one() => {
            open(lm1, SemisimpleOrbit::OTMinus)
        }
        SemisimpleOrbit::OAlpha { alpha } => {
            let delta = (&s - &s.inv()) * (&r - &r.inv());
            closed(l0 + alpha * &delta, 3)
        }
        SemisimpleOrbit::OUPlus => open(l0, SemisimpleOrbit::OTPlus),
        SemisimpleOrbit::OVMinus => open(lm1, SemisimpleOrbit::OTMinus),
        SemisimpleOrbit::OTPlus => closed(l0, 2),
        SemisimpleOrbit::OTMinus => closed(lm1, 2),
    })
}
