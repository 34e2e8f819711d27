//! The group generated by the maps `w_{w1,w2}` and torus conjugations on
//! the slice `U^- U`.
//!
//! For lifts `w1, w2` of Weyl group elements, `w_{w1,w2}(p)` multiplies the
//! matrix of `p` by `w1` on the left and `w2` on the right and, when the
//! product `M` lies in the big cell, strips its torus part: the result is the
//! point of `delta*(M)^{-1} M`. The torus conjugation `t_s` sends `p` to
//! `s p s^{-1}` and is defined everywhere.
//!
//! Elements of the form `t_s w_{w1,w2}` are closed under composition; they
//! are kept in [`NhatNormalForm`] with canonical lifts. [`connect`] turns a
//! relation `p2 = n1 p1 n2` with `n1, n2` monomial into such an element.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussq::GaussianRational;
use crate::paction::{GeneratorSet, PartialMap, Point};
use crate::perm::Permutation;
use crate::slmat::{
    gauss_decompose, matrix_to_point, point_to_matrix, split_monomial_left, split_monomial_right,
    weyl_lift, CellPoint, SLMatrix, TorusElement, WeylLift,
};

type Q = GaussianRational;

/// The partial map `p -> delta*(w1 p w2)^{-1} w1 p w2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WMap {
    pub w1: WeylLift,
    pub w2: WeylLift,
}

impl WMap {
    pub fn new(w1: WeylLift, w2: WeylLift) -> Result<Self> {
        if w1.n() != w2.n() {
            return Err(Error::DimensionMismatch {
                expected: w1.n(),
                got: w2.n(),
            });
        }
        Ok(WMap { w1, w2 })
    }

    /// The map built from the canonical lifts of two permutations.
    pub fn from_perms(p1: &Permutation, p2: &Permutation) -> Result<Self> {
        Self::new(weyl_lift(p1), weyl_lift(p2))
    }

    pub fn identity(n: usize) -> Self {
        WMap {
            w1: WeylLift::identity(n),
            w2: WeylLift::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.w1.n()
    }

    pub fn in_domain(&self, p: &CellPoint) -> bool {
        wmap_eval(self, p).is_some()
    }
}

/// Torus part stripped from the left of the product; `None` off the big
/// cell.
pub fn wmap_eval(map: &WMap, p: &CellPoint) -> Option<CellPoint> {
    let m = map.w2.mul_right(&map.w1.mul_left(&point_to_matrix(p)));
    strip_torus(&m)
}

/// The point of `t^{-1} g` for `g = v t u`, i.e. of `(t^{-1} v t) u`.
fn strip_torus(g: &SLMatrix) -> Option<CellPoint> {
    let f = gauss_decompose(g).ok()?;
    let n = g.n();
    let t = f.t.diag();
    let mut lower = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for j in 0..i {
            lower.push(&(f.v.get(i, j) * &t[j]) / &t[i]);
        }
    }
    let mut upper = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            upper.push(f.u.get(i, j).clone());
        }
    }
    Some(CellPoint { n, lower, upper })
}

/// `t_s(p) = s p s^{-1}`: entry `(i, j)` scales by `s_i / s_j`.
pub fn ts_eval(s: &TorusElement, p: &CellPoint) -> CellPoint {
    let n = p.n;
    let d = s.diag();
    let scale = |(i, j): (usize, usize), x: &Q| &(x * &d[i]) / &d[j];
    let lower = (1..n)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .zip(&p.lower)
        .map(|(ij, x)| scale(ij, x))
        .collect();
    let upper = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .zip(&p.upper)
        .map(|(ij, x)| scale(ij, x))
        .collect();
    CellPoint { n, lower, upper }
}

/// The exact inverse map: lifts replaced by their inverse matrices.
pub fn wmap_inverse(map: &WMap) -> WMap {
    WMap {
        w1: map.w1.inverse(),
        w2: map.w2.inverse(),
    }
}

/// The torus conjugation `t_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusConj {
    pub s: TorusElement,
}

impl TorusConj {
    /// Same action on `U^- U`: `s` and `s'` differ by a scalar.
    pub fn same_map(&self, other: &TorusConj) -> bool {
        self.s.same_conjugation(&other.s)
    }
}

/// `t_s o w_{w1,w2}` with `w1`, `w2` canonical lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NhatNormalForm {
    s: TorusElement,
    w1: WeylLift,
    w2: WeylLift,
}

#[derive(Serialize, Deserialize)]
struct NormalFormWire {
    s: Vec<Q>,
    w1: Permutation,
    w2: Permutation,
}

impl Serialize for NhatNormalForm {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        NormalFormWire {
            s: self.s.diag().to_vec(),
            w1: self.w1.perm().clone(),
            w2: self.w2.perm().clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for NhatNormalForm {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = NormalFormWire::deserialize(de)?;
        let s = TorusElement::new(wire.s).map_err(serde::de::Error::custom)?;
        NhatNormalForm::new(s, weyl_lift(&wire.w1), weyl_lift(&wire.w2))
            .map_err(serde::de::Error::custom)
    }
}

impl NhatNormalForm {
    /// `t_s o w_{w1,w2}` for arbitrary lifts. Since
    /// `w_{d1 w1, w2 d2} = t_{d2^{-1}} w_{w1,w2}` for torus elements `d1, d2`,
    /// the lifts are replaced by canonical ones and `s` absorbs `d2^{-1}`.
    pub fn new(s: TorusElement, w1: WeylLift, w2: WeylLift) -> Result<Self> {
        let n = s.n();
        for m in [&w1, &w2] {
            if m.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: m.n(),
                });
            }
        }
        let (_, c1) = split_monomial_left(w1.matrix())?;
        let (c2, d2) = split_monomial_right(w2.matrix())?;
        Ok(NhatNormalForm {
            s: s.mul(&d2.inverse()),
            w1: c1,
            w2: c2,
        })
    }

    pub fn identity(n: usize) -> Self {
        NhatNormalForm {
            s: TorusElement::identity(n),
            w1: WeylLift::identity(n),
            w2: WeylLift::identity(n),
        }
    }

    pub fn from_wmap(map: &WMap) -> Result<Self> {
        Self::new(
            TorusElement::identity(map.n()),
            map.w1.clone(),
            map.w2.clone(),
        )
    }

    pub fn from_torus(s: TorusElement) -> Self {
        let n = s.n();
        NhatNormalForm {
            s,
            w1: WeylLift::identity(n),
            w2: WeylLift::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn s(&self) -> &TorusElement {
        &self.s
    }

    pub fn w1(&self) -> &WeylLift {
        &self.w1
    }

    pub fn w2(&self) -> &WeylLift {
        &self.w2
    }

    pub fn wmap(&self) -> WMap {
        WMap {
            w1: self.w1.clone(),
            w2: self.w2.clone(),
        }
    }

    pub fn eval(&self, p: &CellPoint) -> Option<CellPoint> {
        wmap_eval(&self.wmap(), p).map(|q| ts_eval(&self.s, &q))
    }

    pub fn is_identity(&self) -> bool {
        self.w1.perm().is_identity()
            && self.w2.perm().is_identity()
            && self.s.same_conjugation(&TorusElement::identity(self.n()))
    }

    /// Equal as maps on `U^- U`: same permutations and torus parts acting
    /// identically.
    pub fn same_map(&self, other: &NhatNormalForm) -> bool {
        self.w1.perm() == other.w1.perm()
            && self.w2.perm() == other.w2.perm()
            && self.s.same_conjugation(&other.s)
    }

    /// `(t_s w_{a1,a2})^{-1} = t_{a2 s^{-1} a2^{-1}} w_{a1^{-1}, a2^{-1}}`.
    pub fn inverse(&self) -> NhatNormalForm {
        let s = self.s.inverse().permuted(self.w2.perm());
        NhatNormalForm::new(s, self.w1.inverse(), self.w2.inverse())
            .expect("lift inverses are monomial")
    }
}

/// `a o b`. Torus parts move left by
/// `w_{a1,a2} o t_s = t_{a2^{-1} s a2} o w_{a1,a2}`, and the lift products
/// `a1 b1 = t1 w1'`, `b2 a2 = w2' t2` give `w_{a1,a2} w_{b1,b2} = t_{t2^{-1}}
/// w_{w1',w2'}`.
pub fn compose_normal_form(a: &NhatNormalForm, b: &NhatNormalForm) -> NhatNormalForm {
    let pushed = b.s.permuted(&a.w2.perm().inverse());
    let left = a.w1.matrix() * b.w1.matrix();
    let right = b.w2.matrix() * a.w2.matrix();
    let (_, w1) = split_monomial_left(&left).expect("product of lifts is monomial");
    let (w2, t2) = split_monomial_right(&right).expect("product of lifts is monomial");
    NhatNormalForm {
        s: a.s.mul(&pushed).mul(&t2.inverse()),
        w1,
        w2,
    }
}

/// The torus element `s'` with `w^{-1} o t_s o w = t_{s'}`, namely
/// `w2 s w2^{-1}`.
pub fn conjugate_torus_across(map: &WMap, s: &TorusElement) -> TorusElement {
    s.permuted(map.w2.perm())
}

/// Witness of `p2 = n1 p1 n2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connection {
    pub form: NhatNormalForm,
    pub u2: CellPoint,
}

/// For monomial `n1 = t1 w1` and `n2 = w2 t2` with `n1 p1 n2` in `U^- U`,
/// the element `t_{t2^{-1}} w_{w1,w2}` maps `p1` to the point of
/// `n1 p1 n2`. The torus part is forced: `t p s` lies in `U^- U` only when
/// `s = t^{-1}`.
pub fn connect(u1: &CellPoint, n1: &SLMatrix, n2: &SLMatrix) -> Result<Connection> {
    let n = u1.n;
    for m in [n1, n2] {
        if m.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.n(),
            });
        }
    }
    let (_, w1) = split_monomial_left(n1)?;
    let (w2, t2) = split_monomial_right(n2)?;
    let g = &(n1 * &point_to_matrix(u1)) * n2;
    let u2 = matrix_to_point(&g).map_err(|_| Error::NotInCell)?;
    let form = NhatNormalForm {
        s: t2.inverse(),
        w1,
        w2,
    };
    debug_assert_eq!(form.eval(u1).as_ref(), Some(&u2));
    if form.eval(u1).as_ref() != Some(&u2) {
        return Err(Error::NotInCell);
    }
    Ok(Connection { form, u2 })
}

fn on_coords(n: usize, x: &[Q], f: impl FnOnce(&CellPoint) -> Option<CellPoint>) -> Option<Point> {
    let p = CellPoint::from_coords(n, x).ok()?;
    f(&p).map(|q| q.coords())
}

impl PartialMap for WMap {
    fn arity(&self) -> usize {
        self.n() * (self.n() - 1)
    }
    fn eval(&self, x: &[Q]) -> Option<Point> {
        on_coords(self.n(), x, |p| wmap_eval(self, p))
    }
}

impl PartialMap for TorusConj {
    fn arity(&self) -> usize {
        self.s.n() * (self.s.n() - 1)
    }
    fn eval(&self, x: &[Q]) -> Option<Point> {
        on_coords(self.s.n(), x, |p| Some(ts_eval(&self.s, p)))
    }
}

impl PartialMap for NhatNormalForm {
    fn arity(&self) -> usize {
        self.n() * (self.n() - 1)
    }
    fn eval(&self, x: &[Q]) -> Option<Point> {
        on_coords(self.n(), x, |p| NhatNormalForm::eval(self, p))
    }
}

/// A torus element used as a sample conjugation: `diag(2, 1, .., 1, 1/2)`.
pub fn sample_torus(n: usize) -> TorusElement {
    let mut diag = vec![Q::from_int(1); n];
    diag[0] = Q::from_int(2);
    diag[n - 1] = Q::from_frac(1, 2);
    TorusElement::new(diag).expect("determinant 1")
}

/// Generators for SL_2 on coordinates `(alpha, beta)`: the involutions
/// `wl = w_{w,e}`, `wr = w_{e,w}`, `wd = w_{w,w}` and the conjugation
/// `t = t_{diag(2, 1/2)}` with its inverse.
pub fn sl2_generators() -> GeneratorSet {
    let w = weyl_lift(&Permutation::transposition(2, 0, 1));
    let e = WeylLift::identity(2);
    let mut set = GeneratorSet::new();
    set.add_involution(
        "wl",
        Arc::new(WMap {
            w1: w.clone(),
            w2: e.clone(),
        }),
    );
    set.add_involution(
        "wr",
        Arc::new(WMap {
            w1: e,
            w2: w.clone(),
        }),
    );
    set.add_involution(
        "wd",
        Arc::new(WMap {
            w1: w.clone(),
            w2: w,
        }),
    );
    let s = sample_torus(2);
    set.add_pair(
        "t",
        Arc::new(TorusConj { s: s.clone() }),
        Arc::new(TorusConj { s: s.inverse() }),
    );
    set
}

/// Generators for SL_n on coordinates `upper ++ lower`: for each simple
/// transposition `s_k`, the maps `l{k} = w_{s_k,e}` and `r{k} = w_{e,s_k}`
/// paired with their exact inverses, and the conjugation `t` of
/// [`sample_torus`].
pub fn nhat_generators(n: usize) -> GeneratorSet {
    let mut set = GeneratorSet::new();
    let e = WeylLift::identity(n);
    for k in 0..n - 1 {
        let s = weyl_lift(&Permutation::transposition(n, k, k + 1));
        for (name, map) in [
            (
                format!("l{}", k + 1),
                WMap {
                    w1: s.clone(),
                    w2: e.clone(),
                },
            ),
            (
                format!("r{}", k + 1),
                WMap {
                    w1: e.clone(),
                    w2: s.clone(),
                },
            ),
        ] {
            let inv = wmap_inverse(&map);
            set.add_pair(&name, Arc::new(map), Arc::new(inv));
        }
    }
    let s = sample_torus(n);
    set.add_pair(
        "t",
        Arc::new(TorusConj { s: s.clone() }),
        Arc::new(TorusConj { s: s.inverse() }),
    );
    set
}
