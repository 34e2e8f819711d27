//! Seeded random generators for exact test data.
//!
//! Everything is built from small numerators and denominators, and SL_n
//! elements are built as products of unitriangular, torus and Weyl-lift
//! factors so the determinant is exactly 1.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gaussq::{kflat_rep, GaussianRational, Rational};
use crate::perm::Permutation;
use crate::slmat::{weyl_lift, CellPoint, SLMatrix, TorusElement, WeylLift};

type Q = GaussianRational;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Numerators are drawn from `-bound..=bound`.
    pub bound: i64,
    /// Denominators are drawn from `1..=max_den`.
    pub max_den: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: 5,
            max_den: 3,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-self.bound..=self.bound);
        let den = self.rng.gen_range(1..=self.max_den);
        Rational::new(num.into(), den.into())
    }

    /// A Gaussian rational; about a third of draws are real.
    pub fn scalar(&mut self) -> Q {
        let re = self.rational();
        let im = if self.rng.gen_ratio(1, 3) {
            Rational::zero()
        } else {
            self.rational()
        };
        Q::new(re, im)
    }

    pub fn nonzero_scalar(&mut self) -> Q {
        loop {
            let x = self.scalar();
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Element of the fundamental domain of `a -> -1 - a`.
    pub fn k_flat(&mut self) -> Q {
        kflat_rep(&self.scalar())
    }

    pub fn torus(&mut self, n: usize) -> TorusElement {
        let mut diag: Vec<Q> = (0..n - 1).map(|_| self.nonzero_scalar()).collect();
        let prod: Q = diag.iter().cloned().product();
        diag.push(prod.inv());
        TorusElement::new(diag).expect("product is 1 by construction")
    }

    pub fn permutation(&mut self, n: usize) -> Permutation {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut self.rng);
        Permutation::from_images(images).expect("shuffle is a bijection")
    }

    pub fn weyl_lift(&mut self, n: usize) -> WeylLift {
        let p = self.permutation(n);
        weyl_lift(&p)
    }

    fn unitriangular(&mut self, n: usize, upper: bool) -> SLMatrix {
        let mut rows = vec![vec![Q::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if i == j {
                    *x = Q::from_int(1);
                } else if (i < j) == upper {
                    *x = self.scalar();
                }
            }
        }
        SLMatrix::from_rows(rows).expect("unitriangular")
    }

    pub fn upper_unitriangular(&mut self, n: usize) -> SLMatrix {
        self.unitriangular(n, true)
    }

    pub fn lower_unitriangular(&mut self, n: usize) -> SLMatrix {
        self.unitriangular(n, false)
    }

    pub fn cell_point(&mut self, n: usize) -> CellPoint {
        let m = n * (n - 1) / 2;
        let lower = (0..m).map(|_| self.scalar()).collect();
        let upper = (0..m).map(|_| self.scalar()).collect();
        CellPoint::new(n, lower, upper).expect("sizes match")
    }

    /// Random element of N: `t * w`.
    pub fn monomial(&mut self, n: usize) -> SLMatrix {
        let w = self.weyl_lift(n);
        self.torus(n).left_mul(w.matrix())
    }

    /// Random element of the big cell `v * t * u`.
    pub fn big_cell(&mut self, n: usize) -> SLMatrix {
        let v = self.lower_unitriangular(n);
        let t = self.torus(n);
        let u = self.upper_unitriangular(n);
        &t.right_mul(&v) * &u
    }

    /// Random SL_n element `v * t * u * w * u'`; the Weyl factor is the
    /// identity half of the time so every Bruhat cell is reachable while
    /// most draws stay generic.
    pub fn sl(&mut self, n: usize) -> SLMatrix {
        let g = self.big_cell(n);
        let w = if self.rng.gen_bool(0.5) {
            WeylLift::identity(n)
        } else {
            self.weyl_lift(n)
        };
        let u = self.upper_unitriangular(n);
        &(&g * w.matrix()) * &u
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::new(DEFAULT_SEED)
    }
}
