//! Exact linear algebra in SL_n(Q(i)).
//!
//! Principal minors cut out the big Gauss cell `U^- T U` (all minors
//! nonzero) and the slice `U^- U` (all minors equal to 1). The Gauss
//! factorization `g = v t u` lives on the big cell; every element factors as
//! `n * p` with `n` monomial and `p` in `U^- U`, which realizes
//! `G = N U^- U N` with the right-hand factor normalized to the identity.
//!
//! Weyl group elements are lifted to N through [`weyl_lift`], a fixed sign
//! convention used by every module of the crate.

mod factor;
mod matrix;
mod torus;

pub use factor::{
    bruhat_decompose, delta_star, gauss_decompose, in_big_cell, in_cell_u, matrix_to_point,
    n_cell_factor, point_to_matrix, principal_minors, BruhatFactors, CellPoint, GaussFactors,
    NCellFactors,
};
pub use matrix::{determinant, SLMatrix};
pub use torus::{
    kappa, split_monomial_left, split_monomial_right, weyl_lift, KappaExponents, TorusElement,
    WeylLift,
};
