//! Double cosets of the torus normalizer in SL_n over the Gaussian rationals.
//!
//! The crate computes exactly in Q(i):
//!
//! - [`gaussq`]: Gaussian-rational scalars, their text format, and the
//!   involution `a -> -1 - a` with its fundamental domain.
//! - [`slmat`]: SL_n matrices, principal minors, Gauss and Bruhat
//!   factorizations, Weyl lifts and the factorization `g = n * p` with `p`
//!   in `U^- U`.
//! - [`paction`]: partial actions of groups of birational maps, word
//!   evaluation and axiom checking.
//! - [`nhat`]: the partial maps `w_{w1,w2}` and torus conjugations acting on
//!   `U^- U`, their normal forms, and the constructive link between
//!   N-double cosets and orbits of these maps.
//! - [`sl2class`]: the complete SL_2 picture: closed-form generators,
//!   strata, canonical double-coset labels, pairs of tori, T-double cosets
//!   and orbits of pairs of semisimple elements.
//! - [`cli`]: the JSON command-line front end.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod error;
pub mod gaussq;
pub mod nhat;
pub mod paction;
pub mod perm;
pub mod sample;
pub mod sl2class;
pub mod slmat;

pub use error::{Error, Result};
pub use gaussq::GaussianRational;
pub use perm::Permutation;
pub use slmat::{CellPoint, SLMatrix, TorusElement, WeylLift};
