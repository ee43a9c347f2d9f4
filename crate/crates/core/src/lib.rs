//! Exact two-variable Nevanlinna representing functions of vertex-colored
//! graphs.
//!
//! A simple graph whose vertices are colored `z` or `w` has the colored
//! adjacency matrix `A - zY - w(I - Y)`. The `(k, k)` entry of its inverse is
//! a rational inner Pick function of `(z, w)`. This crate computes those
//! functions exactly, implements the star, comb and retraction constructions
//! together with the identities they satisfy, and reads boundary contact
//! order at `(inf, 0)` off Laurent expansions of level curves.

pub mod cli;
pub mod error;
pub mod graph;
pub mod laurent;
pub mod nevanlinna;
pub mod numcheck;
pub mod random;
pub mod ratfun;
pub mod sticks;
pub mod symlinalg;

pub use error::{Error, Result};
pub use ratfun::{parse_ratfun, poly_gcd, Monomial, Polynomial, RatFun, Var};
pub use symlinalg::{determinant, inverse_entry, inverse_entry_at, schur_reduce, SymMatrix};
pub use graph::{comb_product_z, retract, star_product, Color, ColoredGraph, Permutation};
pub use laurent::{
    contact_order, expand_at_infinity, level_curve, verify_contact_theorem, walk_generating_series,
    ContactReport, LaurentSeries, LevelCurve,
};
pub use nevanlinna::{reciprocal_transform, representing_function, root_function, IdentityReport};
pub use numcheck::{eval_complex, pick_property_sample, resolvent_oracle, SampleReport};
pub use sticks::{stick_determinants, stick_matrix, StickFamily};
