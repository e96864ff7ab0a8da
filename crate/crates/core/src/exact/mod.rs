//! Exact arithmetic layer: rationals, quadratic field elements, and small
//! exact matrices. Everything downstream builds on these.

pub mod linsolve;
pub mod matrix;
pub mod quadext;
pub mod rational;

pub use linsolve::{solve_affine, AffineSolution};
pub use matrix::{ExactMatrix, ExactVector};
pub use quadext::{Disc, QuadExt};
pub use rational::{
    display_rational, factorial, format_rational, parse_rational, rat, rat_int, rational_to_f64,
    Rational,
};
