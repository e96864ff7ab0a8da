//! Exact symbolic-numeric toolkit for vector fields that are eigenfields of
//! the curl operator (or solenoidal Helmholtz solutions in 2-D) with finite
//! polyhedral or dihedral symmetry groups.
//!
//! The crate builds the fields exactly over the quadratic fields Q(sqrt(3))
//! and Q(sqrt(5)), proves their defining identities by exact computation in a
//! canonical trig-term algebra, and traces their orbits numerically.

pub mod calculus;
pub mod document;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod fields;
pub mod groups;
pub mod plot;
pub mod symfun;

pub use error::{Error, Result};
