//! Exact toolkit for lattice polytopes, rational cones and lattice points in
//! ellipsoids: Hilbert bases, normality tests, unimodular covers and the
//! non-normal ellipsoidal polytopes built from the circumscribed ball of the
//! unit cube.

pub mod cones;
pub mod cover;
pub mod ellipsoid;
pub mod error;
pub mod exact;
pub mod json;
pub mod normality;
pub mod polytope;

pub use error::{Error, Result};
