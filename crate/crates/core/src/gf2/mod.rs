//! Exact algebra over small commutative coefficient domains.
//!
//! [`BitMatrix`] and [`BitVec`] carry every cochain computation; the
//! polynomial types carry characteristic classes.

mod bitmatrix;
mod kring;
mod poly;

pub use bitmatrix::{BitMatrix, BitVec};
pub use kring::SpecialKRing;
pub use poly::{Coefficients, Generator, Monomial, PolyRing, TruncatedPoly};
