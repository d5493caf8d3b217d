//! Obstructions to embeddings and coincidences of manifolds and simplicial
//! complexes, computed exactly.
//!
//! The crate is organised in layers:
//!
//! * [`gf2`]: bit-packed GF(2) linear algebra, truncated polynomial rings and
//!   the small K-theory coefficient ring `Z ⊕ (Z/2^f)μ` with `μ² = −2μ`.
//! * [`charclass`]: Stiefel-Whitney class arithmetic, the invariant `D`,
//!   division witnesses and the Frick-Harrison admissibility test.
//! * [`simplicial`]: abstract simplicial complexes, barycentric points, cover
//!   families `R_1..R_r` and their hypothesis checker.
//! * [`deleted`]: combinatorial deleted products, their orbit complexes and
//!   the Z/2-index (largest nonvanishing power of the Euler class of the
//!   double cover).
//! * [`coincide`]: exact rational search for coincidences of piecewise-linear
//!   maps.
//! * [`lambda`]: λ-operations, K-theory Chern classes and γ-operations on
//!   sums of line bundles.
//!
//! With the default `parallel` feature, enumeration-heavy loops run on the
//! rayon thread pool. Results are identical with or without the feature and
//! for every thread count.

pub mod charclass;
pub mod coincide;
pub mod deleted;
mod error;
pub mod gf2;
pub mod lambda;
mod par;
pub mod simplicial;

pub use error::{Error, Result};
