//! Combinatorial deleted products and the Z/2-index.
//!
//! The deleted product of `K` is the regular cell complex whose cells are
//! products `σ × τ` of disjoint simplices, with the swap `(σ, τ) ↦ (τ, σ)`
//! as a free involution. Its orbit complex `Y` carries the line bundle `λ`
//! of the double cover, and cup product with `e(λ) = w_1` is realised on
//! cochains by the connecting homomorphism of the short exact sequence
//! `0 → C*(Y) → C*(X) → C*(Y) → 0` over GF(2). The index is the largest `m`
//! with `e(λ)^m ≠ 0`.

mod product;
mod quotient;

pub use product::{deleted_product, deleted_product_truncated, Cell, DeletedMode, FreeInvolutionComplex, CELL_PAIR_LIMIT};
pub use quotient::{
    euler_power, euler_power_nonzero, smith_connecting, smith_connecting_with_section, z2_index, Cochain,
    IndexReport, QuotientComplex,
};
