//! Naive big-integer references for parity and γ-coefficients.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `binom(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// μ-coefficient of `t^i` in `(1 + μt)^{−(d+1)}` over `Z ⊕ Zμ`, `μ² = −2μ`,
/// before reduction: `binom(−(d+1), i)·(−2)^{i−1}` for `i ≥ 1`.
pub fn gamma_mu_coefficient(d: u64, i: u64) -> BigInt {
    assert!(i >= 1);
    let sign = if i.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let negative_binomial = sign * binomial(d + i, i);
    negative_binomial * BigInt::from(-2).pow(u32::try_from(i - 1).unwrap())
}

/// `d + max{i : γ^i ≠ 0 mod 2^f}` by scanning well past the point where
/// `2^{i−1}` kills every coefficient.
pub fn atiyah_bound(d: u64, f: u32) -> u64 {
    let modulus = BigInt::one() << f;
    let mut top = 0;
    for i in 1..=(u64::from(f) + 8) {
        if !gamma_mu_coefficient(d, i).mod_floor(&modulus).is_zero() {
            top = i;
        }
    }
    d + top
}
