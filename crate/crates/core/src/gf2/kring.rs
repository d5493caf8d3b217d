use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Element `a + b·μ` of `Z ⊕ (Z/2^f)·μ` with `μ² = −2μ`.
///
/// This is `Z[H]/(H² − 1, 2^f (H − 1))` written in the basis `1, μ = H − 1`.
/// The μ-part is kept as its least nonnegative residue mod `2^f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpecialKRing {
    f: u32,
    free: BigInt,
    mu: BigInt,
}

impl SpecialKRing {
    pub fn new(f: u32, free: impl Into<BigInt>, mu: impl Into<BigInt>) -> Self {
        assert!(f >= 1, "torsion exponent must be positive");
        let modulus = BigInt::one() << f;
        Self {
            f,
            free: free.into(),
            mu: mu.into().mod_floor(&modulus),
        }
    }

    pub fn zero(f: u32) -> Self {
        Self::new(f, 0, 0)
    }

    pub fn one(f: u32) -> Self {
        Self::new(f, 1, 0)
    }

    pub fn integer(f: u32, n: impl Into<BigInt>) -> Self {
        Self::new(f, n, 0)
    }

    /// `μ = H − 1`.
    pub fn mu_class(f: u32) -> Self {
        Self::new(f, 0, 1)
    }

    /// The Hopf line class `H = 1 + μ`.
    pub fn hopf(f: u32) -> Self {
        Self::new(f, 1, 1)
    }

    pub fn torsion_exponent(&self) -> u32 {
        self.f
    }

    pub fn free_part(&self) -> &BigInt {
        &self.free
    }

    /// μ-coefficient as a residue in `[0, 2^f)`.
    pub fn mu_part(&self) -> &BigInt {
        &self.mu
    }

    pub fn is_zero(&self) -> bool {
        self.free.is_zero() && self.mu.is_zero()
    }

    fn same_f(&self, other: &Self) {
        assert_eq!(self.f, other.f, "torsion exponents differ");
    }
}

impl Add for &SpecialKRing {
    type Output = SpecialKRing;
    fn add(self, rhs: &SpecialKRing) -> SpecialKRing {
        self.same_f(rhs);
        SpecialKRing::new(self.f, &self.free + &rhs.free, &self.mu + &rhs.mu)
    }
}

impl Sub for &SpecialKRing {
    type Output = SpecialKRing;
    fn sub(self, rhs: &SpecialKRing) -> SpecialKRing {
        self.same_f(rhs);
        SpecialKRing::new(self.f, &self.free - &rhs.free, &self.mu - &rhs.mu)
    }
}

impl Neg for &SpecialKRing {
    type Output = SpecialKRing;
    fn neg(self) -> SpecialKRing {
        SpecialKRing::new(self.f, -&self.free, -&self.mu)
    }
}

impl Mul for &SpecialKRing {
    type Output = SpecialKRing;
    /// `(a + bμ)(c + dμ) = ac + (ad + bc − 2bd)μ`.
    fn mul(self, rhs: &SpecialKRing) -> SpecialKRing {
        self.same_f(rhs);
        let (a, b, c, d) = (&self.free, &self.mu, &rhs.free, &rhs.mu);
        let mu = a * d + b * c - BigInt::from(2) * b * d;
        SpecialKRing::new(self.f, a * c, mu)
    }
}

impl fmt::Display for SpecialKRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}μ (mod 2^{})", self.free, self.mu, self.f)
    }
}

impl fmt::Debug for SpecialKRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpecialKRing({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_squared_is_minus_two_mu() {
        for f in 1..6 {
            let mu = SpecialKRing::mu_class(f);
            let two_mu = &mu + &mu;
            assert!((&(&mu * &mu) + &two_mu).is_zero());
        }
    }

    #[test]
    fn hopf_squares_to_one() {
        let h = SpecialKRing::hopf(4);
        assert_eq!(&h * &h, SpecialKRing::one(4));
    }

    #[test]
    fn mu_part_reduced() {
        let x = SpecialKRing::new(3, 7, -1);
        assert_eq!(x.mu_part(), &BigInt::from(7));
        assert!(SpecialKRing::new(2, 0, 4).is_zero());
    }
}
