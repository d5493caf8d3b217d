use std::fmt;

use super::CoeffRing;
use crate::{Error, Result};

/// Name of the indeterminate, kept only for display and sanity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Indeterminate {
    /// λ-series variable.
    Lambda,
    /// γ-series variable.
    Gamma,
    /// Equivariant class `z`.
    Z,
    /// `s = 1 − z`.
    S,
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Indeterminate::Lambda => "t",
            Indeterminate::Gamma => "T",
            Indeterminate::Z => "z",
            Indeterminate::S => "s",
        })
    }
}

/// Power series truncated after degree `order`.
#[derive(Clone, PartialEq)]
pub struct FormalSeries<R> {
    var: Indeterminate,
    coeffs: Vec<R>,
}

impl<R: CoeffRing> FormalSeries<R> {
    /// Series with the given leading coefficients, padded with zeros.
    pub fn new(var: Indeterminate, order: usize, template: &R, coeffs: Vec<R>) -> Self {
        let mut coeffs = coeffs;
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, template.zero_like());
        Self { var, coeffs }
    }

    pub fn constant(var: Indeterminate, order: usize, c: R) -> Self {
        let zero = c.zero_like();
        Self::new(var, order, &zero, vec![c])
    }

    pub fn one(var: Indeterminate, order: usize, template: &R) -> Self {
        Self::constant(var, order, template.one_like())
    }

    /// `a + b·x`.
    pub fn linear(var: Indeterminate, order: usize, a: R, b: R) -> Self {
        let zero = a.zero_like();
        Self::new(var, order, &zero, vec![a, b])
    }

    pub fn var(&self) -> Indeterminate {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.var, other.var, "series in different variables");
        assert_eq!(self.order(), other.order(), "series truncated differently");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            var: self.var,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len();
        let mut out = vec![self.coeffs[0].zero_like(); n];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self { var: self.var, coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    /// Inverse of a series with constant term 1.
    pub fn invert(&self) -> Result<Self> {
        let one = self.coeffs[0].one_like();
        if self.coeffs[0] != one {
            return Err(Error::NonUnit);
        }
        let mut inv: Vec<R> = Vec::with_capacity(self.coeffs.len());
        inv.push(one);
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=n {
                acc = acc.plus(&self.coeffs[k].times(&inv[n - k]));
            }
            inv.push(acc.negated());
        }
        Ok(Self { var: self.var, coeffs: inv })
    }

    /// Integer power; negative exponents need constant term 1.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::one(self.var, self.order(), &self.coeffs[0]);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `Σ a_i g^i` for a series `g` with zero constant term, in `g`'s variable.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(g.coeffs[0].is_zero(), "inner series must have zero constant term");
        let n = g.order();
        let mut out = Self::new(g.var, n, &g.coeffs[0], Vec::new());
        let mut power = Self::one(g.var, n, &g.coeffs[0]);
        for a in self.coeffs.iter().take(n + 1) {
            out = out.add(&power.scale(a));
            power = power.mul(g);
        }
        out
    }

    /// Polynomial value at `x`, ignoring truncation.
    pub fn evaluate(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc.times(x).plus(c))
    }
}

impl<R: CoeffRing> fmt::Debug for FormalSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ[{}]", self.var)?;
        f.debug_list().entries(&self.coeffs).finish()
    }
}
