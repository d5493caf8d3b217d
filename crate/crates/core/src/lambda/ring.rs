use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gf2::SpecialKRing;

/// Commutative ring with enough structure for λ-calculus on line classes.
///
/// Elements carry their own presentation, so constants are built from an
/// existing element.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn integer_like(&self, n: i64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn zero_like(&self) -> Self {
        self.integer_like(0)
    }

    fn one_like(&self) -> Self {
        self.integer_like(1)
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

impl CoeffRing for SpecialKRing {
    fn integer_like(&self, n: i64) -> Self {
        SpecialKRing::integer(self.torsion_exponent(), n)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        SpecialKRing::is_zero(self)
    }
}

/// `Z[L_1, …, L_n]`, optionally with `L_j² = 1` for chosen generators.
///
/// Serves as a universal home for sums of independent line classes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinePoly {
    involutive: Arc<Vec<bool>>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl LinePoly {
    /// Integer `n` in the ring with the given generators; `involutive[j]`
    /// imposes `L_j² = 1`.
    pub fn integer(involutive: &Arc<Vec<bool>>, n: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let n = n.into();
        if !n.is_zero() {
            terms.insert(vec![0; involutive.len()], n);
        }
        Self {
            involutive: Arc::clone(involutive),
            terms,
        }
    }

    pub fn generator(involutive: &Arc<Vec<bool>>, j: usize) -> Self {
        assert!(j < involutive.len(), "generator index out of range");
        let mut e = vec![0; involutive.len()];
        e[j] = 1;
        Self {
            involutive: Arc::clone(involutive),
            terms: BTreeMap::from([(e, BigInt::one())]),
        }
    }

    pub fn generators(&self) -> usize {
        self.involutive.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn insert(&mut self, mut e: Vec<u32>, c: BigInt) {
        for (x, &inv) in e.iter_mut().zip(self.involutive.iter()) {
            if inv {
                *x %= 2;
            }
        }
        let sum = self.terms.remove(&e).unwrap_or_default() + c;
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    fn empty(&self) -> Self {
        Self {
            involutive: Arc::clone(&self.involutive),
            terms: BTreeMap::new(),
        }
    }
}

impl CoeffRing for LinePoly {
    fn integer_like(&self, n: i64) -> Self {
        Self::integer(&self.involutive, n)
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.involutive, other.involutive, "line rings differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.involutive, other.involutive, "line rings differ");
        let mut out = self.empty();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.insert(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }

    fn negated(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (j, &p) in e.iter().enumerate().filter(|(_, p)| **p > 0) {
                match p {
                    1 => write!(f, "*L{j}")?,
                    _ => write!(f, "*L{j}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinePoly({self})")
    }
}
