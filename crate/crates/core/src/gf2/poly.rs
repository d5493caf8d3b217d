use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Coefficient domain of a [`PolyRing`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Gf2,
    Integer,
    /// Integers modulo `2^f`, stored as the least nonnegative residue.
    ModPow2(u32),
}

impl Coefficients {
    pub fn reduce(self, c: BigInt) -> BigInt {
        match self {
            Coefficients::Gf2 => c.mod_floor(&BigInt::from(2)),
            Coefficients::Integer => c,
            Coefficients::ModPow2(f) => c.mod_floor(&(BigInt::one() << f)),
        }
    }

    /// Multiplicative inverse of a reduced coefficient, if it is a unit.
    pub fn inverse(self, c: &BigInt) -> Option<BigInt> {
        match self {
            Coefficients::Gf2 => c.is_one().then(BigInt::one),
            Coefficients::Integer => (c.abs().is_one()).then(|| c.clone()),
            Coefficients::ModPow2(f) => {
                if c.is_even() {
                    return None;
                }
                let modulus = BigInt::one() << f;
                let egcd = c.extended_gcd(&modulus);
                Some(egcd.x.mod_floor(&modulus))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// `Some(n)` imposes `x^n = 0`; `None` leaves the generator free.
    pub truncation: Option<u32>,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32, truncation: Option<u32>) -> Self {
        Self {
            name: name.into(),
            degree,
            truncation,
        }
    }
}

/// A presented ring `C[x_1, …, x_n] / (x_i^{n_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub coefficients: Coefficients,
    pub generators: Vec<Generator>,
}

impl PolyRing {
    pub fn new(coefficients: Coefficients, generators: Vec<Generator>) -> Arc<Self> {
        Arc::new(Self {
            coefficients,
            generators,
        })
    }

    /// `C[x]/(x^truncation)` with `x` in the given degree.
    pub fn single(
        coefficients: Coefficients,
        name: &str,
        degree: u32,
        truncation: u32,
    ) -> Arc<Self> {
        Self::new(
            coefficients,
            vec![Generator::new(name, degree, Some(truncation))],
        )
    }

    /// The same ring with one more generator appended.
    pub fn extend(self: &Arc<Self>, generator: Generator) -> Arc<Self> {
        let mut generators = self.generators.clone();
        generators.push(generator);
        Self::new(self.coefficients, generators)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Largest degree carried by a nonzero monomial, or `None` when some
    /// generator is free.
    pub fn top_degree(&self) -> Option<u32> {
        self.generators
            .iter()
            .map(|g| g.truncation.map(|n| n.saturating_sub(1) * g.degree))
            .sum()
    }

    fn survives(&self, m: &Monomial) -> bool {
        m.0.iter()
            .zip(&self.generators)
            .all(|(&e, g)| g.truncation.is_none_or(|n| e < n))
    }
}

/// Exponent vector, one entry per generator. Ordered lexicographically by
/// generator, then exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Sparse element of a [`PolyRing`]. Zero coefficients and monomials killed
/// by a truncation are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(Monomial::unit(ring.generators.len()), c.into());
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    /// `c · x^exponents`.
    pub fn monomial(ring: &Arc<PolyRing>, exponents: Vec<u32>, c: impl Into<BigInt>) -> Result<Self> {
        if exponents.len() != ring.generators.len() {
            return Err(Error::ShapeMismatch {
                expected: ring.generators.len(),
                found: exponents.len(),
            });
        }
        let mut p = Self::zero(ring);
        p.add_term(Monomial(exponents), c.into());
        Ok(p)
    }

    /// The generator at `index`, to the first power.
    pub fn generator(ring: &Arc<PolyRing>, index: usize) -> Self {
        let mut e = vec![0; ring.generators.len()];
        e[index] = 1;
        let mut p = Self::zero(ring);
        p.add_term(Monomial(e), BigInt::one());
        p
    }

    /// `Σ coeffs[i] · x^i` in a single-generator ring.
    pub fn from_coefficients<C: Into<BigInt> + Clone>(ring: &Arc<PolyRing>, coeffs: &[C]) -> Result<Self> {
        if ring.generators.len() != 1 {
            return Err(Error::PresentationMismatch);
        }
        let mut p = Self::zero(ring);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial(vec![i as u32]), c.clone().into());
        }
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::unit(self.ring.generators.len()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Dense coefficient list `[c_0, c_1, …, c_len-1]` of a single-generator
    /// element.
    pub fn coefficient_list(&self, len: usize) -> Vec<BigInt> {
        (0..len)
            .map(|i| self.coefficient(&Monomial(vec![i as u32])))
            .collect()
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.0.iter()
            .zip(&self.ring.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Homogeneous part of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        Self {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.monomial_degree(m) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether every term has the given degree (zero is homogeneous of every
    /// degree).
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| self.monomial_degree(m) == degree)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if !self.ring.survives(&m) {
            return;
        }
        let previous = self.terms.remove(&m).unwrap_or_default();
        let value = self.ring.coefficients.reduce(previous + c);
        if !value.is_zero() {
            self.terms.insert(m, value);
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Product with truncation applied.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// `self^e` for any integer `e`; negative powers go through
    /// [`series_invert`](Self::series_invert).
    pub fn pow_signed(&self, e: i64) -> Result<Self> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.series_invert()
        } else {
            Ok(p)
        }
    }

    /// The inverse power series, exact after truncation.
    ///
    /// The constant term must be a unit of the coefficient domain, and every
    /// generator occurring in a nonconstant term must be truncated so the
    /// geometric series terminates.
    pub fn series_invert(&self) -> Result<Self> {
        let domain = self.ring.coefficients;
        let c0 = self.constant_term();
        let c0_inv = domain.inverse(&c0).ok_or(Error::NonUnit)?;
        let mut nilpotent = self.clone();
        nilpotent.add_term(Monomial::unit(self.ring.generators.len()), -c0);
        let free_generator_used = nilpotent.terms.keys().any(|m| {
            m.0.iter()
                .zip(&self.ring.generators)
                .any(|(&e, g)| e > 0 && g.truncation.is_none())
        });
        if free_generator_used {
            return Err(Error::InvalidArgument(
                "series inversion needs every occurring generator to be truncated".into(),
            ));
        }
        // u = c0 (1 + n'), n' = n c0^-1 nilpotent; u^-1 = c0^-1 Σ (-n')^k.
        let step = nilpotent.scale(&(-&c0_inv));
        let mut power = Self::one(&self.ring);
        let mut sum = Self::zero(&self.ring);
        while !power.is_zero() {
            sum = sum.add(&power)?;
            power = power.mul(&step)?;
        }
        Ok(sum.scale(&c0_inv))
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mono: Vec<String> = m
                .0
                .iter()
                .zip(&self.ring.generators)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, g)| {
                    if e == 1 {
                        g.name.clone()
                    } else {
                        format!("{}^{}", g.name, e)
                    }
                })
                .collect();
            let (negative, magnitude) = (c.is_negative(), c.abs());
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match (mono.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{magnitude}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedPoly({self})")
    }
}
