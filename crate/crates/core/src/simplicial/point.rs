use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// A point of `|K|` as exact barycentric weights, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarycentricPoint {
    weights: Vec<BigRational>,
}

impl BarycentricPoint {
    /// Checks nonnegativity and unit mass. The support is not checked
    /// against any complex; see [`BarycentricPoint::in_complex`].
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if weights.iter().any(Signed::is_negative) {
            return Err(Error::InvalidArgument("negative barycentric weight".into()));
        }
        let total: BigRational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidArgument(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { weights })
    }

    /// Like [`new`](Self::new), and the support must be a simplex of `k`.
    pub fn in_complex(k: &SimplicialComplex, weights: Vec<BigRational>) -> Result<Self> {
        if weights.len() != k.vertex_count() {
            return Err(Error::ShapeMismatch {
                expected: k.vertex_count(),
                found: weights.len(),
            });
        }
        let p = Self::new(weights)?;
        if !k.contains(&p.support()) {
            return Err(Error::InvalidArgument("support is not a simplex of the complex".into()));
        }
        Ok(p)
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(ratios: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            ratios
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight(&self, v: u32) -> &BigRational {
        &self.weights[v as usize]
    }

    pub fn support(&self) -> Simplex {
        Simplex::new(
            self.weights
                .iter()
                .enumerate()
                .filter(|(_, w)| w.is_positive())
                .map(|(i, _)| i as u32)
                .collect(),
        )
    }
}

/// `α(x, y)(v) = max{x(v) − y(v), 0} / Σ_u max{x(u) − y(u), 0}`.
///
/// The supports of `α(x, y)` and `α(y, x)` are disjoint.
pub fn alpha(x: &BarycentricPoint, y: &BarycentricPoint) -> Result<BarycentricPoint> {
    if x.weights.len() != y.weights.len() {
        return Err(Error::ShapeMismatch {
            expected: x.weights.len(),
            found: y.weights.len(),
        });
    }
    let positive: Vec<BigRational> = x
        .weights
        .iter()
        .zip(&y.weights)
        .map(|(a, b)| {
            let diff = a - b;
            if diff.is_positive() {
                diff
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let total: BigRational = positive.iter().sum();
    if total.is_zero() {
        return Err(Error::InvalidArgument("alpha is undefined for x = y".into()));
    }
    Ok(BarycentricPoint {
        weights: positive.into_iter().map(|w| w / &total).collect(),
    })
}

/// `μ_j(x) = min{Σ_{v ∉ I} x(v) : I ∈ R_j ⊔ {∅}}`, which vanishes exactly
/// when `supp(x) ∈ R_j`.
pub fn mu<'a>(x: &BarycentricPoint, family: impl IntoIterator<Item = &'a Simplex>) -> BigRational {
    let best_inside = family
        .into_iter()
        .map(|s| {
            s.vertices()
                .iter()
                .filter_map(|&v| x.weights.get(v as usize))
                .sum::<BigRational>()
        })
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() - best_inside.max(BigRational::zero())
}
