//! Stiefel-Whitney class arithmetic for manifolds presented by truncated
//! polynomial cohomology rings.
//!
//! The central quantity is `D = d + max{i : w_i(−τM) ≠ 0}`: every map of a
//! closed `d`-manifold `M` into `R^m` with `m ≤ D` has a double point.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::gf2::{Coefficients, Generator, Monomial, PolyRing, TruncatedPoly};
use crate::{Error, Result};

/// Degreewise components `[w_0, w_1, …]` of a total characteristic class.
/// Component `i` is homogeneous of degree `step · i` (1 for Stiefel-Whitney
/// classes, 2 for Chern classes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharClassVector {
    components: Vec<TruncatedPoly>,
    step: u32,
}

impl CharClassVector {
    pub fn from_components(components: Vec<TruncatedPoly>, step: u32) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidArgument("empty class vector".into()));
        };
        let ring = Arc::clone(first.ring());
        for (i, c) in components.iter().enumerate() {
            if **c.ring() != *ring {
                return Err(Error::PresentationMismatch);
            }
            if !c.is_homogeneous(step * i as u32) {
                return Err(Error::InvalidArgument(format!(
                    "component {i} is not homogeneous of degree {}",
                    step * i as u32
                )));
            }
        }
        Ok(Self { components, step })
    }

    /// Splits a total class into `len` components by degree. Parts of degree
    /// past the last component are dropped.
    pub fn from_total(total: &TruncatedPoly, len: usize, step: u32) -> Self {
        let components = (0..len).map(|i| total.component(step * i as u32)).collect();
        Self { components, step }
    }

    pub fn components(&self) -> &[TruncatedPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Option<&TruncatedPoly> {
        self.components.get(i)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.components[0].ring()
    }

    pub fn total(&self) -> TruncatedPoly {
        self.components
            .iter()
            .fold(TruncatedPoly::zero(self.ring()), |acc, c| {
                acc.add(c).expect("components share a ring")
            })
    }

    /// Largest index with a nonzero component.
    pub fn top_nonzero(&self) -> Option<usize> {
        self.components.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_trivial(&self) -> bool {
        self.top_nonzero() == Some(0) && self.components[0].is_one()
    }
}

/// A closed manifold described by its mod-2 cohomology ring and total
/// tangent Stiefel-Whitney class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldPresentation {
    pub ring: Arc<PolyRing>,
    pub dimension: u32,
    pub tangent: CharClassVector,
}

impl ManifoldPresentation {
    pub fn new(ring: Arc<PolyRing>, dimension: u32, tangent_total: &TruncatedPoly) -> Result<Self> {
        if **tangent_total.ring() != *ring {
            return Err(Error::PresentationMismatch);
        }
        let tangent = CharClassVector::from_total(tangent_total, dimension as usize + 1, 1);
        Ok(Self {
            ring,
            dimension,
            tangent,
        })
    }

    /// `S^d`: cohomology `F2[x]/(x²)` with `x` in degree `d`, trivial tangent
    /// class.
    pub fn sphere(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("sphere dimension must be positive".into()));
        }
        let ring = PolyRing::single(Coefficients::Gf2, "x", d, 2);
        let one = TruncatedPoly::one(&ring);
        Self::new(ring, d, &one)
    }

    /// Product manifold. Generators of `other` are renamed with a `'` suffix
    /// when their names clash.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.ring.coefficients != other.ring.coefficients {
            return Err(Error::PresentationMismatch);
        }
        let mut generators = self.ring.generators.clone();
        for g in &other.ring.generators {
            let mut g = g.clone();
            while generators.iter().any(|h| h.name == g.name) {
                g.name.push('\'');
            }
            generators.push(g);
        }
        let ring = PolyRing::new(self.ring.coefficients, generators);
        let left = embed(&self.tangent.total(), &ring, 0);
        let right = embed(&other.tangent.total(), &ring, self.ring.generators.len());
        Self::new(Arc::clone(&ring), self.dimension + other.dimension, &left.mul(&right)?)
    }
}

/// Copies `p` into a larger ring whose generators starting at `offset`
/// match those of `p`'s ring.
fn embed(p: &TruncatedPoly, ring: &Arc<PolyRing>, offset: usize) -> TruncatedPoly {
    let mut out = TruncatedPoly::zero(ring);
    for (m, c) in p.terms() {
        let mut e = vec![0; ring.generators.len()];
        e[offset..offset + m.0.len()].copy_from_slice(&m.0);
        let term = TruncatedPoly::monomial(ring, e, c.clone()).expect("exponent length matches");
        out = out.add(&term).expect("same ring");
    }
    out
}

/// `RP^d`: `H^*(RP^d) = F2[T]/(T^{d+1})` and `R ⊕ τ ≅ (d+1)H`, so the total
/// tangent class is `(1+T)^{d+1}`.
pub fn projective_space(d: u32) -> Result<ManifoldPresentation> {
    if d == 0 {
        return Err(Error::InvalidArgument("projective space dimension must be positive".into()));
    }
    let ring = PolyRing::single(Coefficients::Gf2, "T", 1, d + 1);
    let total = TruncatedPoly::from_coefficients(&ring, &[1, 1])?.pow(d + 1);
    ManifoldPresentation::new(ring, d, &total)
}

/// Inverse total class, split into components of the same lengths.
pub fn dual_total_class(w: &CharClassVector) -> Result<CharClassVector> {
    if !w.components[0].is_one() {
        return Err(Error::NonUnit);
    }
    let inverse = w.total().series_invert()?;
    Ok(CharClassVector::from_total(&inverse, w.len(), w.step))
}

/// `D = d + max{i : w_i(−τM) ≠ 0}`.
///
/// Genuine closed connected manifolds satisfy `d ≤ D < 2d`; other
/// presentations are accepted with a logged warning.
pub fn cap_d(mp: &ManifoldPresentation) -> Result<u32> {
    let dual = dual_total_class(&mp.tangent)?;
    let top = dual.top_nonzero().unwrap_or(0) as u32;
    let d_cap = mp.dimension + top;
    if !bounds_hold(mp.dimension, d_cap) {
        log::warn!(
            "D = {d_cap} violates d <= D < 2d for d = {}; the presentation is not a closed connected manifold",
            mp.dimension
        );
    }
    Ok(d_cap)
}

/// `d ≤ D < 2d`.
pub fn bounds_hold(d: u32, d_cap: u32) -> bool {
    d <= d_cap && d_cap < 2 * d
}

/// The polynomial `a(t)` of degree `m − d − 1` with
/// `a(t) · t · (t^d + w_1 t^{d−1} + … + w_d) = t^m` in `H^*(M)[t]`, which
/// exists exactly when `w_i(−τM) = 0` for all `i ≥ m − d`.
///
/// The returned element lives in the manifold's ring extended by a free
/// generator `t` of degree 1.
pub fn division_witness(mp: &ManifoldPresentation, m: u32) -> Result<Option<TruncatedPoly>> {
    let d = mp.dimension;
    if m <= d {
        return Err(Error::InvalidArgument(format!("m = {m} must exceed d = {d}")));
    }
    let dual = dual_total_class(&mp.tangent)?;
    let gap = (m - d) as usize;
    if dual.components().iter().skip(gap).any(|c| !c.is_zero()) {
        return Ok(None);
    }
    let ring = mp.ring.extend(Generator::new("t", 1, None));
    let t_index = ring.generators.len() - 1;
    let t_pow = |e: u32| {
        let mut ex = vec![0; ring.generators.len()];
        ex[t_index] = e;
        TruncatedPoly::monomial(&ring, ex, 1).expect("exponent length matches")
    };

    let mut a = TruncatedPoly::zero(&ring);
    for (i, w) in dual.components().iter().enumerate().take(gap) {
        let term = embed(w, &ring, 0).mul(&t_pow((gap - 1 - i) as u32))?;
        a = a.add(&term)?;
    }

    let mut euler = TruncatedPoly::zero(&ring);
    for (j, w) in mp.tangent.components().iter().enumerate() {
        euler = euler.add(&embed(w, &ring, 0).mul(&t_pow(d - j as u32))?)?;
    }
    let product = a.mul(&t_pow(1))?.mul(&euler)?;
    assert_eq!(product, t_pow(m), "division witness failed re-multiplication");
    Ok(Some(a))
}

/// Whether `e(λ ⊗ ξ) = Σ_i w_{k−i}(ξ) e(λ)^i` is nonzero, given the set of
/// `i` with `e(λ)^i ≠ 0`. The Künneth splitting makes the summands
/// independent, so it suffices that one of them survives.
pub fn twisted_euler_nonzero(
    wxi: &CharClassVector,
    k: usize,
    nonzero_powers: &BTreeSet<usize>,
) -> Result<bool> {
    if wxi.len() != k + 1 {
        return Err(Error::ShapeMismatch {
            expected: k + 1,
            found: wxi.len(),
        });
    }
    Ok((0..=k).any(|i| nonzero_powers.contains(&i) && !wxi.components[k - i].is_zero()))
}

/// Stiefel-Whitney classes of `R^l ⊕ h·H` over `RP^b`, as a vector of
/// length `l + h + 1`.
pub fn hopf_sum_class(base_dim: u32, trivial: u32, hopf: u32) -> Result<CharClassVector> {
    let ring = PolyRing::single(Coefficients::Gf2, "T", 1, base_dim + 1);
    let total = TruncatedPoly::from_coefficients(&ring, &[1, 1])?.pow(hopf);
    Ok(CharClassVector::from_total(&total, (trivial + hopf) as usize + 1, 1))
}

/// Lucas: `C(n, k)` is odd iff the binary digits of `k` are dominated by
/// those of `n`.
pub fn binomial_is_odd(n: u64, k: u64) -> bool {
    k <= n && k & !n == 0
}

/// `0 ≤ l ≤ m ≤ k`, `m + r ≤ D` and `C(k−l, k−m)` odd.
pub fn frick_harrison_admissible(l: i64, m: i64, k: i64, r: i64, d_cap: i64) -> bool {
    0 <= l && l <= m && m <= k && m + r <= d_cap && binomial_is_odd((k - l) as u64, (k - m) as u64)
}

/// Inverse of an integral total Chern class `c(C ⊗ τM)`, together with
/// `d + max{i : c_i(−C ⊗ τM) ≠ 0}`.
pub fn dual_chern(c: &CharClassVector, d: u32) -> Result<(CharClassVector, u32)> {
    if c.ring().coefficients != Coefficients::Integer {
        return Err(Error::InvalidArgument("integer coefficients required".into()));
    }
    let dual = dual_total_class(c)?;
    let top = dual.top_nonzero().unwrap_or(0) as u32;
    Ok((dual, d + top))
}

/// Coefficient of `T^i` for a single-generator class component.
pub fn single_generator_bits(class: &CharClassVector) -> Vec<BigInt> {
    class
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| c.coefficient(&Monomial(vec![i as u32])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2_vector(d: u32, bits: &[i64]) -> CharClassVector {
        let ring = PolyRing::single(Coefficients::Gf2, "T", 1, d + 1);
        let total = TruncatedPoly::from_coefficients(&ring, bits).unwrap();
        CharClassVector::from_total(&total, d as usize + 1, 1)
    }

    #[test]
    fn dual_of_rp2_and_rp4() {
        let dual = dual_total_class(&projective_space(2).unwrap().tangent).unwrap();
        assert_eq!(dual, gf2_vector(2, &[1, 1, 0]));
        let dual = dual_total_class(&projective_space(4).unwrap().tangent).unwrap();
        assert_eq!(dual, gf2_vector(4, &[1, 1, 1, 1, 0]));
    }

    #[test]
    fn trivial_class_is_self_dual() {
        let w = gf2_vector(3, &[1]);
        assert_eq!(dual_total_class(&w).unwrap(), w);
    }

    #[test]
    fn non_unit_leading_term() {
        let w = gf2_vector(2, &[0, 1]);
        assert_eq!(dual_total_class(&w).unwrap_err(), Error::NonUnit);
    }

    #[test]
    fn projective_totals() {
        assert_eq!(projective_space(2).unwrap().tangent, gf2_vector(2, &[1, 1, 1]));
        assert_eq!(projective_space(1).unwrap().tangent, gf2_vector(1, &[1]));
        assert_eq!(projective_space(4).unwrap().tangent, gf2_vector(4, &[1, 1, 0, 0, 1]));
    }

    #[test]
    fn cap_d_values() {
        assert_eq!(cap_d(&projective_space(4).unwrap()).unwrap(), 7);
        assert_eq!(cap_d(&projective_space(6).unwrap()).unwrap(), 7);
        assert_eq!(cap_d(&ManifoldPresentation::sphere(5).unwrap()).unwrap(), 5);
    }

    #[test]
    fn division_witness_cases() {
        let rp2 = projective_space(2).unwrap();
        assert!(division_witness(&rp2, 3).unwrap().is_none());
        let a = division_witness(&rp2, 4).unwrap().unwrap();
        assert_eq!(a.to_string(), "t + T");
        let sphere = ManifoldPresentation::sphere(3).unwrap();
        assert!(division_witness(&sphere, 4).unwrap().unwrap().is_one());
        assert!(division_witness(&sphere, 3).is_err());
    }

    #[test]
    fn product_of_projective_spaces() {
        let p = projective_space(1)
            .unwrap()
            .product(&projective_space(2).unwrap())
            .unwrap();
        assert_eq!(p.dimension, 3);
        assert_eq!(p.ring.generators.len(), 2);
        // w(RP^1 × RP^2) = 1 · (1 + T' + T'^2); dual = 1 + T'.
        let dual = dual_total_class(&p.tangent).unwrap();
        assert_eq!(dual.top_nonzero(), Some(1));
        assert_eq!(cap_d(&p).unwrap(), 4);
    }

    #[test]
    fn twisted_euler_examples() {
        // ξ = R^m ⊕ H over RP^1, m in the set of nonzero powers.
        let m = 3;
        let xi = hopf_sum_class(1, m, 1).unwrap();
        let powers: BTreeSet<usize> = (0..=m as usize).collect();
        assert!(twisted_euler_nonzero(&xi, m as usize + 1, &powers).unwrap());
        // Trivial ξ reduces to membership of k.
        let trivial = hopf_sum_class(2, 4, 0).unwrap();
        assert!(twisted_euler_nonzero(&trivial, 4, &[4].into()).unwrap());
        assert!(!twisted_euler_nonzero(&trivial, 4, &[0, 1, 2, 3].into()).unwrap());
        // ξ = R^l ⊕ 2H with C(2, 1) even: w_1 = 0, and w_0, w_2 pair with
        // powers absent from the set.
        let (l, k) = (2u32, 4usize);
        let xi = hopf_sum_class(3, l, 2).unwrap();
        assert!(xi.component(1).unwrap().is_zero());
        assert!(!twisted_euler_nonzero(&xi, k, &[3].into()).unwrap());
        assert!(twisted_euler_nonzero(&xi, k, &[2].into()).unwrap());
        assert!(twisted_euler_nonzero(&xi, 3, &[3].into()).is_err());
    }

    #[test]
    fn frick_harrison_cases() {
        assert!(frick_harrison_admissible(2, 2, 3, 1, 3));
        assert!(!frick_harrison_admissible(2, 2, 3, 2, 3));
        assert!(!frick_harrison_admissible(1, 2, 3, 1, 7));
        assert!(!frick_harrison_admissible(3, 2, 4, 1, 7));
    }

    #[test]
    fn dual_chern_examples() {
        let z = PolyRing::single(Coefficients::Integer, "T", 2, 3);
        let c = CharClassVector::from_total(&TruncatedPoly::from_coefficients(&z, &[1, 3, 3]).unwrap(), 3, 2);
        let (dual, threshold) = dual_chern(&c, 4).unwrap();
        assert_eq!(
            single_generator_bits(&dual),
            vec![BigInt::from(1), BigInt::from(-3), BigInt::from(6)]
        );
        assert_eq!(threshold, 6);

        let z1 = PolyRing::single(Coefficients::Integer, "T", 2, 2);
        let c = CharClassVector::from_total(&TruncatedPoly::from_coefficients(&z1, &[1, 2]).unwrap(), 2, 2);
        let (dual, _) = dual_chern(&c, 2).unwrap();
        assert_eq!(single_generator_bits(&dual), vec![BigInt::from(1), BigInt::from(-2)]);

        let trivial = CharClassVector::from_total(&TruncatedPoly::one(&z), 3, 2);
        let (dual, threshold) = dual_chern(&trivial, 4).unwrap();
        assert!(dual.is_trivial());
        assert_eq!(threshold, 4);
    }
}
