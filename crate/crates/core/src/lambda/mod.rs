//! λ-operations on virtual sums of line classes, K-theory Chern classes,
//! γ-operations and the resulting non-embedding bound for projective spaces.
//!
//! The Bott class only records degree: a Chern class is returned with the
//! power of `v` it multiplies, and no arithmetic with `v^{-1}` happens.

mod ring;
mod series;

use num_bigint::BigInt;

pub use ring::{CoeffRing, LinePoly};
pub use series::{FormalSeries, Indeterminate};

use crate::gf2::SpecialKRing;
use crate::{Error, Result};

/// `Σ a_j [L_j] + n` with integer multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaElement<R> {
    unit: R,
    lines: Vec<(R, i64)>,
    trivial: i64,
}

impl<R: CoeffRing> LambdaElement<R> {
    /// `n·1`, with `unit` fixing the coefficient ring.
    pub fn trivial(unit: &R, n: i64) -> Self {
        Self {
            unit: unit.one_like(),
            lines: Vec::new(),
            trivial: n,
        }
    }

    pub fn line(class: R) -> Self {
        Self {
            unit: class.one_like(),
            lines: vec![(class, 1)],
            trivial: 0,
        }
    }

    pub fn new(unit: &R, lines: Vec<(R, i64)>, trivial: i64) -> Self {
        Self {
            unit: unit.one_like(),
            lines: lines.into_iter().filter(|(_, a)| *a != 0).collect(),
            trivial,
        }
    }

    pub fn lines(&self) -> &[(R, i64)] {
        &self.lines
    }

    pub fn trivial_rank(&self) -> i64 {
        self.trivial
    }

    pub fn rank(&self) -> i64 {
        self.trivial + self.lines.iter().map(|(_, a)| a).sum::<i64>()
    }

    /// No negative multiplicities: an actual bundle.
    pub fn is_honest(&self) -> bool {
        self.trivial >= 0 && self.lines.iter().all(|(_, a)| *a >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut lines = self.lines.clone();
        lines.extend(other.lines.iter().cloned());
        Self::new(&self.unit, lines, self.trivial + other.trivial)
    }

    pub fn neg(&self) -> Self {
        let lines = self.lines.iter().map(|(l, a)| (l.clone(), -a)).collect();
        Self::new(&self.unit, lines, -self.trivial)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        let lines = self.lines.iter().map(|(l, a)| (l.clone(), a * k)).collect();
        Self::new(&self.unit, lines, self.trivial * k)
    }

    /// Honest parts `(P, N)` with `self = P − N`.
    fn split(&self) -> (Self, Self) {
        let pos = self.lines.iter().filter(|(_, a)| *a > 0).cloned().collect();
        let neg = self
            .lines
            .iter()
            .filter(|(_, a)| *a < 0)
            .map(|(l, a)| (l.clone(), -a))
            .collect();
        (
            Self::new(&self.unit, pos, self.trivial.max(0)),
            Self::new(&self.unit, neg, (-self.trivial).max(0)),
        )
    }
}

impl LambdaElement<SpecialKRing> {
    /// `a·H + n` over `SpecialKRing(f)`.
    pub fn hopf_multiple(f: u32, a: i64, n: i64) -> Self {
        Self::new(&SpecialKRing::one(f), vec![(SpecialKRing::hopf(f), a)], n)
    }

    /// `ν = H − 1`.
    pub fn nu(f: u32) -> Self {
        Self::hopf_multiple(f, 1, -1)
    }
}

/// `λ_t(ξ) = Π (1 + L t)^{a} · (1 + t)^n`, through `t^order`.
pub fn lambda_series<R: CoeffRing>(xi: &LambdaElement<R>, order: usize) -> FormalSeries<R> {
    let one = &xi.unit;
    let var = Indeterminate::Lambda;
    let mut acc = FormalSeries::linear(var, order, one.clone(), one.clone())
        .pow(xi.trivial)
        .expect("constant term is one");
    for (l, a) in &xi.lines {
        let factor = FormalSeries::linear(var, order, one.clone(), l.clone());
        acc = acc.mul(&factor.pow(*a).expect("constant term is one"));
    }
    acc
}

/// `λ^i ξ`.
pub fn lambda_power<R: CoeffRing>(xi: &LambdaElement<R>, i: usize) -> R {
    lambda_series(xi, i).coefficients()[i].clone()
}

/// A K-theory Chern class, as the coefficient of `v^{v_power}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernClass<R> {
    pub v_power: usize,
    pub value: R,
}

fn honest_rank<R: CoeffRing>(xi: &LambdaElement<R>) -> Result<usize> {
    if !xi.is_honest() {
        return Err(Error::NotHonest);
    }
    Ok(usize::try_from(xi.rank()).expect("honest rank is nonnegative"))
}

/// `c_0^K, …, c_k^K` of an honest `ξ` of rank `k`.
///
/// Substituting `z = 1 − s` in `Σ c_i (1 − z)^{k−i} v^i = Σ (−z)^i λ^i ξ`
/// turns the left side into `Σ c_i s^{k−i}`.
pub fn chern_from_lambda<R: CoeffRing>(xi: &LambdaElement<R>) -> Result<Vec<ChernClass<R>>> {
    let k = honest_rank(xi)?;
    let lambda = lambda_series(xi, k);
    let one = &xi.unit;
    let var = Indeterminate::S;
    let one_minus_s = FormalSeries::linear(var, k, one.clone(), one.negated());
    let mut total = FormalSeries::new(var, k, one, Vec::new());
    let mut power = FormalSeries::one(var, k, one);
    for (i, li) in lambda.coefficients().iter().enumerate() {
        let signed = if i % 2 == 0 { li.clone() } else { li.negated() };
        total = total.add(&power.scale(&signed));
        power = power.mul(&one_minus_s);
    }
    Ok((0..=k)
        .map(|i| ChernClass {
            v_power: i,
            value: total.coefficients()[k - i].clone(),
        })
        .collect())
}

/// `e_K(ξ) = Σ (−1)^i λ^i ξ` for honest `ξ`.
pub fn euler_k<R: CoeffRing>(xi: &LambdaElement<R>) -> Result<R> {
    let k = honest_rank(xi)?;
    let lambda = lambda_series(xi, k);
    Ok(lambda
        .coefficients()
        .iter()
        .enumerate()
        .fold(xi.unit.zero_like(), |acc, (i, l)| {
            if i % 2 == 0 {
                acc.plus(l)
            } else {
                acc.minus(l)
            }
        }))
}

fn check_rank_zero<R: CoeffRing>(x: &LambdaElement<R>) -> Result<()> {
    match x.rank() {
        0 => Ok(()),
        r => Err(Error::NonzeroRank(r)),
    }
}

/// `Σ (1 − T)^i c_i^K(ξ)`, the γ-series of `ξ − rank ξ`.
fn chern_gamma<R: CoeffRing>(xi: &LambdaElement<R>, order: usize) -> Result<FormalSeries<R>> {
    let one = &xi.unit;
    let var = Indeterminate::Gamma;
    let one_minus_t = FormalSeries::linear(var, order, one.clone(), one.negated());
    let mut total = FormalSeries::new(var, order, one, Vec::new());
    let mut power = FormalSeries::one(var, order, one);
    for c in chern_from_lambda(xi)? {
        total = total.add(&power.scale(&c.value));
        power = power.mul(&one_minus_t);
    }
    Ok(total)
}

/// `γ_T(x)` for rank-0 `x`, from the Chern classes of its honest parts.
pub fn gamma_via_chern<R: CoeffRing>(x: &LambdaElement<R>, order: usize) -> Result<FormalSeries<R>> {
    check_rank_zero(x)?;
    let (p, n) = x.split();
    Ok(chern_gamma(&p, order)?.mul(&chern_gamma(&n, order)?.invert()?))
}

/// `γ_T(x) = λ_{T/(1−T)}(x)` for rank-0 `x`.
pub fn gamma_direct<R: CoeffRing>(x: &LambdaElement<R>, order: usize) -> Result<FormalSeries<R>> {
    check_rank_zero(x)?;
    let one = &x.unit;
    let s = FormalSeries::new(
        Indeterminate::Gamma,
        order,
        one,
        std::iter::once(one.zero_like())
            .chain(std::iter::repeat(one.clone()))
            .take(order + 1)
            .collect(),
    );
    Ok(lambda_series(x, order).compose(&s))
}

/// `γ^0, …, γ^order` of a rank-0 element.
///
/// Both routes are computed; disagreement would be a bug here.
pub fn gamma_ops<R: CoeffRing>(x: &LambdaElement<R>, order: usize) -> Result<Vec<R>> {
    let via_chern = gamma_via_chern(x, order)?;
    let direct = gamma_direct(x, order)?;
    assert_eq!(via_chern, direct, "γ-series routes disagree");
    Ok(via_chern.coefficients().to_vec())
}

fn check_df(d: u32, f: u32) -> Result<()> {
    if d == 0 || f == 0 {
        return Err(Error::InvalidArgument("d and f must be positive".into()));
    }
    Ok(())
}

/// `γ^i(−(d+1)ν)` in `SpecialKRing(f)` for `i ≤ order`, the coefficients of
/// `(1 + μT)^{−(d+1)}`.
pub fn gamma_table(d: u32, f: u32, order: usize) -> Result<Vec<SpecialKRing>> {
    check_df(d, f)?;
    let x = LambdaElement::nu(f).scale(-(i64::from(d) + 1));
    gamma_ops(&x, order)
}

/// `d + max{i : γ^i(−(d+1)ν) ≠ 0}`.
///
/// Since `μ^i = (−2)^{i−1}μ`, `γ^i` is divisible by `2^{i−1}` and
/// vanishes once `i > f`; a table through `f + 1` is therefore complete.
pub fn atiyah_bound(d: u32, f: u32) -> Result<u32> {
    let table = gamma_table(d, f, f as usize + 1)?;
    let top = table.iter().rposition(|g| !g.is_zero()).unwrap_or(0);
    Ok(d + u32::try_from(top).expect("small index"))
}

/// `(free part, μ residue)` of a table entry.
pub fn kring_pair(x: &SpecialKRing) -> (BigInt, BigInt) {
    (x.free_part().clone(), x.mu_part().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn k(f: u32, a: i64, b: i64) -> SpecialKRing {
        SpecialKRing::new(f, a, b)
    }

    #[test]
    fn trivial_lambda() {
        let xi = LambdaElement::trivial(&SpecialKRing::one(3), 4);
        let s = lambda_series(&xi, 6);
        let want = [1, 4, 6, 4, 1, 0, 0];
        for (c, w) in s.coefficients().iter().zip(want) {
            assert_eq!(*c, k(3, w, 0));
        }
    }

    #[test]
    fn lambda_of_line_and_of_minus_nu() {
        let h = LambdaElement::line(SpecialKRing::hopf(4));
        assert_eq!(lambda_series(&h, 3).coefficients()[1], SpecialKRing::hopf(4));
        assert!(lambda_series(&h, 3).coefficients()[2].is_zero());
        let minus_nu = LambdaElement::nu(4).neg();
        assert_eq!(lambda_power(&minus_nu, 1), k(4, 0, -1));
    }

    #[test]
    fn chern_of_trivial_and_line() {
        let xi = LambdaElement::trivial(&SpecialKRing::one(2), 3);
        let c = chern_from_lambda(&xi).unwrap();
        assert_eq!(c[0].value, SpecialKRing::one(2));
        assert!(c[1..].iter().all(|c| c.value.is_zero()));

        let h = SpecialKRing::hopf(3);
        let c = chern_from_lambda(&LambdaElement::line(h.clone())).unwrap();
        assert_eq!(c[0].value, h);
        assert_eq!(c[1].value, k(3, 0, -1));
        assert_eq!(c[1].v_power, 1);
        assert_eq!(chern_from_lambda(&LambdaElement::nu(3)).unwrap_err(), Error::NotHonest);
    }

    #[test]
    fn euler_examples() {
        let one = SpecialKRing::one(5);
        assert!(euler_k(&LambdaElement::trivial(&one, 1)).unwrap().is_zero());
        let h = LambdaElement::hopf_multiple(5, 1, 0);
        assert_eq!(euler_k(&h).unwrap(), k(5, 0, -1));
        let hh = LambdaElement::hopf_multiple(5, 2, 0);
        assert_eq!(euler_k(&hh).unwrap(), k(5, 0, -2));
        // Top Chern class is the Euler class.
        let c = chern_from_lambda(&hh).unwrap();
        assert_eq!(c[2].value, euler_k(&hh).unwrap());
    }

    #[test]
    fn gamma_of_nu_and_minus_nu() {
        let f = 6;
        let g = gamma_ops(&LambdaElement::nu(f), 5).unwrap();
        assert_eq!(g[0], SpecialKRing::one(f));
        assert_eq!(g[1], SpecialKRing::mu_class(f));
        assert!(g[2..].iter().all(SpecialKRing::is_zero));

        let g = gamma_ops(&LambdaElement::nu(f).neg(), 6).unwrap();
        for (i, gi) in g.iter().enumerate().skip(1) {
            assert_eq!(*gi, k(f, 0, -(1i64 << (i - 1))), "γ^{i}");
        }
        let zero = LambdaElement::trivial(&SpecialKRing::one(f), 0);
        let g = gamma_ops(&zero, 3).unwrap();
        assert_eq!(g[0], SpecialKRing::one(f));
        assert!(g[1..].iter().all(SpecialKRing::is_zero));
        assert_eq!(
            gamma_ops(&LambdaElement::trivial(&SpecialKRing::one(f), 2), 3).unwrap_err(),
            Error::NonzeroRank(2)
        );
    }

    #[test]
    fn gamma_over_line_poly() {
        let r = Arc::new(vec![false, true]);
        let l0 = LinePoly::generator(&r, 0);
        let l1 = LinePoly::generator(&r, 1);
        let one = LinePoly::integer(&r, 1);
        let x = LambdaElement::new(&one, vec![(l0, 2), (l1, -3)], 1);
        assert_eq!(gamma_via_chern(&x, 5).unwrap(), gamma_direct(&x, 5).unwrap());
    }

    #[test]
    fn atiyah_examples() {
        assert_eq!(atiyah_bound(1, 1).unwrap(), 1);
        let mut last = 0;
        for f in 1..=10 {
            let n = atiyah_bound(3, f).unwrap();
            assert!(n >= last);
            last = n;
        }
        assert!(atiyah_bound(0, 1).is_err());
    }
}
