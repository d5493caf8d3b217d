//! Exact search for coincidences `f(x) = f(y)` with disjoint supports, for
//! maps that are affine on each simplex.
//!
//! Deciding whether `f(σ)` and `f(τ)` meet is a linear feasibility problem
//! in the barycentric weights, solved exactly over the rationals.

mod lp;

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::simplicial::{Simplex, SimplicialComplex};
use crate::{par, Error, Result};

/// Points file: `{"dimension": m, "images": {"vertex": ["p/q", ...]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsFile {
    pub dimension: usize,
    pub images: BTreeMap<String, Vec<String>>,
}

/// A map into `R^m` given by exact vertex images, extended affinely over
/// simplices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLMap {
    dimension: usize,
    images: BTreeMap<String, Vec<BigRational>>,
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let r = BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")))?;
    Ok(r)
}

impl PLMap {
    pub fn new(dimension: usize, images: BTreeMap<String, Vec<BigRational>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidArgument("target dimension must be positive".into()));
        }
        if let Some((v, p)) = images.iter().find(|(_, p)| p.len() != dimension) {
            return Err(Error::InvalidArgument(format!(
                "image of `{v}` has {} coordinates, expected {dimension}",
                p.len()
            )));
        }
        Ok(Self { dimension, images })
    }

    /// Builds a map from integer coordinates, keyed by label.
    pub fn from_integers<S: AsRef<str>>(dimension: usize, images: &[(S, Vec<i64>)]) -> Result<Self> {
        let images = images
            .iter()
            .map(|(l, p)| {
                (
                    l.as_ref().to_owned(),
                    p.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
                )
            })
            .collect();
        Self::new(dimension, images)
    }

    pub fn from_file(file: &PointsFile) -> Result<Self> {
        let images = file
            .images
            .iter()
            .map(|(v, coords)| {
                Ok((
                    v.clone(),
                    coords.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?,
                ))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Self::new(file.dimension, images)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PointsFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> PointsFile {
        PointsFile {
            dimension: self.dimension,
            images: self
                .images
                .iter()
                .map(|(v, p)| (v.clone(), p.iter().map(ToString::to_string).collect()))
                .collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn image(&self, label: &str) -> Option<&[BigRational]> {
        self.images.get(label).map(Vec::as_slice)
    }

    pub fn images(&self) -> &BTreeMap<String, Vec<BigRational>> {
        &self.images
    }

    /// Fails unless every vertex of `k` has an image.
    pub fn check_defined_on(&self, k: &SimplicialComplex) -> Result<()> {
        match k.vertices().iter().find(|v| !self.images.contains_key(*v)) {
            Some(v) => Err(Error::UnknownVertex(v.clone())),
            None => Ok(()),
        }
    }

    /// `f(x)` for barycentric weights on the vertices of `s`.
    pub fn evaluate(&self, k: &SimplicialComplex, s: &Simplex, weights: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dimension];
        for (&v, w) in s.vertices().iter().zip(weights) {
            for (o, c) in out.iter_mut().zip(&self.images[k.label(v)]) {
                *o += w * c;
            }
        }
        out
    }

    /// Reflection in the hyperplane `R^{m−1} ⊕ 0`.
    pub fn reflect_last(&self) -> Self {
        let images = self
            .images
            .iter()
            .map(|(v, p)| {
                let mut q = p.clone();
                if let Some(last) = q.last_mut() {
                    *last = -last.clone();
                }
                (v.clone(), q)
            })
            .collect();
        Self {
            dimension: self.dimension,
            images,
        }
    }

    /// `(1 − t)·self + t·other`, vertexwise.
    pub fn interpolate(&self, other: &Self, t: &BigRational) -> Result<Self> {
        if self.dimension != other.dimension || self.images.len() != other.images.len() {
            return Err(Error::InvalidArgument("maps have different shapes".into()));
        }
        let s = BigRational::one() - t;
        let images = self
            .images
            .iter()
            .map(|(v, p)| {
                let q = other.images.get(v).ok_or_else(|| Error::UnknownVertex(v.clone()))?;
                Ok((v.clone(), p.iter().zip(q).map(|(a, b)| &s * a + t * b).collect()))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self {
            dimension: self.dimension,
            images,
        })
    }
}

/// Points `x ∈ σ`, `y ∈ τ` with `σ ∩ τ = ∅` and `f(x) = f(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoincidenceWitness {
    pub first: Simplex,
    pub second: Simplex,
    /// Weights on the vertices of `first`, in order.
    pub x: Vec<BigRational>,
    /// Weights on the vertices of `second`, in order.
    pub y: Vec<BigRational>,
    pub image: Vec<BigRational>,
}

/// JSON form of a witness, with labels and rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub first: Vec<String>,
    pub second: Vec<String>,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub image: Vec<String>,
    /// `#σ − 1 + #τ − 1`.
    pub dimension_sum: usize,
}

impl CoincidenceWitness {
    pub fn dimension_sum(&self) -> usize {
        self.first.dim() + self.second.dim()
    }

    /// Re-checks disjointness, the weight constraints and `f(x) = f(y)`.
    pub fn verify(&self, k: &SimplicialComplex, f: &PLMap) -> bool {
        let unit = |w: &[BigRational]| {
            w.iter().all(|v| v >= &BigRational::zero()) && w.iter().sum::<BigRational>().is_one()
        };
        self.first.is_disjoint(&self.second)
            && self.x.len() == self.first.card()
            && self.y.len() == self.second.card()
            && unit(&self.x)
            && unit(&self.y)
            && f.evaluate(k, &self.first, &self.x) == self.image
            && f.evaluate(k, &self.second, &self.y) == self.image
    }

    pub fn to_record(&self, k: &SimplicialComplex) -> WitnessRecord {
        let strings = |v: &[BigRational]| v.iter().map(ToString::to_string).collect();
        WitnessRecord {
            first: k.labels_of(&self.first),
            second: k.labels_of(&self.second),
            x: strings(&self.x),
            y: strings(&self.y),
            image: strings(&self.image),
            dimension_sum: self.dimension_sum(),
        }
    }

    pub fn from_record(k: &SimplicialComplex, record: &WitnessRecord) -> Result<Self> {
        let parse = |v: &[String]| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>();
        Ok(Self {
            first: k.simplex_from_labels(&record.first)?,
            second: k.simplex_from_labels(&record.second)?,
            x: parse(&record.x)?,
            y: parse(&record.y)?,
            image: parse(&record.image)?,
        })
    }
}

/// Constraint rows over the variables `(x_σ, y_τ)`: `Σx f(v) − Σy f(u) = 0`,
/// `Σx = 1`, `Σy = 1`.
fn coincidence_system(
    k: &SimplicialComplex,
    f: &PLMap,
    first: &Simplex,
    second: &Simplex,
) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let (p, q) = (first.card(), second.card());
    let columns: Vec<(&[BigRational], bool)> = first
        .vertices()
        .iter()
        .map(|&v| (f.images[k.label(v)].as_slice(), true))
        .chain(second.vertices().iter().map(|&u| (f.images[k.label(u)].as_slice(), false)))
        .collect();
    let mut rows = Vec::with_capacity(f.dimension + 2);
    for i in 0..f.dimension {
        rows.push(
            columns
                .iter()
                .map(|(img, plus)| if *plus { img[i].clone() } else { -img[i].clone() })
                .collect(),
        );
    }
    let indicator = |lo: usize, hi: usize| {
        (0..p + q)
            .map(|j| if (lo..hi).contains(&j) { BigRational::one() } else { BigRational::zero() })
            .collect()
    };
    rows.push(indicator(0, p));
    rows.push(indicator(p, p + q));
    let mut rhs = vec![BigRational::zero(); f.dimension];
    rhs.extend([BigRational::one(), BigRational::one()]);
    (rows, rhs)
}

/// Decides whether `f(σ) ∩ f(τ) ≠ ∅` and returns the lexicographically
/// least `(x, y)` when it is.
pub fn pair_feasible(
    k: &SimplicialComplex,
    f: &PLMap,
    first: &Simplex,
    second: &Simplex,
) -> Result<Option<CoincidenceWitness>> {
    if !first.is_disjoint(second) {
        return Err(Error::InvalidArgument("simplices must be disjoint".into()));
    }
    for s in [first, second] {
        for &v in s.vertices() {
            if !f.images.contains_key(k.label(v)) {
                return Err(Error::UnknownVertex(k.label(v).to_owned()));
            }
        }
    }
    let (rows, rhs) = coincidence_system(k, f, first, second);
    let Some(solution) = lp::lexicographic_min(&rows, &rhs) else {
        return Ok(None);
    };
    let (x, y) = solution.split_at(first.card());
    let image = f.evaluate(k, first, x);
    let witness = CoincidenceWitness {
        first: first.clone(),
        second: second.clone(),
        x: x.to_vec(),
        y: y.to_vec(),
        image,
    };
    assert!(witness.verify(k, f), "witness failed exact re-verification");
    Ok(Some(witness))
}

/// Unordered disjoint pairs `(σ, τ)`, `σ` before `τ` in canonical order,
/// optionally with `dim σ + dim τ ≤ cap`.
fn disjoint_pairs(k: &SimplicialComplex, cap: Option<usize>) -> Vec<(usize, usize)> {
    let s = k.simplices();
    (0..s.len())
        .flat_map(|a| {
            (a + 1..s.len())
                .filter(move |&b| s[a].is_disjoint(&s[b]) && cap.is_none_or(|c| s[a].dim() + s[b].dim() <= c))
                .map(move |b| (a, b))
        })
        .collect()
}

/// All disjoint pairs whose images meet, each with its witness, in
/// canonical `(σ, τ)` order.
pub fn find_coincidences(k: &SimplicialComplex, f: &PLMap, cap: Option<usize>) -> Result<Vec<CoincidenceWitness>> {
    f.check_defined_on(k)?;
    let pairs = disjoint_pairs(k, cap);
    let simplices = k.simplices();
    let found = par::map(&pairs, |&(a, b)| pair_feasible(k, f, &simplices[a], &simplices[b]));
    let mut out = Vec::new();
    for w in found {
        if let Some(w) = w? {
            out.push(w);
        }
    }
    Ok(out)
}

/// Reproducible random map: each coordinate is `p/q` with
/// `1 ≤ q ≤ bound` and `|p| ≤ bound`, drawn in canonical vertex order.
pub fn random_plmap(k: &SimplicialComplex, dimension: usize, seed: u64, bound: u32) -> Result<PLMap> {
    if dimension == 0 || bound == 0 {
        return Err(Error::InvalidArgument("dimension and bound must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = i64::from(bound);
    let images = k
        .vertices()
        .iter()
        .map(|v| {
            let coords = (0..dimension)
                .map(|_| {
                    let q = rng.gen_range(1..=b);
                    let p = rng.gen_range(-b..=b);
                    BigRational::new(BigInt::from(p), BigInt::from(q))
                })
                .collect();
            (v.clone(), coords)
        })
        .collect();
    PLMap::new(dimension, images)
}

/// Smallest `L∞` distance between `f(σ)` and `f(τ)`, exactly.
pub fn pair_gap(k: &SimplicialComplex, f: &PLMap, first: &Simplex, second: &Simplex) -> BigRational {
    let (rows, rhs) = coincidence_system(k, f, first, second);
    let (vars, m) = (first.card() + second.card(), f.dimension);
    // Variables: weights, then s, then slacks p_i, q_i with
    // D_i + s − p_i = 0 and −D_i + s − q_i = 0.
    let width = vars + 1 + 2 * m;
    let zero = BigRational::zero;
    let mut a = Vec::with_capacity(2 * m + 2);
    for (i, coords) in rows[..m].iter().enumerate() {
        for sign in [1i64, -1] {
            let mut row = vec![zero(); width];
            for (j, coef) in coords.iter().enumerate() {
                row[j] = coef * BigRational::from_integer(sign.into());
            }
            row[vars] = BigRational::one();
            let slack = vars + 1 + 2 * i + usize::from(sign < 0);
            row[slack] = -BigRational::one();
            a.push(row);
        }
    }
    for row in &rows[m..] {
        let mut r = row.clone();
        r.resize(width, zero());
        a.push(r);
    }
    let mut b = vec![zero(); 2 * m];
    b.extend(rhs[m..].iter().cloned());
    let mut cost = vec![zero(); width];
    cost[vars] = BigRational::one();
    match lp::minimize(&a, &b, &cost) {
        lp::LpOutcome::Optimal { value, .. } => value,
        other => unreachable!("gap program is feasible and bounded: {other:?}"),
    }
}

/// Result at one grid time of a homotopy scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameResult {
    pub t: BigRational,
    pub witnesses: Vec<CoincidenceWitness>,
    /// Least `L∞` gap over disjoint pairs; zero when a witness exists.
    pub gap: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyReport {
    pub frames: Vec<FrameResult>,
    /// First grid time with an exact coincidence.
    pub first_hit: Option<BigRational>,
    /// Smallest positive gap over frames without a witness.
    pub min_gap: Option<BigRational>,
    /// Grid times whose gap is positive but at most the tolerance.
    pub near_misses: Vec<BigRational>,
}

/// `t ↦ (1 − t) f + t·(T ∘ f)` on the grid `t = i/steps`, with `T` the
/// reflection in the last coordinate.
pub fn linear_homotopy(f: &PLMap, steps: u32) -> Result<Vec<(BigRational, PLMap)>> {
    if steps == 0 {
        return Err(Error::InvalidArgument("at least one step is required".into()));
    }
    let mirror = f.reflect_last();
    (0..=steps)
        .map(|i| {
            let t = BigRational::new(BigInt::from(i), BigInt::from(steps));
            let h = f.interpolate(&mirror, &t)?;
            Ok((t, h))
        })
        .collect()
}

/// Evaluates a homotopy from `f` to its mirror image on a grid of times.
///
/// This is a demonstration: existence of some coincidence time is
/// guaranteed under the index hypothesis, but a grid need not contain it.
/// Each frame is decided exactly.
pub fn homotopy_scan(
    a: &SimplicialComplex,
    frames: &[(BigRational, PLMap)],
    tolerance: &BigRational,
) -> Result<HomotopyReport> {
    let (Some((t0, h0)), Some((t1, h1))) = (frames.first(), frames.last()) else {
        return Err(Error::InvalidArgument("empty homotopy".into()));
    };
    if !t0.is_zero() || !t1.is_one() || h0.reflect_last() != *h1 {
        return Err(Error::ReflectionMismatch);
    }
    let pairs = disjoint_pairs(a, None);
    let simplices = a.simplices();
    let mut results = Vec::with_capacity(frames.len());
    for (t, h) in frames {
        let witnesses = find_coincidences(a, h, None)?;
        let gap = if witnesses.is_empty() {
            par::map(&pairs, |&(i, j)| pair_gap(a, h, &simplices[i], &simplices[j]))
                .into_iter()
                .min()
        } else {
            Some(BigRational::zero())
        };
        results.push(FrameResult {
            t: t.clone(),
            witnesses,
            gap,
        });
    }
    let first_hit = results.iter().find(|r| !r.witnesses.is_empty()).map(|r| r.t.clone());
    let misses = results.iter().filter(|r| r.witnesses.is_empty());
    let min_gap = misses.clone().filter_map(|r| r.gap.clone()).min();
    let near_misses = misses
        .filter(|r| r.gap.as_ref().is_some_and(|g| g <= tolerance))
        .map(|r| r.t.clone())
        .collect();
    Ok(HomotopyReport {
        frames: results,
        first_hit,
        min_gap,
        near_misses,
    })
}
