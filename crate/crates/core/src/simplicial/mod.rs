//! Finite abstract simplicial complexes.
//!
//! Vertices carry string labels; vertex `i` is the `i`-th label in
//! lexicographic order. A [`Simplex`] is a sorted list of vertex indices, and
//! the simplices of a complex are stored sorted by dimension and then
//! lexicographically. That order is the canonical order used by every
//! enumeration in the crate.

mod cover;
mod point;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use cover::{
    gamma_cover_check, minimal_excluded, partition_family, skeleton_family, verify_cover_hypothesis,
    CoverFamily, CoverViolation, FamilyKind, GammaCheck, PAIR_LIMIT,
};
pub use point::{alpha, mu, BarycentricPoint};

/// Largest facet we are willing to expand into all of its faces.
const MAX_FACET_VERTICES: usize = 24;

/// A nonempty set of vertex indices, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn card(&self) -> usize {
        self.0.len()
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Codimension-one faces, each omitting one vertex. Empty for a vertex.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    /// Canonical comparison: by cardinality, then lexicographically.
    pub fn canonical_cmp(&self, other: &Simplex) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    fn nonempty_subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// On-disk form: `{"vertices": [...], "facets": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), BTreeSet::new())
    }

    /// Builds the downward closure of the given facets. Every listed vertex
    /// becomes a 0-simplex.
    pub fn from_facets<S: AsRef<str>>(vertices: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let mut labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_owned()).collect();
        labels.sort();
        labels.dedup();
        let lookup: HashMap<&str, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i as u32))
            .collect();
        let mut generators: Vec<Simplex> = (0..labels.len() as u32).map(|v| Simplex(vec![v])).collect();
        for facet in facets {
            let ids = facet
                .iter()
                .map(|l| {
                    lookup
                        .get(l.as_ref())
                        .copied()
                        .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_owned()))
                })
                .collect::<Result<Vec<_>>>()?;
            if ids.is_empty() {
                return Err(Error::InvalidArgument("empty facet".into()));
            }
            generators.push(Simplex::new(ids));
        }
        let mut all = BTreeSet::new();
        for g in &generators {
            if g.card() > MAX_FACET_VERTICES {
                return Err(Error::ResourceCap {
                    what: "facet size",
                    count: g.card() as u128,
                    limit: MAX_FACET_VERTICES as u128,
                });
            }
            all.extend(g.nonempty_subsets());
        }
        Ok(Self::from_parts(labels, all))
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        Self::from_facets(&file.vertices, &file.facets)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            vertices: self.labels.clone(),
            facets: self.facets.iter().map(|f| self.labels_of(f)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("complex serializes")
    }

    /// `simplices` must already be downward closed.
    fn from_parts(labels: Vec<String>, simplices: BTreeSet<Simplex>) -> Self {
        let mut simplices: Vec<Simplex> = simplices.into_iter().collect();
        simplices.sort_by(Simplex::canonical_cmp);
        let index: HashMap<Simplex, usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut cofaced = vec![false; simplices.len()];
        for s in &simplices {
            for f in s.boundary_faces() {
                cofaced[index[&f]] = true;
            }
        }
        let facets = simplices
            .iter()
            .zip(&cofaced)
            .filter(|(_, &c)| !c)
            .map(|(s, _)| s.clone())
            .collect();
        Self {
            labels,
            simplices,
            index,
            facets,
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<u32> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(|i| i as u32)
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels_of(&self, s: &Simplex) -> Vec<String> {
        s.vertices().iter().map(|&v| self.labels[v as usize].clone()).collect()
    }

    /// Simplex from vertex labels; it need not belong to the complex.
    pub fn simplex_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let ids = labels
            .iter()
            .map(|l| {
                self.vertex_index(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_owned()))
            })
            .collect::<Result<Vec<_>>>()?;
        if ids.is_empty() {
            return Err(Error::InvalidArgument("empty simplex".into()));
        }
        Ok(Simplex::new(ids))
    }

    /// All simplices in canonical order.
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplices_of_dim(&self, dim: usize) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(move |s| s.dim() == dim)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            f[s.dim()] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Simplices of cardinality at most `q + 1`.
    pub fn skeleton(&self, q: usize) -> Self {
        let kept = self.simplices.iter().filter(|s| s.dim() <= q).cloned().collect();
        Self::from_parts(self.labels.clone(), kept)
    }

    /// Simplices `σ ∪ τ` with `σ`, `τ` faces of the two complexes or empty,
    /// not both empty. Vertex labels must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(clash) = self.labels.iter().find(|l| other.vertex_index(l).is_some()) {
            return Err(Error::LabelClash(clash.clone()));
        }
        let mut vertices: Vec<String> = self.labels.clone();
        vertices.extend(other.labels.iter().cloned());
        let mut facets: Vec<Vec<String>> = Vec::new();
        match (self.facets.is_empty(), other.facets.is_empty()) {
            (true, _) => facets.extend(other.facets.iter().map(|f| other.labels_of(f))),
            (_, true) => facets.extend(self.facets.iter().map(|f| self.labels_of(f))),
            _ => {
                for a in &self.facets {
                    for b in &other.facets {
                        let mut f = self.labels_of(a);
                        f.extend(other.labels_of(b));
                        facets.push(f);
                    }
                }
            }
        }
        Self::from_facets(&vertices, &facets)
    }

    /// The subcomplex of simplices selected by `keep` (indexed in canonical
    /// order). Fails unless the selection is closed under faces. Vertices
    /// outside the selection are dropped.
    pub fn subcomplex(&self, keep: &[bool]) -> Result<Self> {
        if keep.len() != self.simplices.len() {
            return Err(Error::ShapeMismatch {
                expected: self.simplices.len(),
                found: keep.len(),
            });
        }
        for (s, _) in self.simplices.iter().zip(keep).filter(|(_, &k)| k) {
            if s.boundary_faces().any(|f| !keep[self.index[&f]]) {
                return Err(Error::NotDownwardClosed);
            }
        }
        let vertices: Vec<String> = self
            .simplices
            .iter()
            .zip(keep)
            .filter(|(s, &k)| k && s.card() == 1)
            .map(|(s, _)| self.labels[s.0[0] as usize].clone())
            .collect();
        let facets: Vec<Vec<String>> = self
            .simplices
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(s, _)| self.labels_of(s))
            .collect();
        Self::from_facets(&vertices, &facets)
    }

    /// Each simplex of `self` is a simplex of `other` with the same labels.
    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.simplices.iter().all(|s| {
            let labels = self.labels_of(s);
            other
                .simplex_from_labels(&labels)
                .is_ok_and(|t| other.contains(&t))
        })
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.labels)
            .field("facets", &self.facets.iter().map(|s| self.labels_of(s)).collect::<Vec<_>>())
            .finish()
    }
}

fn numbered_labels(count: usize) -> Vec<String> {
    let width = count.saturating_sub(1).to_string().len();
    (0..count).map(|i| format!("{i:0width$}")).collect()
}

/// `∂Δ^n`: all proper nonempty subsets of `n + 1` vertices labelled
/// `0..=n` (zero-padded so lexicographic and numeric order agree).
pub fn boundary_of_simplex(n: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::InvalidArgument("boundary of a 0-simplex is empty".into()));
    }
    let labels = numbered_labels(n + 1);
    let facets: Vec<Vec<String>> = (0..=n)
        .map(|skip| {
            labels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, l)| l.clone())
                .collect()
        })
        .collect();
    SimplicialComplex::from_facets(&labels, &facets)
}

/// The full simplex on `n + 1` vertices.
pub fn simplex(n: usize) -> Result<SimplicialComplex> {
    let labels = numbered_labels(n + 1);
    SimplicialComplex::from_facets(&labels, std::slice::from_ref(&labels))
}

/// The 6-vertex triangulation of the real projective plane.
pub fn minimal_rp2() -> SimplicialComplex {
    const TRIANGLES: [[&str; 3]; 10] = [
        ["0", "1", "3"],
        ["0", "1", "4"],
        ["0", "2", "3"],
        ["0", "2", "5"],
        ["0", "4", "5"],
        ["1", "2", "4"],
        ["1", "2", "5"],
        ["1", "3", "5"],
        ["2", "3", "4"],
        ["3", "4", "5"],
    ];
    let vertices = ["0", "1", "2", "3", "4", "5"];
    let facets: Vec<Vec<&str>> = TRIANGLES.iter().map(|t| t.to_vec()).collect();
    SimplicialComplex::from_facets(&vertices, &facets).expect("fixed triangulation is valid")
}

/// `K_5 = (∂Δ^4)^{(1)}`.
pub fn k5() -> SimplicialComplex {
    boundary_of_simplex(4).expect("n > 0").skeleton(1)
}
