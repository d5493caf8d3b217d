//! Families `R_1, …, R_r ⊆ S` and the hypothesis of the constrained
//! van Kampen-Flores argument: whenever `I, J ∈ S` are disjoint with
//! `#I − 1 + #J − 1 ≤ m + r`, one of them lies in `R_j`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Simplex, SimplicialComplex};
use crate::{par, Error, Result};

/// Hard limit on the number of unordered simplex pairs a single check may
/// enumerate.
pub const PAIR_LIMIT: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// Listed simplices, each given by vertex labels.
    Explicit { sets: Vec<Vec<Vec<String>>> },
    /// `R_1 = {I : 2#I ≤ m + 3}`.
    Skeleton { m: usize },
    /// `R_j = {I : 2#(I ∩ V_j) < #V_j}` for a partition `V = ⊔ V_j`.
    Partition { parts: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFamily {
    members: Vec<Vec<bool>>,
    kind: FamilyKind,
}

impl CoverFamily {
    /// Explicit family; every listed simplex must belong to `k`.
    pub fn explicit(k: &SimplicialComplex, sets: &[Vec<Simplex>]) -> Result<Self> {
        let mut members = Vec::with_capacity(sets.len());
        for set in sets {
            let mut row = vec![false; k.len()];
            for s in set {
                let idx = k
                    .index_of(s)
                    .ok_or_else(|| Error::InvalidArgument(format!("{:?} is not a simplex", k.labels_of(s))))?;
                row[idx] = true;
            }
            members.push(row);
        }
        let kind = FamilyKind::Explicit {
            sets: sets
                .iter()
                .map(|set| set.iter().map(|s| k.labels_of(s)).collect())
                .collect(),
        };
        Ok(Self { members, kind })
    }

    /// Resolves a family description against a complex.
    pub fn from_kind(k: &SimplicialComplex, kind: &FamilyKind) -> Result<Self> {
        match kind {
            FamilyKind::Skeleton { m } => Ok(skeleton_family(k, *m)),
            FamilyKind::Partition { parts } => partition_family(k, parts),
            FamilyKind::Explicit { sets } => {
                let sets = sets
                    .iter()
                    .map(|set| set.iter().map(|s| k.simplex_from_labels(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Self::explicit(k, &sets)
            }
        }
    }

    pub fn from_json(k: &SimplicialComplex, text: &str) -> Result<Self> {
        let kind: FamilyKind = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_kind(k, &kind)
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    /// Number of members `r`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Membership of simplex `idx` (canonical order) in `R_j`.
    pub fn contains(&self, j: usize, idx: usize) -> bool {
        self.members[j][idx]
    }

    pub fn member<'a>(&'a self, k: &'a SimplicialComplex, j: usize) -> impl Iterator<Item = &'a Simplex> {
        k.simplices()
            .iter()
            .zip(&self.members[j])
            .filter(|(_, &m)| m)
            .map(|(s, _)| s)
    }

    /// Membership in `R = ∩ R_j`.
    pub fn intersection(&self) -> Vec<bool> {
        let n = self.members.first().map_or(0, Vec::len);
        (0..n)
            .map(|i| self.members.iter().all(|row| row[i]))
            .collect()
    }

    /// The subcomplex `A` of points with support in `R`.
    pub fn subcomplex(&self, k: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.members.is_empty() {
            return Ok(k.clone());
        }
        k.subcomplex(&self.intersection())
    }

    /// `Γ`, the minimal simplices outside `R`, and `C_j = {I' ∈ Γ : I' ∉ R_j}`.
    pub fn gamma_sets(&self, k: &SimplicialComplex) -> (Vec<Simplex>, Vec<Vec<Simplex>>) {
        let gamma = minimal_excluded(k, &self.intersection());
        let c = (0..self.len())
            .map(|j| {
                gamma
                    .iter()
                    .filter(|s| !self.members[j][k.index_of(s).expect("simplex of k")])
                    .cloned()
                    .collect()
            })
            .collect();
        (gamma, c)
    }
}

/// `R_1 = {I ∈ S : 2#I ≤ m + 3}`. For `m = 2q` the subcomplex `A` is the
/// `q`-skeleton.
pub fn skeleton_family(k: &SimplicialComplex, m: usize) -> CoverFamily {
    let row = k.simplices().iter().map(|s| 2 * s.card() <= m + 3).collect();
    CoverFamily {
        members: vec![row],
        kind: FamilyKind::Skeleton { m },
    }
}

/// `R_j = {I ∈ S : 2#(I ∩ V_j) < #V_j}` for a partition of the vertex set
/// into nonempty parts.
pub fn partition_family<S: AsRef<str>>(k: &SimplicialComplex, parts: &[Vec<S>]) -> Result<CoverFamily> {
    let mut seen = vec![false; k.vertex_count()];
    let mut part_sets = Vec::with_capacity(parts.len());
    for part in parts {
        if part.is_empty() {
            return Err(Error::InvalidArgument("empty part in partition".into()));
        }
        let mut ids = BTreeSet::new();
        for label in part {
            let v = k
                .vertex_index(label.as_ref())
                .ok_or_else(|| Error::UnknownVertex(label.as_ref().to_owned()))?;
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidArgument(format!(
                    "vertex `{}` appears in two parts",
                    label.as_ref()
                )));
            }
            ids.insert(v);
        }
        part_sets.push(ids);
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidArgument(format!(
            "vertex `{}` is not covered by the partition",
            k.label(v as u32)
        )));
    }
    let members = part_sets
        .iter()
        .map(|part| {
            k.simplices()
                .iter()
                .map(|s| 2 * s.vertices().iter().filter(|v| part.contains(v)).count() < part.len())
                .collect()
        })
        .collect();
    Ok(CoverFamily {
        members,
        kind: FamilyKind::Partition {
            parts: parts
                .iter()
                .map(|p| p.iter().map(|s| s.as_ref().to_owned()).collect())
                .collect(),
        },
    })
}

/// A member `R_j` and disjoint simplices `I`, `J` within the cardinality
/// bound, neither of which lies in `R_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverViolation {
    pub j: usize,
    pub first: Simplex,
    pub second: Simplex,
}

fn check_pair_budget(k: &SimplicialComplex) -> Result<()> {
    let n = k.len() as u128;
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs > PAIR_LIMIT {
        return Err(Error::ResourceCap {
            what: "simplex pairs",
            count: pairs,
            limit: PAIR_LIMIT,
        });
    }
    Ok(())
}

/// First violating `(j, I, J)` for a membership predicate, in the order
/// `j`, then `I`, then `J` (canonical simplex order, `I` before `J`).
fn first_violation(
    k: &SimplicialComplex,
    r: usize,
    bound: usize,
    member: impl Fn(usize, usize) -> bool + Sync + Send,
) -> Option<CoverViolation> {
    let simplices = k.simplices();
    (0..r).find_map(|j| {
        par::find_map_first(simplices.len(), |a| {
            let first = &simplices[a];
            if member(j, a) || first.card() + 1 > bound {
                return None;
            }
            simplices[a + 1..]
                .iter()
                .enumerate()
                .take_while(|(_, s)| first.card() + s.card() <= bound)
                .find(|(off, s)| !member(j, a + 1 + off) && first.is_disjoint(s))
                .map(|(_, s)| CoverViolation {
                    j,
                    first: first.clone(),
                    second: s.clone(),
                })
        })
    })
}

/// Exhaustively checks the hypothesis for every member of the family.
///
/// Returns `Ok(None)` when it holds, `Ok(Some(violation))` with the
/// lexicographically least counterexample otherwise.
pub fn verify_cover_hypothesis(
    k: &SimplicialComplex,
    family: &CoverFamily,
    m: usize,
    r: usize,
) -> Result<Option<CoverViolation>> {
    if family.len() != r {
        return Err(Error::InvalidArgument(format!(
            "family has {} members, r = {r}",
            family.len()
        )));
    }
    if family.members.iter().any(|row| row.len() != k.len()) {
        return Err(Error::InvalidArgument("family was built for a different complex".into()));
    }
    check_pair_budget(k)?;
    Ok(first_violation(k, r, m + r + 2, |j, idx| family.members[j][idx]))
}

/// Minimal elements (under inclusion) of `S − R`.
pub fn minimal_excluded(k: &SimplicialComplex, in_r: &[bool]) -> Vec<Simplex> {
    k.simplices()
        .iter()
        .enumerate()
        .filter(|&(i, _)| !in_r[i])
        .filter(|(_, s)| {
            k.simplices()
                .iter()
                .enumerate()
                .all(|(i, t)| in_r[i] || t == *s || !t.is_subset(s))
        })
        .map(|(_, s)| s.clone())
        .collect()
}

/// Outcome of [`gamma_cover_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCheck {
    /// `Γ = ∪ C_j`.
    pub covers: bool,
    /// Some `I', J' ∈ C_j` with `#I' + #J' ≤ m + r + 2` and `I' ∩ J' = ∅`.
    pub separation_violation: Option<CoverViolation>,
    /// Counterexample to the hypothesis for the induced
    /// `R_j = {I : I' ⊄ I for all I' ∈ C_j}`.
    pub induced_violation: Option<CoverViolation>,
}

impl GammaCheck {
    pub fn holds(&self) -> bool {
        self.covers && self.separation_violation.is_none() && self.induced_violation.is_none()
    }
}

/// Checks conditions (i) and (ii) on `C_1..C_r ⊆ Γ` literally, and the
/// cover hypothesis for the induced families.
pub fn gamma_cover_check(
    k: &SimplicialComplex,
    gamma: &[Simplex],
    c: &[Vec<Simplex>],
    m: usize,
    r: usize,
) -> Result<GammaCheck> {
    if c.len() != r {
        return Err(Error::InvalidArgument(format!("{} sets C_j given, r = {r}", c.len())));
    }
    let gamma_set: BTreeSet<&Simplex> = gamma.iter().collect();
    for s in gamma.iter().chain(c.iter().flatten()) {
        if !k.contains(s) {
            return Err(Error::InvalidArgument(format!("{:?} is not a simplex", k.labels_of(s))));
        }
    }
    if c.iter().flatten().any(|s| !gamma_set.contains(s)) {
        return Err(Error::InvalidArgument("C_j must be a subset of Γ".into()));
    }
    let union: BTreeSet<&Simplex> = c.iter().flatten().collect();
    let covers = union == gamma_set;

    let bound = m + r + 2;
    let separation_violation = c.iter().enumerate().find_map(|(j, cj)| {
        cj.iter().enumerate().find_map(|(a, first)| {
            cj[a + 1..]
                .iter()
                .find(|second| first.card() + second.card() <= bound && first.is_disjoint(second))
                .map(|second| CoverViolation {
                    j,
                    first: first.clone(),
                    second: second.clone(),
                })
        })
    });

    check_pair_budget(k)?;
    let induced: Vec<Vec<bool>> = c
        .iter()
        .map(|cj| {
            k.simplices()
                .iter()
                .map(|s| cj.iter().all(|excluded| !excluded.is_subset(s)))
                .collect()
        })
        .collect();
    let induced_violation = first_violation(k, r, bound, |j, idx| induced[j][idx]);
    Ok(GammaCheck {
        covers,
        separation_violation,
        induced_violation,
    })
}
