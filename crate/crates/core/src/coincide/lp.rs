//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems are in standard form: minimise `c·x` subject to `A x = b`,
//! `x ≥ 0`. Sizes here are tiny (a few dozen variables), so the tableau is
//! rebuilt freely.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<BigRational>, value: BigRational },
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &factor * pv;
                }
            }
        }
        self.basis[r] = col;
    }

    /// Runs simplex iterations for `cost` over the columns `< allowed`.
    /// Returns `false` if the objective is unbounded below.
    fn optimise(&mut self, cost: &[BigRational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced = self
                    .rows
                    .iter()
                    .zip(&self.basis)
                    .fold(cost[j].clone(), |acc, (row, &b)| acc - &cost[b] * &row[j]);
                reduced.is_negative()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, col);
        }
    }
}

pub(crate) fn minimize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == m);
    let width = n + m;
    let rows = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let sign = if bi.is_negative() { -BigRational::one() } else { BigRational::one() };
            let mut out: Vec<BigRational> = row.iter().map(|v| v * &sign).collect();
            out.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
            out.push(bi * &sign);
            out
        })
        .collect();
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        width,
    };

    let phase1: Vec<BigRational> = (0..width)
        .map(|j| if j < n { BigRational::zero() } else { BigRational::one() })
        .collect();
    t.optimise(&phase1, width);
    let infeasibility: BigRational = t
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &bcol)| bcol >= n)
        .map(|(i, _)| t.rhs(i).clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2: Vec<BigRational> = c.to_vec();
    phase2.extend((0..m).map(|_| BigRational::zero()));
    if !t.optimise(&phase2, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bcol) in t.basis.iter().enumerate() {
        x[bcol] = t.rhs(i).clone();
    }
    let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { x, value }
}

/// Some feasible point, or `None`.
pub(crate) fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let zero = vec![BigRational::zero(); a.first().map_or(0, Vec::len)];
    match minimize(a, b, &zero) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

/// Lexicographically least point of `{A x = b, x ≥ 0}`, found by minimising
/// each coordinate in turn with the earlier ones pinned. It is a vertex of
/// the feasible polytope.
pub(crate) fn lexicographic_min(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.first().map_or(0, Vec::len);
    feasible_point(a, b)?;
    let mut rows = a.to_vec();
    let mut rhs = b.to_vec();
    let mut fixed = Vec::with_capacity(n);
    for k in 0..n {
        let cost: Vec<BigRational> = (0..n)
            .map(|j| if j == k { BigRational::one() } else { BigRational::zero() })
            .collect();
        let LpOutcome::Optimal { value, .. } = minimize(&rows, &rhs, &cost) else {
            unreachable!("coordinates are bounded below and the system is feasible");
        };
        rows.push(cost);
        rhs.push(value.clone());
        fixed.push(value);
    }
    Some(fixed)
}
