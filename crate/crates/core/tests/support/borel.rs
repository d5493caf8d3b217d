//! Index oracle from the Borel construction.
//!
//! For a free involution `g` on a cell complex `X`, `H*(X/G)` is the
//! cohomology of the total complex `⊕_k C^{n−k}(X)` with differential
//! `δ_X` inside a column plus `φ ↦ φ + g*φ` from column `k` to `k + 1`.
//! `e(λ)^m` is the class of the unit 0-cochain in column `m`. Matrices are
//! dense bytes and cells are rebuilt from scratch, sharing nothing with the
//! library beyond the simplex list.

#![allow(dead_code)]

use std::collections::HashMap;

use kampen_core::simplicial::SimplicialComplex;

pub struct DenseDeleted {
    /// `cells[n]`: ordered disjoint pairs of simplex indices of total dim `n`.
    pub cells: Vec<Vec<(usize, usize)>>,
    lookup: Vec<HashMap<(usize, usize), usize>>,
    /// Codimension-one faces of each cell, by index one degree down.
    faces: Vec<Vec<Vec<usize>>>,
}

impl DenseDeleted {
    pub fn new(k: &SimplicialComplex, cap: Option<usize>) -> Self {
        let s = k.simplices();
        let position: HashMap<Vec<u32>, usize> = s.iter().enumerate().map(|(i, x)| (x.vertices().to_vec(), i)).collect();
        let mut cells: Vec<Vec<(usize, usize)>> = Vec::new();
        for a in 0..s.len() {
            for b in 0..s.len() {
                let (va, vb) = (s[a].vertices(), s[b].vertices());
                if va.iter().any(|v| vb.contains(v)) {
                    continue;
                }
                let n = va.len() + vb.len() - 2;
                if cap.is_some_and(|c| n > c) {
                    continue;
                }
                if cells.len() <= n {
                    cells.resize(n + 1, Vec::new());
                }
                cells[n].push((a, b));
            }
        }
        let lookup: Vec<HashMap<(usize, usize), usize>> = cells
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, &c)| (c, i)).collect())
            .collect();
        let drop_one = |v: &[u32]| -> Vec<usize> {
            if v.len() < 2 {
                return Vec::new();
            }
            (0..v.len())
                .map(|skip| {
                    let f: Vec<u32> = v.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                    position[&f]
                })
                .collect()
        };
        let faces = cells
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .map(|&(a, b)| {
                        if n == 0 {
                            return Vec::new();
                        }
                        let mut out = Vec::new();
                        for fa in drop_one(s[a].vertices()) {
                            out.push(lookup[n - 1][&(fa, b)]);
                        }
                        for fb in drop_one(s[b].vertices()) {
                            out.push(lookup[n - 1][&(a, fb)]);
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        Self { cells, lookup, faces }
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    fn count(&self, n: usize) -> usize {
        self.cells.get(n).map_or(0, Vec::len)
    }

    fn swap(&self, n: usize, i: usize) -> usize {
        let (a, b) = self.cells[n][i];
        self.lookup[n][&(b, a)]
    }

    /// Whether `e^m` vanishes, decided in the Borel complex.
    pub fn euler_power_vanishes(&self, m: usize) -> bool {
        // Unknown blocks: column k holds C^{m−1−k}, k = 0..m−1.
        // Equation blocks: column k holds C^{m−k}, k = 0..=m.
        let mut unknown_offset = Vec::new();
        let mut total = 0;
        for k in 0..m {
            unknown_offset.push(total);
            total += self.count(m - 1 - k);
        }
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for k in 0..=m {
            let n = m - k;
            for c in 0..self.count(n) {
                let mut row = vec![0u8; total + 1];
                if k < m && n > 0 {
                    for &face in &self.faces[n][c] {
                        row[unknown_offset[k] + face] ^= 1;
                    }
                }
                if k > 0 {
                    row[unknown_offset[k - 1] + c] ^= 1;
                    row[unknown_offset[k - 1] + self.swap(n, c)] ^= 1;
                }
                if k == m && n == 0 {
                    row[total] = 1;
                }
                rows.push(row);
            }
        }
        consistent(rows, total)
    }

    /// Largest `m` with `e^m ≠ 0`.
    pub fn index(&self) -> Option<usize> {
        let top = self.dim()?;
        let mut last = None;
        for m in 0..=top + 1 {
            if self.euler_power_vanishes(m) {
                return last;
            }
            last = Some(m);
        }
        panic!("e^(dim + 1) must vanish");
    }
}

/// Gaussian elimination on an augmented system; true iff solvable.
fn consistent(mut rows: Vec<Vec<u8>>, cols: usize) -> bool {
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rows[rank..].iter().all(|r| r[cols] == 0)
}
