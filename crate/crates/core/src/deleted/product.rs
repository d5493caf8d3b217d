use std::collections::HashMap;

use crate::gf2::BitMatrix;
use crate::simplicial::SimplicialComplex;
use crate::{par, Error, Result};

/// Upper bound on the number of ordered simplex pairs examined while
/// enumerating cells.
pub const CELL_PAIR_LIMIT: u128 = 1 << 28;

/// An ordered pair of disjoint simplices, by canonical index in the
/// underlying complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub first: u32,
    pub second: u32,
}

impl Cell {
    pub fn swapped(self) -> Cell {
        Cell {
            first: self.second,
            second: self.first,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum DeletedMode<'a> {
    /// All ordered pairs of disjoint simplices.
    Full,
    /// Pairs with `dim σ + dim τ ≤ m`.
    Capped(usize),
    /// Pairs of simplices of a subcomplex, optionally capped.
    OfSubcomplex {
        subcomplex: &'a SimplicialComplex,
        cap: Option<usize>,
    },
}

/// Deleted product with its swap involution and mod-2 cellular boundary
/// `∂(σ, τ) = (∂σ, τ) + (σ, ∂τ)`.
#[derive(Clone, Debug)]
pub struct FreeInvolutionComplex {
    complex: SimplicialComplex,
    cap: Option<usize>,
    truncated_at: Option<usize>,
    cells: Vec<Vec<Cell>>,
    faces: Vec<Vec<Vec<u32>>>,
    swap: Vec<Vec<u32>>,
}

pub fn deleted_product(k: &SimplicialComplex, mode: DeletedMode<'_>) -> Result<FreeInvolutionComplex> {
    build(k, mode, None)
}

/// Materialises cells only up to `max_degree`. Cohomology in degrees below
/// `max_degree` and the question whether a given degree-`max_degree`
/// cochain is a coboundary are unaffected.
pub fn deleted_product_truncated(
    k: &SimplicialComplex,
    mode: DeletedMode<'_>,
    max_degree: usize,
) -> Result<FreeInvolutionComplex> {
    build(k, mode, Some(max_degree))
}

fn build(
    k: &SimplicialComplex,
    mode: DeletedMode<'_>,
    max_degree: Option<usize>,
) -> Result<FreeInvolutionComplex> {
    let (complex, cap) = match mode {
        DeletedMode::Full => (k.clone(), None),
        DeletedMode::Capped(m) => (k.clone(), Some(m)),
        DeletedMode::OfSubcomplex { subcomplex, cap } => {
            if !subcomplex.is_subcomplex_of(k) {
                return Err(Error::InvalidArgument("A is not a subcomplex of K".into()));
            }
            (subcomplex.clone(), cap)
        }
    };
    let n = complex.len() as u128;
    if n * n > CELL_PAIR_LIMIT {
        return Err(Error::ResourceCap {
            what: "ordered simplex pairs",
            count: n * n,
            limit: CELL_PAIR_LIMIT,
        });
    }
    let limit = match (cap, max_degree) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    // A materialisation limit at or above the cap truncates nothing.
    let truncated_at = max_degree.filter(|&t| cap.is_none_or(|c| t < c));

    let simplices = complex.simplices();
    let per_first: Vec<Vec<(usize, Cell)>> = par::map_range(simplices.len(), |a| {
        let s = &simplices[a];
        simplices
            .iter()
            .enumerate()
            .filter(|(b, t)| *b != a && s.is_disjoint(t))
            .map(|(b, t)| (s.dim() + t.dim(), b))
            .filter(|&(deg, _)| limit.is_none_or(|l| deg <= l))
            .map(|(deg, b)| {
                (
                    deg,
                    Cell {
                        first: a as u32,
                        second: b as u32,
                    },
                )
            })
            .collect()
    });
    let top = per_first.iter().flatten().map(|&(d, _)| d).max();
    let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); top.map_or(0, |t| t + 1)];
    for (deg, cell) in per_first.into_iter().flatten() {
        cells[deg].push(cell);
    }
    for level in &mut cells {
        level.sort_unstable();
    }

    let lookup: Vec<HashMap<Cell, u32>> = cells
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect())
        .collect();
    let swap = cells
        .iter()
        .zip(&lookup)
        .map(|(level, map)| level.iter().map(|c| map[&c.swapped()]).collect())
        .collect();
    let faces = cells
        .iter()
        .enumerate()
        .map(|(deg, level)| {
            if deg == 0 {
                return vec![Vec::new(); level.len()];
            }
            let below = &lookup[deg - 1];
            par::map(level, |cell| {
                let (s, t) = (&simplices[cell.first as usize], &simplices[cell.second as usize]);
                let idx = |x| complex.index_of(&x).expect("faces of simplices are simplices") as u32;
                s.boundary_faces()
                    .map(|f| Cell {
                        first: idx(f),
                        second: cell.second,
                    })
                    .chain(t.boundary_faces().map(|g| Cell {
                        first: cell.first,
                        second: idx(g),
                    }))
                    .map(|c| below[&c])
                    .collect()
            })
        })
        .collect();

    Ok(FreeInvolutionComplex {
        complex,
        cap,
        truncated_at,
        cells,
        faces,
        swap,
    })
}

impl FreeInvolutionComplex {
    /// The complex whose simplex pairs form the cells.
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    /// Degree past which cells were not materialised, if any.
    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    /// Number of degrees with cells, i.e. one more than the top degree.
    pub fn degrees(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self, degree: usize) -> &[Cell] {
        self.cells.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Indices (in degree `degree − 1`) of the boundary faces of a cell.
    pub fn faces(&self, degree: usize, cell: usize) -> &[u32] {
        &self.faces[degree][cell]
    }

    pub fn swap(&self, degree: usize, cell: usize) -> usize {
        self.swap[degree][cell] as usize
    }

    /// Boundary `∂_n : C_n → C_{n−1}` as a matrix with one column per
    /// `n`-cell.
    pub fn boundary_matrix(&self, degree: usize) -> BitMatrix {
        let rows = if degree == 0 { 0 } else { self.cells(degree - 1).len() };
        let mut m = BitMatrix::zeros(rows, self.cells(degree).len());
        if degree > 0 {
            for (j, faces) in self.faces[degree].iter().enumerate() {
                for &i in faces {
                    m.flip(i as usize, j);
                }
            }
        }
        m
    }

    /// Checks that the swap is a fixed-point-free involution commuting with
    /// the boundary, and that `∂∘∂ = 0`.
    pub fn check_structure(&self) -> Result<()> {
        for (deg, swaps) in self.swap.iter().enumerate() {
            for (i, &j) in swaps.iter().enumerate() {
                if j as usize == i || swaps[j as usize] as usize != i {
                    return Err(Error::NonFreeInvolution);
                }
                if deg > 0 {
                    let mut mine: Vec<u32> = self.faces[deg][i].iter().map(|&f| self.swap[deg - 1][f as usize]).collect();
                    let mut theirs = self.faces[deg][j as usize].clone();
                    mine.sort_unstable();
                    theirs.sort_unstable();
                    if mine != theirs {
                        return Err(Error::InvalidArgument("swap does not commute with the boundary".into()));
                    }
                }
            }
        }
        for deg in 2..self.degrees() {
            let composite = self.boundary_matrix(deg - 1).mul(&self.boundary_matrix(deg))?;
            if !composite.is_zero() {
                return Err(Error::InvalidArgument(format!("boundary squares to nonzero in degree {deg}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary_of_simplex, k5};

    #[test]
    fn k5_cell_counts() {
        let x = deleted_product(&k5(), DeletedMode::Full).unwrap();
        assert_eq!(x.cell_counts(), vec![20, 60, 30]);
        assert_eq!(x.total_cells(), 110);
        x.check_structure().unwrap();
    }

    #[test]
    fn triangle_boundary() {
        let x = deleted_product(&boundary_of_simplex(2).unwrap(), DeletedMode::Full).unwrap();
        assert_eq!(x.cell_counts(), vec![6, 6]);
    }

    #[test]
    fn capped_zero_keeps_vertex_pairs() {
        let x = deleted_product(&boundary_of_simplex(4).unwrap(), DeletedMode::Capped(0)).unwrap();
        assert_eq!(x.cell_counts(), vec![20]);
    }

    #[test]
    fn sphere_cell_count() {
        // Ordered pairs of disjoint nonempty subsets of 5 points, neither
        // the whole set: 3^5 − 2·2^5 + 1.
        let x = deleted_product(&boundary_of_simplex(4).unwrap(), DeletedMode::Full).unwrap();
        assert_eq!(x.total_cells(), 180);
        x.check_structure().unwrap();
    }

    #[test]
    fn subcomplex_mode() {
        let k = boundary_of_simplex(4).unwrap();
        let a = k5();
        let x = deleted_product(&k, DeletedMode::OfSubcomplex { subcomplex: &a, cap: None }).unwrap();
        assert_eq!(x.total_cells(), 110);
        let not_sub = boundary_of_simplex(5).unwrap();
        assert!(deleted_product(&k, DeletedMode::OfSubcomplex { subcomplex: &not_sub, cap: None }).is_err());
    }
}
