use serde::Serialize;

use super::product::FreeInvolutionComplex;
use crate::gf2::{BitMatrix, BitVec};
use crate::{par, Error, Result};

/// Orbit complex `Y = X/G` with the transfer and projection maps of the
/// double cover.
///
/// Each orbit is represented by its lexicographically least cell, which is
/// also the default section used to lift cochains.
#[derive(Clone, Debug)]
pub struct QuotientComplex {
    x: FreeInvolutionComplex,
    reps: Vec<Vec<u32>>,
    orbit_of: Vec<Vec<u32>>,
    /// `coboundary[n] : C^n(Y) → C^{n+1}(Y)`, rows indexed by `(n+1)`-orbits.
    coboundary: Vec<BitMatrix>,
}

/// A GF(2) cochain on the orbit complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    pub degree: usize,
    pub bits: BitVec,
}

impl Cochain {
    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }
}

impl QuotientComplex {
    pub fn new(x: FreeInvolutionComplex) -> Result<Self> {
        let mut reps = Vec::with_capacity(x.degrees());
        let mut orbit_of = Vec::with_capacity(x.degrees());
        for deg in 0..x.degrees() {
            let n = x.cells(deg).len();
            let mut orbit = vec![u32::MAX; n];
            let mut level = Vec::with_capacity(n / 2);
            for i in 0..n {
                let j = x.swap(deg, i);
                if j == i {
                    return Err(Error::NonFreeInvolution);
                }
                // Cells are sorted, so the smaller index is the lesser cell.
                if i < j {
                    orbit[i] = level.len() as u32;
                    orbit[j] = level.len() as u32;
                    level.push(i as u32);
                }
            }
            reps.push(level);
            orbit_of.push(orbit);
        }
        let coboundary = (1..x.degrees())
            .map(|deg| {
                let rows = par::map(&reps[deg], |&rep| {
                    x.faces(deg, rep as usize)
                        .iter()
                        .map(|&f| orbit_of[deg - 1][f as usize] as usize)
                        .collect::<Vec<_>>()
                });
                BitMatrix::from_sparse_rows(reps[deg - 1].len(), &rows)
            })
            .collect();
        Ok(Self {
            x,
            reps,
            orbit_of,
            coboundary,
        })
    }

    pub fn cover(&self) -> &FreeInvolutionComplex {
        &self.x
    }

    pub fn degrees(&self) -> usize {
        self.reps.len()
    }

    pub fn orbit_count(&self, degree: usize) -> usize {
        self.reps.get(degree).map_or(0, Vec::len)
    }

    pub fn orbit_counts(&self) -> Vec<usize> {
        self.reps.iter().map(Vec::len).collect()
    }

    /// Representative cell (index in `X`) of an orbit.
    pub fn representative(&self, degree: usize, orbit: usize) -> usize {
        self.reps[degree][orbit] as usize
    }

    pub fn orbit_of(&self, degree: usize, cell: usize) -> usize {
        self.orbit_of[degree][cell] as usize
    }

    /// `δ : C^n(Y) → C^{n+1}(Y)`. Empty when either degree has no cells.
    pub fn coboundary_matrix(&self, degree: usize) -> BitMatrix {
        self.coboundary
            .get(degree)
            .cloned()
            .unwrap_or_else(|| BitMatrix::zeros(self.orbit_count(degree + 1), self.orbit_count(degree)))
    }

    pub fn coboundary(&self, c: &Cochain) -> Result<Cochain> {
        let bits = match self.coboundary.get(c.degree) {
            Some(m) => m.mul_vec(&c.bits)?,
            None => BitVec::zeros(self.orbit_count(c.degree + 1)),
        };
        Ok(Cochain {
            degree: c.degree + 1,
            bits,
        })
    }

    /// The constant cochain 1 in degree 0.
    pub fn unit(&self) -> Cochain {
        Cochain {
            degree: 0,
            bits: BitVec::ones(self.orbit_count(0)),
        }
    }

    /// Transfer `C_n(Y) → C_n(X)`, `[c] ↦ c + gc` (one column per orbit).
    pub fn transfer_matrix(&self, degree: usize) -> BitMatrix {
        let cells = self.x.cells(degree).len();
        let mut m = BitMatrix::zeros(cells, self.orbit_count(degree));
        for (o, &rep) in self.reps[degree].iter().enumerate() {
            m.set(rep as usize, o, true);
            m.set(self.x.swap(degree, rep as usize), o, true);
        }
        m
    }

    /// Projection `C_n(X) → C_n(Y)`, `c ↦ [c]` (one column per cell).
    pub fn projection_matrix(&self, degree: usize) -> BitMatrix {
        let cells = self.x.cells(degree).len();
        let mut m = BitMatrix::zeros(self.orbit_count(degree), cells);
        for cell in 0..cells {
            m.set(self.orbit_of(degree, cell), cell, true);
        }
        m
    }

    /// Exactness of `0 → C_n(Y) → C_n(X) → C_n(Y) → 0` in every degree:
    /// transfer injective, projection surjective, and their ranks add up to
    /// the number of cells with `π ∘ tr = 0`.
    pub fn check_exactness(&self) -> bool {
        (0..self.degrees()).all(|deg| {
            let tr = self.transfer_matrix(deg);
            let pr = self.projection_matrix(deg);
            let orbits = self.orbit_count(deg);
            let composite_zero = pr.mul(&tr).is_ok_and(|c| c.is_zero());
            composite_zero
                && tr.rank() == orbits
                && pr.rank() == orbits
                && tr.rank() + pr.rank() == self.x.cells(deg).len()
        })
    }

    /// Whether `c` is a coboundary, i.e. zero in cohomology.
    pub fn is_coboundary(&self, c: &Cochain) -> Result<bool> {
        if c.degree == 0 {
            return Ok(c.is_zero());
        }
        Ok(self.coboundary_matrix(c.degree - 1).solve(&c.bits)?.is_some())
    }
}

/// Connecting homomorphism `H^n(Y) → H^{n+1}(Y)` of the double-cover
/// sequence, which is cup product with `e(λ)`.
///
/// The cocycle is lifted to `X` on the section of orbit representatives,
/// its coboundary is taken in `X`, and the result is read off on
/// representatives.
pub fn smith_connecting(y: &QuotientComplex, c: &Cochain) -> Result<Cochain> {
    smith_connecting_with_section(y, c, |_, _| false)
}

/// As [`smith_connecting`], lifting orbit `o` of degree `n` to the swapped
/// representative whenever `flip(n, o)` is true. Different sections give
/// cohomologous results.
pub fn smith_connecting_with_section(
    y: &QuotientComplex,
    c: &Cochain,
    flip: impl Fn(usize, usize) -> bool + Sync + Send,
) -> Result<Cochain> {
    let n = c.degree;
    if c.bits.len() != y.orbit_count(n) {
        return Err(Error::ShapeMismatch {
            expected: y.orbit_count(n),
            found: c.bits.len(),
        });
    }
    if let Some(t) = y.x.truncated_at() {
        if n + 1 > t {
            return Err(Error::InsufficientDegree {
                requested: n + 1,
                available: t,
            });
        }
    }
    if !y.coboundary(c)?.is_zero() {
        return Err(Error::NotCocycle);
    }
    let target = y.orbit_count(n + 1);
    if target == 0 {
        return Ok(Cochain {
            degree: n + 1,
            bits: BitVec::zeros(0),
        });
    }
    let lifted_cells = y.x.cells(n).len();
    let mut lift = vec![false; lifted_cells];
    for o in c.bits.iter_ones() {
        let rep = y.representative(n, o);
        let chosen = if flip(n, o) { y.x.swap(n, rep) } else { rep };
        lift[chosen] = true;
    }
    let bits = par::map(&y.reps[n + 1], |&rep| {
        y.x.faces(n + 1, rep as usize)
            .iter()
            .filter(|&&f| lift[f as usize])
            .count()
            % 2
            == 1
    });
    Ok(Cochain {
        degree: n + 1,
        bits: BitVec::from_bools(&bits),
    })
}

/// Cocycle representative of `e(λ)^m`.
pub fn euler_power(y: &QuotientComplex, m: usize) -> Result<Cochain> {
    let mut c = y.unit();
    for _ in 0..m {
        c = smith_connecting(y, &c)?;
    }
    Ok(c)
}

fn check_degree(y: &QuotientComplex, m: usize) -> Result<()> {
    match y.x.truncated_at() {
        Some(t) if m > t => Err(Error::InsufficientDegree {
            requested: m,
            available: t,
        }),
        _ => Ok(()),
    }
}

/// Whether `e(λ)^m ∈ H^m(Y)` is nonzero.
pub fn euler_power_nonzero(y: &QuotientComplex, m: usize) -> Result<bool> {
    check_degree(y, m)?;
    let e = euler_power(y, m)?;
    if e.is_zero() {
        return Ok(false);
    }
    Ok(!y.is_coboundary(&e)?)
}

/// Outcome of an index computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    /// Largest `m` with `e(λ)^m ≠ 0`; `None` for an empty complex.
    pub index: Option<usize>,
    /// Set when cells were materialised only up to the index, so the true
    /// index may be larger.
    pub lower_bound_only: bool,
    pub cells_per_degree: Vec<usize>,
    pub orbits_per_degree: Vec<usize>,
    /// Cocycle representatives of `e(λ)^m` for `m = 0..=index`, as bit
    /// strings over the orbit cells.
    pub representatives: Vec<String>,
}

/// Largest `m` with `e(λ)^m ≠ 0`.
///
/// Powers are computed incrementally; once one vanishes all higher powers
/// vanish too, so the search stops there.
pub fn z2_index(y: &QuotientComplex) -> Result<IndexReport> {
    let mut index = None;
    let mut representatives = Vec::new();
    let mut current = y.unit();
    let limit = y.x.truncated_at();
    let mut m = 0;
    loop {
        if current.is_zero() || y.is_coboundary(&current)? {
            break;
        }
        index = Some(m);
        representatives.push(current.bits.to_bit_string());
        if limit == Some(m) || m + 1 >= y.degrees() {
            break;
        }
        current = smith_connecting(y, &current)?;
        m += 1;
    }
    let lower_bound_only = matches!((limit, index), (Some(t), Some(i)) if i == t);
    Ok(IndexReport {
        index,
        lower_bound_only,
        cells_per_degree: y.x.cell_counts(),
        orbits_per_degree: y.orbit_counts(),
        representatives,
    })
}
