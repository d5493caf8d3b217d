//! Feasibility oracle by brute-force basic-solution enumeration.
//!
//! `{z ≥ 0 : Az = b}` is nonempty iff some set of linearly independent
//! columns gives a nonnegative solution, and its lexicographic minimum is
//! one of these vertices.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Unique solution of `A_S z = b`, or `None` if the columns are dependent
/// or the system is inconsistent.
fn solve_on(a: &[Vec<BigRational>], b: &[BigRational], cols: &[usize]) -> Option<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| cols.iter().map(|&c| row[c].clone()).chain([rhs.clone()]).collect())
        .collect();
    let w = cols.len();
    let mut r = 0;
    for c in 0..w {
        let p = (r..m.len()).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &pivot;
        }
        let pr = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[w].is_zero()) {
        return None;
    }
    Some(m[..w].iter().map(|row| row[w].clone()).collect())
}

/// All basic feasible solutions (with repetition).
pub fn vertices(a: &[Vec<BigRational>], b: &[BigRational]) -> Vec<Vec<BigRational>> {
    let n = a[0].len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let cols: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
        if cols.len() > a.len() {
            continue;
        }
        if cols.is_empty() {
            if b.iter().all(Zero::is_zero) {
                out.push(vec![BigRational::zero(); n]);
            }
            continue;
        }
        if let Some(z) = solve_on(a, b, &cols) {
            if z.iter().all(|v| !v.is_negative()) {
                let mut full = vec![BigRational::zero(); n];
                for (&c, v) in cols.iter().zip(z) {
                    full[c] = v;
                }
                out.push(full);
            }
        }
    }
    out
}

pub fn lexicographic_min(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    vertices(a, b).into_iter().min()
}
