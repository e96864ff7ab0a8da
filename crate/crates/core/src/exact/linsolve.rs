//! Exact Gauss-Jordan elimination over a quadratic field.

use crate::error::{Error, Result};
use crate::exact::quadext::{Disc, QuadExt};

/// Solution set of `M x = rhs`: one particular solution plus a basis of the
/// homogeneous nullspace. Affine dimension equals `nullspace.len()`.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Vec<QuadExt>,
    pub nullspace: Vec<Vec<QuadExt>>,
}

/// Solves an arbitrary (possibly overdetermined) exact linear system.
pub fn solve_affine(rows: &[Vec<QuadExt>], rhs: &[QuadExt], disc: Disc) -> Result<AffineSolution> {
    assert_eq!(rows.len(), rhs.len(), "row/rhs count mismatch");
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<QuadExt>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), n_cols, "ragged matrix");
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();

    let n_rows = aug.len();
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0usize;

    for col in 0..n_cols {
        let Some(p) = (pivot_row..n_rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, p);
        let inv = aug[pivot_row][col].try_inverse()?;
        for e in aug[pivot_row].iter_mut() {
            *e = &*e * &inv;
        }
        for r in 0..n_rows {
            if r != pivot_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in 0..=n_cols {
                    let delta = &factor * &aug[pivot_row][c];
                    aug[r][c] = &aug[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == n_rows {
            break;
        }
    }

    // a fully zeroed row with nonzero rhs means no solution
    for r in pivot_row..n_rows {
        if !aug[r][n_cols].is_zero() {
            return Err(Error::InconsistentSystem);
        }
    }

    let zero = QuadExt::zero(disc);
    let mut particular = vec![zero.clone(); n_cols];
    for (k, &col) in pivot_cols.iter().enumerate() {
        particular[col] = aug[k][n_cols].clone();
    }

    let free_cols: Vec<usize> = (0..n_cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut nullspace = Vec::with_capacity(free_cols.len());
    for &free in &free_cols {
        let mut v = vec![zero.clone(); n_cols];
        v[free] = QuadExt::one(disc);
        for (k, &col) in pivot_cols.iter().enumerate() {
            v[col] = -&aug[k][free];
        }
        nullspace.push(v);
    }

    Ok(AffineSolution { particular, nullspace })
}
