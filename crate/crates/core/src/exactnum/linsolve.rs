use super::{RatMatrix, RatVector, Rational};
use crate::Error;

/// Outcome of exact Gaussian elimination on `A·y = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    /// A particular solution together with a basis of the nullspace of `A`.
    /// The full solution set is `particular + span(nullspace)`.
    Solution {
        particular: RatVector,
        nullspace: Vec<RatVector>,
    },
    Inconsistent,
}

/// Solves `A·y = b` exactly by Gaussian elimination.
///
/// Free variables are set to zero in the particular solution; the nullspace
/// basis has one vector per free variable.
pub fn solve_linear_system(a: &RatMatrix, b: &RatVector) -> Result<LinearSolution, Error> {
    if a.nrows() != b.dim() {
        return Err(Error::dim(format!(
            "system has {} rows but rhs has dim {}",
            a.nrows(),
            b.dim()
        )));
    }
    let nrows = a.nrows();
    let ncols = a.ncols();

    // Augmented working copy [A | b].
    let mut work: Vec<Vec<Rational>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<Rational> = a.row(i).entries().to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pivot_row);
        let inv = work[rank][col].recip().expect("pivot is nonzero");
        for entry in work[rank].iter_mut() {
            if !entry.is_zero() {
                *entry = &*entry * &inv;
            }
        }
        for r in 0..nrows {
            if r != rank && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                for c in col..=ncols {
                    if !work[rank][c].is_zero() {
                        let delta = &work[rank][c] * &factor;
                        work[r][c] -= &delta;
                    }
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }

    // Inconsistency: a zero row of A with nonzero rhs.
    for row in work.iter().skip(rank) {
        if !row[ncols].is_zero() {
            return Ok(LinearSolution::Inconsistent);
        }
    }

    let mut particular = RatVector::zero(ncols);
    for (r, &col) in pivot_cols.iter().enumerate() {
        particular[col] = work[r][ncols].clone();
    }

    let is_pivot = {
        let mut flags = vec![false; ncols];
        for &c in &pivot_cols {
            flags[c] = true;
        }
        flags
    };
    let mut nullspace = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = RatVector::zero(ncols);
        v[free] = Rational::one();
        for (r, &col) in pivot_cols.iter().enumerate() {
            v[col] = -&work[r][free];
        }
        nullspace.push(v);
    }

    Ok(LinearSolution::Solution {
        particular,
        nullspace,
    })
}
