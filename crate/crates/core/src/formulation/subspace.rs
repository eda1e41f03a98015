use super::{Formulation, SubspaceExtension};
use crate::exactnum::{RatMatrix, RatVector, Rational};
use crate::Error;

/// Where a column of the transformed extension comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnOrigin {
    /// A variable of the input that already had a dedicated `y_j >= 0` row.
    Original(usize),
    /// Positive part of a split free variable.
    PositivePart(usize),
    /// Negative part of a split free variable.
    NegativePart(usize),
    /// Slack absorbing the inequality row with this index.
    Slack(usize),
}

/// Result of the symmetric-to-subspace transformation, with provenance for
/// every column of the output.
#[derive(Debug, Clone)]
pub struct SubspaceTransform {
    pub extension: SubspaceExtension,
    pub columns: Vec<ColumnOrigin>,
}

/// Rewrites a formulation as a subspace extension over at most `2*d + f`
/// nonnegative variables (`d` input variables, `f` inequality rows).
///
/// A variable is kept unsplit when the system carries a dedicated
/// nonnegativity row for it (a row `-y_j <= 0`); those rows are absorbed by
/// the orthant constraint. Every other variable is split into a difference
/// of two nonnegative parts, and every remaining inequality row gains one
/// slack. The projected feasible set is unchanged.
pub fn to_subspace_extension(f: &Formulation) -> Result<SubspaceTransform, Error> {
    let d = f.dim();
    let (ineq_lhs, ineq_rhs) = f.inequalities();
    let n_ineq = ineq_lhs.nrows();

    // A row is a dedicated nonnegativity row for j when it reads -y_j <= 0.
    let dedicated_for = |r: usize| -> Option<usize> {
        if !ineq_rhs[r].is_zero() {
            return None;
        }
        let row = ineq_lhs.row(r);
        let mut var = None;
        for j in 0..d {
            let c = &row[j];
            if c.is_zero() {
                continue;
            }
            if var.is_some() || *c != Rational::from(-1i64) {
                return None;
            }
            var = Some(j);
        }
        var
    };

    let mut keeps_sign = vec![false; d];
    let mut absorbed = vec![false; n_ineq];
    for r in 0..n_ineq {
        if let Some(j) = dedicated_for(r) {
            keeps_sign[j] = true;
        }
    }
    for r in 0..n_ineq {
        if let Some(j) = dedicated_for(r) {
            if keeps_sign[j] {
                absorbed[r] = true;
            }
        }
    }

    let mut columns = Vec::new();
    let mut plus_col = vec![0usize; d];
    let mut minus_col: Vec<Option<usize>> = vec![None; d];
    for j in 0..d {
        plus_col[j] = columns.len();
        if keeps_sign[j] {
            columns.push(ColumnOrigin::Original(j));
        } else {
            columns.push(ColumnOrigin::PositivePart(j));
            minus_col[j] = Some(columns.len());
            columns.push(ColumnOrigin::NegativePart(j));
        }
    }
    let mut slack_col = vec![None; n_ineq];
    for r in 0..n_ineq {
        if !absorbed[r] {
            slack_col[r] = Some(columns.len());
            columns.push(ColumnOrigin::Slack(r));
        }
    }
    let new_d = columns.len();

    let expand = |coeffs: &RatVector, slack: Option<usize>| -> RatVector {
        let mut row = RatVector::zero(new_d);
        for j in 0..d {
            let c = &coeffs[j];
            if c.is_zero() {
                continue;
            }
            row[plus_col[j]] = c.clone();
            if let Some(mc) = minus_col[j] {
                row[mc] = -c;
            }
        }
        if let Some(s) = slack {
            row[s] = Rational::one();
        }
        row
    };

    let (eq_lhs, eq_rhs) = f.equalities();
    let mut affine_lhs = RatMatrix::zero(0, new_d);
    let mut affine_rhs_entries = Vec::new();
    for i in 0..eq_lhs.nrows() {
        affine_lhs.push_row(expand(eq_lhs.row(i), None))?;
        affine_rhs_entries.push(eq_rhs[i].clone());
    }
    for r in 0..n_ineq {
        if absorbed[r] {
            continue;
        }
        affine_lhs.push_row(expand(ineq_lhs.row(r), slack_col[r]))?;
        affine_rhs_entries.push(ineq_rhs[r].clone());
    }

    let mut projection = RatMatrix::zero(0, new_d);
    for v in 0..f.target_dim() {
        projection.push_row(expand(f.projection().row(v), None))?;
    }

    let extension = SubspaceExtension::new(
        (affine_lhs, RatVector::new(affine_rhs_entries)),
        projection,
    )?;
    debug_assert!(extension.dim() <= 2 * d + n_ineq);
    Ok(SubspaceTransform { extension, columns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulation::build_birkhoff_extension;

    #[test]
    fn single_bounded_free_variable_becomes_three_columns() {
        // One free variable with x <= 1: split pair plus one slack.
        let f = Formulation::new(
            (RatMatrix::zero(0, 1), RatVector::zero(0)),
            (
                RatMatrix::from_int_rows(&[&[1]], 1),
                RatVector::from_ints(&[1]),
            ),
            RatMatrix::identity(1),
        )
        .unwrap();
        let t = to_subspace_extension(&f).unwrap();
        assert_eq!(t.extension.dim(), 3);
        assert_eq!(
            t.columns,
            vec![
                ColumnOrigin::PositivePart(0),
                ColumnOrigin::NegativePart(0),
                ColumnOrigin::Slack(0)
            ]
        );
    }

    #[test]
    fn birkhoff_keeps_the_z_block_unsplit() {
        let n = 3;
        let f = build_birkhoff_extension(n).unwrap();
        let t = to_subspace_extension(&f).unwrap();
        // All n^2 nonnegativity rows are absorbed, only the x block splits.
        assert_eq!(t.extension.dim(), n * n + 2 * n);
        assert!(t.extension.dim() <= 2 * f.dim() + f.inequalities().0.nrows());
        let slack_count = t
            .columns
            .iter()
            .filter(|c| matches!(c, ColumnOrigin::Slack(_)))
            .count();
        assert_eq!(slack_count, 0);
    }

    #[test]
    fn dimension_bound_holds_for_all_birkhoff_sizes() {
        for n in 1..=6 {
            let f = build_birkhoff_extension(n).unwrap();
            let t = to_subspace_extension(&f).unwrap();
            assert!(t.extension.dim() <= 2 * f.dim() + f.inequalities().0.nrows());
        }
    }
}
