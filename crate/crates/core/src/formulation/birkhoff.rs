use super::{Formulation, SubspaceExtension};
use crate::exactnum::{RatMatrix, RatVector, Rational};
use crate::Error;

/// Column of `x_v` in the Birkhoff formulation (0-based `v < n`).
pub fn x_index(v: usize) -> usize {
    v
}

/// Column of `z_{i,v}` in the Birkhoff formulation: the `x` block comes
/// first, then `z` row-major.
pub fn z_index(n: usize, i: usize, v: usize) -> usize {
    n + i * n + v
}

/// Column of `z_{i,v}` in the z-only extension (no `x` block).
pub fn z_only_index(n: usize, i: usize, v: usize) -> usize {
    i * n + v
}

/// The Birkhoff extended formulation of `Π_n` over `x` and `z` variables:
///
/// ```text
///   sum_i (i+1) z_{i,v} = x_v     for all v      (n linking rows)
///   sum_v z_{i,v}       = 1       for all i      (n row-sum rows)
///   sum_i z_{i,v}       = 1       for all v      (n column-sum rows)
///   z_{i,v}            >= 0       for all i, v   (n^2 rows)
/// ```
///
/// `d = n^2 + n` variables; the projection selects the `x` block.
pub fn build_birkhoff_extension(n: usize) -> Result<Formulation, Error> {
    if n == 0 {
        return Err(Error::PreconditionViolated {
            condition: "Birkhoff formulation needs n >= 1".into(),
        });
    }
    let d = n * n + n;

    let mut eq_lhs = RatMatrix::zero(3 * n, d);
    let mut eq_rhs = RatVector::zero(3 * n);
    for v in 0..n {
        eq_lhs.set(v, x_index(v), Rational::from(-1i64));
        for i in 0..n {
            eq_lhs.set(v, z_index(n, i, v), Rational::from(i + 1));
        }
    }
    for i in 0..n {
        let row = n + i;
        for v in 0..n {
            eq_lhs.set(row, z_index(n, i, v), Rational::one());
        }
        eq_rhs[row] = Rational::one();
    }
    for v in 0..n {
        let row = 2 * n + v;
        for i in 0..n {
            eq_lhs.set(row, z_index(n, i, v), Rational::one());
        }
        eq_rhs[row] = Rational::one();
    }

    let mut ineq_lhs = RatMatrix::zero(n * n, d);
    let ineq_rhs = RatVector::zero(n * n);
    for i in 0..n {
        for v in 0..n {
            ineq_lhs.set(i * n + v, z_index(n, i, v), Rational::from(-1i64));
        }
    }

    let mut projection = RatMatrix::zero(n, d);
    for v in 0..n {
        projection.set(v, x_index(v), Rational::one());
    }

    Formulation::new((eq_lhs, eq_rhs), (ineq_lhs, ineq_rhs), projection)
}

/// The z-only Birkhoff subspace extension: doubly stochastic matrices with
/// the value-weighted projection `p(z)_v = sum_i (i+1) z_{i,v}`.
pub fn birkhoff_z_extension(n: usize) -> Result<SubspaceExtension, Error> {
    if n == 0 {
        return Err(Error::PreconditionViolated {
            condition: "Birkhoff extension needs n >= 1".into(),
        });
    }
    let d = n * n;

    let mut affine_lhs = RatMatrix::zero(2 * n, d);
    let mut affine_rhs = RatVector::zero(2 * n);
    for i in 0..n {
        for v in 0..n {
            affine_lhs.set(i, z_only_index(n, i, v), Rational::one());
        }
        affine_rhs[i] = Rational::one();
    }
    for v in 0..n {
        let row = n + v;
        for i in 0..n {
            affine_lhs.set(row, z_only_index(n, i, v), Rational::one());
        }
        affine_rhs[row] = Rational::one();
    }

    let mut projection = RatMatrix::zero(n, d);
    for v in 0..n {
        for i in 0..n {
            projection.set(v, z_only_index(n, i, v), Rational::from(i + 1));
        }
    }

    SubspaceExtension::new((affine_lhs, affine_rhs), projection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{lambda_vertex, Permutation};

    #[test]
    fn structural_counts() {
        for n in 1..=8 {
            let f = build_birkhoff_extension(n).unwrap();
            assert_eq!(f.dim(), n * n + n, "n = {n}");
            assert_eq!(f.equalities().0.nrows(), 3 * n);
            assert_eq!(f.inequalities().0.nrows(), n * n);
            assert_eq!(f.target_dim(), n);
        }
        assert!(build_birkhoff_extension(0).is_err());
    }

    #[test]
    fn n_equals_one_forces_the_point() {
        let f = build_birkhoff_extension(1).unwrap();
        assert_eq!(f.dim(), 2);
        // Rows: -x1 + z11 = 0, z11 = 1 (twice) => x1 = 1.
        let y = RatVector::from_ints(&[1, 1]);
        let (a, b) = f.equalities();
        assert_eq!(&a.mul_vec(&y).unwrap(), b);
        assert_eq!(f.project(&y).unwrap(), RatVector::from_ints(&[1]));
    }

    #[test]
    fn permutation_matrices_map_to_vertices() {
        // The z-only extension sends each permutation matrix to the matching
        // permutahedron vertex.
        for n in 2..=4 {
            let e = birkhoff_z_extension(n).unwrap();
            for zeta in Permutation::enumerate(n).unwrap() {
                let mut z = RatVector::zero(n * n);
                for i in 0..n {
                    z[z_only_index(n, i, zeta.apply(i))] = Rational::one();
                }
                assert!(e.contains(&z).unwrap());
                assert_eq!(e.project(&z).unwrap(), lambda_vertex(&zeta));
            }
        }
    }

    #[test]
    fn two_by_two_integral_points_are_the_permutation_matrices() {
        // Enumerate all 0/1 2x2 matrices by hand; exactly two are doubly
        // stochastic, and they project to the two vertices of Π_2.
        let e = birkhoff_z_extension(2).unwrap();
        let mut projections = Vec::new();
        for bits in 0..16u32 {
            let z: RatVector = (0..4)
                .map(|k| Rational::from(u64::from(bits >> k & 1) as i64))
                .collect();
            if e.contains(&z).unwrap() {
                projections.push(e.project(&z).unwrap());
            }
        }
        projections.sort_by(|a, b| a.entries().cmp(b.entries()));
        assert_eq!(
            projections,
            vec![RatVector::from_ints(&[1, 2]), RatVector::from_ints(&[2, 1])]
        );
    }

    #[test]
    fn z_extension_dimension_dominates_the_variable_bound() {
        // d = n^2 >= n(n-1)/2 for all n.
        for n in 1..=10 {
            assert!(2 * n * n >= n * (n - 1));
        }
    }
}
