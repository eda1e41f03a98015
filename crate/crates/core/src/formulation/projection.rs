use rayon::prelude::*;

use super::ExtensionView;
use crate::exactnum::{solve_exact_lp, LpResult, LpSense, RatMatrix, RatVector, Rational};
use crate::polytope::{permutahedron_vertices, FacetId, FacetSystem};
use crate::Error;

/// Why a facet-validity check failed.
#[derive(Debug, Clone, PartialEq)]
pub enum FacetCheckFailure {
    MinimumTooLow { minimum: Rational, required: Rational },
    Unbounded { required: Rational },
    Infeasible,
}

/// Outcome of [`verify_projection`]: exact evidence that the projection of
/// the extension equals the target polytope, or the list of failures.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionReport {
    pub n: usize,
    pub vertices_total: usize,
    /// Lexicographic ranks of target vertices with no feasible preimage.
    pub uncovered_vertices: Vec<usize>,
    /// The coordinate-sum equation failed to hold identically on p(Q).
    pub equation_failures: Vec<String>,
    pub facet_failures: Vec<(FacetId, FacetCheckFailure)>,
}

impl ProjectionReport {
    pub fn passed(&self) -> bool {
        self.uncovered_vertices.is_empty()
            && self.equation_failures.is_empty()
            && self.facet_failures.is_empty()
    }
}

impl std::fmt::Display for ProjectionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "vertex coverage: {}/{} vertices have preimages",
            self.vertices_total - self.uncovered_vertices.len(),
            self.vertices_total
        )?;
        for rank in &self.uncovered_vertices {
            writeln!(f, "  uncovered vertex rank {rank}")?;
        }
        for msg in &self.equation_failures {
            writeln!(f, "equation failure: {msg}")?;
        }
        for (id, failure) in &self.facet_failures {
            let what = match failure {
                FacetCheckFailure::MinimumTooLow { minimum, required } => {
                    format!("minimum {minimum} < required {required}")
                }
                FacetCheckFailure::Unbounded { required } => {
                    format!("unbounded below, required {required}")
                }
                FacetCheckFailure::Infeasible => "extension is empty".into(),
            };
            writeln!(f, "facet failure at {}: {what}", id.describe(self.n))?;
        }
        if self.passed() {
            writeln!(f, "projection verified: p(Q) = Π_{}", self.n)?;
        }
        Ok(())
    }
}

/// Certifies `p(Q) = Π_n` by exact LPs in both directions:
///
/// - coverage: every one of the `n!` target vertices has a feasible
///   preimage (so `Π_n ⊆ p(Q)` by convexity),
/// - validity: the coordinate-sum equation holds identically on `p(Q)` and
///   every facet inequality is respected by `min { c·p(y) : y ∈ Q }`
///   (so `p(Q) ⊆ Π_n`).
pub fn verify_projection<E: ExtensionView + Sync>(
    extension: &E,
    target: &FacetSystem,
) -> Result<ProjectionReport, Error> {
    let n = target.n();
    if extension.target_dim() != n {
        return Err(Error::dim(format!(
            "extension projects to dim {}, target is Π_{n}",
            extension.target_dim()
        )));
    }
    let d = extension.dim();
    let (eq_lhs, eq_rhs) = extension.equality_rows();
    let empty = (RatMatrix::zero(0, d), RatVector::zero(0));
    let (ineq_lhs, ineq_rhs) = extension.inequality_rows().unwrap_or((&empty.0, &empty.1));
    let nonneg = extension.nonneg_mask();
    let p = extension.projection_matrix();
    let vertices = permutahedron_vertices(n)?;

    // Coverage direction: one feasibility LP per vertex, the projection rows
    // pinned to the vertex coordinates.
    let uncovered_vertices: Vec<usize> = vertices
        .par_iter()
        .enumerate()
        .map(|(rank, x)| {
            let mut pinned_lhs = eq_lhs.clone();
            let mut pinned_rhs: Vec<Rational> = eq_rhs.entries().to_vec();
            for v in 0..n {
                pinned_lhs.push_row(p.row(v).clone())?;
                pinned_rhs.push(x[v].clone());
            }
            let pinned_rhs = RatVector::new(pinned_rhs);
            let result = solve_exact_lp(
                &RatVector::zero(d),
                (&pinned_lhs, &pinned_rhs),
                (ineq_lhs, ineq_rhs),
                &nonneg,
                LpSense::Minimize,
            )?;
            Ok(match result {
                LpResult::Optimal { .. } => None,
                LpResult::Infeasible => Some(rank),
                LpResult::Unbounded => unreachable!("feasibility LP has a zero objective"),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?
        .into_iter()
        .flatten()
        .collect();

    // Objective in y-space for a cost vector c in x-space: c^T P.
    let pulled_back = |coeffs: &RatVector| -> RatVector {
        (0..d)
            .map(|j| {
                let mut acc = Rational::zero();
                for v in 0..n {
                    if !coeffs[v].is_zero() && !p.entry(v, j).is_zero() {
                        acc += &(&coeffs[v] * p.entry(v, j));
                    }
                }
                acc
            })
            .collect()
    };

    let mut equation_failures = Vec::new();
    let (eq_coeffs, eq_value) = target.equation();
    let eq_objective = pulled_back(eq_coeffs);
    for (sense, name) in [(LpSense::Minimize, "minimum"), (LpSense::Maximize, "maximum")] {
        let result = solve_exact_lp(
            &eq_objective,
            (eq_lhs, eq_rhs),
            (ineq_lhs, ineq_rhs),
            &nonneg,
            sense,
        )?;
        match result {
            LpResult::Optimal { value, .. } if value == *eq_value => {}
            LpResult::Optimal { value, .. } => {
                equation_failures.push(format!("{name} of coordinate sum is {value}, expected {eq_value}"));
            }
            LpResult::Unbounded => {
                equation_failures.push(format!("coordinate sum {name} is unbounded"));
            }
            LpResult::Infeasible => {
                equation_failures.push("extension is empty".into());
            }
        }
    }

    let facet_failures: Vec<(FacetId, FacetCheckFailure)> = target
        .inequalities()
        .par_iter()
        .map(|facet| {
            let coeffs: RatVector = (0..n)
                .map(|v| {
                    if facet.subset & (1 << v) != 0 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            let objective = pulled_back(&coeffs);
            let result = solve_exact_lp(
                &objective,
                (eq_lhs, eq_rhs),
                (ineq_lhs, ineq_rhs),
                &nonneg,
                LpSense::Minimize,
            )?;
            Ok(match result {
                LpResult::Optimal { value, .. } if value >= facet.rhs => None,
                LpResult::Optimal { value, .. } => Some((
                    FacetId::Subset(facet.subset),
                    FacetCheckFailure::MinimumTooLow {
                        minimum: value,
                        required: facet.rhs.clone(),
                    },
                )),
                LpResult::Unbounded => Some((
                    FacetId::Subset(facet.subset),
                    FacetCheckFailure::Unbounded {
                        required: facet.rhs.clone(),
                    },
                )),
                LpResult::Infeasible => {
                    Some((FacetId::Subset(facet.subset), FacetCheckFailure::Infeasible))
                }
            })
        })
        .collect::<Result<Vec<_>, Error>>()?
        .into_iter()
        .flatten()
        .collect();

    Ok(ProjectionReport {
        n,
        vertices_total: vertices.len(),
        uncovered_vertices,
        equation_failures,
        facet_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RatMatrix;
    use crate::formulation::{birkhoff_z_extension, build_birkhoff_extension, Formulation};
    use crate::polytope::permutahedron_facets;

    #[test]
    fn birkhoff_projects_onto_small_permutahedra() {
        for n in 2..=3 {
            let f = build_birkhoff_extension(n).unwrap();
            let report = verify_projection(&f, &permutahedron_facets(n).unwrap()).unwrap();
            assert!(report.passed(), "n = {n}: {report}");
        }
    }

    #[test]
    fn z_only_extension_projects_onto_pi_2() {
        let e = birkhoff_z_extension(2).unwrap();
        let report = verify_projection(&e, &permutahedron_facets(2).unwrap()).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn deleting_a_linking_row_breaks_facet_validity() {
        // Without the x_1 linking row, x_1 is a free variable of the
        // projection and subset facets through coordinate 1 become
        // unbounded below.
        let n = 3;
        let f = build_birkhoff_extension(n).unwrap();
        let (eq_lhs, eq_rhs) = f.equalities();
        let rows: Vec<_> = (1..eq_lhs.nrows()).map(|i| eq_lhs.row(i).clone()).collect();
        let rhs: RatVector = (1..eq_lhs.nrows()).map(|i| eq_rhs[i].clone()).collect();
        let mutilated = Formulation::new(
            (RatMatrix::new(rows, f.dim()).unwrap(), rhs),
            (f.inequalities().0.clone(), f.inequalities().1.clone()),
            f.projection().clone(),
        )
        .unwrap();
        let report = verify_projection(&mutilated, &permutahedron_facets(n).unwrap()).unwrap();
        assert!(!report.passed());
        assert!(!report.facet_failures.is_empty() || !report.equation_failures.is_empty());
    }

    #[test]
    fn wrong_target_dimension_is_rejected() {
        let f = build_birkhoff_extension(3).unwrap();
        assert!(verify_projection(&f, &permutahedron_facets(4).unwrap()).is_err());
    }
}
