//! The permutahedron's facet description and vertex set.
//!
//! `Π_n` is the convex hull of all coordinate permutations of `(1, 2, .., n)`.
//! Its minimal description is one equation (the coordinates sum to
//! `n(n+1)/2`) plus, for every proper nonempty subset `S` of coordinates, the
//! inequality that the entries indexed by `S` sum to at least
//! `|S|(|S|+1)/2`. That is `2^n - 2` inequalities.

use crate::exactnum::{RatVector, Rational};
use crate::permgroup::{lambda_vertex, Permutation};
use crate::Error;

/// One subset inequality `sum_{v in S} x_v >= |S|(|S|+1)/2`.
///
/// The subset is a bitmask over `0..n` (bit `v` set means coordinate `v` is
/// in `S`); iteration order is increasing bitmask value, so facet
/// identifiers are stable across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetInequality {
    pub subset: u32,
    pub rhs: Rational,
}

impl FacetInequality {
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(|v| self.subset & (1 << v) != 0)
    }

    pub fn lhs_at(&self, x: &RatVector) -> Rational {
        self.members().map(|v| x[v].clone()).sum()
    }

    /// Subset written with 1-based elements, e.g. `{1,3}`.
    pub fn describe(&self) -> String {
        let members: Vec<String> = self.members().map(|v| (v + 1).to_string()).collect();
        format!("{{{}}}", members.join(","))
    }
}

/// The minimal facet description of the permutahedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSystem {
    n: usize,
    equation: (RatVector, Rational),
    inequalities: Vec<FacetInequality>,
}

impl FacetSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The hyperplane `sum_v x_v = n(n+1)/2` as (coefficients, rhs).
    pub fn equation(&self) -> (&RatVector, &Rational) {
        (&self.equation.0, &self.equation.1)
    }

    pub fn inequalities(&self) -> &[FacetInequality] {
        &self.inequalities
    }
}

/// Identifies a constraint of the facet system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FacetId {
    Equation,
    Subset(u32),
}

impl FacetId {
    pub fn describe(&self, _n: usize) -> String {
        match self {
            FacetId::Equation => "coordinate-sum equation".into(),
            FacetId::Subset(mask) => {
                let ineq = FacetInequality {
                    subset: *mask,
                    rhs: Rational::zero(),
                };
                format!("subset {}", ineq.describe())
            }
        }
    }
}

/// The equation plus all `2^n - 2` subset inequalities of `Π_n`.
pub fn permutahedron_facets(n: usize) -> Result<FacetSystem, Error> {
    if n < 2 {
        return Err(Error::PreconditionViolated {
            condition: format!("permutahedron facets need n >= 2, got {n}"),
        });
    }
    if n > 31 {
        return Err(Error::CapExceeded {
            context: "facet enumeration".into(),
            requested: n,
            cap: 31,
            estimate: "2^n - 2 subsets do not fit a u32 bitmask".into(),
        });
    }
    let equation = (
        RatVector::new(vec![Rational::one(); n]),
        Rational::from(n * (n + 1) / 2),
    );
    let full: u32 = (1u32 << n) - 1;
    let inequalities = (1..full)
        .map(|subset| {
            let size = subset.count_ones() as usize;
            FacetInequality {
                subset,
                rhs: Rational::from(size * (size + 1) / 2),
            }
        })
        .collect();
    Ok(FacetSystem {
        n,
        equation,
        inequalities,
    })
}

/// All `n!` vertices of `Π_n`, indexed by the lexicographic enumeration of
/// `S_n`: vertex `k` is `Λ(zeta_k)`.
pub fn permutahedron_vertices(n: usize) -> Result<Vec<RatVector>, Error> {
    Ok(Permutation::enumerate(n)?
        .iter()
        .map(lambda_vertex)
        .collect())
}

/// Returns the first constraint of `fs` violated by `x` (equation mismatch
/// or inequality shortfall) together with the exact violation amount, or
/// `None` when `x` satisfies the whole description.
pub fn facet_violation(
    x: &RatVector,
    fs: &FacetSystem,
) -> Result<Option<(FacetId, Rational)>, Error> {
    if x.dim() != fs.n {
        return Err(Error::dim(format!(
            "point of dim {} against facets of Π_{}",
            x.dim(),
            fs.n
        )));
    }
    let lhs = fs.equation.0.dot(x);
    if lhs != fs.equation.1 {
        let diff = &lhs - &fs.equation.1;
        return Ok(Some((FacetId::Equation, diff.abs())));
    }
    for ineq in &fs.inequalities {
        let lhs = ineq.lhs_at(x);
        if lhs < ineq.rhs {
            let amount = &ineq.rhs - &lhs;
            return Ok(Some((FacetId::Subset(ineq.subset), amount)));
        }
    }
    Ok(None)
}
