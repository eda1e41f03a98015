//! Extended formulations: the data model, the Birkhoff construction, the
//! symmetric-to-subspace transformation, projection verification, symmetry
//! certificates and the face-counting bounds.

mod birkhoff;
mod bounds;
mod projection;
mod subspace;
mod symmetry;

pub use birkhoff::{birkhoff_z_extension, build_birkhoff_extension, x_index, z_index, z_only_index};
pub use bounds::{combined_lower_bound, face_count_lower_bound, symmetric_variable_lower_bound};
pub use projection::{verify_projection, FacetCheckFailure, ProjectionReport};
pub use subspace::{to_subspace_extension, ColumnOrigin, SubspaceTransform};
pub use symmetry::{find_symmetry_certificate, verify_symmetry_certificate, DEFAULT_SEARCH_CAP};

use crate::exactnum::{RatMatrix, RatVector};
use crate::permgroup::Permutation;
use crate::Error;

/// An extended formulation `Q = { y : A= y = b=, A<= y <= b<= }` together
/// with a linear projection `p` to the target space.
#[derive(Debug, Clone, PartialEq)]
pub struct Formulation {
    d: usize,
    m: usize,
    eq_lhs: RatMatrix,
    eq_rhs: RatVector,
    ineq_lhs: RatMatrix,
    ineq_rhs: RatVector,
    projection: RatMatrix,
}

impl Formulation {
    pub fn new(
        eq: (RatMatrix, RatVector),
        ineq: (RatMatrix, RatVector),
        projection: RatMatrix,
    ) -> Result<Self, Error> {
        let d = projection.ncols();
        let m = projection.nrows();
        let (eq_lhs, eq_rhs) = eq;
        let (ineq_lhs, ineq_rhs) = ineq;
        if eq_lhs.nrows() != eq_rhs.dim() {
            return Err(Error::dim("equality rows vs rhs"));
        }
        if ineq_lhs.nrows() != ineq_rhs.dim() {
            return Err(Error::dim("inequality rows vs rhs"));
        }
        if eq_lhs.nrows() > 0 && eq_lhs.ncols() != d {
            return Err(Error::dim("equality columns vs projection"));
        }
        if ineq_lhs.nrows() > 0 && ineq_lhs.ncols() != d {
            return Err(Error::dim("inequality columns vs projection"));
        }
        if d == 0 || m == 0 {
            return Err(Error::dim("projection must be m x d with m, d >= 1"));
        }
        Ok(Formulation {
            d,
            m,
            eq_lhs,
            eq_rhs,
            ineq_lhs,
            ineq_rhs,
            projection,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn target_dim(&self) -> usize {
        self.m
    }

    pub fn equalities(&self) -> (&RatMatrix, &RatVector) {
        (&self.eq_lhs, &self.eq_rhs)
    }

    pub fn inequalities(&self) -> (&RatMatrix, &RatVector) {
        (&self.ineq_lhs, &self.ineq_rhs)
    }

    pub fn projection(&self) -> &RatMatrix {
        &self.projection
    }

    pub fn project(&self, y: &RatVector) -> Result<RatVector, Error> {
        self.projection.mul_vec(y)
    }
}

/// A subspace extension: `Q = { y >= 0 : A y = b }` with a projection `p`.
/// Every variable is sign-constrained and there are no inequality rows.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceExtension {
    d: usize,
    m: usize,
    affine_lhs: RatMatrix,
    affine_rhs: RatVector,
    projection: RatMatrix,
}

impl SubspaceExtension {
    pub fn new(affine: (RatMatrix, RatVector), projection: RatMatrix) -> Result<Self, Error> {
        let d = projection.ncols();
        let m = projection.nrows();
        let (affine_lhs, affine_rhs) = affine;
        if affine_lhs.nrows() != affine_rhs.dim() {
            return Err(Error::dim("affine rows vs rhs"));
        }
        if affine_lhs.nrows() > 0 && affine_lhs.ncols() != d {
            return Err(Error::dim("affine columns vs projection"));
        }
        if d == 0 || m == 0 {
            return Err(Error::dim("projection must be m x d with m, d >= 1"));
        }
        Ok(SubspaceExtension {
            d,
            m,
            affine_lhs,
            affine_rhs,
            projection,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn target_dim(&self) -> usize {
        self.m
    }

    pub fn affine(&self) -> (&RatMatrix, &RatVector) {
        (&self.affine_lhs, &self.affine_rhs)
    }

    pub fn projection(&self) -> &RatMatrix {
        &self.projection
    }

    pub fn project(&self, y: &RatVector) -> Result<RatVector, Error> {
        self.projection.mul_vec(y)
    }

    /// True iff `y >= 0` and `A y = b` exactly.
    pub fn contains(&self, y: &RatVector) -> Result<bool, Error> {
        if y.dim() != self.d {
            return Err(Error::dim("point vs extension dimension"));
        }
        if !y.is_nonnegative() {
            return Ok(false);
        }
        Ok(self.affine_lhs.mul_vec(y)? == self.affine_rhs)
    }
}

/// Common view over [`Formulation`] and [`SubspaceExtension`] used by the
/// LP-based verifiers.
pub trait ExtensionView {
    fn dim(&self) -> usize;
    fn target_dim(&self) -> usize;
    fn equality_rows(&self) -> (&RatMatrix, &RatVector);
    fn inequality_rows(&self) -> Option<(&RatMatrix, &RatVector)>;
    fn nonneg_mask(&self) -> Vec<bool>;
    fn projection_matrix(&self) -> &RatMatrix;
}

impl ExtensionView for Formulation {
    fn dim(&self) -> usize {
        self.d
    }
    fn target_dim(&self) -> usize {
        self.m
    }
    fn equality_rows(&self) -> (&RatMatrix, &RatVector) {
        self.equalities()
    }
    fn inequality_rows(&self) -> Option<(&RatMatrix, &RatVector)> {
        Some(self.inequalities())
    }
    fn nonneg_mask(&self) -> Vec<bool> {
        vec![false; self.d]
    }
    fn projection_matrix(&self) -> &RatMatrix {
        &self.projection
    }
}

impl ExtensionView for SubspaceExtension {
    fn dim(&self) -> usize {
        self.d
    }
    fn target_dim(&self) -> usize {
        self.m
    }
    fn equality_rows(&self) -> (&RatMatrix, &RatVector) {
        self.affine()
    }
    fn inequality_rows(&self) -> Option<(&RatMatrix, &RatVector)> {
        None
    }
    fn nonneg_mask(&self) -> Vec<bool> {
        vec![true; self.d]
    }
    fn projection_matrix(&self) -> &RatMatrix {
        &self.projection
    }
}

/// A symmetry certificate for a formulation: the target permutation `pi`,
/// the variable permutation `kappa` and the row permutations that map the
/// constraint system onto itself.
///
/// Validity is decided by [`verify_symmetry_certificate`], which demands
/// exact matrix equality under the simultaneous permutations and the
/// projection condition `p ∘ kappa = pi ∘ p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCertificate {
    pub pi: Permutation,
    pub kappa: Permutation,
    pub rho_eq: Permutation,
    pub rho_ineq: Permutation,
}

impl SymmetryCertificate {
    pub fn identity(f: &Formulation) -> Self {
        SymmetryCertificate {
            pi: Permutation::identity(f.m),
            kappa: Permutation::identity(f.d),
            rho_eq: Permutation::identity(f.eq_lhs.nrows()),
            rho_ineq: Permutation::identity(f.ineq_lhs.nrows()),
        }
    }

    /// Composes two certificates: the result certifies `self.pi ∘ other.pi`.
    pub fn compose(&self, other: &SymmetryCertificate) -> SymmetryCertificate {
        SymmetryCertificate {
            pi: self.pi.compose(&other.pi),
            kappa: self.kappa.compose(&other.kappa),
            rho_eq: self.rho_eq.compose(&other.rho_eq),
            rho_ineq: self.rho_ineq.compose(&other.rho_ineq),
        }
    }
}
