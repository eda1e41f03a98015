//! The symmetry lower-bound pipeline as executable algorithms: kappa-cycle
//! normalization, partition extraction and verification, prefix-subgroup
//! averaging with closed forms, the split element, the violating point and
//! the end-to-end audit verdict.
//!
//! The pipeline takes a weakly symmetric subspace extension of `Π_n` with a
//! section and witness kappas. When the extension has at least `n(n-1)/2`
//! variables the audit is `Consistent`; below that threshold the machinery
//! constructs a nonnegative point of the claimed extension whose projection
//! violates a facet of `Π_n`, refuting the input with a self-contained
//! certificate. Any hypothesis failure along the way is reported as
//! `Inconclusive` with the failing stage named, never silently repaired.

mod average;
mod normalize;
mod partition;
mod pipeline;
mod synthetic;
mod violation;

pub use average::{average_section, brute_force_average};
pub use normalize::normalize_kappa_cycles;
pub use partition::{chain_partition, verify_partition, Partition, VerifiedPartition};
pub use pipeline::{audit_extension, recheck_certificate, AuditReport, AuditVerdict};
pub use synthetic::synthetic_instance;
pub use violation::{
    build_violating_point, default_zeta, find_split_element, identity_value_rows,
    max_admissible_epsilon, zeta_conditions_hold, ViolationCertificate,
};

use crate::exactnum::Rational;

/// The variable bound `n(n-1)/2` of the audit, as an exact rational.
pub fn audit_bound(n: usize) -> Rational {
    crate::formulation::symmetric_variable_lower_bound(n)
}
