use std::fmt;

use super::{
    audit_bound, build_violating_point, chain_partition, default_zeta, find_split_element,
    identity_value_rows, max_admissible_epsilon, normalize_kappa_cycles, zeta_conditions_hold,
    VerifiedPartition, ViolationCertificate,
};
use crate::exactnum::Rational;
use crate::formulation::SubspaceExtension;
use crate::permgroup::{alternating_group, rho_generators};
use crate::polytope::{facet_violation, permutahedron_facets};
use crate::section::{verify_section, verify_weak_symmetry, Section, WeakSymmetryWitness};
use crate::Error;

/// Outcome of the audit.
#[derive(Debug, Clone, PartialEq)]
pub enum AuditVerdict {
    /// `d >= n(n-1)/2`: the bound imposes nothing.
    Consistent,
    /// The pipeline built a nonnegative point of the claimed extension
    /// projecting outside `Π_n`; the input cannot be a valid weakly
    /// symmetric subspace extension.
    Refuted(ViolationCertificate),
    /// A hypothesis failed; the failing stage is named.
    Inconclusive { stage: String, detail: String },
}

/// The end-to-end audit outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub n: usize,
    pub d: usize,
    pub bound: Rational,
    pub verdict: AuditVerdict,
}

impl AuditReport {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            AuditVerdict::Consistent => 0,
            AuditVerdict::Refuted(_) => 1,
            AuditVerdict::Inconclusive { .. } => 2,
        }
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "audit-report")?;
        writeln!(f, "n {}", self.n)?;
        writeln!(f, "d {}", self.d)?;
        writeln!(f, "bound {}", self.bound)?;
        match &self.verdict {
            AuditVerdict::Consistent => writeln!(f, "verdict consistent")?,
            AuditVerdict::Inconclusive { stage, detail } => {
                writeln!(f, "verdict inconclusive")?;
                writeln!(f, "stage {stage}")?;
                writeln!(f, "detail {detail}")?;
            }
            AuditVerdict::Refuted(cert) => {
                writeln!(f, "verdict refuted")?;
                writeln!(f, "certificate")?;
                writeln!(f, "w {}", cert.w)?;
                writeln!(f, "zeta {}", cert.zeta)?;
                writeln!(f, "epsilon {}", cert.epsilon)?;
                let entries: Vec<String> =
                    cert.y.iter().map(|e| e.to_string()).collect();
                writeln!(f, "y {}", entries.join(","))?;
                let members: Vec<String> = cert
                    .facet_members()
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect();
                writeln!(f, "violated-facet {}", members.join(","))?;
                writeln!(f, "facet-rhs {}", cert.facet_rhs)?;
                writeln!(f, "projected-value {}", cert.projected_value)?;
            }
        }
        write!(f, "end")
    }
}

macro_rules! inconclusive {
    ($report:expr, $stage:expr, $detail:expr) => {{
        let mut report = $report;
        report.verdict = AuditVerdict::Inconclusive {
            stage: $stage.to_string(),
            detail: $detail.to_string(),
        };
        return Ok(report);
    }};
}

/// Runs the lower-bound pipeline against a claimed weakly symmetric
/// subspace extension.
///
/// Inputs are validated up front (the section must verify against the
/// extension and every `rho_v` generator must come with a verifying kappa);
/// validation failures are hard errors. After that:
///
/// - `n < 6`: the bound is only stated from `n = 6` on - inconclusive,
/// - `d >= n(n-1)/2`: consistent,
/// - otherwise the pipeline normalizes the kappas, chains the partition,
///   verifies it, picks the split element and `zeta`, maximizes `eps` and
///   builds the violating point. A verified certificate refutes the input;
///   any hypothesis failure is inconclusive with the stage named.
pub fn audit_extension(
    extension: &SubspaceExtension,
    s: &Section,
    witness: &WeakSymmetryWitness,
) -> Result<AuditReport, Error> {
    let n = s.n();
    let d = s.dim();
    if !verify_section(s, extension)? {
        return Err(Error::PreconditionViolated {
            condition: "section does not verify against the extension".into(),
        });
    }
    let rhos = rho_generators(n)?;
    let mut kappas = Vec::with_capacity(rhos.len());
    for rho in &rhos {
        let Some(kappa) = witness.kappa_for(rho) else {
            return Err(Error::PreconditionViolated {
                condition: format!("witness has no kappa for the generator {rho}"),
            });
        };
        if !verify_weak_symmetry(s, rho, kappa)? {
            return Err(Error::WeakSymmetryViolated {
                context: format!("kappa for {rho} fails the weak-symmetry equation"),
            });
        }
        kappas.push(kappa.clone());
    }

    let report = AuditReport {
        n,
        d,
        bound: audit_bound(n),
        verdict: AuditVerdict::Consistent,
    };
    if n < 6 {
        inconclusive!(report, "theorem hypotheses", "theorem stated for n >= 6");
    }
    if Rational::from(d) >= report.bound {
        return Ok(report);
    }

    // Stage: cycle normalization.
    let mut normalized = Vec::with_capacity(kappas.len());
    for (rho, kappa) in rhos.iter().zip(kappas.iter()) {
        match normalize_kappa_cycles(kappa, rho, s) {
            Ok(k) => normalized.push(k),
            Err(e) => inconclusive!(report, format!("cycle normalization for {rho}"), e),
        }
    }

    // Stage: partition construction and verification.
    let partition = match chain_partition(&normalized, s) {
        Ok(p) => p,
        Err(e) => inconclusive!(report, "partition construction", e),
    };
    let partition = match VerifiedPartition::new(partition, s) {
        Ok(p) => p,
        Err(e) => inconclusive!(report, "partition equations", e),
    };

    // Stage: split element.
    let values = identity_value_rows(s, &partition)?;
    let w = match find_split_element(&values)? {
        Some(w) => w,
        None => inconclusive!(
            report,
            "split element",
            "no w satisfies the (end)/(start) conditions"
        ),
    };

    // Stage: zeta. The default 3-cycle needs w <= n-2; at w = n-1 search
    // the alternating group for the lexicographically smallest witness.
    let zeta = if w + 1 < n {
        default_zeta(w, n)?
    } else {
        let found = alternating_group(n)?
            .iter()
            .find(|z| zeta_conditions_hold(z, w, n))
            .cloned();
        match found {
            Some(z) => z,
            None => inconclusive!(
                report,
                "zeta construction",
                format!("no even permutation satisfies the prefix conditions at w = {w}")
            ),
        }
    };

    // Stage: epsilon, the exact maximum halved.
    let epsilon = match max_admissible_epsilon(&values, w)? {
        Some(max) if !max.is_positive() => inconclusive!(
            report,
            "epsilon selection",
            "the nonnegativity constraints leave no positive epsilon"
        ),
        Some(max) => &max / &Rational::from(2i64),
        None => Rational::one(),
    };

    // Stage: violating point.
    let certificate = match build_violating_point(s, &partition, w, &zeta, &epsilon) {
        Ok(c) => c,
        Err(e) => inconclusive!(report, "violating point", e),
    };

    // Independent re-check of the certificate against the extension.
    if let Err(detail) = recheck_certificate(extension, &certificate) {
        inconclusive!(report, "certificate re-verification", detail);
    }

    let mut report = report;
    report.verdict = AuditVerdict::Refuted(certificate);
    Ok(report)
}

/// Re-verifies a certificate from scratch: `y >= 0`, the affine rows hold,
/// and the projection of `y` violates the named facet (and the facet
/// description generally).
pub fn recheck_certificate(
    extension: &SubspaceExtension,
    cert: &ViolationCertificate,
) -> Result<(), String> {
    if !cert.y.is_nonnegative() {
        return Err("certificate point has a negative component".into());
    }
    let (lhs, rhs) = extension.affine();
    let product = lhs.mul_vec(&cert.y).map_err(|e| e.to_string())?;
    if &product != rhs {
        return Err("certificate point violates an affine row".into());
    }
    let projected = extension.project(&cert.y).map_err(|e| e.to_string())?;
    let mut facet_sum = Rational::zero();
    for v in cert.facet_members() {
        facet_sum += &projected[v];
    }
    if facet_sum != cert.projected_value {
        return Err("projection disagrees with the recorded facet value".into());
    }
    if facet_sum >= cert.facet_rhs {
        return Err("the named facet is not violated".into());
    }
    let n = extension.target_dim();
    let facets = permutahedron_facets(n).map_err(|e| e.to_string())?;
    match facet_violation(&projected, &facets).map_err(|e| e.to_string())? {
        Some(_) => Ok(()),
        None => Err("projection satisfies the full facet description".into()),
    }
}
