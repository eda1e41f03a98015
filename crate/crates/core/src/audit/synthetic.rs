use crate::exactnum::{RatMatrix, RatVector, Rational};
use crate::formulation::SubspaceExtension;
use crate::section::Section;
use crate::Error;

/// Fabricates a small weakly symmetric pipeline instance from per-set value
/// rows: one ordered component block per base row, with
///
/// ```text
///   s(Λ(zeta))[i*n + t] = base_i[zeta^{-1}(t)]
/// ```
///
/// so every block transforms exactly as a partition set. The first base row
/// must be `(1, 2, .., n)`: its block then reproduces the vertex
/// coordinates and the projection can read them off directly, which makes
/// the section a genuine section of the returned extension (the extension's
/// affine rows pin each block's coordinate sum).
///
/// With fewer than `n(n-1)/2` total components this is the fabricated input
/// the audit refutes: the data is locally consistent, but no polytope can
/// be behind it.
pub fn synthetic_instance(
    n: usize,
    bases: &[Vec<Rational>],
) -> Result<(SubspaceExtension, Section), Error> {
    let Some(first) = bases.first() else {
        return Err(Error::PreconditionViolated {
            condition: "at least one base row is required".into(),
        });
    };
    for (i, base) in bases.iter().enumerate() {
        if base.len() != n {
            return Err(Error::dim(format!(
                "base row {i} has {} entries, expected n = {n}",
                base.len()
            )));
        }
        if base.iter().any(Rational::is_negative) {
            return Err(Error::PreconditionViolated {
                condition: format!("base row {i} has a negative entry"),
            });
        }
    }
    let coordinates: Vec<Rational> = (1..=n).map(|v| Rational::from(v as i64)).collect();
    if first != &coordinates {
        return Err(Error::PreconditionViolated {
            condition: "the first base row must be (1, 2, .., n)".into(),
        });
    }

    let k = bases.len();
    let d = k * n;
    let section = Section::from_fn(n, |zeta| {
        let inv = zeta.inverse();
        let mut row = RatVector::zero(d);
        for (i, base) in bases.iter().enumerate() {
            for t in 0..n {
                row[i * n + t] = base[inv.apply(t)].clone();
            }
        }
        row
    })?;

    // One affine row per block: its coordinate sum is constant over X.
    let mut affine_lhs = RatMatrix::zero(k, d);
    let mut affine_rhs = RatVector::zero(k);
    for (i, base) in bases.iter().enumerate() {
        for t in 0..n {
            affine_lhs.set(i, i * n + t, Rational::one());
        }
        affine_rhs[i] = base.iter().cloned().sum();
    }

    // The projection reads the vertex off the first block.
    let mut projection = RatMatrix::zero(n, d);
    for t in 0..n {
        projection.set(t, t, Rational::one());
    }

    let extension = SubspaceExtension::new((affine_lhs, affine_rhs), projection)?;
    Ok((extension, section))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::{
        audit_extension, build_violating_point, chain_partition, find_split_element,
        identity_value_rows, normalize_kappa_cycles, recheck_certificate, AuditVerdict,
        Partition, VerifiedPartition,
    };
    use crate::permgroup::{rho_generators, Permutation};
    use crate::section::{derive_weak_symmetry_witness, verify_section};

    fn rat(v: i64) -> Rational {
        Rational::from(v)
    }

    fn coordinate_base(n: usize) -> Vec<Rational> {
        (1..=n as i64).map(rat).collect()
    }

    fn indicator_base(n: usize, position: usize) -> Vec<Rational> {
        (0..n).map(|p| rat((p == position) as i64)).collect()
    }

    #[test]
    fn fabricated_instance_is_a_valid_section() {
        let n = 6;
        let bases = vec![coordinate_base(n), indicator_base(n, 0)];
        let (extension, section) = synthetic_instance(n, &bases).unwrap();
        assert_eq!(section.dim(), 12);
        assert_eq!(verify_section(&section, &extension), Ok(true));
    }

    #[test]
    fn audit_refutes_the_twelve_component_instance() {
        let n = 6;
        let bases = vec![coordinate_base(n), indicator_base(n, 0)];
        let (extension, section) = synthetic_instance(n, &bases).unwrap();
        let witness = derive_weak_symmetry_witness(&section, &rho_generators(n).unwrap())
            .unwrap()
            .expect("block structure is weakly symmetric");
        let report = audit_extension(&extension, &section, &witness).unwrap();
        let AuditVerdict::Refuted(cert) = &report.verdict else {
            panic!("expected refuted, got {:?}", report.verdict);
        };
        // The indicator block disqualifies w = 1; the pipeline lands on 2.
        assert_eq!(cert.w, 2);
        assert_eq!(cert.epsilon, Rational::new(3, 2).unwrap());
        assert_eq!(cert.projected_value, Rational::new(3, 2).unwrap());
        assert_eq!(cert.violation_amount(), Rational::new(3, 2).unwrap());
        assert!(cert.y.is_nonnegative());
        // Independent re-verification from the serialized data alone.
        assert_eq!(recheck_certificate(&extension, cert), Ok(()));
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn pipeline_stages_compose_on_the_synthetic_instance() {
        let n = 6;
        let bases = vec![coordinate_base(n), indicator_base(n, 0)];
        let (_, section) = synthetic_instance(n, &bases).unwrap();
        let rhos = rho_generators(n).unwrap();
        let witness = derive_weak_symmetry_witness(&section, &rhos).unwrap().unwrap();
        let kappas: Vec<Permutation> = rhos
            .iter()
            .map(|rho| {
                normalize_kappa_cycles(witness.kappa_for(rho).unwrap(), rho, &section).unwrap()
            })
            .collect();
        let part = chain_partition(&kappas, &section).unwrap();
        assert_eq!(part.a_sets().len(), 2);
        assert!(part.b_singletons().is_empty());
        let part = VerifiedPartition::new(part, &section).unwrap();
        let values = identity_value_rows(&section, &part).unwrap();
        assert_eq!(values[0], coordinate_base(n));
        assert_eq!(values[1], indicator_base(n, 0));
        assert_eq!(find_split_element(&values).unwrap(), Some(2));
    }

    #[test]
    fn violating_point_from_the_split_example_values() {
        // Two blocks with values (0,..,0,1) and (1,0,..,0) at the identity
        // vertex, d = 12 < 15: no extension exists behind these numbers,
        // but the violating point is built from the section alone.
        let n = 6;
        let bases = [indicator_base(n, n - 1), indicator_base(n, 0)];
        let section = Section::from_fn(n, |zeta| {
            let inv = zeta.inverse();
            let mut row = RatVector::zero(2 * n);
            for (i, base) in bases.iter().enumerate() {
                for t in 0..n {
                    row[i * n + t] = base[inv.apply(t)].clone();
                }
            }
            row
        })
        .unwrap();
        let a_sets = vec![(0..n).collect(), (n..2 * n).collect()];
        let part = Partition::new(a_sets, vec![], n, 2 * n).unwrap();
        let part = VerifiedPartition::new(part, &section).unwrap();

        let values = identity_value_rows(&section, &part).unwrap();
        let w = find_split_element(&values).unwrap().expect("two rows < (n-1)/2");
        assert_eq!(w, 2);

        let zeta = crate::audit::default_zeta(w, n).unwrap();
        let epsilon = Rational::new(1, 3).unwrap();
        let cert = build_violating_point(&section, &part, w, &zeta, &epsilon).unwrap();
        assert!(cert.y.is_nonnegative());
        assert!(cert.projected_value < cert.facet_rhs);
        assert_eq!(cert.violation_amount(), epsilon);

        // eps = 0 keeps the averaged point on the facet: no violation.
        let tight =
            build_violating_point(&section, &part, w, &zeta, &Rational::zero()).unwrap();
        assert_eq!(tight.projected_value, tight.facet_rhs);
        assert!(tight.y.is_nonnegative());

        // The violation grows strictly with eps.
        let larger = build_violating_point(&section, &part, w, &zeta, &rat(2)).unwrap();
        assert!(larger.violation_amount() > cert.violation_amount());
        assert!(cert.violation_amount() > tight.violation_amount());
    }

    #[test]
    fn singleton_components_keep_their_identity_value_for_any_eps() {
        // Append one constant component: it becomes a b-singleton and the
        // violating point carries its (nonnegative) identity-vertex value
        // unchanged, whatever eps is.
        let n = 6;
        let constant = Rational::new(7, 3).unwrap();
        let bases = [coordinate_base(n), indicator_base(n, 0)];
        let section = Section::from_fn(n, |zeta| {
            let inv = zeta.inverse();
            let mut row = RatVector::zero(2 * n + 1);
            for (i, base) in bases.iter().enumerate() {
                for t in 0..n {
                    row[i * n + t] = base[inv.apply(t)].clone();
                }
            }
            row[2 * n] = constant.clone();
            row
        })
        .unwrap();
        let a_sets = vec![(0..n).collect(), (n..2 * n).collect()];
        let part = Partition::new(a_sets, vec![2 * n], n, 2 * n + 1).unwrap();
        let part = VerifiedPartition::new(part, &section).unwrap();
        let zeta = crate::audit::default_zeta(2, n).unwrap();
        for epsilon in [Rational::zero(), Rational::new(1, 5).unwrap(), rat(1)] {
            let cert = build_violating_point(&section, &part, 2, &zeta, &epsilon).unwrap();
            assert_eq!(cert.y[2 * n], constant, "eps = {epsilon}");
        }
    }

    #[test]
    fn epsilon_past_the_bound_reports_the_maximum() {
        let n = 6;
        let bases = vec![coordinate_base(n), indicator_base(n, 0)];
        let (_, section) = synthetic_instance(n, &bases).unwrap();
        let a_sets = vec![(0..n).collect(), (n..2 * n).collect()];
        let part = Partition::new(a_sets, vec![], n, 2 * n).unwrap();
        let part = VerifiedPartition::new(part, &section).unwrap();
        let zeta = crate::audit::default_zeta(2, n).unwrap();
        // The coordinate block caps eps at 3 (head 1+2, swing -1 per unit).
        let err = build_violating_point(&section, &part, 2, &zeta, &rat(5)).unwrap_err();
        match err {
            Error::EpsilonTooLarge { max_admissible } => {
                assert_eq!(max_admissible, rat(3));
            }
            other => panic!("expected epsilon bound, got {other}"),
        }
    }

    #[test]
    fn bad_bases_are_rejected() {
        let n = 4;
        assert!(synthetic_instance(n, &[]).is_err());
        assert!(synthetic_instance(n, &[indicator_base(n, 0)]).is_err());
        let mut negative = coordinate_base(n);
        negative[2] = rat(-1);
        assert!(synthetic_instance(n, &[coordinate_base(n), negative.clone()]).is_err());
        assert!(synthetic_instance(n, &[coordinate_base(3)]).is_err());
    }
}
