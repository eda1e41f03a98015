use std::collections::HashMap;

use crate::permgroup::{rho_generators, Permutation};
use crate::section::{essential_element, EssentialElement, Section};
use crate::Error;

fn breach(detail: impl Into<String>) -> Error {
    Error::HypothesisBreach {
        stage: "partition construction".into(),
        detail: detail.into(),
    }
}

/// A partition of the component indices `[d]` into ordered `n`-tuples
/// `A_i = (a^i_1, .., a^i_n)` and singletons `b_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    a_sets: Vec<Vec<usize>>,
    b_singletons: Vec<usize>,
    n: usize,
    d: usize,
}

impl Partition {
    pub fn new(
        a_sets: Vec<Vec<usize>>,
        b_singletons: Vec<usize>,
        n: usize,
        d: usize,
    ) -> Result<Self, Error> {
        let mut used = vec![false; d];
        let mut mark = |j: usize| -> Result<(), Error> {
            if j >= d {
                return Err(Error::IndexOutOfRange {
                    context: format!("partition index {j} with d = {d}"),
                });
            }
            if used[j] {
                return Err(Error::PreconditionViolated {
                    condition: format!("partition index {j} appears twice"),
                });
            }
            used[j] = true;
            Ok(())
        };
        for a in &a_sets {
            if a.len() != n {
                return Err(Error::PreconditionViolated {
                    condition: format!("A-set has {} elements, expected n = {n}", a.len()),
                });
            }
            for &j in a {
                mark(j)?;
            }
        }
        for &j in &b_singletons {
            mark(j)?;
        }
        if used.iter().any(|&u| !u) {
            return Err(Error::PreconditionViolated {
                condition: "partition does not cover all component indices".into(),
            });
        }
        Ok(Partition {
            a_sets,
            b_singletons,
            n,
            d,
        })
    }

    pub fn a_sets(&self) -> &[Vec<usize>] {
        &self.a_sets
    }

    pub fn b_singletons(&self) -> &[usize] {
        &self.b_singletons
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

/// A partition that passed [`verify_partition`] against a section with the
/// recorded `(n, d)`; the averaging and violating-point operations demand
/// one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedPartition {
    partition: Partition,
}

impl VerifiedPartition {
    pub fn new(partition: Partition, s: &Section) -> Result<Self, Error> {
        if verify_partition(&partition, s)? {
            Ok(VerifiedPartition { partition })
        } else {
            Err(Error::UnverifiedPartition)
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }
}

impl std::ops::Deref for VerifiedPartition {
    type Target = Partition;
    fn deref(&self) -> &Partition {
        &self.partition
    }
}

/// Exhaustively checks the partition equations over every generator
/// `rho_v`, every vertex and every component:
///
/// ```text
///   s_{a^i_t}(rho.x) = s_{a^i_{rho^{-1}(t)}}(x)      s_{b_j}(rho.x) = s_{b_j}(x)
/// ```
///
/// Every even permutation is a product of the generators, so the equations
/// then hold for all of `A_n`.
pub fn verify_partition(part: &Partition, s: &Section) -> Result<bool, Error> {
    if part.n != s.n() || part.d != s.dim() {
        return Err(Error::dim(format!(
            "partition over (n={}, d={}) vs section (n={}, d={})",
            part.n,
            part.d,
            s.n(),
            s.dim()
        )));
    }
    let vertex_count = s.vertex_count();
    for rho in rho_generators(s.n())? {
        let action = s.vertex_permutation(&rho)?;
        let rho_inv = rho.inverse();
        for a in &part.a_sets {
            for t in 0..part.n {
                let lhs_component = a[t];
                let rhs_component = a[rho_inv.apply(t)];
                for k in 0..vertex_count {
                    if s.table()[action[k]][lhs_component] != s.table()[k][rhs_component] {
                        return Ok(false);
                    }
                }
            }
        }
        for &b in &part.b_singletons {
            for k in 0..vertex_count {
                if s.table()[action[k]][b] != s.table()[k][b] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Grows the `A_i` sets by chaining cycles of the normalized kappas.
///
/// Every cycle `(j_1, j_2, j_3)` of `kappa_{rho_1}` seeds a set; for each
/// later generator the set gains one element, either directly (the next
/// kappa carries the expected cycle) or after the two-cycle surgery, whose
/// forced component equalities are checked by fingerprint before the
/// rewrite. Untouched indices become singletons.
///
/// `kappas[v]` must be the normalized witness permutation for `rho_v`.
pub fn chain_partition(kappas: &[Permutation], s: &Section) -> Result<Partition, Error> {
    let n = s.n();
    let d = s.dim();
    if n < 3 {
        return Err(Error::PreconditionViolated {
            condition: format!("partition chaining needs n >= 3, got {n}"),
        });
    }
    if kappas.len() != n - 2 {
        return Err(Error::dim(format!(
            "expected {} kappas (one per rho generator), got {}",
            n - 2,
            kappas.len()
        )));
    }
    for kappa in kappas {
        if kappa.n() != d {
            return Err(Error::dim("kappa dimension vs section".to_string()));
        }
        for cycle in kappa.cycles() {
            if cycle.len() != 3 {
                return Err(Error::PreconditionViolated {
                    condition: "kappas must be normalized to 3-cycles first".into(),
                });
            }
        }
    }

    let mut essentials: HashMap<usize, usize> = HashMap::new();
    let mut essential = |s: &Section, j: usize| -> Result<usize, Error> {
        if let Some(&v) = essentials.get(&j) {
            return Ok(v);
        }
        match essential_element(s, j)? {
            EssentialElement::Element(v) => {
                essentials.insert(j, v);
                Ok(v)
            }
            other => Err(breach(format!(
                "component {j} on a normalized cycle has essential element {other:?}"
            ))),
        }
    };

    // Mutable images: the two-cycle surgery rewrites later kappas.
    let mut images: Vec<Vec<usize>> = kappas.iter().map(|k| k.images().to_vec()).collect();

    // Seed one chain per cycle of kappa_{rho_1}, aligned so the essential
    // elements read (0, 1, 2).
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for cycle in kappas[0].cycles() {
        let es = [
            essential(s, cycle[0])?,
            essential(s, cycle[1])?,
            essential(s, cycle[2])?,
        ];
        let Some(rotation) = (0..3).find(|&r| (0..3).all(|t| es[(r + t) % 3] == t)) else {
            return Err(breach(format!(
                "cycle ({},{},{}) of kappa_rho_1 is not aligned",
                cycle[0], cycle[1], cycle[2]
            )));
        };
        chains.push(vec![
            cycle[rotation],
            cycle[(rotation + 1) % 3],
            cycle[(rotation + 2) % 3],
        ]);
    }

    for chain in &mut chains {
        for vi in 1..=n - 3 {
            // sigma = rho_vi with cycle (vi, vi+1, vi+2); the chain holds
            // elements with essential elements 0..=vi+1 so far.
            let j2 = chain[vi];
            let j3 = chain[vi + 1];
            let sigma = &mut images[vi];
            if sigma[j2] == j3 {
                // Direct case: sigma carries the cycle (j2, j3, j4).
                let j4 = sigma[j3];
                if sigma[j4] != j2 {
                    return Err(breach(format!(
                        "indices {j2},{j3} do not close a 3-cycle in kappa_rho_{}",
                        vi + 1
                    )));
                }
                if essential(s, j4)? != vi + 2 {
                    return Err(breach(format!(
                        "appended component {j4} has the wrong essential element"
                    )));
                }
                chain.push(j4);
                continue;
            }
            // Two-cycle case: j2 and j3 sit on different cycles
            // (j2, j3', j4') and (j2'', j3, j4''); surgery swaps j3' and j3.
            let j3p = sigma[j2];
            if j3p == j2 {
                return Err(breach(format!(
                    "index {j2} is fixed by kappa_rho_{}, no cycle to chain",
                    vi + 1
                )));
            }
            let j4p = sigma[j3p];
            if sigma[j4p] != j2 {
                return Err(breach(format!(
                    "index {j2} does not lie on a 3-cycle of kappa_rho_{}",
                    vi + 1
                )));
            }
            let j4pp = sigma[j3];
            if j4pp == j3 {
                return Err(breach(format!(
                    "index {j3} is fixed by kappa_rho_{}, no cycle to chain",
                    vi + 1
                )));
            }
            let j2pp = sigma[j4pp];
            if sigma[j2pp] != j3 {
                return Err(breach(format!(
                    "index {j3} does not lie on a 3-cycle of kappa_rho_{}",
                    vi + 1
                )));
            }
            if [j2, j3p, j4p].contains(&j3) {
                return Err(breach(format!(
                    "indices {j2} and {j3} share a cycle of kappa_rho_{} but are not \
                     adjacent",
                    vi + 1
                )));
            }
            // Both cycles must carry essential elements (vi, vi+1, vi+2).
            if essential(s, j3p)? != vi + 1
                || essential(s, j2pp)? != vi
                || essential(s, j4p)? != vi + 2
                || essential(s, j4pp)? != vi + 2
            {
                return Err(breach(
                    "two-cycle surgery: essential elements do not match".to_string(),
                ));
            }
            // The forced equalities justifying the surgery.
            if s.component_class(j3) != s.component_class(j3p)
                || s.component_class(j2) != s.component_class(j2pp)
            {
                return Err(breach(
                    "two-cycle surgery: forced component equalities fail".to_string(),
                ));
            }
            // Rewrite (j2, j3', j4'), (j2'', j3, j4'') into
            // (j2, j3, j4'), (j2'', j3', j4'').
            sigma[j2] = j3;
            sigma[j3] = j4p;
            sigma[j2pp] = j3p;
            sigma[j3p] = j4pp;
            if essential(s, j4p)? != vi + 2 {
                return Err(breach("surgered cycle misaligned".to_string()));
            }
            chain.push(j4p);
        }
    }

    let mut used = vec![false; d];
    for chain in &chains {
        for &j in chain {
            if used[j] {
                return Err(breach(format!(
                    "component {j} claimed by two chains; sets are not disjoint"
                )));
            }
            used[j] = true;
        }
    }
    let b_singletons: Vec<usize> = (0..d).filter(|&j| !used[j]).collect();
    Partition::new(chains, b_singletons, n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::normalize_kappa_cycles;
    use crate::exactnum::{RatVector, Rational};
    use crate::section::{canonical_birkhoff_section, derive_weak_symmetry_witness};

    fn normalized_birkhoff_kappas(n: usize, s: &Section) -> Vec<Permutation> {
        let rhos = rho_generators(n).unwrap();
        let witness = derive_weak_symmetry_witness(s, &rhos).unwrap().unwrap();
        rhos.iter()
            .map(|rho| {
                normalize_kappa_cycles(witness.kappa_for(rho).unwrap(), rho, s).unwrap()
            })
            .collect()
    }

    #[test]
    fn birkhoff_partition_is_one_set_per_matrix_row() {
        let n = 6;
        let s = canonical_birkhoff_section(n).unwrap();
        let kappas = normalized_birkhoff_kappas(n, &s);
        let part = chain_partition(&kappas, &s).unwrap();
        assert_eq!(part.a_sets().len(), n);
        assert!(part.b_singletons().is_empty());
        let mut rows: Vec<Vec<usize>> = part.a_sets().to_vec();
        rows.sort();
        for (i, row) in rows.iter().enumerate() {
            let expected: Vec<usize> = (0..n).map(|v| i * n + v).collect();
            assert_eq!(row, &expected);
        }
        assert!(verify_partition(&part, &s).unwrap());
    }

    #[test]
    fn constant_extra_component_becomes_a_singleton() {
        let n = 6;
        let s0 = canonical_birkhoff_section(n).unwrap();
        let table = s0
            .table()
            .iter()
            .map(|row| {
                let mut extended: Vec<Rational> = row.entries().to_vec();
                extended.push(Rational::from(5));
                RatVector::new(extended)
            })
            .collect();
        let s = Section::from_table(n, table).unwrap();
        let kappas: Vec<Permutation> = normalized_birkhoff_kappas(n, &s0)
            .iter()
            .map(|k| {
                let mut images = k.images().to_vec();
                images.push(s0.dim());
                Permutation::from_images(images).unwrap()
            })
            .collect();
        let part = chain_partition(&kappas, &s).unwrap();
        assert_eq!(part.a_sets().len(), n);
        assert_eq!(part.b_singletons(), &[s0.dim()]);
        assert!(verify_partition(&part, &s).unwrap());
    }

    #[test]
    fn constant_section_partitions_into_singletons() {
        let n = 5;
        let s = Section::from_fn(n, |_| RatVector::from_ints(&[3, 7])).unwrap();
        let kappas: Vec<Permutation> =
            (0..n - 2).map(|_| Permutation::identity(2)).collect();
        let part = chain_partition(&kappas, &s).unwrap();
        assert!(part.a_sets().is_empty());
        assert_eq!(part.b_singletons(), &[0, 1]);
        assert!(verify_partition(&part, &s).unwrap());
    }

    #[test]
    fn swapped_positions_fail_verification() {
        let n = 5;
        let s = canonical_birkhoff_section(n).unwrap();
        let kappas = normalized_birkhoff_kappas(n, &s);
        let part = chain_partition(&kappas, &s).unwrap();
        assert!(verify_partition(&part, &s).unwrap());

        let mut broken_sets = part.a_sets().to_vec();
        broken_sets[0].swap(0, 1);
        let broken =
            Partition::new(broken_sets, part.b_singletons().to_vec(), n, s.dim()).unwrap();
        assert!(!verify_partition(&broken, &s).unwrap());
    }

    #[test]
    fn partition_structure_is_validated() {
        assert!(Partition::new(vec![vec![0, 1]], vec![], 3, 3).is_err()); // wrong size
        assert!(Partition::new(vec![vec![0, 1, 2]], vec![2], 3, 3).is_err()); // overlap
        assert!(Partition::new(vec![vec![0, 1, 2]], vec![], 3, 4).is_err()); // gap
        assert!(Partition::new(vec![vec![0, 1, 2]], vec![3], 3, 4).is_ok());
    }
}
