use std::collections::HashMap;

use crate::permgroup::Permutation;
use crate::section::{essential_element, verify_weak_symmetry, EssentialElement, Section};
use crate::Error;

fn breach(detail: impl Into<String>) -> Error {
    Error::HypothesisBreach {
        stage: "cycle normalization".into(),
        detail: detail.into(),
    }
}

/// Rewrites `kappa` (a witness permutation for the 3-cycle `pi`) into an
/// equivalent permutation - same action on all section values - consisting
/// only of 3-cycles `(j_1, j_2, j_3)` whose essential elements align with
/// the cycle `(w_1, w_2, w_3)` of `pi`:
///
/// - cycles of length not divisible by 3 permute identical components and
///   are deleted,
/// - cycles of length `3l` split into `l` three-cycles,
/// - 3-cycles whose components are identical, or whose essential element
///   falls outside `{w_1, w_2, w_3}`, force the equalities
///   `s_{j_1} = s_{j_2} = s_{j_3}` (checked by fingerprint) and are deleted,
/// - each surviving cycle is rotated so that `v_{j_t} = w_t`.
///
/// Every rewrite is checked against the section; a failed check is a
/// hypothesis breach, reported as an error rather than silently repaired.
pub fn normalize_kappa_cycles(
    kappa: &Permutation,
    pi: &Permutation,
    s: &Section,
) -> Result<Permutation, Error> {
    if !pi.is_three_cycle() {
        return Err(Error::NotAThreeCycle);
    }
    if kappa.n() != s.dim() {
        return Err(Error::dim("kappa dimension vs section".to_string()));
    }
    if pi.n() != s.n() {
        return Err(Error::dim("pi degree vs section".to_string()));
    }
    if !verify_weak_symmetry(s, pi, kappa)? {
        return Err(Error::WeakSymmetryViolated {
            context: format!("kappa does not witness pi = {pi}"),
        });
    }

    let w = pi.cycles().remove(0);
    let mut essentials: HashMap<usize, EssentialElement> = HashMap::new();
    let mut essential = |j: usize| -> Result<EssentialElement, Error> {
        if let Some(&e) = essentials.get(&j) {
            return Ok(e);
        }
        let e = essential_element(s, j)?;
        essentials.insert(j, e);
        Ok(e)
    };

    let same_class =
        |a: usize, b: usize| -> bool { s.component_class(a) == s.component_class(b) };

    let mut surviving: Vec<[usize; 3]> = Vec::new();
    for cycle in kappa.cycles() {
        if cycle.len() % 3 != 0 {
            // kappa^3 acts trivially on section values, so a cycle coprime
            // to 3 cycles identical components.
            for pair in cycle.windows(2) {
                if !same_class(pair[0], pair[1]) {
                    return Err(breach(format!(
                        "cycle of length {} carries distinct components",
                        cycle.len()
                    )));
                }
            }
            continue;
        }
        for t in 0..cycle.len() {
            if !same_class(cycle[t], cycle[(t + 3) % cycle.len()]) {
                return Err(breach(
                    "components three steps apart on a kappa-cycle differ".to_string(),
                ));
            }
        }
        for chunk in cycle.chunks_exact(3) {
            let tri = [chunk[0], chunk[1], chunk[2]];
            if let Some(aligned) = normalize_tri(tri, &w, &mut essential, &same_class)? {
                surviving.push(aligned);
            }
        }
    }

    let mut images: Vec<usize> = (0..s.dim()).collect();
    for [a, b, c] in &surviving {
        images[*a] = *b;
        images[*b] = *c;
        images[*c] = *a;
    }
    let normalized = Permutation::from_images(images).expect("disjoint cycles");

    // The rewrite must be equivalent to the original kappa.
    let kappa_inv = kappa.inverse();
    let normalized_inv = normalized.inverse();
    for j in 0..s.dim() {
        if !same_class(kappa_inv.apply(j), normalized_inv.apply(j)) {
            return Err(breach(format!(
                "normalized permutation acts differently at component {j}"
            )));
        }
    }
    Ok(normalized)
}

/// Decides one 3-cycle: deleted (`None`) or rotated into alignment with `w`.
fn normalize_tri(
    tri: [usize; 3],
    w: &[usize],
    essential: &mut impl FnMut(usize) -> Result<EssentialElement, Error>,
    same_class: &impl Fn(usize, usize) -> bool,
) -> Result<Option<[usize; 3]>, Error> {
    let identical = same_class(tri[0], tri[1]) && same_class(tri[1], tri[2]);
    if identical {
        return Ok(None);
    }
    let es = [
        essential(tri[0])?,
        essential(tri[1])?,
        essential(tri[2])?,
    ];
    for (t, e) in es.iter().enumerate() {
        match e {
            EssentialElement::All => {
                return Err(breach(format!(
                    "component {} is A_n-invariant on a non-identical cycle",
                    tri[t]
                )));
            }
            EssentialElement::None => {
                return Err(breach(format!(
                    "component {} has no essential element",
                    tri[t]
                )));
            }
            EssentialElement::Element(v) if !w.contains(v) => {
                // pi fixes v, so pi lies in Iso(s_j) and the cycle's
                // components would have to be identical - they are not.
                return Err(breach(format!(
                    "essential element {} of component {} lies outside the pi-cycle \
                     yet the cycle is not identical",
                    v + 1,
                    tri[t]
                )));
            }
            EssentialElement::Element(_) => {}
        }
    }
    let element = |e: EssentialElement| match e {
        EssentialElement::Element(v) => v,
        _ => unreachable!("filtered above"),
    };
    for rotation in 0..3 {
        if (0..3).all(|t| element(es[(rotation + t) % 3]) == w[t]) {
            return Ok(Some([
                tri[rotation],
                tri[(rotation + 1) % 3],
                tri[(rotation + 2) % 3],
            ]));
        }
    }
    Err(breach(format!(
        "essential elements ({},{},{}) of cycle ({},{},{}) admit no alignment with \
         the pi-cycle",
        element(es[0]) + 1,
        element(es[1]) + 1,
        element(es[2]) + 1,
        tri[0],
        tri[1],
        tri[2]
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{RatVector, Rational};
    use crate::permgroup::{rho_generator, rho_generators};
    use crate::section::{canonical_birkhoff_section, derive_weak_symmetry_witness};

    #[test]
    fn identity_kappa_normalizes_to_identity() {
        let n = 4;
        let s = Section::from_fn(n, |_| RatVector::from_ints(&[1, 2])).unwrap();
        let pi = rho_generator(0, n).unwrap();
        let kappa = Permutation::identity(2);
        let normalized = normalize_kappa_cycles(&kappa, &pi, &s).unwrap();
        assert!(normalized.is_identity());
    }

    #[test]
    fn birkhoff_kappa_normalizes_to_aligned_three_cycles() {
        let n = 6;
        let s = canonical_birkhoff_section(n).unwrap();
        let pi = rho_generator(0, n).unwrap();
        let kappa = derive_weak_symmetry_witness(&s, std::slice::from_ref(&pi))
            .unwrap()
            .unwrap()
            .kappa_for(&pi)
            .unwrap()
            .clone();
        let normalized = normalize_kappa_cycles(&kappa, &pi, &s).unwrap();
        let cycles = normalized.cycles();
        assert_eq!(cycles.len(), n, "one aligned cycle per matrix row");
        for cycle in cycles {
            assert_eq!(cycle.len(), 3);
            let i = cycle[0] / n;
            assert_eq!(cycle, vec![i * n, i * n + 1, i * n + 2]);
        }
    }

    #[test]
    fn six_cycle_over_doubled_components_splits_into_three_cycles() {
        // Duplicate every component of the canonical section, then stitch
        // the two copies of one row into a single 6-cycle. Normalization
        // must split it into two aligned 3-cycles.
        let n = 6;
        let s0 = canonical_birkhoff_section(n).unwrap();
        let d0 = s0.dim();
        let table = s0
            .table()
            .iter()
            .map(|row| {
                let mut doubled: Vec<Rational> = row.entries().to_vec();
                doubled.extend(row.entries().iter().cloned());
                RatVector::new(doubled)
            })
            .collect();
        let s = Section::from_table(n, table).unwrap();

        let pi = rho_generator(0, n).unwrap();
        // Copy A of component (i,u) sits at i*n+u, copy B at d0 + i*n+u.
        let a = |u: usize| u; // row i = 0
        let b = |u: usize| d0 + u;
        let mut images: Vec<usize> = (0..2 * d0).collect();
        // Remaining rows i >= 1 use the block-diagonal kappa on both copies.
        for i in 1..n {
            for u in 0..n {
                images[i * n + u] = i * n + pi.apply(u);
                images[d0 + i * n + u] = d0 + i * n + pi.apply(u);
            }
        }
        // Row 0: a 6-cycle alternating copies, still a valid witness since
        // each index maps into the class of the pi-shifted component.
        images[a(0)] = b(1);
        images[b(1)] = a(2);
        images[a(2)] = b(0);
        images[b(0)] = a(1);
        images[a(1)] = b(2);
        images[b(2)] = a(0);
        let kappa = Permutation::from_images(images).unwrap();

        let normalized = normalize_kappa_cycles(&kappa, &pi, &s).unwrap();
        let cycles = normalized.cycles();
        let row0: Vec<_> = cycles
            .iter()
            .filter(|c| c.iter().any(|&j| j % d0 < n))
            .collect();
        assert_eq!(row0.len(), 2, "the 6-cycle split into two 3-cycles");
        for cycle in &cycles {
            assert_eq!(cycle.len(), 3);
        }
    }

    #[test]
    fn non_witness_kappa_is_rejected() {
        let n = 6;
        let s = canonical_birkhoff_section(n).unwrap();
        let pi = rho_generator(0, n).unwrap();
        let kappa = Permutation::identity(s.dim());
        assert!(matches!(
            normalize_kappa_cycles(&kappa, &pi, &s),
            Err(Error::WeakSymmetryViolated { .. })
        ));
    }

    #[test]
    fn non_three_cycles_are_rejected() {
        let n = 6;
        let s = canonical_birkhoff_section(n).unwrap();
        let pi = Permutation::parse("(1 2)", n).unwrap();
        let kappa = Permutation::identity(s.dim());
        assert!(matches!(
            normalize_kappa_cycles(&kappa, &pi, &s),
            Err(Error::NotAThreeCycle)
        ));
    }

    #[test]
    fn normalization_preserves_the_action_on_section_values() {
        let n = 6;
        let s = canonical_birkhoff_section(n).unwrap();
        for pi in rho_generators(n).unwrap() {
            let kappa = derive_weak_symmetry_witness(&s, std::slice::from_ref(&pi))
                .unwrap()
                .unwrap()
                .kappa_for(&pi)
                .unwrap()
                .clone();
            let normalized = normalize_kappa_cycles(&kappa, &pi, &s).unwrap();
            let ki = kappa.inverse();
            let ni = normalized.inverse();
            for j in 0..s.dim() {
                for k in 0..s.vertex_count() {
                    assert_eq!(
                        s.table()[k][ki.apply(j)],
                        s.table()[k][ni.apply(j)],
                        "pi = {pi}, j = {j}"
                    );
                }
            }
        }
    }
}
