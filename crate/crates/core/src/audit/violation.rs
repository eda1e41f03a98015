use super::{average_section, VerifiedPartition};
use crate::exactnum::{RatVector, Rational};
use crate::permgroup::{h_star_subgroup, lambda_vertex, Permutation};
use crate::section::Section;
use crate::Error;

/// A self-contained refutation certificate: the point
/// `y = (1+eps) s*(Λ(id), w) - eps s*(Λ(zeta), w)` is componentwise
/// nonnegative and satisfies every affine row the claimed extension has
/// (both affine combinations of section values), yet its projection falls
/// strictly below the facet `sum_{v in [w]} x_v >= w(w+1)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ViolationCertificate {
    pub w: usize,
    pub zeta: Permutation,
    pub epsilon: Rational,
    pub y: RatVector,
    /// Bitmask of the violated subset facet: the prefix `{0, .., w-1}`.
    pub violated_facet: u32,
    pub facet_rhs: Rational,
    pub projected_value: Rational,
}

impl ViolationCertificate {
    /// Violation amount `w(w+1)/2 - sum_{v in [w]} p(y)_v`; positive means
    /// the facet is strictly violated.
    pub fn violation_amount(&self) -> Rational {
        &self.facet_rhs - &self.projected_value
    }

    pub fn facet_members(&self) -> Vec<usize> {
        (0..32).filter(|v| self.violated_facet & (1 << v) != 0).collect()
    }
}

/// Per-`A_i` value rows of the section at `Λ(id)`, the table the split
/// element is chosen from.
pub fn identity_value_rows(s: &Section, part: &VerifiedPartition) -> Result<Vec<Vec<Rational>>, Error> {
    let id = Permutation::identity(s.n());
    let value = s.value(&id)?;
    Ok(part
        .a_sets()
        .iter()
        .map(|a| a.iter().map(|&j| value[j].clone()).collect())
        .collect())
}

/// Finds the smallest `w` in `[n-1]` satisfying, for every value row
/// `(s_{a^i_1}, .., s_{a^i_n})`:
///
/// - (end): `s_{a^i_w} > 0` implies `sum_{v > w} s_{a^i_v} > 0`,
/// - (start): `s_{a^i_{w+1}} > 0` implies `sum_{v <= w} s_{a^i_v} > 0`.
///
/// Each row disqualifies at most one `w` per condition, so a valid `w`
/// always exists when there are fewer than `(n-1)/2` rows.
pub fn find_split_element(values: &[Vec<Rational>]) -> Result<Option<usize>, Error> {
    let Some(first) = values.first() else {
        return Ok(Some(1));
    };
    let n = first.len();
    if n < 2 {
        return Err(Error::PreconditionViolated {
            condition: "value rows need at least two entries".into(),
        });
    }
    for row in values {
        if row.len() != n {
            return Err(Error::dim("ragged value rows".to_string()));
        }
        if row.iter().any(Rational::is_negative) {
            return Err(Error::PreconditionViolated {
                condition: "value rows must be nonnegative".into(),
            });
        }
    }
    'candidates: for w in 1..n {
        for row in values {
            let tail_positive = row[w..].iter().any(Rational::is_positive);
            if row[w - 1].is_positive() && !tail_positive {
                continue 'candidates; // (end) fails
            }
            let head_positive = row[..w].iter().any(Rational::is_positive);
            if row[w].is_positive() && !head_positive {
                continue 'candidates; // (start) fails
            }
        }
        return Ok(Some(w));
    }
    Ok(None)
}

/// The default even permutation satisfying the two zeta-conditions for
/// `1 <= w <= n-2`: the 3-cycle sending `w -> w+2 -> w+1 -> w` (1-based).
/// For `w = n-1` no such 3-cycle exists and a caller must search instead.
pub fn default_zeta(w: usize, n: usize) -> Result<Permutation, Error> {
    if w == 0 || w + 1 >= n {
        return Err(Error::IndexOutOfRange {
            context: format!("default zeta needs 1 <= w <= n-2, got w = {w}, n = {n}"),
        });
    }
    // 0-based: w-1 -> w+1 -> w -> w-1.
    Permutation::three_cycle(n, w - 1, w + 1, w)
}

/// The two conditions on `zeta`: it is even, maps the prefix `[w-1]` into
/// `[w]` and sends `w+1` into `[w]` (1-based statement; 0-based check).
pub fn zeta_conditions_hold(zeta: &Permutation, w: usize, n: usize) -> bool {
    if zeta.n() != n || w == 0 || w >= n {
        return false;
    }
    zeta.is_even()
        && (0..w.saturating_sub(1)).all(|v| zeta.apply(v) < w)
        && zeta.apply(w) < w
}

/// The largest `eps >= 0` keeping every component of the violating point
/// nonnegative, or `None` when every `eps` works. Guaranteed positive when
/// the split conditions hold for `w`.
pub fn max_admissible_epsilon(
    values: &[Vec<Rational>],
    w: usize,
) -> Result<Option<Rational>, Error> {
    let mut best: Option<Rational> = None;
    let mut tighten = |constant: Rational, coefficient: Rational| {
        if coefficient.is_negative() {
            let bound = &constant / &(-&coefficient);
            if best.as_ref().is_none_or(|b| bound < *b) {
                best = Some(bound);
            }
        }
    };
    for row in values {
        let n = row.len();
        if w == 0 || w >= n {
            return Err(Error::IndexOutOfRange {
                context: format!("epsilon bound needs 1 <= w <= n-1, got w = {w}"),
            });
        }
        let head: Rational = row[..w].iter().cloned().sum();
        let tail: Rational = row[w..].iter().cloned().sum();
        let delta = &row[w - 1] - &row[w];
        tighten(head, delta.clone());
        tighten(tail, -&delta);
    }
    Ok(best)
}

/// Builds the violating point `y = (1+eps) s*(Λ(id), w) - eps s*(Λ(zeta), w)`
/// and its certificate.
///
/// `y` is computed twice - as the affine combination of averaged section
/// values and by the simplified per-component closed forms - and the two
/// must agree exactly. The projected facet value is likewise computed twice
/// (via the vertex averages over `H*_w` and via the closed form
/// `w(w+1)/2 - eps`). Preconditions are rejected with the violated
/// condition named; if `eps` breaks nonnegativity the maximal admissible
/// value is reported instead.
pub fn build_violating_point(
    s: &Section,
    part: &VerifiedPartition,
    w: usize,
    zeta: &Permutation,
    epsilon: &Rational,
) -> Result<ViolationCertificate, Error> {
    let n = s.n();
    if epsilon.is_negative() {
        return Err(Error::PreconditionViolated {
            condition: "epsilon must be nonnegative".into(),
        });
    }
    if w == 0 || w >= n {
        return Err(Error::IndexOutOfRange {
            context: format!("violating point needs 1 <= w <= n-1, got w = {w}"),
        });
    }
    let values = identity_value_rows(s, part)?;
    for (i, row) in values.iter().enumerate() {
        if row.iter().any(Rational::is_negative) {
            return Err(Error::PreconditionViolated {
                condition: format!("A_{} has a negative value at the identity vertex", i + 1),
            });
        }
        let tail_positive = row[w..].iter().any(Rational::is_positive);
        if row[w - 1].is_positive() && !tail_positive {
            return Err(Error::PreconditionViolated {
                condition: format!("(end) fails for A_{} at w = {w}", i + 1),
            });
        }
        let head_positive = row[..w].iter().any(Rational::is_positive);
        if row[w].is_positive() && !head_positive {
            return Err(Error::PreconditionViolated {
                condition: format!("(start) fails for A_{} at w = {w}", i + 1),
            });
        }
    }
    if !zeta.is_even() {
        return Err(Error::PreconditionViolated {
            condition: "zeta must be even".into(),
        });
    }
    if !zeta_conditions_hold(zeta, w, n) {
        return Err(Error::PreconditionViolated {
            condition: format!("zeta = {zeta} violates the prefix conditions at w = {w}"),
        });
    }

    // Route one: affine combination of averaged section values.
    let id = Permutation::identity(n);
    let avg_id = average_section(s, part, &id, w)?;
    let avg_zeta = average_section(s, part, zeta, w)?;
    let one_plus = &Rational::one() + epsilon;
    let y = avg_id.scale(&one_plus).sub(&avg_zeta.scale(epsilon));

    // Route two: the simplified closed forms from the values at Λ(id).
    let mut closed = RatVector::zero(s.dim());
    let id_value = s.value(&id)?;
    for &b in part.b_singletons() {
        closed[b] = id_value[b].clone();
    }
    let w_rat = Rational::from(w);
    let rest_rat = Rational::from(n - w);
    for (a, row) in part.a_sets().iter().zip(values.iter()) {
        let head: Rational = row[..w].iter().cloned().sum();
        let tail: Rational = row[w..].iter().cloned().sum();
        let swing = &(epsilon * &row[w - 1]) - &(epsilon * &row[w]);
        let low = &(&head + &swing) / &w_rat;
        let high = &(&tail - &swing) / &rest_rat;
        for t in 0..n {
            closed[a[t]] = if t < w { low.clone() } else { high.clone() };
        }
    }
    if y != closed {
        return Err(Error::HypothesisBreach {
            stage: "violating point".into(),
            detail: "affine combination disagrees with the closed forms".into(),
        });
    }

    if !y.is_nonnegative() {
        let max_admissible =
            max_admissible_epsilon(&values, w)?.unwrap_or_else(Rational::zero);
        return Err(Error::EpsilonTooLarge { max_admissible });
    }

    // Projected facet value, via the vertex averages over H*_w...
    let h = h_star_subgroup(w, n)?;
    let size = Rational::from(h.len());
    let mut facet_sum_id = Rational::zero();
    let mut facet_sum_zeta = Rational::zero();
    for pi in h.iter() {
        let x_id = lambda_vertex(pi);
        let x_zeta = lambda_vertex(&pi.compose(zeta));
        for v in 0..w {
            facet_sum_id += &x_id[v];
            facet_sum_zeta += &x_zeta[v];
        }
    }
    facet_sum_id = &facet_sum_id / &size;
    facet_sum_zeta = &facet_sum_zeta / &size;
    let projected_value = &(&one_plus * &facet_sum_id) - &(epsilon * &facet_sum_zeta);

    // ...and via the closed form w(w+1)/2 - eps.
    let facet_rhs = Rational::from(w * (w + 1) / 2);
    if projected_value != &facet_rhs - epsilon {
        return Err(Error::HypothesisBreach {
            stage: "violating point".into(),
            detail: "projected facet value disagrees with the closed form".into(),
        });
    }

    Ok(ViolationCertificate {
        w,
        zeta: zeta.clone(),
        epsilon: epsilon.clone(),
        y,
        violated_facet: (1u32 << w) - 1,
        facet_rhs,
        projected_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn split_element_skips_disqualified_w() {
        // Single row (1,0,0,0,0,0): w = 1 violates (end), w = 2 works.
        let values = vec![vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)]];
        assert_eq!(find_split_element(&values).unwrap(), Some(2));

        // All-zero rows: both implications vacuous at w = 1.
        let values = vec![vec![rat(0); 6], vec![rat(0); 6]];
        assert_eq!(find_split_element(&values).unwrap(), Some(1));

        // (0,..,0,1) disqualifies w = 5 by (start); (1,0,..,0) disqualifies
        // w = 1 by (end); the smallest survivor is w = 2.
        let values = vec![
            vec![rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)],
            vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)],
        ];
        assert_eq!(find_split_element(&values).unwrap(), Some(2));
    }

    #[test]
    fn split_element_rejects_negative_values() {
        let values = vec![vec![rat(1), rat(-1), rat(0)]];
        assert!(find_split_element(&values).is_err());
    }

    #[test]
    fn default_zeta_satisfies_its_conditions() {
        let (n, w) = (6, 2);
        let zeta = default_zeta(w, n).unwrap();
        // 1-based: zeta(2) = 4, zeta(4) = 3, zeta(3) = 2.
        assert_eq!(zeta.apply(1), 3);
        assert_eq!(zeta.apply(3), 2);
        assert_eq!(zeta.apply(2), 1);
        assert!(zeta.is_even());
        assert!(zeta_conditions_hold(&zeta, w, n));
        for w in 1..=n - 2 {
            let zeta = default_zeta(w, n).unwrap();
            assert!(zeta_conditions_hold(&zeta, w, n), "w = {w}");
            // The prefix [w-1] is fixed pointwise, hence inside [w].
            for v in 0..w.saturating_sub(1) {
                assert_eq!(zeta.apply(v), v);
            }
        }
        assert!(default_zeta(n - 1, n).is_err());
        assert!(default_zeta(0, n).is_err());
    }

    proptest::proptest! {
        /// With fewer than (n-1)/2 value rows a split element always
        /// exists: each row disqualifies at most one w per condition.
        #[test]
        fn split_element_exists_below_the_row_bound(
            numerators in proptest::collection::vec(0i64..=4, 2 * 7),
            denominators in proptest::collection::vec(1i64..=3, 2 * 7),
        ) {
            let n = 7;
            let values: Vec<Vec<Rational>> = (0..2)
                .map(|i| {
                    (0..n)
                        .map(|t| {
                            Rational::new(numerators[i * n + t], denominators[i * n + t])
                                .unwrap()
                        })
                        .collect()
                })
                .collect();
            let w = find_split_element(&values).unwrap();
            proptest::prop_assert!(w.is_some(), "2 rows < (7-1)/2 guarantees a split");
            let w = w.unwrap();
            for row in &values {
                let tail = row[w..].iter().any(Rational::is_positive);
                proptest::prop_assert!(!row[w - 1].is_positive() || tail);
                let head = row[..w].iter().any(Rational::is_positive);
                proptest::prop_assert!(!row[w].is_positive() || head);
            }
        }
    }

    #[test]
    fn epsilon_bound_comes_from_the_binding_component() {
        // Row (1,2,3,4,5,6) at w = 2: head constraint 3 + eps(2-3) >= 0
        // binds at eps = 3; tail constraint is slack.
        let values = vec![(1..=6).map(rat).collect::<Vec<_>>()];
        assert_eq!(max_admissible_epsilon(&values, 2).unwrap(), Some(rat(3)));
        // A constant-zero row imposes nothing.
        let values = vec![vec![rat(0); 6]];
        assert_eq!(max_admissible_epsilon(&values, 2).unwrap(), None);
    }
}
