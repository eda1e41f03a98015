use super::VerifiedPartition;
use crate::exactnum::{RatVector, Rational};
use crate::permgroup::{h_star_subgroup, Permutation};
use crate::section::Section;
use crate::Error;

fn check_average_inputs(
    s: &Section,
    part: &VerifiedPartition,
    zeta: &Permutation,
    w: usize,
) -> Result<(), Error> {
    if part.n() != s.n() || part.d() != s.dim() {
        return Err(Error::dim("partition vs section".to_string()));
    }
    if zeta.n() != s.n() {
        return Err(Error::dim("zeta degree vs section".to_string()));
    }
    if w == 0 || w >= s.n() {
        return Err(Error::IndexOutOfRange {
            context: format!("averaging needs 1 <= w <= n-1, got w = {w}, n = {}", s.n()),
        });
    }
    Ok(())
}

/// The averaged section value `s*(x, w)` at the vertex `x = Λ(zeta)`,
/// computed by the closed forms the partition affords:
///
/// - `b`-components keep their value at `x`,
/// - `a^i_t` with `t <= w` averages the first `w` values of the set,
/// - `a^i_t` with `t > w` averages the remaining `n - w` values.
///
/// Equal, coordinate for coordinate, to the definitional average of
/// `s(pi.x)` over the prefix subgroup `H*_w` (see
/// [`brute_force_average`]); a verified partition is required for exactly
/// that reason.
pub fn average_section(
    s: &Section,
    part: &VerifiedPartition,
    zeta: &Permutation,
    w: usize,
) -> Result<RatVector, Error> {
    check_average_inputs(s, part, zeta, w)?;
    let n = s.n();
    let value = s.value(zeta)?.clone();
    let mut out = RatVector::zero(s.dim());
    for &b in part.b_singletons() {
        out[b] = value[b].clone();
    }
    let w_rat = Rational::from(w);
    let rest_rat = Rational::from(n - w);
    for a in part.a_sets() {
        let low: Rational = (0..w).map(|t| value[a[t]].clone()).sum();
        let high: Rational = (w..n).map(|t| value[a[t]].clone()).sum();
        let low_avg = &low / &w_rat;
        let high_avg = &high / &rest_rat;
        for t in 0..n {
            out[a[t]] = if t < w { low_avg.clone() } else { high_avg.clone() };
        }
    }
    Ok(out)
}

/// The definitional average `(1/|H*_w|) * sum_{pi in H*_w} s(pi.x)`,
/// evaluated by enumerating the subgroup. Independent of any partition;
/// this is the oracle the closed forms are checked against.
pub fn brute_force_average(
    s: &Section,
    zeta: &Permutation,
    w: usize,
) -> Result<RatVector, Error> {
    if zeta.n() != s.n() {
        return Err(Error::dim("zeta degree vs section".to_string()));
    }
    let h = h_star_subgroup(w, s.n())?;
    let mut sum = RatVector::zero(s.dim());
    for pi in h.iter() {
        let vertex_rank = pi.compose(zeta).lex_rank();
        sum = sum.add(s.value_at(vertex_rank));
    }
    let size = Rational::from(h.len());
    Ok(sum
        .iter()
        .map(|entry| entry / &size)
        .collect())
}
