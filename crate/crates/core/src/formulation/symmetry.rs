use std::collections::HashMap;

use super::{Formulation, SymmetryCertificate};
use crate::exactnum::{RatMatrix, RatVector, Rational};
use crate::permgroup::Permutation;
use crate::Error;

/// Default cap on the extension dimension for certificate search.
pub const DEFAULT_SEARCH_CAP: usize = 128;

/// Checks a symmetry certificate by exact matrix identity: permuting the
/// columns of `(A=, b=)` and `(A<=, b<=)` by `kappa` and their rows by
/// `rho_eq` / `rho_ineq` must reproduce the matrices entry for entry, and
/// the projection must satisfy `p[pi(v)][kappa(l)] = p[v][l]` (equivalently
/// `p(kappa.y) = pi.p(y)` for all `y`).
///
/// Equality is literal, not up to row scaling; pre-normalize rows for a
/// scale-invariant comparison.
pub fn verify_symmetry_certificate(f: &Formulation, cert: &SymmetryCertificate) -> bool {
    let d = f.dim();
    let m = f.target_dim();
    let (eq_lhs, eq_rhs) = f.equalities();
    let (ineq_lhs, ineq_rhs) = f.inequalities();
    if cert.pi.n() != m
        || cert.kappa.n() != d
        || cert.rho_eq.n() != eq_lhs.nrows()
        || cert.rho_ineq.n() != ineq_lhs.nrows()
    {
        return false;
    }

    let block_invariant = |lhs: &RatMatrix, rhs: &RatVector, rho: &Permutation| -> bool {
        for r in 0..lhs.nrows() {
            let target = rho.apply(r);
            if rhs[target] != rhs[r] {
                return false;
            }
            for l in 0..d {
                if lhs.entry(target, cert.kappa.apply(l)) != lhs.entry(r, l) {
                    return false;
                }
            }
        }
        true
    };

    if !block_invariant(eq_lhs, eq_rhs, &cert.rho_eq) {
        return false;
    }
    if !block_invariant(ineq_lhs, ineq_rhs, &cert.rho_ineq) {
        return false;
    }

    let p = f.projection();
    for v in 0..m {
        let target = cert.pi.apply(v);
        for l in 0..d {
            if p.entry(target, cert.kappa.apply(l)) != p.entry(v, l) {
                return false;
            }
        }
    }
    true
}

/// Searches for a symmetry certificate extending `pi`, by backtracking over
/// column matchings guided by row/column fingerprints. Any returned
/// certificate passes [`verify_symmetry_certificate`].
pub fn find_symmetry_certificate(
    f: &Formulation,
    pi: &Permutation,
) -> Result<Option<SymmetryCertificate>, Error> {
    find_symmetry_certificate_with_cap(f, pi, DEFAULT_SEARCH_CAP)
}

pub fn find_symmetry_certificate_with_cap(
    f: &Formulation,
    pi: &Permutation,
    cap: usize,
) -> Result<Option<SymmetryCertificate>, Error> {
    if pi.n() != f.target_dim() {
        return Err(Error::dim(format!(
            "pi is over [{}], target space has dim {}",
            pi.n(),
            f.target_dim()
        )));
    }
    if f.dim() > cap {
        return Err(Error::CapExceeded {
            context: "symmetry certificate search".into(),
            requested: f.dim(),
            cap,
            estimate: "backtracking over column matchings".into(),
        });
    }
    if pi.is_identity() {
        return Ok(Some(SymmetryCertificate::identity(f)));
    }

    let search = CertificateSearch::new(f, pi);
    Ok(search.run())
}

struct CertificateSearch<'a> {
    f: &'a Formulation,
    pi: Permutation,
    d: usize,
    /// candidates[l]: columns with matching structural color and projection
    /// pattern.
    candidates: Vec<Vec<usize>>,
    /// Source columns in assignment order (most constrained first).
    order: Vec<usize>,
}

impl<'a> CertificateSearch<'a> {
    fn new(f: &'a Formulation, pi: &Permutation) -> Self {
        let d = f.dim();
        let m = f.target_dim();
        let p = f.projection();
        let pi_inv = pi.inverse();

        let colors = refine_colors(f);

        // kappa(l) must carry the pi-shifted projection pattern of l.
        let pattern = |l: usize| -> Vec<Rational> {
            (0..m).map(|v| p.entry(v, l).clone()).collect()
        };
        let shifted = |l: usize| -> Vec<Rational> {
            (0..m).map(|v| p.entry(pi_inv.apply(v), l).clone()).collect()
        };
        let target_patterns: Vec<Vec<Rational>> = (0..d).map(pattern).collect();

        let mut candidates = vec![Vec::new(); d];
        for l in 0..d {
            let wanted = shifted(l);
            for j in 0..d {
                if colors[j] == colors[l] && target_patterns[j] == wanted {
                    candidates[l].push(j);
                }
            }
        }

        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&l| (candidates[l].len(), l));

        CertificateSearch {
            f,
            pi: pi.clone(),
            d,
            candidates,
            order,
        }
    }

    fn run(&self) -> Option<SymmetryCertificate> {
        let mut assignment = vec![usize::MAX; self.d];
        let mut used = vec![false; self.d];
        self.assign(0, &mut assignment, &mut used)
    }

    fn assign(
        &self,
        depth: usize,
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> Option<SymmetryCertificate> {
        if depth == self.d {
            return self.close(assignment);
        }
        let l = self.order[depth];
        for &j in &self.candidates[l] {
            if used[j] {
                continue;
            }
            assignment[l] = j;
            used[j] = true;
            if self.rows_still_matchable(assignment) {
                if let Some(cert) = self.assign(depth + 1, assignment, used) {
                    return Some(cert);
                }
            }
            assignment[l] = usize::MAX;
            used[j] = false;
        }
        None
    }

    /// Partition rows by their coefficients on assigned columns; the source
    /// and target multisets must agree or no row bijection can exist.
    fn rows_still_matchable(&self, assignment: &[usize]) -> bool {
        let assigned: Vec<(usize, usize)> = self
            .order
            .iter()
            .copied()
            .filter(|&l| assignment[l] != usize::MAX)
            .map(|l| (l, assignment[l]))
            .collect();
        let (eq_lhs, eq_rhs) = self.f.equalities();
        let (ineq_lhs, ineq_rhs) = self.f.inequalities();
        for (lhs, rhs) in [(eq_lhs, eq_rhs), (ineq_lhs, ineq_rhs)] {
            let mut source: Vec<Vec<&Rational>> = Vec::with_capacity(lhs.nrows());
            let mut target: Vec<Vec<&Rational>> = Vec::with_capacity(lhs.nrows());
            for r in 0..lhs.nrows() {
                let mut s = vec![&rhs[r]];
                let mut t = vec![&rhs[r]];
                for &(l, j) in &assigned {
                    s.push(lhs.entry(r, l));
                    t.push(lhs.entry(r, j));
                }
                source.push(s);
                target.push(t);
            }
            source.sort();
            target.sort();
            if source != target {
                return false;
            }
        }
        true
    }

    /// Completes a full column assignment into a certificate by matching
    /// rows (lowest-index within identical groups), then verifies it.
    fn close(&self, assignment: &[usize]) -> Option<SymmetryCertificate> {
        let kappa = Permutation::from_images(assignment.to_vec()).ok()?;
        let (eq_lhs, eq_rhs) = self.f.equalities();
        let (ineq_lhs, ineq_rhs) = self.f.inequalities();
        let rho_eq = match_rows(eq_lhs, eq_rhs, &kappa)?;
        let rho_ineq = match_rows(ineq_lhs, ineq_rhs, &kappa)?;
        let cert = SymmetryCertificate {
            pi: self.pi.clone(),
            kappa,
            rho_eq,
            rho_ineq,
        };
        verify_symmetry_certificate(self.f, &cert).then_some(cert)
    }
}

/// Finds the row permutation rho with `A[rho(r)][kappa(l)] == A[r][l]` and
/// matching rhs, choosing the lowest unused row among identical candidates.
fn match_rows(lhs: &RatMatrix, rhs: &RatVector, kappa: &Permutation) -> Option<Permutation> {
    let nrows = lhs.nrows();
    let d = kappa.n();
    let mut images = vec![usize::MAX; nrows];
    let mut used = vec![false; nrows];
    for r in 0..nrows {
        let mut found = None;
        'target: for t in 0..nrows {
            if used[t] || rhs[t] != rhs[r] {
                continue;
            }
            for l in 0..d {
                if lhs.entry(t, kappa.apply(l)) != lhs.entry(r, l) {
                    continue 'target;
                }
            }
            found = Some(t);
            break;
        }
        let t = found?;
        images[r] = t;
        used[t] = true;
    }
    Permutation::from_images(images).ok()
}

/// Iterative color refinement on the bipartite row/column incidence
/// structure of the constraint matrices. Columns that can be exchanged by
/// some symmetry always share a color.
fn refine_colors(f: &Formulation) -> Vec<u64> {
    let d = f.dim();
    let (eq_lhs, eq_rhs) = f.equalities();
    let (ineq_lhs, ineq_rhs) = f.inequalities();
    let blocks: [(&RatMatrix, &RatVector, u64); 2] =
        [(eq_lhs, eq_rhs, 0), (ineq_lhs, ineq_rhs, 1)];

    let mut col_colors = vec![0u64; d];
    let mut row_colors: Vec<Vec<u64>> = blocks
        .iter()
        .map(|(lhs, _, _)| vec![0u64; lhs.nrows()])
        .collect();

    let mut distinct = 0usize;
    for _round in 0..(d + eq_lhs.nrows() + ineq_lhs.nrows() + 2) {
        // Rows: kind, rhs, multiset of (col color, coefficient).
        let mut interner: HashMap<String, u64> = HashMap::new();
        for (b, (lhs, rhs, kind)) in blocks.iter().enumerate() {
            for r in 0..lhs.nrows() {
                let mut sig: Vec<String> = (0..d)
                    .filter(|&l| !lhs.entry(r, l).is_zero())
                    .map(|l| format!("{}:{}", col_colors[l], lhs.entry(r, l)))
                    .collect();
                sig.sort();
                let key = format!("{kind}|{}|{}", rhs[r], sig.join(","));
                let next = interner.len() as u64;
                row_colors[b][r] = *interner.entry(key).or_insert(next);
            }
        }
        // Columns: multiset of (block, row color, coefficient).
        let mut interner: HashMap<String, u64> = HashMap::new();
        for l in 0..d {
            let mut sig: Vec<String> = Vec::new();
            for (b, (lhs, _, _)) in blocks.iter().enumerate() {
                for r in 0..lhs.nrows() {
                    if !lhs.entry(r, l).is_zero() {
                        sig.push(format!("{b}:{}:{}", row_colors[b][r], lhs.entry(r, l)));
                    }
                }
            }
            sig.sort();
            let key = sig.join(",");
            let next = interner.len() as u64;
            col_colors[l] = *interner.entry(key).or_insert(next);
        }
        let now = {
            let mut sorted = col_colors.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len()
        };
        if now == distinct {
            break;
        }
        distinct = now;
    }
    col_colors
}
