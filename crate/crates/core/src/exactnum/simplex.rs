use super::{RatMatrix, RatVector, Rational};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpSense {
    Maximize,
    Minimize,
}

/// Outcome of an exact LP solve.
#[derive(Debug, Clone, PartialEq)]
pub enum LpResult {
    /// When optimal, the optimizer satisfies every constraint exactly.
    Optimal { value: Rational, point: RatVector },
    Infeasible,
    Unbounded,
}

impl LpResult {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpResult::Optimal { .. })
    }
}

/// Solves, exactly, the problem
///
/// ```text
///   max/min  objective · y
///   s.t.     A_eq · y  =  b_eq
///            A_le · y  <= b_le
///            y_j >= 0   for every j with nonneg[j]
/// ```
///
/// Two-phase primal simplex with Bland's rule: termination is guaranteed and
/// no floating point is involved. Variables without a sign constraint are
/// split into differences of two nonnegative variables internally.
pub fn solve_exact_lp(
    objective: &RatVector,
    eq: (&RatMatrix, &RatVector),
    ineq: (&RatMatrix, &RatVector),
    nonneg: &[bool],
    sense: LpSense,
) -> Result<LpResult, Error> {
    let d = objective.dim();
    let (a_eq, b_eq) = eq;
    let (a_le, b_le) = ineq;
    if a_eq.nrows() != b_eq.dim() {
        return Err(Error::dim("equality rows vs rhs"));
    }
    if a_le.nrows() != b_le.dim() {
        return Err(Error::dim("inequality rows vs rhs"));
    }
    if a_eq.nrows() > 0 && a_eq.ncols() != d {
        return Err(Error::dim("equality columns vs objective"));
    }
    if a_le.nrows() > 0 && a_le.ncols() != d {
        return Err(Error::dim("inequality columns vs objective"));
    }
    if nonneg.len() != d {
        return Err(Error::dim("nonneg mask vs objective"));
    }

    // Column layout: one column per sign-constrained variable, a (+, -) pair
    // per free variable, then one slack per inequality row.
    let mut plus_col = vec![0usize; d];
    let mut minus_col: Vec<Option<usize>> = vec![None; d];
    let mut ncols = 0usize;
    for j in 0..d {
        plus_col[j] = ncols;
        ncols += 1;
        if !nonneg[j] {
            minus_col[j] = Some(ncols);
            ncols += 1;
        }
    }
    let slack_start = ncols;
    ncols += a_le.nrows();

    let expand = |coeffs: &RatVector, slack: Option<usize>| -> Vec<Rational> {
        let mut row = vec![Rational::zero(); ncols];
        for j in 0..d {
            let c = &coeffs[j];
            if c.is_zero() {
                continue;
            }
            row[plus_col[j]] = c.clone();
            if let Some(mc) = minus_col[j] {
                row[mc] = -c;
            }
        }
        if let Some(s) = slack {
            row[slack_start + s] = Rational::one();
        }
        row
    };

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(a_eq.nrows() + a_le.nrows());
    let mut rhs: Vec<Rational> = Vec::with_capacity(rows.capacity());
    let mut slack_basic: Vec<Option<usize>> = Vec::with_capacity(rows.capacity());
    for i in 0..a_eq.nrows() {
        rows.push(expand(a_eq.row(i), None));
        rhs.push(b_eq[i].clone());
        slack_basic.push(None);
    }
    for r in 0..a_le.nrows() {
        rows.push(expand(a_le.row(r), Some(r)));
        rhs.push(b_le[r].clone());
        slack_basic.push(Some(slack_start + r));
    }

    // Normalize to rhs >= 0; a negated inequality row loses its unit slack.
    for (r, value) in rhs.iter_mut().enumerate() {
        if value.is_negative() {
            for e in rows[r].iter_mut() {
                if !e.is_zero() {
                    *e = -&*e;
                }
            }
            *value = -&*value;
            slack_basic[r] = None;
        }
    }

    // Initial basis: surviving unit slacks where available, artificials
    // elsewhere.
    let art_start = ncols;
    let mut basis = vec![0usize; rows.len()];
    let mut n_art = 0usize;
    for r in 0..rows.len() {
        if let Some(col) = slack_basic[r] {
            basis[r] = col;
        } else {
            for row in rows.iter_mut() {
                row.push(Rational::zero());
            }
            rows[r][ncols + n_art] = Rational::one();
            basis[r] = ncols + n_art;
            n_art += 1;
        }
    }
    let total_cols = ncols + n_art;

    let mut tab = Tableau {
        ncols: total_cols,
        rows,
        rhs,
        basis,
    };

    if n_art > 0 {
        let mut phase1 = vec![Rational::zero(); total_cols];
        for c in art_start..total_cols {
            phase1[c] = Rational::one();
        }
        tab.run(&phase1, total_cols);
        let infeas: Rational = (0..tab.rows.len())
            .filter(|&r| tab.basis[r] >= art_start)
            .map(|r| tab.rhs[r].clone())
            .sum();
        if !infeas.is_zero() {
            return Ok(LpResult::Infeasible);
        }
        tab.evict_artificials(art_start);
    }

    let mut cost = vec![Rational::zero(); total_cols];
    for j in 0..d {
        let c = match sense {
            LpSense::Minimize => objective[j].clone(),
            LpSense::Maximize => -&objective[j],
        };
        if c.is_zero() {
            continue;
        }
        cost[plus_col[j]] = c.clone();
        if let Some(mc) = minus_col[j] {
            cost[mc] = -c;
        }
    }
    if !tab.run(&cost, art_start) {
        return Ok(LpResult::Unbounded);
    }

    let mut point = RatVector::zero(d);
    for r in 0..tab.rows.len() {
        let col = tab.basis[r];
        if col >= slack_start {
            continue;
        }
        for j in 0..d {
            if plus_col[j] == col {
                point[j] = &point[j] + &tab.rhs[r];
            } else if minus_col[j] == Some(col) {
                point[j] = &point[j] - &tab.rhs[r];
            }
        }
    }
    let value = objective.dot(&point);
    Ok(LpResult::Optimal { value, point })
}

struct Tableau {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    /// Runs the simplex loop minimizing `orig_cost` with Bland's rule,
    /// allowing only columns `< allowed` to enter. Returns false on
    /// unboundedness.
    fn run(&mut self, orig_cost: &[Rational], allowed: usize) -> bool {
        let mut cost = orig_cost.to_vec();
        // Price out the starting basis.
        for r in 0..self.rows.len() {
            let f = cost[self.basis[r]].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..self.ncols {
                if !self.rows[r][c].is_zero() {
                    let delta = &self.rows[r][c] * &f;
                    cost[c] -= &delta;
                }
            }
        }

        loop {
            let Some(entering) = (0..allowed).find(|&c| cost[c].is_negative()) else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                if !self.rows[r][entering].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / &self.rows[r][entering];
                let better = match &leaving {
                    None => true,
                    Some((best_r, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[r] < self.basis[*best_r])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return false;
            };
            self.pivot(row, entering, &mut cost);
        }
    }

    fn pivot(&mut self, row: usize, col: usize, cost: &mut [Rational]) {
        let inv = self.rows[row][col].recip().expect("pivot entry is nonzero");
        for e in self.rows[row].iter_mut() {
            if !e.is_zero() {
                *e = &*e * &inv;
            }
        }
        self.rhs[row] = &self.rhs[row] * &inv;
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let f = self.rows[r][col].clone();
            for c in 0..self.ncols {
                if !self.rows[row][c].is_zero() {
                    let delta = &self.rows[row][c] * &f;
                    self.rows[r][c] -= &delta;
                }
            }
            let delta = &self.rhs[row] * &f;
            self.rhs[r] -= &delta;
        }
        let f = cost[col].clone();
        if !f.is_zero() {
            for c in 0..self.ncols {
                if !self.rows[row][c].is_zero() {
                    let delta = &self.rows[row][c] * &f;
                    cost[c] -= &delta;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Pivots zero-valued artificial variables out of the basis; rows that
    /// cannot be pivoted are redundant and get dropped.
    fn evict_artificials(&mut self, art_start: usize) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < art_start {
                r += 1;
                continue;
            }
            match (0..art_start).find(|&c| !self.rows[r][c].is_zero()) {
                Some(col) => {
                    let mut dummy = vec![Rational::zero(); self.ncols];
                    self.pivot(r, col, &mut dummy);
                    r += 1;
                }
                None => {
                    self.rows.swap_remove(r);
                    self.rhs.swap_remove(r);
                    self.basis.swap_remove(r);
                }
            }
        }
    }
}
