//! Dense two-phase simplex over exact rationals, Bland's rule.
//!
//! Solves min c.x subject to A x = b, x >= 0. Problem sizes in this crate are
//! tiny (membership certificates and small support-function programs), so a
//! dense tableau is the simplest correct choice.

use num_traits::{One, Zero};

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rat, solution: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    ncols: usize,
    /// m rows of length ncols + 1; the last entry is the rhs.
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= piv.clone();
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[c].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                let delta = &factor * p;
                *x -= delta;
            }
        }
        self.basis[r] = c;
    }

    fn reduced_costs(&self, costs: &[Rat]) -> Vec<Rat> {
        let mut rc: Vec<Rat> = costs.to_vec();
        for (i, &bi) in self.basis.iter().enumerate() {
            let cb = &costs[bi];
            if cb.is_zero() {
                continue;
            }
            for (x, row_x) in rc.iter_mut().zip(&self.rows[i]) {
                let delta = cb * row_x;
                *x -= delta;
            }
        }
        rc
    }

    fn objective(&self, costs: &[Rat]) -> Rat {
        let mut v = Rat::zero();
        for (i, &bi) in self.basis.iter().enumerate() {
            v += &costs[bi] * &self.rows[i][self.ncols];
        }
        v
    }

    /// Runs simplex iterations until optimal (Ok) or unbounded (Err).
    fn optimize(&mut self, costs: &[Rat]) -> Result<(), ()> {
        loop {
            let rc = self.reduced_costs(costs);
            // Bland: entering column is the smallest index with negative
            // reduced cost.
            let entering = (0..self.ncols).find(|&j| rc[j] < Rat::zero());
            let Some(c) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][c] > Rat::zero() {
                    let ratio = &self.rows[r][self.ncols] / &self.rows[r][c];
                    let better = match &leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Err(()),
            }
        }
    }

    fn solution(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.ncols];
        for (i, &bi) in self.basis.iter().enumerate() {
            x[bi] = self.rows[i][self.ncols].clone();
        }
        x
    }
}

/// Minimizes `costs . x` subject to `a x = b, x >= 0`.
pub fn solve_lp(a: &[Vec<Rat>], b: &[Rat], costs: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = costs.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Phase 1: artificial variables, rhs made nonnegative.
    let ncols = n + m;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i] < Rat::zero();
        let mut row: Vec<Rat> = Vec::with_capacity(ncols + 1);
        for x in &a[i] {
            row.push(if neg { -x.clone() } else { x.clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if neg { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
        basis.push(n + i);
    }
    let mut tab = Tableau { ncols, rows, basis };

    let mut phase1_costs = vec![Rat::zero(); ncols];
    for x in phase1_costs.iter_mut().skip(n) {
        *x = Rat::one();
    }
    if tab.optimize(&phase1_costs).is_err() {
        // Phase 1 objective is bounded below by zero; unboundedness is
        // impossible.
        unreachable!("phase-1 simplex cannot be unbounded");
    }
    if !tab.objective(&phase1_costs).is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive any artificial variable out of the basis; a row where that is
    // impossible is redundant and can be dropped.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            match (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // Phase 2 on the original columns only.
    for row in tab.rows.iter_mut() {
        let rhs = row.pop().unwrap();
        row.truncate(n);
        row.push(rhs);
    }
    tab.ncols = n;

    match tab.optimize(costs) {
        Err(()) => LpOutcome::Unbounded,
        Ok(()) => LpOutcome::Optimal {
            value: tab.objective(costs),
            solution: tab.solution(),
        },
    }
}

/// Feasibility of `a x = b, x >= 0`; returns a basic feasible solution.
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    match solve_lp(a, b, &vec![Rat::zero(); n]) {
        LpOutcome::Optimal { solution, .. } => Some(solution),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn minimizes_simple_program() {
        // min x + 2y  s.t.  x + y - s = 3, x,y,s >= 0  -> x=3, value 3.
        let a = vec![vec![rat_int(1), rat_int(1), rat_int(-1)]];
        let b = vec![rat_int(3)];
        let c = vec![rat_int(1), rat_int(2), rat_int(0)];
        match solve_lp(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_int(3)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible() {
        // x = -1, x >= 0.
        let a = vec![vec![rat_int(1)]];
        let b = vec![rat_int(-1)];
        assert_eq!(solve_lp(&a, &b, &[rat_int(0)]), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        // min -x s.t. x - s = 1.
        let a = vec![vec![rat_int(1), rat_int(-1)]];
        let b = vec![rat_int(1)];
        let c = vec![rat_int(-1), rat_int(0)];
        assert_eq!(solve_lp(&a, &b, &c), LpOutcome::Unbounded);
    }

    #[test]
    fn fractional_optimum_is_exact() {
        // min x1 + 2 x2 s.t. 2 x1 + x2 - s = 5 -> optimum 5/2 at x1 = 5/2.
        let a = vec![vec![rat_int(2), rat_int(1), rat_int(-1)]];
        let b = vec![rat_int(5)];
        let c = vec![rat_int(1), rat_int(2), rat_int(0)];
        match solve_lp(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(5, 2)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn degenerate_equalities_drop_redundant_rows() {
        // x + y = 2 stated twice.
        let a = vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        let b = vec![rat_int(2), rat_int(2)];
        let c = vec![rat_int(1), rat_int(0)];
        match solve_lp(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_int(0)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
