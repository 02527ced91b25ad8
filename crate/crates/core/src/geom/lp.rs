//! Exact rational linear programming via a two-phase tableau simplex.
//!
//! Variables are free reals; the caller supplies inequalities `a·x <= b` and
//! equalities `a·x = b`. Bland's rule guarantees termination. Problem sizes
//! in this crate are tiny, so the dense tableau is the right tool.

use super::num::{dot, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum LpResult {
    Optimal { x: Vec<Rat>, value: Rat },
    Unbounded,
    Infeasible,
}

impl LpResult {
    pub fn optimal(self) -> Option<(Vec<Rat>, Rat)> {
        match self {
            LpResult::Optimal { x, value } => Some((x, value)),
            _ => None,
        }
    }
}

/// Maximizes `objective · x` over `{ ineqs: a·x <= b } ∩ { eqs: a·x = b }`.
pub fn maximize(objective: &[Rat], ineqs: &[(Vec<Rat>, Rat)], eqs: &[(Vec<Rat>, Rat)]) -> LpResult {
    Tableau::build(objective, ineqs, eqs).run()
}

/// Feasibility query; returns a point of the polyhedron if nonempty.
pub fn feasible_point(
    n_vars: usize,
    ineqs: &[(Vec<Rat>, Rat)],
    eqs: &[(Vec<Rat>, Rat)],
) -> Option<Vec<Rat>> {
    let zero_obj = vec![Rat::zero(); n_vars];
    match maximize(&zero_obj, ineqs, eqs) {
        LpResult::Optimal { x, .. } => Some(x),
        LpResult::Unbounded => unreachable!("zero objective cannot be unbounded"),
        LpResult::Infeasible => None,
    }
}

struct Tableau {
    n_free: usize,
    /// columns: [x+ (n), x- (n), slacks (m1), artificials (m)] + rhs
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    n_struct: usize,
    n_total: usize,
    objective: Vec<Rat>,
}

enum PhaseOutcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn build(objective: &[Rat], ineqs: &[(Vec<Rat>, Rat)], eqs: &[(Vec<Rat>, Rat)]) -> Self {
        let n = objective.len();
        let m1 = ineqs.len();
        let m = m1 + eqs.len();
        let n_struct = 2 * n + m1;
        let n_total = n_struct + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for (idx, (a, b)) in ineqs.iter().chain(eqs.iter()).enumerate() {
            assert_eq!(a.len(), n, "constraint arity mismatch");
            let mut row = vec![Rat::zero(); n_total];
            let negate = b < &Rat::zero();
            let sign = if negate { -Rat::one() } else { Rat::one() };
            for j in 0..n {
                row[j] = &a[j] * &sign;
                row[n + j] = -(&a[j] * &sign);
            }
            if idx < m1 {
                row[2 * n + idx] = sign.clone();
            }
            row[n_struct + idx] = Rat::one();
            rows.push(row);
            rhs.push(if negate { -b.clone() } else { b.clone() });
        }
        Tableau {
            n_free: n,
            rows,
            rhs,
            basis: (0..m).map(|i| n_struct + i).collect(),
            n_struct,
            n_total,
            objective: objective.to_vec(),
        }
    }

    fn run(mut self) -> LpResult {
        let m = self.rows.len();
        if m == 0 {
            // Unconstrained: bounded iff the objective vanishes.
            return if self.objective.iter().all(|c| c.is_zero()) {
                LpResult::Optimal {
                    x: vec![Rat::zero(); self.n_free],
                    value: Rat::zero(),
                }
            } else {
                LpResult::Unbounded
            };
        }
        // Phase 1: maximize -sum(artificials).
        let mut phase1_cost = vec![Rat::zero(); self.n_total];
        for j in self.n_struct..self.n_total {
            phase1_cost[j] = -Rat::one();
        }
        match self.optimize(&phase1_cost, true) {
            PhaseOutcome::Unbounded => unreachable!("phase 1 is bounded"),
            PhaseOutcome::Optimal => {}
        }
        let p1_value = self.objective_value(&phase1_cost);
        if !p1_value.is_zero() {
            return LpResult::Infeasible;
        }
        // Drive remaining artificials out of the basis.
        for i in 0..m {
            if self.basis[i] >= self.n_struct {
                if let Some(j) = (0..self.n_struct).find(|&j| !self.rows[i][j].is_zero()) {
                    self.pivot(i, j);
                }
                // A fully zero structural row is redundant; its artificial
                // stays basic at value zero, which is harmless below because
                // artificial columns are barred from entering.
            }
        }
        // Phase 2 on the real objective.
        let mut phase2_cost = vec![Rat::zero(); self.n_total];
        for j in 0..self.n_free {
            phase2_cost[j] = self.objective[j].clone();
            phase2_cost[self.n_free + j] = -self.objective[j].clone();
        }
        match self.optimize(&phase2_cost, false) {
            PhaseOutcome::Unbounded => LpResult::Unbounded,
            PhaseOutcome::Optimal => {
                let mut x = vec![Rat::zero(); self.n_free];
                for (i, &bv) in self.basis.iter().enumerate() {
                    if bv < self.n_free {
                        x[bv] = &x[bv] + &self.rhs[i];
                    } else if bv < 2 * self.n_free {
                        x[bv - self.n_free] = &x[bv - self.n_free] - &self.rhs[i];
                    }
                }
                let value = dot(&self.objective, &x);
                LpResult::Optimal { x, value }
            }
        }
    }

    fn objective_value(&self, cost: &[Rat]) -> Rat {
        let mut v = Rat::zero();
        for (i, &bv) in self.basis.iter().enumerate() {
            v += &cost[bv] * &self.rhs[i];
        }
        v
    }

    fn reduced_cost(&self, cost: &[Rat], j: usize) -> Rat {
        let mut zj = Rat::zero();
        for (i, &bv) in self.basis.iter().enumerate() {
            if !self.rows[i][j].is_zero() {
                zj += &cost[bv] * &self.rows[i][j];
            }
        }
        &cost[j] - &zj
    }

    fn optimize(&mut self, cost: &[Rat], allow_artificial: bool) -> PhaseOutcome {
        let limit = if allow_artificial {
            self.n_total
        } else {
            self.n_struct
        };
        loop {
            // Bland: entering = smallest index with positive reduced cost.
            let entering = (0..limit).find(|&j| {
                !self.basis.contains(&j) && self.reduced_cost(cost, j) > Rat::zero()
            });
            let Some(j) = entering else {
                return PhaseOutcome::Optimal;
            };
            // Ratio test; Bland tie-break on smallest basis variable.
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][j] > Rat::zero() {
                    let ratio = &self.rhs[i] / &self.rows[i][j];
                    let replace = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if replace {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((i, _)) = best else {
                return PhaseOutcome::Unbounded;
            };
            self.pivot(i, j);
        }
    }

    fn pivot(&mut self, pivot_row: usize, pivot_col: usize) {
        let inv = self.rows[pivot_row][pivot_col].clone();
        for x in self.rows[pivot_row].iter_mut() {
            *x = &*x / &inv;
        }
        self.rhs[pivot_row] = &self.rhs[pivot_row] / &inv;
        for i in 0..self.rows.len() {
            if i != pivot_row && !self.rows[i][pivot_col].is_zero() {
                let f = self.rows[i][pivot_col].clone();
                for j in 0..self.n_total {
                    let t = &self.rows[pivot_row][j] * &f;
                    self.rows[i][j] = &self.rows[i][j] - &t;
                }
                let t = &self.rhs[pivot_row] * &f;
                self.rhs[i] = &self.rhs[i] - &t;
            }
        }
        self.basis[pivot_row] = pivot_col;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::num::{qvec, rat, rat_int};

    #[test]
    fn simple_box() {
        // max x + y on [0,1]^2 -> 2 at (1,1)
        let ineqs = vec![
            (qvec(&[1, 0]), rat_int(1)),
            (qvec(&[0, 1]), rat_int(1)),
            (qvec(&[-1, 0]), rat_int(0)),
            (qvec(&[0, -1]), rat_int(0)),
        ];
        let r = maximize(&qvec(&[1, 1]), &ineqs, &[]);
        let (x, v) = r.optimal().unwrap();
        assert_eq!(v, rat_int(2));
        assert_eq!(x, qvec(&[1, 1]));
    }

    #[test]
    fn unbounded_and_infeasible() {
        let r = maximize(&qvec(&[1]), &[(qvec(&[-1]), rat_int(0))], &[]);
        assert_eq!(r, LpResult::Unbounded);
        let r = maximize(
            &qvec(&[1]),
            &[(qvec(&[1]), rat_int(-1)), (qvec(&[-1]), rat_int(0))],
            &[],
        );
        assert_eq!(r, LpResult::Infeasible);
    }

    #[test]
    fn equality_constraints() {
        // max x subject to x + y = 1, x,y >= 0 -> 1
        let ineqs = vec![(qvec(&[-1, 0]), rat_int(0)), (qvec(&[0, -1]), rat_int(0))];
        let eqs = vec![(qvec(&[1, 1]), rat_int(1))];
        let (x, v) = maximize(&qvec(&[1, 0]), &ineqs, &eqs).optimal().unwrap();
        assert_eq!(v, rat_int(1));
        assert_eq!(dot(&qvec(&[1, 1]), &x), rat_int(1));
    }

    #[test]
    fn fractional_optimum() {
        // max y s.t. y <= x/2, y <= 1 - x  ->  y = 1/3 at x = 2/3
        let ineqs = vec![
            (qvec(&[-1, 2]), rat_int(0)),
            (qvec(&[1, 1]), rat_int(1)),
        ];
        let (_, v) = maximize(&qvec(&[0, 1]), &ineqs, &[]).optimal().unwrap();
        assert_eq!(v, rat(1, 3));
    }

    #[test]
    fn feasibility_with_negative_rhs() {
        // { x <= -2, -x <= 5 } is the interval [-5, -2]
        let p = feasible_point(
            1,
            &[(qvec(&[1]), rat_int(-2)), (qvec(&[-1]), rat_int(5))],
            &[],
        )
        .unwrap();
        assert!(p[0] <= rat_int(-2) && p[0] >= rat_int(-5));
    }

    #[test]
    fn degenerate_redundant_rows() {
        // Redundant equalities must not break phase transitions.
        let eqs = vec![
            (qvec(&[1, 1]), rat_int(2)),
            (qvec(&[2, 2]), rat_int(4)),
        ];
        let (x, _) = maximize(&qvec(&[1, 0]), &[(qvec(&[1, 0]), rat_int(5))], &eqs)
            .optimal()
            .unwrap();
        assert_eq!(x[0], rat_int(5));
        assert_eq!(x[1], rat_int(-3));
    }
}
