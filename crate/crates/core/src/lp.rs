//! Exact linear programming over an ordered field.
//!
//! A dense two-phase primal simplex with Bland's rule, used for the
//! polyhedral decisions in [`crate::newton`]: vertex certification, Newton
//! polyhedron membership, and uniqueness of Minkowski decompositions. All
//! pivoting is exact; Bland's rule guarantees termination. Instances are
//! desk-scale (a handful of rows, tens of columns), so no factorization or
//! sparsity is attempted.

use crate::scalar::Scalar;

/// Result of an exact LP solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<Q> {
    Infeasible,
    Unbounded,
    Optimal(Q),
}

/// Decide whether `{x >= 0 : A x = b}` is nonempty.
pub fn feasible<Q: Scalar>(a: &[Vec<Q>], b: &[Q]) -> bool {
    let mut t = Tableau::phase_one(a, b);
    t.run_simplex();
    t.objective_value().is_zero()
}

/// Maximize `c . x` over `{x >= 0 : A x = b}`.
pub fn maximize<Q: Scalar>(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome<Q> {
    let mut t = Tableau::phase_one(a, b);
    t.run_simplex();
    if !t.objective_value().is_zero() {
        return LpOutcome::Infeasible;
    }
    t.enter_phase_two(c);
    if t.run_simplex() {
        LpOutcome::Optimal(t.objective_value())
    } else {
        LpOutcome::Unbounded
    }
}

struct Tableau<Q> {
    /// `rows[i]` holds the constraint coefficients followed by the rhs.
    rows: Vec<Vec<Q>>,
    /// Reduced-cost row; the last entry is the negated objective value.
    obj: Vec<Q>,
    basis: Vec<usize>,
    active: Vec<bool>,
    /// Number of structural variables; columns `>= n` are artificial.
    n: usize,
}

impl<Q: Scalar> Tableau<Q> {
    fn phase_one(a: &[Vec<Q>], b: &[Q]) -> Self {
        let m = a.len();
        assert_eq!(m, b.len(), "constraint count mismatch");
        let n = a.first().map(|r| r.len()).unwrap_or(0);
        let cols = n + m + 1;

        let mut rows = Vec::with_capacity(m);
        for (i, (coeffs, rhs)) in a.iter().zip(b.iter()).enumerate() {
            assert_eq!(coeffs.len(), n, "ragged constraint matrix");
            let flip = rhs < &Q::zero();
            let mut row = vec![Q::zero(); cols];
            for (j, v) in coeffs.iter().enumerate() {
                row[j] = if flip { -v.clone() } else { v.clone() };
            }
            row[n + i] = Q::one();
            row[cols - 1] = if flip { -rhs.clone() } else { rhs.clone() };
            rows.push(row);
        }

        // Maximize the negated sum of artificials: with the artificial basis,
        // the reduced cost of structural column j is the column sum of A and
        // the negated objective value is the rhs sum.
        let mut obj = vec![Q::zero(); cols];
        for row in &rows {
            for j in (0..n).chain(std::iter::once(cols - 1)) {
                obj[j] = obj[j].clone() + row[j].clone();
            }
        }

        Tableau {
            rows,
            obj,
            basis: (n..n + m).collect(),
            active: vec![true; m],
            n,
        }
    }

    fn objective_value(&self) -> Q {
        -self.obj[self.obj.len() - 1].clone()
    }

    fn rhs(&self, i: usize) -> &Q {
        &self.rows[i][self.obj.len() - 1]
    }

    /// Columns eligible to enter the basis (artificials only during phase 1,
    /// where they start basic and may never improve the objective anyway).
    fn allowed_cols(&self) -> usize {
        self.n
    }

    /// Bland's rule simplex loop. Returns `false` on an unbounded ray.
    fn run_simplex(&mut self) -> bool {
        loop {
            let Some(enter) = (0..self.allowed_cols()).find(|&j| self.obj[j] > Q::zero())
            else {
                return true;
            };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                if !self.active[i] || self.rows[i][enter] <= Q::zero() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / self.rows[i][enter].clone();
                let better = match &leave {
                    None => true,
                    Some((cur, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*cur])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return false;
            };
            self.pivot(row, enter);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = Q::one() / self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = self.rows[row].clone();
        for i in 0..self.rows.len() {
            if i != row {
                eliminate(&mut self.rows[i], col, &pivot_row);
            }
        }
        eliminate(&mut self.obj, col, &pivot_row);
        self.basis[row] = col;
    }

    /// Replace the phase-1 objective by `c`, after removing artificial
    /// variables from the basis. A row whose structural entries are all zero
    /// is a redundant constraint and is deactivated.
    fn enter_phase_two(&mut self, c: &[Q]) {
        assert_eq!(c.len(), self.n, "objective length mismatch");
        for i in 0..self.rows.len() {
            if self.basis[i] < self.n {
                continue;
            }
            match (0..self.n).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => self.pivot(i, j),
                None => self.active[i] = false,
            }
        }
        let cols = self.obj.len();
        self.obj = vec![Q::zero(); cols];
        self.obj[..self.n].clone_from_slice(c);
        for i in 0..self.rows.len() {
            if !self.active[i] {
                continue;
            }
            let weight = c[self.basis[i]].clone();
            if weight.is_zero() {
                continue;
            }
            for j in 0..cols {
                self.obj[j] = self.obj[j].clone() - weight.clone() * self.rows[i][j].clone();
            }
            // restore the zero reduced cost of the basic column
            self.obj[self.basis[i]] = Q::zero();
        }
    }
}

fn eliminate<Q: Scalar>(target: &mut [Q], col: usize, pivot_row: &[Q]) {
    let factor = target[col].clone();
    if factor.is_zero() {
        return;
    }
    for (t, p) in target.iter_mut().zip(pivot_row) {
        *t = t.clone() - factor.clone() * p.clone();
    }
    target[col] = Q::zero();
}
