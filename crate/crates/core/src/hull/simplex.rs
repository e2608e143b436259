//! Dense two-phase simplex for small standard-form programs
//! `min c^T x  s.t.  A x = b, x >= 0`.
//!
//! Phase one minimizes the sum of artificial variables from the all-artificial
//! basis; phase two optimizes the real objective from the feasible basis it
//! leaves behind. Both phases pivot with Bland's rule, so the method
//! terminates on degenerate programs. When phase one ends with a positive
//! objective the simplex multipliers form a Farkas certificate `y` with
//! `y^T A <= 0` and `y^T b > 0`.

use crate::{Error, Result};

/// Entries with magnitude below this are treated as zero in pivoting.
const PIVOT_EPS: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        x: Vec<f64>,
        objective: f64,
        /// Simplex multipliers, one per equality row.
        duals: Vec<f64>,
    },
    Infeasible {
        /// Optimal phase-one objective: least L1 violation of `A x = b`.
        infeasibility: f64,
        /// Row multipliers `y` with `y^T A <= 0` and `y^T b = infeasibility`.
        farkas: Vec<f64>,
    },
    Unbounded,
}

struct Tableau {
    rows: usize,
    structural: usize,
    width: usize,
    cells: Vec<f64>,
    /// Reduced costs for every column, then minus the objective value.
    cost: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, i: usize, j: usize) -> f64 {
        self.cells[i * self.width + j]
    }

    fn rhs(&self, i: usize) -> f64 {
        self.at(i, self.width - 1)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.width;
        let p = self.cells[row * w + col];
        for j in 0..w {
            self.cells[row * w + j] /= p;
        }
        self.cells[row * w + col] = 1.0;
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let f = self.cells[i * w + col];
            if f != 0.0 {
                for j in 0..w {
                    self.cells[i * w + j] -= f * self.cells[row * w + j];
                }
                self.cells[i * w + col] = 0.0;
            }
        }
        let f = self.cost[col];
        if f != 0.0 {
            for j in 0..w {
                self.cost[j] -= f * self.cells[row * w + j];
            }
            self.cost[col] = 0.0;
        }
        self.basis[row] = col;
    }

    /// Runs Bland's rule over the first `eligible` columns.
    /// Returns `false` if the program is unbounded in that column range.
    fn optimize(&mut self, eligible: usize, limit: usize, pivots: &mut usize) -> Result<bool> {
        loop {
            let entering = (0..eligible).find(|&j| self.cost[j] < -PIVOT_EPS);
            let Some(col) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.rows {
                let a = self.at(i, col);
                if a > PIVOT_EPS {
                    let ratio = self.rhs(i).max(0.0) / a;
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((k, best)) => {
                            if ratio < best - 1e-15
                                || (ratio <= best + 1e-15 && self.basis[i] < self.basis[k])
                            {
                                Some((i, ratio))
                            } else {
                                Some((k, best))
                            }
                        }
                    };
                }
            }
            let Some((row, _)) = leave else {
                return Ok(false);
            };
            *pivots += 1;
            if *pivots > limit {
                return Err(Error::IterationLimit(limit));
            }
            self.pivot(row, col);
        }
    }

    /// Multipliers `y = c_B B^{-1}` read from the artificial columns, whose
    /// original cost is `art_cost` and whose columns start as identity.
    fn multipliers(&self, art_cost: f64) -> Vec<f64> {
        (0..self.rows)
            .map(|k| art_cost - self.cost[self.structural + k])
            .collect()
    }
}

/// Solves `min c^T x  s.t.  A x = b, x >= 0` with `A` given row-major.
///
/// `tol` is the phase-one threshold: a least violation below it counts as
/// feasible.
pub fn solve(a: &[Vec<f64>], b: &[f64], c: &[f64], tol: f64) -> Result<LpOutcome> {
    let rows = a.len();
    let n = c.len();
    if b.len() != rows {
        return Err(Error::DimensionMismatch {
            expected: rows,
            got: b.len(),
        });
    }
    if let Some(bad) = a.iter().find(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: bad.len(),
        });
    }

    // Flip rows so the right-hand side is nonnegative.
    let signs: Vec<f64> = b
        .iter()
        .map(|&v| if v < 0.0 { -1.0 } else { 1.0 })
        .collect();
    let width = n + rows + 1;
    let mut cells = vec![0.0; rows * width];
    for i in 0..rows {
        for j in 0..n {
            cells[i * width + j] = signs[i] * a[i][j];
        }
        cells[i * width + n + i] = 1.0;
        cells[i * width + width - 1] = signs[i] * b[i];
    }
    // Phase-one reduced costs with the artificial basis priced out.
    let mut cost = vec![0.0; width];
    for i in 0..rows {
        for j in 0..n {
            cost[j] -= cells[i * width + j];
        }
        cost[width - 1] -= cells[i * width + width - 1];
    }
    let mut t = Tableau {
        rows,
        structural: n,
        width,
        cells,
        cost,
        basis: (n..n + rows).collect(),
    };

    let limit = 50 * (n + rows) + 1000;
    let mut pivots = 0;
    t.optimize(n, limit, &mut pivots)?;

    let infeasibility = -t.cost[width - 1];
    if infeasibility > tol {
        let farkas = t
            .multipliers(1.0)
            .into_iter()
            .zip(&signs)
            .map(|(y, s)| y * s)
            .collect();
        return Ok(LpOutcome::Infeasible {
            infeasibility,
            farkas,
        });
    }

    // Drive remaining artificials out of the basis; rows where that is
    // impossible are redundant and keep a zero-valued artificial.
    for i in 0..rows {
        if t.basis[i] >= n {
            if let Some(col) = (0..n).find(|&j| t.at(i, j).abs() > PIVOT_EPS) {
                t.pivot(i, col);
            }
        }
    }

    // Phase two.
    t.cost.iter_mut().for_each(|v| *v = 0.0);
    t.cost[..n].copy_from_slice(c);
    for i in 0..rows {
        let bi = t.basis[i];
        let cb = if bi < n { c[bi] } else { 0.0 };
        if cb != 0.0 {
            for j in 0..width {
                t.cost[j] -= cb * t.cells[i * width + j];
            }
        }
    }
    if !t.optimize(n, limit, &mut pivots)? {
        return Ok(LpOutcome::Unbounded);
    }

    let mut x = vec![0.0; n];
    for i in 0..rows {
        if t.basis[i] < n {
            x[t.basis[i]] = t.rhs(i).max(0.0);
        }
    }
    let objective = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    let duals = t
        .multipliers(0.0)
        .into_iter()
        .zip(&signs)
        .map(|(y, s)| y * s)
        .collect();
    Ok(LpOutcome::Optimal {
        x,
        objective,
        duals,
    })
}
