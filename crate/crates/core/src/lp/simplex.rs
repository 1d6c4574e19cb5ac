//! Two-phase revised primal simplex on standard-form programs.
//!
//! The solver keeps an explicit dense basis inverse and stores columns
//! sparse. Pricing uses Dantzig's rule and falls back to Bland's rule
//! during degenerate stretches so that cycling cannot occur. Everything
//! is deterministic: identical inputs produce identical pivot sequences.

use crate::error::{Error, Result};

/// Entering-candidate threshold on reduced costs.
const TOL_COST: f64 = 1e-9;
/// Minimum magnitude for a pivot element.
const TOL_PIVOT: f64 = 1e-10;
/// Consecutive degenerate pivots before switching to Bland's rule.
const DEGENERATE_SWITCH: usize = 64;

/// maximize obj . x  subject to  sum_j cols[j] * x[j] = rhs,  x >= 0.
///
/// Rows with negative rhs are flipped internally; artificial variables are
/// added for rows that no positive singleton column can start basic.
pub(crate) struct StdProblem {
    pub m: usize,
    /// Sparse structural columns (row index, value).
    pub cols: Vec<Vec<(u32, f64)>>,
    pub obj: Vec<f64>,
    pub rhs: Vec<f64>,
}

pub(crate) enum CoreOutcome {
    Optimal {
        /// Values of the structural columns.
        x: Vec<f64>,
        /// Row multipliers (in the caller's row orientation).
        duals: Vec<f64>,
    },
    Infeasible,
    Unbounded,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

struct Tableau<'a> {
    m: usize,
    n: usize,
    cols: &'a [Vec<(u32, f64)>],
    /// basis[i] is the column basic in row i; artificials are n + i.
    basis: Vec<usize>,
    in_basis: Vec<bool>,
    /// Dense m x m basis inverse, row-major.
    binv: Vec<f64>,
    xb: Vec<f64>,
    pivots_left: usize,
    degenerate_streak: usize,
}

impl<'a> Tableau<'a> {
    fn cost_of(&self, col: usize, costs: &[f64], art_cost: f64) -> f64 {
        if col < self.n {
            costs[col]
        } else {
            art_cost
        }
    }

    /// pi = c_B . B^{-1}
    fn multipliers(&self, costs: &[f64], art_cost: f64) -> Vec<f64> {
        let m = self.m;
        let mut pi = vec![0.0; m];
        for i in 0..m {
            let ci = self.cost_of(self.basis[i], costs, art_cost);
            if ci != 0.0 {
                let row = &self.binv[i * m..(i + 1) * m];
                for (p, &v) in pi.iter_mut().zip(row.iter()) {
                    *p += ci * v;
                }
            }
        }
        pi
    }

    fn reduced_cost(&self, j: usize, pi: &[f64], costs: &[f64]) -> f64 {
        let mut d = costs[j];
        for &(r, a) in &self.cols[j] {
            d -= pi[r as usize] * a;
        }
        d
    }

    /// w = B^{-1} A_j
    fn ftran(&self, j: usize, w: &mut [f64]) {
        let m = self.m;
        for wi in w.iter_mut() {
            *wi = 0.0;
        }
        for i in 0..m {
            let row = &self.binv[i * m..(i + 1) * m];
            let mut s = 0.0;
            for &(r, a) in &self.cols[j] {
                s += row[r as usize] * a;
            }
            w[i] = s;
        }
    }

    /// Choose the leaving row for entering column with tableau column w.
    ///
    /// Rows holding a basic artificial block at ratio zero whenever the
    /// pivot element is usable, which keeps artificials pinned at zero.
    fn choose_leaving(&self, w: &[f64], bland: bool) -> Option<usize> {
        let mut best: Option<(f64, usize)> = None; // (ratio, row)
        for i in 0..self.m {
            let wi = w[i];
            let is_art = self.basis[i] >= self.n;
            let ratio = if is_art && wi.abs() > TOL_PIVOT {
                0.0
            } else if wi > TOL_PIVOT {
                (self.xb[i].max(0.0)) / wi
            } else {
                continue;
            };
            match best {
                None => best = Some((ratio, i)),
                Some((rb, ib)) => {
                    if ratio < rb - 1e-12 {
                        best = Some((ratio, i));
                    } else if ratio <= rb + 1e-12 {
                        let better = if bland {
                            self.basis[i] < self.basis[ib]
                        } else {
                            let (wa, wb) = (wi.abs(), w[ib].abs());
                            wa > wb || (wa == wb && self.basis[i] < self.basis[ib])
                        };
                        if better {
                            best = Some((ratio.min(rb), i));
                        }
                    }
                }
            }
        }
        best.map(|(_, i)| i)
    }

    fn pivot(&mut self, enter: usize, row: usize, w: &[f64]) {
        let m = self.m;
        let wr = w[row];
        let t = if self.basis[row] >= self.n && self.xb[row].abs() <= 1e-12 {
            0.0
        } else {
            self.xb[row].max(0.0) / wr
        };
        let inv = 1.0 / wr;
        {
            let prow = &mut self.binv[row * m..(row + 1) * m];
            for v in prow.iter_mut() {
                *v *= inv;
            }
        }
        for i in 0..m {
            if i == row {
                continue;
            }
            let f = w[i];
            if f != 0.0 {
                let (head, tail) = self.binv.split_at_mut(row.max(i) * m);
                let (src, dst) = if row < i {
                    (&head[row * m..row * m + m], &mut tail[..m])
                } else {
                    (&tail[..m], &mut head[i * m..i * m + m])
                };
                // src is the (already scaled) pivot row.
                let (src, dst) = if row < i { (src, dst) } else { (dst, src) };
                let _ = (src, dst);
                unreachable!();
            }
        }
        let _ = t;
        let _ = enter;
    }
}

pub(crate) fn solve_std(p: &StdProblem) -> Result<CoreOutcome> {
    let _ = p;
    Err(Error::SolverLimit("unimplemented".into()))
}
