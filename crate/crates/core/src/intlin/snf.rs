//! Smith normal form by deterministic pivoting.
//!
//! Pivot rule: the nonzero entry of smallest absolute value in the active
//! submatrix, ties broken by row-major position. Elimination runs first in
//! checked `i64` arithmetic; any overflow restarts the whole computation over
//! `BigInt`, so results never depend on machine word size.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::scalar::Scalar;
use super::IntMatrix;

/// `u * m * v == s` with `s` diagonal, nonnegative, and `s[i][i] | s[i+1][i+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `u`.
    pub u_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariants(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s.get(i, i).clone()).collect()
    }
}

struct Dense<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

impl<T: Scalar> Dense<T> {
    fn identity(n: usize) -> Self {
        let mut a = vec![T::zero(); n * n];
        for i in 0..n {
            a[i * n + i] = T::one();
        }
        Self { rows: n, cols: n, a }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i != k {
            for j in 0..self.cols {
                self.a.swap(i * self.cols + j, k * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j != k {
            for i in 0..self.rows {
                self.a.swap(i * self.cols + j, i * self.cols + k);
            }
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &T) -> Option<()> {
        for j in 0..self.cols {
            let x = self.a[t * self.cols + j].clone();
            if !x.is_zero() {
                let y = self.a[i * self.cols + j].sub_mul(q, &x)?;
                self.a[i * self.cols + j] = y;
            }
        }
        Some(())
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &T) -> Option<()> {
        for i in 0..self.rows {
            let x = self.a[i * self.cols + t].clone();
            if !x.is_zero() {
                let y = self.a[i * self.cols + j].sub_mul(q, &x)?;
                self.a[i * self.cols + j] = y;
            }
        }
        Some(())
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        for j in 0..self.cols {
            let y = self.a[i * self.cols + j].neg()?;
            self.a[i * self.cols + j] = y;
        }
        Some(())
    }

    fn negate_col(&mut self, j: usize) -> Option<()> {
        for i in 0..self.rows {
            let y = self.a[i * self.cols + j].neg()?;
            self.a[i * self.cols + j] = y;
        }
        Some(())
    }
}

#[derive(Clone, Copy)]
pub(crate) struct Track {
    pub left: bool,
    pub left_inv: bool,
    pub right: bool,
}

impl Track {
    pub const ALL: Track = Track { left: true, left_inv: true, right: true };
}

struct Work<T> {
    m: Dense<T>,
    u: Option<Dense<T>>,
    u_inv: Option<Dense<T>>,
    v: Option<Dense<T>>,
}

impl<T: Scalar> Work<T> {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.m.swap_rows(i, k);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, k);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, k);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        self.m.swap_cols(j, k);
        if let Some(v) = &mut self.v {
            v.swap_cols(j, k);
        }
    }

    fn row_sub(&mut self, i: usize, t: usize, q: &T) -> Option<()> {
        self.m.row_sub(i, t, q)?;
        if let Some(u) = &mut self.u {
            u.row_sub(i, t, q)?;
        }
        if let Some(ui) = &mut self.u_inv {
            // (I - q e_i e_t^T)^{-1} = I + q e_i e_t^T: col_t += q col_i
            let nq = q.neg()?;
            ui.col_sub(t, i, &nq)?;
        }
        Some(())
    }

    fn col_sub(&mut self, j: usize, t: usize, q: &T) -> Option<()> {
        self.m.col_sub(j, t, q)?;
        if let Some(v) = &mut self.v {
            v.col_sub(j, t, q)?;
        }
        Some(())
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        self.m.negate_row(i)?;
        if let Some(u) = &mut self.u {
            u.negate_row(i)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i)?;
        }
        Some(())
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m.rows {
            for j in t..self.m.cols {
                let x = self.m.at(i, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !x.abs_lt(self.m.at(bi, bj)) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn run(&mut self) -> Option<usize> {
        let (rows, cols) = (self.m.rows, self.m.cols);
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.m.at(t, t).clone();
                let mut dirty = false;
                for i in t + 1..rows {
                    if !self.m.at(i, t).is_zero() {
                        let q = self.m.at(i, t).quot(&p);
                        if !q.is_zero() {
                            self.row_sub(i, t, &q)?;
                        }
                        dirty |= !self.m.at(i, t).is_zero();
                    }
                }
                for j in t + 1..cols {
                    if !self.m.at(t, j).is_zero() {
                        let q = self.m.at(t, j).quot(&p);
                        if !q.is_zero() {
                            self.col_sub(j, t, &q)?;
                        }
                        dirty |= !self.m.at(t, j).is_zero();
                    }
                }
                if dirty {
                    // A remainder smaller than the pivot survived; re-pivot.
                    let (pi, pj) = self.pivot(t).expect("nonzero entries remain");
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                // Row and column are clear; enforce divisibility of the rest.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !p.divides(self.m.at(i, j)));
                match bad {
                    Some((i, _)) => {
                        // row_t += row_i
                        let minus_one = T::one().neg()?;
                        self.row_sub(t, i, &minus_one)?;
                    }
                    None => break,
                }
            }
            if self.m.at(t, t).is_negative() {
                self.negate_row(t)?;
            }
            t += 1;
        }
        Some(t)
    }
}

fn attempt<T: Scalar>(entries: Vec<T>, rows: usize, cols: usize, track: Track) -> Option<(Work<T>, usize)> {
    let mut w = Work {
        m: Dense { rows, cols, a: entries },
        u: track.left.then(|| Dense::identity(rows)),
        u_inv: track.left_inv.then(|| Dense::identity(rows)),
        v: track.right.then(|| Dense::identity(cols)),
    };
    let rank = w.run()?;
    Some((w, rank))
}

fn to_matrix<T: Scalar>(d: Dense<T>, conv: impl Fn(T) -> BigInt) -> IntMatrix {
    IntMatrix::new(d.rows, d.cols, d.a.into_iter().map(conv).collect()).expect("shape preserved")
}

pub(crate) fn smith_tracked(m: &IntMatrix, track: Track) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let small: Option<Vec<i64>> = m
        .entries()
        .iter()
        .map(|x| x.to_i64().filter(|v| v.unsigned_abs() < (1u64 << 62)))
        .collect();
    let placeholder = |n: usize| IntMatrix::zeros(n, n);
    if let Some(small) = small {
        if let Some((w, rank)) = attempt::<i64>(small, rows, cols, track) {
            let conv = BigInt::from;
            return SmithForm {
                s: to_matrix(w.m, conv),
                u: w.u.map_or_else(|| placeholder(0), |d| to_matrix(d, conv)),
                v: w.v.map_or_else(|| placeholder(0), |d| to_matrix(d, conv)),
                u_inv: w.u_inv.map_or_else(|| placeholder(0), |d| to_matrix(d, conv)),
                rank,
            };
        }
    }
    let (w, rank) = attempt::<BigInt>(m.entries().to_vec(), rows, cols, track).expect("bigint arithmetic cannot overflow");
    let id = |x: BigInt| x;
    SmithForm {
        s: to_matrix(w.m, id),
        u: w.u.map_or_else(|| placeholder(0), |d| to_matrix(d, id)),
        v: w.v.map_or_else(|| placeholder(0), |d| to_matrix(d, id)),
        u_inv: w.u_inv.map_or_else(|| placeholder(0), |d| to_matrix(d, id)),
        rank,
    }
}

/// Smith normal form with both transforms and the inverse of the left one.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith_tracked(m, Track::ALL)
}
