//! Column Hermite normal form: a canonical, size-reduced basis of a lattice
//! given by spanning columns. Like the Smith form, elimination first runs in
//! checked `i64` arithmetic and restarts over `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::scalar::Scalar;
use super::IntMatrix;

/// A lattice basis in column echelon form. Column `k` has its first nonzero
/// entry `p_k > 0` in row `pivots[k]`; every other basis column has an entry
/// in `[0, p_k)` in that row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteBasis {
    pub basis: IntMatrix,
    pub pivots: Vec<usize>,
}

fn sub_mul<T: Scalar>(a: &mut [T], q: &T, b: &[T]) -> Option<()> {
    if q.is_zero() {
        return Some(());
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.sub_mul(q, y)?;
        }
    }
    Some(())
}

fn echelon<T: Scalar>(mut cols: Vec<Vec<T>>, rows: usize) -> Option<(Vec<Vec<T>>, Vec<usize>)> {
    cols.retain(|c| c.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    let mut r = 0;
    for i in 0..rows {
        if r == cols.len() {
            break;
        }
        loop {
            // Smallest nonzero entry of row i among the active columns.
            let mut best: Option<usize> = None;
            for j in r..cols.len() {
                if !cols[j][i].is_zero() && best.map_or(true, |b| cols[j][i].abs_lt(&cols[b][i])) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            cols.swap(r, b);
            let mut done = true;
            for j in r + 1..cols.len() {
                if cols[j][i].is_zero() {
                    continue;
                }
                let q = cols[j][i].round_quot(&cols[r][i]);
                let (head, tail) = cols.split_at_mut(j);
                sub_mul(&mut tail[0], &q, &head[r])?;
                done &= cols[j][i].is_zero();
            }
            if done {
                break;
            }
        }
        if r < cols.len() && !cols[r][i].is_zero() {
            if cols[r][i].is_negative() {
                for x in cols[r].iter_mut() {
                    *x = x.neg()?;
                }
            }
            let (head, tail) = cols.split_at_mut(r);
            let p = &tail[0];
            for c in head.iter_mut() {
                let q = c[i].floor_quot(&p[i]);
                sub_mul(c, &q, p)?;
            }
            pivots.push(i);
            r += 1;
        }
        let rest: Vec<Vec<T>> = cols.drain(r..).filter(|c| c.iter().any(|x| !x.is_zero())).collect();
        cols.extend(rest);
    }
    cols.truncate(r);
    Some((cols, pivots))
}

/// Hermite basis of the lattice spanned by the columns of `a`.
pub fn hermite_basis(a: &IntMatrix) -> HermiteBasis {
    let rows = a.rows();
    let small: Option<Vec<Vec<i64>>> = a
        .columns()
        .iter()
        .map(|c| c.iter().map(|x| x.to_i64().filter(|v| v.unsigned_abs() < 1 << 62)).collect())
        .collect();
    if let Some((cols, pivots)) = small.and_then(|c| echelon(c, rows)) {
        let cols: Vec<Vec<BigInt>> = cols.into_iter().map(|c| c.into_iter().map(BigInt::from).collect()).collect();
        return HermiteBasis { basis: IntMatrix::from_columns(rows, &cols), pivots };
    }
    let (cols, pivots) = echelon(a.columns(), rows).expect("bigint arithmetic cannot overflow");
    HermiteBasis { basis: IntMatrix::from_columns(rows, &cols), pivots }
}

/// Basis of `{x : a x = 0}` from the Hermite form of `a` stacked on the
/// identity: the columns whose top part vanishes.
pub(crate) fn hermite_kernel(a: &IntMatrix) -> IntMatrix {
    let stacked = a.vstack(&IntMatrix::identity(a.cols())).expect("same column count");
    let h = hermite_basis(&stacked);
    let idx: Vec<usize> = h.pivots.iter().enumerate().filter(|(_, &r)| r >= a.rows()).map(|(k, _)| k).collect();
    h.basis.select_columns(&idx).row_range(a.rows()..a.rows() + a.cols())
}

impl HermiteBasis {
    /// The representative of `v` modulo the lattice with pivot-row entries in
    /// `[0, p_k)`. Two vectors are congruent iff their reductions agree.
    pub fn reduce(&self, v: &mut [BigInt]) {
        for (k, &row) in self.pivots.iter().enumerate() {
            let p = self.basis.get(row, k);
            let q = v[row].div_floor(p);
            if !Zero::is_zero(&q) {
                for (i, x) in v.iter_mut().enumerate().skip(row) {
                    let y = self.basis.get(i, k);
                    if !Zero::is_zero(y) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }

    /// Reduces every column of `m`.
    pub fn reduce_columns(&self, m: &IntMatrix) -> IntMatrix {
        if self.pivots.is_empty() {
            return m.clone();
        }
        let cols: Vec<Vec<BigInt>> = m
            .columns()
            .into_iter()
            .map(|mut c| {
                self.reduce(&mut c);
                c
            })
            .collect();
        IntMatrix::from_columns(m.rows(), &cols)
    }
}

/// `a * x = b` for many `b` from one Hermite form of `[a; I]`: the echelon
/// columns `[H; T]` satisfy `H = a T`, so `b` is peeled off pivot by pivot.
pub(crate) struct LatticeSolver {
    rows: usize,
    cols: usize,
    basis: IntMatrix,
    /// Pivots that fall in the `a` part.
    pivots: Vec<usize>,
}

impl LatticeSolver {
    pub(crate) fn new(a: &IntMatrix) -> Self {
        let stacked = a.vstack(&IntMatrix::identity(a.cols())).expect("same column count");
        let h = hermite_basis(&stacked);
        let pivots: Vec<usize> = h.pivots.iter().copied().take_while(|&r| r < a.rows()).collect();
        LatticeSolver { rows: a.rows(), cols: a.cols(), basis: h.basis, pivots }
    }

    pub(crate) fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut v = b.to_vec();
        let mut x = vec![<BigInt as Zero>::zero(); self.cols];
        for (k, &row) in self.pivots.iter().enumerate() {
            let (c, r) = v[row].div_rem(self.basis.get(row, k));
            if !Zero::is_zero(&r) {
                return None;
            }
            if Zero::is_zero(&c) {
                continue;
            }
            for i in row..self.rows {
                let y = self.basis.get(i, k);
                if !Zero::is_zero(y) {
                    v[i] -= &c * y;
                }
            }
            for (j, xj) in x.iter_mut().enumerate() {
                let y = self.basis.get(self.rows + j, k);
                if !Zero::is_zero(y) {
                    *xj += &c * y;
                }
            }
        }
        v.iter().all(Zero::is_zero).then_some(x)
    }
}
