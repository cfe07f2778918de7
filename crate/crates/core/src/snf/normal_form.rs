//! Smith and Hermite normal forms with transformation matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `D = U·A·V` with `U`, `V` unimodular and `D` diagonal with `d₁ | d₂ | …`.
///
/// The inverses of both transforms are carried along since every consumer
/// (cyclic coordinates of a group, change of basis) needs them.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SnfResult {
    /// Diagonal entries `d₁ … d_min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct SnfState {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn row_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    fn row_swap(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        self.u.swap_rows(x, y);
        self.u_inv.swap_cols(x, y);
    }

    fn row_neg(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn col_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn col_swap(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        self.v.swap_cols(x, y);
        self.v_inv.swap_rows(x, y);
    }

    /// Moves the smallest nonzero entry of the trailing block at `t` onto the diagonal.
    fn place_pivot(&mut self, t: usize) -> bool {
        let (rows, cols) = self.a.shape();
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &self.a[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        match best {
            Some((i, j)) => {
                self.row_swap(t, i);
                self.col_swap(t, j);
                true
            }
            None => false,
        }
    }

    /// Clears row and column `t` outside the pivot. Returns false if a
    /// remainder survived, after moving the smallest one onto the pivot.
    fn clear_cross(&mut self, t: usize) -> bool {
        let (rows, cols) = self.a.shape();
        let mut clean = true;
        for i in t + 1..rows {
            if !self.a[(i, t)].is_zero() {
                let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                self.row_add(i, t, &-q);
                clean &= self.a[(i, t)].is_zero();
            }
        }
        for j in t + 1..cols {
            if !self.a[(t, j)].is_zero() {
                let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                self.col_add(j, t, &-q);
                clean &= self.a[(t, j)].is_zero();
            }
        }
        if clean {
            return true;
        }
        let mut best = (t, t);
        for i in t + 1..rows {
            let x = &self.a[(i, t)];
            if !x.is_zero() && x.abs() < self.a[best].abs() {
                best = (i, t);
            }
        }
        for j in t + 1..cols {
            let x = &self.a[(t, j)];
            if !x.is_zero() && x.abs() < self.a[best].abs() {
                best = (t, j);
            }
        }
        self.row_swap(t, best.0);
        self.col_swap(t, best.1);
        false
    }
}

/// Smith normal form of an arbitrary (possibly empty) integer matrix.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = a.shape();
    let mut st = SnfState {
        a: a.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut t = 0;
    while t < rows.min(cols) && st.place_pivot(t) {
        loop {
            if !st.clear_cross(t) {
                continue;
            }
            // the pivot must divide everything still to be diagonalised
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !st.a[(i, j)].is_multiple_of(&st.a[(t, t)]))
            });
            match offender {
                Some(i) => st.row_add(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if st.a[(t, t)].is_negative() {
            st.row_neg(t);
        }
        t += 1;
    }
    SnfResult {
        u: st.u,
        u_inv: st.u_inv,
        d: st.a,
        v: st.v,
        v_inv: st.v_inv,
        rank: t,
    }
}

/// Column-style Hermite normal form `A·V = H`.
///
/// The first `rank` columns of `H` are in echelon form: column `k` has a
/// positive pivot in row `pivots[k]`, is zero above it, and the pivot rows
/// increase strictly. Entries left of a pivot are reduced into `[0, pivot)`.
/// The remaining columns of `H` are zero, so the matching columns of `V`
/// span the integer kernel of `A`.
#[derive(Clone, Debug)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub v: IntMatrix,
    pub pivots: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_normal_form(a: &IntMatrix) -> HnfResult {
    let (rows, cols) = a.shape();
    let mut h = a.clone();
    let mut v = IntMatrix::identity(cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..rows {
        if k == cols {
            break;
        }
        loop {
            let best = (k..cols)
                .filter(|&j| !h[(i, j)].is_zero())
                .min_by(|&x, &y| h[(i, x)].abs().cmp(&h[(i, y)].abs()));
            let Some(j) = best else { break };
            h.swap_cols(k, j);
            v.swap_cols(k, j);
            let mut clean = true;
            for j in k + 1..cols {
                if !h[(i, j)].is_zero() {
                    let q = -h[(i, j)].div_floor(&h[(i, k)]);
                    h.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                    clean &= h[(i, j)].is_zero();
                }
            }
            if clean {
                if h[(i, k)].is_negative() {
                    h.negate_col(k);
                    v.negate_col(k);
                }
                for j in 0..k {
                    let q = -h[(i, j)].div_floor(&h[(i, k)]);
                    h.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                }
                pivots.push(i);
                k += 1;
                break;
            }
        }
    }
    HnfResult { h, v, pivots }
}
