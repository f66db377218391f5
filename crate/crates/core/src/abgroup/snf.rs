//! Smith normal form over the integers.
//!
//! Elimination pivots on the entry of least absolute value in the remaining
//! block, which keeps coefficient growth modest on the sparse 0/±1 matrices
//! produced by chain complexes. Once the matrix is diagonal a pass of 2x2
//! gcd/lcm moves establishes the divisibility chain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Which unimodular transforms to accumulate.
#[derive(Clone, Copy, Debug, Default)]
pub struct Transforms {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

impl Transforms {
    pub const NONE: Transforms = Transforms { u: false, u_inv: false, v: false, v_inv: false };
    pub const ALL: Transforms = Transforms { u: true, u_inv: true, v: true, v_inv: true };
    pub const LEFT: Transforms = Transforms { u: true, u_inv: true, v: false, v_inv: false };
    pub const RIGHT: Transforms = Transforms { u: false, u_inv: false, v: true, v_inv: false };
}

/// Result of a Smith decomposition `U * M * V = D`.
///
/// `diagonal` holds the nonzero diagonal entries `d_0 | d_1 | ...`, all
/// positive; its length is the rank of `M`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigInt>,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full `rows x cols` diagonal matrix `D`.
    pub fn d_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

/// Spec-shaped entry point: returns `(U, D, V)` with `U * M * V = D`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = smith(m, Transforms { u: true, v: true, ..Transforms::NONE });
    let d = s.d_matrix();
    (s.u.unwrap(), d, s.v.unwrap())
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Work {
    // row[dst] += k * row[src]
    fn row_op(&mut self, dst: usize, src: usize, k: &BigInt, from: usize) {
        self.a.row_axpy(dst, src, k, from);
        if let Some(u) = &mut self.u {
            u.row_axpy(dst, src, k, 0);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.col_axpy(src, dst, &-k, 0);
        }
    }

    // col[dst] += k * col[src]
    fn col_op(&mut self, dst: usize, src: usize, k: &BigInt, from: usize) {
        self.a.col_axpy(dst, src, k, from);
        if let Some(v) = &mut self.v {
            v.col_axpy(dst, src, k, 0);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.row_axpy(src, dst, &-k, 0);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i);
        }
    }
}

/// Quotient `q` minimising `|a - q p|` (ties toward floor).
fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(p);
    if (&r.abs() * 2u32) > p.abs() {
        q + 1
    } else {
        q
    }
}

fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.is_none() || ax < best_abs {
                best = Some((i, j));
                if ax.is_one() {
                    return best;
                }
                best_abs = ax;
            }
        }
    }
    best
}

/// Computes the Smith normal form of `m`, accumulating the requested
/// transforms.
pub fn smith(m: &IntMatrix, want: Transforms) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: want.u.then(|| IntMatrix::identity(rows)),
        u_inv: want.u_inv.then(|| IntMatrix::identity(rows)),
        v: want.v.then(|| IntMatrix::identity(cols)),
        v_inv: want.v_inv.then(|| IntMatrix::identity(cols)),
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&w.a, t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut residual = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&w.a[(i, t)], &w.a[(t, t)]);
                if !q.is_zero() {
                    w.row_op(i, t, &-q, t);
                }
                residual |= !w.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&w.a[(t, j)], &w.a[(t, t)]);
                if !q.is_zero() {
                    w.col_op(j, t, &-q, t);
                }
                residual |= !w.a[(t, j)].is_zero();
            }
            if !residual {
                break;
            }
            // A remainder is strictly smaller than the pivot; promote the least one.
            let mut best: Option<(bool, usize)> = None;
            let mut best_abs = w.a[(t, t)].abs();
            for i in t + 1..rows {
                let x = &w.a[(i, t)];
                if !x.is_zero() && x.abs() < best_abs {
                    best_abs = x.abs();
                    best = Some((true, i));
                }
            }
            for j in t + 1..cols {
                let x = &w.a[(t, j)];
                if !x.is_zero() && x.abs() < best_abs {
                    best_abs = x.abs();
                    best = Some((false, j));
                }
            }
            match best {
                Some((true, i)) => w.swap_rows(t, i),
                Some((false, j)) => w.swap_cols(t, j),
                None => unreachable!("residual entry must be smaller than pivot"),
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
        diagonal.push(w.a[(t, t)].clone());
        t += 1;
    }
    fix_divisibility(&mut w, &mut diagonal);
    SmithForm {
        rows,
        cols,
        diagonal,
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
    }
}

fn fix_divisibility(w: &mut Work, diagonal: &mut [BigInt]) {
    let r = diagonal.len();
    for i in 0..r {
        for j in i + 1..r {
            if diagonal[j].is_multiple_of(&diagonal[i]) {
                continue;
            }
            let (a, b) = (diagonal[i].clone(), diagonal[j].clone());
            let eg = a.extended_gcd(&b);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (ag, bg) = (&a / &g, &b / &g);
            // rows: [s t; -b/g a/g], inverse [a/g -t; b/g s]
            if let Some(u) = &mut w.u {
                combine_rows(u, i, j, [&s, &t, &-&bg, &ag]);
            }
            if let Some(ui) = &mut w.u_inv {
                combine_cols(ui, i, j, [&ag, &-&t, &bg, &s]);
            }
            // cols: [1 -t b/g; 1 s a/g], inverse [s a/g  t b/g; -1 1]
            let tb = &t * &bg;
            let sa = &s * &ag;
            if let Some(v) = &mut w.v {
                combine_cols(v, i, j, [&BigInt::one(), &-&tb, &BigInt::one(), &sa]);
            }
            if let Some(vi) = &mut w.v_inv {
                combine_rows(vi, i, j, [&sa, &tb, &-BigInt::one(), &BigInt::one()]);
            }
            w.a[(i, i)] = g.clone();
            w.a[(j, j)] = &a * &bg;
            diagonal[i] = g;
            diagonal[j] = a * bg;
        }
    }
}

/// Replaces rows (i, j) by `[k00 k01; k10 k11] * [row_i; row_j]`.
fn combine_rows(m: &mut IntMatrix, i: usize, j: usize, k: [&BigInt; 4]) {
    for c in 0..m.cols() {
        let (x, y) = (m[(i, c)].clone(), m[(j, c)].clone());
        m[(i, c)] = k[0] * &x + k[1] * &y;
        m[(j, c)] = k[2] * &x + k[3] * &y;
    }
}

/// Replaces columns (i, j) by `[col_i col_j] * [k00 k01; k10 k11]`.
fn combine_cols(m: &mut IntMatrix, i: usize, j: usize, k: [&BigInt; 4]) {
    for r in 0..m.rows() {
        let (x, y) = (m[(r, i)].clone(), m[(r, j)].clone());
        m[(r, i)] = &x * k[0] + &y * k[2];
        m[(r, j)] = &x * k[1] + &y * k[3];
    }
}

/// Normalises a list of nonzero moduli into a divisibility chain with the
/// same direct sum, dropping units.
pub fn normalize_invariants(values: &[BigInt]) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = values.iter().map(|x| x.abs()).filter(|x| !x.is_zero()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if !d[j].is_multiple_of(&d[i]) {
                let g = d[i].gcd(&d[j]);
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d.retain(|x| !x.is_one());
    d
}

/// Rank over the rationals, by fraction-free elimination. Independent of the
/// Smith decomposition above.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[(i, c)].is_zero()) else { continue };
        a.swap_rows(rank, p);
        for i in rank + 1..rows {
            if a[(i, c)].is_zero() {
                continue;
            }
            let (f, g) = (a[(i, c)].clone(), a[(rank, c)].clone());
            let h = f.gcd(&g);
            let (f, g) = (f / &h, g / &h);
            for j in c..cols {
                let v = &a[(i, j)] * &g - &a[(rank, j)] * &f;
                a[(i, j)] = v;
            }
            // keep rows primitive to bound growth
            let content = (c..cols).fold(BigInt::zero(), |acc, j| acc.gcd(&a[(i, j)]));
            if !content.is_zero() && !content.is_one() {
                for j in c..cols {
                    let v = &a[(i, j)] / &content;
                    a[(i, j)] = v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<u64> = m
        .entries()
        .iter()
        .map(|x| {
            let r = x.mod_floor(&pb);
            num_traits::ToPrimitive::to_u64(&r).unwrap()
        })
        .collect();
    let inv = |x: u64| -> u64 {
        // Fermat inverse
        let (mut base, mut e, mut acc) = (x % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * base as u128) % p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % p as u128) as u64;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| a[i * cols + c] != 0) else { continue };
        for j in 0..cols {
            a.swap(rank * cols + j, piv * cols + j);
        }
        let iv = inv(a[rank * cols + c]);
        for j in c..cols {
            a[rank * cols + j] = ((a[rank * cols + j] as u128 * iv as u128) % p as u128) as u64;
        }
        for i in 0..rows {
            if i == rank || a[i * cols + c] == 0 {
                continue;
            }
            let f = a[i * cols + c];
            for j in c..cols {
                let sub = ((f as u128 * a[rank * cols + j] as u128) % p as u128) as u64;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
