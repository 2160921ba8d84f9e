//! Tensor-power plumbing: local two-site operators and the extended metric.
//!
//! A vector of Γ^{⊗k} has index Σ_t I_t·D^{k−1−t} (first factor most
//! significant), where D = N² is the dimension of one factor.

use crate::field::{Field, Matrix};

/// A two-site operator stored column-sparse: `cols[a·D2+b]` lists the nonzero
/// `(c·D2+e, coefficient)` of the image of `x_a⊗y_b`.
#[derive(Debug, Clone)]
pub struct LocalOp<E> {
    pub d1: usize,
    pub d2: usize,
    pub mat: Matrix<E>,
    pub cols: Vec<Vec<(usize, E)>>,
}

impl<E: Clone> LocalOp<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, d1: usize, d2: usize, mat: Matrix<E>) -> Self {
        assert_eq!(mat.rows, d1 * d2);
        assert_eq!(mat.cols, d1 * d2);
        let cols = (0..mat.cols)
            .map(|j| (0..mat.rows).filter(|&i| !f.is_zero(mat.get(i, j))).map(|i| (i, mat.get(i, j).clone())).collect())
            .collect();
        LocalOp { d1, d2, mat, cols }
    }
}

pub fn pow(d: usize, k: usize) -> usize {
    d.pow(k as u32)
}

/// Applies `op` (D×D sites) to factors `pos, pos+1` of a k-fold tensor.
pub fn apply_local<F: Field>(f: &F, op: &LocalOp<F::Elem>, k: usize, pos: usize, v: &[F::Elem]) -> Vec<F::Elem> {
    let d = op.d1;
    debug_assert_eq!(op.d1, op.d2);
    debug_assert!(pos + 1 < k);
    let lo_stride = pow(d, k - pos - 2);
    let block = d * d * lo_stride;
    let mut out = vec![f.zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        let hi = idx / block;
        let rem = idx % block;
        let pair = rem / lo_stride;
        let lo = rem % lo_stride;
        for (po, c) in &op.cols[pair] {
            let o = hi * block + po * lo_stride + lo;
            out[o] = f.mul_add(&out[o], c, x);
        }
    }
    out
}

/// Applies `op` on (auxiliary site of dim d1) ⊗ (factor t of a k-fold tensor
/// of D = d2), the auxiliary site being most significant.
pub fn apply_aux<F: Field>(f: &F, op: &LocalOp<F::Elem>, k: usize, t: usize, v: &[F::Elem]) -> Vec<F::Elem> {
    let d = op.d2;
    let inner = pow(d, k);
    let lo_stride = pow(d, k - t - 1);
    let mid = d * lo_stride;
    let mut out = vec![f.zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        let a = idx / inner;
        let i = idx % inner;
        let hi = i / mid;
        let it = (i % mid) / lo_stride;
        let lo = i % lo_stride;
        for (po, c) in &op.cols[a * d + it] {
            let (a2, i2) = (po / d, po % d);
            let o = a2 * inner + hi * mid + i2 * lo_stride + lo;
            out[o] = f.mul_add(&out[o], c, x);
        }
    }
    out
}

/// Tensor product of two vectors (first factor most significant).
pub fn tensor<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); a.len() * b.len()];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !f.is_zero(y) {
                out[i * b.len() + j] = f.mul(x, y);
            }
        }
    }
    out
}

/// Sparse pairing table: `g[a]` lists `(b, g(x_a, y_b))` with nonzero value.
pub type Pairing<E> = Vec<Vec<(usize, E)>>;

pub fn pairing_from_matrix<F: Field>(f: &F, g: &Matrix<F::Elem>) -> Pairing<F::Elem> {
    (0..g.rows).map(|a| (0..g.cols).filter(|&b| !f.is_zero(g.get(a, b))).map(|b| (b, g.get(a, b).clone())).collect()).collect()
}

/// Extended metric g̃(x, y) for x ∈ X^{⊗n}, y ∈ Y^{⊗m}: contracts x_{n−t+1}
/// with y_t for t = 1..min(n,m); the result lives on the leftover factors
/// (x_1..x_{n−m} if n ≥ m, else y_{n+1}..y_m).
pub fn gtilde<F: Field>(f: &F, g: &Pairing<F::Elem>, d: usize, x: &[F::Elem], n: usize, y: &[F::Elem], m: usize) -> Vec<F::Elem> {
    debug_assert_eq!(x.len(), pow(d, n));
    debug_assert_eq!(y.len(), pow(d, m));
    let c = n.min(m);
    let x_rest = pow(d, n - c);
    let y_rest = pow(d, m - c);
    let tail = pow(d, c);
    let mut out = vec![f.zero(); if n >= m { x_rest } else { y_rest }];
    for (xi, xv) in x.iter().enumerate() {
        if f.is_zero(xv) {
            continue;
        }
        let (head, t) = (xi / tail, xi % tail);
        // digits of the contracted tail, first = x_{n−c+1}
        let digits: Vec<usize> = (0..c).map(|s| (t / pow(d, c - 1 - s)) % d).collect();
        // y_s pairs with x_{n−s+1}, i.e. digit c−s (1-based s)
        let mut partial: Vec<(usize, F::Elem)> = vec![(0, xv.clone())];
        for s in 0..c {
            let a = digits[c - 1 - s];
            let mut next = Vec::new();
            for (acc_idx, acc_v) in &partial {
                for (b, gv) in &g[a] {
                    next.push((acc_idx * d + b, f.mul(acc_v, gv)));
                }
            }
            partial = next;
        }
        for (yhead, w) in partial {
            for r in 0..y_rest {
                let yv = &y[yhead * y_rest + r];
                if f.is_zero(yv) {
                    continue;
                }
                let o = if n >= m { head } else { r };
                out[o] = f.mul_add(&out[o], &w, yv);
            }
        }
    }
    out
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, a: &[F::Elem], s: &F::Elem) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(x, s)).collect()
}

pub fn unit<F: Field>(f: &F, len: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); len];
    v[i] = f.one();
    v
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}
