//! Oracles shared by several integration tests.
#![allow(dead_code)]

use qhodge::field::linalg::*;
use qhodge::field::{Field, Matrix};

/// σ_i (1-based) on a k-fold tensor as a dense matrix I⊗σ⊗I.
pub fn sigma_dense<F: Field>(f: &F, sigma: &Matrix<F::Elem>, d: usize, k: usize, i: usize) -> Matrix<F::Elem> {
    let left = identity(f, d.pow((i - 1) as u32));
    let right = identity(f, d.pow((k - i - 1) as u32));
    kron(f, &kron(f, &left, sigma), &right)
}

/// All permutations of 0..k in one-line notation.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Adjacent transpositions (1-based) that bubble-sort `p`; a reduced word.
pub fn bubble_word(p: &[usize]) -> Vec<usize> {
    let mut p = p.to_vec();
    let mut word = Vec::new();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i + 1);
                swapped = true;
            }
        }
    }
    word
}

/// Σ_π sgn(π) σ_π by dense products over all of S_k.
pub fn antisym_oracle<F: Field>(f: &F, sigma: &Matrix<F::Elem>, d: usize, k: usize) -> Matrix<F::Elem> {
    let amb = d.pow(k as u32);
    let gens: Vec<Matrix<F::Elem>> = (1..k).map(|i| sigma_dense(f, sigma, d, k, i)).collect();
    let mut acc = zeros(f, amb, amb);
    for p in permutations(k) {
        let w = bubble_word(&p);
        let mut m = identity(f, amb);
        for &i in &w {
            m = mat_mul(f, &m, &gens[i - 1]);
        }
        acc = if w.len() % 2 == 0 { mat_add(f, &acc, &m) } else { mat_sub(f, &acc, &m) };
    }
    acc
}

/// (I⊗σ⊗I)v with σ in slots i, i+1 (1-based) of a k-fold tensor, by index
/// arithmetic on the row-major multi-index.
pub fn apply_sigma<F: Field>(f: &F, sigma: &Matrix<F::Elem>, d: usize, k: usize, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
    let right = d.pow((k - i - 1) as u32);
    let mid = d * d;
    let mut out = vec![f.zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        let (hi, rest) = (idx / (mid * right), idx % (mid * right));
        let (pair, lo) = (rest / right, rest % right);
        for row in 0..mid {
            let s = sigma.get(row, pair);
            if !f.is_zero(s) {
                let t = (hi * mid + row) * right + lo;
                out[t] = f.add(&out[t], &f.mul(s, x));
            }
        }
    }
    out
}

/// Same sum as [`antisym_oracle`], assembled column by column with sparse
/// applications of each reduced word (fast enough for symbolic k = 4).
pub fn antisym_oracle_columns<F: Field>(f: &F, sigma: &Matrix<F::Elem>, d: usize, k: usize) -> Matrix<F::Elem> {
    let amb = d.pow(k as u32);
    let words: Vec<Vec<usize>> = permutations(k).iter().map(|p| bubble_word(p)).collect();
    let mut cols = Vec::with_capacity(amb);
    for j in 0..amb {
        let mut acc = vec![f.zero(); amb];
        for w in &words {
            let mut v = vec![f.zero(); amb];
            v[j] = f.one();
            // the matrix product g_{w1} g_{w2} … acts on a column right-to-left
            for &i in w.iter().rev() {
                v = apply_sigma(f, sigma, d, k, i, &v);
            }
            for (a, x) in acc.iter_mut().zip(&v) {
                *a = if w.len() % 2 == 0 { f.add(a, x) } else { f.sub(a, x) };
            }
        }
        cols.push(acc);
    }
    Matrix::from_cols(amb, &cols, f.zero())
}
