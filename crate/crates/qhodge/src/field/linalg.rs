//! Dense exact linear algebra over any [`Field`].

use super::{Field, FieldError, PrimeField, RatFunc, SymMode};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, v: E) -> Self {
        Matrix { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix from column vectors of equal length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<E>], zero: E) -> Self {
        let mut m = Matrix::filled(rows, cols.len(), zero);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.rows, cols: idx.len(), data }
    }

    /// Stacks columns of `self` and `other` side by side.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// Stacks rows of `self` above `other`.
    pub fn vcat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn map<T>(&self, g: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(g).collect() }
    }

    pub fn try_map<T, Er>(&self, g: impl Fn(&E) -> Result<T, Er>) -> Result<Matrix<T>, Er> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(g).collect::<Result<_, _>>()?,
        })
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zeros(f, n, n);
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "mat_mul shape");
    let mut out = zeros(f, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(k, j);
                if f.is_zero(y) {
                    continue;
                }
                let idx = i * out.cols + j;
                out.data[idx] = f.mul_add(&out.data[idx], x, y);
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len(), "mat_vec shape");
    (0..a.rows)
        .map(|i| {
            let mut acc = f.zero();
            for (x, y) in a.row(i).iter().zip(v) {
                if !f.is_zero(x) && !f.is_zero(y) {
                    acc = f.mul_add(&acc, x, y);
                }
            }
            acc
        })
        .collect()
}

pub fn mat_add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "mat_add shape");
    Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| f.add(x, y)).collect() }
}

pub fn mat_sub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "mat_sub shape");
    Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| f.sub(x, y)).collect() }
}

pub fn mat_scale<F: Field>(f: &F, a: &Matrix<F::Elem>, s: &F::Elem) -> Matrix<F::Elem> {
    a.map(|x| f.mul(x, s))
}

pub fn is_zero_matrix<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.data.iter().all(|x| f.is_zero(x))
}

/// Kronecker product `a ⊗ b` (first factor most significant).
pub fn kron<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let mut out = zeros(f, a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if f.is_zero(x) {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !f.is_zero(y) {
                        out.set(i * b.rows + k, j * b.cols + l, f.mul(x, y));
                    }
                }
            }
        }
    }
    out
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    eliminate(f, m, true)
}

fn eliminate<F: Field>(f: &F, m: &Matrix<F::Elem>, full: bool) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut best: Option<(usize, usize)> = None;
        for i in r..rows {
            let x = a.get(i, c);
            if !f.is_zero(x) {
                let w = f.weight(x);
                if best.is_none_or(|(_, bw)| w < bw) {
                    best = Some((i, w));
                    if w == 0 {
                        break;
                    }
                }
            }
        }
        let Some((p, _)) = best else { continue };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("nonzero pivot");
        let mut nz = Vec::new();
        for j in c..cols {
            let idx = r * cols + j;
            if !f.is_zero(&a.data[idx]) {
                a.data[idx] = f.mul(&a.data[idx], &inv);
                nz.push(j);
            }
        }
        let start = if full { 0 } else { r + 1 };
        for i in start..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            for &j in &nz {
                let t = f.mul(&factor, &a.data[r * cols + j]);
                let idx = i * cols + j;
                a.data[idx] = f.sub(&a.data[idx], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Exact rank by Gaussian elimination.
pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    eliminate(f, m, false).1.len()
}

/// Indices of a maximal set of linearly independent columns (leftmost first).
pub fn pivot_columns<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<usize> {
    eliminate(f, m, false).1
}

/// Basis of the right kernel, as columns of the returned matrix.
pub fn kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let (r, piv) = rref(f, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !piv.contains(c)).collect();
    let mut out = zeros(f, m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        out.set(fc, k, f.one());
        for (pr, &pc) in piv.iter().enumerate() {
            let v = r.get(pr, fc);
            if !f.is_zero(v) {
                out.set(pc, k, f.neg(v));
            }
        }
    }
    out
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>, FieldError> {
    if m.rows != m.cols {
        return Err(FieldError::Shape(format!("inverse of {}x{}", m.rows, m.cols)));
    }
    let n = m.rows;
    let aug = m.hcat(&identity(f, n));
    let (r, piv) = rref(f, &aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(FieldError::Singular);
    }
    let idx: Vec<usize> = (n..2 * n).collect();
    Ok(r.select_cols(&idx))
}

/// Some solution `x` of `a x = b` (columns of `b` solved independently), or
/// `None` if inconsistent.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    assert_eq!(a.rows, b.rows);
    let aug = a.hcat(b);
    let (r, piv) = rref(f, &aug);
    if piv.iter().any(|&c| c >= a.cols) {
        return None;
    }
    let mut x = zeros(f, a.cols, b.cols);
    for (pr, &pc) in piv.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, r.get(pr, a.cols + j).clone());
        }
    }
    Some(x)
}

/// Result of a multi-prime rank computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularRank {
    /// Maximum rank seen (a certified lower bound for the generic rank).
    pub rank: usize,
    /// Number of primes attaining that rank.
    pub agreeing: usize,
    pub per_prime: Vec<(u64, usize)>,
}

/// Rank of a symbolic matrix via specializations at random points of large
/// prime fields; points where a denominator vanishes are resampled.
pub fn modular_rank(m: &Matrix<RatFunc>, mode: SymMode, seed: u64, primes: usize) -> ModularRank {
    let mut per_prime = Vec::new();
    let mut s = seed;
    while per_prime.len() < primes {
        let pf = PrimeField::random_for(mode, s);
        s = s.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let Ok(mm) = m.try_map(|x| pf.specialize(x)) else { continue };
        per_prime.push((pf.p, rank(&pf, &mm)));
    }
    let best = per_prime.iter().map(|x| x.1).max().unwrap_or(0);
    ModularRank { rank: best, agreeing: per_prime.iter().filter(|x| x.1 == best).count(), per_prime }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::SymbolicField;

    #[test]
    fn identity_rank() {
        let f = SymbolicField::gl();
        assert_eq!(rank(&f, &identity(&f, 3)), 3);
    }

    #[test]
    fn rank_one_symbolic() {
        let f = SymbolicField::gl();
        let q = f.q();
        let m = Matrix::from_rows(vec![vec![q.clone(), f.one()], vec![f.mul(&q, &q), q.clone()]]);
        assert_eq!(rank(&f, &m), 1);
        let k = kernel(&f, &m);
        assert!(is_zero_matrix(&f, &mat_mul(&f, &m, &k)));
        assert_eq!(modular_rank(&m, SymMode::Gl, 1, 3).rank, 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = SymbolicField::gl();
        let (q, z) = (f.q(), f.z());
        let m = Matrix::from_rows(vec![vec![q.clone(), z.clone()], vec![f.one(), q.clone()]]);
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 2));
    }
}
