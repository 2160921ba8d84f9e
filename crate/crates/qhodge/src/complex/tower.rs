//! Antisymmetrizers, shuffle operators and the exterior levels Λ^k = Γ^{⊗k}/ker A_k.

use super::tensor::{apply_local, pow, unit, vec_add, vec_sub, LocalOp};
use super::ComplexError;
use crate::field::linalg::{inverse, mat_mul, mat_vec, pivot_columns, rank};
use crate::field::{Field, Matrix};
use crate::spectral::Tau;
use std::collections::HashMap;

/// Largest ambient dimension N^{2k} for which a level is materialized.
pub const MAX_AMBIENT: usize = 4096;

/// Selects σ (`Plus`) or σ⁻¹ (`Minus`) in A^±_k, B^±_{i,j} and σ^±.
pub type Sign = Tau;

/// One exterior level: the quotient Γ^{⊗k}/ker A_k with basis the classes of
/// the unit tensors `e_{reps[j]}` and coordinate map `proj`.
#[derive(Debug, Clone)]
pub struct Level<E> {
    pub k: usize,
    pub dim: usize,
    pub ambient: usize,
    /// Ambient indices whose classes form the basis.
    pub reps: Vec<usize>,
    /// dim × ambient; `proj·v` are the coordinates of the class of v.
    pub proj: Matrix<E>,
    /// rank of A⁻_k when requested.
    pub rank_minus: Option<usize>,
}

/// The braided tensor tower of one calculus Γ_τ.
#[derive(Debug, Clone)]
pub struct Tower<F: Field> {
    pub tau: Tau,
    pub d: usize,
    pub sigma: LocalOp<F::Elem>,
    pub sigma_inv: LocalOp<F::Elem>,
    pub levels: Vec<Level<F::Elem>>,
    /// First degree that was not materialized because of [`MAX_AMBIENT`].
    pub capped_at: Option<usize>,
    /// N², the top degree; levels above it are zero.
    pub top: usize,
}

impl<F: Field> Tower<F> {
    pub fn op(&self, sign: Sign) -> &LocalOp<F::Elem> {
        match sign {
            Sign::Plus => &self.sigma,
            Sign::Minus => &self.sigma_inv,
        }
    }

    /// σ^±_p (1-based p) on a k-fold tensor.
    pub fn sigma_at(&self, f: &F, sign: Sign, k: usize, p: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        apply_local(f, self.op(sign), k, p - 1, v)
    }

    /// B^±_{i,1} = id − σ_i + σ_iσ_{i−1} − … on the first i+1 factors of a k-fold tensor.
    fn b_i1(&self, f: &F, sign: Sign, i: usize, k: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut t = v.to_vec();
        for p in 1..=i {
            t = vec_sub(f, v, &self.sigma_at(f, sign, k, p, &t));
        }
        t
    }

    /// B^±_{1,j} = id − σ_1 + σ_1σ_2 − … on the first j+1 factors of a k-fold tensor.
    fn b_1j(&self, f: &F, sign: Sign, j: usize, k: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut t = v.to_vec();
        for p in (1..=j).rev() {
            t = vec_sub(f, v, &self.sigma_at(f, sign, k, p, &t));
        }
        t
    }

    /// A^±_m on the first m factors of a k-fold tensor, via A_m = (A_{m−1}⊗id)·B_{m−1,1}.
    pub fn antisym_prefix(&self, f: &F, sign: Sign, m: usize, k: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut t = v.to_vec();
        for mm in (2..=m).rev() {
            t = self.b_i1(f, sign, mm - 1, k, &t);
        }
        t
    }

    /// A^±_k on Γ^{⊗k}.
    pub fn antisym(&self, f: &F, sign: Sign, k: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        self.antisym_prefix(f, sign, k, k, v)
    }

    /// B^±_{i,j} = Σ_{π⁻¹ ∈ C_{i,j}} sgn(π) σ_π on Γ^{⊗(i+j)}.
    pub fn shuffle(&self, f: &F, sign: Sign, i: usize, j: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let k = i + j;
        if i == 0 || j == 0 {
            return v.to_vec();
        }
        if j == 1 {
            return self.b_i1(f, sign, i, k, v);
        }
        if i == 1 {
            return self.b_1j(f, sign, j, k, v);
        }
        self.shuffle_enumerated(f, sign, i, j, v)
    }

    /// B_{i,j} by explicit enumeration of the shuffles.
    pub fn shuffle_enumerated(&self, f: &F, sign: Sign, i: usize, j: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let k = i + j;
        let mut out = vec![f.zero(); v.len()];
        for pi in shuffle_inverses(i, j) {
            let (word, sgn) = reduced_word(&pi);
            let mut t = v.to_vec();
            for &p in word.iter().rev() {
                t = self.sigma_at(f, sign, k, p, &t);
            }
            out = if sgn > 0 { vec_add(f, &out, &t) } else { vec_sub(f, &out, &t) };
        }
        out
    }

    /// Full matrix of A^±_k built column by column from the recursion.
    pub fn antisym_matrix(&self, f: &F, sign: Sign, k: usize) -> Matrix<F::Elem> {
        let amb = pow(self.d, k);
        let cols: Vec<Vec<F::Elem>> = (0..amb).map(|j| self.antisym(f, sign, k, &unit(f, amb, j))).collect();
        Matrix::from_cols(amb, &cols, f.zero())
    }

    pub fn level(&self, k: usize) -> Result<&Level<F::Elem>, ComplexError> {
        self.levels.get(k).ok_or(ComplexError::LevelNotBuilt { k, tau: self.tau.symbol() })
    }

    /// Class coordinates of a k-fold tensor.
    pub fn project(&self, f: &F, k: usize, v: &[F::Elem]) -> Result<Vec<F::Elem>, ComplexError> {
        let l = self.level(k)?;
        if l.dim == 0 {
            return Ok(Vec::new());
        }
        Ok(mat_vec(f, &l.proj, v))
    }

    /// Representative tensor of a class given by coordinates.
    pub fn lift(&self, f: &F, k: usize, c: &[F::Elem]) -> Result<Vec<F::Elem>, ComplexError> {
        let l = self.level(k)?;
        let mut v = vec![f.zero(); l.ambient];
        for (j, x) in c.iter().enumerate() {
            v[l.reps[j]] = x.clone();
        }
        Ok(v)
    }

    /// Materializes levels 0..=max_k.
    pub fn build_levels(&mut self, f: &F, max_k: usize, with_minus: bool) {
        for k in self.levels.len()..=max_k {
            let amb = pow(self.d, k);
            if k > self.top {
                self.levels.push(Level { k, dim: 0, ambient: amb, reps: Vec::new(), proj: Matrix { rows: 0, cols: amb, data: Vec::new() }, rank_minus: Some(0) });
                continue;
            }
            if amb > MAX_AMBIENT {
                self.capped_at = Some(k);
                return;
            }
            let level = if k <= 1 {
                let id = crate::field::linalg::identity(f, amb);
                Level { k, dim: amb, ambient: amb, reps: (0..amb).collect(), proj: id, rank_minus: Some(amb) }
            } else {
                let a = self.antisym_matrix(f, Sign::Plus, k);
                let cols = pivot_columns(f, &a);
                let rows = pivot_columns(f, &a.transpose());
                let c = a.select_rows(&rows).select_cols(&cols);
                let cinv = inverse(f, &c).expect("pivot block of A_k is invertible");
                let proj = mat_mul(f, &cinv, &a.select_rows(&rows));
                let rank_minus = with_minus.then(|| rank(f, &self.antisym_matrix(f, Sign::Minus, k)));
                Level { k, dim: cols.len(), ambient: amb, reps: cols, proj, rank_minus }
            };
            self.levels.push(level);
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.dim).collect()
    }
}

/// One-line permutations π (values 1..=k) whose inverse is an (i,j)-shuffle,
/// i.e. π⁻¹ is increasing on 1..=i and on i+1..=i+j.
pub fn shuffle_inverses(i: usize, j: usize) -> Vec<Vec<usize>> {
    let k = i + j;
    let mut out = Vec::new();
    // choose the images of 1..=i under the shuffle c = π⁻¹
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let first: Vec<usize> = (0..k).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        let second: Vec<usize> = (0..k).filter(|b| mask & (1 << b) == 0).map(|b| b + 1).collect();
        let c: Vec<usize> = first.into_iter().chain(second).collect();
        let mut pi = vec![0; k];
        for (x, &y) in c.iter().enumerate() {
            pi[y - 1] = x + 1;
        }
        out.push(pi);
    }
    out
}

/// Reduced word (i_1,…,i_r) with π = s_{i_1}∘⋯∘s_{i_r}, and sgn(π).
pub fn reduced_word(pi: &[usize]) -> (Vec<usize>, i32) {
    let mut p = pi.to_vec();
    let mut rev = Vec::new();
    'outer: loop {
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                // π = (π∘s_i)∘s_i with π∘s_i one shorter
                p.swap(i, i + 1);
                rev.push(i + 1);
                continue 'outer;
            }
        }
        break;
    }
    rev.reverse();
    let sgn = if rev.len() % 2 == 0 { 1 } else { -1 };
    (rev, sgn)
}

/// Σ_{π∈S_k} sgn(π) σ^±_π as a full matrix, by breadth-first search over the
/// weak order (σ_{s_i∘π} = σ_iσ_π whenever the length grows).
pub fn antisymmetrizer_bruteforce<F: Field>(f: &F, t: &Tower<F>, sign: Sign, k: usize) -> Matrix<F::Elem> {
    let amb = pow(t.d, k);
    let mut cols = Vec::with_capacity(amb);
    for j in 0..amb {
        let start: Vec<usize> = (1..=k).collect();
        let mut seen: HashMap<Vec<usize>, Vec<F::Elem>> = HashMap::new();
        seen.insert(start.clone(), unit(f, amb, j));
        let mut frontier = vec![start];
        let mut total = unit(f, amb, j);
        let mut len = 0usize;
        while !frontier.is_empty() {
            len += 1;
            let mut next = Vec::new();
            for pi in &frontier {
                let v = seen[pi].clone();
                for i in 1..k {
                    // s_i∘π swaps the values i and i+1; length grows iff i precedes i+1
                    let pos_i = pi.iter().position(|&x| x == i).unwrap();
                    let pos_j = pi.iter().position(|&x| x == i + 1).unwrap();
                    if pos_i > pos_j {
                        continue;
                    }
                    let mut rho = pi.clone();
                    rho.swap(pos_i, pos_j);
                    if seen.contains_key(&rho) {
                        continue;
                    }
                    let w = t.sigma_at(f, sign, k, i, &v);
                    total = if len % 2 == 0 { vec_add(f, &total, &w) } else { vec_sub(f, &total, &w) };
                    seen.insert(rho.clone(), w);
                    next.push(rho);
                }
            }
            frontier = next;
        }
        debug_assert_eq!(seen.len(), (1..=k).product::<usize>());
        cols.push(total);
    }
    Matrix::from_cols(amb, &cols, f.zero())
}
