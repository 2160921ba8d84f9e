//! Type-A R̂-matrix, the right adjoint action of the FRT generators on the
//! left-coinvariant bases of Γ_{±,z}, and evaluation of the representative
//! functionals ℓ^± on balanced words.
//!
//! Index conventions (0-based internally):
//! * `R̂^{ij}_{kl}` is the coefficient of `e_i⊗e_j` in `R̂(e_k⊗e_l)`; as a matrix
//!   the row index is `i·N+j` and the column index `k·N+l`.
//! * The basis form `ω_{ij}` has index `i·N+j`.
//! * Action matrices use rows: `ω_{ij}◁a = Σ_{kl} M(a)[ij][kl] ω_{kl}`, so that
//!   `M(ab) = M(a)·M(b)`.
//! * Functionals are matrix valued: `ℓ(x)[i][j] = ℓ^i_j(x)` with
//!   `ℓ(ab) = ℓ(a)·ℓ(b)`.

use crate::field::linalg::{identity, inverse, is_zero_matrix, mat_add, mat_mul, mat_scale, mat_sub, zeros};
use crate::field::{Field, FieldError, Matrix};
use crate::spectral::Tau;

/// The braid operator R̂ on V⊗V together with its inverse.
#[derive(Debug, Clone)]
pub struct RHat<F: Field> {
    pub n: usize,
    pub mat: Matrix<F::Elem>,
    pub inv: Matrix<F::Elem>,
}

/// R̂(e_k⊗e_k) = q e_k⊗e_k; for k ≠ l, R̂(e_k⊗e_l) = e_l⊗e_k + [k<l](q−q⁻¹) e_k⊗e_l.
pub fn build_rhat<F: Field>(f: &F, n: usize) -> RHat<F> {
    assert!(n >= 2, "N must be at least 2");
    let q = f.q();
    let qi = f.inv(&q).expect("q is invertible");
    let qq = f.sub(&q, &qi);
    let mut mat = zeros(f, n * n, n * n);
    for k in 0..n {
        for l in 0..n {
            let col = k * n + l;
            if k == l {
                mat.set(col, col, q.clone());
            } else {
                mat.set(l * n + k, col, f.one());
                if k < l {
                    mat.set(col, col, qq.clone());
                }
            }
        }
    }
    // Hecke: R̂⁻¹ = R̂ − (q − q⁻¹)·1.
    let inv = mat_sub(f, &mat, &mat_scale(f, &identity(f, n * n), &qq));
    RHat { n, mat, inv }
}

impl<F: Field> RHat<F> {
    /// `R̂^{ij}_{kl}`.
    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> &F::Elem {
        self.mat.get(i * self.n + j, k * self.n + l)
    }

    /// `(R̂⁻¹)^{ij}_{kl}`.
    pub fn rinv(&self, i: usize, j: usize, k: usize, l: usize) -> &F::Elem {
        self.inv.get(i * self.n + j, k * self.n + l)
    }

    /// `R̂⊗1` and `1⊗R̂` on V^{⊗3}.
    fn lifts(&self, f: &F) -> (Matrix<F::Elem>, Matrix<F::Elem>) {
        let id = identity(f, self.n);
        (crate::field::linalg::kron(f, &self.mat, &id), crate::field::linalg::kron(f, &id, &self.mat))
    }

    /// R̂₁R̂₂R̂₁ = R̂₂R̂₁R̂₂.
    pub fn braid_holds(&self, f: &F) -> bool {
        let (r1, r2) = self.lifts(f);
        let lhs = mat_mul(f, &mat_mul(f, &r1, &r2), &r1);
        let rhs = mat_mul(f, &mat_mul(f, &r2, &r1), &r2);
        lhs == rhs || is_zero_matrix(f, &mat_sub(f, &lhs, &rhs))
    }

    /// (R̂ − q)(R̂ + q⁻¹) = 0.
    pub fn hecke_holds(&self, f: &F) -> bool {
        let id = identity(f, self.n * self.n);
        let q = f.q();
        let qi = f.inv(&q).expect("q is invertible");
        let a = mat_sub(f, &self.mat, &mat_scale(f, &id, &q));
        let b = mat_add(f, &self.mat, &mat_scale(f, &id, &qi));
        is_zero_matrix(f, &mat_mul(f, &a, &b)) && is_zero_matrix(f, &mat_sub(f, &mat_mul(f, &self.mat, &self.inv), &id))
    }
}

/// `d_i = q^{N+1−2i}` (1-based i), the diagonal of D.
pub fn d_diag<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
    let q = f.q();
    (1..=n as i64).map(|i| f.pow(&q, n as i64 + 1 - 2 * i).expect("q is invertible")).collect()
}

/// Kind of generator letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    U,
    Su,
    S2u,
}

/// One letter `u^i_j`, `S(u^i_j)` or `S²(u^i_j)` (0-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub i: usize,
    pub j: usize,
}

impl Letter {
    pub fn u(i: usize, j: usize) -> Self {
        Letter { gen: Gen::U, i, j }
    }
    pub fn su(i: usize, j: usize) -> Self {
        Letter { gen: Gen::Su, i, j }
    }
    pub fn s2u(i: usize, j: usize) -> Self {
        Letter { gen: Gen::S2u, i, j }
    }
}

/// A monomial in the generators, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GeneratorWord(letters)
    }

    /// Equal numbers of u-type and Su-type letters; S²u scales like u.
    pub fn is_balanced(&self) -> bool {
        let su = self.0.iter().filter(|l| l.gen == Gen::Su).count();
        su * 2 == self.0.len()
    }

    /// Entry `v^{kl}_{ij}` of the right coaction matrix of Γ_τ:
    /// `u^k_i S(u^j_l)` for τ = + and `S²(u^k_i) S(u^j_l)` for τ = −.
    pub fn coaction_entry(tau: Tau, k: usize, l: usize, i: usize, j: usize) -> Self {
        let first = match tau {
            Tau::Plus => Letter::u(k, i),
            Tau::Minus => Letter::s2u(k, i),
        };
        GeneratorWord(vec![first, Letter::su(j, l)])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrtError {
    #[error("word is not balanced; functional values depend on the admissible scalars")]
    Unbalanced,
    #[error("letter index out of range")]
    Index,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Images of `u^a_b`, `S(u^a_b)`, `S²(u^a_b)` under an algebra homomorphism
/// into s×s matrices. Blocks are stored at index `a·N+b`.
#[derive(Debug, Clone)]
pub struct GeneratorImages<E> {
    pub n: usize,
    pub size: usize,
    pub u: Vec<Matrix<E>>,
    pub su: Vec<Matrix<E>>,
    pub s2u: Vec<Matrix<E>>,
}

/// Solves Σ_k F(a,k)·G(k,b) = δ_{ab}·1 for the blocks G, where `blk(a,k)` is s×s.
fn block_inverse<F: Field>(
    f: &F,
    n: usize,
    s: usize,
    blk: impl Fn(usize, usize) -> Matrix<F::Elem>,
) -> Result<Vec<Matrix<F::Elem>>, FieldError> {
    let mut big = zeros(f, n * s, n * s);
    for a in 0..n {
        for k in 0..n {
            let b = blk(a, k);
            for r in 0..s {
                for c in 0..s {
                    big.set(a * s + r, k * s + c, b.get(r, c).clone());
                }
            }
        }
    }
    let inv = inverse(f, &big).map_err(|e| match e {
        FieldError::Singular => FieldError::Resample,
        other => other,
    })?;
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for b in 0..n {
            let mut m = zeros(f, s, s);
            for r in 0..s {
                for c in 0..s {
                    m.set(r, c, inv.get(k * s + r, b * s + c).clone());
                }
            }
            out.push(m);
        }
    }
    Ok(out)
}

impl<E: Clone> GeneratorImages<E> {
    pub fn letter(&self, l: &Letter) -> &Matrix<E> {
        let idx = l.i * self.n + l.j;
        match l.gen {
            Gen::U => &self.u[idx],
            Gen::Su => &self.su[idx],
            Gen::S2u => &self.s2u[idx],
        }
    }
}

/// Completes the u-images with the antipode images: S(u) from
/// Σ_k X(u^a_k)X(Su^k_b) = δ_{ab}, then S²(u) from Σ_k X(S²u^k_b)X(Su^a_k) = δ_{ab}.
fn complete_images<F: Field>(f: &F, n: usize, s: usize, u: Vec<Matrix<F::Elem>>) -> Result<GeneratorImages<F::Elem>, FieldError> {
    let su = block_inverse(f, n, s, |a, k| u[a * n + k].clone())?;
    // Q(a,b) = X(Su^b_a); G = Q⁻¹ has G(b,k) = X(S²u^k_b).
    let g = block_inverse(f, n, s, |a, b| su[b * n + a].clone())?;
    let mut s2u = vec![zeros(f, s, s); n * n];
    for b in 0..n {
        for k in 0..n {
            s2u[k * n + b] = g[b * n + k].clone();
        }
    }
    Ok(GeneratorImages { n, size: s, u, su, s2u })
}

/// Right adjoint action of the generators on the coinvariant basis of Γ_τ.
#[derive(Debug, Clone)]
pub struct AdjointAction<F: Field> {
    pub tau: Tau,
    pub images: GeneratorImages<F::Elem>,
}

/// Γ₊: ω_{ij}◁u^m_n = z⁻¹ R̂^{mk}_{iv} R̂^{jv}_{nl} ω_{kl};
/// Γ₋: ω_{ij}◁u^m_n = z d_i d_k⁻¹ R̂⁻¹{}^{mk}_{iv} R̂⁻¹{}^{jv}_{nl} ω_{kl}.
pub fn adjoint_on_generators<F: Field>(f: &F, r: &RHat<F>, tau: Tau) -> Result<AdjointAction<F>, FieldError> {
    let n = r.n;
    let s = n * n;
    let z = f.z();
    let zi = f.inv(&z)?;
    let d = d_diag(f, n);
    let mut u = Vec::with_capacity(s);
    for m in 0..n {
        for nn in 0..n {
            let mut mat = zeros(f, s, s);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        for l in 0..n {
                            let mut acc = f.zero();
                            for v in 0..n {
                                acc = match tau {
                                    Tau::Plus => f.mul_add(&acc, r.r(m, k, i, v), r.r(j, v, nn, l)),
                                    Tau::Minus => f.mul_add(&acc, r.rinv(m, k, i, v), r.rinv(j, v, nn, l)),
                                };
                            }
                            if f.is_zero(&acc) {
                                continue;
                            }
                            let pref = match tau {
                                Tau::Plus => zi.clone(),
                                Tau::Minus => f.div(&f.mul(&z, &d[i]), &d[k])?,
                            };
                            mat.set(i * n + j, k * n + l, f.mul(&pref, &acc));
                        }
                    }
                }
            }
            u.push(mat);
        }
    }
    Ok(AdjointAction { tau, images: complete_images(f, n, s, u)? })
}

/// Ordered product of the letters' matrices.
pub fn eval_word<F: Field>(f: &F, images: &GeneratorImages<F::Elem>, w: &GeneratorWord) -> Result<Matrix<F::Elem>, FrtError> {
    let mut acc = identity(f, images.size);
    for l in &w.0 {
        if l.i >= images.n || l.j >= images.n {
            return Err(FrtError::Index);
        }
        acc = mat_mul(f, &acc, images.letter(l));
    }
    Ok(acc)
}

/// Matrix of ρ ↦ ρ◁w on the basis {ω^τ_{ij}}.
pub fn adjoint_on_word<F: Field>(f: &F, act: &AdjointAction<F>, w: &GeneratorWord) -> Result<Matrix<F::Elem>, FrtError> {
    eval_word(f, &act.images, w)
}

/// The representative functionals ℓ⁺ and ℓ⁻ (admissible scalars set to 1).
#[derive(Debug, Clone)]
pub struct Functionals<F: Field> {
    pub plus: GeneratorImages<F::Elem>,
    pub minus: GeneratorImages<F::Elem>,
}

/// ℓ⁺{}^i_j(u^a_b) = R̂^{ia}_{bj}, ℓ⁻{}^i_j(u^a_b) = (R̂⁻¹)^{ia}_{bj}.
pub fn functionals<F: Field>(f: &F, r: &RHat<F>) -> Result<Functionals<F>, FieldError> {
    let n = r.n;
    let build = |minus: bool| -> Vec<Matrix<F::Elem>> {
        let mut u = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut m = zeros(f, n, n);
                for i in 0..n {
                    for j in 0..n {
                        let v = if minus { r.rinv(i, a, b, j) } else { r.r(i, a, b, j) };
                        m.set(i, j, v.clone());
                    }
                }
                u.push(m);
            }
        }
        u
    };
    Ok(Functionals { plus: complete_images(f, n, n, build(false))?, minus: complete_images(f, n, n, build(true))? })
}

/// ℓ^±(w) as an N×N matrix; only balanced words are accepted.
pub fn functional_eval<F: Field>(f: &F, fun: &Functionals<F>, plus: bool, w: &GeneratorWord) -> Result<Matrix<F::Elem>, FrtError> {
    if !w.is_balanced() {
        return Err(FrtError::Unbalanced);
    }
    eval_word(f, if plus { &fun.plus } else { &fun.minus }, w)
}

/// Observed relation between X(S²u^i_j) and X(u^i_j) for a homomorphism X.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SquareRatio {
    /// S²(u^i_j) = d_i d_j⁻¹ u^i_j.
    DiDjInv,
    /// S²(u^i_j) = d_j d_i⁻¹ u^i_j.
    DjDiInv,
    Neither,
}

/// The conjugation coefficients c_{ij} = d_i d_j⁻¹ (row-major N×N).
pub fn s_squared<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
    let d = d_diag(f, n);
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(f.div(&d[i], &d[j]).expect("d_j is invertible"));
        }
    }
    out
}

/// Compares the computed S²-images with the diagonal conjugation data.
pub fn square_ratio<F: Field>(f: &F, images: &GeneratorImages<F::Elem>) -> SquareRatio {
    let n = images.n;
    let c = s_squared(f, n);
    let matches = |inverted: bool| {
        (0..n).all(|i| {
            (0..n).all(|j| {
                let coef = if inverted { c[j * n + i].clone() } else { c[i * n + j].clone() };
                let want = mat_scale(f, &images.u[i * n + j], &coef);
                is_zero_matrix(f, &mat_sub(f, &images.s2u[i * n + j], &want))
            })
        })
    };
    if matches(false) {
        SquareRatio::DiDjInv
    } else if matches(true) {
        SquareRatio::DjDiInv
    } else {
        SquareRatio::Neither
    }
}

/// Antipode identities Σ_k X(u^m_k)X(Su^k_n) = δ_{mn} and Σ_k X(Su^m_k)X(u^k_n) = δ_{mn}.
pub fn antipode_identities_hold<F: Field>(f: &F, images: &GeneratorImages<F::Elem>) -> bool {
    let n = images.n;
    let id = identity(f, images.size);
    let zero = zeros(f, images.size, images.size);
    for m in 0..n {
        for nn in 0..n {
            let want = if m == nn { &id } else { &zero };
            let mut a = zero.clone();
            let mut b = zero.clone();
            for k in 0..n {
                a = mat_add(f, &a, &mat_mul(f, &images.u[m * n + k], &images.su[k * n + nn]));
                b = mat_add(f, &b, &mat_mul(f, &images.su[m * n + k], &images.u[k * n + nn]));
            }
            if !is_zero_matrix(f, &mat_sub(f, &a, want)) || !is_zero_matrix(f, &mat_sub(f, &b, want)) {
                return false;
            }
        }
    }
    true
}

/// All FRT data for one (N, field).
#[derive(Debug, Clone)]
pub struct FrtData<F: Field> {
    pub n: usize,
    pub rhat: RHat<F>,
    pub plus: AdjointAction<F>,
    pub minus: AdjointAction<F>,
    pub functionals: Functionals<F>,
}

impl<F: Field> FrtData<F> {
    pub fn build(f: &F, n: usize) -> Result<Self, FieldError> {
        let rhat = build_rhat(f, n);
        let plus = adjoint_on_generators(f, &rhat, Tau::Plus)?;
        let minus = adjoint_on_generators(f, &rhat, Tau::Minus)?;
        let functionals = functionals(f, &rhat)?;
        Ok(FrtData { n, rhat, plus, minus, functionals })
    }

    pub fn action(&self, tau: Tau) -> &AdjointAction<F> {
        match tau {
            Tau::Plus => &self.plus,
            Tau::Minus => &self.minus,
        }
    }
}
