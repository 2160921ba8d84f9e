//! The braided exterior tower of the left-coinvariant complex of Γ_{±,z}:
//! braidings, antisymmetrizers, wedge, metric, contraction, d, ∂^±, Δ^±,
//! coinvariants and the Hodge/duality/spectrum verifications.
//!
//! All forms are left-coinvariant and are written in the bases {ω^τ_{ij}};
//! classes of Λ^k are handled through [`Level`] coordinates.

pub mod checks;
pub mod tensor;
pub mod tower;

pub use checks::*;
pub use tower::{antisymmetrizer_bruteforce, reduced_word, shuffle_inverses, Level, Sign, Tower, MAX_AMBIENT};

use crate::field::linalg::{inverse, zeros};
use crate::field::{Field, FieldError, Matrix};
use crate::frt::{adjoint_on_word, d_diag, FrtData, GeneratorWord};
use crate::spectral::Tau;
use tensor::{apply_aux, gtilde, pairing_from_matrix, pow, tensor, vec_add, vec_scale, vec_sub, LocalOp, Pairing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("level {k} of Γ{tau} has not been built")]
    LevelNotBuilt { k: usize, tau: &'static str },
    #[error("degree {0} exceeds the top degree N²")]
    DegreeOverflow(usize),
    #[error("braiding is singular")]
    SingularBraiding,
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub(crate) fn ix(t: Tau) -> usize {
    match t {
        Tau::Plus => 0,
        Tau::Minus => 1,
    }
}

/// Both calculi Γ₊, Γ₋ over one field, with all mixed braidings, the metric
/// and the two exterior towers.
#[derive(Debug, Clone)]
pub struct Calculi<F: Field> {
    pub f: F,
    pub n: usize,
    /// N², the dimension of one factor.
    pub d: usize,
    pub frt: FrtData<F>,
    /// d_i = q^{N+1−2i}.
    pub dd: Vec<F::Elem>,
    /// 𝔰 = [N]_q.
    pub s_trace: F::Elem,
    /// `braid[τ1][τ2]` = σ_{τ1,τ2}: Γ_{τ1}⊗Γ_{τ2} → Γ_{τ2}⊗Γ_{τ1}.
    pub braid: [[LocalOp<F::Elem>; 2]; 2],
    /// Inverse of `braid[τ1][τ2]`, mapping Γ_{τ2}⊗Γ_{τ1} → Γ_{τ1}⊗Γ_{τ2}.
    pub braid_inv: [[LocalOp<F::Elem>; 2]; 2],
    /// `metric[τ]`: g(x, y) for x ∈ Γ_τ, y ∈ Γ_{−τ}.
    pub metric: [Matrix<F::Elem>; 2],
    pub pairing: [Pairing<F::Elem>; 2],
    /// ω₀^τ in the basis of Γ_τ.
    pub omega0: [Vec<F::Elem>; 2],
    pub towers: [Tower<F>; 2],
}

/// σ_{τ1,τ2}(ω^{τ1}_a ⊗ ω^{τ2}_b) = Σ_c ω^{τ2}_c ⊗ ω^{τ1}_a ◁ v^{(τ2)c}_b.
pub fn braiding_matrix<F: Field>(f: &F, frt: &FrtData<F>, t1: Tau, t2: Tau) -> Result<Matrix<F::Elem>, ComplexError> {
    let n = frt.n;
    let d = n * n;
    let act = frt.action(t1);
    let mut m = zeros(f, d * d, d * d);
    for k in 0..n {
        for l in 0..n {
            let c = k * n + l;
            for i in 0..n {
                for j in 0..n {
                    let b = i * n + j;
                    let w = GeneratorWord::coaction_entry(t2, k, l, i, j);
                    let mw = adjoint_on_word(f, act, &w).map_err(|_| ComplexError::SingularBraiding)?;
                    for a in 0..d {
                        for e in 0..d {
                            let x = mw.get(a, e);
                            if !f.is_zero(x) {
                                m.set(c * d + e, a * d + b, x.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(m)
}

impl<F: Field> Calculi<F> {
    /// Builds braidings, metric and exterior levels 0..=max_level of both towers.
    pub fn build(f: &F, n: usize, max_level: usize, with_minus_ranks: bool) -> Result<Self, ComplexError> {
        let frt = FrtData::build(f, n)?;
        let d = n * n;
        let dd = d_diag(f, n);
        let s_trace = dd.iter().fold(f.zero(), |a, b| f.add(&a, b));
        let mut mats = Vec::new();
        let mut invs = Vec::new();
        for t1 in [Tau::Plus, Tau::Minus] {
            for t2 in [Tau::Plus, Tau::Minus] {
                let m = braiding_matrix(f, &frt, t1, t2)?;
                let mi = inverse(f, &m).map_err(|_| ComplexError::SingularBraiding)?;
                mats.push(LocalOp::new(f, d, d, m));
                invs.push(LocalOp::new(f, d, d, mi));
            }
        }
        let take2 = |v: &mut Vec<LocalOp<F::Elem>>| -> [[LocalOp<F::Elem>; 2]; 2] {
            let a = v.remove(0);
            let b = v.remove(0);
            let c = v.remove(0);
            let e = v.remove(0);
            [[a, b], [c, e]]
        };
        let braid = take2(&mut mats);
        let braid_inv = take2(&mut invs);
        let mut gp = zeros(f, d, d);
        let mut gm = zeros(f, d, d);
        for i in 0..n {
            for j in 0..n {
                // g(ω⁺_{ij}, ω⁻_{ji}) = d_j d_i⁻¹, g(ω⁻_{ij}, ω⁺_{ji}) = 1
                gp.set(i * n + j, j * n + i, f.div(&dd[j], &dd[i])?);
                gm.set(i * n + j, j * n + i, f.one());
            }
        }
        let mut o_plus = vec![f.zero(); d];
        let mut o_minus = vec![f.zero(); d];
        for i in 0..n {
            o_plus[i * n + i] = f.one();
            o_minus[i * n + i] = f.inv(&dd[i])?;
        }
        let mk_tower = |t: Tau| Tower {
            tau: t,
            d,
            sigma: braid[ix(t)][ix(t)].clone(),
            sigma_inv: braid_inv[ix(t)][ix(t)].clone(),
            levels: Vec::new(),
            capped_at: None,
            top: d,
        };
        let mut towers = [mk_tower(Tau::Plus), mk_tower(Tau::Minus)];
        for t in towers.iter_mut() {
            t.build_levels(f, max_level, with_minus_ranks);
        }
        let pairing = [pairing_from_matrix(f, &gp), pairing_from_matrix(f, &gm)];
        Ok(Calculi { f: f.clone(), n, d, frt, dd, s_trace, braid, braid_inv, metric: [gp, gm], pairing, omega0: [o_plus, o_minus], towers })
    }

    pub fn tower(&self, t: Tau) -> &Tower<F> {
        &self.towers[ix(t)]
    }

    /// σ^±: Γ_{τ1}⊗Γ_{τ2} → Γ_{τ2}⊗Γ_{τ1}; σ⁺ = σ_{τ1,τ2}, σ⁻ = (σ_{τ2,τ1})⁻¹.
    pub fn mixed(&self, sign: Sign, t1: Tau, t2: Tau) -> &LocalOp<F::Elem> {
        match sign {
            Sign::Plus => &self.braid[ix(t1)][ix(t2)],
            Sign::Minus => &self.braid_inv[ix(t2)][ix(t1)],
        }
    }

    /// g̃(x, y), x ∈ Γ_τ^{⊗n}, y ∈ Γ_{−τ}^{⊗m}.
    pub fn gtilde(&self, tau: Tau, x: &[F::Elem], n: usize, y: &[F::Elem], m: usize) -> Vec<F::Elem> {
        gtilde(&self.f, &self.pairing[ix(tau)], self.d, x, n, y, m)
    }

    /// Class of a representative in level k of Γ_τ.
    pub fn project(&self, tau: Tau, k: usize, v: &[F::Elem]) -> Result<Vec<F::Elem>, ComplexError> {
        self.tower(tau).project(&self.f, k, v)
    }

    pub fn lift(&self, tau: Tau, k: usize, c: &[F::Elem]) -> Result<Vec<F::Elem>, ComplexError> {
        self.tower(tau).lift(&self.f, k, c)
    }

    pub fn dim(&self, tau: Tau, k: usize) -> Result<usize, ComplexError> {
        Ok(self.tower(tau).level(k)?.dim)
    }

    /// Coordinates of the class of ω₀^τ in Λ¹.
    pub fn omega0_coords(&self, tau: Tau) -> Vec<F::Elem> {
        self.omega0[ix(tau)].clone()
    }

    /// a ∧ b for classes a ∈ Λ^k, b ∈ Λ^l of Γ_τ.
    pub fn wedge(&self, tau: Tau, k: usize, a: &[F::Elem], l: usize, b: &[F::Elem]) -> Result<Vec<F::Elem>, ComplexError> {
        if k + l > self.d {
            return Err(ComplexError::DegreeOverflow(k + l));
        }
        let ra = self.lift(tau, k, a)?;
        let rb = self.lift(tau, l, b)?;
        self.project(tau, k + l, &tensor(&self.f, &ra, &rb))
    }

    /// ⟨ξ, ζ⟩^± for representatives ξ ∈ Γ_τ^{⊗k}, ζ ∈ Γ_{−τ}^{⊗l}. Returns the
    /// calculus and degree of the result together with its class coordinates.
    pub fn contract(&self, sign: Sign, tau: Tau, k: usize, xi: &[F::Elem], l: usize, zeta: &[F::Elem]) -> Result<(Tau, usize, Vec<F::Elem>), ComplexError> {
        let f = &self.f;
        let (tx, ty) = (self.tower(tau), self.tower(tau.flip()));
        if k >= l {
            let a = tx.shuffle(f, sign, k - l, l, xi);
            let b = ty.antisym(f, sign, l, zeta);
            let r = self.gtilde(tau, &a, k, &b, l);
            Ok((tau, k - l, tx.project(f, k - l, &r)?))
        } else {
            let a = tx.antisym(f, sign, k, xi);
            let b = ty.shuffle(f, sign, k, l - k, zeta);
            let r = self.gtilde(tau, &a, k, &b, l);
            Ok((tau.flip(), l - k, ty.project(f, l - k, &r)?))
        }
    }

    /// Matrix of d_τ: Λ^k → Λ^{k+1}, dρ = ω₀∧ρ − (−1)^k ρ∧ω₀.
    pub fn differential(&self, tau: Tau, k: usize) -> Result<Matrix<F::Elem>, ComplexError> {
        let f = &self.f;
        let t = self.tower(tau);
        let lk = t.level(k)?;
        let lk1 = t.level(k + 1)?;
        let w = &self.omega0[ix(tau)];
        let mut cols = Vec::with_capacity(lk.dim);
        for &r in &lk.reps {
            let rho = tensor::unit(f, lk.ambient, r);
            let left = tensor(f, w, &rho);
            let right = tensor(f, &rho, w);
            let v = if k % 2 == 0 { vec_sub(f, &left, &right) } else { vec_add(f, &left, &right) };
            cols.push(t.project(f, k + 1, &v)?);
        }
        Ok(Matrix::from_cols(lk1.dim, &cols, f.zero()))
    }

    /// ∂^±ρ = ⟨ρ, ω₀^{−τ}⟩^± + (−1)^k ⟨ω₀^{−τ}, ρ⟩^± for ρ ∈ Λ^k of Γ_τ.
    pub fn codifferential_vec(&self, tau: Tau, sign: Sign, k: usize, rho: &[F::Elem]) -> Result<Vec<F::Elem>, ComplexError> {
        let f = &self.f;
        if k == 0 {
            return Ok(Vec::new());
        }
        let w = &self.omega0[ix(tau.flip())];
        let (_, _, a) = self.contract(sign, tau, k, rho, 1, w)?;
        let (_, _, b) = self.contract(sign, tau.flip(), 1, w, k, rho)?;
        Ok(if k % 2 == 0 { vec_add(f, &a, &b) } else { vec_sub(f, &a, &b) })
    }

    /// Matrix of ∂^±_τ: Λ^k → Λ^{k−1} (zero on scalars).
    pub fn codifferential(&self, tau: Tau, sign: Sign, k: usize) -> Result<Matrix<F::Elem>, ComplexError> {
        let f = &self.f;
        let lk = self.tower(tau).level(k)?;
        if k == 0 {
            return Ok(Matrix { rows: 0, cols: lk.dim, data: Vec::new() });
        }
        let below = self.dim(tau, k - 1)?;
        let mut cols = Vec::with_capacity(lk.dim);
        for &r in &lk.reps {
            cols.push(self.codifferential_vec(tau, sign, k, &tensor::unit(f, lk.ambient, r))?);
        }
        Ok(Matrix::from_cols(below, &cols, f.zero()))
    }

    /// Δ^± = −d∂^± + ∂^±d on Λ^k of Γ_τ.
    pub fn laplacian(&self, tau: Tau, sign: Sign, k: usize) -> Result<Matrix<F::Elem>, ComplexError> {
        use crate::field::linalg::{mat_mul, mat_sub};
        let f = &self.f;
        let dim = self.dim(tau, k)?;
        let mut lap = zeros(f, dim, dim);
        if k > 0 {
            let dd = self.differential(tau, k - 1)?;
            let del = self.codifferential(tau, sign, k)?;
            lap = mat_sub(f, &lap, &mat_mul(f, &dd, &del));
        }
        let d = self.differential(tau, k)?;
        let del = self.codifferential(tau, sign, k + 1)?;
        if del.rows == dim && del.cols == d.rows {
            lap = crate::field::linalg::mat_add(f, &lap, &mat_mul(f, &del, &d));
        }
        Ok(lap)
    }

    /// (−1)^k(−2𝔰ρ + g̃(σ_k⋯σ_1(ω₀⊗ρ), ω₀^{−τ}) + g̃(ω₀^{−τ}, σ_1⋯σ_k(ρ⊗ω₀))).
    pub fn laplacian_alternative(&self, tau: Tau, sign: Sign, k: usize) -> Result<Matrix<F::Elem>, ComplexError> {
        let f = &self.f;
        let t = self.tower(tau);
        let lk = t.level(k)?;
        let w = &self.omega0[ix(tau)];
        let wbar = &self.omega0[ix(tau.flip())];
        let two_s = f.add(&self.s_trace, &self.s_trace);
        let mut cols = Vec::with_capacity(lk.dim);
        for &r in &lk.reps {
            let rho = tensor::unit(f, lk.ambient, r);
            let mut x = tensor(f, w, &rho);
            for p in 1..=k {
                x = t.sigma_at(f, sign, k + 1, p, &x);
            }
            let a = self.gtilde(tau, &x, k + 1, wbar, 1);
            let mut y = tensor(f, &rho, w);
            for p in (1..=k).rev() {
                y = t.sigma_at(f, sign, k + 1, p, &y);
            }
            let b = self.gtilde(tau.flip(), wbar, 1, &y, k + 1);
            let mut v = vec_sub(f, &vec_add(f, &a, &b), &vec_scale(f, &rho, &two_s));
            if k % 2 == 1 {
                v = v.iter().map(|x| f.neg(x)).collect();
            }
            cols.push(t.project(f, k, &v)?);
        }
        Ok(Matrix::from_cols(lk.dim, &cols, f.zero()))
    }

    /// Single-factor operator 𝕃[(a,K)][(b,I)] = ℓ^a_b(v^K_I) on ℂ^N ⊗ Γ_τ.
    fn functional_op(&self, tau: Tau, plus: bool) -> Result<LocalOp<F::Elem>, ComplexError> {
        let f = &self.f;
        let n = self.n;
        let d = self.d;
        let mut m = zeros(f, n * d, n * d);
        for k in 0..n {
            for l in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let w = GeneratorWord::coaction_entry(tau, k, l, i, j);
                        let lv = crate::frt::functional_eval(f, &self.frt.functionals, plus, &w).map_err(|_| ComplexError::SingularBraiding)?;
                        for a in 0..n {
                            for b in 0..n {
                                let x = lv.get(a, b);
                                if !f.is_zero(x) {
                                    m.set(a * d + k * n + l, b * d + i * n + j, x.clone());
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(LocalOp::new(f, n, d, m))
    }

    /// Basis (columns, level coordinates) of the coinvariant forms in Λ^k of
    /// Γ_τ: joint solutions of ℓ^a_b(v^{(k)})x = δ_{ab}x over ℓ⁺ and ℓ⁻.
    pub fn coinvariant_subspace(&self, tau: Tau, k: usize) -> Result<Matrix<F::Elem>, ComplexError> {
        let f = &self.f;
        let n = self.n;
        let t = self.tower(tau);
        let lk = t.level(k)?;
        let dim = lk.dim;
        if k == 0 {
            return Ok(crate::field::linalg::identity(f, dim));
        }
        let inner = pow(self.d, k);
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for plus in [true, false] {
            let op = self.functional_op(tau, plus)?;
            for b in 0..n {
                // columns: images of e_b ⊗ rep_j, projected per output a
                let mut images: Vec<Vec<Vec<F::Elem>>> = Vec::with_capacity(dim);
                for &r in &lk.reps {
                    let mut v = vec![f.zero(); n * inner];
                    v[b * inner + r] = f.one();
                    for pos in (0..k).rev() {
                        v = apply_aux(f, &op, k, pos, &v);
                    }
                    let per_a: Result<Vec<Vec<F::Elem>>, ComplexError> = (0..n).map(|a| t.project(f, k, &v[a * inner..(a + 1) * inner])).collect();
                    images.push(per_a?);
                }
                for a in 0..n {
                    for i in 0..dim {
                        let row: Vec<F::Elem> = (0..dim)
                            .map(|j| {
                                let x = images[j][a][i].clone();
                                if a == b && i == j {
                                    f.sub(&x, &f.one())
                                } else {
                                    x
                                }
                            })
                            .collect();
                        if row.iter().any(|x| !f.is_zero(x)) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        if rows.is_empty() {
            return Ok(crate::field::linalg::identity(f, dim));
        }
        Ok(crate::field::linalg::kernel(f, &Matrix::from_rows(rows)))
    }
}
