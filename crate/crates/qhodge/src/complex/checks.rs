//! Verification suites: structural identities, Hodge decomposition, harmonic =
//! coinvariant, duality of d and ∂, the spectrum cross-check and the weak
//! isomorphism Γ₊ → Γ₋.

use super::tensor::{apply_local, is_zero_vec, pow, tensor, unit, vec_add, vec_scale, vec_sub, LocalOp};
use super::{ix, Calculi, ComplexError, Sign};
use crate::charring;
use crate::field::linalg::{identity, inverse, is_zero_matrix, kernel, kron, mat_add, mat_mul, mat_scale, mat_sub, rank, zeros};
use crate::field::{Field, Matrix};
use crate::spectral::{eigen_a_poly, Tau};
use serde::Serialize;

/// One named pass/fail verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub ok: bool,
}

fn item(name: impl Into<String>, ok: bool) -> CheckItem {
    CheckItem { name: name.into(), ok }
}

const BOTH: [Tau; 2] = [Tau::Plus, Tau::Minus];

fn mat_eq<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> bool {
    a.rows == b.rows && a.cols == b.cols && is_zero_matrix(f, &mat_sub(f, a, b))
}

fn vec_eq<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> bool {
    a.len() == b.len() && is_zero_vec(f, &vec_sub(f, a, b))
}

impl<F: Field> Calculi<F> {
    /// Braid equation σ₁σ₂σ₁ = σ₂σ₁σ₂ on Γ_τ^{⊗3}, checked on every basis tensor.
    pub fn braid_equation_holds(&self, tau: Tau) -> bool {
        let f = &self.f;
        let t = self.tower(tau);
        let amb = pow(self.d, 3);
        (0..amb).all(|j| {
            let v = unit(f, amb, j);
            let l = t.sigma_at(f, Sign::Plus, 3, 1, &t.sigma_at(f, Sign::Plus, 3, 2, &t.sigma_at(f, Sign::Plus, 3, 1, &v)));
            let r = t.sigma_at(f, Sign::Plus, 3, 2, &t.sigma_at(f, Sign::Plus, 3, 1, &t.sigma_at(f, Sign::Plus, 3, 2, &v)));
            vec_eq(f, &l, &r)
        })
    }

    /// Mixed braid relation on Γ_a⊗Γ_b⊗Γ_c:
    /// σ^{b,c}_1 σ^{a,c}_2 σ^{a,b}_1 = σ^{a,b}_2 σ^{a,c}_1 σ^{b,c}_2.
    pub fn mixed_braid_holds(&self, a: Tau, b: Tau, c: Tau) -> bool {
        let f = &self.f;
        let amb = pow(self.d, 3);
        let (ab, ac, bc) = (&self.braid[ix(a)][ix(b)], &self.braid[ix(a)][ix(c)], &self.braid[ix(b)][ix(c)]);
        (0..amb).all(|j| {
            let v = unit(f, amb, j);
            let l = apply_local(f, bc, 3, 0, &apply_local(f, ac, 3, 1, &apply_local(f, ab, 3, 0, &v)));
            let r = apply_local(f, ab, 3, 1, &apply_local(f, ac, 3, 0, &apply_local(f, bc, 3, 1, &v)));
            vec_eq(f, &l, &r)
        })
    }

    /// σ(α⊗ω₀) = ω₀⊗α for every basis α (any left calculus, right factor ω₀^{τ2}).
    pub fn coinvariant_flip_holds(&self, t1: Tau, t2: Tau) -> bool {
        let f = &self.f;
        let w = &self.omega0[ix(t2)];
        (0..self.d).all(|a| {
            let alpha = unit(f, self.d, a);
            let lhs = apply_local(f, &self.braid[ix(t1)][ix(t2)], 2, 0, &tensor(f, &alpha, w));
            vec_eq(f, &lhs, &tensor(f, w, &alpha))
        })
    }

    /// g∘σ^± = g on Γ_τ⊗Γ_{−τ}.
    pub fn metric_sigma_symmetric(&self, tau: Tau, sign: Sign) -> bool {
        let f = &self.f;
        let d = self.d;
        let op = self.mixed(sign, tau, tau.flip());
        let pair = |w: &[F::Elem], t: Tau| {
            let mut acc = f.zero();
            for (idx, val) in w.iter().enumerate() {
                if !f.is_zero(val) {
                    acc = f.mul_add(&acc, val, self.metric[ix(t)].get(idx / d, idx % d));
                }
            }
            acc
        };
        (0..d * d).all(|j| {
            let v = unit(f, d * d, j);
            let l = pair(&apply_local(f, op, 2, 0, &v), tau.flip());
            f.is_zero(&f.sub(&l, &pair(&v, tau)))
        })
    }

    /// g₁₂σ₂₃σ₁₂ = g₂₃ on Γ_λ⊗Γ_τ⊗Γ_{−τ}.
    pub fn metric_compatibility_holds(&self, lam: Tau, tau: Tau, sign: Sign) -> bool {
        let f = &self.f;
        let d = self.d;
        let s12 = self.mixed(sign, lam, tau);
        let s23 = self.mixed(sign, lam, tau.flip());
        (0..d * d * d).all(|j| {
            let v = unit(f, d * d * d, j);
            let w = apply_local(f, s23, 3, 1, &apply_local(f, s12, 3, 0, &v));
            // g on the first two factors (Γ_τ⊗Γ_{−τ}) leaves Γ_λ
            let mut lhs = vec![f.zero(); d];
            for (idx, x) in w.iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                let (a, b, c) = (idx / (d * d), (idx / d) % d, idx % d);
                let g = self.metric[ix(tau)].get(a, b);
                if !f.is_zero(g) {
                    lhs[c] = f.mul_add(&lhs[c], x, g);
                }
            }
            let (l0, a, b) = (j / (d * d), (j / d) % d, j % d);
            let mut rhs = vec![f.zero(); d];
            rhs[l0] = self.metric[ix(tau)].get(a, b).clone();
            vec_eq(f, &lhs, &rhs)
        })
    }

    /// g(ω₀^τ, ω₀^{−τ}) and ⟨ω₀^τ, ω₀^{−τ}⟩^± all equal 𝔰.
    pub fn omega0_pairing_is_trace(&self, tau: Tau) -> Result<bool, ComplexError> {
        let f = &self.f;
        let (w, wb) = (&self.omega0[ix(tau)], &self.omega0[ix(tau.flip())]);
        let g = self.gtilde(tau, w, 1, wb, 1);
        let mut ok = g.len() == 1 && f.is_zero(&f.sub(&g[0], &self.s_trace));
        for sign in BOTH {
            let (_, _, c) = self.contract(sign, tau, 1, w, 1, wb)?;
            ok &= c.len() == 1 && f.is_zero(&f.sub(&c[0], &self.s_trace));
        }
        Ok(ok)
    }

    /// d_{k+1}d_k = 0 for k + 2 ≤ `max_k`.
    pub fn d_squared_zero(&self, tau: Tau, max_k: usize) -> Result<bool, ComplexError> {
        let f = &self.f;
        for k in 0..max_k.saturating_sub(1) {
            let dd = mat_mul(f, &self.differential(tau, k + 1)?, &self.differential(tau, k)?);
            if !is_zero_matrix(f, &dd) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Δ_{k+1}d_k = −d_kΔ_k.
    pub fn laplacian_anticommutes(&self, tau: Tau, sign: Sign, k: usize) -> Result<bool, ComplexError> {
        let f = &self.f;
        let d = self.differential(tau, k)?;
        let l = mat_mul(f, &self.laplacian(tau, sign, k + 1)?, &d);
        let r = mat_mul(f, &d, &self.laplacian(tau, sign, k)?);
        Ok(is_zero_matrix(f, &mat_add(f, &l, &r)))
    }

    pub fn laplacian_alternative_agrees(&self, tau: Tau, sign: Sign, k: usize) -> Result<bool, ComplexError> {
        Ok(mat_eq(&self.f, &self.laplacian(tau, sign, k)?, &self.laplacian_alternative(tau, sign, k)?))
    }

    /// ⟨ξ∧ρ₁, ρ₂⟩^± = ξ⟨ρ₁,ρ₂⟩^± − ⟨ξ, ρ^∓₍₁₎⟩^±∧ρ^∓₍₂₎ for basis ξ ∈ Λ^k_τ,
    /// ρ₁ ∈ Γ_τ, ρ₂ ∈ Γ_{−τ}, with σ^∓(ρ₁⊗ρ₂) = ρ^∓₍₁₎⊗ρ^∓₍₂₎.
    pub fn contraction_recursion_holds(&self, tau: Tau, sign: Sign, k: usize) -> Result<bool, ComplexError> {
        let f = &self.f;
        let d = self.d;
        let t = self.tower(tau);
        let lk = t.level(k)?;
        let op = self.mixed(sign.flip(), tau, tau.flip());
        for &xr in &lk.reps {
            let xi = unit(f, lk.ambient, xr);
            for r1 in 0..d {
                let rho1 = unit(f, d, r1);
                let xr1 = tensor(f, &xi, &rho1);
                for r2 in 0..d {
                    let rho2 = unit(f, d, r2);
                    let (_, _, lhs) = self.contract(sign, tau, k + 1, &xr1, 1, &rho2)?;
                    let (_, _, s) = self.contract(sign, tau, 1, &rho1, 1, &rho2)?;
                    let mut rhs = vec_scale(f, &xi, &s[0]);
                    let sw = apply_local(f, op, 2, 0, &tensor(f, &rho1, &rho2));
                    for (idx, c) in sw.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        let (e, g) = (idx / d, idx % d);
                        let (_, _, inner) = self.contract(sign, tau, k, &xi, 1, &unit(f, d, e))?;
                        let rep = self.lift(tau, k - 1, &inner)?;
                        let term = vec_scale(f, &tensor(f, &rep, &unit(f, d, g)), c);
                        rhs = vec_sub(f, &rhs, &term);
                    }
                    let rhs = self.project(tau, k, &rhs)?;
                    if !vec_eq(f, &lhs, &rhs) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// ⟨ρ₁∧ξ, ρ₂⟩^± = ρ₁∧⟨ξ,ρ₂⟩^± + (−1)^k g̃(σ^±_k⋯σ^±_1(ρ₁⊗ξ), ρ₂).
    pub fn contraction_leibniz_holds(&self, tau: Tau, sign: Sign, k: usize) -> Result<bool, ComplexError> {
        let f = &self.f;
        let d = self.d;
        let t = self.tower(tau);
        let lk = t.level(k)?;
        for &xr in &lk.reps {
            let xi = unit(f, lk.ambient, xr);
            for r1 in 0..d {
                let rho1 = unit(f, d, r1);
                let r1x = tensor(f, &rho1, &xi);
                for r2 in 0..d {
                    let rho2 = unit(f, d, r2);
                    let (_, _, lhs) = self.contract(sign, tau, k + 1, &r1x, 1, &rho2)?;
                    let (_, _, inner) = self.contract(sign, tau, k, &xi, 1, &rho2)?;
                    let first = tensor(f, &rho1, &self.lift(tau, k - 1, &inner)?);
                    let mut moved = r1x.clone();
                    for p in 1..=k {
                        moved = t.sigma_at(f, sign, k + 1, p, &moved);
                    }
                    let mut second = self.gtilde(tau, &moved, k + 1, &rho2, 1);
                    if k % 2 == 1 {
                        second = second.iter().map(|x| f.neg(x)).collect();
                    }
                    let rhs = self.project(tau, k, &vec_add(f, &first, &second))?;
                    if !vec_eq(f, &lhs, &rhs) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// ⟨ξ₁,⟨ξ₂,ξ₀⟩⟩^± = ⟨ξ₁∧ξ₂, ξ₀⟩^± for basis ξ₁ ∈ Λ^{k1}, ξ₂ ∈ Λ^{k2} of
    /// Γ_{−τ} and ξ₀ ∈ Λ^{k0} of Γ_τ, k1 + k2 ≤ k0.
    pub fn contraction_associative(&self, tau: Tau, sign: Sign, k1: usize, k2: usize, k0: usize) -> Result<bool, ComplexError> {
        let f = &self.f;
        let other = tau.flip();
        let (l1, l2, l0) = (self.tower(other).level(k1)?, self.tower(other).level(k2)?, self.tower(tau).level(k0)?);
        for &a in &l1.reps {
            let x1 = unit(f, l1.ambient, a);
            for &b in &l2.reps {
                let x2 = unit(f, l2.ambient, b);
                let x12 = tensor(f, &x1, &x2);
                for &c in &l0.reps {
                    let x0 = unit(f, l0.ambient, c);
                    let (t_in, k_in, inner) = self.contract(sign, other, k2, &x2, k0, &x0)?;
                    debug_assert_eq!(t_in, tau);
                    let (_, _, lhs) = self.contract(sign, other, k1, &x1, k_in, &self.lift(tau, k_in, &inner)?)?;
                    let (_, _, rhs) = self.contract(sign, other, k1 + k2, &x12, k0, &x0)?;
                    if !vec_eq(f, &lhs, &rhs) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Full structural suite over all built degrees.
    pub fn structural_checks(&self, max_k: usize) -> Result<Vec<CheckItem>, ComplexError> {
        let f = &self.f;
        // highest degree materialized in both towers
        let built = self.towers.iter().map(|t| t.levels.len()).min().unwrap_or(0).saturating_sub(1);
        let mut out = vec![item("R-hat braid relation", self.frt.rhat.braid_holds(f)), item("R-hat Hecke relation", self.frt.rhat.hecke_holds(f))];
        for tau in BOTH {
            let s = tau.symbol();
            out.push(item(format!("braid equation Gamma{s}"), self.braid_equation_holds(tau)));
            for t2 in BOTH {
                out.push(item(format!("coinvariant flip Gamma{s} x omega0{}", t2.symbol()), self.coinvariant_flip_holds(tau, t2)));
            }
            out.push(item(format!("g(omega0{s}, omega0) = [N]"), self.omega0_pairing_is_trace(tau)?));
            out.push(item(format!("d^2 = 0 Gamma{s}"), self.d_squared_zero(tau, (max_k + 1).min(built))?));
            for sign in BOTH {
                let g = sign.symbol();
                out.push(item(format!("metric sigma{g}-symmetry Gamma{s}"), self.metric_sigma_symmetric(tau, sign)));
                for lam in BOTH {
                    out.push(item(format!("g12 s23 s12 = g23 sigma{g} Gamma{}(x)Gamma{s}", lam.symbol()), self.metric_compatibility_holds(lam, tau, sign)));
                }
                for k in 0..=max_k.min(built.saturating_sub(1)) {
                    out.push(item(format!("alternative Laplacian{g} Gamma{s} k={k}"), self.laplacian_alternative_agrees(tau, sign, k)?));
                    if k + 2 <= built {
                        out.push(item(format!("Delta{g} d = -d Delta{g} Gamma{s} k={k}"), self.laplacian_anticommutes(tau, sign, k)?));
                    }
                }
                for k in 1..=max_k.min(2) {
                    out.push(item(format!("contraction recursion{g} Gamma{s} k={k}"), self.contraction_recursion_holds(tau, sign, k)?));
                    out.push(item(format!("contraction Leibniz rule{g} Gamma{s} k={k}"), self.contraction_leibniz_holds(tau, sign, k)?));
                }
            }
        }
        for (a, b, c) in [(Tau::Plus, Tau::Plus, Tau::Minus), (Tau::Plus, Tau::Minus, Tau::Plus), (Tau::Minus, Tau::Plus, Tau::Plus), (Tau::Minus, Tau::Minus, Tau::Plus)] {
            out.push(item(format!("mixed braid relation {}{}{}", a.symbol(), b.symbol(), c.symbol()), self.mixed_braid_holds(a, b, c)));
        }
        Ok(out)
    }
}

/// Hodge data in one degree (left-coinvariant complex of Γ_τ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeRow {
    pub degree: usize,
    pub dim: usize,
    pub rank_d: usize,
    pub rank_del_plus: usize,
    pub rank_del_minus: usize,
    pub dim_harmonic_plus: usize,
    pub dim_harmonic_minus: usize,
    pub dim_coinvariant: usize,
    pub hodge_ok: bool,
    pub spectrum_ok: bool,
    pub rank_d_prev: usize,
    pub rank_del_next_plus: usize,
    pub rank_del_next_minus: usize,
    /// ker Δ^± equals the coinvariant subspace (for both signs).
    pub harmonic_is_coinvariant: bool,
}

fn stacked_rank<F: Field>(f: &F, dim: usize, blocks: &[&Matrix<F::Elem>]) -> usize {
    let mut cols: Vec<Vec<F::Elem>> = Vec::new();
    for b in blocks {
        for j in 0..b.cols {
            cols.push(b.col(j));
        }
    }
    if cols.is_empty() || dim == 0 {
        return 0;
    }
    rank(f, &Matrix::from_cols(dim, &cols, f.zero()))
}

/// Same column space.
fn same_span<F: Field>(f: &F, dim: usize, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> bool {
    let (ra, rb) = (stacked_rank(f, dim, &[a]), stacked_rank(f, dim, &[b]));
    ra == rb && stacked_rank(f, dim, &[a, b]) == ra
}

impl<F: Field> Calculi<F> {
    /// Λ^k = dΛ^{k−1} ⊕ ∂^±Λ^{k+1} ⊕ ker Δ^± for both signs, plus the
    /// harmonic = coinvariant and spectrum verdicts.
    pub fn hodge_check(&self, tau: Tau, k: usize) -> Result<HodgeRow, ComplexError> {
        let f = &self.f;
        let dim = self.dim(tau, k)?;
        let d_prev = if k > 0 { Some(self.differential(tau, k - 1)?) } else { None };
        let d_here = self.differential(tau, k)?;
        let co = self.coinvariant_subspace(tau, k)?;
        let rank_d_prev = d_prev.as_ref().map_or(0, |m| rank(f, m));
        let mut ok = true;
        let mut spectrum_ok = true;
        let mut harm_co = true;
        let mut del_ranks = [0usize; 2];
        let mut del_next = [0usize; 2];
        let mut harm = [0usize; 2];
        for (s, sign) in BOTH.into_iter().enumerate() {
            let del_here = self.codifferential(tau, sign, k)?;
            let del_n = self.codifferential(tau, sign, k + 1)?;
            let lap = self.laplacian(tau, sign, k)?;
            let h = kernel(f, &lap);
            del_ranks[s] = if del_here.rows == 0 { 0 } else { rank(f, &del_here) };
            del_next[s] = if del_n.cols == 0 { 0 } else { rank(f, &del_n) };
            harm[s] = h.cols;
            let empty = zeros(f, dim, 0);
            let dp = d_prev.as_ref().unwrap_or(&empty);
            let dn = if del_n.cols == 0 { &empty } else { &del_n };
            let stack = stacked_rank(f, dim, &[dp, dn, &h]);
            ok &= rank_d_prev + del_next[s] + h.cols == dim && stack == dim;
            harm_co &= same_span(f, dim, &h, &co);
            spectrum_ok &= self.spectrum_crosscheck(tau, sign, k)?.ok;
        }
        Ok(HodgeRow {
            degree: k,
            dim,
            rank_d: if d_here.rows == 0 { 0 } else { rank(f, &d_here) },
            rank_del_plus: del_ranks[0],
            rank_del_minus: del_ranks[1],
            dim_harmonic_plus: harm[0],
            dim_harmonic_minus: harm[1],
            dim_coinvariant: co.cols,
            hodge_ok: ok,
            spectrum_ok,
            rank_d_prev,
            rank_del_next_plus: del_next[0],
            rank_del_next_minus: del_next[1],
            harmonic_is_coinvariant: harm_co,
        })
    }
}

/// One predicted eigenvalue of Δ on a left-coinvariant level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenBlock {
    pub value: String,
    pub partitions: Vec<String>,
    pub expected_multiplicity: i64,
    pub observed_multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub degree: usize,
    pub blocks: Vec<EigenBlock>,
    /// Π (Δ − (−1)^k E_μ) = 0.
    pub annihilates: bool,
    pub ok: bool,
}

impl<F: Field> Calculi<F> {
    /// Predicted eigenvalues (−1)^k E_μ of Δ^± on Λ^k of Γ_τ: E^τ_μ for ∂⁺ and
    /// E^{−τ}_μ for ∂⁻, μ running over the character-ring blocks of degree k.
    pub fn predicted_eigenvalues(&self, tau: Tau, sign: Sign, k: usize) -> Result<Vec<(F::Elem, Vec<String>, i64)>, ComplexError> {
        let f = &self.f;
        let b = charring::blocks(self.n, k).map_err(|e| ComplexError::Field(crate::field::FieldError::Shape(e.to_string())))?;
        let which = if sign == Sign::Plus { tau } else { tau.flip() };
        let mut out: Vec<(F::Elem, Vec<String>, i64)> = Vec::new();
        for (mu, mult) in &b.decomposition.parts {
            let mut e = f.from_laurent(&eigen_a_poly(mu, which));
            if k % 2 == 1 {
                e = f.neg(&e);
            }
            let dim = mult * charring::weyl_dim(mu);
            match out.iter_mut().find(|x| f.is_zero(&f.sub(&x.0, &e))) {
                Some(x) => {
                    x.1.push(mu.to_string());
                    x.2 += dim;
                }
                None => out.push((e, vec![mu.to_string()], dim)),
            }
        }
        Ok(out)
    }

    pub fn spectrum_crosscheck(&self, tau: Tau, sign: Sign, k: usize) -> Result<SpectrumReport, ComplexError> {
        let f = &self.f;
        let lap = self.laplacian(tau, sign, k)?;
        let dim = lap.rows;
        let id = identity(f, dim);
        let mut prod = id.clone();
        let mut blocks = Vec::new();
        let mut mult_ok = true;
        for (e, parts, m) in self.predicted_eigenvalues(tau, sign, k)? {
            let shifted = mat_sub(f, &lap, &mat_scale(f, &id, &e));
            prod = mat_mul(f, &prod, &shifted);
            let obs = dim - if dim == 0 { 0 } else { rank(f, &shifted) };
            mult_ok &= obs as i64 == m;
            blocks.push(EigenBlock { value: f.render(&e), partitions: parts, expected_multiplicity: m, observed_multiplicity: obs });
        }
        let annihilates = is_zero_matrix(f, &prod);
        Ok(SpectrumReport { degree: k, blocks, annihilates, ok: annihilates && mult_ok })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub degree: usize,
    /// ⟨dρ, ζ⟩^± = ⟨ρ, ∂^±ζ⟩^± for all basis ρ ∈ Λ^k_τ, ζ ∈ Λ^{k+1}_{−τ}.
    pub adjoint_ok: bool,
    pub pairing_rank: usize,
    pub dim: usize,
    pub nondegenerate: bool,
}

impl<F: Field> Calculi<F> {
    /// G[a][b] = ⟨ρ_a, ζ_b⟩^± between level k of Γ_τ and level k of Γ_{−τ}.
    pub fn pairing_matrix(&self, tau: Tau, sign: Sign, k: usize) -> Result<Matrix<F::Elem>, ComplexError> {
        let f = &self.f;
        let (la, lb) = (self.tower(tau).level(k)?, self.tower(tau.flip()).level(k)?);
        let mut g = zeros(f, la.dim, lb.dim);
        for (a, &ra) in la.reps.iter().enumerate() {
            let x = unit(f, la.ambient, ra);
            for (b, &rb) in lb.reps.iter().enumerate() {
                let (_, _, s) = self.contract(sign, tau, k, &x, k, &unit(f, lb.ambient, rb))?;
                g.set(a, b, s[0].clone());
            }
        }
        Ok(g)
    }

    pub fn duality_check(&self, tau: Tau, sign: Sign, k: usize) -> Result<DualityReport, ComplexError> {
        let f = &self.f;
        let gk = self.pairing_matrix(tau, sign, k)?;
        let gk1 = self.pairing_matrix(tau, sign, k + 1)?;
        let d = self.differential(tau, k)?;
        let p = self.codifferential(tau.flip(), sign, k + 1)?;
        let lhs = mat_mul(f, &d.transpose(), &gk1);
        let rhs = if p.rows == 0 { zeros(f, gk.rows, gk1.cols) } else { mat_mul(f, &gk, &p) };
        let dim = gk.rows;
        let pairing_rank = if dim == 0 { 0 } else { rank(f, &gk) };
        Ok(DualityReport { degree: k, adjoint_ok: mat_eq(f, &lhs, &rhs), pairing_rank, dim, nondegenerate: pairing_rank == dim && gk.cols == dim })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakIsoReport {
    pub invertible: bool,
    /// (Φ⊗Φ)σ₊ = σ₋(Φ⊗Φ).
    pub intertwines: bool,
    /// Φ(ω₀⁺) = c·ω₀⁻.
    pub omega0_scalar: Option<String>,
    /// Φ₂ d₊ = c·d₋ Φ₁ on degree 1.
    pub d_compatible: bool,
    pub ok: bool,
}

impl<F: Field> Calculi<F> {
    /// Φ[(i′,j′)][(b,c)] = 𝔯 (R̂⁻¹)^{jc}_{ib} d_i d_b⁻¹ with k′ = N+1−k and 𝔯 = q^N:
    /// the coinvariant-basis map Γ₊ → Γ₋ dual to the tangent-space transform.
    pub fn weak_isomorphism_matrix(&self) -> Result<Matrix<F::Elem>, ComplexError> {
        let f = &self.f;
        let n = self.n;
        let r = f.pow(&f.q(), n as i64)?;
        let mut phi = zeros(f, self.d, self.d);
        for i in 0..n {
            for j in 0..n {
                let (ip, jp) = (n - 1 - i, n - 1 - j);
                for b in 0..n {
                    for c in 0..n {
                        let x = self.frt.rhat.rinv(j, c, i, b);
                        if f.is_zero(x) {
                            continue;
                        }
                        let v = f.mul(&f.mul(&r, x), &f.div(&self.dd[i], &self.dd[b])?);
                        phi.set(ip * n + jp, b * n + c, v);
                    }
                }
            }
        }
        Ok(phi)
    }

    pub fn weak_isomorphism_check(&self) -> Result<WeakIsoReport, ComplexError> {
        let f = &self.f;
        let phi = self.weak_isomorphism_matrix()?;
        let invertible = inverse(f, &phi).is_ok();
        let pp = kron(f, &phi, &phi);
        let intertwines = mat_eq(
            f,
            &mat_mul(f, &pp, &self.braid[0][0].mat),
            &mat_mul(f, &self.braid[1][1].mat, &pp),
        );
        let img = crate::field::linalg::mat_vec(f, &phi, &self.omega0[0]);
        let target = &self.omega0[1];
        let pos = target.iter().position(|x| !f.is_zero(x)).expect("ω₀ is nonzero");
        let c = f.div(&img[pos], &target[pos])?;
        let scalar_ok = vec_eq(f, &img, &vec_scale(f, target, &c));
        let omega0_scalar = scalar_ok.then(|| f.render(&c));
        let mut d_compatible = false;
        if scalar_ok && self.tower(Tau::Plus).levels.len() > 2 && self.tower(Tau::Minus).levels.len() > 2 {
            let op = LocalOp::new(f, self.d, self.d, pp.clone());
            let lp = self.tower(Tau::Plus).level(2)?;
            let phi2_cols: Result<Vec<Vec<F::Elem>>, ComplexError> = lp
                .reps
                .iter()
                .map(|&r| {
                    let v = apply_local(f, &op, 2, 0, &unit(f, lp.ambient, r));
                    self.project(Tau::Minus, 2, &v)
                })
                .collect();
            let phi2 = Matrix::from_cols(self.dim(Tau::Minus, 2)?, &phi2_cols?, f.zero());
            let lhs = mat_mul(f, &phi2, &self.differential(Tau::Plus, 1)?);
            let rhs = mat_scale(f, &mat_mul(f, &self.differential(Tau::Minus, 1)?, &phi), &c);
            d_compatible = mat_eq(f, &lhs, &rhs);
        }
        let ok = invertible && intertwines && omega0_scalar.is_some() && d_compatible;
        Ok(WeakIsoReport { invertible, intertwines, omega0_scalar, d_compatible, ok })
    }
}
