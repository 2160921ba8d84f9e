//! Closed-form eigenvalues as Laurent polynomials in (q, z).

use super::{qnumber_poly, SpectralError, Tau};
use crate::field::Poly;
use crate::partition::{GenPartition, GroupSpec};
use num_bigint::BigInt;

fn q_minus_qinv() -> Poly {
    Poly::var_pow(0, 1).sub(&Poly::var_pow(0, -1))
}

/// Σ_{x∈λ} sgn(x) q^{τ(N+2c(x))}.
fn signed_content_sum(l: &GenPartition, tau: i32) -> Poly {
    let n = l.len() as i32;
    let terms = l.cells().into_iter().map(|c| ([tau * (n + 2 * c.content), 0], BigInt::from(c.sign))).collect();
    Poly::from_terms(terms)
}

/// e^τ_λ(q, z) = z^{−τ|λ|}([N] + τ(q−q⁻¹)Σ_x sgn(x) q^{τ(N+2c(x))}) − [N], for any λ ∈ P_+.
pub fn eigen_a_poly(l: &GenPartition, tau: Tau) -> Poly {
    let t = tau.sign();
    let qn = qnumber_poly(l.len() as i64);
    let inner = qn.add(&q_minus_qinv().mul(&signed_content_sum(l, t)).scale(&BigInt::from(t)));
    inner.shift(&[0, -t * l.size() as i32]).sub(&qn)
}

/// e^τ_λ for an A-series group.
pub fn eigen_a(l: &GenPartition, tau: Tau, group: &GroupSpec) -> Result<Poly, SpectralError> {
    if !group.family.is_a_series() {
        return Err(SpectralError::WrongFamily(format!("{:?} is not of type A", group.family)));
    }
    check_len(l, group)?;
    Ok(eigen_a_poly(l, tau))
}

/// The regularity expression F_{λμ}, coded directly from its defining formula
/// (independently of [`eigen_a_poly`]).
pub fn f_lambda_mu(l: &GenPartition, mu: &GenPartition) -> Poly {
    let n = l.len() as i32;
    let (a, b) = (l.size() as i32, mu.size() as i32);
    let zpow = |k: i32| Poly::var_pow(1, k);
    let coeff = zpow(-b).add(&zpow(a)).sub(&Poly::from_i64(2));
    let mut mu_sum = Poly::zero();
    for c in mu.cells() {
        mu_sum = mu_sum.add(&Poly::monomial([n + 2 * c.content, 0], BigInt::from(c.sign)));
    }
    let mut l_sum = Poly::zero();
    for c in l.cells() {
        l_sum = l_sum.add(&Poly::monomial([-n - 2 * c.content, 0], BigInt::from(c.sign)));
    }
    let bracket = mu_sum.shift(&[0, -b]).sub(&l_sum.shift(&[0, a]));
    coeff.mul(&qnumber_poly(n as i64)).add(&q_minus_qinv().mul(&bracket))
}

/// e_λ(q, z) = ε z^{|λ|}(q−q⁻¹)² Σ_x [N−ε+2c(x)]_q for the B, C, D series.
pub fn eigen_bcd(l: &GenPartition, group: &GroupSpec) -> Result<Poly, SpectralError> {
    if group.family.is_a_series() {
        return Err(SpectralError::WrongFamily(format!("{:?} is not of type B, C or D", group.family)));
    }
    check_len(l, group)?;
    Ok(eigen_bcd_poly(l, group.epsilon()))
}

pub(crate) fn eigen_bcd_poly(l: &GenPartition, eps: i32) -> Poly {
    let n = l.len() as i64;
    let mut s = Poly::zero();
    for c in l.cells() {
        s = s.add(&qnumber_poly(n - eps as i64 + 2 * c.content as i64));
    }
    let qq = q_minus_qinv();
    qq.mul(&qq).mul(&s).shift(&[0, l.size() as i32]).scale(&BigInt::from(eps))
}

fn check_len(l: &GenPartition, group: &GroupSpec) -> Result<(), SpectralError> {
    if l.len() != group.n {
        return Err(SpectralError::Length { expected: group.n, got: l.len() });
    }
    Ok(())
}

/// Verifies e^τ_{λ+(1^N)} + [N] = q^{2τ} z^{−Nτ} (e^τ_λ + [N]) as an identity of Laurent polynomials.
pub fn recursion_check(l: &GenPartition, tau: Tau) -> bool {
    let t = tau.sign();
    let qn = qnumber_poly(l.len() as i64);
    let lhs = eigen_a_poly(&l.shift(1), tau).add(&qn);
    let rhs = eigen_a_poly(l, tau).add(&qn).shift(&[2 * t, -(l.len() as i32) * t]);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i32]) -> GenPartition {
        GenPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_partition_is_zero() {
        for n in 2..5 {
            assert!(eigen_a_poly(&GenPartition::zero(n), Tau::Plus).is_zero());
            assert!(eigen_a_poly(&GenPartition::zero(n), Tau::Minus).is_zero());
        }
    }

    #[test]
    fn bcd_o3_column_vanishes() {
        let g = GroupSpec::from_name("oq", 3).unwrap();
        assert!(eigen_bcd(&p(&[1, 1, 1]), &g).unwrap().is_zero());
        assert!(eigen_a(&p(&[1, 1, 1]), Tau::Plus, &g).is_err());
    }

    #[test]
    fn recursion_small() {
        assert!(recursion_check(&p(&[2, -1]), Tau::Minus));
        assert!(recursion_check(&p(&[0, 0]), Tau::Plus));
    }
}
