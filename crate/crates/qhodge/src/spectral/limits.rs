//! Exact t → 1 limits via Taylor expansion of Laurent polynomials.

use super::eigen::eigen_a_poly;
use super::Tau;
use crate::field::Poly;
use crate::partition::GenPartition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

/// Highest Taylor order used; the limits involved need orders ≤ 2.
pub const TAYLOR_ORDER: usize = 2;

/// Taylor coefficients at s = 1 (in powers of s − 1) of Σ c_e s^e, up to `order`.
/// Uses the generalized binomial C(e, k), valid for negative e.
pub fn taylor_at_one(terms: &[(i64, BigInt)], order: usize) -> Vec<BigInt> {
    (0..=order)
        .map(|k| {
            terms.iter().fold(BigInt::zero(), |acc, (e, c)| acc + c * gen_binom(*e, k))
        })
        .collect()
}

fn gen_binom(e: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= e - i;
        den *= i + 1;
    }
    num / den
}

/// lim_{s→1} f(s)/g(s) using Taylor coefficients up to [`TAYLOR_ORDER`].
/// Returns `None` if the limit is not determined at that order.
pub fn limit_ratio(f: &[(i64, BigInt)], g: &[(i64, BigInt)]) -> Option<BigRational> {
    let tf = taylor_at_one(f, TAYLOR_ORDER);
    let tg = taylor_at_one(g, TAYLOR_ORDER);
    let k = tg.iter().position(|c| !c.is_zero())?;
    if tf[..k].iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(BigRational::new(tf[k].clone(), tg[k].clone()))
}

/// Collapses a (q, z) Laurent polynomial to one variable s with q = s^a, z = s^b.
pub fn collapse(p: &Poly, a: i64, b: i64) -> Vec<(i64, BigInt)> {
    p.terms().iter().map(|(e, c)| (a * e[0] as i64 + b * e[1] as i64, c.clone())).collect()
}

fn t_minus_tinv_squared(n: i64) -> Vec<(i64, BigInt)> {
    vec![(2 * n, BigInt::one()), (0, BigInt::from(-2)), (-2 * n, BigInt::one())]
}

/// Ẽ^τ_λ = lim_{t→1} (t−t⁻¹)⁻² e^τ_λ(t, t^{2/N}), computed with t = s^N.
pub fn e_tilde(l: &GenPartition, tau: Tau) -> Option<BigRational> {
    let n = l.len() as i64;
    let f = collapse(&eigen_a_poly(l, tau), n, 2);
    limit_ratio(&f, &t_minus_tinv_squared(n))
}

/// (mN² + 2c(λ)N − m²) / (2N) with m = |λ|.
pub fn e_tilde_closed_form(l: &GenPartition) -> BigRational {
    let n = l.len() as i64;
    let st = l.stats();
    let m = st.size;
    BigRational::new(BigInt::from(m * n * n + 2 * st.content * n - m * m), BigInt::from(2 * n))
}

/// Σ_{i=1}^{N−1} ((N−i) m_i / N)(i(m_i + N) + 2 Σ_{j<i} j m_j), m_i = λ_i − λ_{i+1}.
pub fn lim1_sum(l: &GenPartition) -> BigRational {
    let p = l.parts();
    let n = p.len() as i64;
    let m: Vec<i64> = (0..p.len() - 1).map(|i| (p[i] - p[i + 1]) as i64).collect();
    let mut acc = BigRational::zero();
    for i in 1..n {
        let mi = m[(i - 1) as usize];
        let inner: i64 = i * (mi + n) + 2 * (1..i).map(|j| j * m[(j - 1) as usize]).sum::<i64>();
        acc += BigRational::new(BigInt::from((n - i) * mi * inner), BigInt::from(n));
    }
    acc
}

/// Outcome of the limit identities for one partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitReport {
    pub lambda: GenPartition,
    pub e_tilde_plus: Option<String>,
    pub e_tilde_minus: Option<String>,
    pub closed_form: String,
    pub lim1_sum: String,
    pub ok: bool,
}

/// Checks Ẽ⁺_λ = Ẽ⁻_λ = closed form, and that the m_i-sum equals 2Ẽ⁺_λ.
pub fn limit_checks(l: &GenPartition) -> LimitReport {
    let plus = e_tilde(l, Tau::Plus);
    let minus = e_tilde(l, Tau::Minus);
    let closed = e_tilde_closed_form(l);
    let sum = lim1_sum(l);
    let two = BigRational::from_integer(2.into());
    let ok = plus.as_ref() == Some(&closed) && minus.as_ref() == Some(&closed) && sum == &closed * &two;
    LimitReport {
        lambda: l.clone(),
        e_tilde_plus: plus.map(|x| x.to_string()),
        e_tilde_minus: minus.map(|x| x.to_string()),
        closed_form: closed.to_string(),
        lim1_sum: sum.to_string(),
        ok,
    }
}

/// lim_{t→1} (t−t⁻¹)⁻¹ (e⁻_λ(t,1) + e⁺_μ(t,1)).
pub fn first_order_limit_at_z_one(l: &GenPartition, mu: &GenPartition) -> Option<BigRational> {
    let e = eigen_a_poly(l, Tau::Minus).add(&eigen_a_poly(mu, Tau::Plus));
    let f = collapse(&e, 1, 0);
    limit_ratio(&f, &[(1, BigInt::one()), (-1, BigInt::from(-1))])
}
