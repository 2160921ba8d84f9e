//! Character arithmetic for rational GL(N) representations.
//!
//! A [`SymLaurent`] is a symmetric Laurent polynomial in x₁…x_N stored on
//! orbit representatives (exponent vectors sorted in decreasing order).

use crate::partition::GenPartition;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("negative multiplicity {mult} for {weight:?}: not a character")]
    NotACharacter { weight: Vec<i32>, mult: i64 },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("degree must be non-negative")]
    NegativeDegree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymLaurent {
    n: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

/// Isotypic decomposition: distinct highest weights with positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorepDecomp {
    pub parts: Vec<(GenPartition, i64)>,
}

impl CorepDecomp {
    pub fn multiplicity(&self, l: &GenPartition) -> i64 {
        self.parts.iter().find(|(p, _)| p == l).map_or(0, |x| x.1)
    }

    pub fn dim(&self) -> i64 {
        self.parts.iter().map(|(l, m)| m * weyl_dim(l)).sum()
    }
}

fn distinct_perms(v: &[i32]) -> Vec<Vec<i32>> {
    let mut s = v.to_vec();
    s.sort();
    let mut out = vec![s.clone()];
    while next_permutation(&mut s) {
        out.push(s.clone());
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn sorted_desc(v: &[i32]) -> Vec<i32> {
    let mut s = v.to_vec();
    s.sort_by(|a, b| b.cmp(a));
    s
}

impl SymLaurent {
    pub fn zero(n: usize) -> Self {
        SymLaurent { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial_orbit(n, vec![0; n], 1)
    }

    /// c · m_α where m_α is the orbit sum of x^α.
    pub fn monomial_orbit(n: usize, alpha: Vec<i32>, c: i64) -> Self {
        let mut s = Self::zero(n);
        if c != 0 {
            s.terms.insert(sorted_desc(&alpha), c);
        }
        s
    }

    /// From a full monomial expansion; fails if it is not symmetric.
    pub fn from_full(n: usize, full: &BTreeMap<Vec<i32>, i64>) -> Result<Self, CharError> {
        let mut s = Self::zero(n);
        for (e, &c) in full {
            if c == 0 {
                continue;
            }
            let rep = sorted_desc(e);
            match full.get(&rep) {
                Some(&d) if d == c => {}
                _ => return Err(CharError::NotSymmetric),
            }
            if rep == *e {
                s.terms.insert(rep, c);
            }
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orbit_terms(&self) -> &BTreeMap<Vec<i32>, i64> {
        &self.terms
    }

    pub fn to_full(&self) -> BTreeMap<Vec<i32>, i64> {
        let mut out = BTreeMap::new();
        for (rep, &c) in &self.terms {
            for p in distinct_perms(rep) {
                out.insert(p, c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }

    fn combine(&self, o: &Self, sign: i64) -> Self {
        let mut t = self.terms.clone();
        for (e, &c) in &o.terms {
            let v = t.entry(e.clone()).or_insert(0);
            *v += sign * c;
            if *v == 0 {
                t.remove(e);
            }
        }
        SymLaurent { n: self.n, terms: t }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.n);
        }
        SymLaurent { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    /// Exact division of every coefficient by `k`.
    pub fn div_exact(&self, k: i64) -> Self {
        SymLaurent {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert_eq!(c % k, 0, "inexact character division");
                    (e.clone(), c / k)
                })
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = self.to_full();
        let mut t: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        // The product is symmetric, so only dominant exponents are recorded.
        let b = o.to_full();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let s: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if s.windows(2).all(|w| w[0] >= w[1]) {
                    *t.entry(s).or_insert(0) += ca * cb;
                }
            }
        }
        t.retain(|_, c| *c != 0);
        SymLaurent { n: self.n, terms: t }
    }

    /// Adams operation ψ^j: x_i ↦ x_i^j (j ≥ 1).
    pub fn adams(&self, j: i32) -> Self {
        SymLaurent {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| x * j).collect(), *c)).collect(),
        }
    }

    /// Value at x = (1,…,1).
    pub fn dim(&self) -> i64 {
        self.terms.iter().map(|(e, c)| c * distinct_perms(e).len() as i64).sum()
    }

    /// Multiplies by (x₁⋯x_N)^k.
    pub fn det_shift(&self, k: i32) -> Self {
        SymLaurent {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| x + k).collect(), *c)).collect(),
        }
    }
}

/// (Σ x_i)(Σ x_j⁻¹), the character of u ⊗ u^c ≅ 1 ⊕ ad.
pub fn ad_character(n: usize) -> SymLaurent {
    let mut v = vec![0; n];
    v[0] = 1;
    let u = SymLaurent::monomial_orbit(n, v.clone(), 1);
    v[0] = 0;
    v[n - 1] = -1;
    let uc = SymLaurent::monomial_orbit(n, v, 1);
    u.mul(&uc)
}

/// Character of the k-th exterior power, by Newton's identity in Adams operations.
pub fn exterior_power(chi: &SymLaurent, k: i64) -> Result<SymLaurent, CharError> {
    if k < 0 {
        return Err(CharError::NegativeDegree);
    }
    let n = chi.n();
    let mut e = vec![SymLaurent::one(n)];
    let psi: Vec<SymLaurent> = (1..=k).map(|j| chi.adams(j as i32)).collect();
    for m in 1..=k as usize {
        let mut acc = SymLaurent::zero(n);
        for j in 1..=m {
            let t = psi[j - 1].mul(&e[m - j]);
            acc = if j % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        e.push(acc.div_exact(m as i64));
    }
    Ok(e.pop().expect("nonempty"))
}

/// Expansion into irreducible characters s_λ via the Weyl bialternant:
/// the coefficient of s_λ is the coefficient of x^{λ+δ} in χ · a_δ.
pub fn schur_expand(chi: &SymLaurent) -> Result<CorepDecomp, CharError> {
    let n = chi.n();
    let delta: Vec<i32> = (0..n as i32).rev().collect();
    let full = chi.to_full();
    let mut acc: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut perms = Vec::new();
    loop {
        perms.push(perm.clone());
        if !next_perm_usize(&mut perm) {
            break;
        }
    }
    for p in &perms {
        let sign = perm_sign(p);
        for (e, c) in &full {
            let s: Vec<i32> = (0..n).map(|i| e[i] + delta[p[i]]).collect();
            if s.windows(2).all(|w| w[0] > w[1]) {
                *acc.entry(s).or_insert(0) += sign * c;
            }
        }
    }
    let mut parts = Vec::new();
    for (s, m) in acc.into_iter().rev() {
        if m == 0 {
            continue;
        }
        let l: Vec<i32> = s.iter().zip(&delta).map(|(a, d)| a - d).collect();
        if m < 0 {
            return Err(CharError::NotACharacter { weight: l, mult: m });
        }
        parts.push((GenPartition::new(l).expect("strictly decreasing minus δ"), m));
    }
    Ok(CorepDecomp { parts })
}

fn next_perm_usize(v: &mut [usize]) -> bool {
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Weyl dimension formula.
pub fn weyl_dim(l: &GenPartition) -> i64 {
    let p = l.parts();
    let n = p.len();
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..n {
        for j in i + 1..n {
            num *= (p[i] - p[j] + (j - i) as i32) as i128;
            den *= (j - i) as i128;
        }
    }
    (num / den) as i64
}

/// Coefficients of Π_{i=1}^{N} (1 + t^{2i−1}), degrees 0..=N².
pub fn poincare_product(n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n * n + 1];
    c[0] = 1;
    for i in 1..=n {
        let d = 2 * i - 1;
        for k in (d..c.len()).rev() {
            c[k] += c[k - d];
        }
    }
    c
}

/// Block structure of degree k of the left-coinvariant complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Blocks {
    pub degree: usize,
    pub decomposition: CorepDecomp,
    pub dim: i64,
    pub trivial_multiplicity: i64,
}

/// Decomposition of Λ^k(1 ⊕ ad).
pub fn blocks(n: usize, k: usize) -> Result<Blocks, CharError> {
    let chi = exterior_power(&ad_character(n), k as i64)?;
    let decomposition = schur_expand(&chi)?;
    let trivial_multiplicity = decomposition.multiplicity(&GenPartition::zero(n));
    Ok(Blocks { degree: k, dim: chi.dim(), decomposition, trivial_multiplicity })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i32]) -> GenPartition {
        GenPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ad_n2() {
        let a = ad_character(2);
        let want = SymLaurent::monomial_orbit(2, vec![1, -1], 1).add(&SymLaurent::one(2).scale(2));
        assert_eq!(a, want);
        assert_eq!(a.dim(), 4);
        let d = schur_expand(&a).unwrap();
        assert_eq!(d.parts, vec![(p(&[1, -1]), 1), (p(&[0, 0]), 1)]);
    }

    #[test]
    fn exterior_small() {
        let a = ad_character(2);
        assert_eq!(exterior_power(&a, 0).unwrap(), SymLaurent::one(2));
        assert_eq!(exterior_power(&a, 1).unwrap(), a);
        let b2 = blocks(2, 2).unwrap();
        assert_eq!(b2.decomposition.parts, vec![(p(&[1, -1]), 2)]);
        assert_eq!(b2.dim, 6);
        let b3 = blocks(2, 3).unwrap();
        assert_eq!(b3.decomposition.parts, vec![(p(&[1, -1]), 1), (p(&[0, 0]), 1)]);
    }

    #[test]
    fn poincare() {
        assert_eq!(poincare_product(2), vec![1, 1, 0, 1, 1]);
        assert_eq!(poincare_product(3), vec![1, 1, 0, 1, 1, 1, 1, 0, 1, 1]);
    }

    #[test]
    fn dims() {
        assert_eq!(weyl_dim(&p(&[1, 0, -1])), 8);
        assert_eq!(weyl_dim(&p(&[2, -1, -1])), 10);
    }
}
