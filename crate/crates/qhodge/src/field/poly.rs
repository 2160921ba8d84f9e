//! Sparse Laurent polynomials over ℤ in at most two variables.
//!
//! Terms are kept strictly descending in lexicographic exponent order
//! (variable 0 first), with no zero coefficients, so structural equality is
//! value equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

/// Number of generator slots.
pub const NVARS: usize = 2;

/// Exponent vector; negative entries are allowed (Laurent monomials).
pub type Exp = [i32; NVARS];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Exp, BigInt)>,
}

fn exp_add(a: &Exp, b: &Exp) -> Exp {
    [a[0] + b[0], a[1] + b[1]]
}

fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    [a[0] - b[0], a[1] - b[1]]
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn monomial(e: Exp, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    /// `x_var^power`.
    pub fn var_pow(var: usize, power: i32) -> Self {
        let mut e = [0; NVARS];
        e[var] = power;
        Self::monomial(e, BigInt::one())
    }

    /// Builds a polynomial from arbitrary terms (merging duplicates).
    pub fn from_terms(mut terms: Vec<(Exp, BigInt)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; NVARS] && self.terms[0].1.is_one()
    }

    /// True for a (possibly zero) constant.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == [0; NVARS])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Exp, BigInt)> {
        self.terms.first()
    }

    /// Componentwise minimum exponent (zero vector for the zero polynomial).
    pub fn min_exp(&self) -> Exp {
        let mut it = self.terms.iter();
        let mut m = match it.next() {
            Some((e, _)) => *e,
            None => return [0; NVARS],
        };
        for (e, _) in it {
            for v in 0..NVARS {
                m[v] = m[v].min(e[v]);
            }
        }
        m
    }

    /// Componentwise maximum exponent.
    pub fn max_exp(&self) -> Exp {
        let mut it = self.terms.iter();
        let mut m = match it.next() {
            Some((e, _)) => *e,
            None => return [0; NVARS],
        };
        for (e, _) in it {
            for v in 0..NVARS {
                m[v] = m[v].max(e[v]);
            }
        }
        m
    }

    /// Multiplies by the monomial `x^e` (order is preserved).
    pub fn shift(&self, e: &Exp) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, c)| (exp_add(t, e), c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Divides every coefficient by `k`; panics if a division is inexact.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let (q, r) = c.div_rem(k);
                    assert!(r.is_zero(), "inexact scalar division");
                    (*e, q)
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Poly {
                terms: self.terms.iter().map(|(t, d)| (exp_add(t, e), d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                prod.push((exp_add(ea, eb), ca * cb));
            }
        }
        Poly::from_terms(prod)
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Non-negative gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Sign of the leading coefficient.
    pub fn leading_sign(&self) -> i32 {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }

    /// Exact division `self / d` for polynomials with non-negative exponents.
    /// Returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (de, dc) = d.leading()?;
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((re, rc)) = r.leading() {
            let e = exp_sub(re, de);
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            let (c, rem) = rc.div_rem(dc);
            if !rem.is_zero() {
                return None;
            }
            let t = Poly::monomial(e, c.clone());
            r = r.sub(&d.mul(&t));
            q.push((e, c));
        }
        Some(Poly::from_terms(q))
    }

    /// Substitutes `x0 -> x^a0 * y^b0`, `x1 -> x^a1 * y^b1` on exponents.
    pub fn remap(&self, f: impl Fn(&Exp) -> Exp) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect())
    }

    /// Evaluates modulo `p` with the given images of the two generators and
    /// their inverses.
    pub fn eval_mod(&self, p: u64, vals: [u64; NVARS], invs: [u64; NVARS]) -> u64 {
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let mut t = bigint_mod(c, p);
            for v in 0..NVARS {
                let (base, k) = if e[v] >= 0 { (vals[v], e[v] as u64) } else { (invs[v], (-e[v]) as u64) };
                t = mul_mod(t, pow_mod(base, k, p), p);
            }
            acc = add_mod(acc, t, p);
        }
        acc
    }

    /// Renders with the given variable names, descending powers.
    pub fn render(&self, names: &[&str; NVARS]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for v in 0..NVARS {
                match e[v] {
                    0 => {}
                    1 => factors.push(names[v].to_string()),
                    k => factors.push(format!("{}^{}", names[v], k)),
                }
            }
            if factors.is_empty() {
                let _ = write!(s, "{}", abs);
            } else {
                if !abs.is_one() {
                    let _ = write!(s, "{}*", abs);
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

pub(crate) fn bigint_mod(c: &BigInt, p: u64) -> u64 {
    let m = c.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        ((a as u128 + p as u128) - b as u128) as u64
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}
