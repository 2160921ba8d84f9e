//! Polynomial gcd over ℤ in one or two variables (primitive PRS).
//!
//! Bivariate polynomials are handled recursively: as polynomials in the
//! first variable with coefficients in ℤ[second variable].

use super::poly::{Exp, Poly, NVARS};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over ℤ, index = degree.
pub type UPoly = Vec<BigInt>;

fn utrim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn uis_zero(a: &UPoly) -> bool {
    a.is_empty()
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    utrim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    utrim(out)
}

fn ucontent(a: &UPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn uscale_div(a: &UPoly, k: &BigInt) -> UPoly {
    a.iter().map(|c| c / k).collect()
}

fn uprimitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = ucontent(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    uscale_div(a, &c)
}

/// Exact division of univariate integer polynomials (panics if inexact).
fn udiv_exact(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    if r.len() < b.len() {
        assert!(r.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        let s = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[s + j] -= &c * bj;
        }
        q[s] = c;
        r = utrim(r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    utrim(q)
}

fn uprem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let s = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[s + j] -= &lr * bj;
        }
        r = utrim(r);
    }
    r
}

/// Gcd in ℤ[x] with positive leading coefficient.
pub fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    if uis_zero(a) {
        return uprimitive_with_content(b);
    }
    if uis_zero(b) {
        return uprimitive_with_content(a);
    }
    let c = ucontent(a).gcd(&ucontent(b));
    let (mut x, mut y) = (uprimitive(a), uprimitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = uprem(&x, &y);
        x = y;
        if r.is_empty() {
            return x.iter().map(|v| v * &c).collect();
        }
        y = uprimitive(&r);
    }
    // y is a nonzero constant: the primitive gcd is 1.
    vec![c]
}

fn uprimitive_with_content(a: &UPoly) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        a.iter().map(|c| -c).collect()
    } else {
        a.clone()
    }
}

/// Bivariate: index = degree in variable 0, coefficient in ℤ[variable 1].
type BPoly = Vec<UPoly>;

fn btrim(mut a: BPoly) -> BPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn bcontent(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = ugcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bprimitive(a: &BPoly) -> BPoly {
    let c = bcontent(a);
    let mut out: BPoly = a.iter().map(|x| if x.is_empty() { Vec::new() } else { udiv_exact(x, &c) }).collect();
    if out.last().and_then(|l| l.last()).is_some_and(|v| v.is_negative()) {
        for x in out.iter_mut() {
            for v in x.iter_mut() {
                *v = -v.clone();
            }
        }
    }
    out
}

fn bprem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let s = dr - db;
        for c in r.iter_mut() {
            *c = umul(c, lb);
        }
        for (j, bj) in b.iter().enumerate() {
            let t = umul(&lr, bj);
            r[s + j] = usub(&r[s + j], &t);
        }
        r = btrim(r);
    }
    r
}

fn bgcd(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let c = ugcd(&bcontent(a), &bcontent(b));
    let (mut x, mut y) = (bprimitive(a), bprimitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if y.len() == 1 {
            break vec![vec![BigInt::one()]];
        }
        let r = bprem(&x, &y);
        x = y;
        if r.is_empty() {
            break x;
        }
        y = bprimitive(&r);
    };
    g.iter().map(|u| umul(u, &c)).collect()
}

fn to_bpoly(p: &Poly) -> BPoly {
    let mx = p.max_exp();
    let mut out: BPoly = vec![Vec::new(); mx[0] as usize + 1];
    for (e, c) in p.terms() {
        let row = &mut out[e[0] as usize];
        let j = e[1] as usize;
        if row.len() <= j {
            row.resize(j + 1, BigInt::zero());
        }
        row[j] += c;
    }
    btrim(out.into_iter().map(utrim).collect())
}

fn from_bpoly(b: &BPoly) -> Poly {
    let mut terms = Vec::new();
    for (i, row) in b.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                let mut e: Exp = [0; NVARS];
                e[0] = i as i32;
                e[1] = j as i32;
                terms.push((e, c.clone()));
            }
        }
    }
    Poly::from_terms(terms)
}

/// Gcd of two polynomials after stripping monomial factors; the result has
/// non-negative exponents, no monomial factor and a positive leading
/// coefficient.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let strip = |p: &Poly| {
        let m = p.min_exp();
        p.shift(&[-m[0], -m[1]])
    };
    let (a, b) = (strip(a), strip(b));
    let g = from_bpoly(&bgcd(&to_bpoly(&a), &to_bpoly(&b)));
    let g = strip(&g);
    if g.leading_sign() < 0 {
        g.neg()
    } else {
        g
    }
}

/// `x^n - 1` divided by all cyclotomic factors of proper divisors of `n`.
pub fn cyclotomic(n: u32) -> UPoly {
    let mut p: UPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            p = udiv_exact(&p, &cyclotomic(d));
        }
    }
    p
}

/// Remainder of `a` modulo a monic integer polynomial `m`.
pub fn urem_monic(a: &UPoly, m: &UPoly) -> UPoly {
    let dm = m.len() - 1;
    let mut r = utrim(a.clone());
    while r.len() > dm {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let s = dr - dm;
        for (j, mj) in m.iter().enumerate() {
            r[s + j] -= &lr * mj;
        }
        r = utrim(r);
    }
    r
}
