//! Canonical rational functions `num/den` over ℚ in up to two generators.
//!
//! Normal form: `num` is a Laurent polynomial over ℤ, `den` an ordinary
//! polynomial over ℤ with no monomial factor and a positive leading
//! coefficient, `gcd(num, den) = 1` and the integer content of the pair is 1.
//! Laurent units are therefore always carried by the numerator.

use super::gcd::poly_gcd;
use super::poly::{Poly, NVARS};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_poly(Poly::from_i64(c))
    }

    /// A Laurent polynomial is already in normal form.
    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn var_pow(var: usize, k: i32) -> Self {
        Self::from_poly(Poly::var_pow(var, k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Rough size used for pivot selection.
    pub fn weight(&self) -> usize {
        self.num.len() + self.den.len() - 1
    }

    /// Builds the canonical form of `num/den`; panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let m = den.min_exp();
        let neg_m = [-m[0], -m[1]];
        let den = den.shift(&neg_m);
        let num = num.shift(&neg_m);
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let nm = num.min_exp();
            let np = num.shift(&[-nm[0], -nm[1]]);
            let g = poly_gcd(&np, &den);
            if g.is_constant() {
                (num, den)
            } else {
                let np = np.div_exact(&g).expect("gcd divides numerator");
                let d = den.div_exact(&g).expect("gcd divides denominator");
                (np.shift(&nm), d)
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading_sign() < 0 {
            c = -c;
        }
        if c.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.div_scalar_exact(&c), den: den.div_scalar_exact(&c) }
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.add(&o.num), den: Poly::one() };
        }
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: Poly::one() };
        }
        // A monomial factor with unit coefficient cannot create new common factors.
        if o.num.is_monomial() && o.den.is_one() && o.num.terms()[0].1.abs().is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: self.den.clone() };
        }
        if self.num.is_monomial() && self.den.is_one() && self.num.terms()[0].1.abs().is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: o.den.clone() };
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Option<RatFunc> {
        Some(self.mul(&o.inv()?))
    }

    /// Image modulo `p`; `None` if the denominator vanishes there.
    pub fn eval_mod(&self, p: u64, vals: [u64; NVARS], invs: [u64; NVARS]) -> Option<u64> {
        let n = self.num.eval_mod(p, vals, invs);
        let d = self.den.eval_mod(p, vals, invs);
        if d == 0 {
            return None;
        }
        Some(super::poly::mul_mod(n, super::prime::inv_mod(d, p), p))
    }

    /// Exact rational image; `None` at a pole.
    pub fn eval_rational(&self, vals: &[num_rational::BigRational; NVARS]) -> Option<num_rational::BigRational> {
        let ev = |p: &Poly| -> Option<num_rational::BigRational> {
            let mut acc = num_rational::BigRational::zero();
            for (e, c) in p.terms() {
                let mut t = num_rational::BigRational::from_integer(c.clone());
                for v in 0..NVARS {
                    if e[v] != 0 {
                        if vals[v].is_zero() {
                            return None;
                        }
                        t *= num_traits::pow::Pow::pow(&vals[v], e[v]);
                    }
                }
                acc += t;
            }
            Some(acc)
        };
        let n = ev(&self.num)?;
        let d = ev(&self.den)?;
        if d.is_zero() {
            return None;
        }
        Some(n / d)
    }

    /// Canonical text form: `num` alone when the denominator is 1, else `(num)/(den)`.
    pub fn render(&self, names: &[&str; NVARS]) -> String {
        if self.den.is_one() {
            self.num.render(names)
        } else {
            format!("({})/({})", self.num.render(names), self.den.render(names))
        }
    }

    /// Applies an exponent substitution to numerator and denominator.
    pub fn remap(&self, f: impl Fn(&super::poly::Exp) -> super::poly::Exp + Copy) -> RatFunc {
        RatFunc::new(self.num.remap(f), self.den.remap(f))
    }

    pub fn from_bigint(c: BigInt) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::var_pow(0, 1)
    }

    #[test]
    fn q_number_two() {
        let num = RatFunc::var_pow(0, 2).sub(&RatFunc::var_pow(0, -2));
        let den = q().sub(&RatFunc::var_pow(0, -1));
        let r = num.div(&den).unwrap();
        assert_eq!(r, q().add(&RatFunc::var_pow(0, -1)));
        assert!(r.is_laurent());
    }

    #[test]
    fn fractions_reduce() {
        let a = RatFunc::one().div(&q().add(&RatFunc::one())).unwrap();
        let b = RatFunc::one().div(&q().sub(&RatFunc::one())).unwrap();
        let s = a.add(&b); // 2q/(q^2-1)
        let want = RatFunc::new(Poly::var_pow(0, 1).scale(&BigInt::from(2)), Poly::var_pow(0, 2).sub(&Poly::one()));
        assert_eq!(s, want);
        assert_eq!(s.mul(&RatFunc::from_poly(Poly::var_pow(0, 2).sub(&Poly::one()))), q().add(&q()));
    }

    #[test]
    fn rational_constants() {
        let h = RatFunc::one().div(&RatFunc::from_i64(-2)).unwrap();
        assert_eq!(h.render(&["q", "z"]), "(-1)/(2)");
        assert_eq!(h.add(&h), RatFunc::from_i64(-1));
    }
}
