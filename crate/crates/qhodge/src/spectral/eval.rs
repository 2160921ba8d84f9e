//! Evaluation of Laurent polynomials in (q, z) under a choice of the parameter z.

use super::SpectralError;
use crate::field::gcd::{cyclotomic, urem_monic, UPoly};
use crate::field::{Poly, RatFunc};
use crate::partition::{Family, GroupSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// How the calculus parameter z is fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZSpec {
    /// An independent transcendental symbol (GL), or the forced relation z^N = q² (SL).
    Symbolic,
    /// A fixed nonzero rational value.
    Value(BigRational),
    /// z^N q⁻² = ζ for a primitive m-th root of unity ζ (GL only).
    RootOfUnity(u32),
}

impl std::str::FromStr for ZSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "symbolic" {
            return Ok(ZSpec::Symbolic);
        }
        if let Some(m) = s.strip_prefix("root-of-unity:") {
            let m: u32 = m.parse().map_err(|e| format!("bad root-of-unity order: {e}"))?;
            if m == 0 {
                return Err("root-of-unity order must be positive".into());
            }
            return Ok(ZSpec::RootOfUnity(m));
        }
        let r: BigRational = s.parse().map_err(|_| format!("unknown z '{s}'"))?;
        if r.is_zero() {
            return Err("z must be nonzero".into());
        }
        Ok(ZSpec::Value(r))
    }
}

/// A ring homomorphism from ℤ[q^±, z^±] into a field where equality is decidable.
///
/// Results are canonical [`RatFunc`]s whose variable names are given by [`Evaluator::names`]:
/// (q, z) for GL, (q, ·) when z is a number, (w, ·) for SL with q = w^N, z = w², and
/// (w, η) for the root-of-unity case, where q = w^N, z = w²η^s with η a primitive
/// (mN)-th root of unity reduced modulo its cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluator {
    Gl,
    At(BigRational),
    Sl { n: u32 },
    Cyclotomic { n: u32, m: u32, s: u32, phi: UPoly },
}

impl Evaluator {
    pub fn for_params(group: &GroupSpec, z: &ZSpec) -> Result<Self, SpectralError> {
        match (group.family, z) {
            (Family::Sl, ZSpec::Symbolic) => Ok(Evaluator::Sl { n: group.n as u32 }),
            (Family::Sl, _) => Err(SpectralError::Params("for SL the parameter z is fixed by z^N = q^2".into())),
            (Family::Gl, ZSpec::Symbolic) => Ok(Evaluator::Gl),
            (Family::Gl, ZSpec::Value(v)) => Ok(Evaluator::At(v.clone())),
            (Family::Gl, ZSpec::RootOfUnity(m)) => Ok(Self::root_of_unity(group.n as u32, *m, 0)),
            (_, ZSpec::Value(v)) if v.abs().is_one() => Ok(Evaluator::At(v.clone())),
            _ => Err(SpectralError::Params("B, C, D series require z = 1 or z = -1".into())),
        }
    }

    /// The `j`-th of the N choices z = w²η^{1+mj} solving z^N q⁻² = η^N.
    pub fn root_of_unity(n: u32, m: u32, j: u32) -> Self {
        Evaluator::Cyclotomic { n, m, s: 1 + m * j, phi: cyclotomic(m * n) }
    }

    pub fn names(&self) -> [&'static str; 2] {
        match self {
            Evaluator::Gl => ["q", "z"],
            Evaluator::At(_) => ["q", "_"],
            Evaluator::Sl { .. } => ["w", "_"],
            Evaluator::Cyclotomic { .. } => ["w", "eta"],
        }
    }

    pub fn eval(&self, p: &Poly) -> RatFunc {
        match self {
            Evaluator::Gl => RatFunc::from_poly(p.clone()),
            Evaluator::Sl { n } => RatFunc::from_poly(p.remap(|e| [*n as i32 * e[0] + 2 * e[1], 0])),
            Evaluator::At(v) => {
                // Collect by power of z, then scale by v^b.
                let mut by_b: BTreeMap<i32, Vec<([i32; 2], BigInt)>> = BTreeMap::new();
                for (e, c) in p.terms() {
                    by_b.entry(e[1]).or_default().push(([e[0], 0], c.clone()));
                }
                let mut acc = RatFunc::zero();
                for (b, ts) in by_b {
                    let vb = pow_rational(v, b);
                    let part = Poly::from_terms(ts).scale(vb.numer());
                    acc = acc.add(&RatFunc::new(part, Poly::constant(vb.denom().clone())));
                }
                acc
            }
            Evaluator::Cyclotomic { n, m, s, phi } => {
                let order = (m * n) as i64;
                let mut by_w: BTreeMap<i32, UPoly> = BTreeMap::new();
                for (e, c) in p.terms() {
                    let w = *n as i32 * e[0] + 2 * e[1];
                    let k = (*s as i64 * e[1] as i64).rem_euclid(order) as usize;
                    let v = by_w.entry(w).or_insert_with(|| vec![BigInt::zero(); order as usize]);
                    v[k] += c;
                }
                let mut terms = Vec::new();
                for (w, v) in by_w {
                    for (k, c) in urem_monic(&v, phi).into_iter().enumerate() {
                        if !c.is_zero() {
                            terms.push(([w, k as i32], c));
                        }
                    }
                }
                RatFunc::from_poly(Poly::from_terms(terms))
            }
        }
    }

    pub fn render(&self, x: &RatFunc) -> String {
        x.render(&self.names())
    }
}

fn pow_rational(v: &BigRational, b: i32) -> BigRational {
    let base = if b < 0 { v.recip() } else { v.clone() };
    num_traits::pow(base, b.unsigned_abs() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_relation() {
        let ev = Evaluator::Sl { n: 2 };
        let z_minus_q = Poly::var_pow(1, 1).sub(&Poly::var_pow(0, 1));
        assert!(ev.eval(&z_minus_q).is_zero());
    }

    #[test]
    fn root_of_unity_relation() {
        // z^N q^-2 - η^N must vanish; with N = 2, m = 2 this means z²q⁻² = −1.
        let ev = Evaluator::root_of_unity(2, 2, 0);
        let p = Poly::var_pow(1, 2).shift(&[-2, 0]).add(&Poly::one());
        assert!(ev.eval(&p).is_zero());
        let ev1 = Evaluator::root_of_unity(2, 2, 1);
        assert!(ev1.eval(&p).is_zero());
    }

    #[test]
    fn rational_value() {
        let ev = Evaluator::At(BigRational::new(1.into(), 2.into()));
        let p = Poly::var_pow(1, -1).add(&Poly::var_pow(0, 1));
        assert_eq!(ev.render(&ev.eval(&p)), "q + 2");
    }
}
