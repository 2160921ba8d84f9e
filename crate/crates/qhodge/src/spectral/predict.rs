//! Determinant eigen-data and predicted cohomology.

use super::eval::{Evaluator, ZSpec};
use super::{SpectralError, Tau};
use crate::charring;
use crate::field::Poly;
use crate::partition::{Family, GroupSpec};
use serde::Serialize;

/// ω^τ(𝒟) = c · ω₀^τ for the quantum determinant 𝒟.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterminantData {
    pub coefficient: String,
    /// d𝒟 = 0.
    pub closed: bool,
}

/// c = q^{2τ} z^{−τN} − 1 (GL) or z^{−N} − 1 (O); SL has trivial determinant.
pub fn determinant_data(group: &GroupSpec, tau: Tau, z: &ZSpec) -> Result<DeterminantData, SpectralError> {
    let n = group.n as i32;
    let t = tau.sign();
    let coeff = match group.family {
        Family::Sl => return Ok(DeterminantData { coefficient: "0".into(), closed: true }),
        Family::Gl => Poly::monomial([2 * t, -t * n], 1.into()).sub(&Poly::one()),
        Family::OOdd | Family::OEven => Poly::var_pow(1, -n).sub(&Poly::one()),
        _ => return Err(SpectralError::WrongFamily(format!("no determinant datum for {:?}", group.family))),
    };
    let ev = Evaluator::for_params(group, z)?;
    let v = ev.eval(&coeff);
    Ok(DeterminantData { coefficient: ev.render(&v), closed: v.is_zero() })
}

/// Classification of the parameter z for an A-series group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    Regular,
    RootOfUnity { m: u32 },
}

/// Predicted cohomology in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedDegree {
    pub degree: usize,
    pub dim_exterior: i64,
    pub coinvariant_dim: i64,
    pub product_coefficient: i64,
    /// Predicted dim H^k, or a symbolic description for the root-of-unity case.
    pub predicted_h: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub group: GroupSpec,
    pub regime: Regime,
    pub degrees: Vec<PredictedDegree>,
    /// Laurent factor ℂ[𝒟^m, 𝒟^{−m}] in the root-of-unity case.
    pub laurent_factor: Option<String>,
}

/// Predicted de Rham cohomology: coinvariant dimensions from the character ring,
/// tensored with ℂ[𝒟^m, 𝒟^{−m}] in the root-of-unity case.
pub fn cohomology_prediction(group: &GroupSpec, regime: Regime, max_degree: Option<usize>) -> Result<Prediction, SpectralError> {
    if !group.family.is_a_series() {
        return Err(SpectralError::WrongFamily("cohomology prediction is implemented for GL and SL".into()));
    }
    if group.family == Family::Sl && regime != Regime::Regular {
        return Err(SpectralError::Params("every admissible z is regular for SL".into()));
    }
    let n = group.n;
    let top = max_degree.unwrap_or(n * n).min(n * n);
    let product = charring::poincare_product(n);
    let laurent_factor = match regime {
        Regime::Regular => None,
        Regime::RootOfUnity { m } => Some(format!("C[D^{m},D^-{m}]")),
    };
    let mut degrees = Vec::new();
    for k in 0..=top {
        let b = charring::blocks(n, k).map_err(|e| SpectralError::Params(e.to_string()))?;
        let predicted_h = match &laurent_factor {
            None => b.trivial_multiplicity.to_string(),
            Some(f) => format!("{f} (x) {}", b.trivial_multiplicity),
        };
        degrees.push(PredictedDegree {
            degree: k,
            dim_exterior: b.dim,
            coinvariant_dim: b.trivial_multiplicity,
            product_coefficient: product[k],
            predicted_h,
        });
    }
    Ok(Prediction { group: *group, regime, degrees, laurent_factor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn gl2_prediction() {
        let p = cohomology_prediction(&GroupSpec::gl(2), Regime::Regular, None).unwrap();
        let h: Vec<i64> = p.degrees.iter().map(|d| d.coinvariant_dim).collect();
        assert_eq!(h, vec![1, 1, 0, 1, 1]);
    }

    #[test]
    fn determinant_cases() {
        let g = GroupSpec::gl(2);
        assert!(!determinant_data(&g, Tau::Plus, &ZSpec::Symbolic).unwrap().closed);
        assert!(determinant_data(&GroupSpec::sl(2), Tau::Plus, &ZSpec::Symbolic).unwrap().closed);
        let o = GroupSpec::from_name("oq", 3).unwrap();
        let d = determinant_data(&o, Tau::Plus, &ZSpec::Value(BigRational::from_integer((-1).into()))).unwrap();
        assert_eq!(d.coefficient, "-2");
        assert!(!d.closed);
    }
}
