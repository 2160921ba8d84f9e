//! Closed-form Laplace–Beltrami spectra, regularity and zero-set classification.
//!
//! Eigenvalues are built as Laurent polynomials in (q, z) and then mapped by an
//! [`Evaluator`] into a field where equality with zero is decided exactly.

pub mod eigen;
pub mod eval;
pub mod limits;
pub mod predict;
pub mod zeros;

pub use eigen::{eigen_a, eigen_a_poly, eigen_bcd, f_lambda_mu, recursion_check};
pub use eval::{Evaluator, ZSpec};
pub use limits::{e_tilde, e_tilde_closed_form, first_order_limit_at_z_one, lim1_sum, limit_checks, LimitReport};
pub use predict::{cohomology_prediction, determinant_data, DeterminantData, PredictedDegree, Prediction, Regime};
pub use zeros::{predicted_root_of_unity_zeros, regularity_value, zero_scan, EigenRecord, SpectralParams, ZeroScan};

use crate::field::Poly;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    /// Operation does not apply to this series.
    #[error("wrong group family: {0}")]
    WrongFamily(String),
    /// Partition length differs from N.
    #[error("partition has {got} parts, expected {expected}")]
    Length { expected: usize, got: usize },
    /// Partition is not in P(𝒜) for the group.
    #[error("partition {0} is not admissible for this group")]
    NotAdmissible(String),
    /// The two independent codings of E_{λμ} disagree.
    #[error("internal inconsistency: E and F differ at ({lambda}, {mu})")]
    Inconsistent { lambda: String, mu: String },
    /// Invalid combination of group and z.
    #[error("invalid parameters: {0}")]
    Params(String),
}

/// Calculus sign τ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Tau {
    Plus,
    Minus,
}

impl Tau {
    pub fn sign(self) -> i32 {
        match self {
            Tau::Plus => 1,
            Tau::Minus => -1,
        }
    }

    pub fn flip(self) -> Tau {
        match self {
            Tau::Plus => Tau::Minus,
            Tau::Minus => Tau::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Tau::Plus => "+",
            Tau::Minus => "-",
        }
    }
}

impl std::str::FromStr for Tau {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "plus" => Ok(Tau::Plus),
            "-" | "minus" => Ok(Tau::Minus),
            _ => Err(format!("expected + or -, got '{s}'")),
        }
    }
}

/// `[n]_q = Σ_{i=1}^{n} q^{n+1-2i}` as a Laurent polynomial (odd in n).
pub fn qnumber_poly(n: i64) -> Poly {
    let (sign, m) = if n < 0 { (-1, -n) } else { (1, n) };
    let terms = (1..=m).map(|i| ([(m + 1 - 2 * i) as i32, 0], BigInt::from(sign))).collect();
    Poly::from_terms(terms)
}
