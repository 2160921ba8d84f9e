//! Coefficient fields: symbolic ℚ(q,z) / ℚ(w), prime-field and rational
//! specializations, and exact linear algebra over any of them.

pub mod gcd;
pub mod linalg;
pub mod poly;
pub mod prime;
pub mod ratfunc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

pub use linalg::Matrix;
pub use poly::Poly;
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the chosen evaluation point; resample")]
    Resample,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("incompatible field modes: {0}")]
    Mode(String),
}

/// A field together with distinguished elements `q` and `z`.
///
/// Elements carry no context; every operation goes through the field value.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn q(&self) -> Self::Elem;
    fn z(&self) -> Self::Elem;
    /// Image of a Laurent polynomial in (q, z).
    fn from_laurent(&self, p: &Poly) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    /// Pivot preference: smaller is cheaper to divide by.
    fn weight(&self, _a: &Self::Elem) -> usize {
        0
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, FieldError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    /// `acc + a*b`.
    fn mul_add(&self, acc: &Self::Elem, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(acc, &self.mul(a, b))
    }

    /// The q-number `[n]_q`.
    fn qnum(&self, n: i64) -> Self::Elem {
        self.from_laurent(&crate::spectral::qnumber_poly(n))
    }
}

/// Which symbolic presentation is in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymMode {
    /// ℚ(q, z) with independent generators.
    Gl,
    /// ℚ(w) with q = w^N and z = w².
    Sl { n: u32 },
}

/// Exact symbolic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymbolicField {
    pub mode: SymMode,
}

impl SymbolicField {
    pub fn gl() -> Self {
        SymbolicField { mode: SymMode::Gl }
    }

    pub fn sl(n: u32) -> Self {
        SymbolicField { mode: SymMode::Sl { n } }
    }

    fn names(&self) -> [&'static str; 2] {
        match self.mode {
            SymMode::Gl => ["q", "z"],
            SymMode::Sl { .. } => ["w", "_"],
        }
    }
}

impl Field for SymbolicField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
    fn one(&self) -> RatFunc {
        RatFunc::one()
    }
    fn from_bigint(&self, n: &BigInt) -> RatFunc {
        RatFunc::from_bigint(n.clone())
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b)
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn inv(&self, a: &RatFunc) -> Result<RatFunc, FieldError> {
        a.inv().ok_or(FieldError::DivisionByZero)
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn q(&self) -> RatFunc {
        match self.mode {
            SymMode::Gl => RatFunc::var_pow(0, 1),
            SymMode::Sl { n } => RatFunc::var_pow(0, n as i32),
        }
    }
    fn z(&self) -> RatFunc {
        match self.mode {
            SymMode::Gl => RatFunc::var_pow(1, 1),
            SymMode::Sl { .. } => RatFunc::var_pow(0, 2),
        }
    }
    fn from_laurent(&self, p: &Poly) -> RatFunc {
        match self.mode {
            SymMode::Gl => RatFunc::from_poly(p.clone()),
            SymMode::Sl { n } => RatFunc::from_poly(p.remap(|e| [n as i32 * e[0] + 2 * e[1], 0])),
        }
    }
    fn render(&self, a: &RatFunc) -> String {
        a.render(&self.names())
    }
    fn weight(&self, a: &RatFunc) -> usize {
        a.weight()
    }
}

/// `F_p` with images of the symbolic generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    pub p: u64,
    /// Symbolic presentation whose generators are specialized.
    pub mode: SymMode,
    /// Images of the symbolic generators (q,z) or (w,1).
    pub gens: [u64; 2],
    pub q0: u64,
    pub z0: u64,
}

impl PrimeField {
    pub fn gl(p: u64, q0: u64, z0: u64) -> Self {
        PrimeField { p, mode: SymMode::Gl, gens: [q0 % p, z0 % p], q0: q0 % p, z0: z0 % p }
    }

    pub fn sl(p: u64, n: u32, w0: u64) -> Self {
        let q0 = poly::pow_mod(w0, n as u64, p);
        let z0 = poly::mul_mod(w0, w0, p);
        PrimeField { p, mode: SymMode::Sl { n }, gens: [w0 % p, 1], q0, z0 }
    }

    /// Reproducible random GL-mode specialization.
    pub fn random_gl(seed: u64) -> Self {
        let (p, mut rng) = prime::random_prime(seed);
        let q0 = prime::random_point(&mut rng, p);
        let z0 = prime::random_point(&mut rng, p);
        Self::gl(p, q0, z0)
    }

    /// Reproducible random SL-mode specialization.
    pub fn random_sl(seed: u64, n: u32) -> Self {
        let (p, mut rng) = prime::random_prime(seed);
        loop {
            let w0 = prime::random_point(&mut rng, p);
            let f = Self::sl(p, n, w0);
            if !prime::is_small_root_of_unity(f.q0, p, prime::ROOT_OF_UNITY_BOUND) {
                return f;
            }
        }
    }

    /// Random specialization matching a symbolic mode.
    pub fn random_for(mode: SymMode, seed: u64) -> Self {
        match mode {
            SymMode::Gl => Self::random_gl(seed),
            SymMode::Sl { n } => Self::random_sl(seed, n),
        }
    }

    /// Evaluation homomorphism from the matching symbolic field.
    pub fn specialize(&self, x: &RatFunc) -> Result<u64, FieldError> {
        let invs = [prime::inv_mod(self.gens[0], self.p), prime::inv_mod(self.gens[1], self.p)];
        x.eval_mod(self.p, self.gens, invs).ok_or(FieldError::Resample)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        poly::bigint_mod(n, self.p)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        poly::add_mod(*a, *b, self.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        poly::sub_mod(*a, *b, self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        poly::mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        poly::sub_mod(0, *a, self.p)
    }
    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(prime::inv_mod(*a, self.p))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn q(&self) -> u64 {
        self.q0
    }
    fn z(&self) -> u64 {
        self.z0
    }
    fn from_laurent(&self, p: &Poly) -> u64 {
        let invs = [prime::inv_mod(self.q0, self.p), prime::inv_mod(self.z0, self.p)];
        p.eval_mod(self.p, [self.q0, self.z0], invs)
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn mul_add(&self, acc: &u64, a: &u64, b: &u64) -> u64 {
        let s = (*a as u128 * *b as u128 + *acc as u128) % self.p as u128;
        s as u64
    }
}

/// ℚ with exact rational images of q and z.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalField {
    pub q0: BigRational,
    pub z0: BigRational,
}

impl RationalField {
    pub fn new(q0: BigRational, z0: BigRational) -> Result<Self, FieldError> {
        if q0.is_zero() || z0.is_zero() {
            return Err(FieldError::Resample);
        }
        Ok(RationalField { q0, z0 })
    }

    /// Evaluation of a GL-mode symbolic element.
    pub fn specialize(&self, x: &RatFunc) -> Result<BigRational, FieldError> {
        x.eval_rational(&[self.q0.clone(), self.z0.clone()]).ok_or(FieldError::Resample)
    }
}

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn q(&self) -> BigRational {
        self.q0.clone()
    }
    fn z(&self) -> BigRational {
        self.z0.clone()
    }
    fn from_laurent(&self, p: &Poly) -> BigRational {
        RatFunc::from_poly(p.clone())
            .eval_rational(&[self.q0.clone(), self.z0.clone()])
            .expect("nonzero images")
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// User-facing field selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    GlSymbolic,
    SlSymbolic { n: u32 },
    /// Prime field; `p = 0` means "draw a random prime from the seed".
    Numeric { p: u64, seed: u64 },
    Rational { q0: BigRational, z0: BigRational },
}

impl std::str::FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gl-symbolic" => Ok(FieldSpec::GlSymbolic),
            "sl-w" => Ok(FieldSpec::SlSymbolic { n: 0 }),
            _ => {
                let parts: Vec<&str> = s.split(':').collect();
                if parts.len() == 3 && parts[0] == "fp" {
                    let p = parts[1].parse::<u64>().map_err(|e| e.to_string())?;
                    let seed = parts[2].parse::<u64>().map_err(|e| e.to_string())?;
                    if p != 0 && (!prime::is_prime(p) || p < 5) {
                        return Err(format!("{p} is not a usable prime"));
                    }
                    Ok(FieldSpec::Numeric { p, seed })
                } else {
                    Err(format!("unknown field spec '{s}' (expected gl-symbolic, sl-w or fp:<prime>:<seed>)"))
                }
            }
        }
    }
}

impl PrimeField {
    /// Builds the numeric field described by a `fp:<prime>:<seed>` spec.
    pub fn from_spec(p: u64, seed: u64, mode: SymMode) -> Self {
        if p == 0 {
            return Self::random_for(mode, seed);
        }
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        loop {
            let a = rng.gen_range(2..p - 1);
            let f = match mode {
                SymMode::Gl => {
                    let b = rng.gen_range(2..p - 1);
                    Self::gl(p, a, b)
                }
                SymMode::Sl { n } => Self::sl(p, n, a),
            };
            if !prime::is_small_root_of_unity(f.q0, p, prime::ROOT_OF_UNITY_BOUND.min(p - 2)) {
                return f;
            }
        }
    }
}
