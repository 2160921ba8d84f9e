//! Exact Hodge theory for the bicovariant calculi Γ_{±,z} on GL_q(N) and SL_q(N).
//!
//! The crate is organised by capability:
//!
//! - [`field`]: exact coefficient fields and linear algebra,
//! - [`partition`]: generalized partitions with negative columns,
//! - [`spectral`]: closed-form Laplace–Beltrami eigenvalues and zero sets,
//! - [`charring`]: GL(N) character arithmetic,
//! - [`frt`]: the type-A R̂-matrix, adjoint actions and functionals,
//! - [`complex`]: the braided exterior tower, d, ∂, Δ and their checks,
//! - [`report`]: configuration and report emission for the `qhodge` binary.

pub mod field;
pub mod partition;
pub mod spectral;
pub mod charring;
pub mod frt;
pub mod complex;
pub mod report;
