//! Ranks of the braided antisymmetrizers: the exterior algebras of Γ₊ and Γ₋
//! have the classical dimensions binom(N², k).
//!
//! Run with `cargo run --release --example exterior`.

use qhodge::complex::Calculi;
use qhodge::field::{PrimeField, SymbolicField};
use qhodge::spectral::Tau;

fn main() {
    let f = SymbolicField::gl();
    let c = Calculi::build(&f, 2, 4, false).unwrap();
    for tau in [Tau::Plus, Tau::Minus] {
        let dims: Vec<usize> = (0..=4).map(|k| c.dim(tau, k).unwrap()).collect();
        println!("GL_q(2), Gamma_{}, exact over Q(q,z): {dims:?}", tau.symbol());
    }

    // N = 3 over a few random specializations to a large prime field
    for seed in 0..3 {
        let f = PrimeField::random_gl(seed);
        let c = Calculi::build(&f, 3, 3, false).unwrap();
        let dims: Vec<usize> = (0..=3).map(|k| c.dim(Tau::Plus, k).unwrap()).collect();
        println!("GL_q(3), Gamma_+, p = {}: {dims:?}", f.p);
    }
}
