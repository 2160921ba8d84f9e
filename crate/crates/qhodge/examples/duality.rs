//! Duality between d and the codifferential under the contraction pairing, and
//! the weak isomorphism Γ₊ ≅ Γ₋.
//!
//! Run with `cargo run --release --example duality`.

use qhodge::complex::Calculi;
use qhodge::field::{PrimeField, SymbolicField};
use qhodge::spectral::Tau;

fn main() {
    let f = SymbolicField::gl();
    let c = Calculi::build(&f, 2, 4, false).unwrap();
    for tau in [Tau::Plus, Tau::Minus] {
        for sign in [Tau::Plus, Tau::Minus] {
            for k in 0..=3 {
                let r = c.duality_check(tau, sign, k).unwrap();
                println!(
                    "Gamma_{} pairing {} degree {k}: adjoint {}, pairing rank {}/{}",
                    tau.symbol(),
                    sign.symbol(),
                    r.adjoint_ok,
                    r.pairing_rank,
                    r.dim
                );
            }
        }
    }
    let w = c.weak_isomorphism_check().unwrap();
    println!("weak isomorphism N=2: {w:?}");

    let f3 = PrimeField::random_gl(7);
    let c3 = Calculi::build(&f3, 3, 2, false).unwrap();
    println!("weak isomorphism N=3 (mod p): ok = {}", c3.weak_isomorphism_check().unwrap().ok);
}
