//! Hodge decomposition of the left-coinvariant complex of GL_q(2):
//! Λ^k = dΛ^{k-1} ⊕ ∂Λ^{k+1} ⊕ ker Δ, with harmonic forms = coinvariants.
//!
//! Run with `cargo run --release --example hodge`.

use qhodge::complex::Calculi;
use qhodge::field::SymbolicField;
use qhodge::spectral::Tau;

fn main() {
    let f = SymbolicField::gl();
    let c = Calculi::build(&f, 2, 5, false).unwrap();
    println!("{:>3} {:>4} {:>7} {:>9} {:>9} {:>9} {:>6} {:>9}", "k", "dim", "rank d", "rank del", "harmonic", "coinv", "hodge", "spectrum");
    for k in 0..=4 {
        let r = c.hodge_check(Tau::Plus, k).unwrap();
        println!(
            "{:>3} {:>4} {:>7} {:>9} {:>9} {:>9} {:>6} {:>9}",
            r.degree, r.dim, r.rank_d, r.rank_del_plus, r.dim_harmonic_plus, r.dim_coinvariant, r.hodge_ok, r.spectrum_ok
        );
    }

    println!("eigenvalues of the Laplacian on degree 1:");
    let s = c.spectrum_crosscheck(Tau::Plus, Tau::Plus, 1).unwrap();
    for b in &s.blocks {
        println!("  {} from {:?}: multiplicity {} (expected {})", b.value, b.partitions, b.observed_multiplicity, b.expected_multiplicity);
    }
}
