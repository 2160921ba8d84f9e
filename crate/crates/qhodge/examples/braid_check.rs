//! Structural identities of the bicovariant calculi: braid and Hecke
//! relations, metric compatibility, d² = 0, contraction rules, Laplacian forms.
//!
//! Run with `cargo run --release --example braid_check`.

use qhodge::complex::Calculi;
use qhodge::field::SymbolicField;
use qhodge::spectral::Tau;

fn main() {
    let f = SymbolicField::gl();
    let c = Calculi::build(&f, 2, 5, false).unwrap();
    let items = c.structural_checks(3).unwrap();
    let failed: Vec<_> = items.iter().filter(|i| !i.ok).collect();
    for i in &items {
        println!("{:<6} {}", if i.ok { "ok" } else { "FAILED" }, i.name);
    }
    println!("{} identities checked, {} failed", items.len(), failed.len());
    println!("mixed braid relation (+,-,+): {}", c.mixed_braid_holds(Tau::Plus, Tau::Minus, Tau::Plus));
}
