//! Exterior dimensions, coinvariant dimensions and the predicted cohomology of
//! GL_q(N), computed in the character ring.
//!
//! Run with `cargo run --example poincare`.

use qhodge::charring::{blocks, poincare_product};
use qhodge::partition::GroupSpec;
use qhodge::spectral::predict::{cohomology_prediction, Regime};

fn main() {
    for n in [2, 3] {
        let p = cohomology_prediction(&GroupSpec::gl(n), Regime::Regular, None).unwrap();
        println!("GL_q({n}) regular z:");
        println!("  {:>3} {:>6} {:>6} {:>8}", "k", "dim", "coinv", "H^k");
        for d in &p.degrees {
            println!("  {:>3} {:>6} {:>6} {:>8}", d.degree, d.dim_exterior, d.coinvariant_dim, d.predicted_h);
        }
        println!("  product formula: {:?}", poincare_product(n));
    }

    let p = cohomology_prediction(&GroupSpec::gl(2), Regime::RootOfUnity { m: 3 }, None).unwrap();
    println!("GL_q(2), root of unity m = 3: H^k = {:?}", p.degrees.iter().map(|d| d.predicted_h.as_str()).collect::<Vec<_>>());

    println!("irreducible blocks of degree 2 for N = 3:");
    for (l, mult) in &blocks(3, 2).unwrap().decomposition.parts {
        println!("  {l} x {mult}");
    }
}
