//! Closed-form Laplace–Beltrami eigenvalues E^±_λ on GL_q(N), their two
//! codings, and the classical limits.
//!
//! Run with `cargo run --example spectrum`.

use qhodge::field::RatFunc;
use qhodge::partition::{GenPartition, GroupSpec};
use qhodge::spectral::eigen::{eigen_a_poly, f_lambda_mu, recursion_check};
use qhodge::spectral::limits::limit_checks;
use qhodge::spectral::Tau;

fn main() {
    let gl2 = GroupSpec::gl(2);
    println!("E^tau_lambda on GL_q(2), symbolic in q and z:");
    for s in ["0,0", "1,0", "1,-1", "2,-1", "2,2"] {
        let l = GenPartition::parse(s, gl2.n).unwrap();
        for tau in [Tau::Plus, Tau::Minus] {
            let e = RatFunc::from_poly(eigen_a_poly(&l, tau));
            println!("  E^{}_{l} = {}", tau.symbol(), e.render(&["q", "z"]));
        }
        // the eigenvalue obeys the recursion in the first row of λ
        assert!(recursion_check(&l, Tau::Plus) && recursion_check(&l, Tau::Minus));
    }

    // E_{λμ} = E⁻_λ + E⁺_μ agrees with its second coding F_{λμ}
    let (l, mu) = (GenPartition::parse("1,-1", 2).unwrap(), GenPartition::parse("2,0", 2).unwrap());
    let e = eigen_a_poly(&l, Tau::Minus).add(&eigen_a_poly(&mu, Tau::Plus));
    assert_eq!(e, f_lambda_mu(&l, &mu));
    println!("E_(1,-1),(2,0) = {}", RatFunc::from_poly(e).render(&["q", "z"]));

    println!("classical limits on GL_q(3):");
    for s in ["1,0,0", "1,0,-1", "2,1,0", "3,-1,-2"] {
        let r = limit_checks(&GenPartition::parse(s, 3).unwrap());
        println!("  {s:>8}: E~ = {} (closed form {}), ok = {}", r.e_tilde_plus.as_deref().unwrap_or("-"), r.closed_form, r.ok);
    }
}
