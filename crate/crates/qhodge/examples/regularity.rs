//! Regularity of a fixed z: the only vanishing E_{λμ} is the trivial pair.
//!
//! Run with `cargo run --example regularity`.

use qhodge::partition::{GroupSpec, Window};
use qhodge::spectral::zeros::{regularity_value, zero_scan, SpectralParams};
use qhodge::spectral::ZSpec;

fn main() {
    for n in [2, 3] {
        let params = SpectralParams::new(GroupSpec::gl(n), "1".parse::<ZSpec>().unwrap());
        let scan = zero_scan(&params, &Window::parts(2), false).unwrap();
        println!("GL_q({n}), z = 1, parts in [-2,2]: {} pairs scanned, zeros:", scan.pairs_scanned);
        for (l, mu) in &scan.zeros {
            println!("  ({l}, {mu})");
        }
    }

    // a single record, showing both summands
    let params = SpectralParams::new(GroupSpec::gl(2), "2".parse().unwrap());
    let l = qhodge::partition::GenPartition::parse("1,0", 2).unwrap();
    let r = regularity_value(&l, &l, &params).unwrap();
    println!("z = 2: E^-_{l} = {}, E^+_{l} = {}, sum = {}", r.e_minus, r.e_plus, r.e);
}
