//! Zero sets of E_{λμ} for the orthogonal and symplectic series at z = 1.
//!
//! Run with `cargo run --example bcd_zero_sets`.

use qhodge::partition::{GroupSpec, Window};
use qhodge::spectral::zeros::{zero_scan, SpectralParams};
use qhodge::spectral::ZSpec;

fn main() {
    for (name, n) in [("oq", 3), ("oq", 4), ("spq", 4), ("soq", 3)] {
        let g = GroupSpec::from_name(name, n).unwrap();
        let scan = zero_scan(&SpectralParams::new(g, "1".parse::<ZSpec>().unwrap()), &Window::boxes(n as u32 + 2), false).unwrap();
        let fmt = |v: &[(qhodge::partition::GenPartition, qhodge::partition::GenPartition)]| {
            v.iter().map(|(l, m)| format!("({l},{m})")).collect::<Vec<_>>().join(" ")
        };
        println!("{name} N={n}: {} pairs", scan.pairs_scanned);
        println!("  zeros: {}", fmt(&scan.zeros));
        println!("  with |λ| ≡ |μ| mod 2: {}", fmt(scan.zeros_parity_filtered.as_deref().unwrap_or(&[])));
    }
}
