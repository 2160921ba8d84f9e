//! Zero sets when z^N q^-2 is a primitive m-th root of unity: exactly the pairs
//! of rectangles whose widths are multiples of m.
//!
//! Run with `cargo run --example root_of_unity`.

use qhodge::partition::{GroupSpec, Window};
use qhodge::spectral::zeros::{predicted_root_of_unity_zeros, zero_scan, SpectralParams};
use qhodge::spectral::ZSpec;

fn main() {
    let g = GroupSpec::gl(2);
    for m in 1..=3u32 {
        let w = Window::parts(2 * m as i32);
        let scan = zero_scan(&SpectralParams::new(g, ZSpec::RootOfUnity(m)), &w, false).unwrap();
        let mut got = scan.zeros.clone();
        let mut want = predicted_root_of_unity_zeros(&g, m, &w);
        got.sort();
        want.sort();
        let shown: Vec<String> = got.iter().map(|(l, mu)| format!("({l},{mu})")).collect();
        println!(
            "m = {m}: {} pairs, {} zeros, matches rectangles: {}, all z-branches agree: {}",
            scan.pairs_scanned,
            got.len(),
            got == want,
            scan.branches_agree
        );
        println!("  {}", shown.join(" "));
    }
}
