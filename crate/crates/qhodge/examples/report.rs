//! Driving the report layer programmatically: the same JSON/CSV/text output as
//! the `qhodge` binary.
//!
//! Run with `cargo run --example report`.

use qhodge::partition::{GenPartition, GroupSpec};
use qhodge::report::{emit, run, Command, Format, RunConfig};

fn main() {
    let mut cfg = RunConfig::new(Command::Spectrum, GroupSpec::gl(2));
    cfg.lambda = Some(GenPartition::parse("2,-1", 2).unwrap());
    let report = run(&cfg).unwrap();
    print!("{}", emit(&report, Format::Json));

    let cfg = RunConfig::new(Command::Poincare, GroupSpec::gl(3));
    let report = run(&cfg).unwrap();
    print!("{}", emit(&report, Format::Text));
    println!("exit status would be {}", report.exit_code());
}
