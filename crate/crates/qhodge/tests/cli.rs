use std::process::Command;

fn qhodge(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qhodge")).args(args).output().expect("run qhodge");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn spectrum_json_round_trips() {
    let (code, out) = qhodge(&["spectrum", "--lambda", "2,-1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "spectrum");
    assert_eq!(v["ok"], true);
    assert_eq!(v["results"][0]["eigenvalue"], "q^5*z^-1 - q - q^-1 + q^-3*z^-1");
}

#[test]
fn regularity_csv_header_and_single_zero() {
    let (code, out) = qhodge(&["regularity", "--N", "2", "--z", "1", "--max-boxes", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("lambda,mu,E,is_zero"));
    let zeros: Vec<&str> = lines.filter(|l| l.ends_with(",true")).collect();
    assert_eq!(zeros, vec!["\"(0,0)\",\"(0,0)\",0,true"]);
}

#[test]
fn same_seed_gives_identical_bytes() {
    let args = ["exterior", "--N", "3", "--max-degree", "2", "--field", "fp:0:5", "--seed", "5"];
    let (c1, a) = qhodge(&args);
    let (c2, b) = qhodge(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn hodge_degree_three_row() {
    let (code, out) = qhodge(&["hodge", "--N", "2", "--degree", "3", "--tau", "+"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = &v["results"][0];
    assert_eq!(row["dim"], 4);
    assert_eq!(row["rank_d_prev"], 3);
    assert_eq!(row["dim_harmonic_plus"], 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(qhodge(&["spectrum", "--group", "e8"]).0, 2);
    assert_eq!(qhodge(&["hodge", "--N", "2", "--degree", "9"]).0, 2);
    assert_eq!(qhodge(&["spectrum", "--bogus"]).0, 2);
}
