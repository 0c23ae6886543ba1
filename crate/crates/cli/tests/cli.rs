use std::fs;
use std::process::{Command, Output};

fn shiftbin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftbin"))
        .args(args)
        .output()
        .expect("failed to spawn shiftbin")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn exact_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    fs::write(&path, "# two fair coins\n0.5\n\n0.5\n").unwrap();
    let o = shiftbin(&["exact", "--probs-file", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "k,mass\n0,0.25\n1,0.5\n2,0.25\n");
}

#[test]
fn exact_uniform_spread_has_full_support() {
    let o = shiftbin(&[
        "exact",
        "--uniform-spread",
        "--m",
        "100",
        "--max-prob",
        "1.0",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 102);
    assert!(lines[1].starts_with("0,"));
    assert!(lines[101].starts_with("100,"));
}

#[test]
fn missing_file_names_the_path() {
    let o = shiftbin(&["exact", "--probs-file", "/definitely/not/here.txt"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("/definitely/not/here.txt"));
}

#[test]
fn approx_shifted_binomial_reports_fit() {
    let o = shiftbin(&[
        "approx",
        "--method",
        "shifted-binomial",
        "--probs",
        "0.2,0.4,0.6,0.8",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "# method=shifted-binomial n=3 p=0.666666666667 s=0 n*=3.2 p*=0.5 s*=0.4"
    );
    let pmf = shiftbin::csv::parse_pmf_csv(&text).unwrap();
    assert!((pmf.mean() - 2.0).abs() < 1e-10);
}

#[test]
fn approx_binomial2() {
    let o = shiftbin(&[
        "approx",
        "--method",
        "binomial2",
        "--probs",
        "0.2,0.4,0.6,0.8",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("# method=binomial2 n=3 "));
}

#[test]
fn unknown_method_lists_valid_ones() {
    let o = shiftbin(&["approx", "--method", "gamma", "--probs", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    for name in [
        "poisson",
        "shifted-poisson",
        "binomial1",
        "binomial2",
        "normal",
        "shifted-binomial",
    ] {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(shiftbin(&["exact"]).status.code(), Some(1));
    assert_eq!(
        shiftbin(&["exact", "--probs", "0.5", "--uniform-spread"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        shiftbin(&["distance", "--probs", "0.5"]).status.code(),
        Some(1)
    );
    assert_eq!(
        shiftbin(&["exact", "--uniform-spread", "--m", "10"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn iid_distance_is_zero() {
    for metric in ["tv", "loc"] {
        let o = shiftbin(&[
            "distance",
            "--method",
            "shifted-binomial",
            "--metric",
            metric,
            "--probs",
            "0.3,0.3,0.3,0.3,0.3",
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        let d: f64 = stdout(&o).trim().parse().unwrap();
        assert!(d.abs() < 1e-12, "{metric}: {d}");
    }
}

#[test]
fn bounds_with_certain_summand() {
    let o = shiftbin(&["bounds", "--csv", "--probs", "0.3,1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<_> = lines.next().unwrap().split(',').collect();
    let row: Vec<_> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), row.len());
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    let tv: f64 = col("tv_exact").parse().unwrap();
    assert!(tv.abs() < 1e-12);
    let bound: f64 = col("tv_bound").parse().unwrap();
    assert!(bound >= tv);
}

#[test]
fn degenerate_bounds_print_na() {
    let o = shiftbin(&["bounds", "--probs", "0,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n/a"));
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn sweep_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o = shiftbin(&["sweep", "--m", "100", "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 21);
    assert_eq!(lines[0], shiftbin::sweep::SWEEP_HEADER);
    assert!(lines[20].starts_with("1,"));
}

#[test]
fn bad_grid_is_usage_error() {
    let o = shiftbin(&["sweep", "--grid", "1:0.5"]);
    assert_eq!(o.status.code(), Some(1));
}
