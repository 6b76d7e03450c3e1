use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatgraph"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn spine_fixture_passes() {
    let o = run(&[
        "check",
        &fixture("fig_spine.fg"),
        "--orbifold",
        &fixture("example22.orb"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("certificate: PASS"));
}

#[test]
fn machine_report_has_a_line_per_polygon() {
    let o = run(&[
        "check",
        &fixture("fig_spine.fg"),
        "--orbifold",
        &fixture("example22.orb"),
        "--machine",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("polygon ") && l.ends_with(" pass"))
            .count(),
        7
    );
}

#[test]
fn cyclic_fixture_boundary() {
    let o = run(&["boundary", &fixture("fig_cyclic_fatgraph.fg")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3, "{out}");
}

#[test]
fn boundary_cover_verdicts() {
    let o = run(&[
        "boundary",
        &fixture("fig_cyclic_fatgraph.fg"),
        "--orbifold",
        &fixture("example22.orb"),
        "--word",
        "z0 z1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a cover of"));
}

#[test]
fn built_disk_surface_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.fg");
    let orb = fixture("disk334.orb");
    let o = run(&[
        "build-disk",
        &orb,
        "--word",
        "c0 c1^2 c2 c1",
        "--n",
        "0",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let summary = stdout(&o);
    assert!(summary.contains("covering degree: 12"), "{summary}");
    assert!(summary.contains("exponent: 595"), "{summary}");

    let o = run(&["check", path_str(&out), "--orbifold", &orb]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificate: PASS"));

    let b = stdout(&run(&["derive-boundary", &orb]))
        .lines()
        .next()
        .unwrap()
        .to_string();
    let target = format!("c0 c1^2 c2 c1 {}", vec![b.as_str(); 595].join(" "));
    let o = run(&["boundary", path_str(&out), "--orbifold", &orb, "--word", &target]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("with degree 12\n"));
}

#[test]
fn reproduce_fig_reports_fourteen() {
    let o = run(&[
        "build-genus",
        &fixture("genus1_cone3.orb"),
        "--word",
        "z0 c0 Z0 c0",
        "--reproduce-fig",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("b^14"));
}

#[test]
fn genus_degrees_by_parity() {
    for (n, d) in [("2", "3"), ("3", "6")] {
        let o = run(&[
            "build-genus",
            &fixture("genus1_cone3.orb"),
            "--word",
            "z0 c0 Z0 c0",
            "--n",
            n,
            "--out",
            "/dev/null",
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(&format!("covering degree: {d}\n")));
    }
}

#[test]
fn derive_and_classify() {
    let o = run(&["derive-boundary", &fixture("example22.orb")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("shape: "));
    let o = run(&["classify", "--orbifold", &fixture("disk334.orb"), "--word", "c0"]);
    assert_eq!(stdout(&o).trim(), "elliptic");
    let o = run(&[
        "classify",
        "--orbifold",
        &fixture("disk334.orb"),
        "--word",
        "c0 c1",
    ]);
    assert_eq!(stdout(&o).trim(), "hyperbolic");
}

#[test]
fn nt_witness_default_target() {
    let o = run(&["nt-witness", "2", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("N = 588"));
    let o = run(&["nt-witness", "4", "4", "4", "--target", "218"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errors_exit_two() {
    let o = run(&[
        "check",
        "no/such/file.fg",
        "--orbifold",
        &fixture("example22.orb"),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: "));
    let o = run(&["classify", "--orbifold", &fixture("disk334.orb"), "--word", "c9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["build-disk", &fixture("genus1.orb"), "--word", "z0 z1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pinch_census_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.fg");
    let o = run(&[
        "pinch",
        "--orbifold",
        &fixture("genus1.orb"),
        "--word",
        "z0 z1",
        "--word",
        "Z1 Z0",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["census", path_str(&out)]);
    assert!(stdout(&o).contains("euler characteristic"));
    let o = run(&["export-dot", path_str(&out)]);
    assert!(stdout(&o).starts_with("graph") || stdout(&o).starts_with("digraph"));
    let o = run(&["export-dot", &fixture("example22.orb")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn achievable_lists_exponents() {
    let o = run(&[
        "achievable",
        &fixture("genus1_cone3.orb"),
        "--word",
        "z0 c0 Z0 c0",
        "--up-to",
        "60",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let nums: Vec<usize> = stdout(&o)
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert!(!nums.is_empty() && nums.windows(2).all(|p| p[1] == p[0] + 1) && *nums.last().unwrap() == 60);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "build-disk",
        &fixture("disk334.orb"),
        "--word",
        "c0 c1^2 c2 c1",
        "--n",
        "2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}
