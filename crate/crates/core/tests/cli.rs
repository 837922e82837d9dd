use std::process::{Command, Output};

fn ellipse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellipse"))
        .args(args)
        .output()
        .expect("run ellipse")
}

fn stdout(args: &[&str]) -> String {
    let out = ellipse(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn coeffs_text_and_csv() {
    let text = stdout(&["coeffs", "--terms", "6"]);
    assert!(text.ends_with("c_5 = 49/65536\n"));
    let csv = stdout(&["coeffs", "--terms", "8", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,coefficient");
    assert_eq!(lines[8], "7,1089/4194304");
}

#[test]
fn cf_displays() {
    let normalized = stdout(&["cf", "--depth", "4"]);
    assert!(normalized.contains("a_3 = -3/16\n"));
    let integer = stdout(&["cf", "--depth", "5", "--display", "integer4"]);
    assert!(integer.contains("E(x) = 1 + x/(4 - x/(4 - 3x/(4 - 3x/(4 - (11/3)x/(4 - ...)))))"));
}

#[test]
fn solve_k_prints_exact_values() {
    let out = stdout(&["solve-k"]);
    assert!(out.contains("Delta = 3/131072\n"));
    assert!(out.contains("k = -9/2048\n"));
    assert!(out.contains("slope = -1/192\n"));
    assert!(out.contains("matched terms: 6\n"));
    let err = ellipse(&["solve-k", "--m", "4", "--n", "3"]);
    assert!(!err.status.success());
    assert!(String::from_utf8_lossy(&err.stderr).contains("unaffected"));
}

#[test]
fn match_depth_per_method() {
    for (m, d) in [("r1", 3), ("r2", 5), ("a1", 6), ("a2", 5)] {
        let out = stdout(&["match-depth", "--method", m]);
        assert!(out.contains(&format!("matches {d} leading terms")), "{out}");
    }
    assert!(!ellipse(&["match-depth", "--method", "cantrell"])
        .status
        .success());
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let p = path.to_str().unwrap();
    stdout(&[
        "sweep",
        "--grid",
        "0.1:0.3:0.1",
        "--methods",
        "r1,a2,cantrell:0.41,74",
        "--out",
        p,
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "x,E,r1,relerr_r1,a2,relerr_a2,cantrell,relerr_cantrell"
    );
    // same inputs, same bytes
    let path2 = dir.path().join("again.csv");
    stdout(&[
        "sweep",
        "--grid",
        "0.1:0.3:0.1",
        "--methods",
        "r1,a2,cantrell",
        "--out",
        path2.to_str().unwrap(),
    ]);
    assert_eq!(text, std::fs::read_to_string(&path2).unwrap());
}

#[test]
fn sweep_rejects_grid_reaching_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.csv");
    let out = ellipse(&["sweep", "--grid", "0:1:0.5", "--out", p.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn perimeter_all_and_single() {
    let all = stdout(&["perimeter", "--a", "2", "--b", "1"]);
    for m in [
        "series:50",
        "r1",
        "r2",
        "cantrell",
        "a1",
        "a2",
        "quadrature",
    ] {
        assert!(all.contains(m), "{m}");
    }
    let single = stdout(&["perimeter", "--a", "1", "--b", "1", "--method", "r2"]);
    assert!(single.contains("r2 6.283185307179586"));
    let warned = ellipse(&["perimeter", "--a", "1", "--b", "0.001", "--method", "a2"]);
    assert!(String::from_utf8_lossy(&warned.stderr).contains("warning"));
    assert!(!ellipse(&["perimeter", "--a", "0", "--b", "0"])
        .status
        .success());
}
