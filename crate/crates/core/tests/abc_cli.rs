use abc_fab::cli::NumericTable;
use std::path::Path;
use std::process::{Command, Output};

fn fab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fab")).args(args).output().unwrap()
}

fn fab_out(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fab")).args(args).arg("--out").arg(out).output().unwrap()
}

fn table(path: &Path) -> NumericTable {
    NumericTable::parse(&std::fs::read(path).unwrap()).unwrap()
}

#[test]
fn zero_system_gives_constant_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("zero.csv");
    let o = fab_out(&["simulate", "--system", "zero", "--ic", "1", "--alpha", "0.6", "--h", "0.1", "--t-final", "2"], &out);
    assert_eq!(o.status.code(), Some(0));
    let t = table(&out);
    assert_eq!(t.header, ["t", "x1"]);
    assert_eq!(t.rows.len(), 21);
    assert!(t.rows.iter().enumerate().all(|(n, r)| r[0] == n as f64 * 0.1 && r[1] == 1.0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.ends_with('\n') && !text.contains('\r') && !text.contains("\n\n"));
}

#[test]
fn csv_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    fab_out(&["simulate", "--system", "chaos3d_b", "--alpha", "1", "--h", "0.01", "--t-final", "5"], &out);
    let bytes = std::fs::read(&out).unwrap();
    assert_eq!(NumericTable::parse(&bytes).unwrap().to_bytes().unwrap(), bytes);
}

#[test]
fn manifest_records_config_and_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.csv");
    let o = fab_out(
        &["simulate", "--system", "hyper4d", "--alpha", "0.93", "--h", "0.01", "--t-final", "1", "--hyper4d-f3-variant", "x1_x2"],
        &out,
    );
    let m: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("h.manifest.json")).unwrap()).unwrap();
    assert_eq!(m["config"]["system"], "hyper4d");
    assert_eq!(m["config"]["hyper4d_f3"], "x1_x2");
    assert_eq!(m["version"], env!("CARGO_PKG_VERSION"));
    let notes = m["diagnostics"]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("x1*x2")), "{notes:?}");
    assert_eq!(table(&out).header.len(), 5);
    let completed = m["diagnostics"]["completed"].as_bool().unwrap();
    assert_eq!(o.status.code(), Some(if completed { 0 } else { 2 }));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    let out = dir.path().join("lt.csv");
    std::fs::write(
        &cfg,
        format!("system = \"linear_ty\"\nalpha = 0.5\nh = 0.1\nt_final = 1.0\nout = {:?}\n[params]\nk = 0.5\n", out.to_str().unwrap()),
    )
    .unwrap();
    let o = fab(&["simulate", "--config", cfg.to_str().unwrap(), "--alpha", "0.9", "--param", "k=0.25"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let m: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("lt.manifest.json")).unwrap()).unwrap();
    assert_eq!(m["config"]["alpha"], 0.9);
    assert_eq!(m["config"]["params"]["k"], 0.25);
    assert_eq!(table(&out).rows.len(), 11);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(fab(&[]).status.code(), Some(1));
    assert_eq!(fab(&["--help"]).status.code(), Some(0));
    assert_eq!(fab(&["simulate", "--help"]).status.code(), Some(0));
    assert_eq!(fab(&["--version"]).status.code(), Some(0));
    assert_eq!(fab(&["frobnicate"]).status.code(), Some(1));
    let base = ["simulate", "--system", "zero", "--alpha", "0.5", "--h", "0.1", "--t-final", "1"];
    assert_eq!(fab(&base).status.code(), Some(1), "missing --out");
    let bad_t = ["simulate", "--system", "zero", "--alpha", "0.5", "--h", "0.3", "--t-final", "1"];
    assert_eq!(fab_out(&bad_t, &dir.path().join("x.csv")).status.code(), Some(1));
    let unwritable = dir.path().join("missing-dir").join("x.csv");
    let o = fab_out(&base[..], &unwritable);
    assert_eq!(o.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());
    let trunc = dir.path().join("t.csv");
    let o = fab_out(&["simulate", "--system", "chaos3d_a", "--alpha", "0.75", "--h", "0.01", "--t-final", "100"], &trunc);
    assert_eq!(o.status.code(), Some(2));
    assert!(!table(&trunc).rows.is_empty());
}

#[test]
fn phi_grid_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("phi.csv");
    let o = fab_out(&["phi", "--n-max", "100", "--alphas", "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0", "--h", "0.01"], &out);
    assert_eq!(o.status.code(), Some(0));
    let t = table(&out);
    assert_eq!(t.header, ["n", "alpha", "phi", "bound"]);
    assert_eq!(t.rows.len(), 1000);
    assert_eq!(&t.rows[900][..3], &[1.0, 1.0, 10.0]);
}

#[test]
fn converge_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("conv.csv");
    let o = fab_out(&["converge", "--system", "tbeta", "--beta", "2", "--alpha", "1", "--h", "0.04,0.02,0.01", "--t-final", "2"], &out);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("h,max_abs_error,observed_order,valid"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0][2], "");
    for r in &rows[1..] {
        let p: f64 = r[2].parse().unwrap();
        assert!((p - 2.0).abs() < 0.3);
        assert_eq!(r[3], "true");
    }
    assert_eq!(
        fab_out(&["converge", "--system", "chaos3d_a", "--beta", "2", "--alpha", "1", "--h", "0.1", "--t-final", "1"], &out).status.code(),
        Some(1)
    );
}

#[test]
fn check_prints_report() {
    let o = fab(&["check", "--L", "0.01", "--M", "0.02", "--b", "1", "--alpha", "1", "--c", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["guaranteed"], true);
    assert_eq!(r["c_max"], 50.0);
    assert!((r["contraction_constant"].as_f64().unwrap() - 0.1).abs() < 1e-15);
    let o = fab(&["check", "--L", "1e6", "--M", "1", "--b", "1", "--alpha", "0.5"]);
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(r["c_max"].is_null());
    assert!(r["note"].is_string());
}
