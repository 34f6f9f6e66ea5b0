use std::process::Command;

use serde_json::Value;
use zforcing::cli;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("zfs").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn compare_grid_sets() {
    let v = json(&["compare", "--builtin", "fig1_grid9", "--sets", "2,6,9;1,6,9;1,4,7", "--json"]);
    let got: Vec<&str> = v["sets"].as_array().unwrap().iter().map(|r| r["q_max"]["text"].as_str().unwrap()).collect();
    assert_eq!(got, ["t^4+3t^3+4t^2", "t^4+2t^3+4t^2+2t", "3t^4+7t^3+4t^2+t"]);
    assert_eq!(v["sets"][0]["V_max"]["text"], "t^8+2t^7+7t^6+8t^5+6t^4");
}

#[test]
fn min_on_k6_minus_edges() {
    let (code, out, _) = call(&["min", "--builtin", "complete_minus_two_disjoint_edges", "-n", "6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Z(G) = 4\n"), "{out}");
    let v = json(&["min", "--builtin", "complete_minus_two_disjoint_edges", "-n", "6", "--json"]);
    assert_eq!(v["zero_forcing_number"], 4);
}

#[test]
fn path_error_poly_row_ten() {
    let v = json(&["error-poly", "--builtin", "path", "-n", "15", "-s", "1", "--json"]);
    assert_eq!(v["q"]["10"]["coeffs"], serde_json::json!(["0", "0", "0", "0", "0", "5", "20", "21", "8", "1"]));
    assert_eq!(v["q_text"]["10"], "t^9+8t^8+21t^7+20t^6+5t^5");
    assert_eq!(v["pt"], 14);
    assert_eq!(v["q_max"]["vertex"], 15);
    assert_eq!(v["V_single_chain"], true);
    for key in ["set", "pt", "q", "V", "q_max", "V_max", "V_single_chain"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn error_poly_all_chains() {
    let v = json(&["error-poly", "--builtin", "fig3_fork", "-s", "1,3,5", "--chain", "all", "--json"]);
    assert_eq!(v["chains"].as_array().unwrap().len(), 4);
    assert_eq!(v["V_single_chain"], false);
}

#[test]
fn check_and_chains() {
    let v = json(&["check", "--builtin", "fig1_grid9", "-s", "1,6,9", "--json"]);
    assert_eq!(v["zero_forcing"], true);
    let (code, out, _) = call(&["check", "--builtin", "path", "-n", "5", "-s", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("zero forcing: no"));
    let v = json(&["chains", "--builtin", "forked_path", "-n", "7", "-s", "1,7", "--json"]);
    assert_eq!(v["count"], 2);
    assert!(v["chains"][0]["forces"][0]["by"].is_u64());
    assert_eq!(call(&["chains", "--builtin", "complete", "-n", "6", "-s", "1,2,3,4,5", "--limit", "2"]).0, 1);
}

#[test]
fn variance_poly_reports_witnesses() {
    let v = json(&["variance-poly", "--builtin", "fig3_fork", "-s", "1,3,5", "--json"]);
    assert_eq!(v["V_text"]["4"], "2t^6+6t^5+6t^4+2t^3+t^2");
    assert_eq!(v["V_single_chain"], false);
    assert_eq!(v["witnesses"]["7"]["S"], serde_json::json!([1, 3, 5]));
}

#[test]
fn graph_file_input() {
    let dir = std::env::temp_dir().join(format!("zfs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p4.txt");
    std::fs::write(&path, "# path\nn 4\n1 2\n2 3\n3 4\n").unwrap();
    let v = json(&["error-poly", "-g", path.to_str().unwrap(), "-s", "1", "--json"]);
    assert_eq!(v["q_text"]["4"], "t^3+2t^2");
    std::fs::write(&path, "n 2\n1 2\n2 2\n").unwrap();
    let (code, _, err) = call(&["min", "-g", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
    std::fs::write(&path, "1 2\n").unwrap();
    assert_eq!(call(&["min", "-g", path.to_str().unwrap()]).0, 1);
    assert_eq!(call(&["min", "-g", "/nonexistent/zfs.txt"]).0, 1);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["min", "--builtin", "nope"]).0, 1);
    assert_eq!(call(&["min", "--builtin", "path", "-g", "x"]).0, 1);
    assert_eq!(call(&["error-poly", "--builtin", "path", "-n", "4", "-s", "2"]).0, 1);
    assert_eq!(call(&["error-poly", "--builtin", "path", "-n", "4", "-s", "1;2"]).0, 1);
    assert_eq!(call(&["verify", "--builtin", "path", "-n", "4", "-s", "1", "--threads", "0"]).0, 1);
    let (code, _, err) = call(&["compare", "--builtin", "path", "--bogus"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn verify_modes() {
    let v = json(&["verify", "--builtin", "fig1_grid9", "-s", "1,4,7", "--trials", "50", "--eps", "1e-3", "--seed", "3", "--json"]);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert_eq!(v["trials"], 50);
    assert_eq!(v["graph"], "fig1_grid9");
    assert!(v["worst_slack"]["thm16"].as_f64().unwrap() <= 1.0);
    assert!(v["worst_slack"]["thm52"].as_f64().unwrap() <= 1.0);
    assert!(v["variance"].is_null());

    let v = json(&[
        "verify", "--builtin", "fig3_fork", "-s", "1,3,5", "--mode", "variance", "--trials", "4000",
        "--eps", "1e-4", "--forces", "5>8,3>6,6>2,1>7,7>4", "--json",
    ]);
    assert_eq!(v["violations"], serde_json::json!([]));
    let per = v["variance"]["per_vertex"].as_array().unwrap();
    assert_eq!(per.len(), 8);
    assert!(per.iter().all(|r| r["bound"].is_f64() && r["sample"].is_f64()));
}

#[test]
fn json_is_byte_stable_across_runs_and_threads() {
    let args = ["verify", "--builtin", "fig1_grid9", "-s", "2,6,9", "--trials", "30", "--seed", "9", "--json"];
    let a = call(&[&args[..], &["--threads", "1"]].concat()).1;
    let b = call(&[&args[..], &["--threads", "3"]].concat()).1;
    assert_eq!(a, b);
    let e1 = call(&["error-poly", "--builtin", "fig1_grid9", "-s", "1,6,9", "--json"]).1;
    let e2 = call(&["error-poly", "--builtin", "fig1_grid9", "-s", "1,6,9", "--json"]).1;
    assert_eq!(e1, e2);
}

#[test]
fn demos() {
    for name in ["kn", "path2", "f2", "witness"] {
        let v = json(&["demo", "--name", name, "--json"]);
        assert_eq!(v["holds"], true, "{name}");
    }
    let v = json(&["demo", "--name", "path2", "-n", "9", "--json"]);
    assert_eq!(v["error_over_eps"], "16");
    let v = json(&["demo", "--name", "kn", "-n", "5", "--delta", "1/100", "--json"]);
    assert_eq!(v["error_over_eps"], "400");
    assert_eq!(call(&["demo", "--name", "witness", "--builtin", "path", "-n", "3", "-s", "1"]).0, 1);
    assert_eq!(call(&["demo", "--name", "path2", "-n", "4"]).0, 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_zfs");
    let ok = Command::new(bin).args(["min", "--builtin", "path", "-n", "5"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).lines().next(), Some("Z(G) = 1"));
    let usage = Command::new(bin).args(["min", "--wat"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    assert!(!usage.stderr.is_empty());
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}

struct ClosedPipe;

impl std::io::Write for ClosedPipe {
    fn write(&mut self, _: &[u8]) -> std::io::Result<usize> {
        Err(std::io::ErrorKind::BrokenPipe.into())
    }
    fn flush(&mut self) -> std::io::Result<()> {
        Ok(())
    }
}

#[test]
fn closed_stdout_exits_quietly() {
    let mut err = Vec::new();
    let code = cli::run(["zfs", "min", "--builtin", "complete", "-n", "4"], &mut ClosedPipe, &mut err);
    assert_eq!(code, 0);
    assert!(err.is_empty());
}
