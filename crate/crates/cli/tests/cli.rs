use std::path::Path;
use std::process::{Command, Output};

fn lommel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lommel"))
        .args(args)
        .env_remove("LOMMEL_MAX_TERMS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn eval_half_half() {
    let o = lommel(&["eval", "--fn", "t_tilde", "--mu", "0.5", "--nu", "0.5", "--x", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4.33315653790063"), "{}", stdout(&o));
    assert!(stdout(&o).contains('±'));
}

#[test]
fn turan_bound_ratio_two_thirds() {
    let o = lommel(&["bound", "--id", "B13", "--mu", "0", "--nu", "0", "--x", "0.0001"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("upper = 0.66666666"), "{}", stdout(&o));
}

#[test]
fn region_error_names_predicate() {
    let o = lommel(&["bound", "--id", "B3", "--mu", "0", "--nu", "2", "--x", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("requires μ>−2 and |ν|<|μ+1|"), "{}", stderr(&o));
    let o = lommel(&["eval", "--fn", "t_tilde", "--mu", "-4", "--nu", "0", "--x", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["eval", "--fn", "nope", "--mu", "0", "--nu", "0", "--x", "1"][..],
        &["frobnicate"][..],
        &["bound", "--id", "B99", "--mu", "0", "--nu", "0", "--x", "1"][..],
        &["suite", "--name", "everything"][..],
        &[][..],
    ] {
        let o = lommel(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn violated_sweep_exits_one() {
    let o = lommel(&["sweep", "--id", "R3.5", "--mu", "0", "--nu", "-2.1"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn every_catalog_entry_reachable() {
    let o = lommel(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for b in lommel::catalog() {
        assert!(text.contains(b.id), "{}", b.id);
    }
    for id in ["B1", "B5", "B13", "B4R"] {
        let mut args = vec!["bound", "--id", id, "--mu", "2", "--nu", "1", "--x", "0.5"];
        if id == "B4R" {
            args.extend(["--mu1", "3", "--nu1", "1.5"]);
        }
        assert_eq!(lommel(&args).status.code(), Some(0), "{id}");
    }
}

fn suite_json(dir: &Path, name: &str) -> (Option<i32>, String) {
    let path = dir.join(name);
    let o = lommel(&["suite", "--name", "all", "--seed", "7", "--out", path.to_str().unwrap()]);
    (o.status.code(), std::fs::read_to_string(path).unwrap())
}

#[test]
fn suite_all_json_is_complete_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (code, a) = suite_json(dir.path(), "a.json");
    assert_eq!(code, Some(0));
    let (_, b) = suite_json(dir.path(), "b.json");
    assert_eq!(a, b, "identical argv must give byte-identical JSON");

    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let ids: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["claim_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, lommel::verify::claim_ids());
}

#[test]
fn tidy_csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = lommel(&[
        "eval",
        "--fn",
        "t_tilde",
        "--mu",
        "1",
        "--nu",
        "0",
        "--grid",
        "0.1:10:5:log",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mu,nu,x,quantity,value"));
    // One value row and one error row per x.
    let rows: Vec<Vec<&str>> = lines.map(|r| r.split(',').collect()).collect();
    assert_eq!(rows.len(), 10);
    for pair in rows.chunks(2) {
        assert_eq!((pair[0][3], pair[1][3]), ("t_tilde", "t_tilde_err"));
        assert_eq!(pair[0][2], pair[1][2]);
        let (v, e) = (pair[0][4].parse::<f64>().unwrap(), pair[1][4].parse::<f64>().unwrap());
        assert!(v > 0.0 && e < 1e-12 * v);
    }
    let bad = dir.path().join("t.txt");
    let o = lommel(&[
        "eval",
        "--fn",
        "t_tilde",
        "--mu",
        "1",
        "--nu",
        "0",
        "--x",
        "1",
        "--out",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_terms_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lommel"))
        .args(["eval", "--fn", "t_tilde", "--mu", "0", "--nu", "0", "--x", "30"])
        .env("LOMMEL_MAX_TERMS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("did not reach"), "{}", stderr(&o));
}
