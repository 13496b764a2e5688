use std::path::Path;
use std::process::{Command, Output};

fn amwave(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_amwave"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn p(dir: &tempfile::TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

#[test]
fn wca_default_run_passes_with_600_entries() {
    let dir = tempfile::tempdir().unwrap();
    let out = p(&dir, "wca.json");
    let o = amwave(&["verify", "wca", "--trials", "100", "--seed", "42", "--out", &out], &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(Path::new(&out));
    assert_eq!(r["summary"]["entries"], 600);
    assert_eq!(r["summary"]["overall_pass"], true);
    assert_eq!(r["suite"], "wca");
}

#[test]
fn exact_on_generic_families_exits_one_and_flags_items() {
    let dir = tempfile::tempdir().unwrap();
    let o = amwave(&["verify", "exact", "--trials", "5", "--out", &p(&dir, "x.json")], &[]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("exact.exact3") && err.contains("exact.exact8"), "{err}");
    assert!(!err.contains("exact.exact1 "));
}

#[test]
fn abelian_exact_run_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = p(&dir, "c.toml");
    std::fs::write(&cfg, "suite = \"exact\"\ntrials = 20\ngenerators = [\"su2_spin_half\", \"su2_spin_one\"]\n[family]\nmode = \"abelian\"\n").unwrap();
    let o = amwave(&["verify", "exact", "--config", &cfg, "--out", &p(&dir, "r.json")], &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn same_seed_same_report_regardless_of_threads() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, c) = (p(&dir, "a.json"), p(&dir, "b.json"), p(&dir, "c.json"));
    assert_eq!(code(&amwave(&["verify", "zca", "--trials", "30", "--seed", "7", "--out", &a], &[])), 0);
    assert_eq!(code(&amwave(&["verify", "zca", "--trials", "30", "--seed", "7", "--out", &b], &[("AMWAVE_THREADS", "1")])), 0);
    assert_eq!(code(&amwave(&["verify", "zca", "--trials", "30", "--seed", "8", "--out", &c], &[])), 0);
    let (ra, rb, rc) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), std::fs::read(&c).unwrap());
    assert_eq!(ra, rb);
    assert_ne!(ra, rc);
}

#[test]
fn stdout_report_when_no_out() {
    let o = amwave(&["verify", "gauge", "--trials", "2"], &[]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "gauge");
}

#[test]
fn unknown_config_field_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = p(&dir, "bad.toml");
    std::fs::write(&cfg, "suite = \"wca\"\ntrails = 3\n").unwrap();
    let o = amwave(&["verify", "wca", "--config", &cfg], &[]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2") && err.contains("trails"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["verify", "nope"],
        vec!["verify", "wca", "--trials", "0"],
        vec!["verify", "wca", "--tol", "-1"],
        vec!["boost", "--velocity", "1.5"],
        vec!["zitter", "--theta", "3"],
        vec!["zitter", "--momentum", "0,0,-1"],
        vec!["zitter", "--steps", "0"],
        vec!["verify", "wca", "--config", "/definitely/missing.toml"],
        vec!["frobnicate"],
    ] {
        let o = amwave(&args, &[]);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    // unwritable destination: exit 2 and nothing left behind
    let out = dir.path().join("missing_dir").join("r.json");
    let o = amwave(&["verify", "wca", "--trials", "1", "--out", out.to_str().unwrap()], &[]);
    assert_eq!(code(&o), 2);
    assert!(!out.exists());
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&amwave(&["--help"], &[])), 0);
}

#[test]
fn zitter_writes_csv_and_theta_zero_is_flat() {
    let dir = tempfile::tempdir().unwrap();
    let out = p(&dir, "z.json");
    let o = amwave(&["zitter", "--theta", "0", "--momentum", "0.3,-0.2,0.9", "--steps", "200", "--out", &out], &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let mut rd = csv::Reader::from_path(dir.path().join("z.csv")).unwrap();
    let header: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[0], "t");
    assert!(header.iter().any(|h| h == "zr_x") && header.iter().any(|h| h == "zs_abs_dev"));
    let mut rows = 0;
    for rec in rd.records() {
        let rec = rec.unwrap();
        for (h, cell) in header.iter().zip(rec.iter()) {
            if h != "t" && !cell.is_empty() {
                assert!(cell.parse::<f64>().unwrap().abs() <= 1e-14, "{h}={cell}");
            }
        }
        rows += 1;
    }
    assert!(rows >= 200);
}

#[test]
fn zitter_default_passes_and_reports_si() {
    let dir = tempfile::tempdir().unwrap();
    let out = p(&dir, "z.json");
    assert_eq!(code(&amwave(&["zitter", "--out", &out], &[])), 0);
    let r = json(Path::new(&out));
    let si = &r["zitter"]["si"];
    assert!((si["max_amplitude"].as_f64().unwrap() / 1.9308e-13 - 1.0).abs() < 5e-4);
}

#[test]
fn poynting_and_boost_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let out = p(&dir, "p.json");
    assert_eq!(code(&amwave(&["poynting", "--trials", "3", "--out", &out], &[])), 0);
    assert!(dir.path().join("p.csv").exists());
    assert_eq!(code(&amwave(&["boost", "--trials", "3", "--velocity", "-0.9", "--out", &p(&dir, "b.json")], &[])), 0);
}

#[test]
fn su3_constants_verb() {
    let o = amwave(&["su3-constants"], &[]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nonzero_f"].as_array().unwrap().len(), 9);
}

#[test]
fn in_process_entry_point() {
    assert_eq!(amwave::cli::run(["amwave", "verify", "su3", "--trials", "2"]), 0);
}
