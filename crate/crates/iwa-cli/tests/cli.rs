use std::path::PathBuf;
use std::process::{Command, Output};

use iwa_cli::{HodgeReport, KNOWN_UNATTAINABLE, REGISTRY};

fn iwa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwa"))
        .args(args)
        .env_remove("IWA_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against a checked-in file; `IWA_BLESS=1` rewrites it.
fn check_golden(name: &str, args: &[&str]) {
    let o = iwa(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let got = stdout(&o);
    let path = golden(name);
    if std::env::var_os("IWA_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {name}; run with IWA_BLESS=1"));
    assert_eq!(got, want, "golden {name} changed");
}

#[test]
fn hodge_table_at_origin() {
    let o = iwa(&["hodge", "--t", "0", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let row = |title: &str, label: &str| -> Vec<String> {
        let block = s.split(title).nth(1).unwrap();
        let line = block.lines().find(|l| l.starts_with(label)).unwrap();
        line.split_whitespace().map(str::to_string).collect()
    };
    assert_eq!(row("Dolbeault", "p=2")[2], "6");
    assert_eq!(row("Betti", "b_k")[4], "10");
}

#[test]
fn hodge_json_round_trips_through_the_schema() {
    let o = iwa(&["hodge", "--t", "t11=1/3,t22=1/4,t21=-1/5", "--format", "json"]);
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["hpq_dolbeault", "hpq_bc", "hpq_aeppli", "betti", "frolicher_e1", "frolicher_e2"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let h: HodgeReport = serde_json::from_str(&text).unwrap();
    assert_eq!(h.nakamura_class, "iii");
    assert_eq!(h.hpq_dolbeault[1][1], 5);
    assert_eq!(serde_json::to_value(&h).unwrap(), v);
}

#[test]
fn golden_reports() {
    check_golden("hodge_t0.json", &["hodge", "--t", "0", "--format", "json"]);
    check_golden("signature_f2.json", &["signature", "--space", "f2", "--format", "json"]);
    check_golden(
        "mirror_sampled.csv",
        &["mirror", "--sample", "3", "--seed", "11", "--format", "csv"],
    );
    check_golden("sigma_class2.table", &["sigma", "--t", "t11=1/2,t12=1/3,t21=1/4,t22=1/6"]);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["coords", "--sample", "4", "--seed", "7", "--format", "json"];
    let a = iwa(&args);
    let b = iwa(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn env_seed_overrides_flag() {
    let run = |seed_env: Option<&str>, flag: &str| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_iwa"));
        c.args(["mirror", "--complexified", "--sample", "2", "--seed", flag, "--format", "json"]);
        match seed_env {
            Some(s) => c.env("IWA_SEED", s),
            None => c.env_remove("IWA_SEED"),
        };
        c.output().unwrap().stdout
    };
    assert_eq!(run(Some("5"), "9"), run(None, "5"));
    assert_ne!(run(None, "9"), run(None, "5"));
    let bad = Command::new(env!("CARGO_BIN_EXE_iwa"))
        .args(["hodge", "--sample", "1"])
        .env("IWA_SEED", "x")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn config_file_mirrors_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"t": ["t11=1/4,t22=1/5i"], "format": "json"}"#).unwrap();
    let a = iwa(&["coords", "--config", cfg.to_str().unwrap()]);
    let b = iwa(&["coords", "--t", "t11=1/4,t22=1/5i", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    // flags win over the file
    let c = iwa(&["coords", "--config", cfg.to_str().unwrap(), "--format", "csv"]);
    assert!(stdout(&c).trim_start_matches('"').starts_with("table:"));

    std::fs::write(&cfg, r#"{"colour": "red"}"#).unwrap();
    assert_eq!(iwa(&["hodge", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_path_receives_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sig.json");
    let o = iwa(&["signature", "--space", "h21gamma", "--format", "json", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["signature"], "(-,+,+,+)");
}

#[test]
fn domain_and_usage_errors_exit_two() {
    let o = iwa(&["mirror", "--t", "t11=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotPositive"), "{}", stderr(&o));

    let o = iwa(&["coords", "--t", "t31=1/3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("OffSlice"));

    for args in [
        vec!["frobnicate"],
        vec!["hodge", "--t", "t99=1"],
        vec!["hodge", "--t", "t11=1/0"],
        vec!["signature", "--space", "h33"],
        vec!["star", "--form", "al^foo"],
        vec!["hodge", "--t", "0", "--sample", "2"],
        vec!["verify", "--only", "14"],
    ] {
        assert_eq!(iwa(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(iwa(&["--help"]).status.code(), Some(0));
}

#[test]
fn essential_slice_flag_zeroes_t3() {
    let o = iwa(&["coords", "--t", "t11=1/4,t31=1/3", "--slice", "essential", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["t"]["t31"], "0");
}

#[test]
fn star_and_metric_commands() {
    let o = iwa(&["star", "--form", "al^ga^al~", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["star"], "-i*be^ga^be~");

    let o = iwa(&["metric", "--t", "t11=1/4,t12=1/5", "--check", "gauduchon", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gauduchon"], true);
    assert!(v["witness"].is_null());

    let o = iwa(&["metric", "--check", "balanced", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["balanced"], true);
    let o = iwa(&["metric", "--check", "kahler", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kahler"], false);
    assert!(v["witness"].is_string());
}

#[test]
fn mirror_marks_the_origin() {
    let o = iwa(&["mirror", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["marked"], true);
    assert_eq!(v["coeffs"], serde_json::json!(["2", "2", "0", "0"]));
    let o = iwa(&["mirror", "--complexified", "--t", "t11=1/2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["2", "2", "0", "-1/2"]));
    assert_eq!(v["marked"], false);
}

#[test]
fn vhs_check_reports_four_verdicts() {
    let o = iwa(&["vhs-check", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["transversality", "f2_holomorphic", "h12_not_holomorphic", "fg_holomorphic"] {
        assert_eq!(v[key]["holds"], true, "{key}");
    }
}

/// Every registry entry is a line of `iwa verify`, and the registry covers the
/// acceptance list exactly.
#[test]
fn verify_registry_is_complete() {
    let ids: Vec<u8> = REGISTRY.iter().map(|c| c.id).collect();
    assert_eq!(ids, (1..=13).collect::<Vec<_>>());
    for (id, _) in KNOWN_UNATTAINABLE {
        assert!(ids.contains(id));
    }
    let o = iwa(&["verify", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let results = v.as_array().unwrap();
    assert_eq!(results.len(), REGISTRY.len());
    let failing: Vec<u64> = results
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["id"].as_u64().unwrap())
        .collect();
    let known: Vec<u64> = KNOWN_UNATTAINABLE.iter().map(|(id, _)| *id as u64).collect();
    assert_eq!(failing, known);
    // a failing criterion means exit 1 with the first witness on stderr
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("verification failed: criterion 9"));

    let o = iwa(&["verify", "--only", "1,5,12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("PASS")).count(), 3);
}
