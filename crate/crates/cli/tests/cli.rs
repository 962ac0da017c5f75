use std::path::Path;
use std::process::{Command, Output};

use orbihh_cli::Report;

fn orbihh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbihh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

const BD12_DOC: &str = r#"{
  "name": "binary dihedral of order 12",
  "cyclotomic_order": 3,
  "dimension": 2,
  "generators": [
    [["0", "1"], ["-1", "0"]],
    [["z", "0"], ["0", "z^2"]]
  ],
  "symplectic_form": "standard",
  "options": {"maxdeg": 4, "trials": 3}
}"#;

#[test]
fn verify_sym3_passes() {
    let o = orbihh(&["verify", "--builtin", "sym_n:3", "--trials", "5"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("PASS SA associativity"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn corrupted_table_fails_verification() {
    let o = orbihh(&[
        "verify",
        "--builtin",
        "sym_n:3",
        "--trials",
        "2",
        "--corrupt-sa",
    ]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let float = write(
        dir.path(),
        "f.json",
        &BD12_DOC.replace("\"z\", \"0\"", "\"0.5*z\", \"0\""),
    );
    let o = orbihh(&["compute", "--input", &float]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("generators[1][0][0]"));

    let missing = write(
        dir.path(),
        "m.json",
        &BD12_DOC.replace("\"dimension\": 2,", ""),
    );
    let o = orbihh(&["compute", "--input", &missing]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension"));

    assert_eq!(code(&orbihh(&["compute", "--builtin", "nope"])), 2);
    assert_eq!(code(&orbihh(&["compute"])), 2);
    assert_eq!(code(&orbihh(&["cocycle", "--builtin", "reflection"])), 2);
}

#[test]
fn cap_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "c.json",
        &BD12_DOC.replace("\"maxdeg\": 4", "\"maxdeg\": 4, \"cap\": 4"),
    );
    assert_eq!(code(&orbihh(&["compute", "--input", &p])), 3);
}

#[test]
fn json_input_runs_every_verb() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "s3.json", BD12_DOC);
    let out = dir.path().join("r.json").display().to_string();
    let o = orbihh(&["all", "--input", &p, "--json", &out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let r = Report::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r.group.order, 12);
    assert!(r.group.symplectic);
    assert!(!r.cocycle.is_empty() && !r.molien.is_empty() && !r.verdicts.is_empty());
    assert_eq!(r.molien[0].coefficients.len(), 5);
}

#[test]
fn form_not_preserved_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let doc = BD12_DOC.replace("[\"-1\", \"0\"]", "[\"1\", \"0\"]");
    let p = write(dir.path(), "s3.json", &doc);
    let o = orbihh(&["verify", "--input", &p]);
    assert_eq!(code(&o), 4);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(
        text.contains("FAIL generators preserve the symplectic form"),
        "{text}"
    );
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json").display().to_string();
    let b = dir.path().join("b.json").display().to_string();
    let run = |out: &str| {
        orbihh(&[
            "all",
            "--builtin",
            "weyl_b2",
            "--trials",
            "3",
            "--seed",
            "7",
            "--json",
            out,
        ])
    };
    assert_eq!(code(&run(&a)), 0);
    assert_eq!(code(&run(&b)), 0);
    let first = std::fs::read_to_string(&a).unwrap();
    assert_eq!(first, std::fs::read_to_string(&b).unwrap());
    let again = Report::from_json(&first).unwrap().to_json();
    assert_eq!(first, again);
}

#[test]
fn csv_and_molien() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("m.csv").display().to_string();
    let o = orbihh(&[
        "molien",
        "--builtin",
        "minus_one:2",
        "--maxdeg",
        "4",
        "--csv",
        &csv,
    ]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("0: 1, 0, 3, 0, 5"));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("section,i,j,value,re,im\n"));
    assert!(text.contains("molien,0,2,3,,"));
}

#[test]
fn cocycle_table_prints_values() {
    let o = orbihh(&["cocycle", "--builtin", "sym_n:3"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("= 3/4"), "{text}");
}
