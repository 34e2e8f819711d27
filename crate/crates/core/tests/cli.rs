//! Runs the built binary on fixture files and checks exit codes, exact
//! output bytes and round-trip reparsing.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;
use torus_cosets::nhat::NhatNormalForm;
use torus_cosets::paction::AxiomReport;
use torus_cosets::sl2class::{OrbitLabel, SemisimpleOrbit};
use torus_cosets::slmat::{BruhatFactors, GaussFactors, NCellFactors};

struct Fixtures(PathBuf);

impl Fixtures {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("torus-cosets-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Fixtures(dir)
    }

    fn put(&self, name: &str, body: &str) -> String {
        let path = self.0.join(name);
        std::fs::write(&path, body).unwrap();
        path.to_string_lossy().into_owned()
    }
}

impl Drop for Fixtures {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_torus-cosets"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

const G21: &str = r#"{"n":2,"entries":[["2","1"],["1","1"]]}"#;

#[test]
fn gauss_example() {
    let (code, out) = run(&["gauss", "-"], G21);
    assert_eq!(code, 0);
    let f: GaussFactors = serde_json::from_str(&out).unwrap();
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["v"]["entries"],
        serde_json::json!([["1", "0"], ["1/2", "1"]])
    );
    assert_eq!(v["t"]["diag"], serde_json::json!(["2", "1/2"]));
    assert_eq!(
        v["u"]["entries"],
        serde_json::json!([["1", "1/2"], ["0", "1"]])
    );
    assert_eq!(serde_json::to_string(&f).unwrap() + "\n", out);
}

#[test]
fn gauss_errors() {
    let (code, out) = run(&["gauss"], r#"{"n":2,"entries":[[0,1],[-1,0]]}"#);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"], "NotInBigCell");
    assert!(v["detail"].is_string());
    assert_eq!(run(&["gauss"], "[[1,2]").0, 1);
    let (code, out) = run(&["gauss"], r#"{"n":2,"entries":[["1","0"],["0","1"]]}"#);
    assert_eq!(code, 0);
    assert!(out.contains(r#""t":{"diag":["1","1"]}"#));
}

#[test]
fn factorizations_reparse() {
    let (code, out) = run(
        &["bruhat"],
        r#"{"n":3,"entries":[[0,1,0],[0,0,1],[1,0,0]]}"#,
    );
    assert_eq!(code, 0);
    let b: BruhatFactors = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&b).unwrap() + "\n", out);
    let (code, out) = run(&["nfactor"], G21);
    assert_eq!(code, 0);
    let f: NCellFactors = serde_json::from_str(&out).unwrap();
    assert_eq!(f.t.diag(), &["2".parse().unwrap(), "1/2".parse().unwrap()]);
    assert_eq!(f.point.upper, vec!["1/2".parse().unwrap()]);
    assert_eq!(f.point.lower, vec!["2".parse().unwrap()]);
}

#[test]
fn coset_examples() {
    let fx = Fixtures::new("coset");
    let w = fx.put("w.json", r#"{"n":2,"entries":[[0,-1],[1,0]]}"#);
    let g6 = fx.put("g6.json", r#"{"n":2,"entries":[["1","6"],["1","7"]]}"#);
    assert_eq!(run(&["coset", &w], "").1, "{\"tag\":\"origin\"}\n");
    assert_eq!(
        run(&["coset"], G21).1,
        "{\"tag\":\"coset\",\"alpha\":\"1\"}\n"
    );
    let (code, out) = run(&["coset", &g6], "");
    assert_eq!(code, 0);
    assert_eq!(out, "{\"tag\":\"coset\",\"alpha\":\"6\"}\n");
    let label: OrbitLabel = serde_json::from_str(&out).unwrap();
    assert_eq!(
        label,
        OrbitLabel::Coset {
            alpha: "6".parse().unwrap()
        }
    );
}

#[test]
fn tori_pair_example() {
    let fx = Fixtures::new("tori");
    let g2 = fx.put("g_2.json", r#"{"n":2,"entries":[["1","2"],["1","3"]]}"#);
    let e = fx.put("e.json", r#"{"diag":["1","1"]}"#);
    let (code, out) = run(&["tori-pair", &g2, &e], "");
    assert_eq!(code, 0);
    assert_eq!(out, "{\"tag\":\"coset\",\"alpha\":\"2\"}\n");
}

#[test]
fn ss_pair_example() {
    let fx = Fixtures::new("ss");
    let x = fx.put("X.json", r#"{"n":2,"entries":[["7/2","-3/2"],["3","-1"]]}"#);
    let tp = fx.put("tp.json", r#"{"diag":["3","1/3"]}"#);
    let t = fx.put("t.json", r#"{"diag":["2","1/2"]}"#);
    let (code, out) = run(&["ss-pair", &x, &tp, &t, &tp], "");
    assert_eq!(code, 0);
    assert_eq!(out, "{\"tag\":\"o_alpha\",\"alpha\":\"1\"}\n");
    let o: SemisimpleOrbit = serde_json::from_str(&out).unwrap();
    assert_eq!(
        o,
        SemisimpleOrbit::OAlpha {
            alpha: "1".parse().unwrap()
        }
    );
    // X taken from stdin, the rest from files
    assert_eq!(
        run(
            &["ss-pair", "-", &tp, &t, &tp],
            r#"{"n":2,"entries":[["7/2","-3/2"],["3","-1"]]}"#
        )
        .1,
        out
    );
    // a central torus is a domain error
    let e = fx.put("e.json", r#"{"diag":["1","1"]}"#);
    assert_eq!(run(&["ss-pair", &x, &tp, &e, &tp], "").0, 2);
}

#[test]
fn counterexample_preset() {
    let (code, out) = run(&["axioms-check", "--preset", "sl2-counterexample"], "");
    assert_eq!(code, 0);
    let report: AxiomReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.violations.len(), 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["violations"][0]["axiom"], "inverse");
    assert_eq!(v["violations"][0]["point"], serde_json::json!(["1", "1"]));
}

#[test]
fn axioms_presets_hold() {
    for preset in ["sl2-nhat", "sl2-closed"] {
        let (code, out) = run(
            &[
                "axioms-check",
                "--preset",
                preset,
                "--points",
                "10",
                "--depth",
                "3",
            ],
            "",
        );
        assert_eq!(code, 0, "{preset}");
        let report: AxiomReport = serde_json::from_str(&out).unwrap();
        assert!(report.violations.is_empty(), "{preset}: {out}");
    }
}

#[test]
fn outputs_are_byte_stable() {
    let fx = Fixtures::new("stable");
    let x = fx.put("X.json", r#"{"n":2,"entries":[["7/2","-3/2"],["3","-1"]]}"#);
    let tp = fx.put("tp.json", r#"{"diag":["3","1/3"]}"#);
    let t = fx.put("t.json", r#"{"diag":["2","1/2"]}"#);
    let commands: Vec<(Vec<&str>, &str)> = vec![
        (vec!["gauss"], G21),
        (vec!["bruhat"], G21),
        (vec!["nfactor"], G21),
        (vec!["coset"], G21),
        (vec!["ss-pair", &x, &tp, &t, &tp], ""),
        (
            vec![
                "axioms-check",
                "--preset",
                "sl2-counterexample",
                "--seed",
                "7",
            ],
            "",
        ),
        (
            vec!["axioms-check", "--preset", "nhat3", "--points", "3"],
            "",
        ),
    ];
    for (args, input) in commands {
        let first = run(&args, input);
        assert_eq!(first, run(&args, input), "{args:?}");
    }
    let a = run(
        &[
            "axioms-check",
            "--preset",
            "sl2-counterexample",
            "--seed",
            "7",
        ],
        "",
    )
    .1;
    let b = run(
        &[
            "axioms-check",
            "--preset",
            "sl2-counterexample",
            "--seed",
            "8",
        ],
        "",
    )
    .1;
    assert_ne!(a, b, "seed should change the sampled points");
}

#[test]
fn connect_reparses() {
    let fx = Fixtures::new("connect");
    let u1 = fx.put("u1.json", r#"{"alpha":"1","beta":"1"}"#);
    let n1 = fx.put("n1.json", r#"{"n":2,"entries":[[0,1],[-1,0]]}"#);
    let n2 = fx.put("n2.json", r#"{"diag":["1","1"]}"#);
    let (code, out) = run(&["connect", &u1, &n1, &n2], "");
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    let form: NhatNormalForm = serde_json::from_value(v["form"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&form).unwrap(), v["form"]);
}

#[test]
fn help_and_usage() {
    assert_eq!(run(&["--help"], "").0, 0);
    assert_eq!(run(&["no-such-command"], "").0, 1);
    assert_eq!(run(&["coset", "/nonexistent/file.json"], "").0, 1);
}
