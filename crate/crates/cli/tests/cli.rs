//! Golden-file and exit-code tests for the `semikit` binary.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    run_with_cache(args, None)
}

fn run_with_cache(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_semikit"));
    cmd.current_dir(root()).args(args);
    match cache {
        Some(dir) => cmd.env("SEMIKIT_CACHE_DIR", dir),
        None => cmd.env_remove("SEMIKIT_CACHE_DIR"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str, args: &[&str], code: i32) {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: stderr {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = root().join("tests/golden").join(name);
    let got = stdout(&out);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{args:?} differs from {}", path.display());
}

#[test]
fn ideals_golden() {
    golden("ideals-boolean-squared.json", &["ideals", "data/boolean-squared.json"], 0);
    golden(
        "ideals-boolean-squared.txt",
        &["ideals", "data/boolean-squared.json", "--format", "text"],
        0,
    );
    golden("ideals-bni-4-2.txt", &["ideals", "data/bni-4-2.json", "--format", "text"], 0);
}

#[test]
fn classify_golden() {
    for name in ["e1", "e2", "n2", "full"] {
        golden(
            &format!("classify-{name}.json"),
            &["classify", &format!("data/gens-{name}.json")],
            0,
        );
    }
}

#[test]
fn chains_golden() {
    golden("chains-ngeq-desc.json", &["chains", "--kind", "ngeq-desc", "--depth", "10"], 0);
    golden("chains-ngeq-asc.txt", &["chains", "--kind", "ngeq-asc", "--depth", "10", "--format", "text"], 0);
    golden("chains-zplus.txt", &["chains", "--kind", "zplus", "--depth", "5", "--format", "text"], 0);
}

#[test]
fn emit_dot_golden() {
    golden("dot-boolean-squared.dot", &["emit-dot", "data/boolean-squared.json"], 0);
    golden("dot-boolean-zero.dot", &["emit-dot", "data/boolean-zero.json"], 0);
    golden("dot-boolean-cubed.dot", &["emit-dot", "data/boolean-cubed-semiring.json"], 0);
}

fn dot_counts(dot: &str) -> (usize, usize) {
    (
        dot.lines().filter(|l| l.contains("[label=")).count(),
        dot.lines().filter(|l| l.contains("->")).count(),
    )
}

#[test]
fn dot_shapes() {
    let square = stdout(&run(&["emit-dot", "data/boolean-squared.json"]));
    assert_eq!(dot_counts(&square), (4, 4));
    let trivial = stdout(&run(&["emit-dot", "data/boolean-zero.json"]));
    assert_eq!(dot_counts(&trivial), (1, 0));
    let cube = stdout(&run(&["emit-dot", "data/boolean-cubed-semiring.json"]));
    assert_eq!(dot_counts(&cube), (8, 12));
}

#[test]
fn ideals_of_boolean_square() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["ideals", "data/boolean-squared.json"]))).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(v["metrics"]["height"], 2);
}

#[test]
fn classify_e1_prints_the_family() {
    let out = run(&["classify", "data/gens-e1.json", "--format", "text"]);
    assert_eq!(stdout(&out).lines().next(), Some("E1"));
}

#[test]
fn chains_count_separations() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["chains", "--kind", "ngeq-desc", "--depth", "10"]))).unwrap();
    assert_eq!(v["separations"].as_array().unwrap().len(), 9);
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["axioms", "data/boolean.json"], 0),
        (&["axioms", "data/boolean-squared.json"], 0),
        (&["axioms", "data/not-distributive.json"], 1),
        (&["axioms", "data/bad-cell.json"], 2),
        (&["axioms", "data/missing.json"], 2),
        (&["axioms", "data/diagonal-sequence.json"], 2),
        (&["exact", "data/axis-sequence.json"], 0),
        (&["exact", "data/diagonal-sequence.json"], 1),
        (&["exact", "data/boolean.json"], 2),
        (&["summands", "data/boolean-squared.json"], 0),
        (&["injective", "data/boolean.json", "--relative-to", "data/boolean-squared.json"], 0),
        (&["classify", "data/gens-n2.json"], 0),
        (&["classify", "data/boolean.json"], 2),
        (&["chains", "--kind", "zplus", "--depth", "1"], 2),
        (&["ideals", "data/boolean-squared.json", "--cap-module", "2"], 2),
        (&["ideals", "data/boolean-squared.json", "--cap-hom", "0"], 2),
        (&["summands", "data/boolean.json", "--format", "dot"], 2),
    ];
    for (args, code) in cases {
        assert_eq!(run(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn structural_error_names_the_cell() {
    let out = run(&["axioms", "data/bad-cell.json"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("add[1][1]"), "{err}");
}

#[test]
fn failing_axiom_reports_a_witness() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["axioms", "data/not-distributive.json"]))).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["violations"][0]["axiom"], "left-distributivity");
    assert_eq!(v["violations"][0]["witness"], serde_json::json!([2, 1, 2]));
}

#[test]
fn diagonal_sequence_witness() {
    let out = run(&["exact", "data/diagonal-sequence.json", "--format", "text"]);
    assert!(stdout(&out).contains("(1,0) is in the kernel but not the image"));
}

#[test]
fn cache_hits_give_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["ideals", "data/boolean-cubed-semiring.json"];
    let cold = run_with_cache(&args, Some(dir.path()));
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let warm = run_with_cache(&args, Some(dir.path()));
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, run(&args).stdout);

    // a different cap is a different key
    run_with_cache(&["ideals", "data/boolean-cubed-semiring.json", "--cap-hom", "99"], Some(dir.path()));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);

    // a corrupt entry is recomputed
    for e in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(e.unwrap().path(), "not json").unwrap();
    }
    assert_eq!(run_with_cache(&args, Some(dir.path())).stdout, cold.stdout);
}

#[test]
fn out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lattice.dot");
    let out = run(&["emit-dot", "data/boolean-squared.json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        stdout(&run(&["emit-dot", "data/boolean-squared.json"]))
    );
}

#[test]
fn seed_is_respected_and_repeatable() {
    let a = run(&["classify", "data/gens-n2.json", "--seed", "7"]);
    let b = run(&["classify", "data/gens-n2.json", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}
