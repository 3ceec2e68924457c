use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        Self {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn file(&self, name: &str, contents: &str) -> &Self {
        std::fs::write(self.path(name), contents).unwrap();
        self
    }

    fn manifest(&self, json: &str) -> PathBuf {
        let p = self.path("manifest.json");
        std::fs::write(&p, json).unwrap();
        p
    }
}

fn run(manifest: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paretoq"))
        .args(args)
        .arg("--manifest")
        .arg(manifest)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn two_sets(f: &Fixture, a: &str, b: &str, objectives: &str, preferences: &str) -> PathBuf {
    f.file("a.csv", a).file("b.csv", b);
    f.manifest(&format!(
        r#"{{"objectives": {objectives},
            "algorithms": [{{"name": "A", "runs": ["a.csv"]}}, {{"name": "B", "runs": ["b.csv"]}}],
            "preferences": {preferences}}}"#
    ))
}

const F2: &str = r#"[{"name": "f1"}, {"name": "f2"}]"#;
const F3: &str = r#"[{"name": "f1"}, {"name": "f2"}, {"name": "f3"}]"#;

fn worked_pair(f: &Fixture) -> PathBuf {
    two_sets(f, "f1,f2\n2,6\n9,2\n", "f1,f2\n1,10\n7,5\n12,1.5\n", F2, "{}")
}

#[test]
fn worked_pair_hypervolume_with_explicit_reference() {
    let f = Fixture::new();
    let m = worked_pair(&f);
    let o = run(&m, &["evaluate", "--indicator", "HV", "--ref-point", "13,11", "--no-normalize"]);
    let out = stdout(&o);
    assert!(out.contains("  A: 71\n"), "{out}");
    assert!(out.contains("  B: 45.5\n"), "{out}");
    assert!(out.contains("explicit(13,11)"), "{out}");
    assert!(o.status.code().unwrap() < 2, "{out}");
}

#[test]
fn worked_pair_contribution_both_orderings() {
    let f = Fixture::new();
    let o = run(&worked_pair(&f), &["compare", "--indicator", "CI"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "  CI(A, B) = 0.4\n  CI(B, A) = 0.6\n");
}

#[test]
fn compare_edge_cases() {
    let f = Fixture::new();
    let m = two_sets(&f, "f1,f2\n1,3\n3,1\n", "f1,f2\n1,3\n3,1\n", F2, "{}");
    let out = stdout(&run(&m, &["compare", "--indicator", "EPS"]));
    assert_eq!(out, "  EPS(A, B) = 0\n  EPS(B, A) = 0\n");

    let f = Fixture::new();
    let m = two_sets(&f, "f1,f2\n1,1\n", "f1,f2\n2,3\n3,2\n", F2, "{}");
    let out = stdout(&run(&m, &["compare", "--indicator", "C"]));
    assert_eq!(out, "  C(A, B) = 1\n  C(B, A) = 0\n");
}

#[test]
fn compare_rejects_unary_indicators() {
    let f = Fixture::new();
    let o = run(&worked_pair(&f), &["compare", "--indicator", "HV"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a binary indicator"), "{}", stderr(&o));
}

#[test]
fn spread_on_three_objectives_exits_with_error() {
    let f = Fixture::new();
    let m = two_sets(&f, "f1,f2,f3\n1,2,3\n3,2,1\n", "f1,f2,f3\n2,2,2\n", F3, "{}");
    let o = run(&m, &["evaluate", "--indicator", "Spread"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("[error] L-SPREAD-DIM"), "{}", stdout(&o));
    let o = run(&m, &["lint", "--indicator", "Spread"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn knee_plan_uses_hv_and_igd_mismatch_is_reported() {
    let f = Fixture::new();
    let m = two_sets(&f, "f1,f2\n1,5\n3,3\n5,1\n", "f1,f2\n2,5\n4,4\n", F2, r#"{"roi": "knee"}"#);
    let o = run(&m, &["recommend"]);
    let out = stdout(&o);
    assert!(out.contains("    HV - D11:"), "{out}");
    assert!(out.contains("excluded: IGD (Issue V)"), "{out}");
    assert!(out.contains("lints: none"), "{out}");
    assert_eq!(o.status.code(), Some(0));

    let o = run(&m, &["lint", "--indicator", "IGD", "--indicator", "HV"]);
    let out = stdout(&o);
    assert!(out.contains("L-KNEE-MISMATCH"), "{out}");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&m, &["lint", "--indicator", "IGD", "--strict"]).status.code(), Some(2));
}

#[test]
fn empty_preferences_take_the_general_route() {
    let f = Fixture::new();
    let m = worked_pair(&f);
    let out = stdout(&run(&m, &["recommend"]));
    for needle in ["GD+ - D3", "Spread - D4", "UNFR - D5", "HV - D2"] {
        assert!(out.contains(needle), "missing {needle}:\n{out}");
    }
    let o = run(&m, &["evaluate"]);
    let out = stdout(&o);
    for section in ["\nGD+ [", "\nSpread [", "\nUNFR [", "\nHV ["] {
        assert!(out.contains(section), "missing {section}:\n{out}");
    }
    assert_eq!(o.status.code(), Some(0), "{out}");
}

#[test]
fn reports_are_byte_stable() {
    let f = Fixture::new();
    let m = worked_pair(&f);
    let read = |d: &str| {
        let out = f.path(d);
        let o = run(&m, &["evaluate", "--out", out.to_str().unwrap()]);
        assert!(o.status.code().unwrap() < 2);
        (
            std::fs::read(out.join("report.json")).unwrap(),
            std::fs::read(out.join("report.txt")).unwrap(),
        )
    };
    let (j1, t1) = read("one");
    let (j2, t2) = read("two");
    assert_eq!(j1, j2);
    assert_eq!(t1, t2);
    let v: serde_json::Value = serde_json::from_slice(&j1).unwrap();
    let hv = &v["indicators"].as_array().unwrap().iter().find(|s| s["indicator"] == "HV").unwrap();
    let snap = &hv["algorithms"][0]["runs"][0]["config_snapshot"];
    assert!(snap["reference_point"].is_array() && snap["config"]["hv_strategy"].is_string());
}

#[test]
fn scatter_data_of_the_median_hv_run() {
    let f = Fixture::new();
    f.file("a0.csv", "id,f1,f2\np,1,5\nq,5,1\n")
        .file("a1.csv", "id,f1,f2\np,2,6\nq,6,2\n")
        .file("a2.csv", "id,f1,f2\np,3,7\nq,7,3\n")
        .file("b.csv", "f1,f2\n4,4\n");
    let m = f.manifest(
        r#"{"objectives": [{"name": "f1"}, {"name": "f2"}],
            "algorithms": [{"name": "A", "runs": ["a0.csv", "a1.csv", "a2.csv"]},
                           {"name": "B", "runs": ["b.csv"]}],
            "output": {"plot_data": "plots"}}"#,
    );
    let o = run(&m, &["plot-data"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let a = std::fs::read_to_string(f.path("plots/A.csv")).unwrap();
    assert_eq!(a, "id,f1,f2\np,2.0,6.0\nq,6.0,2.0\n");
    assert!(f.path("plots/B.csv").exists());
}

#[test]
fn parallel_coordinates_for_many_objectives() {
    let f = Fixture::new();
    let objectives = r#"[{"name": "a"}, {"name": "b"}, {"name": "c"}, {"name": "d"}, {"name": "e"}]"#;
    let m = two_sets(&f, "a,b,c,d,e\n0,1,2,3,4\n4,3,2,1,0\n", "a,b,c,d,e\n2,2,2,2,2\n", objectives, "{}");
    let out = f.path("pc");
    let o = run(&m, &["plot-data", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(out.join("parallel_coordinates.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "set,id,objective,value");
    assert_eq!(lines.len(), 1 + 3 * 5);
    assert_eq!(lines[1], "A,1,a,0.0");
    assert_eq!(lines[5], "A,1,e,1.0");
}

#[test]
fn empty_after_screening_gives_empty_file_and_warning() {
    let f = Fixture::new();
    let prefs = r#"{"screening": [{"objective": 1, "kind": {"greater_than": 0.0}}]}"#;
    let objectives = r#"[{"name": "cost"}, {"name": "coverage", "direction": "maximize"}]"#;
    let m = two_sets(&f, "cost,coverage\n0,0\n", "cost,coverage\n1,0.5\n2,0.9\n", objectives, prefs);
    let out = f.path("plots");
    let o = run(&m, &["plot-data", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(std::fs::read_to_string(out.join("A.csv")).unwrap(), "cost,coverage\n");
    assert!(stderr(&o).contains("'A' has no evaluable run"), "{}", stderr(&o));
}

#[test]
fn csv_problems_are_reported_with_line_numbers() {
    let f = Fixture::new();
    let m = two_sets(&f, "f1,f2\n1,2\n1,2,3\n", "f1,f2\n1,1\n", F2, "{}");
    let o = run(&m, &["evaluate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3: expected 2 cells, found 3"), "{}", stderr(&o));

    let f = Fixture::new();
    let m = two_sets(&f, "f1,f2\n", "f1,f2\n1,1\n", F2, "{}");
    let o = run(&m, &["stats"]);
    assert!(stderr(&o).contains("'A' has no rows"), "{}", stderr(&o));
    assert!(stdout(&o).contains("A run 0 (0 solutions)\n  empty\n"), "{}", stdout(&o));
}

#[test]
fn unknown_manifest_fields_fail_fast() {
    let f = Fixture::new();
    f.file("a.csv", "f1,f2\n1,2\n");
    let m = f.manifest(r#"{"objectives": [{"name": "f1"}, {"name": "f2"}], "algorithms": [{"name": "A", "runs": ["a.csv"]}], "prefs": {}}"#);
    let o = run(&m, &["recommend"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown field `prefs`"), "{}", stderr(&o));
}

#[test]
fn stats_flag_means_that_contradict_dominance() {
    let f = Fixture::new();
    let m = two_sets(&f, "f1,f2\n1,1\n5,9\n9,5\n", "f1,f2\n2,6\n6,2\n4,4\n", F2, "{}");
    let out = stdout(&run(&m, &["stats"]));
    assert!(out.contains("  f1: mean 5 median 5 best 1 worst 9\n"), "{out}");
    assert!(
        out.contains("mean A vs B run 0: f1 B, f2 B (misleading: contradicts set dominance)"),
        "{out}"
    );
}

#[test]
fn lint_code_table_is_printed() {
    let o = Command::new(env!("CARGO_BIN_EXE_paretoq"))
        .args(["lint", "--codes"])
        .output()
        .unwrap();
    let out = stdout(&o);
    assert!(out.contains("L-SPREAD-DIM") && out.contains("L-KNEE-MISMATCH"), "{out}");
    assert_eq!(out.lines().count(), 10);
}

#[test]
fn best_value_plan_names_the_remaining_objective() {
    let f = Fixture::new();
    let objectives = r#"[{"name": "coverage", "direction": "maximize"}, {"name": "cost"}]"#;
    let prefs = r#"{"clear": [{"objective": 0, "kind": {"exactly_best": {"best": 1.0}}}]}"#;
    let m = two_sets(
        &f,
        "coverage,cost\n0.2,200\n1.0,450\n",
        "coverage,cost\n0.9,350\n1.0,500\n",
        objectives,
        prefs,
    );
    let out = stdout(&run(&m, &["evaluate"]));
    assert!(out.contains("objectives: coverage (maximize), cost (minimize)\n"), "{out}");
    assert!(out.contains("  evaluated objectives: cost\n"), "{out}");
    assert!(out.contains("best cost\n  A: 450\n  B: 500\n  winner: A\n"), "{out}");
}
