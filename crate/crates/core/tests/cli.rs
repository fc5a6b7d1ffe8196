use std::process::Command;

use serde_json::Value;

fn hamsym(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hamsym"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = hamsym(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_two_strata() {
    let v = json(&[
        "classify", "--a", "1", "--b", "1", "--m", "2", "--lambda", "2",
    ]);
    assert_eq!(v["homotopy_type"], "OmegaS3xT3");
    assert_eq!(v["manifold"], "S2xS2");
    let mut strata: Vec<(u64, u64)> = v["strata"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["s"].as_u64().unwrap(), s["codim"].as_u64().unwrap()))
        .collect();
    strata.sort();
    assert_eq!(strata, vec![(0, 0), (2, 1)]);
}

#[test]
fn classify_table_row() {
    let v = json(&[
        "classify", "--a", "0", "--b", "1", "--m", "4", "--lambda", "3",
    ]);
    assert_eq!(v["homotopy_type"], "S1xSO3");
    assert_eq!(v["strata"].as_array().unwrap().len(), 1);
    assert_eq!(v["strata"][0]["s"], 4);
}

#[test]
fn classify_rejects_non_effective_and_out_of_range() {
    let (code, _, err) = hamsym(&[
        "classify", "--a", "2", "--b", "4", "--m", "2", "--lambda", "2",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("non-effective action"), "{err}");
    let (code, _, err) = hamsym(&[
        "classify", "--a", "1", "--b", "1", "--m", "3", "--lambda", "2",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("lambda - k - 1 > 0"), "{err}");
    let (code, _, _) = hamsym(&[
        "classify", "--a", "1", "--b", "1", "--m", "2", "--lambda", "1.5",
    ]);
    assert_eq!(code, 2);
    let (code, _, err) = hamsym(&["classify", "--a", "1", "--b", "1", "--m", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("--lambda"), "{err}");
}

#[test]
fn report_output_is_stable() {
    let args = [
        "classify", "--a", "-1", "--b", "2", "--m", "3", "--lambda", "7/2",
    ];
    let first = hamsym(&args).1;
    for _ in 0..3 {
        assert_eq!(hamsym(&args).1, first);
    }
}

#[test]
fn pretty_classify_is_text() {
    let (code, out, _) = hamsym(&[
        "--pretty", "classify", "--a", "1", "--b", "1", "--m", "2", "--lambda", "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("homotopy type OmegaS3xT3"));
}

#[test]
fn graph_dot_for_template_a() {
    let (code, out, _) = hamsym(&[
        "graph", "--a", "1", "--b", "0", "--m", "2", "--lambda", "2", "--format", "dot",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("label=\"μ=0, A=1\""), "{out}");
    assert!(out.contains("[label=\"2\"]"), "{out}");
    assert_eq!(
        hamsym(&["graph", "--a", "1", "--b", "0", "--m", "2", "--lambda", "2", "--format", "dot"])
            .1,
        out
    );
}

#[test]
fn graph_tikz_and_json() {
    let (code, out, _) = hamsym(&[
        "graph", "--a", "1", "--b", "1", "--m", "2", "--lambda", "2", "--format", "tikz",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("tikzpicture"));
    let v = json(&["graph", "--a", "1", "--b", "1", "--m", "2", "--lambda", "2"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);
}

#[test]
fn canonical_graphs_of_reflected_actions_agree() {
    let a = hamsym(&[
        "graph",
        "--a",
        "-1",
        "--b",
        "0",
        "--m",
        "2",
        "--lambda",
        "2",
        "--canonical",
    ]);
    let b = hamsym(&[
        "graph",
        "--a",
        "1",
        "--b",
        "0",
        "--m",
        "2",
        "--lambda",
        "2",
        "--canonical",
    ]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn equiv_reports_witness() {
    let v = json(&[
        "equiv", "--a1", "1", "--b1", "1", "--m1", "2", "--a2", "-1", "--b2", "-1", "--m2", "2",
        "--lambda", "2",
    ]);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["witness"], "reparametrization");
    let v = json(&[
        "equiv", "--a1", "1", "--b1", "1", "--m1", "2", "--a2", "1", "--b2", "1", "--m2", "0",
        "--lambda", "2",
    ]);
    assert_eq!(v["equivalent"], true);
    let v = json(&[
        "equiv", "--a1", "1", "--b1", "0", "--m1", "2", "--a2", "0", "--b2", "1", "--m2", "2",
        "--lambda", "2",
    ]);
    assert_eq!(v["equivalent"], false);
    assert!(v["witness"].is_null());
    let (code, _, _) = hamsym(&[
        "equiv", "--a1", "1", "--b1", "0", "--m1", "2", "--a2", "1", "--b2", "0", "--m2", "1",
        "--lambda", "2",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn extensions_and_codim() {
    let v = json(&[
        "extensions",
        "--a",
        "1",
        "--b",
        "1",
        "--m",
        "2",
        "--lambda",
        "2",
    ]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
    let v = json(&[
        "codim", "--a", "1", "--b", "1", "--m", "2", "--lambda", "2", "--s", "2",
    ]);
    assert_eq!(v["codim"], 1);
    let (code, _, _) = hamsym(&[
        "codim", "--a", "1", "--b", "1", "--m", "2", "--lambda", "2", "--s", "4",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn ranks_and_presentation() {
    let v = json(&["ranks", "--type", "OmegaS3xT3", "--max-degree", "4"]);
    assert_eq!(v, serde_json::json!([1, 3, 4, 4, 4]));
    let v = json(&["presentation", "--char", "2"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    assert!(v["relations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r == "uv = vu"));
    let (code, _, _) = hamsym(&["presentation", "--char", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn sweep_examples() {
    for check in ["strata-count", "extension-soundness", "localization-sum"] {
        let (code, out, _) = hamsym(&[
            "sweep",
            "--max-ab",
            "6",
            "--max-m",
            "6",
            "--lambdas",
            "3/2,2,5/2,3",
            "--checks",
            check,
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains(&format!("{check}: ")), "{out}");
        assert!(
            out.contains("total: ") && out.contains(" 0 failures"),
            "{out}"
        );
    }
    let (code, _, err) = hamsym(&["sweep", "--checks", "nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonsense"), "{err}");
}
