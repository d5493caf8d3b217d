use std::path::Path;
use std::process::{Command, Output};

use kampen_core::coincide::PLMap;
use kampen_core::simplicial::{k5, SimplicialComplex};
use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kampen"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn dualsw_of_rp4() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["dualsw", "--rp", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], "kampen.report/1");
    assert_eq!(r["results"]["D"], 7);
    assert_eq!(r["results"]["dual_bits"], "11110");
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn index_of_k5_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("k5.json"), k5().to_json()).unwrap();
    let out = run(dir.path(), &["index", "--complex", "k5.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["index"], 2);
    let out = run(dir.path(), &["index", "--complex", "k5.json", "--max-degree", "1"]);
    let r = report(&out);
    assert_eq!(r["results"]["index"], 1);
    assert_eq!(r["results"]["lower_bound_only"], true);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.json"), "{\"vertices\": [").unwrap();
    let out = run(dir.path(), &["index", "--complex", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    let out = run(dir.path(), &["index", "--complex", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(dir.path(), &["index", "--complex", "bad.json", "--mode", "sideways"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_facet_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let labels: Vec<String> = (0..30).map(|i| format!("v{i}")).collect();
    let file = serde_json::json!({ "vertices": labels, "facets": [labels] });
    std::fs::write(dir.path().join("big.json"), file.to_string()).unwrap();
    let out = run(dir.path(), &["index", "--complex", "big.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn negative_verdicts_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["fh", "--l", "1", "--m", "2", "--k", "3", "--r", "1", "--capD", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["results"]["admissible"], false);

    // t^3 is not divisible for RP^2 since D = 3.
    let out = run(dir.path(), &["division", "--rp", "2", "--m", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["results"]["witness"], Value::Null);

    std::fs::write(dir.path().join("k5.json"), k5().to_json()).unwrap();
    std::fs::write(
        dir.path().join("broken.json"),
        r#"{"kind":"explicit","sets":[[["0"],["1"],["2"],["3"],["4"]]]}"#,
    )
    .unwrap();
    let out = run(
        dir.path(),
        &["cover-check", "--complex", "k5.json", "--family", "broken.json", "--m", "2", "--r", "1"],
    );
    assert_eq!(out.status.code(), Some(1));
    let v = &report(&out)["results"]["violation"];
    assert_eq!(v["first"], serde_json::json!(["0", "1"]));
    assert_eq!(v["second"], serde_json::json!(["2", "3"]));
}

#[test]
fn emitted_files_reload_to_equal_values() {
    let dir = tempfile::tempdir().unwrap();
    for builtin in ["k5", "rp2", "sphere:3", "simplex:2"] {
        let out = run(dir.path(), &["complex", "--builtin", builtin, "--out", "c.json"]);
        assert_eq!(out.status.code(), Some(0));
        let written = SimplicialComplex::from_json(&std::fs::read_to_string(dir.path().join("c.json")).unwrap()).unwrap();
        let embedded: kampen_core::simplicial::ComplexFile =
            serde_json::from_value(report(&out)["results"]["complex"].clone()).unwrap();
        assert_eq!(SimplicialComplex::from_file(&embedded).unwrap(), written);
    }

    std::fs::write(dir.path().join("k5.json"), k5().to_json()).unwrap();
    let out = run(
        dir.path(),
        &["random-map", "--complex", "k5.json", "--dimension", "2", "--seed", "5", "--out", "p.json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("p.json")).unwrap();
    let map = PLMap::from_json(&text).unwrap();
    assert_eq!(map, kampen_core::coincide::random_plmap(&k5(), 2, 5, 16).unwrap());

    let out = run(dir.path(), &["coincide", "--complex", "k5.json", "--points", "p.json"]);
    assert_eq!(out.status.code(), Some(0));
    let k = k5();
    for w in report(&out)["results"]["witnesses"].as_array().unwrap() {
        let record = serde_json::from_value(w.clone()).unwrap();
        let witness = kampen_core::coincide::CoincidenceWitness::from_record(&k, &record).unwrap();
        assert!(witness.verify(&k, &map));
        assert_eq!(&serde_json::to_value(witness.to_record(&k)).unwrap(), w);
    }
}

#[test]
fn ktheory_table_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["ktheory", "--d", "1", "--f", "1", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["atiyah_bound"], 1);
    let gamma = r["results"]["gamma"].as_array().unwrap();
    assert_eq!(gamma.len(), 5);
    assert_eq!(gamma[0]["free"], "1");
}
