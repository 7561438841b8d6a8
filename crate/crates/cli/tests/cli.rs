use std::process::{Command, Output};

use serde_json::Value;

fn cactus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cactus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cactus(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).expect("valid JSON")
}

fn matrix(v: &Value) -> Vec<Vec<String>> {
    serde_json::from_value(v.clone()).unwrap()
}

fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

#[test]
fn equal_on_a2() {
    assert_eq!(stdout(&["equal", "g{s1} g{s1}", ""]), "true\n");
    assert_eq!(stdout(&["equal", "g{s1}", "g{s2}"]), "false\n");
    assert_eq!(json(&["equal", "g{s1} g{s1}", ""])["equal"], Value::Bool(true));
}

#[test]
fn fset_of_dihedral() {
    assert_eq!(stdout(&["--system", "I2(5)", "fset"]), "{a}\n{b}\n{a,b}\n");
    let v = json(&["fset", "--system", "A3"]);
    assert_eq!(v["family"].as_array().unwrap().len(), 6);
}

#[test]
fn rho_on_a2_at_two() {
    let v = json(&["rep", "rho", "--t", "2"]);
    assert_eq!(v["t"], "2");
    assert_eq!(v["basis"], serde_json::json!(["{s1}", "{s2}", "{s1,s2}"]));
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens[1]["generator"], "{s2}");
    assert_eq!(
        matrix(&gens[1]["matrix"]),
        strings(&[&["1", "0", "0"], &["4", "-1", "0"], &["0", "0", "1"]])
    );
    assert_eq!(
        matrix(&gens[2]["matrix"]),
        strings(&[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "-1"]])
    );
}

#[test]
fn rational_parameters_print_as_fractions() {
    let v = json(&["rep", "rho", "--t", "5/2"]);
    assert_eq!(v["t"], "5/2");
    assert_eq!(matrix(&v["generators"][1]["matrix"])[1][0], "5");
    let v = json(&["rep", "Pi", "--t", "1/3"]);
    assert!(v.to_string().contains("\"2/3\""));
}

#[test]
fn exit_codes() {
    assert_eq!(cactus(&["--t", "x/y", "fset"]).status.code(), Some(2));
    assert_eq!(cactus(&["nonsense"]).status.code(), Some(2));
    assert_eq!(cactus(&["--system", "Q7", "fset"]).status.code(), Some(2));
    assert_eq!(cactus(&["eval", "g{s1"]).status.code(), Some(2));

    let degenerate = cactus(&["rep", "rho", "--t", "1"]);
    assert_eq!(degenerate.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&degenerate.stderr).contains("degenerate form"));

    let infinite = cactus(&["--system", "I2(inf)", "sset"]);
    assert_eq!(infinite.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&infinite.stderr).contains("infinite"));

    assert_eq!(cactus(&["--system", "B3", "dict-a", "s_{1,2}"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "--system", "A3", "sset"][..],
        &["--system", "B3", "rep", "rho"],
        &["--system", "A3", "stable-lines", "Pi"],
    ] {
        assert_eq!(cactus(args).stdout, cactus(args).stdout);
    }
}

#[test]
fn sset_schema() {
    let v = json(&["sset"]);
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 4);
    assert_eq!(gens[0]["index"], 0);
    assert_eq!(gens[0]["order"], 2);
    assert_eq!(gens[3]["order"], 6);
    assert_eq!(gens[2]["elements"], serde_json::json!(["e", "s1 s2 s1"]));
    let m: Vec<Vec<u32>> = serde_json::from_value(v["matrix"].clone()).unwrap();
    assert_eq!(m, vec![vec![1, 0, 0, 2], vec![0, 1, 0, 2], vec![0, 0, 1, 2], vec![2, 2, 2, 1]]);
    assert_eq!(v["labels"].as_array().unwrap().len(), 4);
}

#[test]
fn eval_pure_and_normalize() {
    assert_eq!(stdout(&["eval", "g{s1,s2} g{s1}"]), "s1 s2\n");
    assert_eq!(stdout(&["pure", "g{s1} g{s1}"]), "true\n");
    assert_eq!(stdout(&["pure", "g{s1,s2}"]), "false\n");
    let id = json(&["normalize", "g{s1} g{s1}"]);
    assert_eq!(id["word"], serde_json::json!([]));
    assert_eq!(id["permutation"], serde_json::json!([0, 1, 2, 3]));
    let w = json(&["normalize", "g{s1,s2} g{s1} g{s1,s2}"]);
    let v = json(&["normalize", "g{s2}"]);
    assert_eq!(w["word"], v["word"]);
    assert_eq!(w["permutation"], v["permutation"]);
    assert_eq!(stdout(&["longest", "{s1,s2}"]), "s1 s2 s1\n");
}

#[test]
fn relations_and_stable_lines() {
    for sys in ["A2", "A3", "B3", "I2(5)"] {
        for rep in ["rho", "Pi"] {
            let v = json(&["--system", sys, "check-relations", rep]);
            assert_eq!(v["passed"], Value::Bool(true), "{sys} {rep}");
        }
    }
    let v = json(&["stable-lines", "Pi"]);
    let spaces = v["spaces"].as_array().unwrap();
    assert!(spaces
        .iter()
        .any(|s| s["basis"] == serde_json::json!([["1", "1", "-1", "0"]]) && s["signs"] == serde_json::json!([-1, -1, 1])));
}

#[test]
fn quotient_of_the_first_block() {
    let v = json(&[
        "quotient",
        "Pi",
        "--t",
        "2",
        "--within",
        "1,0,0,0;0,1,0,0;0,0,1,0",
        "--subspace",
        "1,1,-1,0",
    ]);
    let rho = json(&["rep", "rho", "--t", "5/2"]);
    for l in 0..2 {
        let q = matrix(&v["generators"][l]["matrix"]);
        let r = matrix(&rho["generators"][l]["matrix"]);
        let r2: Vec<Vec<String>> = r[..2].iter().map(|row| row[..2].to_vec()).collect();
        assert_eq!(q, r2);
    }
    assert_eq!(cactus(&["quotient", "--subspace", "1,0,0,0"]).status.code(), Some(1));
    assert_eq!(cactus(&["quotient", "--subspace", "1,0"]).status.code(), Some(2));
}

#[test]
fn diagram_is_dot() {
    let dot = stdout(&["diagram"]);
    assert!(dot.starts_with("graph commutation {"));
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn type_a_dictionary() {
    assert_eq!(
        stdout(&["--system", "A4", "dict-a", "s_{1,3}", "s_{2,4}"]),
        "s_{1,3} s_{2,4} = g{s1,s2} g{s2,s3}\n"
    );
    assert_eq!(
        stdout(&["--system", "A4", "dict-a", "g{s1,s2,s3,s4}"]),
        "s_{1,5} = g{s1,s2,s3,s4}\n"
    );
}

#[test]
fn enumeration_with_custom_family() {
    let v = json(&["--system", "I2(2)", "--family", "{a};{b};{a,b}", "--max-len", "5", "elements"]);
    assert_eq!(v["distinct"], 8);
    let v = json(&["--system", "I2(2)", "--max-len", "5", "elements"]);
    assert_eq!(v["distinct"], 4);
}

#[test]
fn gram_csv_and_reflection_rep() {
    let csv = stdout(&["gram", "rho", "--t", "3/2"]);
    assert_eq!(csv.lines().next().unwrap(), "label,{s1},{s2},\"{s1,s2}\"");
    assert_eq!(csv.lines().nth(1).unwrap(), "{s1},1,-3/2,0");
    let v = json(&["--system", "I2(inf)", "rep", "pi", "--t", "3/2"]);
    assert_eq!(matrix(&v["generators"][0]["matrix"])[0], vec!["-1", "3"]);
    let v = json(&["--system", "B2", "rep", "pi"]);
    assert!(matrix(&v["generators"][0]["matrix"])[0][1].contains("c(1,8)"));
}
