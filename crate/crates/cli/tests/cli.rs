//! End-to-end tests of the binary: JSON shapes, exit codes, input formats.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn chromastab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromastab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn chromastab_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromastab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

const BUTTERFLY: &str = "D{c";

#[test]
fn analyze_butterfly() {
    let out = chromastab(&["analyze", "--g6", BUTTERFLY]);
    let v = json(&out);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["es"], 2);
    assert_eq!(v["critical"], true);
    assert_eq!(v["kl"], serde_json::json!([3, 2]));
    assert_eq!(v["families"], serde_json::json!(["B"]));
    assert_eq!(v["odd_cycles"]["odd_count"], 2);
}

#[test]
fn analyze_c5_not_critical() {
    let out = chromastab(&["analyze", "--g6", "Dhc"]);
    let v = json(&out);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["es"], 1);
    assert_eq!(v["critical"], false);
    assert_eq!(v["kl"], serde_json::Value::Null);
}

#[test]
fn analyze_malformed_exits_2() {
    let out = chromastab(&["analyze", "--g6", "!!"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 0"));
}

#[test]
fn analyze_reads_edge_list_from_stdin() {
    let out = chromastab_stdin(&["analyze"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let v = json(&out);
    assert_eq!(v["graph6"], "Dhc");
    assert_eq!(v["chi"], 3);
}

#[test]
fn generate_family_a() {
    let out = chromastab(&["generate", "--family", "A", "--params", "1,1"]);
    let v = json(&out);
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 6);
    assert_eq!(v["family"], "A");
}

#[test]
fn generate_lengths_alias_and_lowercase_family() {
    let out = chromastab(&["generate", "--family", "c", "--lengths", "1,3,2,2"]);
    let v = json(&out);
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 8);
}

#[test]
fn generate_invalid_params_exit_2() {
    let out = chromastab(&["generate", "--family", "C", "--params", "1,1,2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parallel edge"));

    let out = chromastab(&["generate", "--family", "D", "--params", "1,1,1,1,1,1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = chromastab(&["generate", "--family", "E", "--params", "4:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_family_e_pairs() {
    let out = chromastab(&["generate", "--family", "E", "--params", "4:1,4:2"]);
    let v = json(&out);
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 8);
}

#[test]
fn recognize_expect_exit_codes() {
    let ok = chromastab(&["recognize", "--g6", BUTTERFLY, "--expect"]);
    assert_eq!(ok.status.code(), Some(0));

    let k4 = chromastab(&["recognize", "--g6", "C~", "--expect"]);
    assert_eq!(k4.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&k4.stdout).unwrap();
    assert_eq!(v["critical_32"], false);
}

#[test]
fn scan_small_census_verifies_theorems() {
    let out = chromastab(&["scan", "--max-n", "6", "--check", "theorem1", "--jobs", "2"]);
    let v = json(&out);
    assert_eq!(v["theorem1_holds"], true);
    // Unrequested checks stay null.
    assert_eq!(v["theorem5_holds"], serde_json::Value::Null);
    assert_eq!(v["orders"], serde_json::json!([2, 3, 4, 5, 6]));
}

#[test]
fn scan_stream_records_parse_errors() {
    let out = chromastab_stdin(&["scan"], "D{c\nnot-a-graph\u{7f}\nC~\n");
    let v = json(&out);
    assert_eq!(v["graphs_analyzed"], 2);
    assert_eq!(v["parse_errors"][0]["line"], 2);
}

#[test]
fn scan_csv_rows(){
    let dir = std::env::temp_dir().join("chromastab-cli-test-csv");
    let path = dir.join("rows.csv");
    std::fs::create_dir_all(&dir).unwrap();
    let out = chromastab_stdin(
        &["scan", "--csv", path.to_str().unwrap()],
        "D{c\n",
    );
    json(&out);
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graph6,n,m,chi,es,critical,k,l,odd_cycles,saturated,families"
    );
    assert_eq!(lines.next().unwrap(), "D{c,5,6,3,2,true,3,2,2,false,B");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn reduce_c5_with_triangle() {
    let out = chromastab(&["reduce", "--g6", "Dhc", "--vertex", "0", "--k", "3"]);
    let v = json(&out);
    assert_eq!(v["lhs"], true);
    assert_eq!(v["rhs"], true);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["clique_vertices"], serde_json::json!([0, 5, 6]));
}

#[test]
fn reduce_rejects_bad_parameters() {
    let out = chromastab(&["reduce", "--g6", "Dhc", "--vertex", "9", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chromastab(&["reduce", "--g6", "Dhc", "--vertex", "0", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subdivision_outputs_witness_or_absence() {
    let theta = chromastab(&["generate", "--family", "C", "--params", "1,3,2,2"]);
    let g6 = json(&theta)["graph6"].as_str().unwrap().to_string();
    let out = chromastab(&["subdivision", "--g6", &g6]);
    let v = json(&out);
    assert_eq!(v["found"], true);
    assert_eq!(v["pattern"], "K2_4");

    let none = chromastab(&["subdivision", "--g6", "E]~o"]); // some bipartite-ish graph
    let v = json(&none);
    // Whatever the answer, absence is not a failure.
    assert_eq!(none.status.code(), Some(0));
    assert!(v["found"].is_boolean());

    let c6 = chromastab(&["subdivision", "--g6", "EhEG"]);
    let v = json(&c6);
    assert_eq!(v["found"], false);
}

#[test]
fn byte_identical_output_for_identical_inputs() {
    let a = chromastab(&["analyze", "--g6", BUTTERFLY]);
    let b = chromastab(&["analyze", "--g6", BUTTERFLY]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn help_everywhere_unknown_flags_exit_2() {
    for sub in ["analyze", "generate", "recognize", "scan", "reduce", "subdivision"] {
        let help = chromastab(&[sub, "--help"]);
        assert_eq!(help.status.code(), Some(0), "{sub} --help");
        let unknown = chromastab(&[sub, "--no-such-flag"]);
        assert_eq!(unknown.status.code(), Some(2), "{sub} unknown flag");
    }
}

#[test]
fn scan_max_n_cap_is_enforced() {
    let out = chromastab(&["scan", "--max-n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6 stream"));
}
