//! End-to-end tests of the installed binary: output formats, exit codes,
//! file round trips, backend agreement.

use std::path::Path;
use std::process::{Command, Output};

fn betti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betti"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn betti_expr_text_table() {
    let out = betti(&["betti", "--expr", "K4 #3 K4", "--max-k", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "k\tb_k\n0\t-1\n1\t0\n2\t1\n3\t0\n4\t0\n5\t0\n");
}

#[test]
fn betti_structured_record_shape() {
    let out = betti(&["betti", "--expr", "C5", "--format", "structured"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["kind"], "betti-vector");
    assert_eq!(record["n"], 5);
    assert_eq!(record["parameters"]["source"], "expr");
    assert_eq!(record["values"][3], "5");
    assert_eq!(record["provenance"]["backend"], "sweep");
    assert_eq!(record["provenance"]["seed"], "none");
    assert!(record["provenance"]["tool-version"].is_string());
}

#[test]
fn gen_minimal_stacked_is_simplex_boundary() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.cplx");
    let b = dir.path().join("b.cplx");
    let out = betti(&[
        "gen", "stacked", "--dim", "3", "--vertices", "4",
        "-o", a.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = betti(&["gen", "simplex", "--dim", "3", "-o", b.to_str().unwrap()]);
    assert!(out.status.success());

    let data = |p: &Path| -> Vec<String> {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(str::to_string)
            .collect()
    };
    assert_eq!(data(&a), data(&b));
    assert_eq!(data(&a).len(), 4);
}

#[test]
fn gen_metadata_flows_into_structured_output() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.graph");
    let out = betti(&[
        "gen", "tree", "--vertices", "9", "--shape", "random", "--seed", "31",
        "-o", file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = betti(&[
        "betti", "--input", file.to_str().unwrap(), "--format", "structured",
    ]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["parameters"]["generator"], "tree");
    assert_eq!(record["parameters"]["seed"], "31");
    assert_eq!(record["parameters"]["rng"], "splitmix64");
    assert_eq!(record["parameters"]["kind"], "graph");
    // any tree on 9 vertices: b_2 = (2-1)·C(8,2) = 28
    assert_eq!(record["values"][2], "28");
}

#[test]
fn sum_round_trips_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sum.cplx");
    let out = betti(&[
        "sum", "--expr", "simplex(3) #3 simplex(3)",
        "-o", file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.contains("# kind: complex"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 6);

    let out = betti(&["betti", "--input", file.to_str().unwrap()]);
    assert!(out.status.success());
    // bipyramid skeleton is K5 minus an edge: b_2 = 1
    assert!(stdout(&out).contains("2\t1\n"));
}

#[test]
fn hochster_text_table_for_bipyramid() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bi.cplx");
    assert!(betti(&[
        "gen", "stacked", "--dim", "3", "--vertices", "5",
        "-o", file.to_str().unwrap(),
    ])
    .status
    .success());
    let out = betti(&["hochster", "--input", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0].trim(), "0  1  2");
    assert_eq!(lines[1].trim(), "total:  1  2  1");
    // strands: (1,2) and (1,3) both 1, socle (2,5)
    assert!(text.contains("1:  .  1  ."));
    assert!(text.contains("2:  .  1  ."));
    assert!(text.contains("3:  .  .  1"));
}

#[test]
fn hochster_accepts_graph_files_as_one_dimensional_complexes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c4.graph");
    assert!(betti(&[
        "gen", "cycle", "--vertices", "4",
        "-o", file.to_str().unwrap(),
    ])
    .status
    .success());
    let out = betti(&[
        "hochster", "--input", file.to_str().unwrap(), "--format", "structured",
    ]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = record["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3); // (0,0,1), (1,2,2), (2,4,1)
    assert_eq!(entries[2]["i"], 2);
    assert_eq!(entries[2]["j"], 4);
    assert_eq!(entries[2]["value"], "1");
}

#[test]
fn hochster_structured_from_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_betti"))
        .args(["hochster", "--format", "structured"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"1 2\n2 3\n3 4\n1 4\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let record: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(record["kind"], "betti-table");
    assert_eq!(record["parameters"]["field"], "GF(2)");
    let entries = record["entries"].as_array().unwrap();
    // 4-cycle: (0,0,1), (1,2,2), (2,4,1)
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[1]["i"], 1);
    assert_eq!(entries[1]["j"], 2);
    assert_eq!(entries[1]["value"], "2");
}

#[test]
fn backends_give_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..10u64 {
        let file = dir.path().join(format!("t{seed}.graph"));
        assert!(betti(&[
            "gen", "tree", "--vertices", "8", "--seed", &seed.to_string(),
            "-o", file.to_str().unwrap(),
        ])
        .status
        .success());
        let sweep = betti(&["betti", "--input", file.to_str().unwrap(), "--backend", "sweep"]);
        let perk = betti(&["betti", "--input", file.to_str().unwrap(), "--backend", "per-k"]);
        assert!(sweep.status.success() && perk.status.success());
        assert_eq!(stdout(&sweep), stdout(&perk), "seed={seed}");
    }
    // thread counts do not change output either
    let expr = ["betti", "--expr", "K4 #3 K4 #3 K4"];
    let auto = betti(&expr);
    for threads in ["1", "2", "4"] {
        let run = betti(&[&expr[..], &["--threads", threads]].concat());
        assert_eq!(stdout(&auto), stdout(&run));
    }
}

#[test]
fn verify_suite_exits_zero_and_prints_per_trial() {
    let out = betti(&["verify", "theorem", "--trials", "3", "--seed", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("trial 001/3: pass"));
    assert!(text.contains("suite theorem: 3/3 passed"));
}

#[test]
fn verify_stacked_full_run_passes() {
    let out = betti(&["verify", "stacked", "--trials", "20", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with("suite stacked: 540/540 passed\n"), "{text}");
}

#[test]
fn verify_hibi_small_run_passes() {
    let out = betti(&[
        "verify", "hibi", "--max-vertices", "7", "--trials", "4", "--seed", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("structure d=3 n=5: pass"));
    assert!(text.contains("structure d=4 n=7: pass"));
    assert!(text.contains("linear strand trial 01/4: pass"));
}

#[test]
fn exit_codes_match_contract() {
    // 2: usage error (unknown flag, handled by the argument parser)
    let out = betti(&["betti", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: missing required input choice
    let out = betti(&["betti"]);
    assert_eq!(out.status.code(), Some(2));

    // 3: expression syntax error, with a byte offset
    let out = betti(&["betti", "--expr", "K4 ## K4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 4"));

    // 3: semantic gluing failure (no 5-clique in K4)
    let out = betti(&["betti", "--expr", "K4 #5 K4"]);
    assert_eq!(out.status.code(), Some(3));

    // 3: unreadable input file
    let out = betti(&["betti", "--input", "/definitely/not/here"]);
    assert_eq!(out.status.code(), Some(3));

    // 4: enumeration cap
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k25.graph");
    assert!(betti(&[
        "gen", "complete", "--vertices", "25",
        "-o", file.to_str().unwrap(),
    ])
    .status
    .success());
    let out = betti(&["betti", "--input", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn mixed_kind_expression_fails_cleanly() {
    let out = betti(&["betti", "--expr", "K4 #3 simplex(3)"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mixes"));
}
