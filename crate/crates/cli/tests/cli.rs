use std::path::Path;
use std::process::{Command, Output};

use ladder_core::export::{matrix_to_json, parse_matrix_json};

fn ladders(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladders"))
        .args(args)
        .env_remove("LADDERS_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ladders(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn k2_qplus_bare_csv() {
    let args = [
        "generate", "--family", "ladder", "--n", "1", "--matrix", "qplus", "--format", "csv",
    ];
    assert_eq!(stdout(&[&args[..], &["--bare"]].concat()), "1/2,-1/2\n");
    assert_eq!(stdout(&args), ",u1+,u1-\nf1,1/2,-1/2\n");
}

#[test]
fn tree_table() {
    let out = stdout(&["trees", "--family", "cl", "--n", "3..4", "--format", "csv"]);
    assert_eq!(out, golden("trees_cl_3_4.csv"));
    let rows: Vec<Vec<&str>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(
        rows,
        [
            ["cl", "3", "75", "confirmed"],
            ["cl", "4", "384", "confirmed"]
        ]
    );
}

#[test]
fn mobius_verify_rows() {
    let out = ladders(&["verify", "--family", "mobius", "--n", "3..8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 6);
    for (row, n) in rows.iter().zip(3..) {
        assert_eq!(row["family"], "mobius");
        assert_eq!(row["n"], n);
        assert_eq!(row["passed"], true);
        assert!(row["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["passed"] == true));
    }
}

#[test]
fn golden_matrices() {
    let cases: [(&[&str], &str); 4] = [
        (
            &[
                "generate", "--family", "ladder", "--n", "2", "--matrix", "qplus",
            ],
            "ladder2_qplus.json",
        ),
        (
            &[
                "generate", "--family", "cl", "--n", "3", "--matrix", "qplus", "--format", "csv",
            ],
            "cl3_qplus.csv",
        ),
        (
            &[
                "generate",
                "--family",
                "mobius",
                "--n",
                "3",
                "--matrix",
                "resistance",
                "--format",
                "csv",
            ],
            "mobius3_resistance.csv",
        ),
        (
            &[
                "kirchhoff",
                "--family",
                "all",
                "--n",
                "2..3",
                "--format",
                "csv",
            ],
            "kirchhoff_2_3.csv",
        ),
    ];
    for (args, file) in cases {
        assert_eq!(stdout(args), golden(file), "{file}");
    }
}

#[test]
fn emitted_json_round_trips() {
    for (family, n) in [("ladder", "5"), ("cl", "4"), ("mobius", "5")] {
        for kind in ["qplus", "lplus", "resistance", "incidence", "laplacian"] {
            let text = stdout(&["generate", "--family", family, "--n", n, "--matrix", kind]);
            assert_eq!(
                matrix_to_json(&parse_matrix_json(&text).unwrap()),
                text,
                "{family} {n} {kind}"
            );
        }
    }
}

#[test]
fn scalars_and_edges() {
    let kf = stdout(&[
        "generate",
        "--family",
        "cl",
        "--n",
        "3",
        "--matrix",
        "kirchhoff",
        "--format",
        "csv",
        "--bare",
    ]);
    assert_eq!(kf, "47/5\n");
    let trees = stdout(&[
        "generate", "--family", "mobius", "--n", "4", "--matrix", "trees",
    ]);
    assert_eq!(
        trees,
        "{\"spec\":{\"family\":\"mobius\",\"n\":4},\"kind\":\"trees\",\"value\":\"392\"}\n"
    );
    let edges = stdout(&[
        "generate", "--family", "ladder", "--n", "2", "--matrix", "edges", "--format", "csv",
    ]);
    assert_eq!(edges.lines().count(), 1 + 4);
    assert!(edges.starts_with("edge,tail,head\n"));
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ladders"))
        .args(["trees", "--family", "ladder", "--n", "3"])
        .env("LADDERS_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "family,n,trees,oracle\nladder,3,15,confirmed\n"
    );
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("ladders-cli-test-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = stdout(&[
        "trees", "--family", "cl", "--n", "3..4", "--format", "csv", "--out", p,
    ]);
    assert!(out.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("trees_cl_3_4.csv")
    );
    std::fs::remove_file(path).unwrap();
}

#[test]
fn identities_pass() {
    let out = stdout(&["identities", "--n", "0..60", "--format", "csv"]);
    assert_eq!(out.lines().count(), 1 + 8);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
    let one = stdout(&["identities", "--n", "0..10", "--id", "split"]);
    assert_eq!(
        one,
        "{\"identity\":\"split\",\"n_min\":0,\"n_max\":10,\"cases\":66,\"passed\":true}\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    let bad: [&[&str]; 7] = [
        &["verify", "--n", "8..3"],
        &["verify", "--family", "cl", "--n", "1..4"],
        &["verify", "--family", "triangle", "--n", "3"],
        &[
            "generate", "--family", "all", "--n", "3", "--matrix", "qplus",
        ],
        &[
            "generate", "--family", "ladder", "--n", "2", "--matrix", "qplus", "--bare",
        ],
        &["identities", "--id", "nope"],
        &["frobnicate"],
    ];
    for args in bad {
        assert_eq!(ladders(args).status.code(), Some(2), "{args:?}");
    }
}
