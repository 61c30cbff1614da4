//! Replays the checked-in fuzz seeds through the same round-trip properties
//! the fuzz targets assert, so the seeds stay meaningful on stable.

use std::fs;
use std::path::PathBuf;

use ladder_core::export::{
    format_rational, matrix_to_csv, matrix_to_json, parse_matrix_csv, parse_matrix_json,
    parse_n_range, parse_rational,
};
use ladder_core::graph::parse_edge_list_json;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn rational_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("parse_rational") {
        if let Ok(v) = parse_rational(&text) {
            assert_eq!(format_rational(&v), text, "{name}");
            accepted += 1;
        }
    }
    assert!(accepted > 0);
}

#[test]
fn matrix_json_seeds() {
    for (name, text) in seeds("parse_matrix_json") {
        let doc = parse_matrix_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let emitted = matrix_to_json(&doc);
        assert_eq!(parse_matrix_json(&emitted).unwrap(), doc, "{name}");
    }
}

#[test]
fn matrix_csv_seeds() {
    for (name, text) in seeds("parse_matrix_csv") {
        let m = parse_matrix_csv(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(matrix_to_csv(&m, false), text, "{name}");
    }
}

#[test]
fn edge_list_seeds() {
    for (name, text) in seeds("parse_edge_list_json") {
        let g = parse_edge_list_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(format!("{}\n", g.to_edge_list_json()), text, "{name}");
    }
}

#[test]
fn n_range_seeds() {
    for (name, text) in seeds("parse_n_range") {
        match parse_n_range(&text) {
            Ok(r) => assert!(r.start() <= r.end(), "{name}"),
            Err(_) => assert_eq!(name, "reversed"),
        }
    }
}
