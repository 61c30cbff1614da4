#![no_main]

use ladder_core::export::{matrix_to_json, parse_matrix_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = parse_matrix_json(text) {
        let emitted = matrix_to_json(&doc);
        let again = parse_matrix_json(&emitted).expect("emitted JSON parses");
        assert_eq!(again, doc);
        assert_eq!(matrix_to_json(&again), emitted);
    }
});
