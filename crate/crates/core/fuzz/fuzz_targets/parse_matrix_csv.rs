#![no_main]

use ladder_core::export::{matrix_to_csv, parse_matrix_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = parse_matrix_csv(text) {
        let emitted = matrix_to_csv(&m, false);
        let again = parse_matrix_csv(&emitted).expect("emitted CSV parses");
        assert_eq!(again, m);
    }
});
