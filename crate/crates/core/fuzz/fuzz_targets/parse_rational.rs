#![no_main]

use ladder_core::export::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

// Only canonical text is accepted, so anything that parses must print back
// to exactly the same bytes.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = parse_rational(text) {
        assert_eq!(format_rational(&v), text);
    }
});
