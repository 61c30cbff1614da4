#![no_main]

use ladder_core::export::parse_n_range;
use ladder_core::graph::MAX_LOAD_N;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_n_range(text) {
        assert!(r.start() <= r.end());
        assert!(*r.end() <= MAX_LOAD_N);
    }
});
