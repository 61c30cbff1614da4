#![no_main]

use ladder_core::graph::parse_edge_list_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_edge_list_json(text) {
        let again = parse_edge_list_json(&g.to_edge_list_json()).expect("emitted edge list parses");
        assert_eq!(again, g);
        assert!(g.is_connected());
    }
});
