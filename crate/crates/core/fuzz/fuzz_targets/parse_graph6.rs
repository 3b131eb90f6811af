#![no_main]

use libfuzzer_sys::fuzz_target;
use zfcore::{parse_graph6, write_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph6(text) {
        if g.order() > 0 {
            let again = write_graph6(&g).expect("parsed graphs are writable");
            assert_eq!(parse_graph6(&again).expect("written graph6 parses"), g);
        }
    }
});
