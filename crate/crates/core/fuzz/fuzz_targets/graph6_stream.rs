#![no_main]

use libfuzzer_sys::fuzz_target;
use zfcore::graph6::{parse_catalog, read_records};

fuzz_target!(|data: &[u8]| {
    if let Ok(records) = read_records(data) {
        assert!(records.windows(2).all(|w| w[0].line < w[1].line));
        if let Ok(text) = std::str::from_utf8(data) {
            if let Ok(graphs) = parse_catalog(text) {
                assert_eq!(graphs.len(), records.len());
            }
        }
    }
});
