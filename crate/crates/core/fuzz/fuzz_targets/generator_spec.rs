#![no_main]

use libfuzzer_sys::fuzz_target;
use zfcore::families::Generator;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(gen) = text.parse::<Generator>() else {
        return;
    };
    let shown = gen.to_string();
    assert_eq!(
        shown.parse::<Generator>().expect("display output parses"),
        gen
    );
    // building large families is slow, not wrong; keep iterations fast
    let small = match &gen {
        Generator::FamilyOrder(n) => *n <= 14,
        Generator::FamilyBlocks { ns, m } => ns.len() + m <= 6,
        _ => true,
    };
    if small {
        if let Ok(graphs) = gen.graphs() {
            assert!(graphs.iter().all(|g| g.is_cubic() && g.is_connected()));
        }
    }
});
