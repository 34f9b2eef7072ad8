#![no_main]

use hierseg::oracle::Counterexample;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cx) = Counterexample::parse_text(text) {
        let again = Counterexample::parse_text(&cx.to_text()).expect("serialized document parses");
        assert_eq!(again.edges, cx.edges);
        assert_eq!(again.partitions, cx.partitions);
        if cx.vertex_count <= 4096 && cx.edges.len() <= 4096 {
            cx.replay();
        }
    }
});
