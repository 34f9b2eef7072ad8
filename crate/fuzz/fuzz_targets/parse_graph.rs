#![no_main]

use hierseg::EdgeWeightedGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = EdgeWeightedGraph::parse_text(text) {
        let again = EdgeWeightedGraph::parse_text(&g.to_text()).expect("serialized graph parses");
        assert_eq!(again.edges(), g.edges());
        if g.vertex_count() <= 4096 {
            let mst = hierseg::kruskal_mst(&g);
            hierseg::compute_hierarchy(&g, &mst);
        }
    }
});
