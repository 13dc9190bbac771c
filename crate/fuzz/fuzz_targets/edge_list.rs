#![no_main]

use libfuzzer_sys::fuzz_target;
use sconn::{find_complete_dicut, parse_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_edge_list(text) else {
        return;
    };
    assert_eq!(parse_edge_list(&g.to_edge_list()).as_ref(), Ok(&g));
    if g.n() <= 64 {
        let _ = find_complete_dicut(&g);
    }
});
