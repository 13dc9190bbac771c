#![no_main]

use libfuzzer_sys::fuzz_target;
use sconn::{is_balanced, parse_dice, WinMatrix};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(d) = parse_dice(text) else {
        return;
    };
    assert_eq!(parse_dice(&d.to_string()).as_ref(), Ok(&d));
    if d.len() <= 32 && d.sides() <= 64 {
        let _ = WinMatrix::of(&d);
        let _ = is_balanced(&d);
    }
});
