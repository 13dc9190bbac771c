#![no_main]

use libfuzzer_sys::fuzz_target;
use sconn::parse_certificate;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cert) = parse_certificate(text) {
        assert_eq!(parse_certificate(&cert.to_string()).as_ref(), Ok(&cert));
    }
});
