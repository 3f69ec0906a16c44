#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = cyclohopf::parse_comodules(s, cyclohopf_fuzz::klein_host());
    }
});
