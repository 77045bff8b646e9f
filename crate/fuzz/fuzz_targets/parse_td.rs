#![no_main]

use firebreak::io::{emit_td, parse_td};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok((td, n)) = parse_td(text) {
        assert_eq!(parse_td(&emit_td(&td, n)).unwrap(), (td, n));
    }
});
