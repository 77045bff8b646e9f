#![no_main]

use firebreak::io::{emit_gr, parse_gr};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(g) = parse_gr(text) {
        let canonical = emit_gr(&g);
        assert_eq!(parse_gr(&canonical).unwrap(), g);
    }
});
