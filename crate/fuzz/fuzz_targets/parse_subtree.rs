#![no_main]

use firebreak::io::{emit_subtree, parse_subtree};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(rep) = parse_subtree(text) {
        assert_eq!(parse_subtree(&emit_subtree(&rep)).unwrap(), rep);
    }
});
