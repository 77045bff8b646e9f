#![no_main]

use firebreak::intersection::permutation_graph;
use firebreak::io::{emit_perm, parse_perm};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(rep) = parse_perm(text) {
        assert_eq!(parse_perm(&emit_perm(&rep)).unwrap(), rep);
        if rep.n() <= 512 {
            permutation_graph(&rep).unwrap();
        }
    }
});
