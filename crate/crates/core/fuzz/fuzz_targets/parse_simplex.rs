#![no_main]

use libfuzzer_sys::fuzz_target;
use spatch::io::{parse_simplex, simplex_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_simplex(text) {
        let again = parse_simplex(&simplex_to_json(&s)).expect("serialized simplex reparses");
        assert_eq!(again, s);
    }
});
