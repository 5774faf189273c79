#![no_main]

use libfuzzer_sys::fuzz_target;
use spatch::io::{parse_spatch, spatch_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_spatch(text) {
        let again = parse_spatch(&spatch_to_json(&s)).expect("serialized patch reparses");
        assert_eq!(again, s);
        let _ = s.eval_uv([0.5, 0.5]);
    }
});
