#![no_main]

use libfuzzer_sys::fuzz_target;
use spatch::io::{parse_trimmed, trimmed_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = parse_trimmed(text) {
        let again = parse_trimmed(&trimmed_to_json(&t)).expect("serialized patch reparses");
        assert_eq!(again.patch.control(), t.patch.control());
        assert_eq!(again.trim, t.trim);
        let _ = t.eval(0.5, 0.5);
    }
});
