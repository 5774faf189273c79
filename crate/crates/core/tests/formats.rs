use proptest::prelude::*;

use spatch::convert::convert;
use spatch::io::{parse_simplex, parse_spatch, parse_trimmed, simplex_to_json, spatch_to_json, trimmed_to_json};
use spatch::sampling::random_spatch;
use spatch::simplex::BezierSimplex;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn documents_round_trip(n in 3usize..=6, d in 1u32..=3, seed in any::<u64>()) {
        let s = random_spatch(n, d, seed).unwrap();
        prop_assert_eq!(&parse_spatch(&spatch_to_json(&s)).unwrap(), &s);

        let t = convert(&s).unwrap();
        let back = parse_trimmed(&trimmed_to_json(&t)).unwrap();
        prop_assert_eq!(back.patch.control(), t.patch.control());
        prop_assert_eq!(back.trim, t.trim);

        let h = s.homogenize();
        prop_assert_eq!(parse_simplex(&simplex_to_json(&h)).unwrap(), h);
    }

    #[test]
    fn arbitrary_text_never_panics(text in ".{0,200}") {
        let _ = parse_spatch(&text);
        let _ = parse_simplex(&text);
        let _ = parse_trimmed(&text);
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let s = BezierSimplex::from_fn(2, 1, 1, |_| vec![0.0]).unwrap();
    let text = simplex_to_json(&s).replacen('{', r#"{"extra":1,"#, 1);
    assert!(parse_simplex(&text).is_err());
}

#[test]
fn fuzz_seeds_parse_or_fail_cleanly() {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus");
    let mut seen = 0;
    for (target, parse) in [
        ("parse_spatch", (|t: &str| parse_spatch(t).is_ok()) as fn(&str) -> bool),
        ("parse_simplex", |t| parse_simplex(t).is_ok()),
        ("parse_trimmed", |t| parse_trimmed(t).is_ok()),
    ] {
        for entry in std::fs::read_dir(root.join(target)).unwrap() {
            let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
            parse(&text);
            seen += 1;
        }
    }
    assert!(seen >= 3);
}
