//! Print/parse inversion over generated programs.

use crasp_core::testgen::arb_program;
use crasp_text::{parse_program, print_program};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// parse ∘ print is the identity on well-formed ASTs.
    #[test]
    fn parse_print_identity(p in arb_program()) {
        let text = print_program(&p);
        let back = parse_program(&text);
        prop_assert!(back.is_ok(), "failed to re-parse:\n{}\n{:?}", text, back);
        prop_assert_eq!(back.unwrap(), p, "text was:\n{}", text);
    }

    /// Printing is a fixed point after one round trip.
    #[test]
    fn print_is_canonical(p in arb_program()) {
        let once = print_program(&p);
        let twice = print_program(&parse_program(&once).unwrap());
        prop_assert_eq!(once, twice);
    }
}

/// Fuzzed input never panics: it parses or reports a located error.
#[test]
fn parser_is_total_on_junk() {
    let junk = [
        "",
        "\n\n\n",
        "program",
        "program p over {}",
        "program p over {'a'}\nbool Out :=",
        "program p over {'a'}\nbool Out := ((((",
        "program p over {'a'}\ncount C := #",
        "program p over {'a'}\nbool Out := 'a' = 'b'",
        "program p over {'a'}\nbool Out := if",
        "program p over {'a','a'}\nbool Out := true",
        "über 💥 nonsense",
        "program p over {'a'}\nbool Out := true\nbool Out := true",
    ];
    for text in junk {
        let _ = parse_program(text);
    }
}
