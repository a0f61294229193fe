//! Randomized invariants: every generated program translates to a node that
//! validates, stays linear in size, agrees with the reference evaluator,
//! and survives the emit/parse round trip.

use crasp2lustre::{
    build_unit, emit_lustre_text, encode_word, parse_lustre_node, CheckKind,
    TranslateOptions,
};
use crasp_core::testgen::{arb_program, arb_program_and_word};
use crasp_core::{accepts, ast_size};
use lustre_core::{lval_run, validate_node};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn translated_nodes_validate((p, _) in arb_program_and_word(4)) {
        let unit = build_unit(&p, None, CheckKind::Universality, &TranslateOptions::default())
            .unwrap();
        validate_node(&unit.node).unwrap();
    }

    #[test]
    fn translation_is_linear(p in arb_program()) {
        let unit = build_unit(&p, None, CheckKind::Emptiness, &TranslateOptions::default())
            .unwrap();
        // Two guard equations, the check, and at most two equations per
        // body node (indicator + accumulator).
        prop_assert!(unit.node.equations.len() <= 2 * ast_size(&p) + 4);
    }

    #[test]
    fn node_agrees_with_the_evaluator((p, w) in arb_program_and_word(8)) {
        prop_assume!(!w.is_empty());
        let unit = build_unit(&p, None, CheckKind::Universality, &TranslateOptions::default())
            .unwrap();
        let stream = encode_word(&unit.codec, &w, w.len() + 2).unwrap();
        let trace = lval_run(&unit.node, &stream).unwrap();
        let lustre = trace.bool_values(&unit.acceptors[0]).unwrap()[w.len() - 1];
        prop_assert_eq!(lustre, accepts(&p, &w).unwrap());
    }

    #[test]
    fn emitted_text_reparses((p, _) in arb_program_and_word(4)) {
        let unit = build_unit(&p, None, CheckKind::Universality, &TranslateOptions::default())
            .unwrap();
        let parsed = parse_lustre_node(&emit_lustre_text(&unit)).unwrap();
        prop_assert_eq!(parsed, unit.node);
    }
}
