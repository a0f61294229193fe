//! Generated-program invariants: the two evaluators agree, counts behave
//! like prefix sums, acceptance only reads a word's own prefix.

use crasp_core::testgen::{arb_program_and_word, arb_program_word_ext};
use crasp_core::{
    accepts, eval_bexp, eval_cexp, eval_rule, run_trace, BExp, CExp, Program, Rule, RuleBody,
    RuleRow, Value, Word,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Re-evaluating yields identical results (no hidden state).
    #[test]
    fn evaluation_is_deterministic((p, w) in arb_program_and_word(8)) {
        let a = accepts(&p, &w);
        let b = accepts(&p, &w);
        prop_assert_eq!(a, b);
    }

    /// Rule values at position j never depend on letters after j: evaluating
    /// on the word and on any extension agrees on the shared prefix.
    #[test]
    fn prefix_locality((p, w, ext) in arb_program_word_ext(8)) {
        let mut ids = w.ids().to_vec();
        ids.extend_from_slice(ext.ids());
        let longer = Word::from_ids(ids);
        for rule in &p.rules {
            for j in 1..=w.len() {
                let short = eval_rule(&p, &w, &rule.name, j);
                let long = eval_rule(&p, &longer, &rule.name, j);
                prop_assert_eq!(short, long, "rule {} at {}", rule.name, j);
            }
        }
    }

    /// A full count increases by exactly the body's truth value between
    /// consecutive positions.
    #[test]
    fn counting_is_a_prefix_sum((p, w) in arb_program_and_word(8)) {
        for rule in &p.rules {
            let body = match &rule.body {
                RuleBody::Count(CExp::CountAll(b)) => b,
                _ => continue,
            };
            let mut prev = 0i64;
            for j in 1..=w.len() {
                let here = eval_cexp(&p, &w, &CExp::count((**body).clone()), j).unwrap();
                let holds = eval_bexp(&p, &w, body, j).unwrap();
                prop_assert_eq!(here - prev, i64::from(holds));
                prev = here;
            }
        }
    }

    /// A window covering all positions so far equals the full count.
    #[test]
    fn saturated_window_matches_full_count((p, w) in arb_program_and_word(8)) {
        let body = BExp::letter(p.alphabet.symbol(0));
        for j in 1..=w.len() {
            let full = eval_cexp(&p, &w, &CExp::count(body.clone()), j).unwrap();
            let wide = eval_cexp(
                &p,
                &w,
                &CExp::window(0, (j - 1) as u32, body.clone()),
                j,
            )
            .unwrap();
            prop_assert_eq!(full, wide, "at position {}", j);
        }
    }

    /// Full counts are bounded by the position.
    #[test]
    fn counts_bounded_by_position((p, w) in arb_program_and_word(8)) {
        for rule in &p.rules {
            if !matches!(&rule.body, RuleBody::Count(CExp::CountAll(_))) {
                continue;
            }
            for j in 1..=w.len() {
                match eval_rule(&p, &w, &rule.name, j).unwrap() {
                    Value::Int(v) => {
                        prop_assert!(0 <= v && v <= j as i64);
                    }
                    Value::Bool(_) => prop_assert!(false, "count rule produced a Boolean"),
                }
            }
        }
    }

    /// The row evaluator agrees with the recursive one on every rule at
    /// every position.
    #[test]
    fn trace_matches_reference((p, w) in arb_program_and_word(8)) {
        let t = run_trace(&p, &w).unwrap();
        for rule in &p.rules {
            let row = t.row(&rule.name).unwrap();
            for j in 1..=w.len() {
                let expect = eval_rule(&p, &w, &rule.name, j).unwrap();
                let got = match row {
                    RuleRow::Bool(xs) => Value::Bool(xs[j - 1]),
                    RuleRow::Int(xs) => Value::Int(xs[j - 1]),
                };
                prop_assert_eq!(got, expect, "rule {} at {}", rule.name, j);
            }
        }
        prop_assert_eq!(
            t.accepted().unwrap(),
            accepts(&p, &w).unwrap()
        );
    }
}

/// Degenerate single-rule program still round-trips through both evaluators.
#[test]
fn smallest_program_runs() {
    let alphabet = crasp_core::Alphabet::of_chars("a").unwrap();
    let p = Program::new(alphabet.clone(), vec![Rule::bool_rule("Out", BExp::True)]);
    let w = alphabet.word_from_chars("aaa").unwrap();
    assert!(accepts(&p, &w).unwrap());
    assert!(run_trace(&p, &w).unwrap().accepted().unwrap());
}
