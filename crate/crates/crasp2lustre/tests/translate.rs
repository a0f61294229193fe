//! Translation correctness: word encoding, input guards, fragment shape,
//! and agreement between the reference evaluator and the translated node.

use crasp2lustre::{
    build_unit, decode_word, encode_word, translate_program, translate_program_with,
    CheckKind, EncodeError, SymbolCodec, TranslateError, TranslateOptions, TranslationUnit,
    PREFIX_OK, SYM_OK,
};
use crasp_core::{accepts, ast_size, Alphabet, BExp, CExp, Program, Rule, Word};
use lustre_core::{bounded_check, lval_run, validate_node, CheckOutcome, LExpr, LInt};

fn brackets() -> Alphabet {
    Alphabet::of_chars("[]").unwrap()
}

/// Bracket matching: left-count, right-count, a violation flag, and the
/// deciding rule (no violation ever, counts balanced).
fn dyck1() -> Program {
    let ab = brackets();
    Program::new(
        ab,
        vec![
            Rule::count_rule("Cl", CExp::count(BExp::letter("["))),
            Rule::count_rule("Cr", CExp::count(BExp::letter("]"))),
            Rule::bool_rule("V", BExp::lt(CExp::cref("Cl"), CExp::cref("Cr"))),
            Rule::bool_rule(
                "D",
                BExp::and(
                    BExp::eq(CExp::count(BExp::bref("V")), CExp::num(0)),
                    BExp::eq(CExp::cref("Cl"), CExp::cref("Cr")),
                ),
            ),
        ],
    )
}

/// Equal numbers of each bracket, matching not required.
fn balance() -> Program {
    Program::new(
        brackets(),
        vec![Rule::bool_rule(
            "E",
            BExp::eq(
                CExp::count(BExp::letter("[")),
                CExp::count(BExp::letter("]")),
            ),
        )],
    )
}

fn trivial_true(ab: Alphabet) -> Program {
    Program::new(ab, vec![Rule::bool_rule("T", BExp::True)])
}

// ---- codec ----

#[test]
fn encoding_appends_marker_then_padding() {
    let codec = SymbolCodec::new(&brackets());
    let w = brackets().word_from_chars("[]").unwrap();
    assert_eq!(encode_word(&codec, &w, 5).unwrap(), vec![0, 1, 2, 3, 3]);
    // Tight fit: letters plus the marker, no padding.
    let one = brackets().word_from_chars("]").unwrap();
    assert_eq!(encode_word(&codec, &one, 2).unwrap(), vec![1, 2]);
}

#[test]
fn encoding_rejects_bad_sizes() {
    let codec = SymbolCodec::new(&brackets());
    let w = brackets().word_from_chars("[]").unwrap();
    assert_eq!(
        encode_word(&codec, &w, 2),
        Err(EncodeError::TotalTooShort { n_total: 2, len: 2 })
    );
    let empty = Word::from_ids(vec![]);
    assert_eq!(encode_word(&codec, &empty, 3), Err(EncodeError::EmptyWord));
}

#[test]
fn decoding_inverts_encoding() {
    let ab = Alphabet::new(["a", "b", "c"]).unwrap();
    let codec = SymbolCodec::new(&ab);
    for w in ab.words_up_to(5) {
        let stream = encode_word(&codec, &w, w.len() + 3).unwrap();
        assert_eq!(decode_word(&codec, &stream).unwrap(), w);
    }
}

#[test]
fn decoding_rejects_unknown_codes() {
    let codec = SymbolCodec::new(&brackets());
    assert!(decode_word(&codec, &[0, 7, 2]).is_err());
}

// ---- input guards ----

fn guard_node() -> lustre_core::LustreNode {
    let codec = SymbolCodec::new(&brackets());
    lustre_core::LustreNode {
        name: "guards".into(),
        bool_locals: vec![SYM_OK.into(), PREFIX_OK.into()],
        int_locals: vec![],
        equations: crasp2lustre::build_input_guard(&codec),
        check: lustre_core::LBool::True,
    }
}

#[test]
fn guards_accept_a_proper_encoding() {
    let node = guard_node();
    validate_node(&node).unwrap();
    // "[]" then marker then padding twice.
    let trace = lval_run(&node, &[0, 1, 2, 3, 3]).unwrap();
    assert_eq!(
        trace.bool_values(PREFIX_OK).unwrap(),
        &[true, true, true, true, true]
    );
}

#[test]
fn guards_reject_malformed_streams() {
    let node = guard_node();
    // Padding first: sym_ok already false at position 0.
    let trace = lval_run(&node, &[3, 0, 2]).unwrap();
    assert_eq!(trace.bool_values(PREFIX_OK).unwrap(), &[false, false, false]);
    // Letter after the end marker: fine until the letter.
    let trace = lval_run(&node, &[0, 2, 1, 3]).unwrap();
    assert_eq!(
        trace.bool_values(PREFIX_OK).unwrap(),
        &[true, true, false, false]
    );
    // Out-of-range code.
    let trace = lval_run(&node, &[9, 2, 3]).unwrap();
    assert!(!trace.bool_values(PREFIX_OK).unwrap()[0]);
}

// ---- fragment shape ----

#[test]
fn bracket_program_compiles_to_eight_equations() {
    let codec = SymbolCodec::new(&brackets());
    let frag = translate_program(&dyck1(), &codec).unwrap();
    // Two per whole-body count (indicator + accumulating rule), one for the
    // comparison rule, three for the rule whose count sits under a
    // comparison (indicator, accumulator, rule).
    assert_eq!(frag.equations.len(), 8);
    assert_eq!(frag.acceptor, "p1_D");
    assert_eq!(frag.rule_vars.len(), 4);
    assert!(frag.rule_vars.values().all(|v| v.starts_with("p1_")));
}

#[test]
fn whole_body_count_rule_is_its_own_accumulator() {
    let codec = SymbolCodec::new(&brackets());
    let frag = translate_program(&dyck1(), &codec).unwrap();
    let cl = frag
        .equations
        .iter()
        .find(|eq| eq.var == "p1_Cl")
        .expect("rule variable for Cl");
    // Cl = n -> pre (Cl) + n, for the indicator n of `[`.
    match &cl.body {
        LExpr::Int(LInt::Arrow(init, step)) => {
            assert!(matches!(**init, LInt::Var(_)));
            assert!(matches!(**step, LInt::Add(..)));
        }
        other => panic!("expected an initialized accumulator, got {other:?}"),
    }
}

#[test]
fn window_sums_shifted_indicators() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let p = Program::new(
        ab,
        vec![
            Rule::count_rule("W", CExp::window(1, 1, BExp::letter("a"))),
            Rule::bool_rule("Out", BExp::eq(CExp::cref("W"), CExp::num(1))),
        ],
    );
    let codec = SymbolCodec::new(&p.alphabet);
    let frag = translate_program(&p, &codec).unwrap();
    let w = frag.equations.iter().find(|eq| eq.var == "p1_W").unwrap();
    // One step of offset: 0 -> pre (n).
    match &w.body {
        LExpr::Int(LInt::Arrow(init, shifted)) => {
            assert_eq!(**init, LInt::Const(0));
            assert!(matches!(**shifted, LInt::Pre(_)));
        }
        other => panic!("expected a shifted indicator, got {other:?}"),
    }
}

#[test]
fn wide_windows_are_refused() {
    let ab = Alphabet::of_chars("a").unwrap();
    let p = Program::new(
        ab,
        vec![
            Rule::count_rule("W", CExp::window(0, 65, BExp::letter("a"))),
            Rule::bool_rule("Out", BExp::eq(CExp::cref("W"), CExp::num(0))),
        ],
    );
    let codec = SymbolCodec::new(&p.alphabet);
    let err = translate_program(&p, &codec).unwrap_err();
    assert_eq!(err, TranslateError::WindowTooWide { re: 65, max: 64 });
    // The same program passes with a wider limit.
    let opts = TranslateOptions { max_window: 65 };
    assert!(translate_program_with(&p, &codec, "p1", &opts).is_ok());
}

#[test]
fn rule_named_pos_does_not_collide_with_the_counter() {
    let ab = Alphabet::of_chars("a").unwrap();
    let p = Program::new(
        ab,
        vec![
            Rule::count_rule("pos", CExp::count(BExp::letter("a"))),
            Rule::bool_rule("Out", BExp::periodic(2, 0)),
        ],
    );
    let codec = SymbolCodec::new(&p.alphabet);
    let frag = translate_program(&p, &codec).unwrap();
    let vars: Vec<&str> = frag.int_vars.iter().map(|s| s.as_str()).collect();
    // The rule claimed `p1_pos`; the position counter picked a fresh name.
    assert!(vars.contains(&"p1_pos"));
    assert!(vars.iter().filter(|v| v.starts_with("p1_pos")).count() >= 2);
    let node_ok = lustre_core::LustreNode {
        name: "frag".into(),
        bool_locals: frag.bool_vars.clone(),
        int_locals: frag.int_vars.clone(),
        equations: frag.equations.clone(),
        check: lustre_core::LBool::True,
    };
    validate_node(&node_ok).unwrap();
}

#[test]
fn fragments_share_only_the_input() {
    let unit = build_unit(
        &dyck1(),
        Some(&balance()),
        CheckKind::Inclusion,
        &TranslateOptions::default(),
    )
    .unwrap();
    for eq in &unit.node.equations {
        let vars = equation_vars(&eq.body);
        if eq.var.starts_with("p1_") {
            assert!(
                vars.iter().all(|v| v == "I" || v.starts_with("p1_") || v == SYM_OK || v == PREFIX_OK),
                "{} references {vars:?}",
                eq.var
            );
        }
        if eq.var.starts_with("p2_") {
            assert!(
                vars.iter().all(|v| v == "I" || v.starts_with("p2_")),
                "{} references {vars:?}",
                eq.var
            );
        }
    }
}

fn equation_vars(body: &LExpr) -> Vec<String> {
    fn boolv(e: &lustre_core::LBool, out: &mut Vec<String>) {
        use lustre_core::LBool::*;
        match e {
            True | False => {}
            Var(v) => out.push(v.clone()),
            Not(a) | Pre(a) => boolv(a, out),
            And(a, b) | Or(a, b) | Arrow(a, b) => {
                boolv(a, out);
                boolv(b, out);
            }
            Cmp(a, _, b) => {
                intv(a, out);
                intv(b, out);
            }
        }
    }
    fn intv(e: &LInt, out: &mut Vec<String>) {
        use lustre_core::LInt::*;
        match e {
            Const(_) => {}
            Var(v) => out.push(v.clone()),
            Pre(a) | Mod(a, _) => intv(a, out),
            Add(a, b) | Sub(a, b) | Arrow(a, b) => {
                intv(a, out);
                intv(b, out);
            }
            Ite(c, t, f) => {
                boolv(c, out);
                intv(t, out);
                intv(f, out);
            }
        }
    }
    let mut out = Vec::new();
    match body {
        LExpr::Bool(b) => boolv(b, &mut out),
        LExpr::Int(e) => intv(e, &mut out),
    }
    out
}

// ---- whole-unit behavior ----

/// Value of one program's acceptor after reading `w`, from the node trace.
fn node_accepts(unit: &TranslationUnit, program: usize, w: &Word) -> bool {
    let stream = encode_word(&unit.codec, w, w.len() + 2).unwrap();
    let trace = lval_run(&unit.node, &stream).unwrap();
    trace.bool_values(&unit.acceptors[program]).unwrap()[w.len() - 1]
}

#[test]
fn node_acceptors_match_the_reference_evaluator() {
    let ab = Alphabet::of_chars("ab").unwrap();
    let programs = vec![
        dyck1(),
        balance(),
        // Periodicity and windows both in play.
        Program::new(
            ab.clone(),
            vec![
                Rule::count_rule("W", CExp::window(1, 2, BExp::letter("a"))),
                Rule::bool_rule(
                    "Out",
                    BExp::or(
                        BExp::periodic(3, 1),
                        BExp::le(CExp::num(2), CExp::cref("W")),
                    ),
                ),
            ],
        ),
        // Arithmetic: min/max/ite over counts.
        Program::new(
            ab,
            vec![
                Rule::count_rule("Ca", CExp::count(BExp::letter("a"))),
                Rule::count_rule(
                    "M",
                    CExp::ite(
                        BExp::periodic(2, 0),
                        CExp::min(CExp::cref("Ca"), CExp::num(3)),
                        CExp::max(CExp::cref("Ca"), CExp::num(5)),
                    ),
                ),
                Rule::bool_rule("Out", BExp::lt(CExp::cref("M"), CExp::num(4))),
            ],
        ),
    ];
    for p in &programs {
        let unit = build_unit(p, None, CheckKind::Universality, &TranslateOptions::default())
            .unwrap();
        validate_node(&unit.node).unwrap();
        for w in p.alphabet.words_up_to(7) {
            assert_eq!(
                node_accepts(&unit, 0, &w),
                accepts(p, &w).unwrap(),
                "disagreement on {:?}",
                p.alphabet.display_word(&w)
            );
        }
    }
}

#[test]
fn universality_of_the_trivial_program_holds_bounded() {
    let p = trivial_true(brackets());
    let unit =
        build_unit(&p, None, CheckKind::Universality, &TranslateOptions::default()).unwrap();
    validate_node(&unit.node).unwrap();
    let streams: Vec<Vec<i64>> = p
        .alphabet
        .words_up_to(6)
        .map(|w| encode_word(&unit.codec, &w, w.len() + 2).unwrap())
        .collect();
    assert_eq!(bounded_check(&unit.node, &streams).unwrap(), CheckOutcome::Ok);
}

#[test]
fn bracket_matching_is_included_in_balance() {
    let unit = build_unit(
        &dyck1(),
        Some(&balance()),
        CheckKind::Inclusion,
        &TranslateOptions::default(),
    )
    .unwrap();
    validate_node(&unit.node).unwrap();
    let streams: Vec<Vec<i64>> = brackets()
        .words_up_to(8)
        .map(|w| encode_word(&unit.codec, &w, w.len() + 2).unwrap())
        .collect();
    assert_eq!(bounded_check(&unit.node, &streams).unwrap(), CheckOutcome::Ok);
}

#[test]
fn balance_is_not_included_in_bracket_matching() {
    let unit = build_unit(
        &balance(),
        Some(&dyck1()),
        CheckKind::Inclusion,
        &TranslateOptions::default(),
    )
    .unwrap();
    let streams: Vec<Vec<i64>> = brackets()
        .words_up_to(6)
        .map(|w| encode_word(&unit.codec, &w, w.len() + 2).unwrap())
        .collect();
    match bounded_check(&unit.node, &streams).unwrap() {
        CheckOutcome::Violation { input, position } => {
            // Length-then-lex order finds `][` first: balanced but crossing.
            let w = decode_word(&unit.codec, &input).unwrap();
            assert_eq!(brackets().display_word(&w), "][");
            // The violation lands on the end marker, where both acceptors
            // are read back via `pre`.
            assert_eq!(position, 2);
        }
        CheckOutcome::Ok => panic!("expected a counterexample"),
    }
}

#[test]
fn equality_against_itself_holds_bounded() {
    let unit = build_unit(
        &dyck1(),
        Some(&dyck1()),
        CheckKind::Equality,
        &TranslateOptions::default(),
    )
    .unwrap();
    let streams: Vec<Vec<i64>> = brackets()
        .words_up_to(7)
        .map(|w| encode_word(&unit.codec, &w, w.len() + 2).unwrap())
        .collect();
    assert_eq!(bounded_check(&unit.node, &streams).unwrap(), CheckOutcome::Ok);
}

#[test]
fn emptiness_finds_an_accepted_word() {
    let unit = build_unit(
        &dyck1(),
        None,
        CheckKind::Emptiness,
        &TranslateOptions::default(),
    )
    .unwrap();
    let streams: Vec<Vec<i64>> = brackets()
        .words_up_to(4)
        .map(|w| encode_word(&unit.codec, &w, w.len() + 2).unwrap())
        .collect();
    match bounded_check(&unit.node, &streams).unwrap() {
        CheckOutcome::Violation { input, .. } => {
            let w = decode_word(&unit.codec, &input).unwrap();
            assert_eq!(brackets().display_word(&w), "[]");
        }
        CheckOutcome::Ok => panic!("the bracket language is not empty"),
    }
}

#[test]
fn arity_and_alphabet_mismatches_are_errors() {
    let opts = TranslateOptions::default();
    assert!(matches!(
        build_unit(&dyck1(), None, CheckKind::Inclusion, &opts),
        Err(TranslateError::MissingSecondProgram(_))
    ));
    assert!(matches!(
        build_unit(&dyck1(), Some(&balance()), CheckKind::Universality, &opts),
        Err(TranslateError::UnexpectedSecondProgram(_))
    ));
    let other = trivial_true(Alphabet::of_chars("ab").unwrap());
    assert!(matches!(
        build_unit(&dyck1(), Some(&other), CheckKind::Equality, &opts),
        Err(TranslateError::AlphabetMismatch)
    ));
}

#[test]
fn translation_size_is_linear() {
    let p = dyck1();
    let codec = SymbolCodec::new(&p.alphabet);
    let frag = translate_program(&p, &codec).unwrap();
    assert!(frag.equations.len() <= 2 * ast_size(&p) + 4);
}
