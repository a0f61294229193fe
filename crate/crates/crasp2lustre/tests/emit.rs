//! Emitted-text stability and the reader that closes the loop: the exact
//! output format is frozen here, and parsing it back must reproduce the
//! node structurally.

use crasp2lustre::{
    build_unit, emit_lustre_text, parse_lustre_node, sidecar_json, CheckKind,
    TranslateOptions,
};
use crasp_core::{Alphabet, BExp, CExp, Program, Rule};
use lustre_core::{bounded_check, lval_run, validate_node, CheckOutcome};

fn trivial_unit() -> crasp2lustre::TranslationUnit {
    let ab = Alphabet::of_chars("a").unwrap();
    let p = Program::new(ab, vec![Rule::bool_rule("T", BExp::True)]);
    build_unit(&p, None, CheckKind::Universality, &TranslateOptions::default()).unwrap()
}

#[test]
fn emitted_text_is_frozen() {
    let expected = "\
node main(I: int) returns (ok: bool);
var
  sym_ok : bool;
  prefix_ok : bool;
  p1_T : bool;
let
  sym_ok = (I = 0 or I = 1 or I = 2) and (not (I = 2) -> not pre (I = 1 or I = 2) or I = 2);
  prefix_ok = sym_ok -> sym_ok and pre (prefix_ok);
  p1_T = true;
  ok = true -> not (prefix_ok and I = 1) or pre (p1_T);
  --%PROPERTY ok;
  --%MAIN;
tel
";
    assert_eq!(emit_lustre_text(&trivial_unit()), expected);
}

#[test]
fn emission_is_deterministic() {
    let a = emit_lustre_text(&trivial_unit());
    let b = emit_lustre_text(&trivial_unit());
    assert_eq!(a, b);
}

#[test]
fn sidecar_is_frozen() {
    let expected = r#"{
  "check": "universality",
  "symbols": {
    "a": 0
  },
  "eos": 1,
  "eternity": 2,
  "programs": [
    {
      "prefix": "p1",
      "rules": {
        "T": "p1_T"
      },
      "acceptor": "p1_T"
    }
  ]
}"#;
    assert_eq!(sidecar_json(&trivial_unit()), expected);
}

#[test]
fn reader_round_trips_the_trivial_unit() {
    let unit = trivial_unit();
    let parsed = parse_lustre_node(&emit_lustre_text(&unit)).unwrap();
    assert_eq!(parsed, unit.node);
}

#[test]
fn reader_round_trips_a_two_program_unit() {
    let ab = Alphabet::of_chars("[]").unwrap();
    let p1 = Program::new(
        ab.clone(),
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
    );
    let p2 = Program::new(
        ab,
        vec![Rule::bool_rule(
            "E",
            BExp::eq(
                CExp::count(BExp::letter("[")),
                CExp::count(BExp::letter("]")),
            ),
        )],
    );
    let unit = build_unit(&p1, Some(&p2), CheckKind::Inclusion, &TranslateOptions::default())
        .unwrap();
    let text = emit_lustre_text(&unit);
    let parsed = parse_lustre_node(&text).unwrap();
    assert_eq!(parsed, unit.node);
    validate_node(&parsed).unwrap();
}

#[test]
fn reader_round_trips_arithmetic_shapes() {
    // Periodicity (mod), windows (nested pre), and if/then/else all at once.
    let ab = Alphabet::of_chars("ab").unwrap();
    let p = Program::new(
        ab,
        vec![
            Rule::count_rule("W", CExp::window(1, 2, BExp::letter("a"))),
            Rule::count_rule(
                "M",
                CExp::ite(
                    BExp::periodic(3, 1),
                    CExp::min(CExp::cref("W"), CExp::num(1)),
                    CExp::max(CExp::cref("W"), CExp::sub(CExp::num(0), CExp::num(2))),
                ),
            ),
            Rule::bool_rule("Out", BExp::le(CExp::num(1), CExp::cref("M"))),
        ],
    );
    let unit =
        build_unit(&p, None, CheckKind::Emptiness, &TranslateOptions::default()).unwrap();
    let text = emit_lustre_text(&unit);
    let parsed = parse_lustre_node(&text).unwrap();
    assert_eq!(parsed, unit.node);
}

#[test]
fn reader_handles_a_hand_written_node_with_a_check() {
    let text = "
-- running sum, reset every third step
node counter (I : int) returns (s : int);
var
  t : int;
let
  t = 0 -> pre (t) + 1;
  s = I -> (if t mod 3 = 0 then I else pre (s) + I);
  check 0 <= t;
tel
";
    let node = parse_lustre_node(text).unwrap();
    assert_eq!(node.name, "counter");
    validate_node(&node).unwrap();
    let trace = lval_run(&node, &[5, 3, 2, 4]).unwrap();
    assert_eq!(trace.int_values("t").unwrap(), &[0, 1, 2, 3]);
    assert_eq!(trace.int_values("s").unwrap(), &[5, 8, 10, 4]);
    assert_eq!(
        bounded_check(&node, &[[5i64, 3, 2, 4]]).unwrap(),
        CheckOutcome::Ok
    );
}

#[test]
fn reader_defaults_to_a_vacuous_check() {
    let text = "
node plain (I : int) returns (x : int);
let
  x = I + 1;
tel
";
    let node = parse_lustre_node(text).unwrap();
    assert_eq!(node.check, lustre_core::LBool::True);
    match bounded_check(&node, &[[7i64]]).unwrap() {
        CheckOutcome::Ok => {}
        other => panic!("vacuous check must hold, got {other:?}"),
    }
}

#[test]
fn reader_reports_errors_with_lines() {
    // Missing semicolon after an equation.
    let err = parse_lustre_node(
        "node n (I : int) returns (x : int);\nlet\n  x = I + 1\ntel\n",
    )
    .unwrap_err();
    assert!(err.line >= 3, "line was {}", err.line);

    // Sort mismatch: integer where a Boolean is needed.
    let err = parse_lustre_node(
        "node n (I : int) returns (x : bool);\nlet\n  x = I + 1;\ntel\n",
    )
    .unwrap_err();
    assert!(err.message.contains("Boolean") || err.message.contains("bool"));

    // Property names a variable with no equation.
    let err = parse_lustre_node(
        "node n (I : int) returns (ok : bool);\nlet\n  --%PROPERTY ok;\ntel\n",
    )
    .unwrap_err();
    assert!(err.message.contains("ok"));

    // Modulus must be a literal.
    let err = parse_lustre_node(
        "node n (I : int) returns (x : int);\nlet\n  x = I mod I;\ntel\n",
    )
    .unwrap_err();
    assert!(err.message.contains("constant"));

    // Undeclared variable in a body.
    let err = parse_lustre_node(
        "node n (I : int) returns (x : int);\nlet\n  x = y + 1;\ntel\n",
    )
    .unwrap_err();
    assert!(err.message.contains("y"));
}

#[test]
fn emitted_nodes_always_validate_and_reparse() {
    // A spread of shapes; each unit must emit, validate, and round-trip.
    let ab = Alphabet::of_chars("ab").unwrap();
    let programs = vec![
        Program::new(ab.clone(), vec![Rule::bool_rule("T", BExp::periodic(5, 4))]),
        Program::new(
            ab.clone(),
            vec![
                Rule::count_rule("C", CExp::count(BExp::letter("b"))),
                Rule::bool_rule("Out", BExp::eq(CExp::cref("C"), CExp::num(2))),
            ],
        ),
        Program::new(
            ab,
            vec![
                Rule::count_rule("W", CExp::window(0, 3, BExp::letter("a"))),
                Rule::bool_rule(
                    "Out",
                    BExp::or(BExp::not(BExp::letter("a")), BExp::lt(CExp::num(1), CExp::cref("W"))),
                ),
            ],
        ),
    ];
    for p in programs {
        for kind in [CheckKind::Universality, CheckKind::Emptiness] {
            let unit = build_unit(&p, None, kind, &TranslateOptions::default()).unwrap();
            validate_node(&unit.node).unwrap();
            let parsed = parse_lustre_node(&emit_lustre_text(&unit)).unwrap();
            assert_eq!(parsed, unit.node);
        }
    }
}
