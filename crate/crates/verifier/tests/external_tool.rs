//! Adapter behavior against a scripted stand-in for the external tool:
//! answer parsing, trace decoding, the semantic re-check, timeouts, and
//! soft failure when the tool is absent.

use crasp_core::{BExp, CExp, Program, Rule};
use std::os::unix::fs::PermissionsExt;
use std::path::PathBuf;
use verifier::{kind2_verify, BackendName, Query, UnknownReason, Verdict, VerifierConfig};

fn brackets() -> crasp_core::Alphabet {
    crasp_core::Alphabet::of_chars("[]").unwrap()
}

fn dyck1() -> Program {
    Program::new(
        brackets(),
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

/// Write an executable shell script that ignores its arguments and prints
/// a canned response.
fn fake_tool(dir: &tempfile::TempDir, body: &str) -> PathBuf {
    let path = dir.path().join("fake-mc");
    std::fs::write(&path, format!("#!/bin/sh\n{body}\n")).unwrap();
    let mut perms = std::fs::metadata(&path).unwrap().permissions();
    perms.set_mode(0o755);
    std::fs::set_permissions(&path, perms).unwrap();
    path
}

fn tool_config(path: PathBuf) -> VerifierConfig {
    VerifierConfig {
        tool_path: Some(path),
        timeout_secs: 10,
        ..VerifierConfig::default()
    }
}

#[test]
fn missing_tool_is_a_soft_outcome() {
    let q = Query::emptiness(dyck1()).unwrap();
    let none = VerifierConfig::default();
    assert_eq!(
        kind2_verify(&q, &none),
        Verdict::Unknown { reason: UnknownReason::ToolMissing }
    );
    let bogus = tool_config(PathBuf::from("/nonexistent/model-checker"));
    assert_eq!(
        kind2_verify(&q, &bogus),
        Verdict::Unknown { reason: UnknownReason::ToolMissing }
    );
}

#[test]
fn zero_timeout_short_circuits() {
    let q = Query::emptiness(dyck1()).unwrap();
    let cfg = VerifierConfig {
        tool_path: Some(PathBuf::from("/nonexistent/model-checker")),
        timeout_secs: 0,
        ..VerifierConfig::default()
    };
    assert_eq!(
        kind2_verify(&q, &cfg),
        Verdict::Unknown { reason: UnknownReason::Timeout }
    );
}

#[test]
fn valid_answer_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(
        &dir,
        r#"cat <<'EOF'
[
  {"objectType": "kind2Options", "enabled": ["BMC", "IND"]},
  {"objectType": "property", "name": "ok[l9c3]", "scope": "main",
   "answer": {"source": "inductive step", "value": "valid"}, "k": 2}
]
EOF"#,
    );
    let q = Query::inclusion(dyck1(), balance()).unwrap();
    assert_eq!(
        kind2_verify(&q, &tool_config(tool)),
        Verdict::Valid { source: BackendName::External }
    );
}

#[test]
fn falsifiable_trace_is_decoded_and_rechecked() {
    // The canned trace encodes `][` (codes 1, 0), the end marker (2), and
    // padding (3) — a genuine refutation of balance ⊆ matching.
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(
        &dir,
        r#"cat <<'EOF'
[
  {"objectType": "property", "name": "ok[l9c3]", "scope": "main",
   "answer": {"source": "bmc", "value": "falsifiable"},
   "counterExample": [
     {"blockType": "node", "name": "main",
      "streams": [
        {"name": "p1_E", "type": "bool", "class": "local",
         "instantValues": [[0, false], [1, false], [2, true], [3, true]]},
        {"name": "I", "type": "int", "class": "input",
         "instantValues": [[0, 1], [1, 0], [2, 2], [3, 3]]}
      ]}
   ], "k": 4}
]
EOF"#,
    );
    let q = Query::inclusion(balance(), dyck1()).unwrap();
    match kind2_verify(&q, &tool_config(tool)) {
        Verdict::Counterexample { word, backend } => {
            assert_eq!(brackets().display_word(&word), "][");
            assert_eq!(backend, BackendName::External);
        }
        other => panic!("expected a decoded counterexample, got {other:?}"),
    }
}

#[test]
fn string_steps_and_bare_answers_also_parse() {
    // Some tool builds print numerals as strings and answers as bare
    // strings; the walk tolerates both.
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(
        &dir,
        r#"cat <<'EOF'
{"answer": "falsifiable",
 "trace": {"name": "I", "instantValues": [["0", "1"], ["1", "0"], ["2", "2"], ["3", "3"]]}}
EOF"#,
    );
    let q = Query::inclusion(balance(), dyck1()).unwrap();
    match kind2_verify(&q, &tool_config(tool)) {
        Verdict::Counterexample { word, .. } => {
            assert_eq!(brackets().display_word(&word), "][");
        }
        other => panic!("expected a decoded counterexample, got {other:?}"),
    }
}

#[test]
fn non_refuting_trace_is_rejected() {
    // `[]` satisfies both programs, so a trace claiming it refutes the
    // inclusion is a decoding bug and must not surface as a counterexample.
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(
        &dir,
        r#"cat <<'EOF'
{"answer": {"value": "falsifiable"},
 "streams": [{"name": "I", "instantValues": [[0, 0], [1, 1], [2, 2], [3, 3]]}]}
EOF"#,
    );
    let q = Query::inclusion(balance(), dyck1()).unwrap();
    match kind2_verify(&q, &tool_config(tool)) {
        Verdict::Unknown { reason: UnknownReason::ToolOutputUnusable { detail } } => {
            assert!(detail.contains("does not refute"), "detail: {detail}");
        }
        other => panic!("expected an unusable-output verdict, got {other:?}"),
    }
}

#[test]
fn falsifiable_without_a_trace_is_unusable() {
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(&dir, r#"echo '{"answer": "falsifiable"}'"#);
    let q = Query::emptiness(dyck1()).unwrap();
    match kind2_verify(&q, &tool_config(tool)) {
        Verdict::Unknown { reason: UnknownReason::ToolOutputUnusable { detail } } => {
            assert!(detail.contains("no input stream"), "detail: {detail}");
        }
        other => panic!("expected an unusable-output verdict, got {other:?}"),
    }
}

#[test]
fn garbage_output_is_unusable() {
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(&dir, "echo this is not json");
    let q = Query::emptiness(dyck1()).unwrap();
    match kind2_verify(&q, &tool_config(tool)) {
        Verdict::Unknown { reason: UnknownReason::ToolOutputUnusable { .. } } => {}
        other => panic!("expected an unusable-output verdict, got {other:?}"),
    }
}

#[test]
fn unknown_answer_maps_to_timeout() {
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(&dir, r#"echo '[{"answer": {"value": "unknown"}}]'"#);
    let q = Query::emptiness(dyck1()).unwrap();
    assert_eq!(
        kind2_verify(&q, &tool_config(tool)),
        Verdict::Unknown { reason: UnknownReason::Timeout }
    );
}

#[test]
fn slow_tools_are_killed_at_the_deadline() {
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(&dir, "sleep 30\necho '{\"answer\": \"valid\"}'");
    let q = Query::emptiness(dyck1()).unwrap();
    let cfg = VerifierConfig {
        tool_path: Some(tool),
        timeout_secs: 1,
        ..VerifierConfig::default()
    };
    let start = std::time::Instant::now();
    assert_eq!(
        kind2_verify(&q, &cfg),
        Verdict::Unknown { reason: UnknownReason::Timeout }
    );
    assert!(start.elapsed() < std::time::Duration::from_secs(10));
}

#[test]
fn external_verdicts_join_cross_validation() {
    // A fake prover that claims validity for a query the bounded routes
    // cannot refute: full agreement.
    let dir = tempfile::tempdir().unwrap();
    let tool = fake_tool(&dir, r#"echo '[{"answer": {"value": "valid"}}]'"#);
    let q = Query::inclusion(dyck1(), balance()).unwrap();
    let cfg = VerifierConfig { bound: 6, ..tool_config(tool) };
    let report = verifier::cross_validate(&q, &cfg);
    assert!(report.agreement, "diagnostics: {:?}", report.diagnostics);
    assert_eq!(
        report.external,
        Some(Verdict::Valid { source: BackendName::External })
    );

    // The same fake prover on a refutable query: the bounded routes find
    // the counterexample, contradicting the claimed proof.
    let dir2 = tempfile::tempdir().unwrap();
    let tool2 = fake_tool(&dir2, r#"echo '[{"answer": {"value": "valid"}}]'"#);
    let q2 = Query::inclusion(balance(), dyck1()).unwrap();
    let cfg2 = VerifierConfig { bound: 6, ..tool_config(tool2) };
    let report2 = verifier::cross_validate(&q2, &cfg2);
    assert!(!report2.agreement);
    let diag = report2.diagnostics.unwrap();
    assert!(diag.contains("contradicts"), "diagnostics: {diag}");
    assert!(diag.contains("node main"), "diagnostics must embed the emitted node");
}
