//! Backend agreement checks. Two bounded routes always run — direct
//! enumeration and the translated node — and the external tool joins in
//! when configured. Any disagreement yields a diagnostic bundle instead of
//! a quiet wrong answer.

use crate::config::VerifierConfig;
use crate::internal::bounded_verify;
use crate::kind2::kind2_verify;
use crate::lustre_backend::bounded_lustre_verify;
use crate::query::Query;
use crate::verdict::{refutes, UnknownReason, Verdict};
use crasp2lustre::{build_unit, emit_lustre_text, TranslateOptions};

/// Result of running a query through every available backend.
#[derive(Debug, Clone)]
pub struct CrossReport {
    pub internal: Verdict,
    pub bounded_node: Verdict,
    /// Absent when no tool is configured.
    pub external: Option<Verdict>,
    pub agreement: bool,
    /// On disagreement: the emitted node text and the verdicts, for triage.
    pub diagnostics: Option<String>,
}

fn found_refuting(q: &Query, v: &Verdict) -> Option<bool> {
    match v {
        Verdict::Counterexample { word, .. } => Some(refutes(q, word)),
        _ => None,
    }
}

/// Run all backends and assert their verdicts are mutually consistent:
/// a `Valid` proof tolerates no counterexample, every counterexample must
/// survive the semantic re-check, and the two bounded routes must agree on
/// whether a counterexample exists within the bound.
pub fn cross_validate(q: &Query, config: &VerifierConfig) -> CrossReport {
    let internal = bounded_verify(q, config);
    let bounded_node = bounded_lustre_verify(q, config);
    let external = config.tool_path.as_ref().map(|_| kind2_verify(q, config));

    let mut problems: Vec<String> = Vec::new();

    for (name, v) in [("internal", &internal), ("bounded-node", &bounded_node)]
        .into_iter()
        .chain(external.iter().map(|v| ("external", v)))
    {
        if found_refuting(q, v) == Some(false) {
            problems.push(format!("{name} returned a word that does not refute the property"));
        }
    }

    // The bounded routes enumerate the same words, so refutation-existence
    // must match (the words themselves may differ only if equally short —
    // both pick the length-lex first violation, but the node route reports
    // its own first violating stream).
    let internal_found = internal.is_counterexample();
    let node_found = bounded_node.is_counterexample();
    if internal_found != node_found {
        let budget_limited = matches!(
            internal,
            Verdict::Unknown { reason: UnknownReason::EnumerationBudget { .. } }
        ) || matches!(
            bounded_node,
            Verdict::Unknown { reason: UnknownReason::EnumerationBudget { .. } }
        );
        if !budget_limited {
            problems.push("bounded routes disagree on counterexample existence".into());
        }
    }

    if let Some(ext) = &external {
        if ext.is_valid() && (internal_found || node_found) {
            problems.push("external proof contradicts a bounded counterexample".into());
        }
    }

    let agreement = problems.is_empty();
    let diagnostics = if agreement {
        None
    } else {
        let text = build_unit(&q.p1, q.p2.as_ref(), q.kind, &TranslateOptions::default())
            .map(|u| emit_lustre_text(&u))
            .unwrap_or_else(|e| format!("translation failed: {e}"));
        Some(format!(
            "problems:\n  {}\ninternal: {internal:?}\nbounded-node: {bounded_node:?}\nexternal: {external:?}\n--- emitted node ---\n{text}",
            problems.join("\n  "),
        ))
    };

    CrossReport { internal, bounded_node, external, agreement, diagnostics }
}
