//! Verdicts shared by every backend, and the semantic re-check that gates
//! all counterexamples.

use crate::query::Query;
use crasp2lustre::CheckKind;
use crasp_core::{accepts, Word};
use serde_json::json;

/// Which backend produced a verdict component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendName {
    /// Exhaustive bounded enumeration against the reference semantics.
    Internal,
    /// Bounded evaluation of the translated node (independent route).
    BoundedNode,
    /// External model checker on the emitted text.
    External,
}

impl BackendName {
    pub fn name(self) -> &'static str {
        match self {
            BackendName::Internal => "internal",
            BackendName::BoundedNode => "bounded-node",
            BackendName::External => "external",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnknownReason {
    /// The external tool exceeded its time budget (or the budget was zero).
    Timeout,
    /// No external tool is configured or the binary is not runnable.
    ToolMissing,
    /// Every word up to the bound was checked without refutation; this is
    /// not a proof.
    BoundExhausted { bound: usize },
    /// The word count up to the bound exceeds the enumeration budget.
    EnumerationBudget { words: u64, budget: u64 },
    /// The external tool answered, but nothing usable could be decoded.
    ToolOutputUnusable { detail: String },
}

impl UnknownReason {
    pub fn label(&self) -> &'static str {
        match self {
            UnknownReason::Timeout => "timeout",
            UnknownReason::ToolMissing => "tool-missing",
            UnknownReason::BoundExhausted { .. } => "bound-exhausted",
            UnknownReason::EnumerationBudget { .. } => "enumeration-budget",
            UnknownReason::ToolOutputUnusable { .. } => "tool-output-unusable",
        }
    }
}

/// Outcome of one verification query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The property holds on all words (external proof only).
    Valid { source: BackendName },
    /// A word refuting the property, re-checked against the reference
    /// semantics before being returned.
    Counterexample { word: Word, backend: BackendName },
    Unknown { reason: UnknownReason },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. })
    }

    /// JSON rendering for the CLI; the word is displayed with the query's
    /// alphabet.
    pub fn render_json(&self, q: &Query) -> serde_json::Value {
        match self {
            Verdict::Valid { source } => json!({
                "verdict": "valid",
                "source": source.name(),
            }),
            Verdict::Counterexample { word, backend } => json!({
                "verdict": "counterexample",
                "word": q.p1.alphabet.display_word(word),
                "length": word.len(),
                "backend": backend.name(),
            }),
            Verdict::Unknown { reason } => {
                let mut v = json!({
                    "verdict": "unknown",
                    "reason": reason.label(),
                });
                if let UnknownReason::BoundExhausted { bound } = reason {
                    v["bound"] = json!(bound);
                }
                if let UnknownReason::ToolOutputUnusable { detail } = reason {
                    v["detail"] = json!(detail);
                }
                v
            }
        }
    }
}

/// Does `w` genuinely refute the queried property? This is the semantic
/// one-word check every counterexample must pass.
pub fn refutes(q: &Query, w: &Word) -> bool {
    if w.is_empty() {
        return false;
    }
    let a1 = match accepts(&q.p1, w) {
        Ok(b) => b,
        Err(_) => return false,
    };
    match q.kind {
        CheckKind::Inclusion => {
            let p2 = q.p2.as_ref().expect("binary query");
            a1 && !accepts(p2, w).unwrap_or(true)
        }
        CheckKind::Equality => {
            let p2 = q.p2.as_ref().expect("binary query");
            match accepts(p2, w) {
                Ok(a2) => a1 != a2,
                Err(_) => false,
            }
        }
        CheckKind::Universality => !a1,
        CheckKind::Emptiness => a1,
    }
}
