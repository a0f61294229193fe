//! Bounded refutation through the translated node: an independent route
//! that exercises the full translation pipeline instead of the reference
//! evaluator. Used for cross-validation.

use crate::config::VerifierConfig;
use crate::query::Query;
use crate::verdict::{refutes, BackendName, UnknownReason, Verdict};
use crasp2lustre::{build_unit, decode_word, encode_word, TranslateOptions};
use lustre_core::{bounded_check, CheckOutcome};

/// Evaluate the node's check on the encodings of every word up to the
/// bound.  A violation is decoded back to a word and re-checked against the
/// reference semantics before being returned.
pub fn bounded_lustre_verify(q: &Query, config: &VerifierConfig) -> Verdict {
    let bound = config.bound;
    let words = q.p1.alphabet.word_count_up_to(bound);
    if words > config.enumeration_budget {
        return Verdict::Unknown {
            reason: UnknownReason::EnumerationBudget {
                words,
                budget: config.enumeration_budget,
            },
        };
    }
    let unit = match build_unit(
        &q.p1,
        q.p2.as_ref(),
        q.kind,
        &TranslateOptions::default(),
    ) {
        Ok(u) => u,
        Err(e) => {
            return Verdict::Unknown {
                reason: UnknownReason::ToolOutputUnusable {
                    detail: format!("translation failed: {e}"),
                },
            }
        }
    };
    let streams = q
        .p1
        .alphabet
        .words_up_to(bound)
        .map(|w| encode_word(&unit.codec, &w, w.len() + 2).expect("nonempty word encodes"));
    match bounded_check(&unit.node, streams) {
        Ok(CheckOutcome::Ok) => Verdict::Unknown {
            reason: UnknownReason::BoundExhausted { bound },
        },
        Ok(CheckOutcome::Violation { input, .. }) => {
            let word = match decode_word(&unit.codec, &input) {
                Ok(w) if !w.is_empty() => w,
                _ => {
                    return Verdict::Unknown {
                        reason: UnknownReason::ToolOutputUnusable {
                            detail: "violating stream did not decode to a word".into(),
                        },
                    }
                }
            };
            if !refutes(q, &word) {
                return Verdict::Unknown {
                    reason: UnknownReason::ToolOutputUnusable {
                        detail: format!(
                            "decoded word {:?} does not refute the property",
                            q.p1.alphabet.display_word(&word)
                        ),
                    },
                };
            }
            Verdict::Counterexample {
                word,
                backend: BackendName::BoundedNode,
            }
        }
        Err(e) => Verdict::Unknown {
            reason: UnknownReason::ToolOutputUnusable {
                detail: format!("node evaluation failed: {e}"),
            },
        },
    }
}
