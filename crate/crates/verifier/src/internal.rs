//! Exhaustive bounded refutation against the reference semantics.

use crate::config::VerifierConfig;
use crate::query::Query;
use crate::verdict::{refutes, BackendName, UnknownReason, Verdict};

/// Check every word of length 1..=bound in length-then-lexicographic order.
/// Finds the shortest (then lexicographically first) counterexample, or
/// reports the bound exhausted — never `Valid`: a clean sweep of a finite
/// set proves nothing about longer words.
pub fn bounded_verify(q: &Query, config: &VerifierConfig) -> Verdict {
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
    for w in q.p1.alphabet.words_up_to(bound) {
        if refutes(q, &w) {
            // `refutes` is itself the semantic re-check; the word is
            // returned exactly as enumerated.
            return Verdict::Counterexample {
                word: w,
                backend: BackendName::Internal,
            };
        }
    }
    Verdict::Unknown {
        reason: UnknownReason::BoundExhausted { bound },
    }
}
