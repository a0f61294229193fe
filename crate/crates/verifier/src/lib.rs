//! Verification façade over two backends with a shared [`Verdict`] type.
//!
//! The internal backend enumerates words up to a bound directly against the
//! reference semantics; it can refute but never prove, so a clean sweep comes
//! back as [`UnknownReason::BoundExhausted`], not `Valid`. The external
//! backend shells out to a model checker over the emitted node text and
//! decodes the witnessing trace back into a word. Every counterexample from
//! any backend is re-checked against the reference semantics before it is
//! returned.

pub mod config;
pub mod cross;
pub mod internal;
pub mod kind2;
pub mod lustre_backend;
pub mod query;
pub mod verdict;

pub use config::{ConfigError, VerifierConfig};
pub use cross::{cross_validate, CrossReport};
pub use internal::bounded_verify;
pub use kind2::kind2_verify;
pub use lustre_backend::bounded_lustre_verify;
pub use query::{Query, QueryError};
pub use verdict::{refutes, BackendName, UnknownReason, Verdict};
