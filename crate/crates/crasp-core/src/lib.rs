//! Core AST and reference semantics for C-RASP programs.
//!
//! A program is an ordered list of named rules over a finite alphabet. Each
//! rule body is either a Boolean expression or a counting expression, and may
//! reference earlier rules only. Evaluating a program on a word yields one
//! value per rule per position; the word is accepted iff the last rule (which
//! must be Boolean) holds at the final position. The empty word is rejected.
//!
//! Two evaluators are provided: a direct recursive one ([`eval`]) that follows
//! the positionwise definitions literally, and a row-based one ([`trace`])
//! that computes whole value streams per rule and is the one to use in hot
//! loops. They are checked against each other by property tests.

pub mod alphabet;
pub mod ast;
pub mod dataset;
pub mod eval;
pub mod metrics;
#[cfg(feature = "testgen")]
pub mod testgen;
pub mod trace;
pub mod wf;

pub use alphabet::{Alphabet, AlphabetError, Word, WordError};
pub use ast::{BExp, CExp, CmpOp, Program, Rule, RuleBody};
pub use dataset::{Dataset, DatasetError};
pub use eval::{accepts, eval_bexp, eval_cexp, eval_rule, EvalError, Value};
pub use metrics::{ast_size, reachable_rules};
pub use trace::{eval_body_row, run_trace, ProgramTrace, RuleRow};
pub use wf::{well_formed, Violation};
