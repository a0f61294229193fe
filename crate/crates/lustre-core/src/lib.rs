//! A single-node synchronous language: one integer input `I`, Boolean and
//! integer locals, one defining equation per local, and a check statement.
//!
//! Streams are evaluated on finite input prefixes (`lval_run`); all
//! properties here are prefix properties.  `pre` reads the previous
//! position and is undefined at position 0, so nodes are validated
//! statically: every `pre` must sit (at sufficient depth) under the right
//! arm of an `->`, and instantaneous dependencies must be acyclic.  The
//! evaluator still reports a defined-ness error if an unvalidated node
//! reads before the start of a stream.
//!
//! `mod` is Euclidean (result in `[0, m)`) and its divisor is a nonzero
//! constant by construction.

mod ast;
mod eval;
mod validate;

pub use ast::{Equation, LBool, LCmpOp, LExpr, LInt, LustreNode, Sort};
pub use eval::{bounded_check, lval_run, CheckOutcome, EvalError, LValues, StreamTrace};
pub use validate::{validate_node, NodeError};
