//! Compiles counting programs to single-node synchronous code.
//!
//! A word `a₁…aₙ` becomes the integer stream `latoi(a₁)…latoi(aₙ) eos
//! eternity…`; two guard equations reject streams that are not of this
//! shape.  Each rule becomes one equation plus auxiliaries (indicator
//! variables, prefix-sum accumulators, a position counter for periodicity
//! predicates), and a check statement relates the acceptor variables of one
//! or two embedded programs at the end-of-word position.
//!
//! Emission produces model-checker-ready text with a named property; a
//! minimal reader parses that text (and hand-written nodes in the same
//! fragment) back into a node.

mod codec;
mod emit;
mod guard;
mod reader;
mod translate;
mod unit;

pub use codec::{decode_word, encode_word, Decoded, DecodeError, EncodeError, SymbolCodec};
pub use emit::emit_lustre_text;
pub use guard::{build_input_guard, SYM_OK, PREFIX_OK};
pub use reader::{parse_lustre_node, ReadError};
pub use translate::{translate_program, translate_program_with, ProgramFragment, TranslateError, TranslateOptions};
pub use unit::{build_check, build_unit, sidecar_json, CheckKind, TranslationUnit};
