//! Concrete syntax for counting programs and labeled-word datasets.
//!
//! A `.crasp` file is a `program <name> over {'a','b'}` header followed by
//! one rule per line (`bool X := …` / `count C := …`).  A `.samples` file
//! has one labeled word per line (`+ ab` / `- ba`).  Lines whose first
//! non-whitespace character is `#` are comments in both formats.
//!
//! Parsing and printing are inverse on ASTs: `parse_program(print_program(p))`
//! reproduces `p` structurally for every well-formed program.

mod dataset_io;
mod lex;
mod parse;
mod print;

pub use dataset_io::{parse_dataset, print_dataset};
pub use parse::{parse_program, parse_source, ParseError, SourceFile};
pub use print::{print_program, print_source};
