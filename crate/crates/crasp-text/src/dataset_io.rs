//! `.samples` files: one labeled word per line, `+ <word>` or `- <word>`.
//! Words are written per-character when every alphabet symbol is a single
//! character, comma-separated otherwise.

use crate::parse::ParseError;
use crasp_core::{Alphabet, Dataset, DatasetError, Word};

/// Parse a dataset against a known alphabet (words cannot name symbols the
/// alphabet doesn't fix, so the caller supplies it).
pub fn parse_dataset(text: &str, alphabet: &Alphabet) -> Result<Dataset, ParseError> {
    let mut dataset = Dataset::new(alphabet.clone());
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (label, rest) = match line.split_at(1) {
            ("+", rest) => (true, rest),
            ("-", rest) => (false, rest),
            _ => {
                return Err(ParseError::Syntax {
                    line: lineno,
                    col: 1,
                    message: "expected a line starting with `+` or `-`".into(),
                })
            }
        };
        let word = parse_word(rest.trim(), alphabet).map_err(|message| ParseError::Syntax {
            line: lineno,
            col: 3,
            message,
        })?;
        dataset
            .push(word, label)
            .map_err(|e: DatasetError| ParseError::Syntax {
                line: lineno,
                col: 1,
                message: e.to_string(),
            })?;
    }
    Ok(dataset)
}

fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, String> {
    if text.is_empty() {
        return Err("empty word".into());
    }
    if alphabet.all_single_char() && !text.contains(',') {
        alphabet.word_from_chars(text).map_err(|e| e.to_string())
    } else {
        alphabet
            .word(text.split(',').map(str::trim))
            .map_err(|e| e.to_string())
    }
}

/// Render a dataset in the same notation [`parse_dataset`] reads.
pub fn print_dataset(d: &Dataset) -> String {
    let mut out = String::new();
    let alphabet = d.alphabet();
    for w in d.pos() {
        out.push_str("+ ");
        out.push_str(&alphabet.display_word(w));
        out.push('\n');
    }
    for w in d.neg() {
        out.push_str("- ");
        out.push_str(&alphabet.display_word(w));
        out.push('\n');
    }
    out
}
