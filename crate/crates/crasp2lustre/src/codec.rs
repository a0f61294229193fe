//! Symbol numbering and word encoding.

use crasp_core::{Alphabet, Word};
use thiserror::Error;

/// Injective numbering of the alphabet plus the two stream markers:
/// letters take their declaration index, end-of-word comes next, and the
/// padding symbol after that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolCodec {
    alphabet: Alphabet,
}

/// What a stream value stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decoded {
    Letter(u8),
    Eos,
    Eternity,
    Unknown,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EncodeError {
    #[error("cannot encode the empty word")]
    EmptyWord,
    #[error("total length {n_total} too short for a word of length {len} (need len + 1)")]
    TotalTooShort { n_total: usize, len: usize },
    #[error("word uses symbol id {id} outside the alphabet")]
    BadSymbol { id: u8 },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("stream value {0} is not a letter or marker code")]
    UnknownCode(i64),
}

impl SymbolCodec {
    pub fn new(alphabet: &Alphabet) -> SymbolCodec {
        SymbolCodec { alphabet: alphabet.clone() }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Code of the letter with the given alphabet index.
    pub fn letter_code(&self, id: u8) -> i64 {
        i64::from(id)
    }

    pub fn eos_code(&self) -> i64 {
        self.alphabet.len() as i64
    }

    pub fn eternity_code(&self) -> i64 {
        self.alphabet.len() as i64 + 1
    }

    /// All codes a well-formed stream may carry (letters, then the markers).
    pub fn all_codes(&self) -> Vec<i64> {
        (0..self.alphabet.len() as i64 + 2).collect()
    }

    pub fn decode(&self, code: i64) -> Decoded {
        if code >= 0 && (code as usize) < self.alphabet.len() {
            Decoded::Letter(code as u8)
        } else if code == self.eos_code() {
            Decoded::Eos
        } else if code == self.eternity_code() {
            Decoded::Eternity
        } else {
            Decoded::Unknown
        }
    }
}

/// Encode a word as the prefix of its input stream: letter codes, one
/// end-of-word marker, then padding out to `n_total` values.
pub fn encode_word(codec: &SymbolCodec, w: &Word, n_total: usize) -> Result<Vec<i64>, EncodeError> {
    if w.is_empty() {
        return Err(EncodeError::EmptyWord);
    }
    if n_total < w.len() + 1 {
        return Err(EncodeError::TotalTooShort { n_total, len: w.len() });
    }
    let mut out = Vec::with_capacity(n_total);
    for &id in w.ids() {
        if (id as usize) >= codec.alphabet.len() {
            return Err(EncodeError::BadSymbol { id });
        }
        out.push(codec.letter_code(id));
    }
    out.push(codec.eos_code());
    while out.len() < n_total {
        out.push(codec.eternity_code());
    }
    Ok(out)
}

/// Read the letters back out of a stream prefix, stopping at the first
/// marker.  Values after the first marker are ignored.
pub fn decode_word(codec: &SymbolCodec, stream: &[i64]) -> Result<Word, DecodeError> {
    let mut ids = Vec::new();
    for &v in stream {
        match codec.decode(v) {
            Decoded::Letter(id) => ids.push(id),
            Decoded::Eos | Decoded::Eternity => break,
            Decoded::Unknown => return Err(DecodeError::UnknownCode(v)),
        }
    }
    Ok(Word::from_ids(ids))
}
