//! Alphabets and words. Words store symbol ids (indices into the alphabet),
//! not symbol names, so evaluators never touch strings.

use std::fmt;

use thiserror::Error;

/// Upper bound on alphabet size; keeps symbol ids in `u8` with room to spare.
pub const MAX_SYMBOLS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("alphabet must be nonempty")]
    Empty,
    #[error("alphabet has at most {MAX_SYMBOLS} symbols, got {0}")]
    TooManySymbols(usize),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("symbol names must be nonempty")]
    EmptySymbol,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol id {id} out of range for alphabet of {len} symbols")]
    IdOutOfRange { id: u8, len: usize },
}

/// A finite, ordered set of distinct symbol names. Symbol ids are positions
/// in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, AlphabetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(AlphabetError::Empty);
        }
        if symbols.len() > MAX_SYMBOLS {
            return Err(AlphabetError::TooManySymbols(symbols.len()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(AlphabetError::EmptySymbol);
            }
            if symbols[..i].contains(s) {
                return Err(AlphabetError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Alphabet whose symbols are the characters of `chars`, in order.
    pub fn of_chars(chars: &str) -> Result<Self, AlphabetError> {
        Alphabet::new(chars.chars().map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, id: u8) -> &str {
        &self.symbols[id as usize]
    }

    pub fn index_of(&self, symbol: &str) -> Option<u8> {
        self.symbols.iter().position(|s| s == symbol).map(|i| i as u8)
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.index_of(symbol).is_some()
    }

    /// True iff every symbol name is a single character, which enables the
    /// compact one-char-per-symbol word notation.
    pub fn all_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Build a word from symbol names.
    pub fn word<I, S>(&self, symbols: I) -> Result<Word, WordError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut ids = Vec::new();
        for s in symbols {
            let s = s.as_ref();
            ids.push(self.index_of(s).ok_or_else(|| WordError::UnknownSymbol(s.to_string()))?);
        }
        Ok(Word(ids))
    }

    /// Build a word reading each character as one symbol name.
    pub fn word_from_chars(&self, s: &str) -> Result<Word, WordError> {
        self.word(s.chars().map(|c| c.to_string()))
    }

    /// Check that every id in `w` is valid for this alphabet.
    pub fn validate_word(&self, w: &Word) -> Result<(), WordError> {
        let len = self.len();
        match w.ids().iter().find(|&&id| (id as usize) >= len) {
            Some(&id) => Err(WordError::IdOutOfRange { id, len }),
            None => Ok(()),
        }
    }

    /// Render a word: characters run together when every symbol is a single
    /// character, comma-separated names otherwise.
    pub fn display_word(&self, w: &Word) -> String {
        let names: Vec<&str> = w.ids().iter().map(|&id| self.symbol(id)).collect();
        if self.all_single_char() {
            names.concat()
        } else {
            names.join(",")
        }
    }

    /// All nonempty words of length 1..=max_len in length-then-lexicographic
    /// order (lexicographic by symbol id within each length).
    pub fn words_up_to(&self, max_len: usize) -> WordsUpTo {
        WordsUpTo { base: self.len() as u8, max_len, next: if max_len == 0 { None } else { Some(vec![0]) } }
    }

    /// Number of words of length 1..=max_len, saturating on overflow.
    pub fn word_count_up_to(&self, max_len: usize) -> u64 {
        let base = self.len() as u64;
        let mut total: u64 = 0;
        let mut pow: u64 = 1;
        for _ in 0..max_len {
            pow = pow.saturating_mul(base);
            total = total.saturating_add(pow);
        }
        total
    }
}

/// A nonempty-or-empty sequence of symbol ids relative to some alphabet.
/// Emptiness constraints are enforced at the use sites (evaluation, datasets).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn from_ids(ids: Vec<u8>) -> Self {
        Word(ids)
    }

    pub fn ids(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.0)
    }
}

/// Iterator behind [`Alphabet::words_up_to`].
pub struct WordsUpTo {
    base: u8,
    max_len: usize,
    next: Option<Vec<u8>>,
}

impl Iterator for WordsUpTo {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let out = Word(current.clone());
        let mut ids = current;
        // Odometer increment; on full carry, move to the next length.
        let mut i = ids.len();
        loop {
            if i == 0 {
                if ids.len() + 1 > self.max_len {
                    self.next = None;
                } else {
                    self.next = Some(vec![0; ids.len() + 1]);
                }
                return Some(out);
            }
            i -= 1;
            if ids[i] + 1 < self.base {
                ids[i] += 1;
                for x in ids[i + 1..].iter_mut() {
                    *x = 0;
                }
                self.next = Some(ids);
                return Some(out);
            }
        }
    }
}
