//! Labeled words driving synthesis. Positive and negative classes must be
//! disjoint; within a class, duplicates are representable (samplers may
//! repeat words for languages with few members in a length range) but the
//! refinement loops insert with a uniqueness check.

use thiserror::Error;

use std::collections::BTreeSet;

use crate::alphabet::{Alphabet, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DatasetError {
    #[error("empty word in dataset")]
    EmptyWord,
    #[error("word uses symbol id {id} outside the alphabet ({len} symbols)")]
    BadSymbolId { id: u8, len: usize },
    #[error("contradictory labels for `{0}`")]
    ContradictoryLabels(String),
}

/// Labeled examples over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    alphabet: Alphabet,
    pos: Vec<Word>,
    neg: Vec<Word>,
    pos_set: BTreeSet<Word>,
    neg_set: BTreeSet<Word>,
}

impl Dataset {
    pub fn new(alphabet: Alphabet) -> Dataset {
        Dataset {
            alphabet,
            pos: Vec::new(),
            neg: Vec::new(),
            pos_set: BTreeSet::new(),
            neg_set: BTreeSet::new(),
        }
    }

    pub fn with_examples(
        alphabet: Alphabet,
        pos: Vec<Word>,
        neg: Vec<Word>,
    ) -> Result<Dataset, DatasetError> {
        let mut d = Dataset::new(alphabet);
        for w in pos {
            d.push(w, true)?;
        }
        for w in neg {
            d.push(w, false)?;
        }
        Ok(d)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn pos(&self) -> &[Word] {
        &self.pos
    }

    pub fn neg(&self) -> &[Word] {
        &self.neg
    }

    pub fn len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.pos_set.contains(w) || self.neg_set.contains(w)
    }

    pub fn label_of(&self, w: &Word) -> Option<bool> {
        if self.pos_set.contains(w) {
            Some(true)
        } else if self.neg_set.contains(w) {
            Some(false)
        } else {
            None
        }
    }

    /// Positives then negatives, each with its label.
    pub fn iter_labeled(&self) -> impl Iterator<Item = (&Word, bool)> {
        self.pos.iter().map(|w| (w, true)).chain(self.neg.iter().map(|w| (w, false)))
    }

    fn validate(&self, w: &Word, label: bool) -> Result<(), DatasetError> {
        if w.is_empty() {
            return Err(DatasetError::EmptyWord);
        }
        if let Err(crate::alphabet::WordError::IdOutOfRange { id, len }) =
            self.alphabet.validate_word(w)
        {
            return Err(DatasetError::BadSymbolId { id, len });
        }
        let opposite = if label { &self.neg_set } else { &self.pos_set };
        if opposite.contains(w) {
            return Err(DatasetError::ContradictoryLabels(self.alphabet.display_word(w)));
        }
        Ok(())
    }

    /// Append an example; duplicates within the same class are kept.
    pub fn push(&mut self, w: Word, label: bool) -> Result<(), DatasetError> {
        self.validate(&w, label)?;
        if label {
            self.pos_set.insert(w.clone());
            self.pos.push(w);
        } else {
            self.neg_set.insert(w.clone());
            self.neg.push(w);
        }
        Ok(())
    }

    /// Append only if the word is not yet present in its class; returns
    /// whether it was added.
    pub fn insert_unique(&mut self, w: Word, label: bool) -> Result<bool, DatasetError> {
        self.validate(&w, label)?;
        let own = if label { &self.pos_set } else { &self.neg_set };
        if own.contains(&w) {
            return Ok(false);
        }
        self.push(w, label)?;
        Ok(true)
    }
}
