//! The benchmark language catalog: names, alphabets, oracles, and — where
//! one exists — a reference program shipped as a `.crasp` fixture.

use crasp_core::{Alphabet, Program, Word, WordError};
use crasp_text::{parse_program, ParseError};
use thiserror::Error;

use crate::oracles;

/// Membership test over raw words.
pub type Oracle = fn(&Word) -> bool;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("language `{0}` has no reference program")]
    NoFixture(String),
    #[error("reference program for `{name}` does not parse: {source}")]
    BadFixture {
        name: String,
        #[source]
        source: ParseError,
    },
    #[error("reference program for `{name}` declares a different alphabet")]
    AlphabetMismatch { name: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// One benchmark language: a named alphabet, a membership oracle, and
/// optionally a reference program text.
#[derive(Clone)]
pub struct LanguageSpec {
    pub name: &'static str,
    pub alphabet: Alphabet,
    /// Smallest sampled word length; some word of this length exists.
    pub min_len: usize,
    /// Whether the language is known to be definable in this rule language.
    pub expressible: bool,
    oracle: Oracle,
    fixture: Option<&'static str>,
    /// Set when the shipped reference program decides a deliberate variant
    /// of the language (a flipped orientation, a sibling letter).
    fixture_oracle: Option<Oracle>,
}

impl LanguageSpec {
    /// Membership per the language definition; ids must fit the alphabet.
    pub fn accepts(&self, w: &Word) -> Result<bool, CatalogError> {
        self.alphabet.validate_word(w)?;
        Ok((self.oracle)(w))
    }

    /// Membership without the id check, for callers that build words
    /// through [`LanguageSpec::alphabet`] already.
    pub fn oracle(&self) -> Oracle {
        self.oracle
    }

    /// Whether a reference program ships with the language.
    pub fn has_fixture(&self) -> bool {
        self.fixture.is_some()
    }

    /// The raw `.crasp` source of the reference program.
    pub fn fixture_source(&self) -> Option<&'static str> {
        self.fixture
    }

    /// The language the reference program decides. Usually [`Self::oracle`],
    /// but a few shipped programs pick a fixed variant of the definition.
    pub fn fixture_oracle(&self) -> Option<Oracle> {
        self.fixture?;
        Some(self.fixture_oracle.unwrap_or(self.oracle))
    }

    /// Parse the shipped reference program and check its alphabet.
    pub fn reference_program(&self) -> Result<Program, CatalogError> {
        let text = self
            .fixture
            .ok_or_else(|| CatalogError::NoFixture(self.name.into()))?;
        let program = parse_program(text).map_err(|source| CatalogError::BadFixture {
            name: self.name.into(),
            source,
        })?;
        if program.alphabet != self.alphabet {
            return Err(CatalogError::AlphabetMismatch {
                name: self.name.into(),
            });
        }
        Ok(program)
    }
}

fn chars(s: &str) -> Alphabet {
    Alphabet::of_chars(s).expect("catalog alphabets are distinct and nonempty")
}

/// All benchmark languages, in a fixed order.
pub fn catalog() -> Vec<LanguageSpec> {
    fn lang(
        name: &'static str,
        alphabet: &str,
        min_len: usize,
        expressible: bool,
        oracle: Oracle,
        fixture: Option<&'static str>,
        fixture_oracle: Option<Oracle>,
    ) -> LanguageSpec {
        LanguageSpec {
            name,
            alphabet: chars(alphabet),
            min_len,
            expressible,
            oracle,
            fixture,
            fixture_oracle,
        }
    }

    vec![
        lang(
            "dyck1",
            "[]",
            2,
            true,
            oracles::dyck1,
            Some(include_str!("../fixtures/dyck1.crasp")),
            None,
        ),
        lang(
            "astar-bstar",
            "ab",
            1,
            true,
            oracles::astar_bstar,
            Some(include_str!("../fixtures/astar_bstar.crasp")),
            None,
        ),
        lang(
            "anbncn",
            "abc",
            3,
            true,
            oracles::anbncn,
            Some(include_str!("../fixtures/anbncn.crasp")),
            None,
        ),
        lang(
            "aastar",
            "a",
            2,
            true,
            oracles::aastar,
            Some(include_str!("../fixtures/aastar.crasp")),
            None,
        ),
        lang(
            "contains-ab",
            "ab",
            2,
            true,
            oracles::contains_ab,
            Some(include_str!("../fixtures/contains_ab.crasp")),
            None,
        ),
        lang(
            "majority",
            "ab",
            1,
            true,
            oracles::majority,
            Some(include_str!("../fixtures/majority.crasp")),
            Some(oracles::majority_fixture),
        ),
        lang(
            "existential",
            "ab",
            1,
            true,
            oracles::existential,
            Some(include_str!("../fixtures/existential.crasp")),
            Some(oracles::existential_fixture),
        ),
        lang("parity", "ab", 1, false, oracles::parity, None, None),
        lang(
            "pt2",
            "ab",
            2,
            true,
            oracles::pt2,
            Some(include_str!("../fixtures/pt2.crasp")),
            None,
        ),
        lang(
            "pt3",
            "abc",
            3,
            true,
            oracles::pt3,
            Some(include_str!("../fixtures/pt3.crasp")),
            None,
        ),
        lang(
            "pt5",
            "abcde",
            5,
            true,
            oracles::pt5,
            Some(include_str!("../fixtures/pt5.crasp")),
            None,
        ),
        lang("d2", "[]()", 2, false, oracles::d2, None, None),
        lang("d3", "[](){}", 2, false, oracles::d3, None, None),
        lang("d4", "[](){}<>", 2, false, oracles::d4, None, None),
        lang(
            "tomita1",
            "ab",
            1,
            true,
            oracles::tomita1,
            Some(include_str!("../fixtures/tomita1.crasp")),
            None,
        ),
        lang(
            "tomita2",
            "ab",
            2,
            true,
            oracles::tomita2,
            Some(include_str!("../fixtures/tomita2.crasp")),
            None,
        ),
        lang("tomita3", "ab", 1, false, oracles::tomita3, None, None),
        lang(
            "tomita4",
            "ab",
            1,
            true,
            oracles::tomita4,
            Some(include_str!("../fixtures/tomita4.crasp")),
            None,
        ),
        lang("tomita5", "ab", 2, false, oracles::tomita5, None, None),
        lang("tomita6", "ab", 2, false, oracles::tomita6, None, None),
        lang(
            "tomita7",
            "ab",
            1,
            true,
            oracles::tomita7,
            Some(include_str!("../fixtures/tomita7.crasp")),
            None,
        ),
        lang(
            "next-argmax",
            "abc",
            1,
            true,
            oracles::next_argmax,
            Some(include_str!("../fixtures/next_argmax.crasp")),
            Some(oracles::next_argmax_fixture),
        ),
    ]
}

/// Look a language up by its catalog name.
pub fn find(name: &str) -> Option<LanguageSpec> {
    catalog().into_iter().find(|l| l.name == name)
}
