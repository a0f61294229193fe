//! Verification queries: a check kind plus one or two programs.

use crasp2lustre::CheckKind;
use crasp_core::Program;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("{0} compares two programs; only one was given")]
    MissingSecondProgram(&'static str),
    #[error("{0} takes a single program; two were given")]
    UnexpectedSecondProgram(&'static str),
    #[error("the two programs use different alphabets")]
    AlphabetMismatch,
}

/// An immutable verification question. Binary kinds carry two programs over
/// the same alphabet; unary kinds exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub kind: CheckKind,
    pub p1: Program,
    pub p2: Option<Program>,
}

impl Query {
    pub fn new(kind: CheckKind, p1: Program, p2: Option<Program>) -> Result<Query, QueryError> {
        if kind.is_binary() && p2.is_none() {
            return Err(QueryError::MissingSecondProgram(kind.name()));
        }
        if !kind.is_binary() && p2.is_some() {
            return Err(QueryError::UnexpectedSecondProgram(kind.name()));
        }
        if let Some(p2) = &p2 {
            if p2.alphabet != p1.alphabet {
                return Err(QueryError::AlphabetMismatch);
            }
        }
        Ok(Query { kind, p1, p2 })
    }

    pub fn inclusion(p1: Program, p2: Program) -> Result<Query, QueryError> {
        Query::new(CheckKind::Inclusion, p1, Some(p2))
    }

    pub fn equality(p1: Program, p2: Program) -> Result<Query, QueryError> {
        Query::new(CheckKind::Equality, p1, Some(p2))
    }

    pub fn universality(p: Program) -> Result<Query, QueryError> {
        Query::new(CheckKind::Universality, p, None)
    }

    pub fn emptiness(p: Program) -> Result<Query, QueryError> {
        Query::new(CheckKind::Emptiness, p, None)
    }
}
