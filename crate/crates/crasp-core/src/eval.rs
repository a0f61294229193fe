//! Direct recursive evaluator. Follows the positionwise definitions literally
//! (counts re-sum their whole range); it is the readable reference that the
//! row-based evaluator in [`crate::trace`] is tested against.

use thiserror::Error;

use crate::alphabet::Word;
use crate::ast::{BExp, CExp, Program, RuleBody};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("empty word")]
    EmptyWord,
    #[error("position {j} out of range 1..={n}")]
    PositionOutOfRange { j: usize, n: usize },
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("rule `{name}` is not a {expected} rule")]
    WrongSort { name: String, expected: &'static str },
    #[error("symbol `{0}` not in alphabet")]
    UnknownSymbol(String),
    #[error("symbol id {0} out of range for the program alphabet")]
    SymbolIdOutOfRange(u8),
    #[error("integer overflow during evaluation")]
    Overflow,
}

/// Value of a rule: Boolean or integer depending on its sort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(i64),
}

fn check_position(w: &Word, j: usize) -> Result<(), EvalError> {
    if w.is_empty() {
        return Err(EvalError::EmptyWord);
    }
    if j < 1 || j > w.len() {
        return Err(EvalError::PositionOutOfRange { j, n: w.len() });
    }
    Ok(())
}

/// Evaluate a Boolean expression at position `j` (1-based) of `w`.
pub fn eval_bexp(p: &Program, w: &Word, e: &BExp, j: usize) -> Result<bool, EvalError> {
    check_position(w, j)?;
    match e {
        BExp::True => Ok(true),
        BExp::False => Ok(false),
        BExp::Letter(sym) => {
            let id = p
                .alphabet
                .index_of(sym)
                .ok_or_else(|| EvalError::UnknownSymbol(sym.clone()))?;
            let at = w.ids()[j - 1];
            if (at as usize) >= p.alphabet.len() {
                return Err(EvalError::SymbolIdOutOfRange(at));
            }
            Ok(at == id)
        }
        BExp::Ref(name) => {
            let rule = p.rule(name).ok_or_else(|| EvalError::UnknownRule(name.clone()))?;
            match &rule.body {
                RuleBody::Bool(body) => eval_bexp(p, w, body, j),
                RuleBody::Count(_) => {
                    Err(EvalError::WrongSort { name: name.clone(), expected: "Boolean" })
                }
            }
        }
        BExp::Not(a) => Ok(!eval_bexp(p, w, a, j)?),
        BExp::And(a, b) => Ok(eval_bexp(p, w, a, j)? && eval_bexp(p, w, b, j)?),
        BExp::Or(a, b) => Ok(eval_bexp(p, w, a, j)? || eval_bexp(p, w, b, j)?),
        BExp::Cmp(a, op, b) => Ok(op.apply(eval_cexp(p, w, a, j)?, eval_cexp(p, w, b, j)?)),
        BExp::Periodic { m, o } => Ok(((j - 1) as u64) % (*m as u64) == *o as u64),
    }
}

/// Evaluate a counting expression at position `j` (1-based) of `w`.
pub fn eval_cexp(p: &Program, w: &Word, e: &CExp, j: usize) -> Result<i64, EvalError> {
    check_position(w, j)?;
    match e {
        CExp::Const(k) => Ok(*k),
        CExp::Ref(name) => {
            let rule = p.rule(name).ok_or_else(|| EvalError::UnknownRule(name.clone()))?;
            match &rule.body {
                RuleBody::Count(body) => eval_cexp(p, w, body, j),
                RuleBody::Bool(_) => {
                    Err(EvalError::WrongSort { name: name.clone(), expected: "Count" })
                }
            }
        }
        CExp::CountAll(body) => {
            let mut total: i64 = 0;
            for i in 1..=j {
                if eval_bexp(p, w, body, i)? {
                    total = total.checked_add(1).ok_or(EvalError::Overflow)?;
                }
            }
            Ok(total)
        }
        CExp::CountWindow { rs, re, body } => {
            // Positions i with j - re <= i <= j - rs, out-of-range i contribute 0.
            let lo = j.saturating_sub(*re as usize).max(1);
            let hi = match j.checked_sub(*rs as usize) {
                Some(h) if h >= 1 => h,
                _ => return Ok(0),
            };
            let mut total: i64 = 0;
            for i in lo..=hi {
                if eval_bexp(p, w, body, i)? {
                    total = total.checked_add(1).ok_or(EvalError::Overflow)?;
                }
            }
            Ok(total)
        }
        CExp::Add(a, b) => eval_cexp(p, w, a, j)?
            .checked_add(eval_cexp(p, w, b, j)?)
            .ok_or(EvalError::Overflow),
        CExp::Sub(a, b) => eval_cexp(p, w, a, j)?
            .checked_sub(eval_cexp(p, w, b, j)?)
            .ok_or(EvalError::Overflow),
        CExp::Min(a, b) => Ok(eval_cexp(p, w, a, j)?.min(eval_cexp(p, w, b, j)?)),
        CExp::Max(a, b) => Ok(eval_cexp(p, w, a, j)?.max(eval_cexp(p, w, b, j)?)),
        CExp::Ite(c, a, b) => {
            if eval_bexp(p, w, c, j)? {
                eval_cexp(p, w, a, j)
            } else {
                eval_cexp(p, w, b, j)
            }
        }
    }
}

/// Evaluate a named rule at position `j`.
pub fn eval_rule(p: &Program, w: &Word, name: &str, j: usize) -> Result<Value, EvalError> {
    let rule = p.rule(name).ok_or_else(|| EvalError::UnknownRule(name.to_string()))?;
    match &rule.body {
        RuleBody::Bool(body) => Ok(Value::Bool(eval_bexp(p, w, body, j)?)),
        RuleBody::Count(body) => Ok(Value::Int(eval_cexp(p, w, body, j)?)),
    }
}

/// Acceptance: value of the last rule at the final position. Rejects the
/// empty word.
pub fn accepts(p: &Program, w: &Word) -> Result<bool, EvalError> {
    if w.is_empty() {
        return Err(EvalError::EmptyWord);
    }
    let last = p.rules.last().ok_or_else(|| EvalError::UnknownRule("<none>".into()))?;
    match &last.body {
        RuleBody::Bool(body) => eval_bexp(p, w, body, w.len()),
        RuleBody::Count(_) => {
            Err(EvalError::WrongSort { name: last.name.clone(), expected: "Boolean" })
        }
    }
}
