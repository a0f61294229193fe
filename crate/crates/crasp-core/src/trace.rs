//! Row-based evaluator: computes each rule's whole value stream over a word
//! in one pass, rule by rule in declaration order. Counting forms become
//! prefix sums, so a full program trace costs O(AST size * |w|).

use std::collections::BTreeMap;

use crate::alphabet::{Alphabet, Word};
use crate::ast::{BExp, CExp, Program, RuleBody};
use crate::eval::EvalError;

/// One rule's values at positions 1..=|w| (index 0 is position 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleRow {
    Bool(Vec<bool>),
    Int(Vec<i64>),
}

impl RuleRow {
    pub fn len(&self) -> usize {
        match self {
            RuleRow::Bool(v) => v.len(),
            RuleRow::Int(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Supplies the rows of rules declared earlier than the one being evaluated.
pub trait RowSource {
    fn row(&self, name: &str) -> Option<&RuleRow>;
}

impl RowSource for BTreeMap<&str, &RuleRow> {
    fn row(&self, name: &str) -> Option<&RuleRow> {
        self.get(name).copied()
    }
}

/// Values of every rule at every position of `w`, rules in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgramTrace {
    names: Vec<String>,
    rows: Vec<RuleRow>,
}

impl ProgramTrace {
    pub fn rows(&self) -> &[RuleRow] {
        &self.rows
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn row(&self, name: &str) -> Option<&RuleRow> {
        self.names.iter().position(|n| n == name).map(|i| &self.rows[i])
    }

    /// Value of the last rule at the final position; this is acceptance.
    pub fn accepted(&self) -> Result<bool, EvalError> {
        match self.rows.last() {
            Some(RuleRow::Bool(v)) => Ok(*v.last().expect("nonempty rows")),
            Some(RuleRow::Int(_)) => Err(EvalError::WrongSort {
                name: self.names.last().cloned().unwrap_or_default(),
                expected: "Boolean",
            }),
            None => Err(EvalError::UnknownRule("<none>".into())),
        }
    }
}

/// Evaluate every rule of `p` over `w`.
pub fn run_trace(p: &Program, w: &Word) -> Result<ProgramTrace, EvalError> {
    if w.is_empty() {
        return Err(EvalError::EmptyWord);
    }
    let mut names: Vec<String> = Vec::with_capacity(p.rules.len());
    let mut rows: Vec<RuleRow> = Vec::with_capacity(p.rules.len());
    for rule in &p.rules {
        let row = {
            let source = PrefixRows { names: &names, rows: &rows };
            eval_body_row(&rule.body, &p.alphabet, w, &source)?
        };
        names.push(rule.name.clone());
        rows.push(row);
    }
    Ok(ProgramTrace { names, rows })
}

/// Acceptance via the row evaluator; the fast counterpart of
/// [`crate::eval::accepts`].
pub fn accepts_rows(p: &Program, w: &Word) -> Result<bool, EvalError> {
    run_trace(p, w)?.accepted()
}

struct PrefixRows<'a> {
    names: &'a [String],
    rows: &'a [RuleRow],
}

impl RowSource for PrefixRows<'_> {
    fn row(&self, name: &str) -> Option<&RuleRow> {
        self.names.iter().position(|n| n == name).map(|i| &self.rows[i])
    }
}

/// Evaluate one rule body over all positions of `w`, reading earlier rules'
/// rows from `source`.
pub fn eval_body_row(
    body: &RuleBody,
    alphabet: &Alphabet,
    w: &Word,
    source: &dyn RowSource,
) -> Result<RuleRow, EvalError> {
    if w.is_empty() {
        return Err(EvalError::EmptyWord);
    }
    match body {
        RuleBody::Bool(e) => Ok(RuleRow::Bool(bool_row(e, alphabet, w, source)?)),
        RuleBody::Count(e) => Ok(RuleRow::Int(int_row(e, alphabet, w, source)?)),
    }
}

fn bool_row(
    e: &BExp,
    alphabet: &Alphabet,
    w: &Word,
    source: &dyn RowSource,
) -> Result<Vec<bool>, EvalError> {
    let n = w.len();
    match e {
        BExp::True => Ok(vec![true; n]),
        BExp::False => Ok(vec![false; n]),
        BExp::Letter(sym) => {
            let id = alphabet
                .index_of(sym)
                .ok_or_else(|| EvalError::UnknownSymbol(sym.clone()))?;
            let limit = alphabet.len() as u8;
            let mut out = Vec::with_capacity(n);
            for &at in w.ids() {
                if at >= limit {
                    return Err(EvalError::SymbolIdOutOfRange(at));
                }
                out.push(at == id);
            }
            Ok(out)
        }
        BExp::Ref(name) => match source.row(name) {
            Some(RuleRow::Bool(v)) => Ok(v.clone()),
            Some(RuleRow::Int(_)) => {
                Err(EvalError::WrongSort { name: name.clone(), expected: "Boolean" })
            }
            None => Err(EvalError::UnknownRule(name.clone())),
        },
        BExp::Not(a) => {
            let mut v = bool_row(a, alphabet, w, source)?;
            for x in &mut v {
                *x = !*x;
            }
            Ok(v)
        }
        BExp::And(a, b) => {
            let mut va = bool_row(a, alphabet, w, source)?;
            let vb = bool_row(b, alphabet, w, source)?;
            for (x, y) in va.iter_mut().zip(&vb) {
                *x = *x && *y;
            }
            Ok(va)
        }
        BExp::Or(a, b) => {
            let mut va = bool_row(a, alphabet, w, source)?;
            let vb = bool_row(b, alphabet, w, source)?;
            for (x, y) in va.iter_mut().zip(&vb) {
                *x = *x || *y;
            }
            Ok(va)
        }
        BExp::Cmp(a, op, b) => {
            let va = int_row(a, alphabet, w, source)?;
            let vb = int_row(b, alphabet, w, source)?;
            Ok(va.iter().zip(&vb).map(|(&x, &y)| op.apply(x, y)).collect())
        }
        BExp::Periodic { m, o } => {
            let m = *m as u64;
            let o = *o as u64;
            Ok((0..n).map(|j0| (j0 as u64) % m == o).collect())
        }
    }
}

fn int_row(
    e: &CExp,
    alphabet: &Alphabet,
    w: &Word,
    source: &dyn RowSource,
) -> Result<Vec<i64>, EvalError> {
    let n = w.len();
    match e {
        CExp::Const(k) => Ok(vec![*k; n]),
        CExp::Ref(name) => match source.row(name) {
            Some(RuleRow::Int(v)) => Ok(v.clone()),
            Some(RuleRow::Bool(_)) => {
                Err(EvalError::WrongSort { name: name.clone(), expected: "Count" })
            }
            None => Err(EvalError::UnknownRule(name.clone())),
        },
        CExp::CountAll(body) => {
            let b = bool_row(body, alphabet, w, source)?;
            let mut out = Vec::with_capacity(n);
            let mut total: i64 = 0;
            for hit in b {
                total += hit as i64; // bounded by |w|
                out.push(total);
            }
            Ok(out)
        }
        CExp::CountWindow { rs, re, body } => {
            let b = bool_row(body, alphabet, w, source)?;
            // psum[i] = number of hits at positions 1..=i.
            let mut psum = Vec::with_capacity(n + 1);
            psum.push(0i64);
            for (i, hit) in b.iter().enumerate() {
                psum.push(psum[i] + *hit as i64);
            }
            let rs = *rs as usize;
            let re = *re as usize;
            let mut out = Vec::with_capacity(n);
            for j in 1..=n {
                // Window is positions [j - re, j - rs] clipped to 1..=j.
                match j.checked_sub(rs) {
                    Some(hi) if hi >= 1 => {
                        let lo = j.saturating_sub(re).max(1);
                        out.push(psum[hi] - psum[lo - 1]);
                    }
                    _ => out.push(0),
                }
            }
            Ok(out)
        }
        CExp::Add(a, b) => {
            let va = int_row(a, alphabet, w, source)?;
            let vb = int_row(b, alphabet, w, source)?;
            va.iter()
                .zip(&vb)
                .map(|(&x, &y)| x.checked_add(y).ok_or(EvalError::Overflow))
                .collect()
        }
        CExp::Sub(a, b) => {
            let va = int_row(a, alphabet, w, source)?;
            let vb = int_row(b, alphabet, w, source)?;
            va.iter()
                .zip(&vb)
                .map(|(&x, &y)| x.checked_sub(y).ok_or(EvalError::Overflow))
                .collect()
        }
        CExp::Min(a, b) => {
            let va = int_row(a, alphabet, w, source)?;
            let vb = int_row(b, alphabet, w, source)?;
            Ok(va.iter().zip(&vb).map(|(&x, &y)| x.min(y)).collect())
        }
        CExp::Max(a, b) => {
            let va = int_row(a, alphabet, w, source)?;
            let vb = int_row(b, alphabet, w, source)?;
            Ok(va.iter().zip(&vb).map(|(&x, &y)| x.max(y)).collect())
        }
        CExp::Ite(c, a, b) => {
            let vc = bool_row(c, alphabet, w, source)?;
            let va = int_row(a, alphabet, w, source)?;
            let vb = int_row(b, alphabet, w, source)?;
            Ok(vc
                .iter()
                .zip(va.iter().zip(&vb))
                .map(|(&c, (&x, &y))| if c { x } else { y })
                .collect())
        }
    }
}
