//! Finite-prefix stream evaluation and bounded checking.

use crate::ast::{LBool, LExpr, LInt, LustreNode, INPUT};
use crate::validate::instantaneous_order;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("input stream is empty")]
    EmptyInput,
    #[error("{context}: `pre` reads before position 0")]
    PreAtStart { context: String },
    #[error("{context}: arithmetic overflow")]
    Overflow { context: String },
    #[error("{context}: `mod` by zero")]
    ModZero { context: String },
    #[error("{context}: unknown variable `{var}`")]
    UnknownVariable { context: String, var: String },
    #[error("instantaneous dependency cycle through `{0}`")]
    InstantaneousCycle(String),
}

/// One finite stream per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LValues {
    Bool(Vec<bool>),
    Int(Vec<i64>),
}

impl LValues {
    pub fn len(&self) -> usize {
        match self {
            LValues::Bool(v) => v.len(),
            LValues::Int(v) => v.len(),
        }
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Evaluated prefixes of every local, plus the input they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamTrace {
    input: Vec<i64>,
    vars: BTreeMap<String, LValues>,
}

impl StreamTrace {
    pub fn input(&self) -> &[i64] {
        &self.input
    }
    pub fn len(&self) -> usize {
        self.input.len()
    }
    pub fn is_empty(&self) -> bool {
        self.input.is_empty()
    }
    pub fn get(&self, var: &str) -> Option<&LValues> {
        self.vars.get(var)
    }
    pub fn bool_values(&self, var: &str) -> Option<&[bool]> {
        match self.vars.get(var) {
            Some(LValues::Bool(v)) => Some(v),
            _ => None,
        }
    }
    pub fn int_values(&self, var: &str) -> Option<&[i64]> {
        match self.vars.get(var) {
            Some(LValues::Int(v)) => Some(v),
            _ => None,
        }
    }
}

struct Ctx<'a> {
    input: &'a [i64],
    bools: BTreeMap<&'a str, Vec<bool>>,
    ints: BTreeMap<&'a str, Vec<i64>>,
}

impl<'a> Ctx<'a> {
    fn bool_at(&self, var: &str, i: usize, context: &str) -> Result<bool, EvalError> {
        self.bools
            .get(var)
            .and_then(|v| v.get(i))
            .copied()
            .ok_or_else(|| EvalError::UnknownVariable {
                context: context.into(),
                var: var.into(),
            })
    }

    fn int_at(&self, var: &str, i: usize, context: &str) -> Result<i64, EvalError> {
        if var == INPUT {
            return self.input.get(i).copied().ok_or_else(|| EvalError::UnknownVariable {
                context: context.into(),
                var: var.into(),
            });
        }
        self.ints
            .get(var)
            .and_then(|v| v.get(i))
            .copied()
            .ok_or_else(|| EvalError::UnknownVariable {
                context: context.into(),
                var: var.into(),
            })
    }
}

fn eval_bool(ctx: &Ctx, e: &LBool, i: usize, context: &str) -> Result<bool, EvalError> {
    Ok(match e {
        LBool::True => true,
        LBool::False => false,
        LBool::Var(v) => ctx.bool_at(v, i, context)?,
        LBool::Not(a) => !eval_bool(ctx, a, i, context)?,
        LBool::And(a, b) => eval_bool(ctx, a, i, context)? && eval_bool(ctx, b, i, context)?,
        LBool::Or(a, b) => eval_bool(ctx, a, i, context)? || eval_bool(ctx, b, i, context)?,
        LBool::Cmp(a, op, b) => {
            op.apply(eval_int(ctx, a, i, context)?, eval_int(ctx, b, i, context)?)
        }
        LBool::Pre(a) => {
            if i == 0 {
                return Err(EvalError::PreAtStart { context: context.into() });
            }
            eval_bool(ctx, a, i - 1, context)?
        }
        LBool::Arrow(a, b) => {
            if i == 0 {
                eval_bool(ctx, a, 0, context)?
            } else {
                eval_bool(ctx, b, i, context)?
            }
        }
    })
}

fn eval_int(ctx: &Ctx, e: &LInt, i: usize, context: &str) -> Result<i64, EvalError> {
    Ok(match e {
        LInt::Const(k) => *k,
        LInt::Var(v) => ctx.int_at(v, i, context)?,
        LInt::Add(a, b) => eval_int(ctx, a, i, context)?
            .checked_add(eval_int(ctx, b, i, context)?)
            .ok_or_else(|| EvalError::Overflow { context: context.into() })?,
        LInt::Sub(a, b) => eval_int(ctx, a, i, context)?
            .checked_sub(eval_int(ctx, b, i, context)?)
            .ok_or_else(|| EvalError::Overflow { context: context.into() })?,
        LInt::Mod(a, m) => {
            if *m == 0 {
                return Err(EvalError::ModZero { context: context.into() });
            }
            eval_int(ctx, a, i, context)?.rem_euclid(*m)
        }
        LInt::Ite(c, t, f) => {
            if eval_bool(ctx, c, i, context)? {
                eval_int(ctx, t, i, context)?
            } else {
                eval_int(ctx, f, i, context)?
            }
        }
        LInt::Pre(a) => {
            if i == 0 {
                return Err(EvalError::PreAtStart { context: context.into() });
            }
            eval_int(ctx, a, i - 1, context)?
        }
        LInt::Arrow(a, b) => {
            if i == 0 {
                eval_int(ctx, a, 0, context)?
            } else {
                eval_int(ctx, b, i, context)?
            }
        }
    })
}

/// Evaluate every local over a finite input prefix, position by position in
/// instantaneous-dependency order.
pub fn lval_run(node: &LustreNode, input: &[i64]) -> Result<StreamTrace, EvalError> {
    if input.is_empty() {
        return Err(EvalError::EmptyInput);
    }
    let order = instantaneous_order(node).map_err(EvalError::InstantaneousCycle)?;
    let n = input.len();
    let mut ctx = Ctx {
        input,
        bools: BTreeMap::new(),
        ints: BTreeMap::new(),
    };
    for eq in &node.equations {
        match eq.body {
            LExpr::Bool(_) => {
                ctx.bools.insert(eq.var.as_str(), Vec::with_capacity(n));
            }
            LExpr::Int(_) => {
                ctx.ints.insert(eq.var.as_str(), Vec::with_capacity(n));
            }
        }
    }
    for i in 0..n {
        for &k in &order {
            let eq = &node.equations[k];
            let context = format!("equation for `{}`", eq.var);
            match &eq.body {
                LExpr::Bool(b) => {
                    let v = eval_bool(&ctx, b, i, &context)?;
                    ctx.bools.get_mut(eq.var.as_str()).unwrap().push(v);
                }
                LExpr::Int(e) => {
                    let v = eval_int(&ctx, e, i, &context)?;
                    ctx.ints.get_mut(eq.var.as_str()).unwrap().push(v);
                }
            }
        }
    }
    let mut vars = BTreeMap::new();
    for (name, v) in ctx.bools {
        vars.insert(name.to_string(), LValues::Bool(v));
    }
    for (name, v) in ctx.ints {
        vars.insert(name.to_string(), LValues::Int(v));
    }
    Ok(StreamTrace { input: input.to_vec(), vars })
}

/// Outcome of checking finitely many finite inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Ok,
    /// First input (by family order) and 0-based position where the check
    /// evaluated to false.
    Violation { input: Vec<i64>, position: usize },
}

/// Evaluate the node's check statement on each input; report the first
/// falsifying position.  Finding none refutes nothing beyond these
/// prefixes — this is not a validity proof.
pub fn bounded_check<I>(node: &LustreNode, inputs: I) -> Result<CheckOutcome, EvalError>
where
    I: IntoIterator,
    I::Item: AsRef<[i64]>,
{
    for input in inputs {
        let input = input.as_ref();
        let trace = lval_run(node, input)?;
        let mut ctx = Ctx {
            input,
            bools: BTreeMap::new(),
            ints: BTreeMap::new(),
        };
        for (name, values) in &trace.vars {
            match values {
                LValues::Bool(v) => {
                    ctx.bools.insert(name.as_str(), v.clone());
                }
                LValues::Int(v) => {
                    ctx.ints.insert(name.as_str(), v.clone());
                }
            }
        }
        for i in 0..input.len() {
            if !eval_bool(&ctx, &node.check, i, "check statement")? {
                return Ok(CheckOutcome::Violation { input: input.to_vec(), position: i });
            }
        }
    }
    Ok(CheckOutcome::Ok)
}
