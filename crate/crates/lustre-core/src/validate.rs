//! Static node checks: declarations, sorts, initialization depth, and
//! instantaneous-dependency acyclicity.

use crate::ast::{LBool, LExpr, LInt, LustreNode, Sort, INPUT};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum NodeError {
    #[error("local `{0}` declared more than once")]
    DuplicateLocal(String),
    #[error("local shadows the input variable `I`")]
    InputShadowed,
    #[error("local `{0}` has no defining equation")]
    MissingEquation(String),
    #[error("equation defines undeclared variable `{0}`")]
    UnknownEquationTarget(String),
    #[error("variable `{0}` defined by more than one equation")]
    DuplicateEquation(String),
    #[error("{context}: undeclared variable `{var}`")]
    UndeclaredVariable { context: String, var: String },
    #[error("{context}: variable `{var}` used at the wrong sort")]
    SortMismatch { context: String, var: String },
    #[error("equation for `{0}` has an integer body but `{0}` is Boolean")]
    BodySortMismatch(String),
    #[error("{context}: `pre` can read before position 0 (needs an `->` to its right)")]
    UnguardedPre { context: String },
    #[error("{context}: `mod` divisor must be a nonzero constant")]
    ZeroModulus { context: String },
    #[error("instantaneous dependency cycle through `{0}`")]
    InstantaneousCycle(String),
}

/// Reject nodes whose evaluation could be undefined: every `pre` must be
/// initialization-guarded and same-position dependencies must be acyclic.
pub fn validate_node(node: &LustreNode) -> Result<(), Vec<NodeError>> {
    let mut errors = Vec::new();

    let mut seen = BTreeSet::new();
    for v in node.bool_locals.iter().chain(&node.int_locals) {
        if v == INPUT {
            errors.push(NodeError::InputShadowed);
        }
        if !seen.insert(v.clone()) {
            errors.push(NodeError::DuplicateLocal(v.clone()));
        }
    }

    let mut defined = BTreeSet::new();
    for eq in &node.equations {
        if node.sort_of(&eq.var).is_none() || eq.var == INPUT {
            errors.push(NodeError::UnknownEquationTarget(eq.var.clone()));
            continue;
        }
        if !defined.insert(eq.var.clone()) {
            errors.push(NodeError::DuplicateEquation(eq.var.clone()));
        }
        let want = node.sort_of(&eq.var).unwrap();
        if eq.body.sort() != want {
            errors.push(NodeError::BodySortMismatch(eq.var.clone()));
        }
    }
    for v in node.bool_locals.iter().chain(&node.int_locals) {
        if !defined.contains(v) {
            errors.push(NodeError::MissingEquation(v.clone()));
        }
    }

    for eq in &node.equations {
        let context = format!("equation for `{}`", eq.var);
        match &eq.body {
            LExpr::Bool(b) => check_bool(node, b, &context, &mut errors),
            LExpr::Int(e) => check_int(node, e, &context, &mut errors),
        }
        let depth = match &eq.body {
            LExpr::Bool(b) => bool_depth(b),
            LExpr::Int(e) => int_depth(e),
        };
        if depth > 0 {
            errors.push(NodeError::UnguardedPre { context });
        }
    }
    let check_ctx = "check statement".to_string();
    check_bool(node, &node.check, &check_ctx, &mut errors);
    if bool_depth(&node.check) > 0 {
        errors.push(NodeError::UnguardedPre { context: check_ctx });
    }

    if let Err(var) = instantaneous_order(node) {
        errors.push(NodeError::InstantaneousCycle(var));
    }

    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

fn check_bool(node: &LustreNode, e: &LBool, context: &str, errors: &mut Vec<NodeError>) {
    match e {
        LBool::True | LBool::False => {}
        LBool::Var(v) => match node.sort_of(v) {
            Some(Sort::Bool) => {}
            Some(Sort::Int) => errors.push(NodeError::SortMismatch {
                context: context.into(),
                var: v.clone(),
            }),
            None => errors.push(NodeError::UndeclaredVariable {
                context: context.into(),
                var: v.clone(),
            }),
        },
        LBool::Not(a) | LBool::Pre(a) => check_bool(node, a, context, errors),
        LBool::And(a, b) | LBool::Or(a, b) | LBool::Arrow(a, b) => {
            check_bool(node, a, context, errors);
            check_bool(node, b, context, errors);
        }
        LBool::Cmp(a, _, b) => {
            check_int(node, a, context, errors);
            check_int(node, b, context, errors);
        }
    }
}

fn check_int(node: &LustreNode, e: &LInt, context: &str, errors: &mut Vec<NodeError>) {
    match e {
        LInt::Const(_) => {}
        LInt::Var(v) => match node.sort_of(v) {
            Some(Sort::Int) => {}
            Some(Sort::Bool) => errors.push(NodeError::SortMismatch {
                context: context.into(),
                var: v.clone(),
            }),
            None => errors.push(NodeError::UndeclaredVariable {
                context: context.into(),
                var: v.clone(),
            }),
        },
        LInt::Pre(a) => check_int(node, a, context, errors),
        LInt::Add(a, b) | LInt::Sub(a, b) | LInt::Arrow(a, b) => {
            check_int(node, a, context, errors);
            check_int(node, b, context, errors);
        }
        LInt::Mod(a, m) => {
            if *m == 0 {
                errors.push(NodeError::ZeroModulus { context: context.into() });
            }
            check_int(node, a, context, errors);
        }
        LInt::Ite(c, t, f) => {
            check_bool(node, c, context, errors);
            check_int(node, t, context, errors);
            check_int(node, f, context, errors);
        }
    }
}

/// Number of leading positions where the expression is undefined, assuming
/// every variable stream is fully defined.  `pre` adds one; `a -> b` is
/// defined at 0 when `a` is, and from position max(1, depth(b)) on.
fn bool_depth(e: &LBool) -> u32 {
    match e {
        LBool::True | LBool::False | LBool::Var(_) => 0,
        LBool::Not(a) => bool_depth(a),
        LBool::And(a, b) | LBool::Or(a, b) => bool_depth(a).max(bool_depth(b)),
        LBool::Cmp(a, _, b) => int_depth(a).max(int_depth(b)),
        LBool::Pre(a) => bool_depth(a).saturating_add(1),
        LBool::Arrow(a, b) => arrow_depth(bool_depth(a), bool_depth(b)),
    }
}

fn int_depth(e: &LInt) -> u32 {
    match e {
        LInt::Const(_) | LInt::Var(_) => 0,
        LInt::Add(a, b) | LInt::Sub(a, b) => int_depth(a).max(int_depth(b)),
        LInt::Mod(a, _) => int_depth(a),
        LInt::Ite(c, t, f) => bool_depth(c).max(int_depth(t)).max(int_depth(f)),
        LInt::Pre(a) => int_depth(a).saturating_add(1),
        LInt::Arrow(a, b) => arrow_depth(int_depth(a), int_depth(b)),
    }
}

fn arrow_depth(da: u32, db: u32) -> u32 {
    if db >= 2 {
        db
    } else if da == 0 {
        0
    } else {
        1
    }
}

/// Topological order of the equations by same-position dependencies
/// (`pre` breaks the edge).  Returns the name of a cycle participant on
/// failure.
pub(crate) fn instantaneous_order(node: &LustreNode) -> Result<Vec<usize>, String> {
    let index: BTreeMap<&str, usize> = node
        .equations
        .iter()
        .enumerate()
        .map(|(i, e)| (e.var.as_str(), i))
        .collect();
    let mut deps: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); node.equations.len()];
    for (i, eq) in node.equations.iter().enumerate() {
        let mut vars = BTreeSet::new();
        match &eq.body {
            LExpr::Bool(b) => instant_bool(b, &mut vars),
            LExpr::Int(e) => instant_int(e, &mut vars),
        }
        for v in vars {
            if let Some(&j) = index.get(v.as_str()) {
                deps[i].insert(j);
            }
        }
    }
    // Kahn's algorithm, smallest index first for a stable order.
    let n = node.equations.len();
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    loop {
        let mut progressed = false;
        for i in 0..n {
            if !done[i] && deps[i].iter().all(|&j| done[j]) {
                done[i] = true;
                order.push(i);
                progressed = true;
            }
        }
        if order.len() == n {
            return Ok(order);
        }
        if !progressed {
            let stuck = (0..n).find(|&i| !done[i]).unwrap();
            return Err(node.equations[stuck].var.clone());
        }
    }
}

fn instant_bool(e: &LBool, out: &mut BTreeSet<String>) {
    match e {
        LBool::True | LBool::False => {}
        LBool::Var(v) => {
            out.insert(v.clone());
        }
        LBool::Not(a) => instant_bool(a, out),
        LBool::And(a, b) | LBool::Or(a, b) | LBool::Arrow(a, b) => {
            instant_bool(a, out);
            instant_bool(b, out);
        }
        LBool::Cmp(a, _, b) => {
            instant_int(a, out);
            instant_int(b, out);
        }
        LBool::Pre(_) => {}
    }
}

fn instant_int(e: &LInt, out: &mut BTreeSet<String>) {
    match e {
        LInt::Const(_) => {}
        LInt::Var(v) => {
            out.insert(v.clone());
        }
        LInt::Add(a, b) | LInt::Sub(a, b) | LInt::Arrow(a, b) => {
            instant_int(a, out);
            instant_int(b, out);
        }
        LInt::Mod(a, _) => instant_int(a, out),
        LInt::Ite(c, t, f) => {
            instant_bool(c, out);
            instant_int(t, out);
            instant_int(f, out);
        }
        LInt::Pre(_) => {}
    }
}
