//! Structural metrics: AST size and the set of rules reachable from the
//! acceptor. Both drive the synthesis objective and minimization.

use std::collections::BTreeSet;

use crate::ast::{BExp, CExp, Program, RuleBody};

/// Total constructor count over all rule bodies; every node, including
/// leaves, counts 1.
pub fn ast_size(p: &Program) -> usize {
    p.rules
        .iter()
        .map(|r| match &r.body {
            RuleBody::Bool(b) => bexp_size(b),
            RuleBody::Count(c) => cexp_size(c),
        })
        .sum()
}

pub fn bexp_size(e: &BExp) -> usize {
    match e {
        BExp::True | BExp::False | BExp::Letter(_) | BExp::Ref(_) | BExp::Periodic { .. } => 1,
        BExp::Not(a) => 1 + bexp_size(a),
        BExp::And(a, b) | BExp::Or(a, b) => 1 + bexp_size(a) + bexp_size(b),
        BExp::Cmp(a, _, b) => 1 + cexp_size(a) + cexp_size(b),
    }
}

pub fn cexp_size(e: &CExp) -> usize {
    match e {
        CExp::Const(_) | CExp::Ref(_) => 1,
        CExp::CountAll(b) => 1 + bexp_size(b),
        CExp::CountWindow { body, .. } => 1 + bexp_size(body),
        CExp::Add(a, b) | CExp::Sub(a, b) | CExp::Min(a, b) | CExp::Max(a, b) => {
            1 + cexp_size(a) + cexp_size(b)
        }
        CExp::Ite(c, a, b) => 1 + bexp_size(c) + cexp_size(a) + cexp_size(b),
    }
}

/// Rule names referenced by a Boolean expression.
pub fn bexp_refs(e: &BExp, out: &mut BTreeSet<String>) {
    match e {
        BExp::True | BExp::False | BExp::Letter(_) | BExp::Periodic { .. } => {}
        BExp::Ref(name) => {
            out.insert(name.clone());
        }
        BExp::Not(a) => bexp_refs(a, out),
        BExp::And(a, b) | BExp::Or(a, b) => {
            bexp_refs(a, out);
            bexp_refs(b, out);
        }
        BExp::Cmp(a, _, b) => {
            cexp_refs(a, out);
            cexp_refs(b, out);
        }
    }
}

/// Rule names referenced by a counting expression.
pub fn cexp_refs(e: &CExp, out: &mut BTreeSet<String>) {
    match e {
        CExp::Const(_) => {}
        CExp::Ref(name) => {
            out.insert(name.clone());
        }
        CExp::CountAll(b) => bexp_refs(b, out),
        CExp::CountWindow { body, .. } => bexp_refs(body, out),
        CExp::Add(a, b) | CExp::Sub(a, b) | CExp::Min(a, b) | CExp::Max(a, b) => {
            cexp_refs(a, out);
            cexp_refs(b, out);
        }
        CExp::Ite(c, a, b) => {
            bexp_refs(c, out);
            cexp_refs(a, out);
            cexp_refs(b, out);
        }
    }
}

/// Rule names referenced by a rule body.
pub fn body_refs(body: &RuleBody) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    match body {
        RuleBody::Bool(b) => bexp_refs(b, &mut out),
        RuleBody::Count(c) => cexp_refs(c, &mut out),
    }
    out
}

/// Smallest set containing the last rule's name and closed under references
/// occurring in the bodies of members.
pub fn reachable_rules(p: &Program) -> BTreeSet<String> {
    let mut reachable = BTreeSet::new();
    let Some(last) = p.rules.last() else {
        return reachable;
    };
    let mut work = vec![last.name.clone()];
    while let Some(name) = work.pop() {
        if !reachable.insert(name.clone()) {
            continue;
        }
        if let Some(rule) = p.rule(&name) {
            for dep in body_refs(&rule.body) {
                if !reachable.contains(&dep) {
                    work.push(dep);
                }
            }
        }
    }
    reachable
}
