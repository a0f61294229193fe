//! Well-formedness: structural constraints a program must satisfy before any
//! evaluator will touch it.

use std::collections::BTreeSet;
use std::fmt;

use crate::ast::{BExp, CExp, Program, RuleBody};

/// One broken constraint, attributed to a rule when one is at fault.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Option<String>,
    pub message: String,
}

impl Violation {
    fn global(message: impl Into<String>) -> Violation {
        Violation { rule: None, message: message.into() }
    }

    fn in_rule(rule: &str, message: impl Into<String>) -> Violation {
        Violation { rule: Some(rule.to_string()), message: message.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            Some(r) => write!(f, "rule `{r}`: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

/// Check every structural invariant; `Ok(())` or the full violation list.
///
/// Constraints: nonempty rule list; unique rule names; last rule Boolean;
/// references target earlier rules of the right sort; letters belong to the
/// alphabet; `Periodic` has o < m and m >= 1; windows have rs <= re;
/// constants are nonnegative.
pub fn well_formed(p: &Program) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();

    if p.rules.is_empty() {
        violations.push(Violation::global("program has no rules"));
        return Err(violations);
    }

    if let Some(last) = p.rules.last() {
        if !last.body.is_bool() {
            violations.push(Violation::in_rule(&last.name, "last rule not Boolean"));
        }
    }

    let mut bools_before: BTreeSet<&str> = BTreeSet::new();
    let mut counts_before: BTreeSet<&str> = BTreeSet::new();
    let mut seen: BTreeSet<&str> = BTreeSet::new();

    for rule in &p.rules {
        if !seen.insert(&rule.name) {
            violations.push(Violation::in_rule(&rule.name, "duplicate rule name"));
        }
        let mut ctx = Ctx {
            program: p,
            rule: &rule.name,
            bools_before: &bools_before,
            counts_before: &counts_before,
            violations: &mut violations,
        };
        match &rule.body {
            RuleBody::Bool(b) => ctx.check_bexp(b),
            RuleBody::Count(c) => ctx.check_cexp(c),
        }
        match &rule.body {
            RuleBody::Bool(_) => {
                bools_before.insert(&rule.name);
            }
            RuleBody::Count(_) => {
                counts_before.insert(&rule.name);
            }
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

struct Ctx<'a> {
    program: &'a Program,
    rule: &'a str,
    bools_before: &'a BTreeSet<&'a str>,
    counts_before: &'a BTreeSet<&'a str>,
    violations: &'a mut Vec<Violation>,
}

impl Ctx<'_> {
    fn push(&mut self, message: String) {
        self.violations.push(Violation::in_rule(self.rule, message));
    }

    fn check_bexp(&mut self, e: &BExp) {
        match e {
            BExp::True | BExp::False => {}
            BExp::Letter(sym) => {
                if !self.program.alphabet.contains(sym) {
                    self.push(format!("letter `{sym}` not in alphabet"));
                }
            }
            BExp::Ref(name) => {
                if !self.bools_before.contains(name.as_str()) {
                    if self.counts_before.contains(name.as_str()) {
                        self.push(format!("`{name}` is a Count rule, referenced as Boolean"));
                    } else if self.program.rule(name).is_some() {
                        self.push(format!("forward reference to `{name}`"));
                    } else {
                        self.push(format!("reference to undeclared rule `{name}`"));
                    }
                }
            }
            BExp::Not(a) => self.check_bexp(a),
            BExp::And(a, b) | BExp::Or(a, b) => {
                self.check_bexp(a);
                self.check_bexp(b);
            }
            BExp::Cmp(a, _, b) => {
                self.check_cexp(a);
                self.check_cexp(b);
            }
            BExp::Periodic { m, o } => {
                if *m < 1 {
                    self.push("periodic test needs m >= 1".to_string());
                } else if o >= m {
                    self.push(format!("periodic test needs o < m, got {m}%{o}"));
                }
            }
        }
    }

    fn check_cexp(&mut self, e: &CExp) {
        match e {
            CExp::Const(k) => {
                if *k < 0 {
                    self.push(format!("negative constant {k}"));
                }
            }
            CExp::Ref(name) => {
                if !self.counts_before.contains(name.as_str()) {
                    if self.bools_before.contains(name.as_str()) {
                        self.push(format!("`{name}` is a Boolean rule, referenced as Count"));
                    } else if self.program.rule(name).is_some() {
                        self.push(format!("forward reference to `{name}`"));
                    } else {
                        self.push(format!("reference to undeclared rule `{name}`"));
                    }
                }
            }
            CExp::CountAll(b) => self.check_bexp(b),
            CExp::CountWindow { rs, re, body } => {
                if rs > re {
                    self.push(format!("window bounds must satisfy rs <= re, got [{rs},{re}]"));
                }
                self.check_bexp(body);
            }
            CExp::Add(a, b) | CExp::Sub(a, b) | CExp::Min(a, b) | CExp::Max(a, b) => {
                self.check_cexp(a);
                self.check_cexp(b);
            }
            CExp::Ite(c, a, b) => {
                self.check_bexp(c);
                self.check_cexp(a);
                self.check_cexp(b);
            }
        }
    }
}
