//! Program shapes: the search space is all programs with a fixed number of
//! counting rules, then Boolean rules, over bodies from a shallow fragment.

use crasp_core::{BExp, CExp, CmpOp, Program, RuleBody};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("a shape needs at least one Boolean rule for the acceptor")]
    NoBooleanRule,
    #[error("the constant bound must be nonnegative")]
    NegativeConstantBound,
}

/// σ = (N_b, N_c, K): rule counts and the largest constant allowed in
/// counting expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub n_bool: usize,
    pub n_count: usize,
    pub max_const: i64,
}

impl Shape {
    pub fn new(n_bool: usize, n_count: usize, max_const: i64) -> Result<Shape, ShapeError> {
        if n_bool == 0 {
            return Err(ShapeError::NoBooleanRule);
        }
        if max_const < 0 {
            return Err(ShapeError::NegativeConstantBound);
        }
        Ok(Shape { n_bool, n_count, max_const })
    }

    pub fn total_rules(&self) -> usize {
        self.n_bool + self.n_count
    }

    /// Canonical rule names: counting rules `C1..`, Boolean rules `B1..`
    /// with the final acceptor named `Out`.
    pub fn rule_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.total_rules());
        for i in 1..=self.n_count {
            names.push(format!("C{i}"));
        }
        for i in 1..self.n_bool {
            names.push(format!("B{i}"));
        }
        names.push("Out".to_string());
        names
    }

    /// Structural membership in 𝓟_σ: counting rules first, then Boolean;
    /// every body inside the shallow mutation fragment; constants within
    /// 0..=K. Names are not inspected.
    pub fn conforms(&self, p: &Program) -> bool {
        if p.rules.len() != self.total_rules() {
            return false;
        }
        for (i, rule) in p.rules.iter().enumerate() {
            let ok = match (&rule.body, i < self.n_count) {
                (RuleBody::Count(c), true) => self.shallow_count_body(c),
                (RuleBody::Bool(b), false) => self.shallow_bool_body(b),
                _ => return false,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// atom | ¬atom | (¬)atom ∧/∨ (¬)atom — no deeper nesting.
    fn shallow_bool_body(&self, e: &BExp) -> bool {
        match e {
            BExp::And(a, b) | BExp::Or(a, b) => {
                self.negated_atom(a) && self.negated_atom(b)
            }
            other => self.negated_atom(other),
        }
    }

    fn negated_atom(&self, e: &BExp) -> bool {
        match e {
            BExp::Not(inner) => self.bool_atom(inner),
            other => self.bool_atom(other),
        }
    }

    /// Letter, earlier-rule reference, periodicity, or a comparison of two
    /// count atoms.
    fn bool_atom(&self, e: &BExp) -> bool {
        match e {
            BExp::Letter(_) | BExp::Ref(_) | BExp::Periodic { .. } => true,
            BExp::Cmp(a, op, b) => {
                matches!(op, CmpOp::Eq | CmpOp::Le | CmpOp::Lt)
                    && self.count_atom(a)
                    && self.count_atom(b)
            }
            _ => false,
        }
    }

    /// x | op(x, y) | atom ? x : y, for count atoms x, y.
    fn shallow_count_body(&self, e: &CExp) -> bool {
        match e {
            CExp::Add(a, b) | CExp::Sub(a, b) | CExp::Min(a, b) | CExp::Max(a, b) => {
                self.count_atom(a) && self.count_atom(b)
            }
            CExp::Ite(c, a, b) => {
                self.bool_atom(c) && self.count_atom(a) && self.count_atom(b)
            }
            other => self.count_atom(other),
        }
    }

    /// Constant within the bound, rule reference, or a count of a
    /// comparison-free predicate.
    fn count_atom(&self, e: &CExp) -> bool {
        match e {
            CExp::Const(k) => 0 <= *k && *k <= self.max_const,
            CExp::Ref(_) => true,
            CExp::CountAll(phi) => self.comparison_free_atom(phi),
            CExp::CountWindow { rs, re, body } => {
                *rs <= *re && *re <= 3 && self.comparison_free_atom(body)
            }
            _ => false,
        }
    }

    fn comparison_free_atom(&self, e: &BExp) -> bool {
        matches!(e, BExp::Letter(_) | BExp::Ref(_) | BExp::Periodic { .. })
    }
}
