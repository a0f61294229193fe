//! Abstract syntax: Boolean and counting expressions, rules, programs.

use crate::alphabet::Alphabet;

/// Comparison operator between counting expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Eq,
    Le,
    Lt,
}

impl CmpOp {
    pub fn apply(self, a: i64, b: i64) -> bool {
        match self {
            CmpOp::Eq => a == b,
            CmpOp::Le => a <= b,
            CmpOp::Lt => a < b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Eq => "=",
            CmpOp::Le => "<=",
            CmpOp::Lt => "<",
        }
    }
}

/// Boolean expression, evaluated at a position of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BExp {
    True,
    False,
    /// Current symbol equals the named alphabet symbol.
    Letter(String),
    /// Value of an earlier Boolean rule at the same position.
    Ref(String),
    Not(Box<BExp>),
    And(Box<BExp>, Box<BExp>),
    Or(Box<BExp>, Box<BExp>),
    Cmp(Box<CExp>, CmpOp, Box<CExp>),
    /// Holds at positions j with (j-1) mod m = o (first position is j = 1,
    /// so this is a 0-based residue test). Requires o < m.
    Periodic { m: u32, o: u32 },
}

/// Counting expression, evaluated to an integer at a position of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CExp {
    Const(i64),
    /// Value of an earlier Count rule at the same position.
    Ref(String),
    /// Number of positions i <= j where the body holds.
    CountAll(Box<BExp>),
    /// Number of positions i in [j - re, j - rs] (clipped to 1..=j) where the
    /// body holds. Requires rs <= re.
    CountWindow { rs: u32, re: u32, body: Box<BExp> },
    Add(Box<CExp>, Box<CExp>),
    Sub(Box<CExp>, Box<CExp>),
    Min(Box<CExp>, Box<CExp>),
    Max(Box<CExp>, Box<CExp>),
    Ite(Box<BExp>, Box<CExp>, Box<CExp>),
}

impl BExp {
    pub fn letter(sym: impl Into<String>) -> BExp {
        BExp::Letter(sym.into())
    }

    pub fn bref(name: impl Into<String>) -> BExp {
        BExp::Ref(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: BExp) -> BExp {
        BExp::Not(Box::new(e))
    }

    pub fn and(a: BExp, b: BExp) -> BExp {
        BExp::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: BExp, b: BExp) -> BExp {
        BExp::Or(Box::new(a), Box::new(b))
    }

    pub fn cmp(a: CExp, op: CmpOp, b: CExp) -> BExp {
        BExp::Cmp(Box::new(a), op, Box::new(b))
    }

    pub fn eq(a: CExp, b: CExp) -> BExp {
        BExp::cmp(a, CmpOp::Eq, b)
    }

    pub fn le(a: CExp, b: CExp) -> BExp {
        BExp::cmp(a, CmpOp::Le, b)
    }

    pub fn lt(a: CExp, b: CExp) -> BExp {
        BExp::cmp(a, CmpOp::Lt, b)
    }

    pub fn periodic(m: u32, o: u32) -> BExp {
        BExp::Periodic { m, o }
    }
}

impl CExp {
    pub fn num(k: i64) -> CExp {
        CExp::Const(k)
    }

    pub fn cref(name: impl Into<String>) -> CExp {
        CExp::Ref(name.into())
    }

    pub fn count(body: BExp) -> CExp {
        CExp::CountAll(Box::new(body))
    }

    pub fn window(rs: u32, re: u32, body: BExp) -> CExp {
        CExp::CountWindow { rs, re, body: Box::new(body) }
    }

    pub fn add(a: CExp, b: CExp) -> CExp {
        CExp::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: CExp, b: CExp) -> CExp {
        CExp::Sub(Box::new(a), Box::new(b))
    }

    pub fn min(a: CExp, b: CExp) -> CExp {
        CExp::Min(Box::new(a), Box::new(b))
    }

    pub fn max(a: CExp, b: CExp) -> CExp {
        CExp::Max(Box::new(a), Box::new(b))
    }

    pub fn ite(c: BExp, a: CExp, b: CExp) -> CExp {
        CExp::Ite(Box::new(c), Box::new(a), Box::new(b))
    }
}

/// A rule body is one expression of either sort.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RuleBody {
    Bool(BExp),
    Count(CExp),
}

impl RuleBody {
    pub fn is_bool(&self) -> bool {
        matches!(self, RuleBody::Bool(_))
    }
}

/// A named rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub name: String,
    pub body: RuleBody,
}

impl Rule {
    pub fn bool_rule(name: impl Into<String>, body: BExp) -> Rule {
        Rule { name: name.into(), body: RuleBody::Bool(body) }
    }

    pub fn count_rule(name: impl Into<String>, body: CExp) -> Rule {
        Rule { name: name.into(), body: RuleBody::Count(body) }
    }
}

/// An ordered rule list over an alphabet. The last rule must be Boolean and
/// decides acceptance at the final position of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Program {
    pub alphabet: Alphabet,
    pub rules: Vec<Rule>,
}

impl Program {
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>) -> Program {
        Program { alphabet, rules }
    }

    pub fn rule_index(&self, name: &str) -> Option<usize> {
        self.rules.iter().position(|r| r.name == name)
    }

    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.name == name)
    }

    pub fn last_rule(&self) -> Option<&Rule> {
        self.rules.last()
    }
}
