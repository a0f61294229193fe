//! Node syntax. Boolean and integer expressions are separate sorts, so
//! ill-sorted trees are unrepresentable.

/// Comparison between two integer streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LCmpOp {
    Eq,
    Le,
    Lt,
    Ge,
    Gt,
}

impl LCmpOp {
    pub fn apply(self, a: i64, b: i64) -> bool {
        match self {
            LCmpOp::Eq => a == b,
            LCmpOp::Le => a <= b,
            LCmpOp::Lt => a < b,
            LCmpOp::Ge => a >= b,
            LCmpOp::Gt => a > b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            LCmpOp::Eq => "=",
            LCmpOp::Le => "<=",
            LCmpOp::Lt => "<",
            LCmpOp::Ge => ">=",
            LCmpOp::Gt => ">",
        }
    }
}

/// Boolean-sorted stream expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LBool {
    True,
    False,
    Var(String),
    Not(Box<LBool>),
    And(Box<LBool>, Box<LBool>),
    Or(Box<LBool>, Box<LBool>),
    Cmp(Box<LInt>, LCmpOp, Box<LInt>),
    /// Previous value; undefined at position 0.
    Pre(Box<LBool>),
    /// Initialization override: left operand at position 0, right after.
    Arrow(Box<LBool>, Box<LBool>),
}

/// Integer-sorted stream expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LInt {
    Const(i64),
    /// An integer local or the input `I`.
    Var(String),
    Add(Box<LInt>, Box<LInt>),
    Sub(Box<LInt>, Box<LInt>),
    /// Euclidean remainder; the divisor is a nonzero constant.
    Mod(Box<LInt>, i64),
    Ite(Box<LBool>, Box<LInt>, Box<LInt>),
    Pre(Box<LInt>),
    Arrow(Box<LInt>, Box<LInt>),
}

impl LBool {
    pub fn var(name: impl Into<String>) -> LBool {
        LBool::Var(name.into())
    }
    #[allow(clippy::should_implement_trait)]
    pub fn not(e: LBool) -> LBool {
        LBool::Not(Box::new(e))
    }
    pub fn and(a: LBool, b: LBool) -> LBool {
        LBool::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: LBool, b: LBool) -> LBool {
        LBool::Or(Box::new(a), Box::new(b))
    }
    pub fn cmp(a: LInt, op: LCmpOp, b: LInt) -> LBool {
        LBool::Cmp(Box::new(a), op, Box::new(b))
    }
    pub fn eq(a: LInt, b: LInt) -> LBool {
        LBool::cmp(a, LCmpOp::Eq, b)
    }
    pub fn le(a: LInt, b: LInt) -> LBool {
        LBool::cmp(a, LCmpOp::Le, b)
    }
    pub fn lt(a: LInt, b: LInt) -> LBool {
        LBool::cmp(a, LCmpOp::Lt, b)
    }
    pub fn pre(e: LBool) -> LBool {
        LBool::Pre(Box::new(e))
    }
    pub fn arrow(init: LBool, rest: LBool) -> LBool {
        LBool::Arrow(Box::new(init), Box::new(rest))
    }
}

impl LInt {
    pub fn var(name: impl Into<String>) -> LInt {
        LInt::Var(name.into())
    }
    pub fn add(a: LInt, b: LInt) -> LInt {
        LInt::Add(Box::new(a), Box::new(b))
    }
    pub fn sub(a: LInt, b: LInt) -> LInt {
        LInt::Sub(Box::new(a), Box::new(b))
    }
    pub fn modulo(e: LInt, m: i64) -> LInt {
        LInt::Mod(Box::new(e), m)
    }
    pub fn ite(c: LBool, t: LInt, f: LInt) -> LInt {
        LInt::Ite(Box::new(c), Box::new(t), Box::new(f))
    }
    pub fn pre(e: LInt) -> LInt {
        LInt::Pre(Box::new(e))
    }
    pub fn arrow(init: LInt, rest: LInt) -> LInt {
        LInt::Arrow(Box::new(init), Box::new(rest))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sort {
    Bool,
    Int,
}

/// An expression of either sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LExpr {
    Bool(LBool),
    Int(LInt),
}

impl LExpr {
    pub fn sort(&self) -> Sort {
        match self {
            LExpr::Bool(_) => Sort::Bool,
            LExpr::Int(_) => Sort::Int,
        }
    }
}

/// `<var> = <expr>;`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub var: String,
    pub body: LExpr,
}

impl Equation {
    pub fn bool(var: impl Into<String>, body: LBool) -> Equation {
        Equation { var: var.into(), body: LExpr::Bool(body) }
    }
    pub fn int(var: impl Into<String>, body: LInt) -> Equation {
        Equation { var: var.into(), body: LExpr::Int(body) }
    }
}

/// The reserved input variable.
pub const INPUT: &str = "I";

/// A node with one integer input, declared locals, one equation per local,
/// and a Boolean check statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LustreNode {
    pub name: String,
    pub bool_locals: Vec<String>,
    pub int_locals: Vec<String>,
    pub equations: Vec<Equation>,
    pub check: LBool,
}

impl LustreNode {
    pub fn sort_of(&self, var: &str) -> Option<Sort> {
        if var == INPUT {
            return Some(Sort::Int);
        }
        if self.bool_locals.iter().any(|v| v == var) {
            return Some(Sort::Bool);
        }
        if self.int_locals.iter().any(|v| v == var) {
            return Some(Sort::Int);
        }
        None
    }

    pub fn equation(&self, var: &str) -> Option<&Equation> {
        self.equations.iter().find(|e| e.var == var)
    }
}
