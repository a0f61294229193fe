//! Rule-by-rule translation.  Each Boolean rule becomes one equation; each
//! count rule becomes an equation plus auxiliaries: an indicator per
//! counted body, a running-sum accumulator per full count, a shared
//! position counter for periodicity predicates, and operand variables for
//! min/max.

use crate::codec::SymbolCodec;
use crasp_core::{well_formed, BExp, CExp, CmpOp, Program, RuleBody, Violation};
use lustre_core::{Equation, LBool, LCmpOp, LInt};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TranslateError {
    #[error("program is not well-formed: {}", render(.0))]
    IllFormed(Vec<Violation>),
    #[error("window upper offset {re} exceeds the supported maximum {max}")]
    WindowTooWide { re: u32, max: u32 },
    #[error("the two programs declare different alphabets")]
    AlphabetMismatch,
    #[error("check kind `{0}` relates two programs but one was given")]
    MissingSecondProgram(&'static str),
    #[error("check kind `{0}` takes one program but two were given")]
    UnexpectedSecondProgram(&'static str),
}

fn render(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone)]
pub struct TranslateOptions {
    /// Windows unroll into one `pre` chain per offset; refuse offsets past
    /// this bound rather than emit enormous expressions.
    pub max_window: u32,
}

impl Default for TranslateOptions {
    fn default() -> Self {
        TranslateOptions { max_window: 64 }
    }
}

/// The equations for one embedded program, plus its variable bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgramFragment {
    pub equations: Vec<Equation>,
    pub bool_vars: Vec<String>,
    pub int_vars: Vec<String>,
    /// Stream variable carrying the last (deciding) rule.
    pub acceptor: String,
    /// Rule name → stream variable.
    pub rule_vars: BTreeMap<String, String>,
}

/// Translate with the default name prefix and options.
pub fn translate_program(
    p: &Program,
    codec: &SymbolCodec,
) -> Result<ProgramFragment, TranslateError> {
    translate_program_with(p, codec, "p1", &TranslateOptions::default())
}

/// Translate one program; every generated variable starts with `prefix`,
/// so fragments with distinct prefixes share nothing but the input.
pub fn translate_program_with(
    p: &Program,
    codec: &SymbolCodec,
    prefix: &str,
    options: &TranslateOptions,
) -> Result<ProgramFragment, TranslateError> {
    if let Err(violations) = well_formed(p) {
        return Err(TranslateError::IllFormed(violations));
    }
    let mut tr = Translator {
        codec,
        prefix,
        options,
        used: BTreeSet::new(),
        rule_vars: BTreeMap::new(),
        equations: Vec::new(),
        bool_vars: Vec::new(),
        int_vars: Vec::new(),
        pos_var: None,
        fresh_counter: 0,
    };
    // Rule variables are claimed up front so auxiliaries can't collide.
    for rule in &p.rules {
        let var = format!("{prefix}_{}", rule.name);
        tr.used.insert(var.clone());
        tr.rule_vars.insert(rule.name.clone(), var);
    }

    for rule in &p.rules {
        let var = tr.rule_vars[&rule.name].clone();
        match &rule.body {
            RuleBody::Bool(b) => {
                let body = tr.bexp(b)?;
                tr.bool_vars.push(var.clone());
                tr.equations.push(Equation::bool(var, body));
            }
            RuleBody::Count(CExp::CountAll(inner)) => {
                // The rule variable doubles as the accumulator.
                let indicator = tr.indicator(inner)?;
                let body = LInt::arrow(
                    LInt::var(&indicator),
                    LInt::add(LInt::pre(LInt::var(&var)), LInt::var(&indicator)),
                );
                tr.int_vars.push(var.clone());
                tr.equations.push(Equation::int(var, body));
            }
            RuleBody::Count(c) => {
                let body = tr.cexp(c)?;
                tr.int_vars.push(var.clone());
                tr.equations.push(Equation::int(var, body));
            }
        }
    }

    let mut equations = tr.equations;
    let mut int_vars = tr.int_vars;
    if let Some(pos) = &tr.pos_var {
        // Position counter 0, 1, 2, … shared by this program's periodicity
        // tests (never by the other program's).
        equations.insert(
            0,
            Equation::int(
                pos.clone(),
                LInt::arrow(
                    LInt::Const(0),
                    LInt::add(LInt::pre(LInt::var(pos)), LInt::Const(1)),
                ),
            ),
        );
        int_vars.insert(0, pos.clone());
    }

    // Well-formedness was checked above, so a last rule exists.
    let acceptor = tr.rule_vars[&p.last_rule().expect("nonempty program").name].clone();
    Ok(ProgramFragment {
        equations,
        bool_vars: tr.bool_vars,
        int_vars,
        acceptor,
        rule_vars: tr.rule_vars,
    })
}

struct Translator<'a> {
    codec: &'a SymbolCodec,
    prefix: &'a str,
    options: &'a TranslateOptions,
    used: BTreeSet<String>,
    rule_vars: BTreeMap<String, String>,
    equations: Vec<Equation>,
    bool_vars: Vec<String>,
    int_vars: Vec<String>,
    pos_var: Option<String>,
    fresh_counter: u32,
}

impl Translator<'_> {
    /// Claim an unused variable name starting from `{prefix}_{base}`.
    fn fresh(&mut self, base: &str) -> String {
        let mut candidate = format!("{}_{base}", self.prefix);
        let mut bump = 0;
        while self.used.contains(&candidate) {
            bump += 1;
            candidate = format!("{}_{base}_{bump}", self.prefix);
        }
        self.used.insert(candidate.clone());
        candidate
    }

    fn position_counter(&mut self) -> String {
        if let Some(p) = &self.pos_var {
            return p.clone();
        }
        let name = self.fresh("pos");
        self.pos_var = Some(name.clone());
        name
    }

    /// 0/1 variable tracking a Boolean body.
    fn indicator(&mut self, body: &BExp) -> Result<String, TranslateError> {
        self.fresh_counter += 1;
        let name = self.fresh(&format!("n{}", self.fresh_counter));
        let cond = self.bexp(body)?;
        self.int_vars.push(name.clone());
        self.equations.push(Equation::int(
            name.clone(),
            LInt::ite(cond, LInt::Const(1), LInt::Const(0)),
        ));
        Ok(name)
    }

    /// Bind an integer expression to a fresh variable (min/max operands).
    fn operand(&mut self, tag: &str, e: &CExp) -> Result<String, TranslateError> {
        self.fresh_counter += 1;
        let name = self.fresh(&format!("{tag}{}", self.fresh_counter));
        let body = self.cexp(e)?;
        self.int_vars.push(name.clone());
        self.equations.push(Equation::int(name.clone(), body));
        Ok(name)
    }

    fn bexp(&mut self, e: &BExp) -> Result<LBool, TranslateError> {
        Ok(match e {
            BExp::True => LBool::True,
            BExp::False => LBool::False,
            BExp::Letter(sym) => {
                let id = self
                    .codec
                    .alphabet()
                    .index_of(sym)
                    .expect("well-formed program uses alphabet letters");
                LBool::eq(LInt::var("I"), LInt::Const(self.codec.letter_code(id)))
            }
            BExp::Ref(name) => LBool::var(&self.rule_vars[name]),
            BExp::Not(a) => LBool::not(self.bexp(a)?),
            BExp::And(a, b) => LBool::and(self.bexp(a)?, self.bexp(b)?),
            BExp::Or(a, b) => LBool::or(self.bexp(a)?, self.bexp(b)?),
            BExp::Cmp(l, op, r) => {
                let l = self.cexp(l)?;
                let r = self.cexp(r)?;
                let op = match op {
                    CmpOp::Eq => LCmpOp::Eq,
                    CmpOp::Le => LCmpOp::Le,
                    CmpOp::Lt => LCmpOp::Lt,
                };
                LBool::cmp(l, op, r)
            }
            BExp::Periodic { m, o } => {
                let pos = self.position_counter();
                LBool::eq(
                    LInt::modulo(LInt::var(pos), i64::from(*m)),
                    LInt::Const(i64::from(*o)),
                )
            }
        })
    }

    fn cexp(&mut self, e: &CExp) -> Result<LInt, TranslateError> {
        Ok(match e {
            CExp::Const(k) => LInt::Const(*k),
            CExp::Ref(name) => LInt::var(&self.rule_vars[name]),
            CExp::CountAll(body) => {
                let indicator = self.indicator(body)?;
                self.fresh_counter += 1;
                let acc = self.fresh(&format!("c{}", self.fresh_counter));
                self.int_vars.push(acc.clone());
                self.equations.push(Equation::int(
                    acc.clone(),
                    LInt::arrow(
                        LInt::var(&indicator),
                        LInt::add(LInt::pre(LInt::var(&acc)), LInt::var(&indicator)),
                    ),
                ));
                LInt::var(acc)
            }
            CExp::CountWindow { rs, re, body } => {
                if *re > self.options.max_window {
                    return Err(TranslateError::WindowTooWide {
                        re: *re,
                        max: self.options.max_window,
                    });
                }
                let indicator = self.indicator(body)?;
                // Σ over i in [rs, re] of the indicator i steps back, where
                // reading past the start contributes 0.
                let mut sum: Option<LInt> = None;
                for i in *rs..=*re {
                    let term = safe_pre(i, LInt::var(&indicator));
                    sum = Some(match sum {
                        None => term,
                        Some(acc) => LInt::add(acc, term),
                    });
                }
                sum.expect("window bounds give at least one term")
            }
            CExp::Add(a, b) => LInt::add(self.cexp(a)?, self.cexp(b)?),
            CExp::Sub(a, b) => LInt::sub(self.cexp(a)?, self.cexp(b)?),
            CExp::Min(a, b) => {
                let a = self.operand("a", a)?;
                let b = self.operand("b", b)?;
                LInt::ite(
                    LBool::le(LInt::var(&a), LInt::var(&b)),
                    LInt::var(&a),
                    LInt::var(&b),
                )
            }
            CExp::Max(a, b) => {
                let a = self.operand("a", a)?;
                let b = self.operand("b", b)?;
                LInt::ite(
                    LBool::le(LInt::var(&a), LInt::var(&b)),
                    LInt::var(&b),
                    LInt::var(&a),
                )
            }
            CExp::Ite(c, t, f) => {
                let c = self.bexp(c)?;
                LInt::ite(c, self.cexp(t)?, self.cexp(f)?)
            }
        })
    }
}

/// `pre` iterated i times, padded with 0 before the start of the stream.
fn safe_pre(i: u32, e: LInt) -> LInt {
    let mut out = e;
    for _ in 0..i {
        out = LInt::arrow(LInt::Const(0), LInt::pre(out));
    }
    out
}
