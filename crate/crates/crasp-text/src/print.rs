//! Canonical printer. Parentheses are emitted only where the grammar would
//! otherwise re-associate: nested `or`/`and` on the right, `not` over a
//! connective, `+`/`-` right operands, and `if/then/else` used as an operand.

use crate::parse::SourceFile;
use crasp_core::{BExp, CExp, Program, RuleBody};
use std::fmt::Write;

/// Print with the default header name `main`.
pub fn print_program(p: &Program) -> String {
    print_named(p, "main")
}

pub fn print_source(s: &SourceFile) -> String {
    print_named(&s.program, &s.name)
}

fn print_named(p: &Program, name: &str) -> String {
    let mut out = String::new();
    let symbols: Vec<String> = p
        .alphabet
        .symbols()
        .iter()
        .map(|s| format!("'{s}'"))
        .collect();
    let _ = writeln!(out, "program {name} over {{{}}}", symbols.join(", "));
    let _ = writeln!(out);
    for rule in &p.rules {
        match &rule.body {
            RuleBody::Bool(b) => {
                let _ = writeln!(out, "bool {} := {}", rule.name, bexp(b, 0));
            }
            RuleBody::Count(c) => {
                let _ = writeln!(out, "count {} := {}", rule.name, cexp(c, 0));
            }
        }
    }
    out
}

/// Levels: 0 = or, 1 = and, 2 = not, 3 = atom.
fn bprec(e: &BExp) -> u8 {
    match e {
        BExp::Or(..) => 0,
        BExp::And(..) => 1,
        BExp::Not(..) => 2,
        _ => 3,
    }
}

fn bexp(e: &BExp, min: u8) -> String {
    let s = match e {
        BExp::True => "true".into(),
        BExp::False => "false".into(),
        BExp::Letter(sym) => format!("'{sym}'"),
        BExp::Ref(name) => name.clone(),
        BExp::Periodic { m, o } => format!("{m}%{o}"),
        BExp::Not(inner) => format!("not {}", bexp(inner, 2)),
        BExp::And(a, b) => format!("{} and {}", bexp(a, 1), bexp(b, 2)),
        BExp::Or(a, b) => format!("{} or {}", bexp(a, 0), bexp(b, 1)),
        BExp::Cmp(l, op, r) => format!("{} {} {}", cexp(l, 0), op.symbol(), cexp(r, 0)),
    };
    if bprec(e) < min {
        format!("({s})")
    } else {
        s
    }
}

/// Levels: 0 = if/then/else, 1 = additive, 2 = term.
fn cprec(e: &CExp) -> u8 {
    match e {
        CExp::Ite(..) => 0,
        CExp::Add(..) | CExp::Sub(..) => 1,
        _ => 2,
    }
}

fn cexp(e: &CExp, min: u8) -> String {
    let s = match e {
        CExp::Const(n) => n.to_string(),
        CExp::Ref(name) => name.clone(),
        CExp::CountAll(body) => format!("#({})", bexp(body, 0)),
        CExp::CountWindow { rs, re, body } => format!("#[{rs},{re}]({})", bexp(body, 0)),
        CExp::Add(a, b) => format!("{} + {}", cexp(a, 1), cexp(b, 2)),
        CExp::Sub(a, b) => format!("{} - {}", cexp(a, 1), cexp(b, 2)),
        CExp::Min(a, b) => format!("min({}, {})", cexp(a, 0), cexp(b, 0)),
        CExp::Max(a, b) => format!("max({}, {})", cexp(a, 0), cexp(b, 0)),
        CExp::Ite(c, t, f) => {
            format!("if {} then {} else {}", bexp(c, 0), cexp(t, 0), cexp(f, 0))
        }
    };
    if cprec(e) < min {
        format!("({s})")
    } else {
        s
    }
}
