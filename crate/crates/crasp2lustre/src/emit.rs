//! Text emission. One node per unit; the check statement becomes the `ok`
//! output with a `--%PROPERTY ok;` annotation (spelling pinned by a golden
//! test and the format doc).

use crate::unit::TranslationUnit;
use lustre_core::{LBool, LExpr, LInt, LustreNode};
use std::fmt::Write;

/// Render the unit as a single self-contained node.
pub fn emit_lustre_text(unit: &TranslationUnit) -> String {
    emit_node(&unit.node)
}

pub(crate) fn emit_node(node: &LustreNode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "node {}(I: int) returns (ok: bool);", node.name);
    if !node.bool_locals.is_empty() || !node.int_locals.is_empty() {
        let _ = writeln!(out, "var");
        for v in &node.bool_locals {
            let _ = writeln!(out, "  {v} : bool;");
        }
        for v in &node.int_locals {
            let _ = writeln!(out, "  {v} : int;");
        }
    }
    let _ = writeln!(out, "let");
    for eq in &node.equations {
        match &eq.body {
            LExpr::Bool(b) => {
                let _ = writeln!(out, "  {} = {};", eq.var, bexp(b, 0));
            }
            LExpr::Int(e) => {
                let _ = writeln!(out, "  {} = {};", eq.var, iexp(e, 0));
            }
        }
    }
    let _ = writeln!(out, "  ok = {};", bexp(&node.check, 0));
    let _ = writeln!(out, "  --%PROPERTY ok;");
    let _ = writeln!(out, "  --%MAIN;");
    let _ = writeln!(out, "tel");
    out
}

/// Boolean levels: 0 arrow, 1 or, 2 and, 3 not/cmp, 4 atom.
fn bprec(e: &LBool) -> u8 {
    match e {
        LBool::Arrow(..) => 0,
        LBool::Or(..) => 1,
        LBool::And(..) => 2,
        LBool::Not(..) | LBool::Cmp(..) => 3,
        _ => 4,
    }
}

fn bexp(e: &LBool, min: u8) -> String {
    let s = match e {
        LBool::True => "true".into(),
        LBool::False => "false".into(),
        LBool::Var(v) => v.clone(),
        LBool::Not(a) => format!("not {}", bexp(a, 4)),
        LBool::And(a, b) => format!("{} and {}", bexp(a, 2), bexp(b, 3)),
        LBool::Or(a, b) => format!("{} or {}", bexp(a, 1), bexp(b, 2)),
        LBool::Cmp(a, op, b) => format!("{} {} {}", iexp(a, 1), op.symbol(), iexp(b, 1)),
        LBool::Pre(a) => format!("pre ({})", bexp(a, 0)),
        LBool::Arrow(a, b) => format!("{} -> {}", bexp(a, 1), bexp(b, 1)),
    };
    if bprec(e) < min {
        format!("({s})")
    } else {
        s
    }
}

/// Integer levels: 0 arrow/ite, 1 add/sub, 2 mod, 3 atom.
fn iprec(e: &LInt) -> u8 {
    match e {
        LInt::Arrow(..) | LInt::Ite(..) => 0,
        LInt::Add(..) | LInt::Sub(..) => 1,
        LInt::Mod(..) => 2,
        LInt::Const(k) if *k < 0 => 2,
        _ => 3,
    }
}

fn iexp(e: &LInt, min: u8) -> String {
    let s = match e {
        LInt::Const(k) => k.to_string(),
        LInt::Var(v) => v.clone(),
        LInt::Add(a, b) => format!("{} + {}", iexp(a, 1), iexp(b, 2)),
        LInt::Sub(a, b) => format!("{} - {}", iexp(a, 1), iexp(b, 2)),
        LInt::Mod(a, m) => format!("{} mod {m}", iexp(a, 3)),
        // Branches never carry a bare arrow: `->` binds loosest, so an
        // external front end would pull it out of the conditional.
        LInt::Ite(c, t, f) => {
            format!("if {} then {} else {}", bexp(c, 0), iexp(t, 1), iexp(f, 1))
        }
        LInt::Pre(a) => format!("pre ({})", iexp(a, 0)),
        LInt::Arrow(a, b) => format!("{} -> {}", iexp(a, 1), iexp(b, 1)),
    };
    if iprec(e) < min {
        format!("({s})")
    } else {
        s
    }
}
