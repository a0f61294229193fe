//! Whole-unit assembly: guards + one or two program fragments + the check
//! statement relating their acceptors at the end-of-word position.

use crate::codec::SymbolCodec;
use crate::guard::{build_input_guard, PREFIX_OK};
use crate::translate::{translate_program_with, ProgramFragment, TranslateError, TranslateOptions};
use crasp_core::Program;
use lustre_core::{LBool, LInt, LustreNode};
use serde::Serialize;
use std::collections::BTreeMap;

/// What the check statement asserts about the embedded programs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Every word accepted by the first program is accepted by the second.
    Inclusion,
    /// The two programs accept exactly the same words.
    Equality,
    /// The (single) program accepts every word.
    Universality,
    /// The (single) program accepts no word.
    Emptiness,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Inclusion => "inclusion",
            CheckKind::Equality => "equality",
            CheckKind::Universality => "universality",
            CheckKind::Emptiness => "emptiness",
        }
    }

    pub fn is_binary(self) -> bool {
        matches!(self, CheckKind::Inclusion | CheckKind::Equality)
    }
}

/// A full node plus the bookkeeping needed to decode counterexamples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationUnit {
    pub node: LustreNode,
    pub codec: SymbolCodec,
    pub kind: CheckKind,
    /// Per program: rule name → stream variable (index 0 = first program).
    pub rule_vars: Vec<BTreeMap<String, String>>,
    /// Acceptor stream variable per program.
    pub acceptors: Vec<String>,
}

/// The check formula for the given kind over acceptor variables.  Every
/// formula is an initialization arrow with a vacuous first position, so
/// `pre` under it is defined; positions that are not the end of a
/// well-shaped word satisfy the check trivially.
pub fn build_check(
    kind: CheckKind,
    codec: &SymbolCodec,
    first: &str,
    second: Option<&str>,
) -> Result<LBool, TranslateError> {
    let at_eos = LBool::and(
        LBool::var(PREFIX_OK),
        LBool::eq(LInt::var("I"), LInt::Const(codec.eos_code())),
    );
    let not_at_eos = LBool::not(at_eos);
    let v1 = LBool::pre(LBool::var(first));
    let need_second = || -> Result<LBool, TranslateError> {
        match second {
            Some(s) => Ok(LBool::pre(LBool::var(s))),
            None => Err(TranslateError::MissingSecondProgram(kind.name())),
        }
    };
    let body = match kind {
        CheckKind::Inclusion => {
            let v2 = need_second()?;
            LBool::or(LBool::or(not_at_eos, LBool::not(v1)), v2)
        }
        CheckKind::Equality => {
            let v2 = need_second()?;
            LBool::or(
                LBool::or(
                    not_at_eos,
                    LBool::and(v1.clone(), v2.clone()),
                ),
                LBool::and(LBool::not(v1), LBool::not(v2)),
            )
        }
        CheckKind::Universality => {
            if second.is_some() {
                return Err(TranslateError::UnexpectedSecondProgram(kind.name()));
            }
            LBool::or(not_at_eos, v1)
        }
        CheckKind::Emptiness => {
            if second.is_some() {
                return Err(TranslateError::UnexpectedSecondProgram(kind.name()));
            }
            LBool::or(not_at_eos, LBool::not(v1))
        }
    };
    Ok(LBool::arrow(LBool::True, body))
}

/// Translate one or two programs over a shared alphabet and assemble the
/// node for the requested check.
pub fn build_unit(
    p1: &Program,
    p2: Option<&Program>,
    kind: CheckKind,
    options: &TranslateOptions,
) -> Result<TranslationUnit, TranslateError> {
    if kind.is_binary() && p2.is_none() {
        return Err(TranslateError::MissingSecondProgram(kind.name()));
    }
    if !kind.is_binary() && p2.is_some() {
        return Err(TranslateError::UnexpectedSecondProgram(kind.name()));
    }
    if let Some(p2) = p2 {
        if p2.alphabet != p1.alphabet {
            return Err(TranslateError::AlphabetMismatch);
        }
    }
    let codec = SymbolCodec::new(&p1.alphabet);

    let f1 = translate_program_with(p1, &codec, "p1", options)?;
    let f2 = match p2 {
        Some(p2) => Some(translate_program_with(p2, &codec, "p2", options)?),
        None => None,
    };

    let check = build_check(
        kind,
        &codec,
        &f1.acceptor,
        f2.as_ref().map(|f| f.acceptor.as_str()),
    )?;

    let mut bool_locals = vec![crate::guard::SYM_OK.to_string(), PREFIX_OK.to_string()];
    let mut int_locals = Vec::new();
    let mut equations = build_input_guard(&codec);
    let mut rule_vars = Vec::new();
    let mut acceptors = Vec::new();
    let mut absorb = |f: ProgramFragment| {
        bool_locals.extend(f.bool_vars);
        int_locals.extend(f.int_vars);
        equations.extend(f.equations);
        rule_vars.push(f.rule_vars);
        acceptors.push(f.acceptor);
    };
    absorb(f1);
    if let Some(f2) = f2 {
        absorb(f2);
    }

    let node = LustreNode {
        name: "main".into(),
        bool_locals,
        int_locals,
        equations,
        check,
    };
    Ok(TranslationUnit { node, codec, kind, rule_vars, acceptors })
}

#[derive(Serialize)]
struct SidecarProgram<'a> {
    prefix: String,
    rules: &'a BTreeMap<String, String>,
    acceptor: &'a str,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    check: &'a str,
    symbols: BTreeMap<&'a str, i64>,
    eos: i64,
    eternity: i64,
    programs: Vec<SidecarProgram<'a>>,
}

/// Machine-readable companion to the emitted text: the codec table and the
/// rule-variable maps, for decoding model-checker counterexamples.
pub fn sidecar_json(unit: &TranslationUnit) -> String {
    let alphabet = unit.codec.alphabet();
    let symbols: BTreeMap<&str, i64> = alphabet
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i as i64))
        .collect();
    let programs = unit
        .rule_vars
        .iter()
        .zip(&unit.acceptors)
        .enumerate()
        .map(|(i, (rules, acceptor))| SidecarProgram {
            prefix: format!("p{}", i + 1),
            rules,
            acceptor,
        })
        .collect();
    let sidecar = Sidecar {
        check: unit.kind.name(),
        symbols,
        eos: unit.codec.eos_code(),
        eternity: unit.codec.eternity_code(),
        programs,
    };
    serde_json::to_string_pretty(&sidecar).expect("sidecar serialization cannot fail")
}
