//! Frozen stream tables for the bracket-counting node, arrow/pre behavior,
//! static rejection, and the runtime defined-ness backstop.

use lustre_core::{
    bounded_check, lval_run, validate_node, CheckOutcome, Equation, EvalError, LBool, LExpr,
    LInt, LValues, LustreNode, NodeError, StreamTrace,
};

/// Counts of 0/1 inputs with a "right exceeded left" flag: the acceptor is
/// true exactly on balanced prefixes with no violation.
fn counters_node() -> LustreNode {
    let acc = |c: &str, n: &str| {
        Equation::int(
            c,
            LInt::add(
                LInt::arrow(LInt::Const(0), LInt::pre(LInt::var(c))),
                LInt::var(n),
            ),
        )
    };
    LustreNode {
        name: "counters".into(),
        bool_locals: vec!["V".into(), "D".into()],
        int_locals: vec!["Nl".into(), "Nr".into(), "Cl".into(), "Cr".into(), "Nv".into(), "Cv".into()],
        equations: vec![
            Equation::int(
                "Nl",
                LInt::ite(LBool::eq(LInt::var("I"), LInt::Const(0)), LInt::Const(1), LInt::Const(0)),
            ),
            Equation::int(
                "Nr",
                LInt::ite(LBool::eq(LInt::var("I"), LInt::Const(1)), LInt::Const(1), LInt::Const(0)),
            ),
            acc("Cl", "Nl"),
            acc("Cr", "Nr"),
            Equation::bool("V", LBool::lt(LInt::var("Cl"), LInt::var("Cr"))),
            Equation::int(
                "Nv",
                LInt::ite(LBool::var("V"), LInt::Const(1), LInt::Const(0)),
            ),
            acc("Cv", "Nv"),
            Equation::bool(
                "D",
                LBool::and(
                    LBool::eq(LInt::var("Cv"), LInt::Const(0)),
                    LBool::eq(LInt::var("Cl"), LInt::var("Cr")),
                ),
            ),
        ],
        check: LBool::or(
            LBool::not(LBool::eq(LInt::var("Cr"), LInt::Const(3))),
            LBool::var("D"),
        ),
    }
}

#[test]
fn counters_execution_table() {
    let node = counters_node();
    validate_node(&node).unwrap();
    let trace = lval_run(&node, &[0, 0, 1, 0, 1, 1, 1]).unwrap();
    assert_eq!(trace.int_values("Nl").unwrap(), &[1, 1, 0, 1, 0, 0, 0]);
    assert_eq!(trace.int_values("Nr").unwrap(), &[0, 0, 1, 0, 1, 1, 1]);
    assert_eq!(trace.int_values("Cl").unwrap(), &[1, 2, 2, 3, 3, 3, 3]);
    assert_eq!(trace.int_values("Cr").unwrap(), &[0, 0, 1, 1, 2, 3, 4]);
    let f = false;
    assert_eq!(trace.bool_values("V").unwrap(), &[f, f, f, f, f, f, true]);
    assert_eq!(trace.int_values("Nv").unwrap(), &[0, 0, 0, 0, 0, 0, 1]);
    assert_eq!(trace.int_values("Cv").unwrap(), &[0, 0, 0, 0, 0, 0, 1]);
    assert_eq!(trace.bool_values("D").unwrap(), &[f, f, f, f, f, true, f]);
}

#[test]
fn check_holds_and_fails_where_expected() {
    let node = counters_node();
    let ok = bounded_check(&node, [[0i64, 0, 1, 0, 1, 1, 1].as_slice()]).unwrap();
    assert_eq!(ok, CheckOutcome::Ok);

    // Three right brackets straight away: C_r reaches 3 at position 2 with
    // the prefix unbalanced.
    let bad = bounded_check(&node, [[1i64, 1, 1].as_slice()]).unwrap();
    assert_eq!(
        bad,
        CheckOutcome::Violation { input: vec![1, 1, 1], position: 2 }
    );

    // A trivially true check never reports a violation.
    let mut trivial = counters_node();
    trivial.check = LBool::True;
    assert_eq!(
        bounded_check(&trivial, [[1i64, 1, 1].as_slice()]).unwrap(),
        CheckOutcome::Ok
    );
}

fn single_int_node(body: LInt) -> LustreNode {
    LustreNode {
        name: "n".into(),
        bool_locals: vec![],
        int_locals: vec!["X".into()],
        equations: vec![Equation::int("X", body)],
        check: LBool::True,
    }
}

#[test]
fn arrow_initializes_then_follows() {
    // X = 1 -> 2 is the stream 1, 2, 2, 2, …
    let node = single_int_node(LInt::arrow(LInt::Const(1), LInt::Const(2)));
    let trace = lval_run(&node, &[9, 9, 9, 9]).unwrap();
    assert_eq!(trace.int_values("X").unwrap(), &[1, 2, 2, 2]);

    // X = 1 -> pre(X) + 1 counts positions: 1, 2, 3, …
    let node = single_int_node(LInt::arrow(
        LInt::Const(1),
        LInt::add(LInt::pre(LInt::var("X")), LInt::Const(1)),
    ));
    validate_node(&node).unwrap();
    let trace = lval_run(&node, &[9, 9, 9, 9]).unwrap();
    assert_eq!(trace.int_values("X").unwrap(), &[1, 2, 3, 4]);
}

#[test]
fn arrow_is_idempotent_at_the_tail() {
    let plain = single_int_node(LInt::arrow(LInt::Const(1), LInt::Const(2)));
    let nested = single_int_node(LInt::arrow(
        LInt::Const(1),
        LInt::arrow(LInt::Const(1), LInt::Const(2)),
    ));
    let a = lval_run(&plain, &[0, 0, 0, 0]).unwrap();
    let b = lval_run(&nested, &[0, 0, 0, 0]).unwrap();
    assert_eq!(a.int_values("X"), b.int_values("X"));
}

#[test]
fn longer_runs_extend_shorter_ones() {
    let node = counters_node();
    let input = [0i64, 0, 1, 0, 1, 1, 1];
    let full = lval_run(&node, &input).unwrap();
    for k in 1..=input.len() {
        let partial = lval_run(&node, &input[..k]).unwrap();
        for var in ["Nl", "Nr", "Cl", "Cr", "Nv", "Cv"] {
            assert_eq!(
                partial.int_values(var).unwrap(),
                &full.int_values(var).unwrap()[..k],
                "{var} at prefix {k}"
            );
        }
        for var in ["V", "D"] {
            assert_eq!(
                partial.bool_values(var).unwrap(),
                &full.bool_values(var).unwrap()[..k],
                "{var} at prefix {k}"
            );
        }
    }
}

/// Re-evaluate each equation body against the finished trace; every stored
/// value must satisfy its equation pointwise.
#[test]
fn traces_satisfy_their_equations() {
    let node = counters_node();
    for input in [vec![0i64, 0, 1, 0, 1, 1, 1], vec![1, 1, 1], vec![2, 0, 2, 1]] {
        let trace = lval_run(&node, &input).unwrap();
        for eq in &node.equations {
            for i in 0..input.len() {
                match &eq.body {
                    LExpr::Bool(b) => {
                        let want = trace.bool_values(&eq.var).unwrap()[i];
                        assert_eq!(reval_bool(&trace, b, i), Some(want), "{} at {i}", eq.var);
                    }
                    LExpr::Int(e) => {
                        let want = trace.int_values(&eq.var).unwrap()[i];
                        assert_eq!(reval_int(&trace, e, i), Some(want), "{} at {i}", eq.var);
                    }
                }
            }
        }
    }
}

// Independent trace-reading interpreter used as an oracle above.
fn reval_bool(t: &StreamTrace, e: &LBool, i: usize) -> Option<bool> {
    Some(match e {
        LBool::True => true,
        LBool::False => false,
        LBool::Var(v) => match t.get(v)? {
            LValues::Bool(xs) => *xs.get(i)?,
            LValues::Int(_) => return None,
        },
        LBool::Not(a) => !reval_bool(t, a, i)?,
        LBool::And(a, b) => reval_bool(t, a, i)? && reval_bool(t, b, i)?,
        LBool::Or(a, b) => reval_bool(t, a, i)? || reval_bool(t, b, i)?,
        LBool::Cmp(a, op, b) => op.apply(reval_int(t, a, i)?, reval_int(t, b, i)?),
        LBool::Pre(a) => reval_bool(t, a, i.checked_sub(1)?)?,
        LBool::Arrow(a, b) => {
            if i == 0 {
                reval_bool(t, a, 0)?
            } else {
                reval_bool(t, b, i)?
            }
        }
    })
}

fn reval_int(t: &StreamTrace, e: &LInt, i: usize) -> Option<i64> {
    Some(match e {
        LInt::Const(k) => *k,
        LInt::Var(v) if v == "I" => *t.input().get(i)?,
        LInt::Var(v) => match t.get(v)? {
            LValues::Int(xs) => *xs.get(i)?,
            LValues::Bool(_) => return None,
        },
        LInt::Add(a, b) => reval_int(t, a, i)? + reval_int(t, b, i)?,
        LInt::Sub(a, b) => reval_int(t, a, i)? - reval_int(t, b, i)?,
        LInt::Mod(a, m) => reval_int(t, a, i)?.rem_euclid(*m),
        LInt::Ite(c, a, b) => {
            if reval_bool(t, c, i)? {
                reval_int(t, a, i)?
            } else {
                reval_int(t, b, i)?
            }
        }
        LInt::Pre(a) => reval_int(t, a, i.checked_sub(1)?)?,
        LInt::Arrow(a, b) => {
            if i == 0 {
                reval_int(t, a, 0)?
            } else {
                reval_int(t, b, i)?
            }
        }
    })
}

#[test]
fn unguarded_pre_is_rejected_statically() {
    let bare = single_int_node(LInt::pre(LInt::var("X")));
    let errs = validate_node(&bare).unwrap_err();
    assert!(errs.iter().any(|e| matches!(e, NodeError::UnguardedPre { .. })), "{errs:?}");

    // One arrow does not cover a doubly-nested pre.
    let double = single_int_node(LInt::arrow(
        LInt::Const(0),
        LInt::pre(LInt::pre(LInt::var("X"))),
    ));
    let errs = validate_node(&double).unwrap_err();
    assert!(errs.iter().any(|e| matches!(e, NodeError::UnguardedPre { .. })), "{errs:?}");

    // Each pre under its own arrow is fine.
    let nested = single_int_node(LInt::arrow(
        LInt::Const(0),
        LInt::pre(LInt::arrow(LInt::Const(0), LInt::pre(LInt::var("X")))),
    ));
    validate_node(&nested).unwrap();
    let trace = lval_run(&nested, &[7, 7, 7, 7]).unwrap();
    assert_eq!(trace.int_values("X").unwrap(), &[0, 0, 0, 0]);
}

#[test]
fn runtime_backstop_names_the_equation() {
    // Skipping validation still cannot read before the start.
    let bare = single_int_node(LInt::pre(LInt::var("X")));
    match lval_run(&bare, &[1, 2, 3]) {
        Err(EvalError::PreAtStart { context }) => assert!(context.contains('X'), "{context}"),
        other => panic!("expected a defined-ness error, got {other:?}"),
    }
}

#[test]
fn instantaneous_cycles_are_rejected() {
    let node = LustreNode {
        name: "n".into(),
        bool_locals: vec!["A".into(), "B".into()],
        int_locals: vec![],
        equations: vec![
            Equation::bool("A", LBool::var("B")),
            Equation::bool("B", LBool::var("A")),
        ],
        check: LBool::True,
    };
    let errs = validate_node(&node).unwrap_err();
    assert!(errs.iter().any(|e| matches!(e, NodeError::InstantaneousCycle(_))), "{errs:?}");
    assert!(lval_run(&node, &[0]).is_err());
}

#[test]
fn declaration_errors_are_reported() {
    let node = LustreNode {
        name: "n".into(),
        bool_locals: vec!["A".into()],
        int_locals: vec!["A".into(), "I".into()],
        equations: vec![Equation::bool("A", LBool::True), Equation::bool("Z", LBool::True)],
        check: LBool::var("missing"),
    };
    let errs = validate_node(&node).unwrap_err();
    assert!(errs.iter().any(|e| matches!(e, NodeError::DuplicateLocal(v) if v == "A")));
    assert!(errs.iter().any(|e| matches!(e, NodeError::InputShadowed)));
    assert!(errs.iter().any(|e| matches!(e, NodeError::UnknownEquationTarget(v) if v == "Z")));
    assert!(errs.iter().any(|e| matches!(e, NodeError::MissingEquation(v) if v == "I")));
    assert!(errs
        .iter()
        .any(|e| matches!(e, NodeError::UndeclaredVariable { var, .. } if var == "missing")));
}

#[test]
fn euclidean_mod_is_nonnegative() {
    let node = single_int_node(LInt::modulo(
        LInt::sub(LInt::var("I"), LInt::Const(5)),
        3,
    ));
    let trace = lval_run(&node, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
    // (I - 5) mod 3 stays in [0, 3) even for negative differences.
    assert_eq!(trace.int_values("X").unwrap(), &[1, 2, 0, 1, 2, 0, 1]);
}

#[test]
fn empty_input_is_an_error() {
    let node = counters_node();
    assert_eq!(lval_run(&node, &[]), Err(EvalError::EmptyInput));
}
