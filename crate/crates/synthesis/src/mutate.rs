//! Initial sampling and the mutation operator: one rule body changes per
//! step, via full resampling or a depth-preserving micro-mutation.

use crate::pool::{bool_atom, bool_body, count_atom, count_body, Ctx};
use crate::shape::Shape;
use crasp_core::{Alphabet, BExp, CExp, CmpOp, Program, Rule, RuleBody};
use rand::Rng;

/// Draw a shape-conforming program: counting rules `C1..`, then Boolean
/// rules ending in the acceptor `Out`, every body from the mutation pools.
pub fn sample_initial(shape: &Shape, alphabet: &Alphabet, rng: &mut impl Rng) -> Program {
    let names = shape.rule_names();
    let mut rules = Vec::with_capacity(shape.total_rules());
    for i in 0..shape.total_rules() {
        let body = sample_body(shape, alphabet, &names, i, rng);
        rules.push(Rule { name: names[i].clone(), body });
    }
    Program::new(alphabet.clone(), rules)
}

fn ctx_for<'a>(
    shape: &'a Shape,
    alphabet: &'a Alphabet,
    names: &'a [String],
    idx: usize,
) -> Ctx<'a> {
    if idx < shape.n_count {
        Ctx { alphabet, shape, count_refs: &names[..idx], bool_refs: &[] }
    } else {
        Ctx {
            alphabet,
            shape,
            count_refs: &names[..shape.n_count],
            bool_refs: &names[shape.n_count..idx],
        }
    }
}

fn sample_body(
    shape: &Shape,
    alphabet: &Alphabet,
    names: &[String],
    idx: usize,
    rng: &mut impl Rng,
) -> RuleBody {
    let ctx = ctx_for(shape, alphabet, names, idx);
    if idx < shape.n_count {
        RuleBody::Count(count_body(&ctx, rng))
    } else {
        RuleBody::Bool(bool_body(&ctx, rng))
    }
}

/// Propose a neighbor: pick one rule uniformly and rewrite its body, either
/// by full resampling or by one micro-mutation (an even split). Returns the
/// new program and the index of the rewritten rule. Well-formedness and
/// shape conformance hold by construction; the proposal differs from `p`
/// unless the pool around that rule is degenerate.
pub fn mutate(p: &Program, shape: &Shape, rng: &mut impl Rng) -> (Program, usize) {
    let names: Vec<String> = p.rules.iter().map(|r| r.name.clone()).collect();
    let idx = rng.gen_range(0..p.rules.len());
    let old = &p.rules[idx].body;
    let ctx = ctx_for(shape, &p.alphabet, &names, idx);

    let mut body = propose_body(old, &ctx, idx < shape.n_count, rng);
    for _ in 0..100 {
        if body != *old {
            break;
        }
        body = propose_body(old, &ctx, idx < shape.n_count, rng);
    }

    let mut rules = p.rules.clone();
    rules[idx].body = body;
    (Program::new(p.alphabet.clone(), rules), idx)
}

fn propose_body(old: &RuleBody, ctx: &Ctx, is_count: bool, rng: &mut impl Rng) -> RuleBody {
    let full = rng.gen_bool(0.5);
    if is_count {
        let RuleBody::Count(c) = old else { unreachable!("count rule") };
        RuleBody::Count(if full { count_body(ctx, rng) } else { count_micro(c, ctx, rng) })
    } else {
        let RuleBody::Bool(b) = old else { unreachable!("boolean rule") };
        RuleBody::Bool(if full { bool_body(ctx, rng) } else { bool_micro(b, ctx, rng) })
    }
}

// ---- Boolean micro-mutations ----

/// Flattened view of a non-nested body: optional top connective over one or
/// two possibly-negated atoms.
struct BoolView {
    /// `None` for a single operand; `Some(true)` for ∧, `Some(false)` for ∨.
    connective: Option<bool>,
    operands: Vec<(bool, BExp)>,
}

fn decompose_bool(b: &BExp) -> BoolView {
    fn operand(e: &BExp) -> (bool, BExp) {
        match e {
            BExp::Not(inner) => (true, (**inner).clone()),
            other => (false, other.clone()),
        }
    }
    match b {
        BExp::And(a, b) => BoolView {
            connective: Some(true),
            operands: vec![operand(a), operand(b)],
        },
        BExp::Or(a, b) => BoolView {
            connective: Some(false),
            operands: vec![operand(a), operand(b)],
        },
        other => BoolView { connective: None, operands: vec![operand(other)] },
    }
}

fn recompose_bool(v: BoolView) -> BExp {
    let wrap = |(neg, atom): (bool, BExp)| if neg { BExp::not(atom) } else { atom };
    let mut it = v.operands.into_iter();
    let first = wrap(it.next().expect("at least one operand"));
    match v.connective {
        None => first,
        Some(is_and) => {
            let second = wrap(it.next().expect("binary connective"));
            if is_and {
                BExp::and(first, second)
            } else {
                BExp::or(first, second)
            }
        }
    }
}

fn bool_micro(b: &BExp, ctx: &Ctx, rng: &mut impl Rng) -> BExp {
    let mut view = decompose_bool(b);

    // Applicable moves: 0 = swap connective; per operand i: toggle
    // negation, resample the atom, flip comparison strictness.
    #[derive(Clone, Copy)]
    enum Move {
        SwapConnective,
        ToggleNegation(usize),
        ResampleAtom(usize),
        FlipStrictness(usize),
    }
    let mut moves = Vec::new();
    if view.connective.is_some() {
        moves.push(Move::SwapConnective);
    }
    for (i, (_, atom)) in view.operands.iter().enumerate() {
        moves.push(Move::ToggleNegation(i));
        moves.push(Move::ResampleAtom(i));
        if matches!(atom, BExp::Cmp(_, CmpOp::Le | CmpOp::Lt, _)) {
            moves.push(Move::FlipStrictness(i));
        }
    }
    match moves[rng.gen_range(0..moves.len())] {
        Move::SwapConnective => {
            view.connective = view.connective.map(|is_and| !is_and);
        }
        Move::ToggleNegation(i) => view.operands[i].0 ^= true,
        Move::ResampleAtom(i) => view.operands[i].1 = bool_atom(ctx, rng),
        Move::FlipStrictness(i) => {
            if let BExp::Cmp(a, op, b) = view.operands[i].1.clone() {
                let flipped = if op == CmpOp::Lt { CmpOp::Le } else { CmpOp::Lt };
                view.operands[i].1 = BExp::Cmp(a, flipped, b);
            }
        }
    }
    recompose_bool(view)
}

// ---- counting micro-mutations ----

fn count_micro(c: &CExp, ctx: &Ctx, rng: &mut impl Rng) -> CExp {
    #[derive(Clone, Copy)]
    enum Move {
        SwapOp,
        ResampleLeft,
        ResampleRight,
        SwapBranches,
        ResampleCondition,
        ResampleAtom,
    }
    let moves: &[Move] = match c {
        CExp::Add(..) | CExp::Sub(..) | CExp::Min(..) | CExp::Max(..) => {
            &[Move::SwapOp, Move::ResampleLeft, Move::ResampleRight]
        }
        CExp::Ite(..) => &[
            Move::SwapBranches,
            Move::ResampleCondition,
            Move::ResampleLeft,
            Move::ResampleRight,
        ],
        _ => &[Move::ResampleAtom],
    };
    match (moves[rng.gen_range(0..moves.len())], c.clone()) {
        (Move::SwapOp, c) => {
            let (a, b, old_op) = match c {
                CExp::Add(a, b) => (a, b, 0),
                CExp::Sub(a, b) => (a, b, 1),
                CExp::Min(a, b) => (a, b, 2),
                CExp::Max(a, b) => (a, b, 3),
                _ => unreachable!("swap-op applies to operators"),
            };
            // A different operator, uniformly among the remaining three.
            let mut pick = rng.gen_range(0..3);
            if pick >= old_op {
                pick += 1;
            }
            match pick {
                0 => CExp::Add(a, b),
                1 => CExp::Sub(a, b),
                2 => CExp::Min(a, b),
                _ => CExp::Max(a, b),
            }
        }
        (Move::ResampleLeft, c) => with_operand(c, 0, count_atom(ctx, rng)),
        (Move::ResampleRight, c) => with_operand(c, 1, count_atom(ctx, rng)),
        (Move::SwapBranches, CExp::Ite(cond, a, b)) => CExp::Ite(cond, b, a),
        (Move::ResampleCondition, CExp::Ite(_, a, b)) => {
            CExp::Ite(Box::new(bool_atom(ctx, rng)), a, b)
        }
        (Move::ResampleAtom, _) => count_atom(ctx, rng),
        _ => unreachable!("move picked from the applicable set"),
    }
}

fn with_operand(c: CExp, slot: usize, new: CExp) -> CExp {
    let put = |a: Box<CExp>, b: Box<CExp>| -> (Box<CExp>, Box<CExp>) {
        if slot == 0 {
            (Box::new(new.clone()), b)
        } else {
            (a, Box::new(new.clone()))
        }
    };
    match c {
        CExp::Add(a, b) => {
            let (a, b) = put(a, b);
            CExp::Add(a, b)
        }
        CExp::Sub(a, b) => {
            let (a, b) = put(a, b);
            CExp::Sub(a, b)
        }
        CExp::Min(a, b) => {
            let (a, b) = put(a, b);
            CExp::Min(a, b)
        }
        CExp::Max(a, b) => {
            let (a, b) = put(a, b);
            CExp::Max(a, b)
        }
        CExp::Ite(cond, a, b) => {
            let (a, b) = put(a, b);
            CExp::Ite(cond, a, b)
        }
        _ => new,
    }
}
