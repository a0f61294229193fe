//! Structured sampling of rule bodies: pick a syntactic kind first, then
//! fill its slots. All pools are finite, so the search space for a fixed
//! shape is finite too.

use crate::shape::Shape;
use crasp_core::{Alphabet, BExp, CExp, CmpOp};
use rand::Rng;

/// What a sampled expression may refer to at its rule position.
pub(crate) struct Ctx<'a> {
    pub alphabet: &'a Alphabet,
    pub shape: &'a Shape,
    /// Counting rules declared earlier (all of them, in Boolean rules).
    pub count_refs: &'a [String],
    /// Boolean rules declared earlier (always empty in counting rules).
    pub bool_refs: &'a [String],
}

const PERIOD_RANGE: std::ops::RangeInclusive<u32> = 2..=5;
const MAX_WINDOW: u32 = 3;

fn letter(ctx: &Ctx, rng: &mut impl Rng) -> BExp {
    let i = rng.gen_range(0..ctx.alphabet.len());
    BExp::letter(ctx.alphabet.symbol(i as u8))
}

fn periodic(rng: &mut impl Rng) -> BExp {
    let m = rng.gen_range(PERIOD_RANGE);
    let o = rng.gen_range(0..m);
    BExp::periodic(m, o)
}

/// Comparison-free predicate under a count: letter, earlier Boolean rule,
/// or periodicity.
pub(crate) fn phi_atom(ctx: &Ctx, rng: &mut impl Rng) -> BExp {
    let kinds = if ctx.bool_refs.is_empty() { 2 } else { 3 };
    match rng.gen_range(0..kinds) {
        0 => letter(ctx, rng),
        1 => periodic(rng),
        _ => BExp::bref(&ctx.bool_refs[rng.gen_range(0..ctx.bool_refs.len())]),
    }
}

/// Count atom: constant in 0..=K, earlier counting rule, full count, or a
/// sliding-window count.
pub(crate) fn count_atom(ctx: &Ctx, rng: &mut impl Rng) -> CExp {
    let kinds = if ctx.count_refs.is_empty() { 3 } else { 4 };
    match rng.gen_range(0..kinds) {
        0 => CExp::num(rng.gen_range(0..=ctx.shape.max_const)),
        1 => CExp::count(phi_atom(ctx, rng)),
        2 => {
            let rs = rng.gen_range(0..=MAX_WINDOW);
            let re = rng.gen_range(rs..=MAX_WINDOW);
            CExp::window(rs, re, phi_atom(ctx, rng))
        }
        _ => CExp::cref(&ctx.count_refs[rng.gen_range(0..ctx.count_refs.len())]),
    }
}

/// Boolean atom: letter, earlier Boolean rule, periodicity, or a comparison
/// of two count atoms.
pub(crate) fn bool_atom(ctx: &Ctx, rng: &mut impl Rng) -> BExp {
    let kinds = if ctx.bool_refs.is_empty() { 3 } else { 4 };
    match rng.gen_range(0..kinds) {
        0 => letter(ctx, rng),
        1 => periodic(rng),
        2 => {
            let op = match rng.gen_range(0..3) {
                0 => CmpOp::Eq,
                1 => CmpOp::Le,
                _ => CmpOp::Lt,
            };
            BExp::cmp(count_atom(ctx, rng), op, count_atom(ctx, rng))
        }
        _ => BExp::bref(&ctx.bool_refs[rng.gen_range(0..ctx.bool_refs.len())]),
    }
}

fn maybe_negated(ctx: &Ctx, rng: &mut impl Rng) -> BExp {
    let atom = bool_atom(ctx, rng);
    if rng.gen_bool(0.5) {
        BExp::not(atom)
    } else {
        atom
    }
}

/// Whole Boolean rule body from the non-nested fragment: an atom, a negated
/// atom, or one connective over two possibly-negated atoms.
pub(crate) fn bool_body(ctx: &Ctx, rng: &mut impl Rng) -> BExp {
    match rng.gen_range(0..3) {
        0 => bool_atom(ctx, rng),
        1 => BExp::not(bool_atom(ctx, rng)),
        _ => {
            let a = maybe_negated(ctx, rng);
            let b = maybe_negated(ctx, rng);
            if rng.gen_bool(0.5) {
                BExp::and(a, b)
            } else {
                BExp::or(a, b)
            }
        }
    }
}

/// Whole counting rule body of depth at most two: an atom, one arithmetic
/// operator over atoms, or one conditional over atoms.
pub(crate) fn count_body(ctx: &Ctx, rng: &mut impl Rng) -> CExp {
    match rng.gen_range(0..3) {
        0 => count_atom(ctx, rng),
        1 => {
            let a = count_atom(ctx, rng);
            let b = count_atom(ctx, rng);
            match rng.gen_range(0..4) {
                0 => CExp::add(a, b),
                1 => CExp::sub(a, b),
                2 => CExp::min(a, b),
                _ => CExp::max(a, b),
            }
        }
        _ => CExp::ite(bool_atom(ctx, rng), count_atom(ctx, rng), count_atom(ctx, rng)),
    }
}
