//! Input-shape guards: a well-formed stream is letters, one end-of-word
//! marker, then padding forever.

use crate::codec::SymbolCodec;
use lustre_core::{Equation, LBool, LInt};

/// Per-position guard: the value is a known code, the first one is not
/// padding, and padding only ever follows a marker.
pub const SYM_OK: &str = "sym_ok";

/// Prefix closure of [`SYM_OK`]: true at position i iff every position up
/// to i passed the per-position guard.
pub const PREFIX_OK: &str = "prefix_ok";

fn input_is(code: i64) -> LBool {
    LBool::eq(LInt::var("I"), LInt::Const(code))
}

fn input_in(codes: &[i64]) -> LBool {
    let mut it = codes.iter();
    let first = *it.next().expect("nonempty code set");
    it.fold(input_is(first), |acc, &c| LBool::or(acc, input_is(c)))
}

/// The two guard equations, in evaluation order.
pub fn build_input_guard(codec: &SymbolCodec) -> Vec<Equation> {
    let eos = codec.eos_code();
    let eternity = codec.eternity_code();
    // sym_ok = I ∈ Σ' and (not (I = eternity) -> (not pre(I ∈ {eos, eternity}) or I = eternity))
    let sym_ok = LBool::and(
        input_in(&codec.all_codes()),
        LBool::arrow(
            LBool::not(input_is(eternity)),
            LBool::or(
                LBool::not(LBool::pre(input_in(&[eos, eternity]))),
                input_is(eternity),
            ),
        ),
    );
    // prefix_ok = sym_ok -> (sym_ok and pre(prefix_ok))
    let prefix_ok = LBool::arrow(
        LBool::var(SYM_OK),
        LBool::and(LBool::var(SYM_OK), LBool::pre(LBool::var(PREFIX_OK))),
    );
    vec![
        Equation::bool(SYM_OK, sym_ok),
        Equation::bool(PREFIX_OK, prefix_ok),
    ]
}
