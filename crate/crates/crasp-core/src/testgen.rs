//! Proptest strategies producing well-formed random programs and words.
//! Generation is layered rather than fully recursive: expressions nest a few
//! levels deep, which is enough to exercise printers, parsers and both
//! evaluators without unbounded trees.

use proptest::prelude::*;

use crate::alphabet::{Alphabet, Word};
use crate::ast::{BExp, CExp, CmpOp, Program, Rule};

pub fn arb_alphabet() -> impl Strategy<Value = Alphabet> {
    prop_oneof![
        Just(Alphabet::of_chars("a").unwrap()),
        Just(Alphabet::of_chars("ab").unwrap()),
        Just(Alphabet::of_chars("abc").unwrap()),
        Just(Alphabet::of_chars("[]").unwrap()),
        Just(Alphabet::new(["lb", "rb"]).unwrap()),
    ]
}

pub fn arb_cmp_op() -> impl Strategy<Value = CmpOp> {
    prop_oneof![Just(CmpOp::Eq), Just(CmpOp::Le), Just(CmpOp::Lt)]
}

fn arb_periodic() -> impl Strategy<Value = BExp> {
    (1u32..=5).prop_flat_map(|m| (Just(m), 0..m)).prop_map(|(m, o)| BExp::Periodic { m, o })
}

/// Atomic Boolean expressions over the given symbols and earlier Boolean
/// rule names.
fn arb_bexp_atom(symbols: Vec<String>, bools: Vec<String>) -> BoxedStrategy<BExp> {
    let mut options: Vec<BoxedStrategy<BExp>> = vec![
        Just(BExp::True).boxed(),
        Just(BExp::False).boxed(),
        proptest::sample::select(symbols).prop_map(BExp::Letter).boxed(),
        arb_periodic().boxed(),
    ];
    if !bools.is_empty() {
        options.push(proptest::sample::select(bools).prop_map(BExp::Ref).boxed());
    }
    proptest::strategy::Union::new(options).boxed()
}

fn arb_window_bounds() -> impl Strategy<Value = (u32, u32)> {
    (0u32..=3).prop_flat_map(|rs| (Just(rs), rs..=3))
}

/// Counting expressions whose Boolean parts come from `bexp`.
fn arb_cexp_over(
    bexp: BoxedStrategy<BExp>,
    counts: Vec<String>,
    max_const: i64,
) -> BoxedStrategy<CExp> {
    let mut leaves: Vec<BoxedStrategy<CExp>> = vec![
        (0..=max_const).prop_map(CExp::Const).boxed(),
        bexp.clone().prop_map(CExp::count).boxed(),
        (arb_window_bounds(), bexp.clone())
            .prop_map(|((rs, re), b)| CExp::window(rs, re, b))
            .boxed(),
    ];
    if !counts.is_empty() {
        leaves.push(proptest::sample::select(counts).prop_map(CExp::Ref).boxed());
    }
    let leaf = proptest::strategy::Union::new(leaves).boxed();
    let composite = (leaf.clone(), leaf.clone(), leaf.clone(), bexp).prop_flat_map(|(a, b, c, cond)| {
        prop_oneof![
            Just(CExp::add(a.clone(), b.clone())),
            Just(CExp::sub(a.clone(), b.clone())),
            Just(CExp::min(a.clone(), b.clone())),
            Just(CExp::max(a.clone(), b.clone())),
            Just(CExp::ite(cond.clone(), a.clone(), c.clone())),
        ]
    });
    prop_oneof![leaf, composite.boxed()].boxed()
}

/// Boolean expressions with connectives and comparisons over `cexp`.
fn arb_bexp_over(atom: BoxedStrategy<BExp>, cexp: BoxedStrategy<CExp>) -> BoxedStrategy<BExp> {
    let with_cmp = prop_oneof![
        3 => atom,
        2 => (cexp.clone(), arb_cmp_op(), cexp).prop_map(|(a, op, b)| BExp::cmp(a, op, b)),
    ]
    .boxed();
    with_cmp
        .prop_recursive(3, 32, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(BExp::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| BExp::and(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| BExp::or(a, b)),
            ]
        })
        .boxed()
}

/// One rule body of the requested sort, given what is in scope.
fn arb_bool_body(
    symbols: Vec<String>,
    bools: Vec<String>,
    counts: Vec<String>,
) -> BoxedStrategy<BExp> {
    let atom = arb_bexp_atom(symbols.clone(), bools.clone());
    let inner_cexp = arb_cexp_over(atom.clone(), counts, 5);
    arb_bexp_over(atom, inner_cexp)
}

fn arb_count_body(
    symbols: Vec<String>,
    bools: Vec<String>,
    counts: Vec<String>,
) -> BoxedStrategy<CExp> {
    let atom = arb_bexp_atom(symbols, bools);
    arb_cexp_over(atom, counts, 5)
}

/// A well-formed random program: a few Count rules, then a few Boolean rules,
/// a Boolean acceptor last. References only go backwards by construction.
pub fn arb_program() -> impl Strategy<Value = Program> {
    (arb_alphabet(), 0usize..=2, 1usize..=3).prop_flat_map(|(alphabet, n_counts, n_bools)| {
        let symbols: Vec<String> = alphabet.symbols().to_vec();
        let mut strategies: Vec<BoxedStrategy<Rule>> = Vec::new();
        let count_names: Vec<String> = (1..=n_counts).map(|i| format!("C{i}")).collect();
        for (i, name) in count_names.iter().enumerate() {
            let body = arb_count_body(symbols.clone(), Vec::new(), count_names[..i].to_vec());
            let name = name.clone();
            strategies.push(body.prop_map(move |b| Rule::count_rule(name.clone(), b)).boxed());
        }
        let bool_names: Vec<String> = (1..n_bools).map(|i| format!("B{i}")).chain(["Out".to_string()]).collect();
        for (i, name) in bool_names.iter().enumerate() {
            let body = arb_bool_body(symbols.clone(), bool_names[..i].to_vec(), count_names.clone());
            let name = name.clone();
            strategies.push(body.prop_map(move |b| Rule::bool_rule(name.clone(), b)).boxed());
        }
        seq_rules(strategies).prop_map(move |rules| Program::new(alphabet.clone(), rules))
    })
}

/// Sequence heterogeneous rule strategies into one Vec<Rule> strategy.
fn seq_rules(strategies: Vec<BoxedStrategy<Rule>>) -> BoxedStrategy<Vec<Rule>> {
    let mut acc: BoxedStrategy<Vec<Rule>> = Just(Vec::new()).boxed();
    for s in strategies {
        acc = (acc, s)
            .prop_map(|(mut rules, r)| {
                rules.push(r);
                rules
            })
            .boxed();
    }
    acc
}

/// A nonempty word over the program's alphabet.
pub fn arb_word_for(alphabet: &Alphabet, max_len: usize) -> impl Strategy<Value = Word> {
    let k = alphabet.len() as u8;
    proptest::collection::vec(0..k, 1..=max_len.max(1)).prop_map(Word::from_ids)
}

/// A random well-formed program together with one word over its alphabet.
pub fn arb_program_and_word(max_len: usize) -> impl Strategy<Value = (Program, Word)> {
    arb_program().prop_flat_map(move |p| {
        let w = arb_word_for(&p.alphabet, max_len);
        (Just(p), w)
    })
}

/// Program, word, and a (possibly empty) extension of the word.
pub fn arb_program_word_ext(max_len: usize) -> impl Strategy<Value = (Program, Word, Word)> {
    arb_program().prop_flat_map(move |p| {
        let k = p.alphabet.len() as u8;
        let w = arb_word_for(&p.alphabet, max_len);
        let ext = proptest::collection::vec(0..k, 0..=max_len).prop_map(Word::from_ids);
        (Just(p), w, ext)
    })
}
