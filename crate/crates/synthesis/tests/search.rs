//! Sampling, mutation, and scoring: every program the search can hold is
//! well formed and fits its shape, and the incremental scorer agrees with
//! scoring from scratch.

use crasp_core::metrics::ast_size;
use crasp_core::trace::accepts_rows;
use crasp_core::wf::well_formed;
use crasp_core::{Alphabet, BExp, CExp, Dataset, Program, Rule, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use synthesis::{
    mutate, prune_unreachable, sample_initial, score, IncrementalScorer, Shape, ShapeError,
    ScoreWeights, WeightError,
};

fn ab() -> Alphabet {
    Alphabet::of_chars("ab").unwrap()
}

fn brackets() -> Alphabet {
    Alphabet::new(["[", "]"]).unwrap()
}

/// All words up to `max_len`, labeled by `oracle`.
fn labeled_dataset(alphabet: &Alphabet, max_len: usize, oracle: impl Fn(&Word) -> bool) -> Dataset {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for w in alphabet.words_up_to(max_len) {
        if oracle(&w) {
            pos.push(w);
        } else {
            neg.push(w);
        }
    }
    Dataset::with_examples(alphabet.clone(), pos, neg).unwrap()
}

fn count_of(w: &Word, id: u8) -> usize {
    w.ids().iter().filter(|&&s| s == id).count()
}

#[test]
fn shape_validation() {
    assert_eq!(Shape::new(0, 3, 2), Err(ShapeError::NoBooleanRule));
    assert_eq!(Shape::new(1, 0, -1), Err(ShapeError::NegativeConstantBound));
    let s = Shape::new(2, 3, 4).unwrap();
    assert_eq!(s.total_rules(), 5);
    assert_eq!(s.rule_names(), ["C1", "C2", "C3", "B1", "Out"]);
}

#[test]
fn initial_samples_are_well_formed_and_conforming() {
    let shapes = [
        Shape::new(1, 0, 2).unwrap(),
        Shape::new(2, 1, 2).unwrap(),
        Shape::new(3, 2, 3).unwrap(),
    ];
    for alphabet in [ab(), Alphabet::of_chars("abc").unwrap()] {
        for shape in &shapes {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..300 {
                let p = sample_initial(shape, &alphabet, &mut rng);
                well_formed(&p).expect("sampled program is well formed");
                assert!(shape.conforms(&p));
                let names: Vec<_> = p.rules.iter().map(|r| r.name.clone()).collect();
                assert_eq!(names, shape.rule_names());
            }
        }
    }
}

#[test]
fn smallest_shape_yields_a_single_boolean_rule() {
    let shape = Shape::new(1, 0, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let p = sample_initial(&shape, &ab(), &mut rng);
    assert_eq!(p.rules.len(), 1);
    assert_eq!(p.rules[0].name, "Out");
    assert!(p.rules[0].body.is_bool());
}

#[test]
fn sampling_is_deterministic_per_seed() {
    let shape = Shape::new(2, 2, 3).unwrap();
    let a = sample_initial(&shape, &ab(), &mut ChaCha8Rng::seed_from_u64(42));
    let b = sample_initial(&shape, &ab(), &mut ChaCha8Rng::seed_from_u64(42));
    assert_eq!(a, b);
    let c = sample_initial(&shape, &ab(), &mut ChaCha8Rng::seed_from_u64(43));
    assert_ne!(a, c, "different seeds almost surely differ");
}

#[test]
fn mutations_stay_in_the_shape_and_touch_one_rule() {
    let shape = Shape::new(2, 2, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut p = sample_initial(&shape, &ab(), &mut rng);
    for _ in 0..10_000 {
        let (q, changed) = mutate(&p, &shape, &mut rng);
        well_formed(&q).expect("mutant is well formed");
        assert!(shape.conforms(&q));
        let diffs: Vec<usize> = (0..p.rules.len())
            .filter(|&i| p.rules[i].body != q.rules[i].body)
            .collect();
        assert_eq!(diffs, vec![changed], "exactly the reported rule changed");
        assert_eq!(
            p.rules.iter().map(|r| &r.name).collect::<Vec<_>>(),
            q.rules.iter().map(|r| &r.name).collect::<Vec<_>>()
        );
        p = q;
    }
}

/// Run many seeded proposals from `p` and collect the distinct results.
fn neighborhood(p: &Program, shape: &Shape, tries: u64) -> Vec<Program> {
    let mut out = Vec::new();
    for seed in 0..tries {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, _) = mutate(p, shape, &mut rng);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

#[test]
fn connective_swap_is_reachable() {
    let shape = Shape::new(1, 0, 0).unwrap();
    let p = Program::new(
        ab(),
        vec![Rule::bool_rule("Out", BExp::and(BExp::letter("a"), BExp::letter("b")))],
    );
    let swapped = BExp::or(BExp::letter("a"), BExp::letter("b"));
    assert!(
        neighborhood(&p, &shape, 200).iter().any(|q| q.rules[0].body
            == crasp_core::RuleBody::Bool(swapped.clone())),
        "one micro-mutation turns the conjunction into a disjunction"
    );
}

#[test]
fn strictness_flip_is_reachable() {
    let shape = Shape::new(1, 0, 0).unwrap();
    let body = |strict: bool| {
        let lhs = CExp::count(BExp::letter("a"));
        let rhs = CExp::count(BExp::letter("b"));
        if strict {
            BExp::lt(lhs, rhs)
        } else {
            BExp::le(lhs, rhs)
        }
    };
    let p = Program::new(ab(), vec![Rule::bool_rule("Out", body(true))]);
    assert!(
        neighborhood(&p, &shape, 200)
            .iter()
            .any(|q| q.rules[0].body == crasp_core::RuleBody::Bool(body(false))),
        "one micro-mutation relaxes < to <="
    );
}

#[test]
fn any_two_programs_of_one_shape_are_connected() {
    // Constructive irreducibility: rewriting rule bodies left to right walks
    // from any program to any other without leaving the shape.
    let shape = Shape::new(2, 1, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let source = sample_initial(&shape, &ab(), &mut rng);
        let target = sample_initial(&shape, &ab(), &mut rng);
        let mut walker = source.clone();
        for i in 0..walker.rules.len() {
            let before = walker.clone();
            walker.rules[i].body = target.rules[i].body.clone();
            let diffs = (0..walker.rules.len())
                .filter(|&j| before.rules[j].body != walker.rules[j].body)
                .count();
            assert!(diffs <= 1);
            well_formed(&walker).expect("intermediate stays well formed");
            assert!(shape.conforms(&walker));
        }
        assert_eq!(walker, target);
    }
}

#[test]
fn weight_validation() {
    assert!(ScoreWeights::default().validate().is_ok());
    let light = ScoreWeights { mis: 100.0, unreach: 5.0, size: 1.0 };
    assert_eq!(
        light.validate(),
        Err(WeightError::MisTooLight { mis: 100.0, structural: 6.0 })
    );
    let bad = ScoreWeights { mis: f64::NAN, unreach: 0.0, size: 0.0 };
    assert_eq!(bad.validate(), Err(WeightError::Invalid));
}

#[test]
fn trivial_acceptors_miss_exactly_one_class() {
    let d = labeled_dataset(&ab(), 5, |w| count_of(w, 0) % 2 == 0);
    let (p_count, n_count) = (d.pos().len() as u64, d.neg().len() as u64);
    let weights = ScoreWeights::default();

    let top = Program::new(ab(), vec![Rule::bool_rule("Out", BExp::True)]);
    let s = score(&top, &d, &weights).unwrap();
    assert_eq!(s.mis, n_count, "accepting everything misses every negative");

    let bottom = Program::new(ab(), vec![Rule::bool_rule("Out", BExp::False)]);
    let s = score(&bottom, &d, &weights).unwrap();
    assert_eq!(s.mis, p_count, "rejecting everything misses every positive");
}

#[test]
fn energy_combines_the_three_terms() {
    // One dead count rule, acceptor of size 4: E = 1000*mis + 5*1 + 1*(2+4).
    let p = Program::new(
        ab(),
        vec![
            Rule::count_rule("C1", CExp::count(BExp::letter("b"))),
            Rule::bool_rule("Out", BExp::le(CExp::num(1), CExp::count(BExp::letter("a")))),
        ],
    );
    assert_eq!(ast_size(&p), 6);
    let d = labeled_dataset(&ab(), 4, |w| count_of(w, 0) >= 1);
    let s = score(&p, &d, &ScoreWeights::default()).unwrap();
    assert_eq!((s.mis, s.unreach, s.size), (0, 1, 6));
    assert_eq!(s.energy, 5.0 * 1.0 + 1.0 * 6.0);
}

/// Bracket balance oracle, written against raw symbol ids.
fn dyck_oracle(w: &Word) -> bool {
    let mut depth: i64 = 0;
    for &s in w.ids() {
        depth += if s == 0 { 1 } else { -1 };
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

fn dyck_reference(alphabet: &Alphabet) -> Program {
    let cl = CExp::count(BExp::letter("["));
    let cr = CExp::count(BExp::letter("]"));
    Program::new(
        alphabet.clone(),
        vec![
            Rule::bool_rule("V", BExp::lt(cl.clone(), cr.clone())),
            Rule::bool_rule(
                "Out",
                BExp::and(BExp::eq(cl, cr), BExp::eq(CExp::count(BExp::bref("V")), CExp::num(0))),
            ),
        ],
    )
}

#[test]
fn dyck_reference_fits_a_dyck_dataset_perfectly() {
    let alphabet = brackets();
    let d = labeled_dataset(&alphabet, 8, dyck_oracle);
    assert!(d.pos().len() >= 20 && d.neg().len() >= 400);
    let s = score(&dyck_reference(&alphabet), &d, &ScoreWeights::default()).unwrap();
    assert_eq!(s.mis, 0);
}

#[test]
fn incremental_scores_match_scoring_from_scratch() {
    let shape = Shape::new(2, 2, 2).unwrap();
    let weights = ScoreWeights::default();
    let d = labeled_dataset(&ab(), 5, |w| count_of(w, 0) > count_of(w, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let mut p = sample_initial(&shape, &ab(), &mut rng);
    let mut scorer = IncrementalScorer::new(&p, &d, weights).unwrap();
    let direct = score(&p, &d, &weights).unwrap();
    assert_eq!(scorer.current(&p), direct);

    for step in 0..600 {
        let (q, changed) = mutate(&p, &shape, &mut rng);
        let prop = scorer.propose(&q, changed).unwrap();
        assert_eq!(
            prop.score,
            score(&q, &d, &weights).unwrap(),
            "incremental and from-scratch scores diverged at step {step}"
        );
        // Commit roughly half the proposals so stale-row reuse is exercised.
        if step % 2 == 0 {
            scorer.commit(prop);
            p = q;
            assert_eq!(scorer.current(&p), score(&p, &d, &weights).unwrap());
        }
    }
}

#[test]
fn pruning_drops_dead_rules_and_preserves_the_language() {
    let p = Program::new(
        ab(),
        vec![
            Rule::count_rule("C1", CExp::count(BExp::letter("b"))),
            Rule::count_rule("C2", CExp::count(BExp::letter("a"))),
            Rule::bool_rule("Out", BExp::le(CExp::num(1), CExp::cref("C2"))),
        ],
    );
    let pruned = prune_unreachable(&p);
    assert_eq!(
        pruned.rules.iter().map(|r| r.name.as_str()).collect::<Vec<_>>(),
        ["C2", "Out"]
    );
    well_formed(&pruned).expect("pruned program is well formed");
    for w in ab().words_up_to(6) {
        assert_eq!(accepts_rows(&p, &w).unwrap(), accepts_rows(&pruned, &w).unwrap());
    }
}
