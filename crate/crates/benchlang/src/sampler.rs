//! Seeded dataset sampling for the benchmark languages.
//!
//! Datasets are class-balanced: half positive, half negative, lengths drawn
//! from a configurable range. Dense classes come from rejection sampling;
//! classes that a uniform word almost never hits (balanced brackets at
//! length 100, say) get bespoke generators. Every candidate is re-checked
//! against the language oracle before it is kept, so a generator can only
//! slow sampling down, never mislabel.

use std::collections::HashSet;

use crasp_core::{Dataset, Word};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::catalog::LanguageSpec;

/// Attempts without a new distinct word before a class is declared tapped out.
const STALE_LIMIT: usize = 20_000;

#[derive(Debug, Clone)]
pub struct SamplerConfig {
    /// Total number of examples; must be even and positive.
    pub count: usize,
    /// Lower length bound; `None` uses the language's smallest length.
    pub min_len: Option<usize>,
    /// Upper length bound, inclusive.
    pub max_len: usize,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn new(seed: u64) -> SamplerConfig {
        SamplerConfig {
            count: 1000,
            min_len: None,
            max_len: 100,
            seed,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SampleError {
    #[error("example count must be even and positive, got {0}")]
    BadCount(usize),
    #[error("empty length range [{min}, {max}]")]
    EmptyRange { min: usize, max: usize },
    #[error(
        "`{name}` has no {class} words of length {min} to {max}: needed {needed}, found none"
    )]
    Infeasible {
        name: String,
        class: &'static str,
        needed: usize,
        min: usize,
        max: usize,
    },
}

/// A sampled dataset plus any notes about how the targets were met.
#[derive(Debug, Clone)]
pub struct Sampled {
    pub dataset: Dataset,
    /// Nonempty when a class ran out of distinct words and was padded with
    /// repeats of the ones found.
    pub warnings: Vec<String>,
}

/// Draw a class-balanced dataset for `lang`. Deterministic per seed.
pub fn sample_dataset(lang: &LanguageSpec, cfg: &SamplerConfig) -> Result<Sampled, SampleError> {
    if cfg.count == 0 || cfg.count % 2 != 0 {
        return Err(SampleError::BadCount(cfg.count));
    }
    let min = cfg.min_len.unwrap_or(lang.min_len).max(1);
    let max = cfg.max_len;
    if min > max {
        return Err(SampleError::EmptyRange { min, max });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let target = cfg.count / 2;
    let mut dataset = Dataset::new(lang.alphabet.clone());
    let mut warnings = Vec::new();
    for positive in [true, false] {
        let words = fill_class(lang, positive, target, min, max, &mut rng, &mut warnings)?;
        for w in words {
            dataset
                .push(w, positive)
                .expect("sampled words fit the alphabet and are nonempty");
        }
    }
    Ok(Sampled { dataset, warnings })
}

fn fill_class(
    lang: &LanguageSpec,
    positive: bool,
    target: usize,
    min: usize,
    max: usize,
    rng: &mut ChaCha8Rng,
    warnings: &mut Vec<String>,
) -> Result<Vec<Word>, SampleError> {
    let oracle = lang.oracle();
    let mut unique: Vec<Word> = Vec::with_capacity(target);
    let mut seen: HashSet<Word> = HashSet::new();
    let mut stale = 0usize;
    while unique.len() < target && stale < STALE_LIMIT {
        stale += 1;
        let Some(w) = candidate(lang, positive, rng, min, max) else {
            continue;
        };
        debug_assert!(w.len() >= min && w.len() <= max);
        if oracle(&w) == positive && seen.insert(w.clone()) {
            unique.push(w);
            stale = 0;
        }
    }
    let class = if positive { "positive" } else { "negative" };
    if unique.is_empty() {
        return Err(SampleError::Infeasible {
            name: lang.name.into(),
            class,
            needed: target,
            min,
            max,
        });
    }
    let distinct = unique.len();
    if distinct < target {
        warnings.push(format!(
            "`{}`: only {distinct} distinct {class} words of length {min} to {max}; \
             repeating them to reach {target}",
            lang.name,
        ));
        while unique.len() < target {
            let i = rng.gen_range(0..distinct);
            unique.push(unique[i].clone());
        }
    }
    Ok(unique)
}

/// Propose one word of the requested class and length range. The caller
/// re-checks the label; `None` means this draw found no candidate.
fn candidate(
    lang: &LanguageSpec,
    positive: bool,
    rng: &mut ChaCha8Rng,
    min: usize,
    max: usize,
) -> Option<Word> {
    match (lang.name, positive) {
        ("dyck1", true) => dyck_word(rng, min, max, 1),
        ("d2", true) => dyck_word(rng, min, max, 2),
        ("d3", true) => dyck_word(rng, min, max, 3),
        ("d4", true) => dyck_word(rng, min, max, 4),
        ("astar-bstar", true) => {
            let l = rng.gen_range(min..=max);
            let i = rng.gen_range(0..=l);
            Some(Word::from_ids((0..l).map(|j| u8::from(j >= i)).collect()))
        }
        ("anbncn", true) => {
            let l = pick_len(rng, min, max, |l| l % 3 == 0)?;
            let n = l / 3;
            Some(Word::from_ids(
                (0..l).map(|i| (i / n) as u8).collect(),
            ))
        }
        ("aastar", _) => {
            let l = pick_len(rng, min, max, |l| (l % 2 == 0) == positive)?;
            Some(Word::from_ids(vec![0; l]))
        }
        ("existential", false) => Some(Word::from_ids(vec![1; rng.gen_range(min..=max)])),
        ("tomita1", true) => Some(Word::from_ids(vec![0; rng.gen_range(min..=max)])),
        ("tomita2", true) => {
            let l = pick_len(rng, min, max, |l| l % 2 == 0 && l > 0)?;
            Some(Word::from_ids((0..l).map(|i| (i % 2) as u8).collect()))
        }
        ("tomita3", true) => {
            let l = rng.gen_range(min..=max);
            safety_walk(rng, l, 2, T3::Start, t3_step)
        }
        ("tomita4", true) => {
            let l = rng.gen_range(min..=max);
            safety_walk(rng, l, 2, 0u8, |run, s| match s {
                0 if run == 2 => None,
                0 => Some(run + 1),
                _ => Some(0),
            })
        }
        ("tomita7", true) => {
            let l = rng.gen_range(min..=max);
            safety_walk(rng, l, 2, 0u8, |phase, s| match (phase, s) {
                (0, 0) | (2, 0) => Some(phase),
                (0, 1) | (1, 1) => Some(1),
                (1, 0) => Some(2),
                (2, 1) | (3, 1) => Some(3),
                _ => None,
            })
        }
        ("contains-ab", false) => {
            let l = rng.gen_range(min..=max);
            safety_walk(rng, l, 2, false, |last_a, s| match s {
                1 if last_a => None,
                1 => Some(false),
                _ => Some(true),
            })
        }
        ("pt2", false) => subseq_avoider(rng, min, max, 2),
        ("pt3", false) => subseq_avoider(rng, min, max, 3),
        ("pt5", false) => subseq_avoider(rng, min, max, 5),
        ("next-argmax", true) => {
            let l = rng.gen_range(min..=max);
            Some(argmax_walk(rng, l))
        }
        _ => {
            let l = rng.gen_range(min..=max);
            let k = lang.alphabet.len() as u8;
            Some(Word::from_ids((0..l).map(|_| rng.gen_range(0..k)).collect()))
        }
    }
}

/// Uniformly pick a length in `[min, max]` satisfying `pred`.
fn pick_len(
    rng: &mut ChaCha8Rng,
    min: usize,
    max: usize,
    pred: impl Fn(usize) -> bool,
) -> Option<usize> {
    let choices: Vec<usize> = (min..=max).filter(|&l| pred(l)).collect();
    if choices.is_empty() {
        None
    } else {
        Some(choices[rng.gen_range(0..choices.len())])
    }
}

/// Random walk through a safety automaton: each step picks uniformly among
/// the symbols that keep the run alive. All live states are accepting.
fn safety_walk<S: Copy>(
    rng: &mut ChaCha8Rng,
    len: usize,
    n_syms: u8,
    start: S,
    step: impl Fn(S, u8) -> Option<S>,
) -> Option<Word> {
    let mut state = start;
    let mut ids = Vec::with_capacity(len);
    for _ in 0..len {
        let alive: Vec<(u8, S)> = (0..n_syms)
            .filter_map(|s| step(state, s).map(|next| (s, next)))
            .collect();
        let &(sym, next) = alive.get(rng.gen_range(0..alive.len().max(1)))?;
        ids.push(sym);
        state = next;
    }
    Some(Word::from_ids(ids))
}

/// Words avoiding the subsequence of the first `k` symbols in order.
fn subseq_avoider(rng: &mut ChaCha8Rng, min: usize, max: usize, k: u8) -> Option<Word> {
    let l = rng.gen_range(min..=max);
    safety_walk(rng, l, k, 0u8, move |progress, s| {
        if s == progress {
            if progress + 1 == k {
                None
            } else {
                Some(progress + 1)
            }
        } else {
            Some(progress)
        }
    })
}

#[derive(Copy, Clone)]
enum T3 {
    Start,
    /// In an a-run that cannot yet complete the forbidden pattern.
    A,
    /// In the word-initial b-run.
    B0,
    /// In a b-run preceded by an a-run; true while the run is odd.
    Bq(bool),
    /// In an a-run preceded by an odd such b-run; true while odd.
    ACrit(bool),
}

fn t3_step(state: T3, s: u8) -> Option<T3> {
    Some(match (state, s) {
        (T3::Start, 0) => T3::A,
        (T3::Start, 1) => T3::B0,
        (T3::A, 0) => T3::A,
        (T3::A, 1) => T3::Bq(true),
        (T3::B0, 0) => T3::A,
        (T3::B0, 1) => T3::B0,
        (T3::Bq(odd), 0) => {
            if odd {
                T3::ACrit(true)
            } else {
                T3::A
            }
        }
        (T3::Bq(odd), 1) => T3::Bq(!odd),
        (T3::ACrit(odd), 0) => T3::ACrit(!odd),
        (T3::ACrit(odd), 1) => {
            if odd {
                return None;
            }
            T3::Bq(true)
        }
        _ => unreachable!("binary alphabet"),
    })
}

/// Every position follows one of its predecessor's most frequent successors,
/// so the word satisfies the transition-argmax condition by construction.
fn argmax_walk(rng: &mut ChaCha8Rng, len: usize) -> Word {
    let mut counts = [[0usize; 3]; 3];
    let mut ids: Vec<u8> = Vec::with_capacity(len);
    for i in 0..len {
        let sym = if i == 0 {
            rng.gen_range(0..3u8)
        } else {
            let prev = ids[i - 1] as usize;
            let best = *counts[prev].iter().max().expect("nonempty row");
            let choices: Vec<u8> = (0..3u8)
                .filter(|&c| counts[prev][c as usize] == best)
                .collect();
            choices[rng.gen_range(0..choices.len())]
        };
        if i >= 1 {
            counts[ids[i - 1] as usize][sym as usize] += 1;
        }
        ids.push(sym);
    }
    Word::from_ids(ids)
}

/// Uniform balanced bracket word: a shuffled step sequence rotated to be a
/// ballot sequence (cycle lemma), then bracket kinds assigned per matched
/// pair.
fn dyck_word(rng: &mut ChaCha8Rng, min: usize, max: usize, pairs: u8) -> Option<Word> {
    let lo = min.max(2).div_ceil(2);
    let hi = max / 2;
    if lo > hi {
        return None;
    }
    let m = rng.gen_range(lo..=hi);
    let mut steps: Vec<i8> = vec![1; m + 1];
    steps.extend(std::iter::repeat(-1).take(m));
    steps.shuffle(rng);
    // The rotation starting just past the last prefix-sum minimum is the
    // unique one with all prefix sums positive; it begins with +1.
    let mut sum = 0i64;
    let mut min_sum = i64::MAX;
    let mut pos = 0usize;
    for (i, &s) in steps.iter().enumerate() {
        sum += i64::from(s);
        if sum <= min_sum {
            min_sum = sum;
            pos = i;
        }
    }
    let skeleton: Vec<i8> = steps[pos + 1..]
        .iter()
        .chain(steps[..=pos].iter())
        .skip(1)
        .copied()
        .collect();
    let mut ids = vec![0u8; skeleton.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (i, &s) in skeleton.iter().enumerate() {
        if s == 1 {
            stack.push(i);
        } else {
            let j = stack.pop().expect("rotated sequence is balanced");
            let t = rng.gen_range(0..pairs);
            ids[j] = 2 * t;
            ids[i] = 2 * t + 1;
        }
    }
    debug_assert!(stack.is_empty());
    Some(Word::from_ids(ids))
}
