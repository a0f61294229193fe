//! Constraint learning: fit the labeled examples while staying inside a
//! specification language, growing the negative set from inclusion
//! counterexamples.

use std::time::Instant;

use crasp_core::trace::accepts_rows;
use crasp_core::{well_formed, Dataset, Program};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use synthesis::{anneal, prune_unreachable, sample_initial, Shape};
use verifier::{Query, Verdict};

use crate::refine::{
    decide, shape_of, RefineOptions, RefinementRun, Round, Termination, WorkflowError,
};

#[derive(Debug, Clone)]
pub struct LearnOptions {
    pub refine: RefineOptions,
    /// Search shape; `None` derives one from the specification program.
    pub shape: Option<Shape>,
    /// Consecutive rounds synthesis may miss before the data is suspected
    /// inexpressible at this shape.
    pub max_failures: usize,
}

impl LearnOptions {
    pub fn new(seed: u64) -> LearnOptions {
        LearnOptions {
            refine: RefineOptions::new(seed),
            shape: None,
            max_failures: 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Learned {
    /// The final candidate: fits the (grown) dataset when the run settled.
    pub program: Program,
    /// Verdict of the returned program's inclusion query against the
    /// specification.
    pub status: Verdict,
    /// Misclassifications of `program` on the final dataset.
    pub mis: u64,
    /// The dataset after refinement, including all added negatives.
    pub dataset: Dataset,
    pub run: RefinementRun,
}

pub fn learn_constrained(
    d: &Dataset,
    p_spec: &Program,
    opts: &LearnOptions,
) -> Result<Learned, WorkflowError> {
    well_formed(p_spec).map_err(|v| WorkflowError::NotWellFormed {
        details: v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
    })?;
    if d.alphabet() != &p_spec.alphabet {
        return Err(WorkflowError::AlphabetMismatch);
    }
    // The task is infeasible if any positive lies outside the specification.
    for w in d.pos() {
        if !accepts_rows(p_spec, w)? {
            return Err(WorkflowError::InfeasiblePositive {
                word: p_spec.alphabet.display_word(w),
            });
        }
    }

    let started = Instant::now();
    let o = &opts.refine;
    let shape = match opts.shape {
        Some(s) => s,
        None => shape_of(p_spec)?,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut dataset = d.clone();
    let mut rounds: Vec<Round> = Vec::new();
    let mut warm: Option<Program> = None;
    let mut last: Option<(Program, u64)> = None;
    let mut failures = 0usize;
    let mut termination = Termination::RoundLimit;
    let mut settled: Option<(Program, Verdict)> = None;

    while rounds.len() < o.round_limit {
        if started.elapsed() >= o.timeout {
            termination = Termination::Timeout;
            break;
        }
        let dataset_size = dataset.len();
        let t_synth = Instant::now();
        let p0 = warm
            .take()
            .filter(|p| shape.conforms(p))
            .unwrap_or_else(|| sample_initial(&shape, &p_spec.alphabet, &mut rng));
        let synth = anneal(p0, &dataset, &shape, &o.weights, &o.schedule, &mut rng)?;
        let synth_secs = t_synth.elapsed().as_secs_f64();
        warm = Some(synth.best.clone());
        let mis = synth.best_score.mis;
        last = Some((prune_unreachable(&synth.best), mis));

        if mis > 0 {
            rounds.push(Round {
                dataset_size,
                candidate: None,
                best_mis: mis,
                synth_log: synth.log,
                verdict: None,
                added: None,
                synth_secs,
                verif_secs: 0.0,
            });
            failures += 1;
            if failures >= opts.max_failures {
                termination = Termination::InexpressibleSuspected;
                break;
            }
            continue;
        }
        failures = 0;
        let candidate = prune_unreachable(&synth.best);

        if started.elapsed() >= o.timeout {
            rounds.push(Round {
                dataset_size,
                candidate: Some(candidate),
                best_mis: 0,
                synth_log: synth.log,
                verdict: None,
                added: None,
                synth_secs,
                verif_secs: 0.0,
            });
            termination = Termination::Timeout;
            break;
        }

        let q = Query::inclusion(candidate.clone(), p_spec.clone())?;
        let t_verif = Instant::now();
        let verdict = decide(&q, &o.verifier);
        let verif_secs = t_verif.elapsed().as_secs_f64();

        match &verdict {
            Verdict::Counterexample { word, .. } => {
                // The word is accepted by the candidate yet lies outside
                // the specification language: a genuine negative.
                assert!(!accepts_rows(p_spec, word)?, "backend returned a word inside the specification");
                debug_assert!(accepts_rows(&candidate, word)?);
                dataset.push(word.clone(), false)?;
                rounds.push(Round {
                    dataset_size,
                    candidate: Some(candidate),
                    best_mis: 0,
                    synth_log: synth.log,
                    verdict: Some(verdict),
                    added: Some(word.clone()),
                    synth_secs,
                    verif_secs,
                });
            }
            _ => {
                rounds.push(Round {
                    dataset_size,
                    candidate: Some(candidate.clone()),
                    best_mis: 0,
                    synth_log: synth.log,
                    verdict: Some(verdict.clone()),
                    added: None,
                    synth_secs,
                    verif_secs,
                });
                termination = if verdict.is_valid() {
                    Termination::Verified
                } else {
                    Termination::Tentative
                };
                settled = Some((candidate, verdict));
                break;
            }
        }
    }

    let (program, mis, status) = match settled {
        Some((p, v)) => (p, 0, v),
        None => {
            // Best effort: report the last candidate with an honest final
            // inclusion verdict.
            let (p, mis) = last.ok_or(WorkflowError::NoRounds)?;
            let q = Query::inclusion(p.clone(), p_spec.clone())?;
            let v = decide(&q, &o.verifier);
            (p, mis, v)
        }
    };
    Ok(Learned {
        program,
        status,
        mis,
        dataset,
        run: RefinementRun { rounds, termination, note: None },
    })
}
