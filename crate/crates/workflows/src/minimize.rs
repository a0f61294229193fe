//! Verification-guided program minimization: synthesize candidates under a
//! shrinking shape, check equality against the input program, and feed
//! counterexamples back into the training set.

use std::time::Instant;

use crasp_core::trace::accepts_rows;
use crasp_core::{ast_size, well_formed, Program};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use synthesis::{anneal, prune_unreachable, sample_initial, Shape};
use verifier::{Query, Verdict};

use crate::refine::{
    dataset_labeled_by, decide, shape_of, RefineOptions, RefinementRun, Round, Termination,
    WorkflowError,
};

#[derive(Debug, Clone)]
pub struct MinimizeOptions {
    pub refine: RefineOptions,
    /// Size of the initial dataset labeled by the input program.
    pub samples: usize,
    /// Longest sampled word.
    pub max_len: usize,
}

impl MinimizeOptions {
    pub fn new(seed: u64) -> MinimizeOptions {
        MinimizeOptions {
            refine: RefineOptions::new(seed),
            samples: 400,
            max_len: 100,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Minimized {
    /// A program no larger than the input, with `status` relating the two
    /// languages. Falls back to the input itself when no smaller candidate
    /// survived verification.
    pub program: Program,
    /// Verdict of the returned program's equality query: `Valid` is a
    /// proof, `Unknown` a bounded no-counterexample result.
    pub status: Verdict,
    pub run: RefinementRun,
}

/// One shrink step: drop a Boolean rule while possible, then a count rule.
fn shrink(s: Shape) -> Option<Shape> {
    if s.n_bool > 1 {
        Shape::new(s.n_bool - 1, s.n_count, s.max_const).ok()
    } else if s.n_count > 0 {
        Shape::new(1, s.n_count - 1, s.max_const).ok()
    } else {
        None
    }
}

/// One grow step toward the ceiling after repeated failures.
fn grow(s: Shape, ceiling: Shape) -> Option<Shape> {
    if s.n_bool < ceiling.n_bool {
        Shape::new(s.n_bool + 1, s.n_count, s.max_const).ok()
    } else if s.n_count < ceiling.n_count {
        Shape::new(s.n_bool, s.n_count + 1, s.max_const).ok()
    } else {
        None
    }
}

pub fn minimize(p_spec: &Program, opts: &MinimizeOptions) -> Result<Minimized, WorkflowError> {
    well_formed(p_spec).map_err(|v| WorkflowError::NotWellFormed {
        details: v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
    })?;
    let started = Instant::now();
    let o = &opts.refine;
    let spec_shape = shape_of(p_spec)?;
    let spec_size = ast_size(p_spec);
    let ceiling = spec_shape;

    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut dataset = dataset_labeled_by(p_spec, opts.samples, opts.max_len, &mut rng)?;

    let mut shape = Shape::new(
        spec_shape.n_bool.saturating_sub(1).max(1),
        spec_shape.n_count,
        spec_shape.max_const,
    )?;
    // Smallest candidate that settled an equality query, with its verdict.
    let mut best: Option<(Program, Verdict)> = None;
    let mut rounds: Vec<Round> = Vec::new();
    let mut warm: Option<Program> = None;
    let mut failures_at_shape = 0usize;
    let mut note: Option<String> = None;
    let mut termination = Termination::RoundLimit;

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

        let candidate = (mis == 0)
            .then(|| prune_unreachable(&synth.best))
            .filter(|c| ast_size(c) <= spec_size);
        let Some(candidate) = candidate else {
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
            failures_at_shape += 1;
            if failures_at_shape >= 2 {
                failures_at_shape = 0;
                if best.is_some() {
                    // A settled candidate exists and smaller shapes keep
                    // failing; stop digging.
                    break;
                }
                match grow(shape, ceiling) {
                    Some(s) => {
                        shape = s;
                        warm = None;
                    }
                    None => {
                        termination = Termination::InexpressibleSuspected;
                        note = Some(format!(
                            "no candidate of any shape up to {:?} fit the dataset within budget",
                            (ceiling.n_bool, ceiling.n_count, ceiling.max_const),
                        ));
                        break;
                    }
                }
            }
            continue;
        };

        if started.elapsed() >= o.timeout {
            rounds.push(Round {
                dataset_size,
                candidate: Some(candidate),
                best_mis: mis,
                synth_log: synth.log,
                verdict: None,
                added: None,
                synth_secs,
                verif_secs: 0.0,
            });
            termination = Termination::Timeout;
            break;
        }

        let q = Query::equality(candidate.clone(), p_spec.clone())?;
        let t_verif = Instant::now();
        let verdict = decide(&q, &o.verifier);
        let verif_secs = t_verif.elapsed().as_secs_f64();

        match &verdict {
            Verdict::Counterexample { word, .. } => {
                let label = accepts_rows(p_spec, word)?;
                debug_assert_ne!(accepts_rows(&candidate, word)?, label);
                dataset.push(word.clone(), label)?;
                rounds.push(Round {
                    dataset_size,
                    candidate: Some(candidate),
                    best_mis: mis,
                    synth_log: synth.log,
                    verdict: Some(verdict),
                    added: Some(word.clone()),
                    synth_secs,
                    verif_secs,
                });
                failures_at_shape = 0;
            }
            _ => {
                // Valid, or bounded search exhausted without refutation:
                // accept at this shape and try a smaller one.
                rounds.push(Round {
                    dataset_size,
                    candidate: Some(candidate.clone()),
                    best_mis: mis,
                    synth_log: synth.log,
                    verdict: Some(verdict.clone()),
                    added: None,
                    synth_secs,
                    verif_secs,
                });
                let settled = if verdict.is_valid() {
                    Termination::Verified
                } else {
                    Termination::Tentative
                };
                best = Some((candidate, verdict));
                failures_at_shape = 0;
                warm = None;
                match shrink(shape) {
                    Some(s) => shape = s,
                    None => {
                        termination = settled;
                        break;
                    }
                }
            }
        }
    }

    if let Some((program, status)) = best {
        // The loop may have stopped on a limit after a success; keep the
        // stronger settled label in that case.
        if matches!(termination, Termination::RoundLimit) {
            termination = if status.is_valid() {
                Termination::Verified
            } else {
                Termination::Tentative
            };
        }
        return Ok(Minimized {
            program,
            status,
            run: RefinementRun { rounds, termination, note },
        });
    }

    // Nothing settled: fall back to the input program, whose self-equality
    // query gives the honest status.
    let q = Query::equality(p_spec.clone(), p_spec.clone())?;
    let status = decide(&q, &o.verifier);
    let fallback_note = "no smaller equivalent candidate was found; returning the input program";
    note = Some(match note {
        Some(n) => format!("{n}; {fallback_note}"),
        None => fallback_note.to_string(),
    });
    Ok(Minimized {
        program: p_spec.clone(),
        status,
        run: RefinementRun { rounds, termination, note },
    })
}
