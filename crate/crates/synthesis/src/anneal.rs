//! Simulated annealing over a fixed shape: geometric cooling with periodic
//! reheating, Metropolis acceptance, strict best tracking, and a refinement
//! mode that never gives back a correctly classified word.

use std::io::Write;

use crasp_core::{Dataset, EvalError, Program};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mutate::mutate;
use crate::score::{IncrementalScorer, Score, ScoreWeights, WeightError};
use crate::shape::Shape;

#[derive(Debug, Error, PartialEq)]
pub enum ScheduleError {
    #[error("initial temperature must be positive, got {0}")]
    BadInitialTemp(f64),
    #[error("cooling rate must lie strictly between 0 and 1, got {0}")]
    BadCooling(f64),
    #[error("reheat factor must be at least 1, got {0}")]
    BadReheat(f64),
    #[error("stall temperature must be positive, got {0}")]
    BadStallTemp(f64),
}

/// Cooling plan. `reheat_every = 0` disables reheating; `log_stride = 0`
/// disables the run log.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Schedule {
    pub t0: f64,
    pub alpha: f64,
    pub reheat_every: u64,
    pub reheat_factor: f64,
    pub budget: u64,
    pub log_stride: u64,
    pub stall_iters: u64,
    pub stall_temp: f64,
}

impl Default for Schedule {
    fn default() -> Schedule {
        Schedule {
            t0: 1.0,
            alpha: 0.9995,
            reheat_every: 4_000,
            reheat_factor: 1.2,
            budget: 100_000,
            log_stride: 100,
            stall_iters: 20_000,
            stall_temp: 1e-3,
        }
    }
}

impl Schedule {
    pub fn validate(&self) -> Result<(), ScheduleError> {
        if !(self.t0 > 0.0) || !self.t0.is_finite() {
            return Err(ScheduleError::BadInitialTemp(self.t0));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(ScheduleError::BadCooling(self.alpha));
        }
        if !(self.reheat_factor >= 1.0) || !self.reheat_factor.is_finite() {
            return Err(ScheduleError::BadReheat(self.reheat_factor));
        }
        if !(self.stall_temp > 0.0) {
            return Err(ScheduleError::BadStallTemp(self.stall_temp));
        }
        Ok(())
    }
}

/// One logged iteration. `t` and `delta` are the values the acceptance test
/// saw; `e`/`mis` describe the walker after the step, `e_best`/`mis_best`
/// the best program so far. No wall-clock fields: logs must be replayable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogRecord {
    pub iter: u64,
    pub t: f64,
    pub delta: f64,
    pub accepted: bool,
    pub e: f64,
    pub mis: u64,
    pub e_best: f64,
    pub mis_best: u64,
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Termination {
    BudgetExhausted,
    /// Perfect classification, then no best improvement for the configured
    /// window at a temperature below the stall threshold.
    Stalled { at: u64 },
}

/// Outcome of one annealing (or refinement) run.
#[derive(Debug, Clone)]
pub struct SynthRun {
    pub best: Program,
    pub best_score: Score,
    pub log: Vec<LogRecord>,
    pub iterations: u64,
    pub termination: Termination,
}

#[derive(Debug, Error)]
pub enum SynthError {
    #[error(transparent)]
    Weights(#[from] WeightError),
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error("initial program does not fit the shape")]
    ShapeMismatch,
    #[error("evaluation failed: {0}")]
    Eval(#[from] EvalError),
}

#[derive(Debug, Error)]
pub enum RefineError {
    #[error("refinement requires a perfectly classifying start, got {mis} misclassifications")]
    Misclassifying { mis: u64 },
    #[error(transparent)]
    Synth(#[from] SynthError),
}

/// In refinement the best may never regress on any component relative to
/// the starting program.
#[derive(Clone, Copy)]
struct ComponentCap {
    unreach: u64,
    size: u64,
}

/// The acceptance rule: a proposal with energy change `delta` at temperature
/// `t` is taken iff `r <= exp(-delta / t)`. Nonpositive `delta` always
/// passes since `r < 1 <= exp(-delta / t)`.
pub fn metropolis(delta: f64, t: f64, r: f64) -> bool {
    r <= (-delta / t).exp()
}

/// Metropolis search: propose one-rule rewrites, accept iff
/// `r <= exp(-(E' - E)/T)` with `r` drawn every iteration, cool by `alpha`,
/// reheat every `reheat_every` iterations by `reheat_factor`, and keep the
/// best program under strict energy improvement.
pub fn anneal(
    p0: Program,
    d: &Dataset,
    shape: &Shape,
    weights: &ScoreWeights,
    schedule: &Schedule,
    rng: &mut impl Rng,
) -> Result<SynthRun, SynthError> {
    weights.validate()?;
    run(p0, d, shape, *weights, schedule, rng, None)
}

/// Continue from a perfectly classifying program: proposals that misclassify
/// anything are rejected outright, the size penalty is scaled up tenfold,
/// and the best never exceeds the start on any score component.
pub fn refine(
    p0: Program,
    d: &Dataset,
    shape: &Shape,
    weights: &ScoreWeights,
    schedule: &Schedule,
    rng: &mut impl Rng,
) -> Result<SynthRun, RefineError> {
    weights.validate().map_err(SynthError::from)?;
    let scaled = ScoreWeights { size: weights.size * 10.0, ..*weights };
    let scorer = IncrementalScorer::new(&p0, d, scaled).map_err(SynthError::from)?;
    let start = scorer.current(&p0);
    if start.mis > 0 {
        return Err(RefineError::Misclassifying { mis: start.mis });
    }
    let cap = ComponentCap { unreach: start.unreach, size: start.size };
    Ok(run(p0, d, shape, scaled, schedule, rng, Some(cap))?)
}

fn run(
    p0: Program,
    d: &Dataset,
    shape: &Shape,
    weights: ScoreWeights,
    schedule: &Schedule,
    rng: &mut impl Rng,
    refinement: Option<ComponentCap>,
) -> Result<SynthRun, SynthError> {
    schedule.validate()?;
    if !shape.conforms(&p0) {
        return Err(SynthError::ShapeMismatch);
    }
    let mut scorer = IncrementalScorer::new(&p0, d, weights)?;
    let mut current = p0;
    let mut cur = scorer.current(&current);
    let mut best = current.clone();
    let mut best_score = cur;
    let mut t = schedule.t0;
    let mut since_improve: u64 = 0;
    let mut log = Vec::new();
    let mut termination = Termination::BudgetExhausted;
    let mut iterations = 0u64;

    for i in 0..schedule.budget {
        iterations = i + 1;
        let (cand, changed) = mutate(&current, shape, rng);
        let prop = scorer.propose(&cand, changed)?;
        let delta = prop.score.energy - cur.energy;
        // The draw happens on every iteration so trajectories with the same
        // seed stay aligned regardless of which branch decides.
        let r: f64 = rng.gen();
        let vetoed = refinement.is_some() && prop.score.mis > 0;
        let accepted = !vetoed && metropolis(delta, t, r);

        if accepted {
            cur = prop.score;
            scorer.commit(prop);
            current = cand;
        }

        let improved = cur.energy < best_score.energy
            && refinement.map_or(true, |cap| {
                cur.unreach <= cap.unreach && cur.size <= cap.size
            });
        if accepted && improved {
            best = current.clone();
            best_score = cur;
            since_improve = 0;
        } else {
            since_improve += 1;
        }

        if schedule.log_stride > 0 && i % schedule.log_stride == 0 {
            log.push(LogRecord {
                iter: i,
                t,
                delta,
                accepted,
                e: cur.energy,
                mis: cur.mis,
                e_best: best_score.energy,
                mis_best: best_score.mis,
            });
        }

        t *= schedule.alpha;
        if schedule.reheat_every > 0 && (i + 1) % schedule.reheat_every == 0 {
            t *= schedule.reheat_factor;
        }

        if best_score.mis == 0 && since_improve >= schedule.stall_iters && t < schedule.stall_temp
        {
            termination = Termination::Stalled { at: i + 1 };
            break;
        }
    }

    Ok(SynthRun { best, best_score, log, iterations, termination })
}

/// Write the run log as JSON-lines.
pub fn log_jsonl(log: &[LogRecord], out: &mut impl Write) -> std::io::Result<()> {
    for rec in log {
        serde_json::to_writer(&mut *out, rec)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
