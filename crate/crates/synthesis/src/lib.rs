//! Program synthesis by simulated annealing: fix a shape, walk the space of
//! conforming programs with one-rule rewrites, and keep the candidate that
//! best explains a labeled sample.

pub mod anneal;
pub mod mutate;
pub(crate) mod pool;
pub mod score;
pub mod shape;

pub use anneal::{
    anneal, log_jsonl, metropolis, refine, LogRecord, RefineError, Schedule, ScheduleError,
    SynthError, SynthRun, Termination,
};
pub use mutate::{mutate, sample_initial};
pub use score::{
    prune_unreachable, score, IncrementalScorer, Proposal, Score, ScoreWeights, WeightError,
};
pub use shape::{Shape, ShapeError};
