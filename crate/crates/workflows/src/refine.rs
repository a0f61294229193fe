//! Shared machinery for the two refinement loops: round records, verdict
//! strategy, shape extraction, and labeled sampling.

use std::time::Duration;

use crasp_core::{BExp, CExp, Dataset, DatasetError, EvalError, Program, RuleBody, Word};
use crasp_core::trace::accepts_rows;
use rand::Rng;
use synthesis::{LogRecord, Schedule, ScoreWeights, Shape, ShapeError, SynthError};
use thiserror::Error;
use verifier::{bounded_verify, kind2_verify, Query, QueryError, Verdict, VerifierConfig};

#[derive(Debug, Error)]
pub enum WorkflowError {
    #[error("specification program is not well-formed: {details}")]
    NotWellFormed { details: String },
    #[error("positive example `{word}` is outside the specification language")]
    InfeasiblePositive { word: String },
    #[error("dataset alphabet differs from the specification program's")]
    AlphabetMismatch,
    #[error("no synthesis round completed within the limits")]
    NoRounds,
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
}

/// Why a refinement loop stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The final query was externally proved.
    Verified,
    /// Bounded search found no counterexample to the final query; that is
    /// evidence, not a proof.
    Tentative,
    RoundLimit,
    Timeout,
    /// Synthesis repeatedly failed to fit the data at the allowed shapes.
    InexpressibleSuspected,
}

impl Termination {
    pub fn label(self) -> &'static str {
        match self {
            Termination::Verified => "verified",
            Termination::Tentative => "tentative",
            Termination::RoundLimit => "round-limit",
            Termination::Timeout => "timeout",
            Termination::InexpressibleSuspected => "inexpressible-suspected",
        }
    }
}

/// One synthesize-then-verify round.
#[derive(Debug, Clone)]
pub struct Round {
    /// Dataset size when the round started.
    pub dataset_size: usize,
    /// The zero-misclassification candidate submitted to the verifier, with
    /// dead rules pruned; `None` when synthesis fell short this round.
    pub candidate: Option<Program>,
    /// Best misclassification count synthesis reached.
    pub best_mis: u64,
    pub synth_log: Vec<LogRecord>,
    pub verdict: Option<Verdict>,
    /// Counterexample appended to the dataset after this round.
    pub added: Option<Word>,
    pub synth_secs: f64,
    pub verif_secs: f64,
}

/// Full history of a refinement loop.
#[derive(Debug, Clone)]
pub struct RefinementRun {
    pub rounds: Vec<Round>,
    pub termination: Termination,
    /// Human-readable caveat (fallbacks, budget exhaustion, ...).
    pub note: Option<String>,
}

impl RefinementRun {
    pub fn counterexamples(&self) -> Vec<&Word> {
        self.rounds.iter().filter_map(|r| r.added.as_ref()).collect()
    }

    pub fn synth_secs(&self) -> f64 {
        self.rounds.iter().map(|r| r.synth_secs).sum()
    }

    pub fn verif_secs(&self) -> f64 {
        self.rounds.iter().map(|r| r.verif_secs).sum()
    }
}

/// Options shared by both refinement loops.
#[derive(Debug, Clone)]
pub struct RefineOptions {
    pub seed: u64,
    pub round_limit: usize,
    pub timeout: Duration,
    pub schedule: Schedule,
    pub weights: ScoreWeights,
    pub verifier: VerifierConfig,
}

impl RefineOptions {
    pub fn new(seed: u64) -> RefineOptions {
        RefineOptions {
            seed,
            round_limit: 30,
            timeout: Duration::from_secs(300),
            schedule: Schedule {
                budget: 40_000,
                ..Schedule::default()
            },
            weights: ScoreWeights::default(),
            verifier: VerifierConfig {
                bound: 10,
                ..VerifierConfig::default()
            },
        }
    }
}

/// Ask the backends in order of strength: the external tool first when
/// configured (it alone can prove `Valid`), then the bounded internal
/// search, whose counterexamples are shortest-first.
pub(crate) fn decide(q: &Query, cfg: &VerifierConfig) -> Verdict {
    if cfg.tool_path.is_some() {
        let v = kind2_verify(q, cfg);
        if !matches!(v, Verdict::Unknown { .. }) {
            return v;
        }
    }
    bounded_verify(q, cfg)
}

/// The smallest shape whose canonical form could hold `p`: its rule counts
/// and the largest constant its bodies mention.
pub fn shape_of(p: &Program) -> Result<Shape, ShapeError> {
    let mut n_bool = 0;
    let mut n_count = 0;
    let mut k: i64 = 0;
    for r in &p.rules {
        match &r.body {
            RuleBody::Bool(e) => {
                n_bool += 1;
                k = k.max(max_const_b(e));
            }
            RuleBody::Count(e) => {
                n_count += 1;
                k = k.max(max_const_c(e));
            }
        }
    }
    Shape::new(n_bool, n_count, k)
}

fn max_const_b(e: &BExp) -> i64 {
    match e {
        BExp::True | BExp::False | BExp::Letter(_) | BExp::Ref(_) | BExp::Periodic { .. } => 0,
        BExp::Not(a) => max_const_b(a),
        BExp::And(a, b) | BExp::Or(a, b) => max_const_b(a).max(max_const_b(b)),
        BExp::Cmp(a, _, b) => max_const_c(a).max(max_const_c(b)),
    }
}

fn max_const_c(e: &CExp) -> i64 {
    match e {
        CExp::Const(k) => *k,
        CExp::Ref(_) => 0,
        CExp::CountAll(b) | CExp::CountWindow { body: b, .. } => max_const_b(b),
        CExp::Add(a, b) | CExp::Sub(a, b) | CExp::Min(a, b) | CExp::Max(a, b) => {
            max_const_c(a).max(max_const_c(b))
        }
        CExp::Ite(c, a, b) => max_const_b(c).max(max_const_c(a)).max(max_const_c(b)),
    }
}

/// Up to `n` distinct random words of length `1..=max_len`, labeled by `p`.
/// Small alphabets can run out of distinct words; the dataset is then
/// simply smaller.
pub(crate) fn dataset_labeled_by(
    p: &Program,
    n: usize,
    max_len: usize,
    rng: &mut impl Rng,
) -> Result<Dataset, WorkflowError> {
    let n_syms = p.alphabet.len() as u8;
    let mut d = Dataset::new(p.alphabet.clone());
    let mut stale = 0usize;
    while d.len() < n && stale < 50_000 {
        let l = rng.gen_range(1..=max_len);
        let w = Word::from_ids((0..l).map(|_| rng.gen_range(0..n_syms)).collect());
        let label = accepts_rows(p, &w)?;
        if d.insert_unique(w, label)? {
            stale = 0;
        } else {
            stale += 1;
        }
    }
    Ok(d)
}
