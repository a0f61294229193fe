//! The search objective: weighted misclassifications plus structural
//! penalties, with an incremental evaluator that re-scores only the rules
//! a mutation actually disturbed.

use std::collections::{BTreeMap, BTreeSet};

use crasp_core::metrics::{ast_size, body_refs, reachable_rules};
use crasp_core::trace::{eval_body_row, RowSource, RuleRow};
use crasp_core::{Dataset, EvalError, Program, RuleBody, Word};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WeightError {
    #[error("weights must be finite and nonnegative")]
    Invalid,
    #[error("misclassification weight {mis} must be at least 100x the structural weights ({structural})")]
    MisTooLight { mis: f64, structural: f64 },
}

/// Objective coefficients. Misclassification must dominate: a program that
/// labels one more word correctly always wins, no matter how it is shaped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreWeights {
    pub mis: f64,
    pub unreach: f64,
    pub size: f64,
}

impl Default for ScoreWeights {
    fn default() -> ScoreWeights {
        ScoreWeights { mis: 1000.0, unreach: 5.0, size: 1.0 }
    }
}

impl ScoreWeights {
    pub fn validate(&self) -> Result<(), WeightError> {
        let all = [self.mis, self.unreach, self.size];
        if all.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(WeightError::Invalid);
        }
        let structural = self.unreach + self.size;
        if self.mis < 100.0 * structural {
            return Err(WeightError::MisTooLight { mis: self.mis, structural });
        }
        Ok(())
    }
}

/// A program's energy together with the raw terms it was built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Score {
    pub energy: f64,
    pub mis: u64,
    pub unreach: u64,
    pub size: u64,
}

impl Score {
    fn new(w: &ScoreWeights, mis: u64, unreach: u64, size: u64) -> Score {
        Score {
            energy: w.mis * mis as f64 + w.unreach * unreach as f64 + w.size * size as f64,
            mis,
            unreach,
            size,
        }
    }
}

fn structural_terms(p: &Program) -> (u64, u64) {
    let unreach = (p.rules.len() - reachable_rules(p).len()) as u64;
    (unreach, ast_size(p) as u64)
}

/// Score from scratch: every rule row over every word.
pub fn score(p: &Program, d: &Dataset, w: &ScoreWeights) -> Result<Score, EvalError> {
    let mut mis = 0u64;
    for (word, label) in d.iter_labeled() {
        if crasp_core::trace::accepts_rows(p, word)? != label {
            mis += 1;
        }
    }
    let (unreach, size) = structural_terms(p);
    Ok(Score::new(w, mis, unreach, size))
}

/// Recomputed rows for the rules a proposal disturbed, ready to commit.
pub struct Proposal {
    pub score: Score,
    dirty: Vec<usize>,
    fresh: Vec<Vec<RuleRow>>,
    accept: Option<Vec<bool>>,
    mis: u64,
}

/// Caches every rule's row on every dataset word so a one-rule mutation only
/// re-evaluates that rule and its transitive dependents.
pub struct IncrementalScorer {
    weights: ScoreWeights,
    names: Vec<String>,
    words: Vec<Word>,
    labels: Vec<bool>,
    /// `rows[word][rule]`, matching the committed program.
    rows: Vec<Vec<RuleRow>>,
    accept: Vec<bool>,
    mis: u64,
}

struct Overlay<'a> {
    names: &'a [String],
    stored: &'a [RuleRow],
    fresh: &'a BTreeMap<usize, RuleRow>,
}

impl RowSource for Overlay<'_> {
    fn row(&self, name: &str) -> Option<&RuleRow> {
        let i = self.names.iter().position(|n| n == name)?;
        self.fresh.get(&i).or_else(|| self.stored.get(i))
    }
}

impl IncrementalScorer {
    pub fn new(
        p: &Program,
        d: &Dataset,
        weights: ScoreWeights,
    ) -> Result<IncrementalScorer, EvalError> {
        let names: Vec<String> = p.rules.iter().map(|r| r.name.clone()).collect();
        let mut words = Vec::with_capacity(d.len());
        let mut labels = Vec::with_capacity(d.len());
        let mut rows = Vec::with_capacity(d.len());
        let mut accept = Vec::with_capacity(d.len());
        let mut mis = 0u64;
        for (word, label) in d.iter_labeled() {
            let trace = crasp_core::trace::run_trace(p, word)?;
            let ok = trace.accepted()?;
            if ok != label {
                mis += 1;
            }
            words.push(word.clone());
            labels.push(label);
            rows.push(trace.rows().to_vec());
            accept.push(ok);
        }
        Ok(IncrementalScorer { weights, names, words, labels, rows, accept, mis })
    }

    /// Score of the committed program.
    pub fn current(&self, p: &Program) -> Score {
        let (unreach, size) = structural_terms(p);
        Score::new(&self.weights, self.mis, unreach, size)
    }

    pub fn weights(&self) -> &ScoreWeights {
        &self.weights
    }

    /// Score `p_new`, which differs from the committed program only in the
    /// body of rule `changed`. Only that rule and rules referencing it
    /// (transitively) are re-evaluated.
    pub fn propose(&self, p_new: &Program, changed: usize) -> Result<Proposal, EvalError> {
        let dirty = self.dirty_from(p_new, changed);
        let last = p_new.rules.len() - 1;
        let recompute_accept = dirty.contains(&last);

        let mut fresh_all: Vec<Vec<RuleRow>> = Vec::with_capacity(self.words.len());
        let mut accept = if recompute_accept {
            Some(Vec::with_capacity(self.words.len()))
        } else {
            None
        };
        let mut mis = if recompute_accept { 0 } else { self.mis };
        for (wi, word) in self.words.iter().enumerate() {
            let mut fresh: BTreeMap<usize, RuleRow> = BTreeMap::new();
            for &ri in &dirty {
                let row = {
                    let overlay = Overlay {
                        names: &self.names,
                        stored: &self.rows[wi],
                        fresh: &fresh,
                    };
                    eval_body_row(&p_new.rules[ri].body, &p_new.alphabet, word, &overlay)?
                };
                fresh.insert(ri, row);
            }
            if let Some(acc) = accept.as_mut() {
                let ok = match &fresh[&last] {
                    RuleRow::Bool(v) => *v.last().expect("nonempty word"),
                    RuleRow::Int(_) => {
                        return Err(EvalError::WrongSort {
                            name: self.names[last].clone(),
                            expected: "Boolean",
                        })
                    }
                };
                if ok != self.labels[wi] {
                    mis += 1;
                }
                acc.push(ok);
            }
            fresh_all.push(fresh.into_values().collect());
        }
        let (unreach, size) = structural_terms(p_new);
        Ok(Proposal {
            score: Score::new(&self.weights, mis, unreach, size),
            dirty,
            fresh: fresh_all,
            accept,
            mis,
        })
    }

    /// Adopt a proposal's rows; the committed program is now the one it was
    /// scored against.
    pub fn commit(&mut self, prop: Proposal) {
        for (wi, fresh) in prop.fresh.into_iter().enumerate() {
            for (&ri, row) in prop.dirty.iter().zip(fresh) {
                self.rows[wi][ri] = row;
            }
        }
        if let Some(acc) = prop.accept {
            self.accept = acc;
        }
        self.mis = prop.mis;
    }

    /// `changed` plus every later rule that transitively references it.
    fn dirty_from(&self, p: &Program, changed: usize) -> Vec<usize> {
        let mut dirty_names: BTreeSet<&str> = BTreeSet::new();
        dirty_names.insert(self.names[changed].as_str());
        let mut dirty = vec![changed];
        for (i, rule) in p.rules.iter().enumerate().skip(changed + 1) {
            if refs_any(&rule.body, &dirty_names) {
                dirty.push(i);
                dirty_names.insert(self.names[i].as_str());
            }
        }
        dirty
    }
}

fn refs_any(body: &RuleBody, names: &BTreeSet<&str>) -> bool {
    body_refs(body).iter().any(|r| names.contains(r.as_str()))
}

/// Drop rules the acceptor never reads. The search itself keeps dead rules
/// (the shape is fixed); this runs once, on the final answer.
pub fn prune_unreachable(p: &Program) -> Program {
    let live = reachable_rules(p);
    let rules = p
        .rules
        .iter()
        .filter(|r| live.contains(&r.name))
        .cloned()
        .collect();
    Program::new(p.alphabet.clone(), rules)
}
