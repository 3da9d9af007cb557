// SPDX-License-Identifier: Apache-2.0

//! Deciding whether an integer sequence is the signed degree sequence of some
//! signed graph.
//!
//! Both deciders work on *standard* sequences: non-increasing, even sum,
//! positive leading entry, every `|d_i| < n`, and `|d_1| >= |d_n|`. Arbitrary
//! input is first brought to that form by [`standardize`], which may negate
//! every entry; interchanging all edge signs of a graph negates its degrees,
//! so this never changes the answer.
//!
//! A standard sequence reduces to a shorter one by deleting `d_1`, lowering
//! the next `r` entries by one and raising the last `s` entries by one, where
//! `r - s = d_1` (the deleted vertex has `r` positive and `s` negative
//! neighbours). [`ChartrandDecider`] searches every admissible `s`;
//! [`is_graphical_yan`] commits to the single choice given by [`compute_m`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Sign, SignedDegreeSequence, SignedGraph};

/// A validated standard sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardSequence(Vec<i64>);

impl StandardSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let n = entries.len();
        let (&first, &last) = match (entries.first(), entries.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::NotStandard("empty")),
        };
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotStandard("not non-increasing"));
        }
        if entries.iter().sum::<i64>() % 2 != 0 {
            return Err(Error::NotStandard("odd sum"));
        }
        if first <= 0 {
            return Err(Error::NotStandard("leading entry not positive"));
        }
        if entries.iter().any(|d| d.unsigned_abs() >= n as u64) {
            return Err(Error::NotStandard("entry magnitude not below length"));
        }
        if first.abs() < last.abs() {
            return Err(Error::NotStandard("last entry outweighs the first"));
        }
        Ok(StandardSequence(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d_1`, always positive.
    pub fn lead(&self) -> usize {
        self.0[0] as usize
    }

    /// Largest admissible count of negative neighbours for the deleted vertex:
    /// `⌊(n - 1 - d_1) / 2⌋`.
    pub fn max_negative(&self) -> usize {
        (self.len() - 1 - self.lead()) / 2
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rejection {
    OddSum,
    MagnitudeBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardizationOutcome {
    /// Empty or all-zero input of the given length.
    AllZero(usize),
    Standard {
        seq: StandardSequence,
        negated: bool,
    },
    Rejected(Rejection),
}

// Sorted (and possibly negated) view of a raw sequence. `order[i]` is the raw
// position of sorted entry `i`.
struct NormalForm {
    values: Vec<i64>,
    order: Vec<usize>,
    negated: bool,
}

fn descending_order(values: &[i64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].cmp(&values[a]));
    order
}

fn normal_form(raw: &[i64]) -> NormalForm {
    let order = descending_order(raw);
    let first = raw[order[0]];
    let last = raw[order[raw.len() - 1]];
    if first <= 0 || first.abs() < last.abs() {
        let flipped: Vec<i64> = raw.iter().map(|d| -d).collect();
        let order = descending_order(&flipped);
        NormalForm {
            values: order.iter().map(|&i| flipped[i]).collect(),
            order,
            negated: true,
        }
    } else {
        NormalForm {
            values: order.iter().map(|&i| raw[i]).collect(),
            order,
            negated: false,
        }
    }
}

fn classify(raw: &[i64]) -> std::result::Result<Option<NormalForm>, Rejection> {
    if raw.iter().all(|&d| d == 0) {
        return Ok(None);
    }
    let form = normal_form(raw);
    let n = form.values.len() as u64;
    if form.values.iter().sum::<i64>() % 2 != 0 {
        Err(Rejection::OddSum)
    } else if form.values.iter().any(|d| d.unsigned_abs() >= n) {
        Err(Rejection::MagnitudeBound)
    } else {
        Ok(Some(form))
    }
}

/// Brings an arbitrary sequence to standard form or explains why it cannot be graphical.
pub fn standardize(seq: &SignedDegreeSequence) -> StandardizationOutcome {
    match classify(seq.entries()) {
        Ok(None) => StandardizationOutcome::AllZero(seq.len()),
        Ok(Some(form)) => StandardizationOutcome::Standard {
            seq: StandardSequence(form.values),
            negated: form.negated,
        },
        Err(reason) => StandardizationOutcome::Rejected(reason),
    }
}

fn reduce_unchecked(d: &[i64], r: usize, s: usize) -> Vec<i64> {
    let n = d.len();
    d[1..]
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            // i is the 0-based position in d[1..], i.e. d_{i+2}
            if i < r {
                x - 1
            } else if i + 1 >= n - s {
                x + 1
            } else {
                x
            }
        })
        .collect()
}

/// Deletes `d_1`, lowers `d_2..d_{r+1}` and raises `d_{n-s+1}..d_n`.
///
/// Requires `r - s = d_1` and `0 <= s <= ⌊(n - 1 - d_1) / 2⌋`.
pub fn reduce_chartrand(seq: &StandardSequence, r: usize, s: usize) -> Result<SignedDegreeSequence> {
    if r != seq.lead() + s || s > seq.max_negative() {
        return Err(Error::InvalidReduction {
            r,
            s,
            lead: seq.0[0],
            len: seq.len(),
        });
    }
    Ok(SignedDegreeSequence::new(reduce_unchecked(&seq.0, r, s)))
}

/// Largest `m` in `0..=⌊(n - 1 - d_1) / 2⌋` with `m = 0` or
/// `d_{d_1 + m + 1} > d_{n - m + 1}` (1-based indices).
pub fn compute_m(seq: &StandardSequence) -> usize {
    let d = &seq.0;
    let n = d.len();
    let lead = seq.lead();
    (1..=seq.max_negative())
        .rev()
        .find(|&m| {
            let hi = lead + m + 1;
            let lo = n + 1 - m;
            hi <= n && d[hi - 1] > d[lo - 1]
        })
        .unwrap_or(0)
}

/// One reduction per level, with `(r, s) = (d_1 + m, m)` and `m` from [`compute_m`].
pub fn is_graphical_yan(seq: &SignedDegreeSequence) -> bool {
    let mut current = seq.entries().to_vec();
    loop {
        match classify(&current) {
            Ok(None) => return true,
            Err(_) => return false,
            Ok(Some(form)) => {
                let standard = StandardSequence(form.values);
                let m = compute_m(&standard);
                current = reduce_unchecked(&standard.0, standard.lead() + m, m);
            }
        }
    }
}

/// Exhaustive `(r, s)` search.
pub fn is_graphical_chartrand(seq: &SignedDegreeSequence) -> bool {
    ChartrandDecider::new().is_graphical(seq)
}

/// Builds a graph with exactly the given degrees, vertex `i` carrying entry `i`,
/// or `None` when the sequence is not graphical.
pub fn realize_sequence(seq: &SignedDegreeSequence) -> Option<SignedGraph> {
    ChartrandDecider::new().trace(seq).map(|t| t.witness())
}

/// The `(r, s)` search with a memo keyed on standardized sequences.
#[derive(Debug, Default)]
pub struct ChartrandDecider {
    memo: HashMap<Vec<i64>, bool>,
}

impl ChartrandDecider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_graphical(&mut self, seq: &SignedDegreeSequence) -> bool {
        self.raw_graphical(seq.entries())
    }

    fn raw_graphical(&mut self, raw: &[i64]) -> bool {
        match classify(raw) {
            Ok(None) => true,
            Err(_) => false,
            Ok(Some(form)) => self.standard_graphical(form.values),
        }
    }

    fn standard_graphical(&mut self, d: Vec<i64>) -> bool {
        if let Some(&known) = self.memo.get(&d) {
            return known;
        }
        let verdict = self.first_working_s(&d).is_some();
        self.memo.insert(d, verdict);
        verdict
    }

    fn first_working_s(&mut self, d: &[i64]) -> Option<usize> {
        let lead = d[0] as usize;
        let max_s = (d.len() - 1 - lead) / 2;
        (0..=max_s).find(|&s| {
            let reduced = reduce_unchecked(d, lead + s, s);
            self.raw_graphical(&reduced)
        })
    }

    /// Records one successful reduction path, or `None` if there is none.
    pub fn trace(&mut self, seq: &SignedDegreeSequence) -> Option<ReductionTrace> {
        let mut current = seq.entries().to_vec();
        let mut steps = Vec::new();
        loop {
            let form = match classify(&current) {
                Ok(None) => {
                    return Some(ReductionTrace {
                        steps,
                        terminal: current.len(),
                    })
                }
                Err(_) => return None,
                Ok(Some(form)) => form,
            };
            let s = self.first_working_s(&form.values)?;
            let r = form.values[0] as usize + s;
            if form.negated {
                steps.push(TraceStep::Negate);
            }
            current = reduce_unchecked(&form.values, r, s);
            steps.push(TraceStep::Reduce {
                r,
                s,
                permutation: form.order,
            });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// Every entry of the current sequence changes sign.
    Negate,
    /// The current sequence is rearranged so that position `i` holds the
    /// entry previously at `permutation[i]`, then reduced with `(r, s)`.
    Reduce {
        r: usize,
        s: usize,
        permutation: Vec<usize>,
    },
}

/// A successful chain of reductions down to an all-zero sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    /// Length of the final all-zero sequence.
    pub terminal: usize,
}

impl ReductionTrace {
    /// Applies the steps to `original` and returns the sequence they end on.
    pub fn replay(&self, original: &[i64]) -> Vec<i64> {
        let mut current = original.to_vec();
        for step in &self.steps {
            match step {
                TraceStep::Negate => current.iter_mut().for_each(|d| *d = -*d),
                TraceStep::Reduce { r, s, permutation } => {
                    let sorted: Vec<i64> = permutation.iter().map(|&i| current[i]).collect();
                    current = reduce_unchecked(&sorted, *r, *s);
                }
            }
        }
        current
    }

    /// Rebuilds a graph whose vertex `i` has the degree at position `i` of the
    /// sequence the trace was recorded from.
    ///
    /// Each reduction removed one vertex that had `r` positive and `s`
    /// negative neighbours in the sign frame current at that step; an odd
    /// number of earlier negations flips those signs back.
    pub fn witness(&self) -> SignedGraph {
        let reductions = self
            .steps
            .iter()
            .filter(|s| matches!(s, TraceStep::Reduce { .. }))
            .count();
        let order = self.terminal + reductions;
        let mut builder = GraphBuilder::new(order);
        let mut vertices: Vec<usize> = (0..order).collect();
        let mut flipped = false;
        for step in &self.steps {
            match step {
                TraceStep::Negate => flipped = !flipped,
                TraceStep::Reduce { r, s, permutation } => {
                    let sorted: Vec<usize> = permutation.iter().map(|&i| vertices[i]).collect();
                    let (head, rest) = sorted.split_first().expect("reduced sequences are non-empty");
                    let frame = |sign: Sign| if flipped { -sign } else { sign };
                    for &v in &rest[..*r] {
                        builder
                            .add_edge(*head, v, frame(Sign::Positive))
                            .expect("each reduction touches distinct fresh pairs");
                    }
                    for &v in &rest[rest.len() - s..] {
                        builder
                            .add_edge(*head, v, frame(Sign::Negative))
                            .expect("each reduction touches distinct fresh pairs");
                    }
                    vertices = rest.to_vec();
                }
            }
        }
        builder.build()
    }
}
