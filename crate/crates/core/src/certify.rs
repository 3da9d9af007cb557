// SPDX-License-Identifier: Apache-2.0

//! Cross-checks between the constructions, the two deciders and the
//! brute-force oracle.
//!
//! Each check is numbered, carries its own time limit, and reports a single
//! pass/fail outcome with a short detail line. [`run`] executes them in order;
//! the `acceptance` test target and `sdeg selftest` are thin wrappers around
//! it.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{DegreeSet, Sign, SignedDegreeSequence, SignedGraph};
use crate::graphicality::{is_graphical_chartrand, is_graphical_yan, realize_sequence};
use crate::io::{check_dot_grammar, from_json, to_dot, to_json};
use crate::oracle::{oracle_is_graphical, oracle_min_order, EnumerationBudget};
use crate::realizer::{realize_negative_set, realize_positive_set, realize_set, replicate, RealizationCase};

/// Seed for the random length-5 sequences of check 7.
pub const RANDOM_SEQUENCE_SEED: u64 = 0x5167_DE65;
pub const RANDOM_SEQUENCE_COUNT: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Everything, with the random length-5 sample cut to a tenth.
    Quick,
    Full,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn within_limit(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_limit()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>3} {} ({:.2?} / limit {:.0?}): {}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed,
            self.limit,
            self.detail
        )
    }
}

// Collects failures; the first few are kept verbatim.
struct Tally {
    checked: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 3 {
                self.examples.push(describe());
            }
        }
    }

    fn finish(
        self,
        id: &'static str,
        title: &'static str,
        unit: &str,
        started: Instant,
        limit: Duration,
    ) -> Outcome {
        let detail = if self.failures == 0 {
            format!("{} {unit} ok", self.checked)
        } else {
            format!(
                "{} of {} {unit} failed, e.g. {}",
                self.failures,
                self.checked,
                self.examples.join("; ")
            )
        };
        Outcome {
            id,
            title,
            passed: self.failures == 0 && self.checked > 0,
            detail,
            elapsed: started.elapsed(),
            limit,
        }
    }
}

/// Every non-empty subset of `lo..=hi`.
pub fn subsets(lo: i64, hi: i64) -> Vec<DegreeSet> {
    let values: Vec<i64> = (lo..=hi).collect();
    (1u32..1 << values.len())
        .map(|mask| {
            DegreeSet::new(
                values
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &d)| d),
            )
            .expect("distinct non-empty subset")
        })
        .collect()
}

/// Every sequence of `len` entries drawn from `lo..=hi`.
pub fn sequences(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |d| {
                    let mut next = prefix.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    out
}

/// The seeded random length-5 sequences of check 7.
pub fn random_sequences(count: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEQUENCE_SEED);
    (0..count)
        .map(|_| (0..5).map(|_| rng.random_range(-4..=4)).collect())
        .collect()
}

fn degree_set_is(g: &SignedGraph, set: &DegreeSet) -> bool {
    g.signed_degree_set().as_ref() == Ok(set)
}

fn connected(g: &SignedGraph) -> bool {
    g.is_connected().unwrap_or(false)
}

fn positive_order(set: &DegreeSet) -> usize {
    set.largest() as usize + 1
}

pub fn positive_sets_exact() -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for set in subsets(1, 6) {
        let ok = match realize_positive_set(&set) {
            Ok(r) => {
                connected(&r.graph)
                    && r.graph.edges().all(|e| e.2 == Sign::Positive)
                    && r.graph.order() == positive_order(&set)
                    && r.claimed_minimum_order == Some(r.graph.order())
                    && degree_set_is(&r.graph, &set)
            }
            Err(_) => false,
        };
        tally.check(ok, || set.to_string());
    }
    tally.finish(
        "1",
        "positive sets: connected, all positive, order max+1, exact set",
        "sets",
        started,
        Duration::from_secs(1),
    )
}

pub fn positive_sets_minimal(budget: &EnumerationBudget) -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for set in subsets(1, 4) {
        let expected = positive_order(&set);
        let connected = oracle_min_order(&set, true, budget);
        let any = oracle_min_order(&set, false, budget);
        tally.check(connected == Ok(expected) && any == Ok(expected), || {
            format!("{set}: connected {connected:?}, any {any:?}, expected {expected}")
        });
    }
    tally.finish(
        "2",
        "positive sets: oracle minimum order is max+1",
        "sets",
        started,
        Duration::from_secs(30),
    )
}

pub fn negative_sets_mirror() -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for set in subsets(-6, -1) {
        let ok = match (realize_negative_set(&set), realize_positive_set(&set.negated())) {
            (Ok(neg), Ok(pos)) => {
                connected(&neg.graph)
                    && neg.graph.order() == set.smallest().unsigned_abs() as usize + 1
                    && neg.claimed_minimum_order == Some(neg.graph.order())
                    && degree_set_is(&neg.graph, &set)
                    && neg.graph == pos.graph.negate_signs()
            }
            _ => false,
        };
        tally.check(ok, || set.to_string());
    }
    tally.finish(
        "3",
        "negative sets: connected, order |min|+1, mirror of positive",
        "sets",
        started,
        Duration::from_secs(1),
    )
}

pub fn all_sets_total() -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    let mut cases_seen = Vec::new();
    for set in subsets(-4, 4) {
        let expected_case = RealizationCase::of(&set);
        if !cases_seen.contains(&expected_case) {
            cases_seen.push(expected_case);
        }
        let ok = match realize_set(&set) {
            Ok(r) => {
                r.case == expected_case
                    && connected(&r.graph)
                    && degree_set_is(&r.graph, &set)
                    && r.gluing.is_some() == expected_case.is_gluing()
            }
            Err(_) => false,
        };
        tally.check(ok, || set.to_string());
    }
    // all six constructions occur in this range
    tally.check(cases_seen.len() == 6, || {
        format!("only cases {cases_seen:?} reached")
    });
    tally.finish(
        "4",
        "all sets in [-4,4]: connected, exact set, every case reached",
        "checks",
        started,
        Duration::from_secs(5),
    )
}

pub fn gluing_neutral() -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for set in subsets(-4, 4) {
        let Ok(r) = realize_set(&set) else {
            tally.check(false, || format!("{set}: realization failed"));
            continue;
        };
        let Some(gluing) = r.gluing else { continue };
        let before = gluing.base.signed_degrees();
        let after = r.graph.signed_degrees();
        let ok = before.len() == after.len()
            && (0..after.len()).all(|v| {
                if gluing.added_vertices.contains(&v) {
                    before[v] == 0 && after[v] == 0
                } else {
                    before[v] == after[v]
                }
            })
            && r.graph.edge_count() == gluing.base.edge_count() + 4;
        tally.check(ok, || format!("{set}: {before:?} -> {after:?}"));
    }
    tally.finish(
        "5",
        "gluing keeps ingredient degrees, added vertices at 0",
        "glued sets",
        started,
        Duration::from_secs(5),
    )
}

pub fn replication_preserves_sets() -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for set in subsets(1, 4) {
        let g = match realize_positive_set(&set) {
            Ok(r) => r.graph,
            Err(_) => {
                tally.check(false, || set.to_string());
                continue;
            }
        };
        for k in 1..=4 {
            let ok = match replicate(&g, k) {
                Ok(h) => h.order() == k * g.order() && degree_set_is(&h, &set),
                Err(_) => false,
            };
            tally.check(ok, || format!("{set} x{k}"));
        }
    }
    tally.finish(
        "6",
        "replication: order k*n, same degree set",
        "copies",
        started,
        Duration::from_secs(1),
    )
}

fn compare_deciders(tally: &mut Tally, entries: Vec<i64>, budget: &EnumerationBudget) {
    let seq = SignedDegreeSequence::new(entries);
    let chartrand = is_graphical_chartrand(&seq);
    let yan = is_graphical_yan(&seq);
    let oracle = oracle_is_graphical(&seq, budget);
    tally.check(oracle == Ok(chartrand) && chartrand == yan, || {
        format!("{seq}: chartrand {chartrand}, yan {yan}, oracle {oracle:?}")
    });
}

pub fn deciders_agree_exhaustive(budget: &EnumerationBudget) -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for entries in sequences(4, -3, 3) {
        compare_deciders(&mut tally, entries, budget);
    }
    tally.finish(
        "7a",
        "deciders agree with the oracle, length 4 in [-3,3]",
        "sequences",
        started,
        Duration::from_secs(30),
    )
}

pub fn deciders_agree_random(count: usize, budget: &EnumerationBudget) -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for entries in random_sequences(count) {
        compare_deciders(&mut tally, entries, budget);
    }
    tally.finish(
        "7b",
        "deciders agree with the oracle, random length 5 in [-4,4]",
        "sequences",
        started,
        Duration::from_secs(180),
    )
}

pub fn witnesses_sound(random_count: usize) -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for entries in sequences(4, -3, 3)
        .into_iter()
        .chain(random_sequences(random_count))
    {
        let seq = SignedDegreeSequence::new(entries);
        let graphical = is_graphical_chartrand(&seq);
        let ok = match realize_sequence(&seq) {
            Some(g) => graphical && g.signed_degree_sequence() == seq.clone().sorted(),
            None => !graphical,
        };
        tally.check(ok, || seq.to_string());
    }
    tally.finish(
        "8",
        "witness graphs carry exactly the input sequence",
        "sequences",
        started,
        Duration::from_secs(60),
    )
}

fn permutations(items: &[i64]) -> Vec<Vec<i64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    (0..items.len())
        .flat_map(|i| {
            let mut rest = items.to_vec();
            let head = rest.remove(i);
            permutations(&rest).into_iter().map(move |mut p| {
                p.insert(0, head);
                p
            })
        })
        .collect()
}

pub fn deciders_symmetric() -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    type Decider = fn(&SignedDegreeSequence) -> bool;
    let deciders: [(&str, Decider); 2] = [("chartrand", is_graphical_chartrand), ("yan", is_graphical_yan)];
    for entries in sequences(4, -3, 3) {
        let seq = SignedDegreeSequence::new(entries.clone());
        for (name, decide) in deciders {
            let verdict = decide(&seq);
            tally.check(decide(&seq.negated()) == verdict, || {
                format!("{name} negation {seq}")
            });
            let stable = permutations(&entries)
                .into_iter()
                .all(|p| decide(&SignedDegreeSequence::new(p)) == verdict);
            tally.check(stable, || format!("{name} permutation {seq}"));
        }
    }
    tally.finish(
        "9",
        "deciders invariant under negation and permutation",
        "checks",
        started,
        Duration::from_secs(30),
    )
}

/// Every graph built by checks 1 to 6.
pub fn construction_corpus() -> Vec<SignedGraph> {
    let mut graphs = Vec::new();
    let mut realized = |result: crate::Result<crate::RealizationResult>| {
        if let Ok(r) = result {
            graphs.push(r.graph);
        }
    };
    subsets(1, 6)
        .iter()
        .map(realize_positive_set)
        .for_each(&mut realized);
    subsets(-6, -1)
        .iter()
        .map(realize_negative_set)
        .for_each(&mut realized);
    subsets(-4, 4).iter().map(realize_set).for_each(&mut realized);
    for set in subsets(1, 4) {
        if let Ok(r) = realize_positive_set(&set) {
            graphs.extend((1..=4).filter_map(|k| replicate(&r.graph, k).ok()));
        }
    }
    graphs
}

pub fn serialization_faithful() -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::new();
    for g in construction_corpus() {
        let json = to_json(&g);
        let parsed = from_json(&json);
        let ok = parsed.as_ref() == Ok(&g)
            && to_json(&g) == json
            && parsed.map(|p| to_json(&p) == json).unwrap_or(false)
            && check_dot_grammar(&to_dot(&g)).is_ok();
        tally.check(ok, || json.chars().take(60).collect());
    }
    tally.finish(
        "10",
        "JSON round trip, canonical bytes, DOT grammar",
        "graphs",
        started,
        Duration::from_secs(5),
    )
}

/// Runs every check in order.
pub fn run(level: Level) -> Vec<Outcome> {
    let budget = EnumerationBudget::default();
    let random = match level {
        Level::Quick => RANDOM_SEQUENCE_COUNT / 10,
        Level::Full => RANDOM_SEQUENCE_COUNT,
    };
    vec![
        positive_sets_exact(),
        positive_sets_minimal(&budget),
        negative_sets_mirror(),
        all_sets_total(),
        gluing_neutral(),
        replication_preserves_sets(),
        deciders_agree_exhaustive(&budget),
        deciders_agree_random(random, &budget),
        witnesses_sound(random),
        deciders_symmetric(),
        serialization_faithful(),
    ]
}
