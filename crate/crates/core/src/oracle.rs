// SPDX-License-Identifier: Apache-2.0

//! Ground truth by exhaustive enumeration of labeled signed graphs.
//!
//! A signed graph on `n` vertices is a base-3 number with one digit per vertex
//! pair, pairs taken in lexicographic order with `(0, 1)` as the least
//! significant digit: `0` absent, `1` positive, `2` negative. There are
//! `3^(n(n-1)/2)` of them. The index space is cut into contiguous chunks that
//! are scanned in parallel; within a chunk the counter is stepped in place
//! and the degree vector is patched for each changed digit, so a state costs
//! amortized O(1) plus the predicate.
//!
//! Existential queries return the witness with the smallest index, so results
//! do not depend on scheduling.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DegreeSet, GraphBuilder, Sign, SignedDegreeSequence, SignedGraph};

pub const DEFAULT_MAX_ORDER: usize = 6;

const CHUNK: u64 = 1 << 13;

/// Limits on how much enumeration a query may do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_order: usize,
    /// Cap on the number of graphs of a single order.
    pub max_graphs: Option<u64>,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_order: DEFAULT_MAX_ORDER,
            max_graphs: None,
        }
    }
}

impl EnumerationBudget {
    pub fn with_max_order(max_order: usize) -> Self {
        EnumerationBudget {
            max_order: max_order.max(1),
            max_graphs: None,
        }
    }

    /// Number of graphs on `order` vertices, if the budget allows enumerating them.
    pub fn admit(&self, order: usize) -> Result<u64> {
        if order > self.max_order {
            return Err(Error::OrderOverBudget {
                requested: order,
                max_order: self.max_order,
            });
        }
        let states = state_count(order);
        let cap = self.max_graphs.unwrap_or(u64::MAX);
        match u64::try_from(states) {
            Ok(count) if count <= cap => Ok(count),
            _ => Err(Error::StatesOverBudget { order, states, cap }),
        }
    }
}

/// `3^(n(n-1)/2)`, saturating at `u128::MAX`.
pub fn state_count(order: usize) -> u128 {
    let pairs = order * order.saturating_sub(1) / 2;
    u32::try_from(pairs)
        .ok()
        .and_then(|p| 3u128.checked_pow(p))
        .unwrap_or(u128::MAX)
}

/// Vertex pairs in the digit order of the encoding.
pub fn pairs(order: usize) -> Vec<(usize, usize)> {
    (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect()
}

/// The graph with base-3 index `index`.
pub fn decode(order: usize, mut index: u64) -> SignedGraph {
    let mut builder = GraphBuilder::new(order);
    for (u, v) in pairs(order) {
        let sign = match index % 3 {
            1 => Some(Sign::Positive),
            2 => Some(Sign::Negative),
            _ => None,
        };
        if let Some(sign) = sign {
            builder.add_edge(u, v, sign).expect("distinct pairs");
        }
        index /= 3;
    }
    builder.build()
}

/// Every labeled signed graph on `order` vertices, in index order.
pub fn enumerate_signed_graphs(
    order: usize,
    budget: &EnumerationBudget,
) -> Result<impl Iterator<Item = SignedGraph>> {
    let total = budget.admit(order)?;
    Ok((0..total).map(move |i| decode(order, i)))
}

/// A graph found by an existential query, with its base-3 index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub index: u64,
    pub graph: SignedGraph,
}

/// Per-chunk view of the current state handed to predicates.
pub struct State<'a> {
    pub degrees: &'a [i64],
    pub digits: &'a [u8],
    pairs: &'a [(usize, usize)],
}

impl State<'_> {
    /// Connectivity of the underlying graph, via union-find over present pairs.
    pub fn is_connected(&self) -> bool {
        let n = self.degrees.len();
        if n == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = n;
        for (&(u, v), &digit) in self.pairs.iter().zip(self.digits) {
            if digit != 0 {
                let (a, b) = (root(&mut parent, u), root(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
        components == 1
    }
}

/// Smallest-index graph on `order` vertices accepted by a predicate.
///
/// `make_predicate` is called once per chunk so that predicates can own
/// scratch space.
pub fn find_first<F, P>(
    order: usize,
    budget: &EnumerationBudget,
    make_predicate: F,
) -> Result<Option<Witness>>
where
    F: Fn() -> P + Sync,
    P: FnMut(&State<'_>) -> bool,
{
    let total = budget.admit(order)?;
    let pairs = pairs(order);
    let chunks = total.div_ceil(CHUNK);
    let found = (0..chunks).into_par_iter().find_map_first(|chunk| {
        let start = chunk * CHUNK;
        let end = (start + CHUNK).min(total);
        scan(order, &pairs, start, end, make_predicate())
    });
    Ok(found.map(|index| Witness {
        index,
        graph: decode(order, index),
    }))
}

fn scan<P>(order: usize, pairs: &[(usize, usize)], start: u64, end: u64, mut predicate: P) -> Option<u64>
where
    P: FnMut(&State<'_>) -> bool,
{
    let mut digits = vec![0u8; pairs.len()];
    let mut degrees = vec![0i64; order];
    let mut rest = start;
    for (digit, &(u, v)) in digits.iter_mut().zip(pairs) {
        *digit = (rest % 3) as u8;
        let delta = match *digit {
            1 => 1,
            2 => -1,
            _ => 0,
        };
        degrees[u] += delta;
        degrees[v] += delta;
        rest /= 3;
    }
    for index in start..end {
        let state = State {
            degrees: &degrees,
            digits: &digits,
            pairs,
        };
        if predicate(&state) {
            return Some(index);
        }
        // increment with carry; 0 -> 1 adds +1, 1 -> 2 turns +1 into -1, 2 -> 0 removes -1
        for (digit, &(u, v)) in digits.iter_mut().zip(pairs) {
            let delta = match *digit {
                0 => 1,
                1 => -2,
                _ => 1,
            };
            degrees[u] += delta;
            degrees[v] += delta;
            if *digit == 2 {
                *digit = 0;
            } else {
                *digit += 1;
                break;
            }
        }
    }
    None
}

/// A graph whose degree multiset equals `seq`, if one exists.
pub fn sequence_witness(seq: &SignedDegreeSequence, budget: &EnumerationBudget) -> Result<Option<Witness>> {
    let mut target = seq.entries().to_vec();
    target.sort_unstable();
    let n = target.len();
    find_first(n, budget, || {
        let target = &target;
        let mut scratch = vec![0i64; n];
        move |state: &State<'_>| {
            scratch.copy_from_slice(state.degrees);
            scratch.sort_unstable();
            scratch == *target
        }
    })
}

/// Whether some signed graph has exactly this degree multiset.
pub fn oracle_is_graphical(seq: &SignedDegreeSequence, budget: &EnumerationBudget) -> Result<bool> {
    sequence_witness(seq, budget).map(|w| w.is_some())
}

/// A graph on `order` vertices whose degree set is exactly `set`, if one exists.
pub fn set_witness(
    set: &DegreeSet,
    order: usize,
    require_connected: bool,
    budget: &EnumerationBudget,
) -> Result<Option<Witness>> {
    let values = set.to_vec();
    if values.len() > order {
        // n vertices carry at most n distinct degrees
        budget.admit(order)?;
        return Ok(None);
    }
    let full = (1u64 << values.len()) - 1;
    find_first(order, budget, || {
        let values = &values;
        move |state: &State<'_>| {
            let mut seen = 0u64;
            for d in state.degrees {
                match values.binary_search(d) {
                    Ok(i) => seen |= 1 << i,
                    Err(_) => return false,
                }
            }
            seen == full && (!require_connected || state.is_connected())
        }
    })
}

pub fn oracle_realizable_at_order(
    set: &DegreeSet,
    order: usize,
    require_connected: bool,
    budget: &EnumerationBudget,
) -> Result<bool> {
    set_witness(set, order, require_connected, budget).map(|w| w.is_some())
}

/// Smallest order carrying a graph with degree set `set`.
///
/// Running out of budget is an error, not evidence that no graph exists.
pub fn oracle_min_order(
    set: &DegreeSet,
    require_connected: bool,
    budget: &EnumerationBudget,
) -> Result<usize> {
    for order in 1..=budget.max_order {
        if oracle_realizable_at_order(set, order, require_connected, budget)? {
            return Ok(order);
        }
    }
    Err(Error::NotFoundWithinBudget(budget.max_order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn set(values: &[i64]) -> DegreeSet {
        DegreeSet::new(values.iter().copied()).unwrap()
    }

    fn seq(values: &[i64]) -> SignedDegreeSequence {
        SignedDegreeSequence::from(values)
    }

    #[test]
    fn enumeration_counts() {
        let budget = EnumerationBudget::default();
        let count = |n| enumerate_signed_graphs(n, &budget).unwrap().count();
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 3);
        assert_eq!(count(3), 27);
        assert_eq!(count(4), 729);
    }

    #[test]
    fn enumeration_yields_distinct_graphs() {
        let budget = EnumerationBudget::default();
        let graphs: HashSet<SignedGraph> = enumerate_signed_graphs(4, &budget).unwrap().collect();
        assert_eq!(graphs.len(), 729);
    }

    #[test]
    fn enumeration_respects_the_budget() {
        let budget = EnumerationBudget::with_max_order(3);
        assert!(matches!(
            enumerate_signed_graphs(4, &budget),
            Err(Error::OrderOverBudget {
                requested: 4,
                max_order: 3
            })
        ));
        let capped = EnumerationBudget {
            max_order: 6,
            max_graphs: Some(100),
        };
        assert!(matches!(
            capped.admit(5),
            Err(Error::StatesOverBudget {
                order: 5,
                states: 59049,
                cap: 100
            })
        ));
        assert_eq!(
            capped.admit(4).unwrap_err().to_string(),
            "729 graphs on 4 vertices exceed the enumeration cap of 100"
        );
    }

    #[test]
    fn incremental_degrees_match_decoded_graphs() {
        let mut checked = 0u64;
        // a predicate that never accepts sees every state of the range in order
        let pairs = pairs(4);
        scan(4, &pairs, 100, 729, |state: &State<'_>| {
            let g = decode(4, 100 + checked);
            assert_eq!(state.degrees, g.signed_degrees().as_slice());
            assert_eq!(state.is_connected(), g.is_connected().unwrap());
            checked += 1;
            false
        });
        assert_eq!(checked, 629);
    }

    #[test]
    fn decode_uses_lexicographic_pairs_low_digit_first() {
        // index 5 = digits [2, 1, 0]: (0,1) negative, (0,2) positive
        let g = decode(3, 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            [(0, 1, Sign::Negative), (0, 2, Sign::Positive)]
        );
    }

    #[test]
    fn graphicality_examples() {
        let budget = EnumerationBudget::default();
        assert!(oracle_is_graphical(&seq(&[2, 2, 2]), &budget).unwrap());
        assert!(!oracle_is_graphical(&seq(&[1, -1]), &budget).unwrap());
        assert!(oracle_is_graphical(&seq(&[0, 0, 0, 0]), &budget).unwrap());
        assert!(!oracle_is_graphical(&seq(&[2, 2, -2]), &budget).unwrap());
        assert!(oracle_is_graphical(&seq(&[]), &budget).unwrap());
    }

    #[test]
    fn witnesses_are_the_smallest_index() {
        let budget = EnumerationBudget::default();
        let w = sequence_witness(&seq(&[1, 1, 0]), &budget).unwrap().unwrap();
        // index 1 = positive (0,1)
        assert_eq!(w.index, 1);
        assert_eq!(w.graph.signed_degrees(), [1, 1, 0]);
        let w = sequence_witness(&seq(&[2, 2, 2]), &budget).unwrap().unwrap();
        assert_eq!(w.index, 13);
        assert_eq!(w.graph, SignedGraph::complete(3, Sign::Positive));
    }

    #[test]
    fn realizable_at_order_examples() {
        let budget = EnumerationBudget::default();
        assert!(oracle_realizable_at_order(&set(&[2]), 3, true, &budget).unwrap());
        assert!(!oracle_realizable_at_order(&set(&[2]), 2, true, &budget).unwrap());
        assert!(!oracle_realizable_at_order(&set(&[2]), 2, false, &budget).unwrap());
        assert!(oracle_realizable_at_order(&set(&[1, 2]), 3, true, &budget).unwrap());
    }

    #[test]
    fn connectivity_requirement_matters() {
        let budget = EnumerationBudget::default();
        // {0, 1} on three vertices: an edge plus an isolated vertex, never connected
        assert!(oracle_realizable_at_order(&set(&[0, 1]), 3, false, &budget).unwrap());
        assert!(!oracle_realizable_at_order(&set(&[0, 1]), 3, true, &budget).unwrap());
    }

    #[test]
    fn min_order_examples() {
        let budget = EnumerationBudget::default();
        assert_eq!(oracle_min_order(&set(&[1, 2]), true, &budget).unwrap(), 3);
        assert_eq!(oracle_min_order(&set(&[-2, -1]), true, &budget).unwrap(), 3);
        assert_eq!(oracle_min_order(&set(&[0]), true, &budget).unwrap(), 1);
        let small = EnumerationBudget::with_max_order(3);
        assert_eq!(
            oracle_min_order(&set(&[3]), true, &small),
            Err(Error::NotFoundWithinBudget(3))
        );
    }
}
