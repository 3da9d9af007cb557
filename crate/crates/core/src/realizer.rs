// SPDX-License-Identifier: Apache-2.0

//! Connected signed graphs with a prescribed signed degree set.
//!
//! All-positive sets are realized on `max(D) + 1` vertices, which is the least
//! possible order; all-negative sets are the sign interchange of the positive
//! case. Sets mixing signs and/or containing `0` are built from those two
//! ingredients plus at most two extra vertices, glued on with four edges whose
//! contributions cancel at every endpoint.
//!
//! Vertex layout is deterministic: ingredient graphs come first, in the order
//! they are named below, followed by any added vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{DegreeSet, GraphBuilder, Sign, SignedGraph};

/// Which construction [`realize_set`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealizationCase {
    /// Every element is positive.
    Positive,
    /// Every element is negative.
    Negative,
    /// `D = {0}`.
    Zero,
    /// `D = D1 ∪ {0}` with `D1` all positive or all negative.
    OneSignWithZero,
    /// `D = D1 ∪ D2`, `D1` positive, `D2` negative.
    MixedSigns,
    /// `D = D1 ∪ D2 ∪ {0}`, `D1` positive, `D2` negative.
    MixedSignsWithZero,
}

impl RealizationCase {
    /// Classifies a degree set; total over non-empty sets.
    pub fn of(set: &DegreeSet) -> RealizationCase {
        let zero = set.contains(0);
        let positive = set.largest() > 0;
        let negative = set.smallest() < 0;
        match (zero, positive, negative) {
            (true, false, false) => RealizationCase::Zero,
            (false, true, false) => RealizationCase::Positive,
            (false, false, true) => RealizationCase::Negative,
            (true, true, false) | (true, false, true) => RealizationCase::OneSignWithZero,
            (true, true, true) => RealizationCase::MixedSignsWithZero,
            (false, true, true) => RealizationCase::MixedSigns,
            (false, false, false) => unreachable!("a non-empty set has a zero, positive or negative element"),
        }
    }

    pub fn is_gluing(self) -> bool {
        matches!(
            self,
            RealizationCase::OneSignWithZero
                | RealizationCase::MixedSigns
                | RealizationCase::MixedSignsWithZero
        )
    }
}

/// The ingredients and extra edges of a glued realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    /// The final vertex set with only the ingredient edges: ingredients side
    /// by side, added vertices isolated.
    pub base: SignedGraph,
    /// Vertices of `base` that belong to no ingredient.
    pub added_vertices: Vec<usize>,
    /// The four edges laid over `base`.
    pub added_edges: [(usize, usize, Sign); 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationResult {
    pub graph: SignedGraph,
    /// Set only when the construction is known to use the fewest vertices.
    pub claimed_minimum_order: Option<usize>,
    pub case: RealizationCase,
    pub gluing: Option<Gluing>,
}

impl RealizationResult {
    fn minimal(graph: SignedGraph, case: RealizationCase) -> Self {
        RealizationResult {
            claimed_minimum_order: Some(graph.order()),
            graph,
            case,
            gluing: None,
        }
    }
}

fn magnitude(d: i64) -> usize {
    usize::try_from(d.unsigned_abs()).expect("degree fits in usize")
}

/// Realizes a set of positive integers on `max(D) + 1` vertices, all edges positive.
pub fn realize_positive_set(set: &DegreeSet) -> Result<RealizationResult> {
    if let Some(bad) = set.iter().find(|&d| d <= 0) {
        return Err(Error::DegreeOutOfDomain {
            value: bad,
            expected: "positive",
        });
    }
    let ascending: Vec<usize> = set.iter().map(magnitude).collect();
    Ok(RealizationResult::minimal(
        positive_graph(&ascending),
        RealizationCase::Positive,
    ))
}

// `degrees` is strictly increasing and positive.
//
// One element d: the complete graph on d + 1 vertices. Two elements d1 < d2: a
// clique on d1 vertices joined to d2 - d1 + 1 independent vertices. More: the
// middle elements shifted down by d1 are realized recursively (G1), a clique
// on d1 vertices (G2) is joined to all of G1 and to d_n - d_{n-1} independent
// vertices (G3). G1 vertices gain d1, G2 vertices reach d_n, G3 vertices sit
// at d1.
fn positive_graph(degrees: &[usize]) -> SignedGraph {
    match *degrees {
        [] => unreachable!("callers pass a non-empty set"),
        [d] => SignedGraph::complete(d + 1, Sign::Positive),
        [d1, d2] => {
            let mut b = GraphBuilder::new(0);
            let hub = b.add_vertices(d1);
            let leaves = b.add_vertices(d2 - d1 + 1);
            b.clique(hub.clone(), Sign::Positive);
            b.join(hub, leaves, Sign::Positive);
            b.build()
        }
        [d1, ref middle @ .., dn] => {
            let shifted: Vec<usize> = middle.iter().map(|d| d - d1).collect();
            let inner = positive_graph(&shifted);
            let mut b = GraphBuilder::new(0);
            let g1 = b.append(&inner);
            let g2 = b.add_vertices(d1);
            let g3 = b.add_vertices(dn - middle[middle.len() - 1]);
            b.clique(g2.clone(), Sign::Positive);
            b.join(g2.clone(), g1, Sign::Positive);
            b.join(g2, g3, Sign::Positive);
            b.build()
        }
    }
}

/// Realizes a set of negative integers on `|min(D)| + 1` vertices, all edges negative.
pub fn realize_negative_set(set: &DegreeSet) -> Result<RealizationResult> {
    if let Some(bad) = set.iter().find(|&d| d >= 0) {
        return Err(Error::DegreeOutOfDomain {
            value: bad,
            expected: "negative",
        });
    }
    let positive = realize_positive_set(&set.negated())?;
    Ok(RealizationResult::minimal(
        positive.graph.negate_signs(),
        RealizationCase::Negative,
    ))
}

/// Realizes any non-empty integer set as the signed degree set of a connected graph.
pub fn realize_set(set: &DegreeSet) -> Result<RealizationResult> {
    match RealizationCase::of(set) {
        RealizationCase::Zero => Ok(RealizationResult::minimal(
            SignedGraph::edgeless(1),
            RealizationCase::Zero,
        )),
        RealizationCase::Positive => realize_positive_set(set),
        RealizationCase::Negative => realize_negative_set(set),
        RealizationCase::OneSignWithZero => glue_zero_onto_one_sign(set),
        RealizationCase::MixedSignsWithZero => glue_mixed_with_zero(set),
        RealizationCase::MixedSigns => glue_mixed(set),
    }
}

struct Parts {
    positive: Option<DegreeSet>,
    negative: Option<DegreeSet>,
}

fn split(set: &DegreeSet) -> Parts {
    let positive: BTreeSet<i64> = set.iter().filter(|&d| d > 0).collect();
    let negative: BTreeSet<i64> = set.iter().filter(|&d| d < 0).collect();
    Parts {
        positive: DegreeSet::from_set(positive),
        negative: DegreeSet::from_set(negative),
    }
}

fn first_edge_with(graph: &SignedGraph, offset: usize, sign: Sign) -> (usize, usize) {
    graph
        .edges()
        .find(|e| e.2 == sign)
        .map(|(u, v, _)| (u + offset, v + offset))
        .expect("one-sign realizations of non-zero degrees have an edge of that sign")
}

fn glue(
    case: RealizationCase,
    base: SignedGraph,
    added_vertices: Vec<usize>,
    added_edges: [(usize, usize, Sign); 4],
) -> RealizationResult {
    let mut b = base.clone().into_builder();
    for (u, v, s) in added_edges {
        b.add_edge(u, v, s)
            .expect("glue edges join distinct, previously unlinked vertices");
    }
    RealizationResult {
        graph: b.build(),
        claimed_minimum_order: None,
        case,
        gluing: Some(Gluing {
            base,
            added_vertices,
            added_edges,
        }),
    }
}

// D1 ∪ {0}: realize D1 (one sign), add x and y; with e = uv of D1's sign s,
// ux and vy get s, uy and vx get -s.
fn glue_zero_onto_one_sign(set: &DegreeSet) -> Result<RealizationResult> {
    let parts = split(set);
    let (ingredient, sign) = match (parts.positive, parts.negative) {
        (Some(p), None) => (realize_positive_set(&p)?.graph, Sign::Positive),
        (None, Some(n)) => (realize_negative_set(&n)?.graph, Sign::Negative),
        _ => unreachable!("classified as one sign plus zero"),
    };
    let (u, v) = first_edge_with(&ingredient, 0, sign);
    let mut b = ingredient.into_builder();
    let extra = b.add_vertices(2);
    let (x, y) = (extra.start, extra.start + 1);
    Ok(glue(
        RealizationCase::OneSignWithZero,
        b.build(),
        vec![x, y],
        [(u, x, sign), (v, y, sign), (u, y, -sign), (v, x, -sign)],
    ))
}

// D1 ∪ D2: positive edge uv of G1, negative edge xy of G2; ux and vy
// positive, uy and vx negative.
fn glue_mixed(set: &DegreeSet) -> Result<RealizationResult> {
    let parts = split(set);
    let g1 = realize_positive_set(parts.positive.as_ref().expect("mixed"))?.graph;
    let g2 = realize_negative_set(parts.negative.as_ref().expect("mixed"))?.graph;
    let (u, v) = first_edge_with(&g1, 0, Sign::Positive);
    let (x, y) = first_edge_with(&g2, g1.order(), Sign::Negative);
    Ok(glue(
        RealizationCase::MixedSigns,
        g1.disjoint_union(&g2),
        Vec::new(),
        [
            (u, x, Sign::Positive),
            (v, y, Sign::Positive),
            (u, y, Sign::Negative),
            (v, x, Sign::Negative),
        ],
    ))
}

// D1 ∪ D2 ∪ {0}: positive edge uv of G1, first vertex x of G2, new vertex y;
// uy and vx positive, ux and vy negative.
fn glue_mixed_with_zero(set: &DegreeSet) -> Result<RealizationResult> {
    let parts = split(set);
    let g1 = realize_positive_set(parts.positive.as_ref().expect("mixed"))?.graph;
    let g2 = realize_negative_set(parts.negative.as_ref().expect("mixed"))?.graph;
    let (u, v) = first_edge_with(&g1, 0, Sign::Positive);
    let x = g1.order();
    let mut b = g1.disjoint_union(&g2).into_builder();
    let y = b.add_vertices(1).start;
    Ok(glue(
        RealizationCase::MixedSignsWithZero,
        b.build(),
        vec![y],
        [
            (u, y, Sign::Positive),
            (v, x, Sign::Positive),
            (u, x, Sign::Negative),
            (v, y, Sign::Negative),
        ],
    ))
}

/// `copies` disjoint copies of `graph`; disconnected whenever `copies >= 2`.
pub fn replicate(graph: &SignedGraph, copies: usize) -> Result<SignedGraph> {
    if copies == 0 {
        return Err(Error::ZeroCopies);
    }
    if graph.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut b = GraphBuilder::new(0);
    for _ in 0..copies {
        b.append(graph);
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(values: &[i64]) -> DegreeSet {
        DegreeSet::new(values.iter().copied()).unwrap()
    }

    fn sorted_degrees(g: &SignedGraph) -> Vec<i64> {
        g.signed_degree_sequence().into_inner()
    }

    #[test]
    fn single_positive_degree_is_a_positive_clique() {
        let r = realize_positive_set(&set(&[2])).unwrap();
        assert_eq!(r.graph, SignedGraph::complete(3, Sign::Positive));
        assert_eq!(r.claimed_minimum_order, Some(3));
    }

    #[test]
    fn two_positive_degrees_give_a_star_for_one_and_three() {
        let r = realize_positive_set(&set(&[1, 3])).unwrap();
        assert_eq!(r.graph.order(), 4);
        assert_eq!(r.graph.signed_degrees(), [3, 1, 1, 1]);
        assert_eq!(r.graph.edge_count(), 3);
    }

    #[test]
    fn three_positive_degrees_match_the_layered_construction() {
        // recursive block {2 - 1} = K2, then K1 hub, then one pendant vertex
        let r = realize_positive_set(&set(&[1, 2, 3])).unwrap();
        assert_eq!(r.graph.order(), 4);
        assert_eq!(r.graph.signed_degrees(), [2, 2, 3, 1]);
        assert_eq!(r.graph.signed_degree_set().unwrap().to_vec(), [1, 2, 3]);
    }

    #[test]
    fn positive_realizer_rejects_non_positive_elements() {
        assert_eq!(
            realize_positive_set(&set(&[0, 2])),
            Err(Error::DegreeOutOfDomain {
                value: 0,
                expected: "positive"
            })
        );
        assert!(realize_positive_set(&set(&[-1])).is_err());
    }

    #[test]
    fn negative_examples() {
        let r = realize_negative_set(&set(&[-2])).unwrap();
        assert_eq!(r.graph, SignedGraph::complete(3, Sign::Negative));

        let r = realize_negative_set(&set(&[-1, -3])).unwrap();
        assert_eq!(r.graph.order(), 4);
        assert_eq!(sorted_degrees(&r.graph), [-1, -1, -1, -3]);
        assert_eq!(r.claimed_minimum_order, Some(4));

        let r = realize_negative_set(&set(&[-1])).unwrap();
        assert_eq!(r.graph, SignedGraph::complete(2, Sign::Negative));

        assert!(realize_negative_set(&set(&[-1, 0])).is_err());
    }

    #[test]
    fn zero_alone_is_a_single_vertex() {
        let r = realize_set(&set(&[0])).unwrap();
        assert_eq!(r.graph, SignedGraph::edgeless(1));
        assert_eq!(r.case, RealizationCase::Zero);
        assert_eq!(r.claimed_minimum_order, Some(1));
    }

    #[test]
    fn one_and_zero_glue_two_vertices_onto_k2() {
        // K2(+) on {0,1}; u=0, v=1, x=2, y=3: 02+, 13+, 03-, 12-
        let r = realize_set(&set(&[0, 1])).unwrap();
        assert_eq!(r.case, RealizationCase::OneSignWithZero);
        assert_eq!(r.graph.order(), 4);
        assert_eq!(r.graph.signed_degrees(), [1, 1, 0, 0]);
        assert!(r.graph.is_connected().unwrap());
        assert_eq!(r.claimed_minimum_order, None);
        let edges: Vec<_> = r.graph.edges().collect();
        assert_eq!(
            edges,
            [
                (0, 1, Sign::Positive),
                (0, 2, Sign::Positive),
                (0, 3, Sign::Negative),
                (1, 2, Sign::Negative),
                (1, 3, Sign::Positive),
            ]
        );
    }

    #[test]
    fn negative_one_sign_with_zero_uses_negative_edges() {
        let r = realize_set(&set(&[-2, 0])).unwrap();
        assert_eq!(r.case, RealizationCase::OneSignWithZero);
        assert_eq!(r.graph.signed_degrees(), [-2, -2, -2, 0, 0]);
        let gluing = r.gluing.unwrap();
        assert_eq!(gluing.added_edges[0], (0, 3, Sign::Negative));
        assert_eq!(gluing.added_edges[2], (0, 4, Sign::Positive));
    }

    #[test]
    fn plus_and_minus_one_glue_two_edges() {
        let r = realize_set(&set(&[-1, 1])).unwrap();
        assert_eq!(r.case, RealizationCase::MixedSigns);
        assert_eq!(r.graph.order(), 4);
        assert_eq!(r.graph.signed_degrees(), [1, 1, -1, -1]);
        assert!(r.graph.is_connected().unwrap());
        assert_eq!(r.graph.edge_count(), 6);
    }

    #[test]
    fn plus_minus_one_and_zero_add_one_vertex() {
        let r = realize_set(&set(&[-1, 0, 1])).unwrap();
        assert_eq!(r.case, RealizationCase::MixedSignsWithZero);
        assert_eq!(r.graph.order(), 5);
        assert_eq!(r.graph.signed_degrees(), [1, 1, -1, -1, 0]);
        assert!(r.graph.is_connected().unwrap());
        assert_eq!(r.gluing.unwrap().added_vertices, [4]);
    }

    #[test]
    fn case_classification_is_total() {
        use RealizationCase::*;
        let cases = [
            (&[3][..], Positive),
            (&[-3, -1][..], Negative),
            (&[0][..], Zero),
            (&[0, 2][..], OneSignWithZero),
            (&[-2, 0][..], OneSignWithZero),
            (&[-2, 5][..], MixedSigns),
            (&[-2, 0, 5][..], MixedSignsWithZero),
        ];
        for (values, expected) in cases {
            assert_eq!(RealizationCase::of(&set(values)), expected, "{values:?}");
            assert_eq!(realize_set(&set(values)).unwrap().case, expected);
        }
    }

    #[test]
    fn replicate_examples() {
        let k3 = SignedGraph::complete(3, Sign::Positive);
        let two = replicate(&k3, 2).unwrap();
        assert_eq!(two.order(), 6);
        assert_eq!(two.signed_degree_set().unwrap().to_vec(), [2]);
        assert!(!two.is_connected().unwrap());

        assert_eq!(replicate(&k3, 1).unwrap(), k3);

        let star = realize_positive_set(&set(&[1, 3])).unwrap().graph;
        let three = replicate(&star, 3).unwrap();
        assert_eq!(three.order(), 12);
        assert_eq!(three.signed_degree_set().unwrap().to_vec(), [1, 3]);

        assert_eq!(replicate(&k3, 0), Err(Error::ZeroCopies));
        assert_eq!(replicate(&SignedGraph::edgeless(0), 2), Err(Error::EmptyGraph));
    }
}
