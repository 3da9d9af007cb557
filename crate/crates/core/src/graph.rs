// SPDX-License-Identifier: Apache-2.0

//! Signed graphs and their degree bookkeeping.
//!
//! Vertices are the dense indices `0..order`. An edge is stored once under its
//! normalized key `(min(u, v), max(u, v))`, so a [`SignedGraph`] is simple and
//! undirected by construction. Graphs are immutable once built; all editing
//! goes through [`GraphBuilder`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Neg, Range};

use crate::error::{Error, Result};

/// Sign carried by an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// `+1` or `-1`.
    pub const fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub const fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.flipped()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph whose edges are signed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedGraph {
    order: usize,
    edges: BTreeMap<(usize, usize), Sign>,
}

impl SignedGraph {
    /// The edgeless graph on `order` vertices.
    pub fn edgeless(order: usize) -> Self {
        SignedGraph {
            order,
            edges: BTreeMap::new(),
        }
    }

    /// The complete graph on `order` vertices with every edge carrying `sign`.
    pub fn complete(order: usize, sign: Sign) -> Self {
        let mut builder = GraphBuilder::new(order);
        builder.clique(0..order, sign);
        builder.build()
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut builder = GraphBuilder::new(order);
        for (u, v, sign) in edges {
            builder.add_edge(u, v, sign)?;
        }
        Ok(builder.build())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.edges.get(&edge_key(u, v)).copied()
    }

    /// Number of positive edges at `v` minus the number of negative edges at `v`.
    pub fn signed_degree(&self, v: usize) -> Result<i64> {
        self.check_vertex(v)?;
        Ok(self
            .edges()
            .filter(|&(a, b, _)| a == v || b == v)
            .map(|(_, _, s)| s.value())
            .sum())
    }

    /// Signed degree of every vertex, indexed by vertex.
    pub fn signed_degrees(&self) -> Vec<i64> {
        let mut degrees = vec![0; self.order];
        for (u, v, s) in self.edges() {
            degrees[u] += s.value();
            degrees[v] += s.value();
        }
        degrees
    }

    /// All signed degrees in non-increasing order.
    pub fn signed_degree_sequence(&self) -> SignedDegreeSequence {
        SignedDegreeSequence::new(self.signed_degrees()).sorted()
    }

    pub fn signed_degree_set(&self) -> Result<DegreeSet> {
        if self.order == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(DegreeSet {
            values: self.signed_degrees().into_iter().collect(),
        })
    }

    /// The same graph with every edge sign interchanged.
    pub fn negate_signs(&self) -> SignedGraph {
        SignedGraph {
            order: self.order,
            edges: self.edges.iter().map(|(&k, &s)| (k, -s)).collect(),
        }
    }

    /// Whether the underlying unsigned graph is connected.
    pub fn is_connected(&self) -> Result<bool> {
        if self.order == 0 {
            return Err(Error::EmptyGraph);
        }
        let adjacency = self.adjacency();
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        Ok(reached == self.order)
    }

    /// `self` followed by `other`, whose vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let mut builder = GraphBuilder::from_graph(self.clone());
        builder.append(other);
        builder.build()
    }

    pub fn into_builder(self) -> GraphBuilder {
        GraphBuilder::from_graph(self)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.order];
        for (u, v, _) in self.edges() {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        adjacency
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }
}

/// Incremental construction of a [`SignedGraph`].
///
/// Adding an edge that is already present is an error, whatever its sign.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    graph: SignedGraph,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        GraphBuilder {
            graph: SignedGraph::edgeless(order),
        }
    }

    pub fn from_graph(graph: SignedGraph) -> Self {
        GraphBuilder { graph }
    }

    pub fn order(&self) -> usize {
        self.graph.order
    }

    /// Appends `count` isolated vertices and returns their index range.
    pub fn add_vertices(&mut self, count: usize) -> Range<usize> {
        let start = self.graph.order;
        self.graph.order += count;
        start..self.graph.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        if u == v {
            return Err(Error::Loop(u));
        }
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        let key = edge_key(u, v);
        if self.graph.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        self.graph.edges.insert(key, sign);
        Ok(())
    }

    /// Adds every edge inside `block`, all with `sign`.
    ///
    /// Panics if `block` is out of range or already has an edge.
    pub fn clique(&mut self, block: Range<usize>, sign: Sign) {
        for u in block.clone() {
            for v in u + 1..block.end {
                self.add_edge(u, v, sign).expect("clique on a fresh block");
            }
        }
    }

    /// Adds every edge between `left` and `right`, all with `sign`.
    ///
    /// Panics if the blocks overlap, are out of range, or already share an edge.
    pub fn join(&mut self, left: Range<usize>, right: Range<usize>, sign: Sign) {
        for u in left {
            for v in right.clone() {
                self.add_edge(u, v, sign).expect("join of disjoint fresh blocks");
            }
        }
    }

    /// Copies `other` next to the vertices already present; returns the range it occupies.
    pub fn append(&mut self, other: &SignedGraph) -> Range<usize> {
        let range = self.add_vertices(other.order);
        let offset = range.start;
        self.graph.edges.extend(
            other
                .edges
                .iter()
                .map(|(&(u, v), &s)| ((u + offset, v + offset), s)),
        );
        range
    }

    pub fn build(self) -> SignedGraph {
        self.graph
    }
}

/// A non-empty set of distinct integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSet {
    values: BTreeSet<i64>,
}

impl DegreeSet {
    /// Builds the set, rejecting empty input and repeated values.
    pub fn new<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for value in values {
            if !set.insert(value) {
                return Err(Error::DuplicateDegree(value));
            }
        }
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(DegreeSet { values: set })
    }

    /// Builds the set, silently collapsing repeated values.
    pub fn from_multiset<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        let values: BTreeSet<i64> = values.into_iter().collect();
        if values.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(DegreeSet { values })
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.values.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, value: i64) -> bool {
        self.values.contains(&value)
    }

    pub fn smallest(&self) -> i64 {
        *self.values.first().expect("non-empty")
    }

    pub fn largest(&self) -> i64 {
        *self.values.last().expect("non-empty")
    }

    pub fn negated(&self) -> DegreeSet {
        DegreeSet {
            values: self.values.iter().map(|&d| -d).collect(),
        }
    }

    pub(crate) fn from_set(values: BTreeSet<i64>) -> Option<Self> {
        (!values.is_empty()).then_some(DegreeSet { values })
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

/// A finite list of integers, as given; validation happens in
/// [`crate::graphicality`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedDegreeSequence(Vec<i64>);

impl SignedDegreeSequence {
    pub fn new(entries: Vec<i64>) -> Self {
        SignedDegreeSequence(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Non-increasing rearrangement.
    pub fn sorted(mut self) -> Self {
        self.0.sort_unstable_by(|a, b| b.cmp(a));
        self
    }

    pub fn negated(&self) -> Self {
        SignedDegreeSequence(self.0.iter().map(|&d| -d).collect())
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for SignedDegreeSequence {
    fn from(entries: Vec<i64>) -> Self {
        SignedDegreeSequence(entries)
    }
}

impl From<&[i64]> for SignedDegreeSequence {
    fn from(entries: &[i64]) -> Self {
        SignedDegreeSequence(entries.to_vec())
    }
}

impl fmt::Display for SignedDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}
