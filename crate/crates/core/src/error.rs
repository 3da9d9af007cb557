// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("operation undefined on the graph with no vertices")]
    EmptyGraph,

    #[error("degree set must be non-empty")]
    EmptySet,

    #[error("degree set contains {0} more than once")]
    DuplicateDegree(i64),

    #[error("degree {value} not allowed here: {expected}")]
    DegreeOutOfDomain { value: i64, expected: &'static str },

    #[error("replication count must be at least 1")]
    ZeroCopies,

    #[error("not a standard sequence: {0}")]
    NotStandard(&'static str),

    #[error("invalid reduction parameters r={r}, s={s} for leading entry {lead} and length {len}")]
    InvalidReduction {
        r: usize,
        s: usize,
        lead: i64,
        len: usize,
    },

    #[error("order {requested} exceeds the enumeration budget (max order {max_order})")]
    OrderOverBudget { requested: usize, max_order: usize },

    #[error("{states} graphs on {order} vertices exceed the enumeration cap of {cap}")]
    StatesOverBudget { order: usize, states: u128, cap: u64 },

    #[error("no realization found up to order {0}")]
    NotFoundWithinBudget(usize),

    #[error("graph document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
