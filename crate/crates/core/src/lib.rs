// SPDX-License-Identifier: Apache-2.0

//! Signed graphs with prescribed signed degrees.
//!
//! - [`realizer`] builds a connected signed graph whose set of signed degrees
//!   is any given non-empty set of integers, on the fewest possible vertices
//!   when the set has a single sign.
//! - [`graphicality`] decides whether an integer sequence is the signed degree
//!   sequence of some signed graph, two ways, and builds a witness.
//! - [`oracle`] answers the same questions by brute force over every labeled
//!   signed graph of small order.
//! - [`io`] reads and writes graphs as canonical JSON and writes DOT.
//! - [`certify`] runs the cross-checks between all of the above.

pub mod certify;
pub mod error;
pub mod graph;
pub mod graphicality;
pub mod io;
pub mod oracle;
pub mod realizer;

pub use error::{Error, Result};
pub use graph::{DegreeSet, GraphBuilder, Sign, SignedDegreeSequence, SignedGraph};
pub use graphicality::{
    compute_m, is_graphical_chartrand, is_graphical_yan, realize_sequence, reduce_chartrand, standardize,
    ReductionTrace, StandardSequence, StandardizationOutcome,
};
pub use oracle::{oracle_is_graphical, oracle_min_order, oracle_realizable_at_order, EnumerationBudget};
pub use realizer::{
    realize_negative_set, realize_positive_set, realize_set, replicate, RealizationCase, RealizationResult,
};
