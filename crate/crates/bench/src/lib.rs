// SPDX-License-Identifier: Apache-2.0

//! Criterion benchmarks for `signed-degree`; see `benches/`.
