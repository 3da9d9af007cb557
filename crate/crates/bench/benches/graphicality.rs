// SPDX-License-Identifier: Apache-2.0

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use signed_degree::{
    is_graphical_chartrand, is_graphical_yan, oracle_is_graphical, realize_sequence, EnumerationBudget,
    SignedDegreeSequence,
};
use std::hint::black_box;

// entries spread over a band around zero, sum forced even
fn sample(len: usize) -> SignedDegreeSequence {
    let half = (len as i64 - 1) / 2;
    let mut entries: Vec<i64> = (0..len as i64).map(|i| (i % (half + 1)) - half / 2).collect();
    if entries.iter().sum::<i64>() % 2 != 0 {
        entries[0] += 1;
    }
    SignedDegreeSequence::new(entries)
}

fn deciders(c: &mut Criterion) {
    let mut group = c.benchmark_group("deciders");
    for len in [6usize, 12, 24] {
        let seq = sample(len);
        group.bench_with_input(BenchmarkId::new("chartrand", len), &seq, |b, s| {
            b.iter(|| is_graphical_chartrand(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("yan", len), &seq, |b, s| {
            b.iter(|| is_graphical_yan(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("witness", len), &seq, |b, s| {
            b.iter(|| realize_sequence(black_box(s)))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let budget = EnumerationBudget::default();
    // not graphical, so the whole order-5 space is scanned
    let seq = SignedDegreeSequence::new(vec![4, 4, -4, 0, 0]);
    c.bench_function("oracle_is_graphical/full_scan_order_5", |b| {
        b.iter(|| oracle_is_graphical(black_box(&seq), &budget).unwrap())
    });
}

criterion_group!(benches, deciders, oracle);
criterion_main!(benches);
