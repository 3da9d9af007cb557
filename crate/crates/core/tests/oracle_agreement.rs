// SPDX-License-Identifier: Apache-2.0

//! Deciders and witnesses against brute force, beyond the acceptance ranges.

use signed_degree::oracle::{oracle_is_graphical, EnumerationBudget};
use signed_degree::{is_graphical_chartrand, is_graphical_yan, realize_sequence, SignedDegreeSequence};

/// Non-increasing sequences of length `len` with entries in `lo..=hi`.
fn multisets(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (lo..=hi)
        .rev()
        .flat_map(|first| {
            multisets(len - 1, lo, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn assert_agreement(entries: Vec<i64>, budget: &EnumerationBudget) -> bool {
    let seq = SignedDegreeSequence::new(entries);
    let oracle = oracle_is_graphical(&seq, budget).unwrap();
    assert_eq!(is_graphical_chartrand(&seq), oracle, "chartrand on {seq}");
    assert_eq!(is_graphical_yan(&seq), oracle, "yan on {seq}");
    match realize_sequence(&seq) {
        Some(g) => {
            assert!(oracle, "witness for non-graphical {seq}");
            assert_eq!(g.signed_degrees(), seq.entries(), "witness for {seq}");
        }
        None => assert!(!oracle, "no witness for graphical {seq}"),
    }
    oracle
}

#[test]
fn short_sequences_exhaustively() {
    let budget = EnumerationBudget::default();
    for len in 0..=3 {
        for entries in signed_degree::certify::sequences(len, -3, 3) {
            assert_agreement(entries, &budget);
        }
    }
}

#[test]
fn every_length_five_multiset() {
    let budget = EnumerationBudget::default();
    let all = multisets(5, -4, 4);
    assert_eq!(all.len(), 1287);
    let graphical = all
        .into_iter()
        .filter(|e| assert_agreement(e.clone(), &budget))
        .count();
    // both verdicts occur in bulk
    assert!(graphical > 100 && graphical < 1187, "{graphical}");
}

#[test]
fn witnesses_for_longer_sequences_are_exact() {
    // beyond oracle reach; the witness itself is the certificate
    let cases: [&[i64]; 4] = [
        &[5, 5, 5, 5, 5, 5],
        &[3, -3, 2, -2, 1, -1, 0, 0],
        &[6, 1, 1, 1, 1, 1, 1, -4, 0, 0],
        &[-7, -7, -7, -7, -7, -7, -7, -7],
    ];
    for entries in cases {
        let seq = SignedDegreeSequence::from(entries);
        assert!(is_graphical_chartrand(&seq), "{seq}");
        assert!(is_graphical_yan(&seq), "{seq}");
        let g = realize_sequence(&seq).unwrap();
        assert_eq!(g.signed_degrees(), entries);
    }
}
