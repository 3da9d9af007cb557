// SPDX-License-Identifier: Apache-2.0

//! Exit criteria. Runs every check sequentially (the oracle checks use all
//! cores, and time limits are part of each criterion), prints one line per
//! criterion, then fails if any criterion failed or ran over its limit.
//!
//! `cargo test -p signed-degree --test acceptance -- --nocapture` shows the lines.

use signed_degree::certify::{self, Outcome, RANDOM_SEQUENCE_COUNT};
use signed_degree::EnumerationBudget;

type Check = Box<dyn Fn() -> Outcome>;

#[test]
fn acceptance_criteria() {
    let budget = EnumerationBudget::default();
    assert_eq!(budget.max_order, 6);

    let checks: Vec<(&str, Check)> = vec![
        ("1", Box::new(certify::positive_sets_exact)),
        ("2", Box::new(move || certify::positive_sets_minimal(&budget))),
        ("3", Box::new(certify::negative_sets_mirror)),
        ("4", Box::new(certify::all_sets_total)),
        ("5", Box::new(certify::gluing_neutral)),
        ("6", Box::new(certify::replication_preserves_sets)),
        (
            "7a",
            Box::new(move || certify::deciders_agree_exhaustive(&budget)),
        ),
        (
            "7b",
            Box::new(move || certify::deciders_agree_random(RANDOM_SEQUENCE_COUNT, &budget)),
        ),
        ("8", Box::new(|| certify::witnesses_sound(RANDOM_SEQUENCE_COUNT))),
        ("9", Box::new(certify::deciders_symmetric)),
        ("10", Box::new(certify::serialization_faithful)),
    ];

    let mut failed = Vec::new();
    for (id, check) in checks {
        let outcome = check();
        assert_eq!(outcome.id, id);
        println!("{outcome}");
        if !outcome.ok() {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn acceptance_ranges_have_the_stated_sizes() {
    assert_eq!(certify::subsets(1, 6).len(), 63);
    assert_eq!(certify::subsets(1, 4).len(), 15);
    assert_eq!(certify::subsets(-6, -1).len(), 63);
    assert_eq!(certify::subsets(-4, 4).len(), 511);
    assert_eq!(certify::sequences(4, -3, 3).len(), 2401);
    assert_eq!(certify::random_sequences(RANDOM_SEQUENCE_COUNT).len(), 500);
    assert_eq!(signed_degree::oracle::state_count(4), 729);
    assert_eq!(signed_degree::oracle::state_count(5), 59049);
}
