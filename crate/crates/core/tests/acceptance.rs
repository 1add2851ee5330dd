use std::time::{Duration, Instant};

use burau_forge::check::failing;
use burau_forge::suite::{criterion, CRITERIA};

const BUDGETS: [u64; 10] = [30, 1, 1, 5, 10, 60, 60, 300, 5, 60];

fn run(n: usize) {
    let start = Instant::now();
    let result = criterion(n);
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(BUDGETS[n - 1]);
    let over = if elapsed > budget { " over budget" } else { "" };
    match result {
        Ok(checks) => {
            let bad = failing(&checks);
            let status = if bad.is_empty() { "PASS" } else { "FAIL" };
            println!(
                "criterion {n:>2} {:<20} {status} {} checks in {:.2?} (budget {}s{over})",
                CRITERIA[n - 1],
                checks.len(),
                elapsed,
                budget.as_secs()
            );
            assert!(bad.is_empty(), "criterion {n} failing checks: {bad:?}");
            assert!(elapsed <= budget, "criterion {n} took {elapsed:.2?}");
        }
        Err(e) => {
            println!("criterion {n:>2} {:<20} FAIL error: {e}", CRITERIA[n - 1]);
            panic!("criterion {n}: {e}");
        }
    }
}

#[test]
fn criterion_01_unitarity() {
    run(1);
}

#[test]
fn criterion_02_braid_identities() {
    run(2);
}

#[test]
fn criterion_03_closed_form_matrices() {
    run(3);
}

#[test]
fn criterion_04_similitude_relations() {
    run(4);
}

#[test]
fn criterion_05_counterexample() {
    run(5);
}

#[test]
fn criterion_06_normal_form() {
    run(6);
}

#[test]
fn criterion_07_building() {
    run(7);
}

#[test]
fn criterion_08_link_of_identity() {
    run(8);
}

#[test]
fn criterion_09_stallings() {
    run(9);
}

#[test]
fn criterion_10_properties() {
    run(10);
}
