//! Acceptance suite. Each test prints one PASS/FAIL line with its tolerance
//! and budget, then the per-check details, and fails if the criterion fails.

use std::time::{Duration, Instant};

use trefoil_core::trefoil_module::Chirality;
use trefoil_core::verify::criterion;

/// Every criterion is an exact identity; runtimes are budgets for release builds.
const TOLERANCE: &str = "exact";

fn run(id: usize, budget: Duration) {
    let t0 = Instant::now();
    let r = criterion(id, &Chirality::BOTH);
    let dt = t0.elapsed();
    let tag = if r.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {id:>2}: {tag}  {}  [tolerance: {TOLERANCE}; {:.2}s, budget {}s]",
        r.title,
        dt.as_secs_f64(),
        budget.as_secs()
    );
    for d in &r.details {
        println!("    {d}");
    }
    assert!(r.passed, "criterion {id} failed");
}

#[test]
fn criterion_01_kernel_generators() {
    run(1, Duration::from_secs(1));
}

#[test]
fn criterion_02_closed_forms() {
    run(2, Duration::from_secs(10));
}

#[test]
fn criterion_03_y_powers() {
    run(3, Duration::from_secs(10));
}

#[test]
fn criterion_04_module_axiom() {
    run(4, Duration::from_secs(30));
}

#[test]
fn criterion_05_embedding() {
    run(5, Duration::from_secs(10));
}

#[test]
fn criterion_06_aideal_first_generator() {
    run(6, Duration::from_secs(5));
}

#[test]
fn criterion_07_aideal_certificates() {
    run(7, Duration::from_secs(60));
}

#[test]
fn criterion_08_p1_kernel() {
    run(8, Duration::from_secs(10));
}

#[test]
fn criterion_09_t_minus_one() {
    run(9, Duration::from_secs(10));
}

#[test]
fn criterion_10_round_trips() {
    run(10, Duration::from_secs(10));
}
