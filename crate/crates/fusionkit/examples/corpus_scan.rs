//! Sweeping a statement over the built-in group corpus.
//!
//! The corpus holds every named fixture of order at most 60. For each group
//! the example checks that nilpotency of the representation ring agrees with
//! nilpotency of the group, then runs the near-group solvability statement
//! over the same corpus the way `fusionkit scan builtin solv-neargp` does,
//! surfacing the one genuine failure.

use std::sync::Arc;

use fusionkit::fixtures;
use fusionkit::near_group::verify_solv_neargp;
use fusionkit::report::{verify_kg_nilpotent_iff, TheoremOutcome};

fn main() {
    let corpus = fixtures::corpus();
    println!("corpus: {} groups of order <= 60", corpus.len());
    println!();

    let mut pass = 0;
    for g in &corpus {
        let g = Arc::new(g.clone());
        let report = verify_kg_nilpotent_iff(&g, 512, 0).unwrap();
        assert!(report.passed());
        pass += 1;
    }
    println!("ring nilpotency tracks group nilpotency: {pass}/{} groups", corpus.len());
    println!();

    // Near-group solvability, kappa = |G| - 1. Hypotheses only hold for a
    // handful of instances; one of them fails and is reported as such.
    let mut counts = (0usize, 0usize, 0usize);
    for g in &corpus {
        let kappa = (g.order() - 1) as u32;
        let report = match verify_solv_neargp(g, kappa) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let name = g.name().unwrap_or_default().to_string();
        match &report.outcome {
            TheoremOutcome::Pass => {
                counts.0 += 1;
                println!("  pass ({name}, {kappa})");
            }
            TheoremOutcome::Fail => {
                counts.1 += 1;
                println!("  FAIL ({name}, {kappa})");
                for c in report.clauses.iter().filter(|c| !c.pass) {
                    println!("    failing clause {}: {}", c.name, c.detail);
                }
            }
            TheoremOutcome::Skipped { .. } => counts.2 += 1,
        }
    }
    println!();
    println!(
        "near-group solvability at kappa = |G| - 1: {} pass, {} fail, {} skipped",
        counts.0, counts.1, counts.2
    );
}
