//! Universal gradings, nilpotency chains and solvability certificates.
//!
//! The adjoint subring (generated by all x x*) is the trivial component of
//! the universal grading; iterating the construction gives a descending chain
//! whose termination at the unit ring is nilpotency. Solvability is never
//! asserted bare: a verdict carries a replayable certificate, and this
//! example replays each one.

use std::sync::Arc;

use fusionkit::chartab::{character_table, rep_fusion_ring};
use fusionkit::fixtures;
use fusionkit::grading::{nilpotency_chain, universal_grading};
use fusionkit::solvability::{revalidate, solvability_verdict, SolvabilityReason};

fn main() {
    for name in ["D4", "S3", "Heis27", "A4", "D15"] {
        let g = Arc::new(fixtures::group_by_name(name).unwrap());
        let ring = rep_fusion_ring(&character_table(&g).unwrap());
        let grading = universal_grading(&ring);
        let chain = nilpotency_chain(&ring);
        println!("rep({name}), rank {}", ring.rank());
        println!(
            "  universal grading group of order {}, components {:?}",
            grading.group.order(),
            grading.components.iter().map(|c| c.len()).collect::<Vec<_>>()
        );
        match chain.class() {
            Some(c) => {
                let orders: Vec<usize> =
                    chain.levels.iter().map(|l| l.grading_group.order()).collect();
                println!("  nilpotent of class {c}, grading orders {orders:?}");
            }
            None => println!("  not nilpotent (chain stalls on a trivial grading)"),
        }
        let verdict = solvability_verdict(&ring);
        match &verdict.reason {
            Some(reason) => {
                println!("  solvable, certificate: {}", reason.tag());
                if let SolvabilityReason::BurnsideDimension { global_dim, primes } = reason {
                    println!("    FPdim {global_dim} has prime support {primes:?}");
                }
                assert!(revalidate(&ring, &verdict), "certificate must replay");
                println!("    certificate replayed successfully");
            }
            None => println!("  solvability unknown"),
        }
        println!();
    }
}
