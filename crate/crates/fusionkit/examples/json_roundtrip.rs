//! Canonical JSON serialization and fingerprints.
//!
//! Groups, rings and matched pairs serialize to canonical JSON (sorted keys,
//! no whitespace, trailing newline) so byte equality is meaningful; the
//! fingerprint is the SHA-256 of those bytes. Everything round-trips.

use std::sync::Arc;

use fusionkit::chartab::{character_table, rep_fusion_ring};
use fusionkit::fixtures;
use fusionkit::jsonio::{
    canonical_string, fingerprint, group_from_json, group_to_json, ring_from_json, ring_to_json,
};

fn main() {
    let g = fixtures::dihedral_group(4);
    let gv = group_to_json(&g);
    println!("D4 as canonical JSON ({} bytes):", canonical_string(&gv).len());
    println!("{}", canonical_string(&gv));
    let back = group_from_json(&gv).unwrap();
    assert_eq!(back.order(), 8);
    assert_eq!(group_to_json(&back), gv, "group serialization round-trips");

    let ring = rep_fusion_ring(&character_table(&Arc::new(g)).unwrap());
    let rv = ring_to_json(&ring);
    let fp = fingerprint(&rv);
    println!("rep(D4) fingerprint: {fp}");
    let again = ring_from_json(&rv).unwrap();
    assert_eq!(fingerprint(&ring_to_json(&again)), fp, "ring fingerprint is stable");
    println!("round trip preserved all {} structure constants", ring.rank().pow(3));
}
