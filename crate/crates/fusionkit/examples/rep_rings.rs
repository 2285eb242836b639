//! Representation rings as fusion rings.
//!
//! Turns a character table into an integral fusion ring (basis: irreducible
//! characters, structure constants: tensor product multiplicities) and prints
//! its invariants: dimensions, algebra type, invertibles, duality.

use std::sync::Arc;

use fusionkit::chartab::{character_table, rep_fusion_ring};
use fusionkit::fixtures;
use fusionkit::fusion_ring::FusionRing;

fn dump(ring: &FusionRing) {
    let labels = ring.labels();
    println!("rank {} ring on {:?}", ring.rank(), labels);
    let fp = ring.fp_dims().unwrap();
    let ints = fp.integral.as_ref().unwrap();
    println!("  degrees {:?}, FPdim {}", ints.dims, ints.total);
    println!("  type {:?} (degree, multiplicity)", ring.algebra_type().unwrap());
    let inv: Vec<&str> = ring.invertibles().iter().map(|&x| labels[x].as_str()).collect();
    println!("  invertibles {inv:?}");
    for x in 0..ring.rank() {
        let terms: Vec<String> = (0..ring.rank())
            .flat_map(|z| {
                let m = ring.n(x, ring.dual(x), z);
                (m > 0).then(|| if m == 1 { labels[z].clone() } else { format!("{m} {}", labels[z]) })
            })
            .collect();
        println!("  {} (x) {}* = {}", labels[x], labels[x], terms.join(" + "));
    }
    println!();
}

fn main() {
    for name in ["S3", "D4", "A4", "Heis27"] {
        let g = Arc::new(fixtures::group_by_name(name).unwrap());
        println!("== rep({name}) ==");
        dump(&rep_fusion_ring(&character_table(&g).unwrap()));
    }
}
