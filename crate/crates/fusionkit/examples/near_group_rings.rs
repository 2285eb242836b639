//! Near-group fusion rings: all invertibles plus one extra object m.
//!
//! Fusion rules are g (x) m = m and m (x) m = kappa m + sum over the group.
//! The ring is associative for every finite G and every kappa >= 0; the
//! interesting question is which rings are realized by representation rings,
//! and the Mersenne pattern (Z_p, p-1) answers it for primes.

use fusionkit::fixtures;
use fusionkit::near_group::{build_near_group_ring, classify, realization_check};

fn main() {
    // The (Z3, 2) ring: three invertibles and one object of dimension 3.
    let ring = build_near_group_ring(&fixtures::cyclic_group(3), 2).unwrap();
    let ints = ring.fp_dims().unwrap().integral.unwrap();
    println!("(Z3, 2): labels {:?}", ring.labels());
    println!("  degrees {:?}, FPdim {}", ints.dims, ints.total);

    // Classification data for a few (G, kappa) pairs; the dimension of m is
    // integral only when kappa^2 + 4|G| is a perfect square.
    println!();
    for (name, kappa) in [("Z3", 2u32), ("Z5", 4), ("Z6", 1), ("Z7", 6), ("Z15", 2)] {
        let g = fixtures::group_by_name(name).unwrap();
        let c = classify(&g, kappa);
        println!(
            "({name}, {kappa}): dim m = {:.4}, integral {}, order class {:?}",
            c.fpdim_m, c.m_integral, c.order_class
        );
    }

    // Realization: for p = 2 the ring is rep(S3); for Mersenne p it is the
    // representation ring of Z2^a : Zp with a equal to log2(p + 1).
    println!();
    for p in [2u64, 3, 7] {
        let check = realization_check(p, 512, 0).unwrap();
        println!(
            "(Z{p}, {}): realized by rep of a group of order {}, FPdim {}, tensor match {}",
            p - 1,
            check.group_order,
            check.fpdim,
            check.matched
        );
        assert!(check.matched);
    }
    println!();
    println!("p = 31 works too but needs a raised cap: the group has order 992");
}
