//! Categories C(G, F) from a group and a subgroup, with trivial cocycles.
//!
//! Simple objects are indexed by pairs (double coset FsF, irreducible of the
//! stabilizer F_s = F meet sFs^-1); the degree is [F : F_s] times the
//! stabilizer degree. The number of degree-1 objects has the closed form
//! |F^ab| * |N_G(F) : F|, and the example checks it on every run.

use std::sync::Arc;

use fusionkit::fixtures;
use fusionkit::group::Subgroup;
use fusionkit::group_theoretical::{gt_data, verify_fnilp_gt};

fn main() {
    let g = Arc::new(fixtures::alternating_group(4));
    for f_order in [2usize, 3, 4] {
        let elems = g.all_subgroups().into_iter().find(|s| s.len() == f_order).unwrap();
        let f = Subgroup::new(Arc::clone(&g), elems).unwrap();
        let data = gt_data(&g, &f).unwrap();
        println!("C(A4, F) with |F| = {f_order}");
        println!("  {} double cosets, sizes {:?}", data.double_cosets.len(),
            data.double_cosets.iter().map(|c| c.elements.len()).collect::<Vec<_>>());
        println!("  type {:?}, FPdim {}", data.type_tuple, data.fpdim);
        println!("  invertibles: counted {}, predicted {} (formula |F^ab| |N_G(F):F|)",
            data.invertibles, data.invertibles_predicted);
        assert_eq!(data.invertibles, data.invertibles_predicted);
        assert!(data.cd_bound_check(), "all degrees divide |F|");
        println!();
    }

    // Prime-order F with exactly p invertibles forces a Frobenius kernel
    // structure on G; the report below walks the clauses on Frob56.
    let frob = Arc::new(fixtures::group_by_name("Frob56").unwrap());
    let seven = frob.elements().find(|&x| frob.element_order(x) == 7).unwrap();
    let f = Subgroup::new(Arc::clone(&frob), frob.subgroup_generated(&[seven])).unwrap();
    let report = verify_fnilp_gt(&frob, &f).unwrap();
    println!("structure statement on C(Frob56, Z7): {:?}", report.outcome);
    for c in &report.clauses {
        println!("  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
    }
}
