//! Abelian extensions from matched pairs of groups.
//!
//! An exact factorization G = F Gamma gives a matched pair of actions and a
//! bicrossed product algebra of dimension |G|. The example builds both
//! orientations of the A4 = V4 Z3 factorization, lists grouplikes and
//! irreducible degrees, and runs the nilpotency statements on the extension
//! with prime Gamma.

use std::sync::Arc;

use fusionkit::abelian_ext::{AbelianExtension, MatchedPair, DECOMPOSITION_CONVENTION};
use fusionkit::fixtures;
use fusionkit::group::Subgroup;

fn inspect(label: &str, ext: &AbelianExtension) {
    let p = ext.pair();
    println!("{label}: |F| = {}, |Gamma| = {}, dim H = {}", p.f().order(), p.gamma().order(), ext.dimension());
    let (gh, ghdual) = ext.grouplike_counts();
    println!("  grouplikes: {gh} in H, {ghdual} in H*");
    let c = ext.centrality();
    println!("  central copy of functions on F: {}, cocentral: {}", c.central, c.cocentral);
    let irr = ext.irreps().unwrap();
    println!("  irreducible type {:?}", irr.type_tuple);
    println!();
}

fn main() {
    println!("decomposition convention: {DECOMPOSITION_CONVENTION}");
    println!();

    let g = Arc::new(fixtures::alternating_group(4));
    let v4 = Subgroup::new(Arc::clone(&g), g.all_subgroups().into_iter().find(|s| s.len() == 4).unwrap()).unwrap();
    let three = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
    let z3 = Subgroup::new(Arc::clone(&g), g.subgroup_generated(&[three])).unwrap();

    let kernel_first = AbelianExtension::new(MatchedPair::from_exact_factorization(&g, &v4, &z3).unwrap());
    inspect("A4 with F = V4, Gamma = Z3", &kernel_first);
    let complement_first = AbelianExtension::new(MatchedPair::from_exact_factorization(&g, &z3, &v4).unwrap());
    inspect("A4 with F = Z3, Gamma = V4 (the dual orientation)", &complement_first);

    // With Gamma of prime order and p grouplikes the extension must be built
    // from a Frobenius kernel; every clause is checked mechanically.
    for report in [kernel_first.verify_fnilp().unwrap(), kernel_first.verify_hnilp().unwrap()] {
        println!("{}: {:?}", report.theorem, report.outcome);
        for c in &report.clauses {
            println!("  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        println!();
    }

    // A bigger instance: Frob56 = Z2^3 . Z7.
    let frob = Arc::new(fixtures::group_by_name("Frob56").unwrap());
    let eight = frob.all_subgroups().into_iter().find(|s| s.len() == 8).unwrap();
    let f = Subgroup::new(Arc::clone(&frob), eight).unwrap();
    let seven = frob.elements().find(|&x| frob.element_order(x) == 7).unwrap();
    let gamma = Subgroup::new(Arc::clone(&frob), frob.subgroup_generated(&[seven])).unwrap();
    let ext = AbelianExtension::new(MatchedPair::from_exact_factorization(&frob, &f, &gamma).unwrap());
    inspect("Frob56 with F = Z2^3, Gamma = Z7", &ext);
    let report = ext.verify_fnilp().unwrap();
    println!("{}: {:?}", report.theorem, report.outcome);
}
