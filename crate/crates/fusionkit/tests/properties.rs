//! Property tests: structural invariants that must hold for every instance,
//! driven by proptest over constructor parameters.

mod common;

use std::sync::Arc;

use proptest::prelude::*;

use fusionkit::cyclotomic::Cyclotomic;
use fusionkit::fixtures;
use fusionkit::fusion_ring::pointed_fusion_ring;
use fusionkit::group::{structural_series, Elem, FiniteGroup};
use fusionkit::jsonio::{canonical_string, fingerprint, ring_from_json, ring_to_json};

fn relabel(g: &FiniteGroup, sigma: &[usize]) -> FiniteGroup {
    let n = g.order();
    let mut inv = vec![0usize; n];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    let rows: Vec<Vec<Elem>> = (0..n)
        .map(|a| (0..n).map(|b| sigma[g.mul(inv[a] as Elem, inv[b] as Elem) as usize] as Elem).collect())
        .collect();
    FiniteGroup::from_rows(&rows).expect("relabelings of groups are groups")
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = common::Rng(seed);
    let mut sigma: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        sigma.swap(i, rng.below(i + 1));
    }
    sigma
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Relabeling a group's elements preserves every structural invariant.
    #[test]
    fn group_invariants_are_relabel_independent(pick in 0usize..21, seed in any::<u64>()) {
        let pool = common::group_pool();
        let g = &pool[pick % pool.len()];
        let h = relabel(g, &permutation(g.order(), seed));
        prop_assert_eq!(g.order(), h.order());
        prop_assert_eq!(g.is_abelian(), h.is_abelian());
        prop_assert_eq!(g.exponent(), h.exponent());
        prop_assert_eq!(g.center().len(), h.center().len());
        prop_assert_eq!(g.conjugacy_classes().len(), h.conjugacy_classes().len());
        let sg = structural_series(g);
        let sh = structural_series(&h);
        prop_assert_eq!(sg.is_solvable, sh.is_solvable);
        prop_assert_eq!(sg.is_nilpotent, sh.is_nilpotent);
        prop_assert_eq!(sg.nilpotency_class, sh.nilpotency_class);
    }

    /// Group rings are pointed, nilpotent of class at most 1, and satisfy
    /// the ring axioms independently of the constructor's own validation.
    #[test]
    fn group_rings_are_pointed_and_flat(n in 1usize..=16) {
        let g = fixtures::cyclic_group(n);
        let ring = pointed_fusion_ring(&g);
        prop_assert!(ring.is_pointed());
        common::check_axioms(&format!("pointed(Z{n})"), &ring);
        let chain = fusionkit::grading::nilpotency_chain(&ring);
        prop_assert!(chain.is_nilpotent());
        prop_assert!(chain.class().unwrap() <= 1);
        let (inv, _) = ring.invertibles_group();
        prop_assert_eq!(inv.order(), n);
    }

    /// Ring JSON round-trips exactly and fingerprints are stable.
    #[test]
    fn ring_json_round_trips(seed in any::<u64>()) {
        let pool = common::group_pool();
        let (name, ring) = common::random_ring(&mut common::Rng(seed), &pool);
        let v = ring_to_json(&ring);
        let back = ring_from_json(&v).unwrap();
        prop_assert_eq!(ring.rank(), back.rank(), "{}", name);
        prop_assert_eq!(ring.tensor(), back.tensor(), "{}", name);
        prop_assert_eq!(ring.labels(), back.labels(), "{}", name);
        let v2 = ring_to_json(&back);
        prop_assert_eq!(fingerprint(&v), fingerprint(&v2), "{}", name);
        prop_assert_eq!(canonical_string(&v), canonical_string(&v2), "{}", name);
    }

    /// Subring closures are closed under products and duals and contain the
    /// unit; the adjoint subring contains every x x* support.
    #[test]
    fn closures_are_closed(seed in any::<u64>()) {
        let pool = common::group_pool();
        let mut rng = common::Rng(seed);
        let g = &pool[rng.below(pool.len())];
        let ct = fusionkit::chartab::character_table(&Arc::new(g.clone())).unwrap();
        let ring = fusionkit::chartab::rep_fusion_ring(&ct);
        let seed_elt = rng.below(ring.rank());
        let closure = ring.subring_closure(&[seed_elt]);
        prop_assert!(closure.binary_search(&ring.unit()).is_ok());
        for &x in &closure {
            prop_assert!(closure.binary_search(&ring.dual(x)).is_ok());
            for &y in &closure {
                for z in ring.product_support(x, y) {
                    prop_assert!(closure.binary_search(&z).is_ok());
                }
            }
        }
        let adjoint = ring.adjoint_support();
        for x in 0..ring.rank() {
            for z in ring.product_support(x, ring.dual(x)) {
                prop_assert!(adjoint.binary_search(&z).is_ok());
            }
        }
    }

    /// Exact cyclotomic arithmetic: ring laws and conjugation involution.
    #[test]
    fn cyclotomic_laws(order in 1u32..=24, a in -5i64..=5, b in -5i64..=5, j in 0u32..24, k in 0u32..24) {
        let x = Cyclotomic::root_power(order, j % order).scale(a);
        let y = Cyclotomic::root_power(order, k % order).scale(b);
        let z = Cyclotomic::root_power(order, (j + k) % order);
        prop_assert_eq!(x.add(&y).conj().reduced(), x.conj().add(&y.conj()).reduced());
        prop_assert_eq!(x.mul(&y).conj().reduced(), x.conj().mul(&y.conj()).reduced());
        prop_assert_eq!(x.conj().conj().reduced(), x.reduced());
        // root powers multiply by adding exponents
        prop_assert_eq!(
            Cyclotomic::root_power(order, j % order).mul(&Cyclotomic::root_power(order, k % order)).reduced(),
            z.reduced()
        );
        // distributivity
        let d1 = x.add(&y).mul(&z).reduced();
        let d2 = x.mul(&z).add(&y.mul(&z)).reduced();
        prop_assert_eq!(d1, d2);
    }
}
