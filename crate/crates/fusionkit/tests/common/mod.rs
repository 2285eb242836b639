//! Shared helpers for the integration suites: a deterministic generator of
//! small validated fusion rings and independent re-checks of the ring
//! axioms (not trusting the constructor that built them).

#![allow(dead_code)]

use std::sync::Arc;

use fusionkit::chartab::character_table;
use fusionkit::fixtures;
use fusionkit::fusion_ring::{pointed_fusion_ring, FusionRing};
use fusionkit::group::FiniteGroup;
use fusionkit::near_group::build_near_group_ring;

/// splitmix64: tiny, deterministic, and good enough to shuffle parameters.
pub struct Rng(pub u64);

impl Rng {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Small groups (order at most 12) for the fuzz families.
pub fn group_pool() -> Vec<FiniteGroup> {
    let mut pool: Vec<FiniteGroup> = (1..=12).map(fixtures::cyclic_group).collect();
    pool.push(fixtures::elementary_abelian_2(2));
    pool.push(fixtures::elementary_abelian_2(3));
    pool.push(fixtures::group_by_name("Z2xZ4").unwrap());
    pool.push(fixtures::group_by_name("Z3^2").unwrap());
    pool.push(fixtures::symmetric_group(3));
    pool.push(fixtures::dihedral_group(4));
    pool.push(fixtures::dihedral_group(5));
    pool.push(fixtures::dihedral_group(6));
    pool.push(fixtures::quaternion_group());
    pool.push(fixtures::alternating_group(4));
    pool
}

/// One ring from a validated constructor, chosen by the rng: group rings,
/// representation rings, near-group rings, and distinguished subrings.
pub fn random_ring(rng: &mut Rng, pool: &[FiniteGroup]) -> (String, FusionRing) {
    match rng.below(6) {
        0 => {
            let g = &pool[rng.below(pool.len())];
            (format!("pointed({})", name_of(g)), pointed_fusion_ring(g))
        }
        1 => {
            let g = &pool[rng.below(pool.len())];
            (format!("rep({})", name_of(g)), rep_ring(g))
        }
        2 => {
            let n = 1 + rng.below(9);
            let kappa = rng.below(7) as u32;
            let g = fixtures::cyclic_group(n);
            let ring = build_near_group_ring(&g, kappa).expect("near-group rings validate");
            (format!("near(Z{n}, {kappa})"), ring)
        }
        3 => {
            let g = &pool[rng.below(pool.len())];
            let (sub, _) = rep_ring(g).adjoint_subring();
            (format!("adjoint(rep({}))", name_of(g)), sub)
        }
        4 => {
            let g = &pool[rng.below(pool.len())];
            let (sub, _) = rep_ring(g).pointed_subring();
            (format!("pointed-part(rep({}))", name_of(g)), sub)
        }
        _ => {
            let g = &pool[rng.below(pool.len())];
            let ring = rep_ring(g);
            let seed = rng.below(ring.rank());
            let (sub, _) = ring.subring_generated(&[seed]);
            (format!("generated(rep({}), {seed})", name_of(g)), sub)
        }
    }
}

fn name_of(g: &FiniteGroup) -> String {
    g.name().unwrap_or("?").to_string()
}

fn rep_ring(g: &FiniteGroup) -> FusionRing {
    let ct = character_table(&Arc::new(g.clone())).expect("pool groups are under the cap");
    fusionkit::chartab::rep_fusion_ring(&ct)
}

/// Frobenius reciprocity on every triple: N(x,y,z) = N(x*,z,y) = N(z,y*,x).
pub fn check_frobenius(name: &str, ring: &FusionRing) {
    let k = ring.rank();
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let n = ring.n(x, y, z);
                assert_eq!(
                    n,
                    ring.n(ring.dual(x), z, y),
                    "{name}: reciprocity (x*,z,y) fails at ({x},{y},{z})"
                );
                assert_eq!(
                    n,
                    ring.n(z, ring.dual(y), x),
                    "{name}: reciprocity (z,y*,x) fails at ({x},{y},{z})"
                );
            }
        }
    }
}

/// Exhaustive associativity: sum_w N(x,y,w) N(w,z,v) = sum_w N(y,z,w) N(x,w,v).
pub fn check_associativity(name: &str, ring: &FusionRing) {
    let k = ring.rank();
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                for v in 0..k {
                    let lhs: u64 = (0..k)
                        .map(|w| ring.n(x, y, w) as u64 * ring.n(w, z, v) as u64)
                        .sum();
                    let rhs: u64 = (0..k)
                        .map(|w| ring.n(y, z, w) as u64 * ring.n(x, w, v) as u64)
                        .sum();
                    assert_eq!(lhs, rhs, "{name}: associativity fails at ({x},{y},{z}) -> {v}");
                }
            }
        }
    }
}

/// The dimension character is a homomorphism and its squares sum to the
/// global dimension; exact for integral rings, within residual otherwise.
pub fn check_dimensions(name: &str, ring: &FusionRing) {
    let k = ring.rank();
    let fp = ring.fp_dims().expect("validated rings have dimensions");
    if let Some(int) = &fp.integral {
        for x in 0..k {
            for y in 0..k {
                let lhs: u128 =
                    (0..k).map(|z| ring.n(x, y, z) as u128 * int.dims[z] as u128).sum();
                assert_eq!(
                    lhs,
                    int.dims[x] as u128 * int.dims[y] as u128,
                    "{name}: integer dimension character fails at ({x},{y})"
                );
            }
        }
        let total: u128 = int.dims.iter().map(|&d| d as u128 * d as u128).sum();
        assert_eq!(total, int.total as u128, "{name}: sum of squared dimensions");
    } else {
        for x in 0..k {
            for y in 0..k {
                let lhs: f64 = (0..k).map(|z| ring.n(x, y, z) as f64 * fp.dims[z]).sum();
                let rhs = fp.dims[x] * fp.dims[y];
                assert!(
                    (lhs - rhs).abs() <= 1e-6 * rhs.max(1.0),
                    "{name}: dimension character fails at ({x},{y}): {lhs} vs {rhs}"
                );
            }
        }
        let total: f64 = fp.dims.iter().map(|d| d * d).sum();
        assert!(
            (total - fp.global_dim).abs() <= 1e-6 * fp.global_dim.max(1.0),
            "{name}: global dimension mismatch: {total} vs {}",
            fp.global_dim
        );
    }
}

/// When the degree set is exactly {1, d}: d divides every stabilizer order
/// and the number of invertibles.
pub fn check_one_d(name: &str, ring: &FusionRing) {
    if let Some(report) = ring.one_d_divisibility() {
        assert!(report.divides_stabilizers, "{name}: d = {} must divide |G[x]|", report.d);
        assert!(report.divides_invertibles, "{name}: d = {} must divide |G(C)|", report.d);
    }
}

pub fn check_axioms(name: &str, ring: &FusionRing) {
    check_frobenius(name, ring);
    check_associativity(name, ring);
    check_dimensions(name, ring);
    check_one_d(name, ring);
}
