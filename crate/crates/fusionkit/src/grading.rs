//! Universal grading and nilpotency of fusion rings.
//!
//! The grading is computed from the definitional equivalence (x and y share
//! a component when some constituent of x dual(y) lies in the adjoint
//! subring) and then certified: component products must be single-valued,
//! the trivial component must equal the adjoint support, and the component
//! dimensions must balance. Nilpotency iterates the adjoint subring until
//! the chain reaches the unit-only ring or stalls.

use crate::fusion_ring::FusionRing;
use crate::group::FiniteGroup;

/// A certified universal grading: `components[0]` is the trivial component
/// (the adjoint support) and `group` multiplies component indices.
#[derive(Clone, Debug)]
pub struct Grading {
    pub components: Vec<Vec<usize>>,
    pub group: FiniteGroup,
    /// degree[x] = index of the component containing basis element x.
    pub degree: Vec<usize>,
}

/// One level of an adjoint chain.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    /// Basis of this level's ring, in the original ring's indices.
    pub basis: Vec<usize>,
    /// Universal grading of this level's ring (components in original
    /// indices).
    pub components: Vec<Vec<usize>>,
    pub grading_group: FiniteGroup,
    /// Trivial component = next level's basis, in original indices.
    pub trivial_component: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainEnd {
    /// The chain reached the rank-one ring: nilpotent.
    UnitRing,
    /// The adjoint stopped shrinking before reaching the unit: not nilpotent.
    Stalled,
}

#[derive(Clone, Debug)]
pub struct GradingChain {
    pub levels: Vec<ChainLevel>,
    pub end: ChainEnd,
}

impl GradingChain {
    pub fn is_nilpotent(&self) -> bool {
        self.end == ChainEnd::UnitRing
    }

    /// Number of strict descents to reach the unit ring.
    pub fn class(&self) -> Option<usize> {
        self.is_nilpotent().then(|| self.levels.len())
    }
}

/// Universal grading of a validated ring.
pub fn universal_grading(ring: &FusionRing) -> Grading {
    let k = ring.rank();
    let adjoint = ring.adjoint_support();
    let in_adjoint = {
        let mut mask = vec![false; k];
        for &x in &adjoint {
            mask[x] = true;
        }
        mask
    };

    // x ~ y when some constituent of x dual(y) lies in the adjoint.
    let mut degree = vec![usize::MAX; k];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..k {
        let found = reps.iter().position(|&r| {
            ring.product_support(x, ring.dual(r)).iter().any(|&z| in_adjoint[z])
        });
        match found {
            Some(c) => degree[x] = c,
            None => {
                reps.push(x);
                degree[x] = reps.len() - 1;
            }
        }
    }
    let ncomp = reps.len();
    let mut components: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for x in 0..k {
        components[degree[x]].push(x);
    }

    // The unit's component must be exactly the adjoint support.
    let unit_comp = degree[ring.unit()];
    assert_eq!(
        components[unit_comp], adjoint,
        "the trivial component of the universal grading must be the adjoint subring"
    );
    // Put the trivial component first.
    if unit_comp != 0 {
        components.swap(0, unit_comp);
        for d in degree.iter_mut() {
            if *d == 0 {
                *d = unit_comp;
            } else if *d == unit_comp {
                *d = 0;
            }
        }
    }

    // Component products must be single-valued; this induces the group law.
    let mut table = vec![0u16; ncomp * ncomp];
    for a in 0..ncomp {
        for b in 0..ncomp {
            let mut target: Option<usize> = None;
            for &x in &components[a] {
                for &y in &components[b] {
                    for z in ring.product_support(x, y) {
                        match target {
                            None => target = Some(degree[z]),
                            Some(t) => assert_eq!(
                                t, degree[z],
                                "component products must be single-valued"
                            ),
                        }
                    }
                }
            }
            table[a * ncomp + b] = target.expect("components are nonempty") as u16;
        }
    }
    let group = FiniteGroup::new(ncomp, table)
        .expect("single-valued component products form a group");
    assert_eq!(group.identity(), 0);

    // Dimension balance: every component carries the same FP mass, so
    // |U| * FPdim(C_ad) = FPdim(C).
    let fp = ring.fp_dims().expect("validated rings have FP data");
    let masses: Vec<f64> = components
        .iter()
        .map(|c| c.iter().map(|&x| fp.dims[x] * fp.dims[x]).sum())
        .collect();
    for m in &masses {
        assert!(
            (m - masses[0]).abs() <= 1e-6 * masses[0].max(1.0),
            "graded components must have equal FP dimension"
        );
    }
    if let Some(ints) = &fp.integral {
        let ad_mass: u64 = components[0].iter().map(|&x| ints.dims[x] * ints.dims[x]).sum();
        assert_eq!(
            ad_mass * ncomp as u64,
            ints.total,
            "|U| * FPdim(adjoint) must equal FPdim(ring) exactly"
        );
    }

    Grading { components, group, degree }
}

/// Iterated adjoint chain. Each level records the grading of the ring at
/// that level; the last level is the first one whose adjoint stops shrinking
/// (stalled) or the one above the unit-only ring.
pub fn nilpotency_chain(ring: &FusionRing) -> GradingChain {
    let mut basis: Vec<usize> = (0..ring.rank()).collect();
    let mut levels = Vec::new();
    loop {
        if basis.len() == 1 {
            return GradingChain { levels, end: ChainEnd::UnitRing };
        }
        let level_ring = ring.restrict(&basis).expect("chain levels are closed");
        let grading = universal_grading(&level_ring);
        // Map local indices back to the original ring's labels.
        let lift = |local: &[usize]| -> Vec<usize> { local.iter().map(|&i| basis[i]).collect() };
        let trivial = lift(&grading.components[0]);
        let level = ChainLevel {
            basis: basis.clone(),
            components: grading.components.iter().map(|c| lift(c)).collect(),
            grading_group: grading.group,
            trivial_component: trivial.clone(),
        };
        let stalled = trivial.len() == basis.len();
        levels.push(level);
        if stalled {
            return GradingChain { levels, end: ChainEnd::Stalled };
        }
        basis = trivial;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{character_table, rep_fusion_ring};
    use crate::fixtures;
    use crate::fusion_ring::pointed_fusion_ring;
    use std::sync::Arc;

    fn rep_ring(g: crate::group::FiniteGroup) -> FusionRing {
        rep_fusion_ring(&character_table(&Arc::new(g)).unwrap())
    }

    #[test]
    fn dihedral_table_ring_is_nilpotent_of_class_two() {
        let r = rep_ring(fixtures::dihedral_group(4));
        let grading = universal_grading(&r);
        assert_eq!(grading.group.order(), 2);
        assert_eq!(grading.components[0].len(), 4);
        assert_eq!(grading.components[1], vec![4]);
        let chain = nilpotency_chain(&r);
        assert!(chain.is_nilpotent());
        assert_eq!(chain.class(), Some(2));
        // Level gradings: Z_2 over the full ring, then the pointed rank-4
        // level graded by itself.
        assert_eq!(chain.levels[0].grading_group.order(), 2);
        assert_eq!(chain.levels[1].grading_group.order(), 4);
    }

    #[test]
    fn symmetric_table_ring_stalls() {
        let r = rep_ring(fixtures::symmetric_group(3));
        let grading = universal_grading(&r);
        assert_eq!(grading.group.order(), 1);
        let chain = nilpotency_chain(&r);
        assert!(!chain.is_nilpotent());
        assert_eq!(chain.end, ChainEnd::Stalled);
        assert_eq!(chain.class(), None);
    }

    #[test]
    fn pointed_rings_grade_by_the_group_itself() {
        let r = pointed_fusion_ring(&fixtures::cyclic_group(6));
        let grading = universal_grading(&r);
        assert_eq!(grading.group.order(), 6);
        assert!(grading.components.iter().all(|c| c.len() == 1));
        let chain = nilpotency_chain(&r);
        assert_eq!(chain.class(), Some(1));
        // Nonabelian pointed rings have nonabelian grading groups.
        let r = pointed_fusion_ring(&fixtures::symmetric_group(3));
        let grading = universal_grading(&r);
        assert_eq!(grading.group.order(), 6);
        assert!(!grading.group.is_abelian());
    }

    #[test]
    fn heisenberg_chain_is_odd_throughout() {
        let r = rep_ring(fixtures::heisenberg_group_27());
        let chain = nilpotency_chain(&r);
        assert!(chain.is_nilpotent());
        assert_eq!(chain.class(), Some(2));
        for level in &chain.levels {
            assert_eq!(level.grading_group.order() % 2, 1);
        }
        assert_eq!(chain.levels[0].grading_group.order(), 3);
        assert_eq!(chain.levels[0].trivial_component.len(), 9);
    }

    #[test]
    fn alternating_table_ring_is_not_nilpotent() {
        let r = rep_ring(fixtures::alternating_group(4));
        let chain = nilpotency_chain(&r);
        assert!(!chain.is_nilpotent());
        // The whole ring is its own adjoint: the 3-dimensional character
        // multiplied by its dual hits everything.
        assert_eq!(chain.levels[0].trivial_component.len(), 4);
    }
}
