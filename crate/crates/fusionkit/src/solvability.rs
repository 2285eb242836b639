//! Solvability certificates for fusion rings.
//!
//! The verdict is one-sided: a ring is reported proven-solvable when a
//! sufficient certificate is found, and unknown otherwise, never "not
//! solvable" (the ring alone cannot refute categorical solvability).
//! Certificates are searched in a fixed order:
//!
//! (a) a cyclic-nilpotent chain: a descending sequence of component
//!     subrings, each cut out by a normal prime-index subgroup of the
//!     current level's universal grading group, ending at the unit ring;
//! (b) the ring is nilpotent with odd integral dimension (the odd-order
//!     theorem, taken as an axiom of the checker);
//! (c) the integral dimension has at most two prime factors (Burnside
//!     criterion, taken as an axiom);
//! (d) the ring was realized from a concrete solvable group by one of the
//!     library's constructors.
//!
//! Every stored witness can be revalidated from scratch.

use std::collections::HashMap;

use crate::fusion_ring::FusionRing;
use crate::grading::{nilpotency_chain, universal_grading};
use crate::group::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolvabilityStatus {
    ProvenSolvable,
    Unknown,
}

/// One descent of a cyclic-nilpotent chain: from the ring on `basis` to the
/// component subring over a normal prime-index subgroup of the grading
/// group.
#[derive(Clone, Debug)]
pub struct ChainStep {
    /// Basis of the current level, in original ring indices.
    pub basis: Vec<usize>,
    pub grading_order: usize,
    /// The chosen subgroup, as component indices of this level's grading.
    pub subgroup: Vec<Elem>,
    /// Its (prime) index in the grading group.
    pub prime: u64,
    /// Basis of the next level, in original ring indices.
    pub next_basis: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum SolvabilityReason {
    CyclicNilpotentChain { steps: Vec<ChainStep> },
    OddAndNilpotent { global_dim: u64, class: usize },
    BurnsideDimension { global_dim: u64, primes: Vec<u64> },
    GroupRealizationSolvable { description: String, order: usize },
}

impl SolvabilityReason {
    pub fn tag(&self) -> &'static str {
        match self {
            SolvabilityReason::CyclicNilpotentChain { .. } => "cyclic-nilpotent-chain",
            SolvabilityReason::OddAndNilpotent { .. } => "odd-and-nilpotent",
            SolvabilityReason::BurnsideDimension { .. } => "burnside-paqb-dimension",
            SolvabilityReason::GroupRealizationSolvable { .. } => "group-realization-solvable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolvabilityVerdict {
    pub status: SolvabilityStatus,
    pub reason: Option<SolvabilityReason>,
}

impl SolvabilityVerdict {
    pub fn is_proven(&self) -> bool {
        self.status == SolvabilityStatus::ProvenSolvable
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Candidate subgroups for a descent: normal, prime index, lexicographically
/// smallest element list first.
fn descent_candidates(group: &crate::group::FiniteGroup) -> Vec<(Vec<Elem>, u64)> {
    let order = group.order();
    let mut out: Vec<(Vec<Elem>, u64)> = group
        .all_subgroups()
        .into_iter()
        .filter_map(|h| {
            let index = order / h.len();
            (index > 1
                && distinct_prime_factors(index as u64) == vec![index as u64]
                && group.is_normal(&h))
            .then_some((h, index as u64))
        })
        .collect();
    out.sort();
    out
}

fn chain_search(
    ring: &FusionRing,
    basis: Vec<usize>,
    memo: &mut HashMap<Vec<usize>, bool>,
) -> Option<Vec<ChainStep>> {
    if basis.len() == 1 {
        return Some(Vec::new());
    }
    if let Some(false) = memo.get(&basis) {
        return None;
    }
    let restricted = ring.restrict(&basis).expect("chain bases are closed");
    let grading = universal_grading(&restricted);
    for (subgroup, prime) in descent_candidates(&grading.group) {
        let mut next: Vec<usize> = subgroup
            .iter()
            .flat_map(|&c| grading.components[c as usize].iter().map(|&i| basis[i]))
            .collect();
        next.sort_unstable();
        if let Some(tail) = chain_search(ring, next.clone(), memo) {
            let mut steps = vec![ChainStep {
                basis,
                grading_order: grading.group.order(),
                subgroup,
                prime,
                next_basis: next,
            }];
            steps.extend(tail);
            return Some(steps);
        }
    }
    memo.insert(basis, false);
    None
}

pub fn solvability_verdict(ring: &FusionRing) -> SolvabilityVerdict {
    let full: Vec<usize> = (0..ring.rank()).collect();
    let mut memo = HashMap::new();
    if let Some(steps) = chain_search(ring, full, &mut memo) {
        return SolvabilityVerdict {
            status: SolvabilityStatus::ProvenSolvable,
            reason: Some(SolvabilityReason::CyclicNilpotentChain { steps }),
        };
    }
    let fp = ring.fp_dims().ok();
    let integral = fp.as_ref().and_then(|d| d.integral.as_ref());
    if let Some(ints) = integral {
        let chain = nilpotency_chain(ring);
        if chain.is_nilpotent() && ints.total % 2 == 1 {
            return SolvabilityVerdict {
                status: SolvabilityStatus::ProvenSolvable,
                reason: Some(SolvabilityReason::OddAndNilpotent {
                    global_dim: ints.total,
                    class: chain.class().expect("nilpotent chains have a class"),
                }),
            };
        }
        let primes = distinct_prime_factors(ints.total);
        if primes.len() <= 2 {
            return SolvabilityVerdict {
                status: SolvabilityStatus::ProvenSolvable,
                reason: Some(SolvabilityReason::BurnsideDimension {
                    global_dim: ints.total,
                    primes,
                }),
            };
        }
    }
    if let Some(r) = ring.realization() {
        if r.is_solvable {
            return SolvabilityVerdict {
                status: SolvabilityStatus::ProvenSolvable,
                reason: Some(SolvabilityReason::GroupRealizationSolvable {
                    description: r.description.clone(),
                    order: r.order,
                }),
            };
        }
    }
    SolvabilityVerdict { status: SolvabilityStatus::Unknown, reason: None }
}

/// Re-derives the stored witness from the ring. A proven verdict must
/// revalidate; anything else is an engine bug.
pub fn revalidate(ring: &FusionRing, verdict: &SolvabilityVerdict) -> bool {
    let Some(reason) = &verdict.reason else {
        return verdict.status == SolvabilityStatus::Unknown;
    };
    match reason {
        SolvabilityReason::CyclicNilpotentChain { steps } => {
            let mut expected: Vec<usize> = (0..ring.rank()).collect();
            for step in steps {
                if step.basis != expected {
                    return false;
                }
                let Ok(restricted) = ring.restrict(&step.basis) else {
                    return false;
                };
                let grading = universal_grading(&restricted);
                if grading.group.order() != step.grading_order {
                    return false;
                }
                let sub = &step.subgroup;
                let index = grading.group.order() as u64 / sub.len() as u64;
                if index != step.prime
                    || distinct_prime_factors(index) != vec![index]
                    || !grading.group.is_subgroup(sub)
                    || !grading.group.is_normal(sub)
                {
                    return false;
                }
                let mut next: Vec<usize> = sub
                    .iter()
                    .flat_map(|&c| {
                        grading.components[c as usize].iter().map(|&i| step.basis[i])
                    })
                    .collect();
                next.sort_unstable();
                if next != step.next_basis {
                    return false;
                }
                expected = next;
            }
            expected.len() == 1
        }
        SolvabilityReason::OddAndNilpotent { global_dim, class } => {
            let chain = nilpotency_chain(ring);
            let Some(ints) = ring.fp_dims().ok().and_then(|d| d.integral) else {
                return false;
            };
            chain.class() == Some(*class) && ints.total == *global_dim && global_dim % 2 == 1
        }
        SolvabilityReason::BurnsideDimension { global_dim, primes } => {
            let Some(ints) = ring.fp_dims().ok().and_then(|d| d.integral) else {
                return false;
            };
            ints.total == *global_dim && &distinct_prime_factors(*global_dim) == primes
                && primes.len() <= 2
        }
        SolvabilityReason::GroupRealizationSolvable { description, order } => ring
            .realization()
            .is_some_and(|r| {
                r.is_solvable && r.description == *description && r.order == *order
            }),
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

    fn proven_with(ring: &FusionRing, tag: &str) -> SolvabilityVerdict {
        let v = solvability_verdict(ring);
        assert!(v.is_proven(), "expected a proven verdict");
        assert_eq!(v.reason.as_ref().unwrap().tag(), tag);
        assert!(revalidate(ring, &v), "witness must revalidate");
        v
    }

    #[test]
    fn dihedral_table_ring_descends_by_three_halvings() {
        let r = rep_ring(fixtures::dihedral_group(4));
        let v = proven_with(&r, "cyclic-nilpotent-chain");
        let Some(SolvabilityReason::CyclicNilpotentChain { steps }) = v.reason else {
            unreachable!()
        };
        assert_eq!(steps.len(), 3);
        assert!(steps.iter().all(|s| s.prime == 2));
        assert_eq!(steps[0].basis.len(), 5);
        assert_eq!(steps[0].next_basis.len(), 4);
        assert_eq!(steps[2].next_basis.len(), 1);
    }

    #[test]
    fn pointed_cyclic_ring_chain_is_deterministic() {
        let r = pointed_fusion_ring(&fixtures::cyclic_group(6));
        let v = proven_with(&r, "cyclic-nilpotent-chain");
        let Some(SolvabilityReason::CyclicNilpotentChain { steps }) = v.reason else {
            unreachable!()
        };
        // Lex-smallest subgroup of the order-6 grading group is {0,2,4}.
        let primes: Vec<u64> = steps.iter().map(|s| s.prime).collect();
        assert_eq!(primes, vec![2, 3]);
    }

    #[test]
    fn symmetric_table_ring_is_burnside() {
        let r = rep_ring(fixtures::symmetric_group(3));
        let v = proven_with(&r, "burnside-paqb-dimension");
        let Some(SolvabilityReason::BurnsideDimension { global_dim, primes }) = v.reason else {
            unreachable!()
        };
        assert_eq!(global_dim, 6);
        assert_eq!(primes, vec![2, 3]);
    }

    #[test]
    fn heisenberg_ring_prefers_the_chain_certificate() {
        // Both the chain and the odd-nilpotent certificate apply; the
        // search order makes the chain the recorded reason.
        let r = rep_ring(fixtures::heisenberg_group_27());
        let v = proven_with(&r, "cyclic-nilpotent-chain");
        let Some(SolvabilityReason::CyclicNilpotentChain { steps }) = v.reason else {
            unreachable!()
        };
        assert!(steps.iter().all(|s| s.prime == 3));
        assert_eq!(steps.len(), 3);
    }

    #[test]
    fn large_dihedral_ring_needs_its_realization() {
        // FPdim 30 has three prime factors, the ring is not nilpotent and
        // carries no faithful grading; only the constructor's provenance
        // proves solvability.
        let r = rep_ring(fixtures::dihedral_group(15));
        proven_with(&r, "group-realization-solvable");
    }

    #[test]
    fn simple_group_ring_stays_unknown() {
        let r = rep_ring(fixtures::alternating_group(5));
        let v = solvability_verdict(&r);
        assert_eq!(v.status, SolvabilityStatus::Unknown);
        assert!(v.reason.is_none());
        assert!(revalidate(&r, &v));
    }

    #[test]
    fn tampered_witnesses_fail_revalidation() {
        let r = rep_ring(fixtures::symmetric_group(3));
        let mut v = solvability_verdict(&r);
        if let Some(SolvabilityReason::BurnsideDimension { global_dim, .. }) = &mut v.reason {
            *global_dim = 8;
        }
        assert!(!revalidate(&r, &v));
    }
}
