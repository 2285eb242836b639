//! Report data: theorem verification outcomes and full ring analyses.
//!
//! A `TheoremReport` is a clause table: each verified statement is broken
//! into named clauses with individual pass flags. The outcome is `Skipped`
//! only when an instance does not satisfy a statement's hypothesis; a failed
//! clause on a satisfied hypothesis is a `Fail`, never silently dropped.

use crate::fusion_ring::{FpData, FusionRing, OneDReport};
use crate::grading::{nilpotency_chain, universal_grading, GradingChain};
use crate::solvability::{revalidate, solvability_verdict, SolvabilityVerdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremOutcome {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Clone, Debug)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Clause {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Clause { name: name.to_string(), pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    /// Stable identifier, e.g. "fnilp" or "solv-neargp".
    pub theorem: &'static str,
    /// What was checked, in words, for the report header.
    pub statement: String,
    pub outcome: TheoremOutcome,
    pub clauses: Vec<Clause>,
}

impl TheoremReport {
    pub fn from_clauses(
        theorem: &'static str,
        statement: impl Into<String>,
        clauses: Vec<Clause>,
    ) -> Self {
        let outcome = if clauses.iter().all(|c| c.pass) {
            TheoremOutcome::Pass
        } else {
            TheoremOutcome::Fail
        };
        TheoremReport { theorem, statement: statement.into(), outcome, clauses }
    }

    pub fn skipped(
        theorem: &'static str,
        statement: impl Into<String>,
        reason: impl Into<String>,
    ) -> Self {
        TheoremReport {
            theorem,
            statement: statement.into(),
            outcome: TheoremOutcome::Skipped { reason: reason.into() },
            clauses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == TheoremOutcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == TheoremOutcome::Fail
    }
}

/// Everything the analyzer derives from one fusion ring.
pub struct RingAnalysis {
    pub rank: usize,
    pub fp: FpData,
    /// Distinct dimensions, ascending (floats; exact integers when integral).
    pub cd: Vec<f64>,
    /// (dimension, multiplicity) pairs for integral rings.
    pub algebra_type: Option<Vec<(u64, usize)>>,
    pub invertible_count: usize,
    pub invertibles_abelian: bool,
    pub grading_group_order: usize,
    pub grading_group_abelian: bool,
    pub component_sizes: Vec<usize>,
    pub chain: GradingChain,
    pub solvability: SolvabilityVerdict,
    pub solvability_revalidated: bool,
    /// The x x* invertible-multiplicity law, checked on every basis element.
    pub stabilizer_check: bool,
    /// Divisibility facts when the degree set is exactly {1, d}.
    pub one_d: Option<OneDReport>,
    pub realization: Option<String>,
}

/// Odd-dimension solvability at the ring level: a nilpotent fusion ring of
/// odd integer dimension has odd grading groups all the way down the adjoint
/// chain and a proven-solvable verdict.
pub fn verify_odd_wgt(ring: &FusionRing) -> TheoremReport {
    let statement = "a nilpotent fusion ring of odd integral dimension is solvable, \
                     through a chain of odd grading groups";
    let fp = ring.fp_dims().expect("validated rings have FP data");
    let total = match &fp.integral {
        Some(int) => int.total,
        None => return TheoremReport::skipped("odd-wgt", statement, "dimension is not integral"),
    };
    if total % 2 == 0 {
        return TheoremReport::skipped(
            "odd-wgt",
            statement,
            format!("dimension {total} is even"),
        );
    }
    let chain = nilpotency_chain(ring);
    if !chain.is_nilpotent() {
        return TheoremReport::skipped("odd-wgt", statement, "the ring is not nilpotent");
    }
    let orders: Vec<usize> = chain.levels.iter().map(|l| l.grading_group.order()).collect();
    let all_odd = orders.iter().all(|o| o % 2 == 1);
    let verdict = solvability_verdict(ring);
    let solvable = verdict.is_proven() && revalidate(ring, &verdict);
    TheoremReport::from_clauses(
        "odd-wgt",
        statement,
        vec![
            Clause::new(
                "odd-grading-chain",
                all_odd,
                format!("grading group orders down the chain: {orders:?}"),
            ),
            Clause::new(
                "solvable",
                solvable,
                match &verdict.reason {
                    Some(r) => format!("certificate: {}", r.tag()),
                    None => "no certificate found".to_string(),
                },
            ),
        ],
    )
}

/// The representation ring of a finite group is nilpotent exactly when the
/// group is nilpotent.
pub fn verify_kg_nilpotent_iff(
    group: &std::sync::Arc<crate::group::FiniteGroup>,
    cap: usize,
    seed: u64,
) -> Result<TheoremReport, crate::chartab::ChartabError> {
    let statement = "the representation ring is nilpotent exactly when the group is";
    let ct = crate::chartab::character_table_with(group, cap, seed)?;
    let ring = crate::chartab::rep_fusion_ring(&ct);
    let chain = nilpotency_chain(&ring);
    let series = crate::group::structural_series(group);
    let ring_nilp = chain.is_nilpotent();
    Ok(TheoremReport::from_clauses(
        "kg-nilpotent-iff",
        statement,
        vec![Clause::new(
            "ring-nilpotent-iff-group-nilpotent",
            ring_nilp == series.is_nilpotent,
            format!(
                "ring nilpotent: {ring_nilp} (class {:?}); group nilpotent: {} (class {:?})",
                chain.class(),
                series.is_nilpotent,
                series.nilpotency_class
            ),
        )],
    ))
}

pub fn analyze_ring(ring: &FusionRing) -> RingAnalysis {
    let fp = ring.fp_dims().expect("validated rings have FP data");
    let cd = ring.cd_set().expect("validated rings have a degree set");
    let algebra_type = ring.algebra_type().ok();
    let invertibles = ring.invertibles();
    let (inv_group, _) = ring.invertibles_group();
    let grading = universal_grading(ring);
    let chain = nilpotency_chain(ring);
    let solvability = solvability_verdict(ring);
    let solvability_revalidated = revalidate(ring, &solvability);
    RingAnalysis {
        rank: ring.rank(),
        fp,
        cd,
        algebra_type,
        invertible_count: invertibles.len(),
        invertibles_abelian: inv_group.is_abelian(),
        grading_group_order: grading.group.order(),
        grading_group_abelian: grading.group.is_abelian(),
        component_sizes: grading.components.iter().map(|c| c.len()).collect(),
        chain,
        solvability,
        solvability_revalidated,
        stabilizer_check: ring.stabilizer_decomposition_check(),
        one_d: ring.one_d_divisibility(),
        realization: ring.realization().map(|r| r.description.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{character_table, rep_fusion_ring};
    use crate::fixtures;
    use std::sync::Arc;

    #[test]
    fn analysis_of_the_symmetric_table_ring() {
        let ct = character_table(&Arc::new(fixtures::symmetric_group(3))).unwrap();
        let a = analyze_ring(&rep_fusion_ring(&ct));
        assert_eq!(a.rank, 3);
        assert_eq!(a.cd, vec![1.0, 2.0]);
        assert_eq!(a.algebra_type, Some(vec![(1, 2), (2, 1)]));
        assert_eq!(a.invertible_count, 2);
        assert!(!a.chain.is_nilpotent());
        assert!(a.solvability.is_proven());
        assert!(a.solvability_revalidated);
        assert!(a.stabilizer_check);
        let one_d = a.one_d.unwrap();
        assert_eq!(one_d.d, 2);
        assert!(one_d.divides_invertibles && one_d.divides_stabilizers);
    }

    #[test]
    fn odd_dimension_statement_on_small_rings() {
        let s3 = character_table(&Arc::new(fixtures::symmetric_group(3))).unwrap();
        let skip = verify_odd_wgt(&rep_fusion_ring(&s3));
        assert!(matches!(skip.outcome, TheoremOutcome::Skipped { ref reason } if reason.contains("even")));

        let heis = character_table(&Arc::new(fixtures::heisenberg_group_27())).unwrap();
        let pass = verify_odd_wgt(&rep_fusion_ring(&heis));
        assert!(pass.passed(), "{:?}", pass.clauses);
    }

    #[test]
    fn representation_ring_nilpotency_tracks_the_group() {
        for name in ["D4", "S3", "Z6", "A4"] {
            let g = Arc::new(fixtures::group_by_name(name).unwrap());
            let report = verify_kg_nilpotent_iff(&g, 512, 0).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.clauses);
        }
    }

    #[test]
    fn clause_tables_fold_into_outcomes() {
        let pass = TheoremReport::from_clauses(
            "demo",
            "demo statement",
            vec![Clause::new("a", true, ""), Clause::new("b", true, "")],
        );
        assert!(pass.passed());
        let fail = TheoremReport::from_clauses(
            "demo",
            "demo statement",
            vec![Clause::new("a", true, ""), Clause::new("b", false, "broken")],
        );
        assert!(fail.failed());
        let skip = TheoremReport::skipped("demo", "demo statement", "hypothesis not met");
        assert!(!skip.passed() && !skip.failed());
    }
}
