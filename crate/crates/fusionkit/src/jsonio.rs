//! JSON encodings of every domain object, canonical bytes, and fingerprints.
//!
//! Canonical form: keys sorted (the default serde_json map is ordered), no
//! whitespace, one trailing LF. Fingerprints are SHA-256 over the canonical
//! bytes. Reports embed the fingerprint of their input so identical inputs
//! reproduce identical report bytes, timing aside.

use std::path::Path;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::abelian_ext::{AbelianExtension, ExtError, MatchedPair, DECOMPOSITION_CONVENTION};
use crate::chartab::CharacterTable;
use crate::fusion_ring::{FusionError, FusionRing};
use crate::group::{Elem, FiniteGroup, GroupError};
use crate::group_theoretical::GtData;
use crate::near_group::NearGroupClassification;
use crate::report::{RingAnalysis, TheoremOutcome, TheoremReport};
use crate::solvability::{SolvabilityReason, SolvabilityStatus, SolvabilityVerdict};
use std::sync::Arc;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("group: {0}")]
    Group(#[from] GroupError),
    #[error("ring: {0}")]
    Fusion(#[from] FusionError),
    #[error("matched pair: {0}")]
    Ext(#[from] ExtError),
}

impl JsonError {
    /// True for errors in the data itself (validation), as opposed to I/O.
    pub fn is_validation(&self) -> bool {
        !matches!(self, JsonError::Io(_))
    }
}

/// Sorted keys, no whitespace, one trailing LF.
pub fn canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

/// Hex SHA-256 of the canonical bytes.
pub fn fingerprint(v: &Value) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical_string(v).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn read_value(path: &Path) -> Result<Value, JsonError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_value(path: &Path, v: &Value) -> Result<(), JsonError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    std::fs::write(path, canonical_string(v))?;
    Ok(())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, JsonError> {
    v.get(key).ok_or_else(|| JsonError::Shape(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, JsonError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| JsonError::Shape(format!("{what} must be a nonnegative integer")))
}

fn as_index_rows(v: &Value, what: &str) -> Result<Vec<Vec<Elem>>, JsonError> {
    let rows = v
        .as_array()
        .ok_or_else(|| JsonError::Shape(format!("{what} must be an array of rows")))?;
    rows.iter()
        .map(|row| {
            let row = row
                .as_array()
                .ok_or_else(|| JsonError::Shape(format!("{what} rows must be arrays")))?;
            row.iter()
                .map(|x| {
                    let n = as_usize(x, what)?;
                    if n > u16::MAX as usize {
                        return Err(JsonError::Shape(format!("{what} index {n} too large")));
                    }
                    Ok(n as Elem)
                })
                .collect()
        })
        .collect()
}

pub fn group_to_json(g: &FiniteGroup) -> Value {
    let mut m = Map::new();
    m.insert("order".into(), json!(g.order()));
    m.insert("table".into(), json!(g.table_rows()));
    if let Some(name) = g.name() {
        m.insert("name".into(), json!(name));
    }
    Value::Object(m)
}

pub fn group_from_json(v: &Value) -> Result<FiniteGroup, JsonError> {
    let order = as_usize(field(v, "order")?, "order")?;
    let rows = as_index_rows(field(v, "table")?, "table")?;
    if rows.len() != order {
        return Err(JsonError::Shape(format!(
            "table has {} rows for order {order}",
            rows.len()
        )));
    }
    let g = FiniteGroup::from_rows(&rows)?;
    Ok(match v.get("name").and_then(|n| n.as_str()) {
        Some(name) => g.with_name(name),
        None => g,
    })
}

pub fn ring_to_json(r: &FusionRing) -> Value {
    let k = r.rank();
    let n: Vec<Vec<Vec<u32>>> = (0..k)
        .map(|x| (0..k).map(|y| (0..k).map(|z| r.n(x, y, z)).collect()).collect())
        .collect();
    let mut m = Map::new();
    m.insert("rank".into(), json!(k));
    m.insert("labels".into(), json!(r.labels()));
    m.insert("unit".into(), json!(r.unit()));
    m.insert("dual".into(), json!((0..k).map(|x| r.dual(x)).collect::<Vec<_>>()));
    m.insert("N".into(), json!(n));
    Value::Object(m)
}

pub fn ring_from_json(v: &Value) -> Result<FusionRing, JsonError> {
    let rank = as_usize(field(v, "rank")?, "rank")?;
    let labels: Vec<String> = field(v, "labels")?
        .as_array()
        .ok_or_else(|| JsonError::Shape("labels must be an array".into()))?
        .iter()
        .map(|l| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| JsonError::Shape("labels must be strings".into()))
        })
        .collect::<Result<_, _>>()?;
    if labels.len() != rank {
        return Err(JsonError::Shape(format!("{} labels for rank {rank}", labels.len())));
    }
    let unit = as_usize(field(v, "unit")?, "unit")?;
    let dual: Vec<usize> = field(v, "dual")?
        .as_array()
        .ok_or_else(|| JsonError::Shape("dual must be an array".into()))?
        .iter()
        .map(|x| as_usize(x, "dual entry"))
        .collect::<Result<_, _>>()?;
    let n = field(v, "N")?
        .as_array()
        .ok_or_else(|| JsonError::Shape("N must be an array".into()))?;
    let mut tensor = Vec::with_capacity(rank * rank * rank);
    if n.len() != rank {
        return Err(JsonError::Shape(format!("N has {} planes for rank {rank}", n.len())));
    }
    for plane in n {
        let plane = plane
            .as_array()
            .ok_or_else(|| JsonError::Shape("N planes must be arrays".into()))?;
        if plane.len() != rank {
            return Err(JsonError::Shape("N plane has the wrong row count".into()));
        }
        for row in plane {
            let row = row
                .as_array()
                .ok_or_else(|| JsonError::Shape("N rows must be arrays".into()))?;
            if row.len() != rank {
                return Err(JsonError::Shape("N row has the wrong length".into()));
            }
            for cell in row {
                let c = cell
                    .as_u64()
                    .ok_or_else(|| JsonError::Shape("N entries must be nonnegative".into()))?;
                if c > u32::MAX as u64 {
                    return Err(JsonError::Shape(format!("N entry {c} too large")));
                }
                tensor.push(c as u32);
            }
        }
    }
    Ok(FusionRing::new(labels, unit, dual, tensor)?)
}

pub fn chartab_to_json(ct: &CharacterTable) -> Value {
    let classes: Vec<Value> = ct
        .classes
        .iter()
        .map(|c| json!({"representative": c.representative, "size": c.elements.len()}))
        .collect();
    let values: Vec<Vec<Vec<i64>>> = ct
        .values
        .iter()
        .map(|row| row.iter().map(|v| v.reduced()).collect())
        .collect();
    json!({
        "group_order": ct.group.order(),
        "cyclotomic_order": ct.exponent,
        "classes": classes,
        "degrees": ct.degrees,
        "values": values,
    })
}

pub fn pair_to_json(p: &MatchedPair) -> Value {
    json!({
        "F": group_to_json(p.f()),
        "Gamma": group_to_json(p.gamma()),
        "act_on_f": p.act_on_f_rows(),
        "act_on_gamma": p.act_on_gamma_rows(),
        "decomposition": DECOMPOSITION_CONVENTION,
    })
}

pub fn pair_from_json(v: &Value) -> Result<MatchedPair, JsonError> {
    let f = group_from_json(field(v, "F")?)?;
    let gamma = group_from_json(field(v, "Gamma")?)?;
    let act_on_f = as_index_rows(field(v, "act_on_f")?, "act_on_f")?;
    let act_on_gamma = as_index_rows(field(v, "act_on_gamma")?, "act_on_gamma")?;
    Ok(MatchedPair::new(Arc::new(f), Arc::new(gamma), act_on_f, act_on_gamma)?)
}

/// Full report on an extension: structure, grouplikes, verdicts, degrees.
pub fn extension_report_to_json(ext: &AbelianExtension) -> Value {
    let pair = ext.pair();
    let (gh, ghd) = ext.grouplike_counts();
    let centrality = ext.centrality();
    let nilp = ext.nilpotency();
    let solv = ext.solvability();
    let irr = ext.irreps().expect("stabilizers stay within the order cap");
    let orbits: Vec<Value> = {
        let mut seen = std::collections::BTreeSet::new();
        irr.simples
            .iter()
            .filter(|s| seen.insert(s.orbit_rep))
            .map(|s| {
                json!({
                    "rep": s.orbit_rep,
                    "size": s.orbit_size,
                    "stabilizer_order": pair.f().order() / s.orbit_size,
                })
            })
            .collect()
    };
    json!({
        "dimension": ext.dimension(),
        "decomposition": DECOMPOSITION_CONVENTION,
        "trivial_cocycles": ext.has_trivial_cocycles(),
        "F_order": pair.f().order(),
        "Gamma_order": pair.gamma().order(),
        "grouplikes": {"extension": gh, "dual": ghd},
        "central": centrality.central,
        "cocentral": centrality.cocentral,
        "nilpotent": nilp.nilpotent,
        "solvable": solv.solvable,
        "type": irr.type_tuple,
        "orbits": orbits,
    })
}

pub fn gt_to_json(data: &GtData) -> Value {
    let cosets: Vec<Value> = data
        .double_cosets
        .iter()
        .map(|c| {
            json!({
                "rep": c.rep,
                "size": c.elements.len(),
                "stabilizer_order": c.stabilizer.len(),
            })
        })
        .collect();
    let simples: Vec<Value> = data
        .simples
        .iter()
        .map(|s| {
            json!({
                "coset": s.coset,
                "stabilizer_degree": s.stabilizer_degree,
                "degree": s.degree,
            })
        })
        .collect();
    json!({
        "G": group_to_json(&data.group),
        "F": data.f_elements,
        "trivial_cocycles": data.trivial_cocycles,
        "fpdim": data.fpdim,
        "type": data.type_tuple,
        "cd": data.cd_set(),
        "invertibles": data.invertibles,
        "invertibles_predicted": data.invertibles_predicted,
        "cosets": cosets,
        "simples": simples,
    })
}

pub fn neargroup_class_to_json(c: &NearGroupClassification) -> Value {
    json!({
        "group_order": c.group_order,
        "kappa": c.kappa,
        "fpdim_m": c.fpdim_m,
        "m_integral": c.m_integral,
        "m_dim": c.m_dim,
        "tambara_yamagami": c.tambara_yamagami,
        "order_class": format!("{:?}", c.order_class),
        "order_constraint_met": c.order_constraint_met,
        "kappa_identity": c.kappa_identity,
        "mersenne": c.mersenne,
    })
}

pub fn theorem_report_to_json(r: &TheoremReport) -> Value {
    let clauses: Vec<Value> = r
        .clauses
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
        .collect();
    let mut m = Map::new();
    m.insert("theorem".into(), json!(r.theorem));
    m.insert("statement".into(), json!(r.statement));
    let outcome = match &r.outcome {
        TheoremOutcome::Pass => "pass",
        TheoremOutcome::Fail => "fail",
        TheoremOutcome::Skipped { reason } => {
            m.insert("skip_reason".into(), json!(reason));
            "skipped"
        }
    };
    m.insert("outcome".into(), json!(outcome));
    m.insert("clauses".into(), Value::Array(clauses));
    Value::Object(m)
}

fn solvability_to_json(v: &SolvabilityVerdict, revalidated: bool) -> Value {
    let status = match v.status {
        SolvabilityStatus::ProvenSolvable => "proven",
        SolvabilityStatus::Unknown => "unknown",
    };
    let (reason, witness) = match &v.reason {
        None => (Value::Null, Value::Null),
        Some(r) => {
            let witness = match r {
                SolvabilityReason::CyclicNilpotentChain { steps } => {
                    let steps: Vec<Value> = steps
                        .iter()
                        .map(|s| {
                            json!({
                                "rank": s.basis.len(),
                                "grading_order": s.grading_order,
                                "subgroup_components": s.subgroup,
                                "prime": s.prime,
                                "next_rank": s.next_basis.len(),
                            })
                        })
                        .collect();
                    json!({"steps": steps})
                }
                SolvabilityReason::OddAndNilpotent { global_dim, class } => {
                    json!({"global_dim": global_dim, "class": class})
                }
                SolvabilityReason::BurnsideDimension { global_dim, primes } => {
                    json!({"global_dim": global_dim, "primes": primes})
                }
                SolvabilityReason::GroupRealizationSolvable { description, order } => {
                    json!({"description": description, "order": order})
                }
            };
            (json!(r.tag()), witness)
        }
    };
    json!({
        "status": status,
        "reason": reason,
        "witness": witness,
        "revalidated": revalidated,
    })
}

/// The analyze-ring report. `timing_ms` is the only part that varies between
/// runs on identical input.
pub fn analysis_to_json(
    a: &RingAnalysis,
    input_fingerprint: &str,
    timing_ms: &[(&str, f64)],
) -> Value {
    let cd: Value = match &a.fp.integral {
        Some(int) => json!(int.degree_set),
        None => json!(a.cd),
    };
    let chain_orders: Vec<usize> =
        a.chain.levels.iter().map(|l| l.grading_group.order()).collect();
    let timing: Map<String, Value> =
        timing_ms.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "input_fingerprint": input_fingerprint,
        "rank": a.rank,
        "fp": {
            "dims": a.fp.dims,
            "global_dim": a.fp.global_dim,
            "residual": a.fp.residual,
            "integral": a.fp.is_integral(),
            "integral_dims": a.fp.integral.as_ref().map(|i| i.dims.clone()),
            "fpdim": a.fp.integral.as_ref().map(|i| i.total),
        },
        "cd": cd,
        "type": a.algebra_type,
        "invertibles": {"count": a.invertible_count, "abelian": a.invertibles_abelian},
        "U": {
            "order": a.grading_group_order,
            "abelian": a.grading_group_abelian,
            "component_sizes": a.component_sizes,
        },
        "nilpotent": a.chain.is_nilpotent(),
        "class": a.chain.class(),
        "chain_grading_orders": chain_orders,
        "solvability": solvability_to_json(&a.solvability, a.solvability_revalidated),
        "checks": {
            "stabilizer_decomposition": a.stabilizer_check,
            "one_d": a.one_d.as_ref().map(|o| {
                json!({
                    "d": o.d,
                    "invertible_count": o.invertible_count,
                    "divides_invertibles": o.divides_invertibles,
                    "divides_stabilizers": o.divides_stabilizers,
                })
            }),
        },
        "realization": a.realization,
        "timing_ms": timing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::fusion_ring::pointed_fusion_ring;

    #[test]
    fn groups_round_trip() {
        let g = fixtures::dihedral_group(4);
        let v = group_to_json(&g);
        let back = group_from_json(&v).unwrap();
        assert!(back == g);
        assert_eq!(back.name(), Some("D4"));
    }

    #[test]
    fn rings_round_trip_and_fingerprints_are_stable() {
        let ring = pointed_fusion_ring(&fixtures::cyclic_group(5));
        let v = ring_to_json(&ring);
        let back = ring_from_json(&v).unwrap();
        assert_eq!(back.rank(), 5);
        assert_eq!(fingerprint(&v), fingerprint(&ring_to_json(&back)));
        // Canonical form: sorted keys, no spaces, one trailing newline.
        let s = canonical_string(&v);
        assert!(s.ends_with('\n') && !s.trim_end().contains('\n'));
        assert!(!s.contains(": "));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn malformed_ring_json_is_a_validation_error() {
        let v = json!({"rank": 2, "labels": ["1","x"], "unit": 0, "dual": [0, 1], "N": []});
        let err = ring_from_json(&v).unwrap_err();
        assert!(err.is_validation());
    }

    #[test]
    fn pairs_round_trip() {
        use crate::group::Subgroup;
        use std::sync::Arc;
        let g = Arc::new(fixtures::symmetric_group(3));
        let r = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let z3 = Subgroup::new(Arc::clone(&g), g.subgroup_generated(&[r])).unwrap();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let z2 = Subgroup::new(Arc::clone(&g), g.subgroup_generated(&[t])).unwrap();
        let pair = MatchedPair::from_exact_factorization(&g, &z3, &z2).unwrap();
        let v = pair_to_json(&pair);
        let back = pair_from_json(&v).unwrap();
        assert!(back.bicrossed().as_ref() == pair.bicrossed().as_ref());
    }
}
