//! Command-line front end: analyze-ring, build, verify, scan.
//!
//! Exit codes: 0 for success (a skipped verification counts as success),
//! 1 for a failed verification, 2 for validation or construction failures,
//! 3 for I/O problems and unknown theorem ids.
//!
//! Group arguments accept either a path to a group JSON file or a built-in
//! name (Z12, S4, A4, D4, Q8, V4, Z2^3, Heis27, Frob21, Frob56, ...). Named
//! fixtures are generated on first use and cached under ./fixtures as
//! canonical JSON. Ring arguments likewise accept a path or a derived name:
//! rep_<group> for a representation ring, pointed_<group> for a group ring.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::abelian_ext::{AbelianExtension, MatchedPair};
use crate::chartab::{character_table_with, drinfeld_double_degrees, rep_fusion_ring};
use crate::fixtures;
use crate::fusion_ring::{pointed_fusion_ring, FusionRing};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::group_theoretical::{gt_data, verify_fnilp_gt, verify_solv_gt};
use crate::jsonio::{self, JsonError};
use crate::near_group::{build_near_group_ring, classify, verify_caso1sol, verify_solv_neargp};
use crate::report::{
    analyze_ring, verify_kg_nilpotent_iff, verify_odd_wgt, TheoremOutcome, TheoremReport,
};
use crate::solvability::is_prime;
use crate::DEFAULT_GROUP_ORDER_CAP;

pub const THEOREM_IDS: [&str; 8] = [
    "fnilp",
    "hnilp",
    "fnilp-gt",
    "solv-gt",
    "caso1sol",
    "solv-neargp",
    "odd-wgt",
    "kg-nilpotent-iff",
];

#[derive(Debug)]
pub enum CliError {
    /// Bad input data or arguments: exit 2.
    Invalid(String),
    /// Missing or unreadable files: exit 3.
    Io(String),
    /// Theorem id outside the known set: exit 3.
    UnknownTheorem(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::UnknownTheorem(id) => {
                write!(f, "unknown theorem id \"{id}\"; known ids: {}", THEOREM_IDS.join(", "))
            }
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) | CliError::UnknownTheorem(_) => 3,
        }
    }
}

impl From<JsonError> for CliError {
    fn from(e: JsonError) -> Self {
        if e.is_validation() {
            CliError::Invalid(e.to_string())
        } else {
            CliError::Io(e.to_string())
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

#[derive(Parser)]
#[command(
    name = "fusionkit",
    version,
    about = "exact computations with fusion rings, finite groups, and their extensions"
)]
pub struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for verify and scan: text (default) or json.
    #[arg(long, global = true, value_parser = ["text", "json"])]
    format: Option<String>,
    /// Group-order cap for table-building work (env FUSIONKIT_CAP, default 512).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Seed for the randomized splitting choices inside character tables.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a fusion ring and report degrees, grading, nilpotency, and solvability.
    AnalyzeRing {
        /// Ring JSON path, or a built-in name such as rep_S3 or pointed_Z5.
        ring: String,
    },
    /// Construct an object and emit its JSON.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Check one named statement against one instance.
    Verify {
        /// One of: fnilp, hnilp, fnilp-gt, solv-gt, caso1sol, solv-neargp, odd-wgt, kg-nilpotent-iff.
        theorem: String,
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Run one named statement over a corpus of instances.
    Scan {
        /// Directory of group/ring/pair JSON files, or "builtin" for the named groups of order at most 60.
        corpus: String,
        theorem: String,
    },
}

#[derive(Subcommand)]
enum BuildKind {
    /// Representation ring of a finite group, from its character table.
    Rep {
        /// Group JSON path or built-in name.
        #[arg(long)]
        group: String,
    },
    /// Double cosets, degrees, and invertibles of the bimodule data C(G, F).
    Gt {
        #[arg(long = "G")]
        g: String,
        /// Subgroup selector: Z<n>, order:<n>, or indices:a,b,c.
        #[arg(long = "F")]
        f: String,
    },
    /// Abelian extension report from a matched pair or an exact factorization.
    Extension {
        /// Matched-pair JSON path.
        #[arg(long, conflicts_with = "g")]
        pair: Option<String>,
        /// Group to factor exactly as F * Gamma.
        #[arg(long = "G", requires = "f", requires = "gamma")]
        g: Option<String>,
        /// Subgroup selector for the F part.
        #[arg(long = "F")]
        f: Option<String>,
        /// Subgroup selector for the Gamma part.
        #[arg(long = "Gamma")]
        gamma: Option<String>,
    },
    /// Near-group ring over G with multiplicity kappa.
    NearGroup {
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        kappa: u32,
        /// Emit the classification report instead of the ring.
        #[arg(long)]
        classify: bool,
    },
    /// Irreducible degrees of the double of a finite group.
    Double {
        #[arg(long)]
        group: String,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Group JSON path or built-in name.
    #[arg(long = "G")]
    g: Option<String>,
    /// Subgroup selector (Z<n>, order:<n>, indices:a,b,c).
    #[arg(long = "F")]
    f: Option<String>,
    /// Subgroup selector for the Gamma part of a factorization.
    #[arg(long = "Gamma")]
    gamma: Option<String>,
    /// Matched-pair JSON path.
    #[arg(long)]
    pair: Option<String>,
    /// Ring JSON path or built-in ring name.
    #[arg(long)]
    ring: Option<String>,
    /// Group reference for group-level statements (alias of --G).
    #[arg(long)]
    group: Option<String>,
    /// Prime for the realization statement.
    #[arg(long)]
    p: Option<u64>,
    /// Near-group multiplicity.
    #[arg(long)]
    kappa: Option<u32>,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let cap = effective_cap(cli.common.cap);
    let seed = cli.common.seed;
    match cli.command {
        Command::AnalyzeRing { ring } => {
            let t0 = Instant::now();
            let (ring, value) = resolve_ring(&ring, cap, seed)?;
            let parse_ms = t0.elapsed().as_secs_f64() * 1e3;
            let fp = jsonio::fingerprint(&value);
            let t1 = Instant::now();
            let analysis = analyze_ring(&ring);
            let analyze_ms = t1.elapsed().as_secs_f64() * 1e3;
            let report = jsonio::analysis_to_json(
                &analysis,
                &fp,
                &[("parse", parse_ms), ("analyze", analyze_ms)],
            );
            write_output(&cli.common, Rendered::Json(report))?;
            Ok(0)
        }
        Command::Build { kind } => {
            let out = run_build(kind, cap, seed)?;
            write_output(&cli.common, Rendered::Json(out))?;
            Ok(0)
        }
        Command::Verify { theorem, instance } => {
            let report = run_verify(&theorem, &instance, cap, seed)?;
            let rendered = if cli.common.format.as_deref() == Some("json") {
                Rendered::Json(jsonio::theorem_report_to_json(&report))
            } else {
                Rendered::Text(render_report_text(&report))
            };
            write_output(&cli.common, rendered)?;
            Ok(if report.failed() { 1 } else { 0 })
        }
        Command::Scan { corpus, theorem } => {
            if !THEOREM_IDS.contains(&theorem.as_str()) {
                return Err(CliError::UnknownTheorem(theorem));
            }
            let items = run_scan(&corpus, &theorem, cap, seed)?;
            let fail = items.iter().filter(|i| i.report.failed()).count();
            let rendered = if cli.common.format.as_deref() == Some("json") {
                Rendered::Json(scan_to_json(&theorem, &items))
            } else {
                Rendered::Text(render_scan_text(&theorem, &items))
            };
            write_output(&cli.common, rendered)?;
            Ok(if fail > 0 { 1 } else { 0 })
        }
    }
}

fn effective_cap(flag: Option<usize>) -> usize {
    if let Some(c) = flag {
        return c;
    }
    if let Ok(s) = std::env::var("FUSIONKIT_CAP") {
        if let Ok(c) = s.parse::<usize>() {
            return c;
        }
    }
    DEFAULT_GROUP_ORDER_CAP
}

enum Rendered {
    Json(Value),
    Text(String),
}

fn write_output(common: &Common, rendered: Rendered) -> Result<(), CliError> {
    let text = match rendered {
        Rendered::Json(v) => jsonio::canonical_string(&v),
        Rendered::Text(t) => t,
    };
    match &common.out {
        Some(path) => {
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(e.to_string()))?;
                }
            }
            std::fs::write(path, text).map_err(|e| CliError::Io(e.to_string()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Best-effort cache of named fixtures under ./fixtures, canonical bytes.
fn cache_fixture(name: &str, v: &Value) {
    let path = Path::new("fixtures").join(format!("{name}.json"));
    if path.exists() {
        return;
    }
    let _ = std::fs::create_dir_all("fixtures");
    let _ = std::fs::write(&path, jsonio::canonical_string(v));
}

pub fn resolve_group(arg: &str, cap: usize) -> Result<Arc<FiniteGroup>, CliError> {
    let path = Path::new(arg);
    let g = if path.is_file() {
        jsonio::group_from_json(&jsonio::read_value(path)?)?
    } else if let Some(g) = fixtures::group_by_name(arg) {
        cache_fixture(arg, &jsonio::group_to_json(&g));
        g
    } else {
        return Err(CliError::Io(format!("\"{arg}\" is neither a file nor a built-in group")));
    };
    if g.order() > cap {
        return Err(invalid(format!("group order {} is above the cap {cap}", g.order())));
    }
    Ok(Arc::new(g))
}

pub fn resolve_ring(arg: &str, cap: usize, seed: u64) -> Result<(FusionRing, Value), CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let value = jsonio::read_value(path)?;
        let ring = jsonio::ring_from_json(&value)?;
        return Ok((ring, value));
    }
    let ring = if let Some(name) = arg.strip_prefix("rep_") {
        let g = resolve_group(name, cap)?;
        let ct = character_table_with(&g, cap, seed).map_err(invalid)?;
        rep_fusion_ring(&ct)
    } else if let Some(name) = arg.strip_prefix("pointed_") {
        let g = resolve_group(name, cap)?;
        pointed_fusion_ring(&g)
    } else {
        return Err(CliError::Io(format!(
            "\"{arg}\" is neither a file nor a built-in ring (rep_<group>, pointed_<group>)"
        )));
    };
    let value = jsonio::ring_to_json(&ring);
    cache_fixture(arg, &value);
    Ok((ring, value))
}

/// Subgroup selectors: "Z<n>" for the first cyclic subgroup of order n,
/// "order:<n>" for the first subgroup of that order, "indices:a,b,c" for an
/// explicit element list (which must already be closed).
pub fn resolve_subgroup(g: &Arc<FiniteGroup>, sel: &str) -> Result<Subgroup, CliError> {
    if let Some(list) = sel.strip_prefix("indices:") {
        let elems: Vec<Elem> = list
            .split(',')
            .map(|s| s.trim().parse::<Elem>())
            .collect::<Result<_, _>>()
            .map_err(|_| invalid(format!("bad element list \"{list}\"")))?;
        return Subgroup::new(Arc::clone(g), elems).map_err(invalid);
    }
    if let Some(n) = sel.strip_prefix("order:").and_then(|s| s.parse::<usize>().ok()) {
        let candidate = g
            .all_subgroups()
            .into_iter()
            .find(|s| s.len() == n)
            .ok_or_else(|| invalid(format!("no subgroup of order {n}")))?;
        return Subgroup::new(Arc::clone(g), candidate).map_err(invalid);
    }
    if let Some(n) = sel.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
        let gen = g
            .elements()
            .find(|&x| g.element_order(x) == n)
            .ok_or_else(|| invalid(format!("no element of order {n}")))?;
        return Subgroup::new(Arc::clone(g), g.subgroup_generated(&[gen])).map_err(invalid);
    }
    Err(invalid(format!(
        "unrecognized subgroup selector \"{sel}\" (use Z<n>, order:<n>, or indices:a,b,c)"
    )))
}

fn extension_from_args(inst: &InstanceArgs, cap: usize) -> Result<AbelianExtension, CliError> {
    if let Some(path) = &inst.pair {
        let pair = jsonio::pair_from_json(&jsonio::read_value(Path::new(path))?)?;
        return Ok(AbelianExtension::new(pair));
    }
    let (g, f, gamma) = match (&inst.g, &inst.f, &inst.gamma) {
        (Some(g), Some(f), Some(gamma)) => (g, f, gamma),
        _ => {
            return Err(invalid(
                "matched-pair statements need --pair <file> or --G <group> --F <sel> --Gamma <sel>",
            ))
        }
    };
    let g = resolve_group(g, cap)?;
    let f = resolve_subgroup(&g, f)?;
    let gamma = resolve_subgroup(&g, gamma)?;
    let pair = MatchedPair::from_exact_factorization(&g, &f, &gamma).map_err(invalid)?;
    Ok(AbelianExtension::new(pair))
}

fn run_build(kind: BuildKind, cap: usize, seed: u64) -> Result<Value, CliError> {
    match kind {
        BuildKind::Rep { group } => {
            let g = resolve_group(&group, cap)?;
            let ct = character_table_with(&g, cap, seed).map_err(invalid)?;
            Ok(jsonio::ring_to_json(&rep_fusion_ring(&ct)))
        }
        BuildKind::Gt { g, f } => {
            let g = resolve_group(&g, cap)?;
            let f = resolve_subgroup(&g, &f)?;
            let data = gt_data(&g, &f).map_err(invalid)?;
            Ok(jsonio::gt_to_json(&data))
        }
        BuildKind::Extension { pair, g, f, gamma } => {
            let inst = InstanceArgs {
                g,
                f,
                gamma,
                pair,
                ring: None,
                group: None,
                p: None,
                kappa: None,
            };
            let ext = extension_from_args(&inst, cap)?;
            Ok(json!({
                "pair": jsonio::pair_to_json(ext.pair()),
                "extension": jsonio::extension_report_to_json(&ext),
            }))
        }
        BuildKind::NearGroup { g, kappa, classify: want_class } => {
            let g = resolve_group(&g, cap)?;
            let ring = build_near_group_ring(&g, kappa).map_err(invalid)?;
            if want_class {
                Ok(jsonio::neargroup_class_to_json(&classify(&g, kappa)))
            } else {
                Ok(jsonio::ring_to_json(&ring))
            }
        }
        BuildKind::Double { group } => {
            let g = resolve_group(&group, cap)?;
            let degrees = drinfeld_double_degrees(&g, cap).map_err(invalid)?;
            let total: u128 = degrees.iter().map(|&d| (d as u128) * (d as u128)).sum();
            Ok(json!({
                "group_order": g.order(),
                "rank": degrees.len(),
                "degrees": degrees,
                "sum_of_squares": total,
            }))
        }
    }
}

fn run_verify(
    theorem: &str,
    inst: &InstanceArgs,
    cap: usize,
    seed: u64,
) -> Result<TheoremReport, CliError> {
    match theorem {
        "fnilp" | "hnilp" => {
            let ext = extension_from_args(inst, cap)?;
            let report = if theorem == "fnilp" { ext.verify_fnilp() } else { ext.verify_hnilp() };
            report.map_err(invalid)
        }
        "fnilp-gt" | "solv-gt" => {
            let gref = inst
                .g
                .as_deref()
                .or(inst.group.as_deref())
                .ok_or_else(|| invalid("this statement needs --G <group> --F <selector>"))?;
            let fsel =
                inst.f.as_deref().ok_or_else(|| invalid("this statement needs --F <selector>"))?;
            let g = resolve_group(gref, cap)?;
            let f = resolve_subgroup(&g, fsel)?;
            let verify = if theorem == "fnilp-gt" { verify_fnilp_gt } else { verify_solv_gt };
            verify(&g, &f).map_err(invalid)
        }
        "caso1sol" => {
            let p = inst.p.ok_or_else(|| invalid("this statement needs --p <prime>"))?;
            verify_caso1sol(p, cap, seed).map_err(invalid)
        }
        "solv-neargp" => {
            let gref = inst
                .g
                .as_deref()
                .or(inst.group.as_deref())
                .ok_or_else(|| invalid("this statement needs --G <group> --kappa <k>"))?;
            let kappa =
                inst.kappa.ok_or_else(|| invalid("this statement needs --kappa <k>"))?;
            let g = resolve_group(gref, cap)?;
            verify_solv_neargp(&g, kappa).map_err(invalid)
        }
        "odd-wgt" => {
            let rref = inst
                .ring
                .as_deref()
                .ok_or_else(|| invalid("this statement needs --ring <ring>"))?;
            let (ring, _) = resolve_ring(rref, cap, seed)?;
            Ok(verify_odd_wgt(&ring))
        }
        "kg-nilpotent-iff" => {
            let gref = inst
                .group
                .as_deref()
                .or(inst.g.as_deref())
                .ok_or_else(|| invalid("this statement needs --group <group>"))?;
            let g = resolve_group(gref, cap)?;
            verify_kg_nilpotent_iff(&g, cap, seed).map_err(invalid)
        }
        other => Err(CliError::UnknownTheorem(other.to_string())),
    }
}

fn render_report_text(r: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theorem: {}", r.theorem);
    let _ = writeln!(s, "statement: {}", r.statement);
    match &r.outcome {
        TheoremOutcome::Pass => {
            let _ = writeln!(s, "outcome: pass");
        }
        TheoremOutcome::Fail => {
            let _ = writeln!(s, "outcome: fail");
        }
        TheoremOutcome::Skipped { reason } => {
            let _ = writeln!(s, "outcome: skipped ({reason})");
        }
    }
    for c in &r.clauses {
        let mark = if c.pass { "ok" } else { "FAIL" };
        let _ = writeln!(s, "  [{mark}] {}: {}", c.name, c.detail);
    }
    s
}

// ---- scan ----------------------------------------------------------------

pub struct ScanItem {
    pub name: String,
    pub report: TheoremReport,
}

enum CorpusObject {
    Group(Arc<FiniteGroup>),
    Ring(Box<FusionRing>),
    Pair(Box<MatchedPair>),
}

/// Loads a corpus: the literal "builtin" gives the named groups of order at
/// most 60, a directory gives every .json file in it (sorted by file name).
/// Files that fail to parse become skipped items rather than aborting the
/// scan, so a scan only errors on I/O.
fn load_corpus(
    corpus: &str,
    cap: usize,
) -> Result<(Vec<(String, CorpusObject)>, Vec<ScanItem>), CliError> {
    let mut objects = Vec::new();
    let mut skipped = Vec::new();
    if corpus == "builtin" {
        for g in fixtures::corpus() {
            let name = g.name().unwrap_or("unnamed").to_string();
            objects.push((name, CorpusObject::Group(Arc::new(g))));
        }
        return Ok((objects, skipped));
    }
    let dir = Path::new(corpus);
    if !dir.is_dir() {
        return Err(CliError::Io(format!("\"{corpus}\" is not a directory (or \"builtin\")")));
    }
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Io(e.to_string()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().map_or(false, |ext| ext == "json"))
        .collect();
    paths.sort();
    for path in paths {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let value = match jsonio::read_value(&path) {
            Ok(v) => v,
            Err(e) => {
                skipped.push(skip_item(&name, "unreadable", e.to_string()));
                continue;
            }
        };
        let parsed: Result<CorpusObject, JsonError> = if value.get("act_on_f").is_some() {
            jsonio::pair_from_json(&value).map(|p| CorpusObject::Pair(Box::new(p)))
        } else if value.get("N").is_some() {
            jsonio::ring_from_json(&value).map(|r| CorpusObject::Ring(Box::new(r)))
        } else if value.get("table").is_some() {
            jsonio::group_from_json(&value).map(|g| CorpusObject::Group(Arc::new(g)))
        } else {
            skipped.push(skip_item(&name, "shape", "not a group, ring, or pair JSON"));
            continue;
        };
        match parsed {
            Ok(CorpusObject::Group(g)) if g.order() > cap => {
                skipped.push(skip_item(&name, "cap", format!("order {} above cap {cap}", g.order())));
            }
            Ok(obj) => objects.push((name, obj)),
            Err(e) => skipped.push(skip_item(&name, "invalid", e.to_string())),
        }
    }
    Ok((objects, skipped))
}

fn skip_item(name: &str, kind: &str, reason: impl Into<String>) -> ScanItem {
    ScanItem {
        name: format!("{name} ({kind})"),
        report: TheoremReport::skipped("scan", "corpus item", reason),
    }
}

/// Conjugacy-class representatives of a family of subgroups, each given as a
/// sorted element list; the representative is the lexicographically smallest
/// conjugate.
fn conjugacy_reps(g: &FiniteGroup, subs: Vec<Vec<Elem>>) -> Vec<Vec<Elem>> {
    let mut seen: std::collections::BTreeSet<Vec<Elem>> = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for s in subs {
        if seen.contains(&s) {
            continue;
        }
        let mut orbit: std::collections::BTreeSet<Vec<Elem>> = std::collections::BTreeSet::new();
        for c in g.elements() {
            let mut conj: Vec<Elem> = s.iter().map(|&x| g.conj(c, x)).collect();
            conj.sort_unstable();
            orbit.insert(conj);
        }
        reps.push(orbit.iter().next().expect("orbit is nonempty").clone());
        seen.extend(orbit);
    }
    reps
}

fn prime_divisors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Exact factorizations G = F * Gamma with Gamma of prime order, one matched
/// pair per (F, Gamma) subgroup pair with trivial intersection.
fn factorization_instances(name: &str, g: &Arc<FiniteGroup>) -> Vec<(String, MatchedPair)> {
    let n = g.order();
    let mut out = Vec::new();
    if n == 1 {
        return out;
    }
    let subs = g.all_subgroups();
    for p in prime_divisors(n) {
        if n % p != 0 {
            continue;
        }
        let gammas: Vec<Vec<Elem>> =
            subs.iter().filter(|s| s.len() == p).cloned().collect();
        let fs: Vec<Vec<Elem>> = subs.iter().filter(|s| s.len() * p == n).cloned().collect();
        for (i, fel) in fs.iter().enumerate() {
            for (j, gel) in gammas.iter().enumerate() {
                let meet = fel.iter().filter(|x| gel.binary_search(x).is_ok()).count();
                if meet != 1 {
                    continue;
                }
                let f = Subgroup::new(Arc::clone(g), fel.clone()).expect("closed subgroup");
                let gamma = Subgroup::new(Arc::clone(g), gel.clone()).expect("closed subgroup");
                let pair = MatchedPair::from_exact_factorization(g, &f, &gamma)
                    .expect("trivial meet with multiplying orders is an exact factorization");
                out.push((format!("{name}/F{}#{i}/Gamma{p}#{j}", fel.len()), pair));
            }
        }
    }
    out
}

fn run_scan(
    corpus: &str,
    theorem: &str,
    cap: usize,
    seed: u64,
) -> Result<Vec<ScanItem>, CliError> {
    let (objects, mut items) = load_corpus(corpus, cap)?;
    // caso1sol instances are primes, not corpus files; scan the small ones.
    if theorem == "caso1sol" {
        for p in (2u64..32).filter(|&p| is_prime(p)) {
            let report = match verify_caso1sol(p, cap, seed) {
                Ok(r) => r,
                Err(e) => TheoremReport::skipped("caso1sol", "realization statement", e.to_string()),
            };
            items.push(ScanItem { name: format!("p={p}"), report });
        }
        return Ok(items);
    }
    for (name, obj) in &objects {
        match (theorem, obj) {
            ("fnilp" | "hnilp", CorpusObject::Pair(pair)) => {
                let ext = AbelianExtension::new((**pair).clone());
                push_ext_item(&mut items, name.clone(), theorem, &ext);
            }
            ("fnilp" | "hnilp", CorpusObject::Group(g)) => {
                for (iname, pair) in factorization_instances(name, g) {
                    let ext = AbelianExtension::new(pair);
                    push_ext_item(&mut items, iname, theorem, &ext);
                }
            }
            ("fnilp-gt" | "solv-gt", CorpusObject::Group(g)) => {
                for p in prime_divisors(g.order()) {
                    let reps = conjugacy_reps(g, g.cyclic_subgroups_of_order(p));
                    for (k, elems) in reps.into_iter().enumerate() {
                        let f = Subgroup::new(Arc::clone(g), elems).expect("closed subgroup");
                        let verify =
                            if theorem == "fnilp-gt" { verify_fnilp_gt } else { verify_solv_gt };
                        let report = match verify(g, &f) {
                            Ok(r) => r,
                            Err(e) => TheoremReport::skipped(
                                "scan",
                                "bimodule statement",
                                e.to_string(),
                            ),
                        };
                        items.push(ScanItem { name: format!("{name}/F=Z{p}#{k}"), report });
                    }
                }
            }
            ("solv-neargp", CorpusObject::Group(g)) => {
                let kappas = if g.order() == 1 { vec![0] } else { vec![0, g.order() as u32 - 1] };
                for kappa in kappas {
                    let report = match verify_solv_neargp(g, kappa) {
                        Ok(r) => r,
                        Err(e) => {
                            TheoremReport::skipped("solv-neargp", "near-group statement", e.to_string())
                        }
                    };
                    items.push(ScanItem { name: format!("{name}/kappa={kappa}"), report });
                }
            }
            ("odd-wgt", CorpusObject::Ring(ring)) => {
                items.push(ScanItem { name: name.clone(), report: verify_odd_wgt(ring) });
            }
            ("odd-wgt", CorpusObject::Group(g)) => {
                let report = match character_table_with(g, cap, seed) {
                    Ok(ct) => verify_odd_wgt(&rep_fusion_ring(&ct)),
                    Err(e) => TheoremReport::skipped("odd-wgt", "ring statement", e.to_string()),
                };
                items.push(ScanItem { name: format!("rep_{name}"), report });
            }
            ("kg-nilpotent-iff", CorpusObject::Group(g)) => {
                let report = match verify_kg_nilpotent_iff(g, cap, seed) {
                    Ok(r) => r,
                    Err(e) => {
                        TheoremReport::skipped("kg-nilpotent-iff", "ring statement", e.to_string())
                    }
                };
                items.push(ScanItem { name: name.clone(), report });
            }
            // Objects a statement has no reading for are not instances.
            _ => {}
        }
    }
    Ok(items)
}

fn push_ext_item(items: &mut Vec<ScanItem>, name: String, theorem: &str, ext: &AbelianExtension) {
    let report = match if theorem == "fnilp" { ext.verify_fnilp() } else { ext.verify_hnilp() } {
        Ok(r) => r,
        Err(e) => TheoremReport::skipped("scan", "extension statement", e.to_string()),
    };
    items.push(ScanItem { name, report });
}

fn scan_to_json(theorem: &str, items: &[ScanItem]) -> Value {
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut skip = 0usize;
    let instances: Vec<Value> = items
        .iter()
        .map(|item| {
            let mut m = serde_json::Map::new();
            m.insert("name".into(), json!(item.name));
            match &item.report.outcome {
                TheoremOutcome::Pass => {
                    pass += 1;
                    m.insert("outcome".into(), json!("pass"));
                }
                TheoremOutcome::Fail => {
                    fail += 1;
                    m.insert("outcome".into(), json!("fail"));
                    let failing: Vec<Value> = item
                        .report
                        .clauses
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| json!({"name": c.name, "detail": c.detail}))
                        .collect();
                    m.insert("failing_clauses".into(), Value::Array(failing));
                }
                TheoremOutcome::Skipped { reason } => {
                    skip += 1;
                    m.insert("outcome".into(), json!("skipped"));
                    m.insert("skip_reason".into(), json!(reason));
                }
            }
            Value::Object(m)
        })
        .collect();
    json!({
        "theorem": theorem,
        "pass": pass,
        "fail": fail,
        "skip": skip,
        "instances": instances,
    })
}

fn render_scan_text(theorem: &str, items: &[ScanItem]) -> String {
    let mut s = String::new();
    let pass = items.iter().filter(|i| i.report.passed()).count();
    let fail = items.iter().filter(|i| i.report.failed()).count();
    let skip = items.len() - pass - fail;
    let _ = writeln!(s, "scan: {theorem} over {} instances", items.len());
    let _ = writeln!(s, "pass {pass}  fail {fail}  skip {skip}");
    for item in items {
        match &item.report.outcome {
            TheoremOutcome::Pass => {
                let _ = writeln!(s, "  [pass] {}", item.name);
            }
            TheoremOutcome::Skipped { reason } => {
                let _ = writeln!(s, "  [skip] {}: {reason}", item.name);
            }
            TheoremOutcome::Fail => {
                let _ = writeln!(s, "  [FAIL] {}", item.name);
                for c in item.report.clauses.iter().filter(|c| !c.pass) {
                    let _ = writeln!(s, "         clause {}: {}", c.name, c.detail);
                }
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn subgroup_selectors_cover_the_three_forms() {
        let g = Arc::new(fixtures::symmetric_group(3));
        assert_eq!(resolve_subgroup(&g, "Z3").unwrap().order(), 3);
        assert_eq!(resolve_subgroup(&g, "order:2").unwrap().order(), 2);
        let z3 = resolve_subgroup(&g, "Z3").unwrap();
        let listed = format!(
            "indices:{}",
            z3.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        );
        assert_eq!(resolve_subgroup(&g, &listed).unwrap().order(), 3);
        assert!(resolve_subgroup(&g, "Z5").is_err());
        assert!(resolve_subgroup(&g, "bogus").is_err());
    }

    #[test]
    fn theorem_dispatch_rejects_unknown_ids() {
        let inst = InstanceArgs {
            g: None,
            f: None,
            gamma: None,
            pair: None,
            ring: None,
            group: None,
            p: None,
            kappa: None,
        };
        match run_verify("no-such-theorem", &inst, 512, 0) {
            Err(CliError::UnknownTheorem(_)) => {}
            other => panic!("expected unknown-theorem error, got {other:?}"),
        }
    }

    #[test]
    fn verify_dispatch_reaches_every_verifier() {
        let mk = || InstanceArgs {
            g: None,
            f: None,
            gamma: None,
            pair: None,
            ring: None,
            group: None,
            p: None,
            kappa: None,
        };
        let mut inst = mk();
        inst.g = Some("A4".into());
        inst.f = Some("Z3".into());
        assert!(run_verify("fnilp-gt", &inst, 512, 0).unwrap().passed());
        assert!(run_verify("solv-gt", &inst, 512, 0).unwrap().passed());
        inst.gamma = Some("Z3".into());
        inst.f = Some("order:4".into());
        assert!(run_verify("fnilp", &inst, 512, 0).unwrap().passed());
        assert!(run_verify("hnilp", &inst, 512, 0).unwrap().passed());

        let mut inst = mk();
        inst.p = Some(3);
        assert!(run_verify("caso1sol", &inst, 512, 0).unwrap().passed());

        let mut inst = mk();
        inst.g = Some("Z3".into());
        inst.kappa = Some(2);
        assert!(run_verify("solv-neargp", &inst, 512, 0).unwrap().passed());

        let mut inst = mk();
        inst.ring = Some("rep_Heis27".into());
        assert!(run_verify("odd-wgt", &inst, 512, 0).unwrap().passed());

        let mut inst = mk();
        inst.group = Some("D4".into());
        assert!(run_verify("kg-nilpotent-iff", &inst, 512, 0).unwrap().passed());
    }

    #[test]
    fn builtin_scan_of_the_group_statement_has_no_failures() {
        let items = run_scan("builtin", "fnilp-gt", 512, 0).unwrap();
        assert!(!items.is_empty());
        for item in &items {
            assert!(!item.report.failed(), "{} failed: {:?}", item.name, item.report.clauses);
        }
    }
}
