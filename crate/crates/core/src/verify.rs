//! Verification of `depth S/I = sdepth S/I < sdepth I` over all atomistic
//! lattices on `k` atoms.
//!
//! Projective dimension and the lattice invariants are computed at every
//! node. Stanley projective dimensions are monotone along quotient edges, so
//! by default they are only computed at the nodes that are maximal or
//! minimal among those with the same `pdim S/I`; every other node inherits
//! an upper bound from its ancestors and a lower bound from its descendants.
//! Any check the bounds cannot settle falls back to a direct computation.
//!
//! With an output directory every phase persists its results (one file per
//! node, written atomically), and a rerun with `resume` skips nodes whose
//! stored state matches their canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{
    generate_all_with, maximal_nodes_by_value, minimal_nodes_by_value, node_file_name, read_dag, write_dag,
    EnumerationDag,
};
use crate::error::{Error, Result};
use crate::homology::{betti_table, BettiEntry};
use crate::invariants::{breadth, length, order_dimension, InvariantRecord};
use crate::lattice::Lattice;
use crate::realize::{lcm_lattice, realize, MonomialIdeal};
use crate::sdepth::{box_cap_from_env, sdepth_with_certificate, IntervalPartition, Mode};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Compute Stanley depth at every node instead of extremal ones only.
    pub exhaustive: bool,
    pub jobs: Option<usize>,
    /// Directory for per-phase state and the final report.
    pub out: Option<PathBuf>,
    /// Reuse state already present in `out`.
    pub resume: bool,
    pub box_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive: false,
            jobs: None,
            out: None,
            resume: false,
            box_cap: box_cap_from_env(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `spdim I <= pdim I`
    SpdimIdealLePdimIdeal,
    /// `spdim S/I <= pdim S/I`
    SpdimQuotientLePdimQuotient,
    /// `spdim I <= spdim S/I - 1`
    SpdimIdealLtSpdimQuotient,
    /// `spdim S/I >= pdim S/I`, i.e. `sdepth S/I <= depth S/I`
    SdepthQuotientLeDepth,
    /// `sdepth I > sdepth S/I`
    SdepthIdealGtSdepthQuotient,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::SpdimIdealLePdimIdeal,
        Check::SpdimQuotientLePdimQuotient,
        Check::SpdimIdealLtSpdimQuotient,
        Check::SdepthQuotientLeDepth,
        Check::SdepthIdealGtSdepthQuotient,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::SpdimIdealLePdimIdeal => "spdim I <= pdim I",
            Check::SpdimQuotientLePdimQuotient => "spdim S/I <= pdim S/I",
            Check::SpdimIdealLtSpdimQuotient => "spdim I <= spdim S/I - 1",
            Check::SdepthQuotientLeDepth => "sdepth S/I <= depth S/I",
            Check::SdepthIdealGtSdepthQuotient => "sdepth I > sdepth S/I",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: Check,
    pub status: Status,
}

/// Closed range of values known for an invariant. `hi` is `None` when no
/// upper bound is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl Bounds {
    fn exact(v: usize) -> Self {
        Bounds { lo: v, hi: Some(v) }
    }

    pub fn value(&self) -> Option<usize> {
        (self.hi == Some(self.lo)).then_some(self.lo)
    }
}

/// Everything needed to recheck a failure: the lattice, its realization,
/// the Betti table and the Stanley decompositions found.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub lattice_file: Option<String>,
    pub lattice: crate::lattice::LatticeRecord,
    pub ideal: MonomialIdeal,
    pub betti: Vec<BettiEntry>,
    pub quotient_certificate: Option<IntervalPartition>,
    pub ideal_certificate: Option<IntervalPartition>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeReport {
    pub canonical_hex: String,
    pub ideal: String,
    pub record: InvariantRecord,
    pub spdim_quotient_bounds: Bounds,
    pub spdim_ideal_bounds: Bounds,
    /// True when Stanley depth was computed at this node rather than inferred.
    pub searched: bool,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub k: usize,
    pub exhaustive: bool,
    pub nodes: Vec<NodeReport>,
    /// Nodes maximal among those with the same `pdim S/I`, keyed by that value.
    pub maximal_by_pdim: BTreeMap<usize, Vec<usize>>,
    pub minimal_by_pdim: BTreeMap<usize, Vec<usize>>,
    /// Ids of nodes where Stanley depth was computed.
    pub searched: Vec<usize>,
    pub timings_secs: BTreeMap<String, f64>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn records(&self) -> Vec<InvariantRecord> {
        self.nodes.iter().map(|n| n.record.clone()).collect()
    }

    pub fn failures(&self) -> Vec<(usize, Check, Status)> {
        self.nodes
            .iter()
            .flat_map(|n| {
                n.checks
                    .iter()
                    .filter(|c| c.status != Status::Pass)
                    .map(move |c| (n.record.id, c.check, c.status.clone()))
            })
            .collect()
    }
}

/// Persisted per-node state.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct NodeState {
    id: usize,
    canonical_hex: String,
    ideal: MonomialIdeal,
    pdim_quotient: usize,
    length: usize,
    breadth: usize,
    order_dimension: usize,
    #[serde(default)]
    spdim_quotient: Option<usize>,
    #[serde(default)]
    spdim_ideal: Option<usize>,
    #[serde(default)]
    quotient_certificate: Option<IntervalPartition>,
    #[serde(default)]
    ideal_certificate: Option<IntervalPartition>,
    #[serde(default)]
    error: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct PhaseManifest {
    k: usize,
    enumerate: bool,
    invariants: bool,
    sdepth: bool,
    verify: bool,
}

const MANIFEST: &str = "manifest.json";
const REPORT: &str = "verify.json";

struct Store {
    root: PathBuf,
}

impl Store {
    fn open(root: &Path) -> Result<Self> {
        fs::create_dir_all(root.join("nodes")).map_err(|e| Error::io(root, e))?;
        Ok(Store { root: root.to_path_buf() })
    }

    fn enumerate_dir(&self) -> PathBuf {
        self.root.join("enumerate")
    }

    fn node_path(&self, id: usize) -> PathBuf {
        self.root.join("nodes").join(node_file_name(id))
    }

    fn load_node(&self, id: usize, canonical_hex: &str) -> Option<NodeState> {
        let text = fs::read_to_string(self.node_path(id)).ok()?;
        let state: NodeState = serde_json::from_str(&text).ok()?;
        (state.canonical_hex == canonical_hex).then_some(state)
    }

    fn save_node(&self, state: &NodeState) -> Result<()> {
        write_atomic(&self.node_path(state.id), &serde_json::to_string(state).expect("state serializes"))
    }

    fn manifest(&self) -> PhaseManifest {
        fs::read_to_string(self.root.join(MANIFEST))
            .ok()
            .and_then(|t| serde_json::from_str(&t).ok())
            .unwrap_or_default()
    }

    fn save_manifest(&self, m: &PhaseManifest) -> Result<()> {
        write_atomic(&self.root.join(MANIFEST), &serde_json::to_string_pretty(m).expect("manifest serializes"))
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

fn compute_node(id: usize, canonical_hex: String, lattice: &Lattice) -> Result<NodeState> {
    Ok(NodeState {
        id,
        canonical_hex,
        ideal: realize(lattice)?,
        pdim_quotient: betti_table(lattice)?.projective_dimension(),
        length: length(lattice),
        breadth: breadth(lattice),
        order_dimension: order_dimension(lattice),
        spdim_quotient: None,
        spdim_ideal: None,
        quotient_certificate: None,
        ideal_certificate: None,
        error: None,
    })
}

/// Fill in the requested Stanley projective dimensions. Depth is used as
/// the starting guess for `sdepth S/I`, and depth + 1 for `sdepth I`.
fn search_node(state: &mut NodeState, quotient: bool, ideal: bool, box_cap: usize) {
    let n = state.ideal.num_vars();
    let depth = n - state.pdim_quotient;
    let mut run = |mode: Mode, hint: usize| match sdepth_with_certificate(&state.ideal, mode, box_cap, Some(hint)) {
        Ok((d, cert)) => Some((n - d, cert)),
        Err(e) => {
            state.error = Some(format!("{mode} sdepth: {e}"));
            None
        }
    };
    if quotient && state.spdim_quotient.is_none() {
        if let Some((s, cert)) = run(Mode::Quotient, depth) {
            state.spdim_quotient = Some(s);
            state.quotient_certificate = Some(cert);
        }
    }
    if ideal && state.spdim_ideal.is_none() {
        if let Some((s, cert)) = run(Mode::Ideal, depth + 1) {
            state.spdim_ideal = Some(s);
            state.ideal_certificate = Some(cert);
        }
    }
}

/// Bounds from values computed at ancestors (upper) and descendants (lower).
fn propagate(dag: &EnumerationDag, values: &[Option<usize>]) -> Vec<Bounds> {
    let n = dag.len();
    let mut hi: Vec<Option<usize>> = values.to_vec();
    for id in 0..n {
        for &p in dag.parents(id) {
            if let Some(v) = hi[p] {
                hi[id] = Some(hi[id].map_or(v, |h| h.min(v)));
            }
        }
    }
    let mut lo: Vec<usize> = values.iter().map(|v| v.unwrap_or(0)).collect();
    for id in (0..n).rev() {
        for &c in dag.children(id) {
            lo[id] = lo[id].max(lo[c]);
        }
    }
    (0..n).map(|i| Bounds { lo: lo[i], hi: hi[i] }).collect()
}

fn status(pass: bool, fail: bool) -> Status {
    if pass {
        Status::Pass
    } else if fail {
        Status::Fail
    } else {
        Status::Undetermined
    }
}

fn evaluate(pdim_quotient: usize, sq: Bounds, si: Bounds) -> Vec<CheckResult> {
    let pdim_ideal = pdim_quotient - 1;
    let le = |b: Bounds, v: usize| status(b.hi.is_some_and(|h| h <= v), b.lo > v);
    let ideal_below_quotient = status(
        si.hi.is_some_and(|h| h < sq.lo),
        sq.hi.is_some_and(|h| si.lo >= h),
    );
    vec![
        CheckResult {
            check: Check::SpdimIdealLePdimIdeal,
            status: le(si, pdim_ideal),
        },
        CheckResult {
            check: Check::SpdimQuotientLePdimQuotient,
            status: le(sq, pdim_quotient),
        },
        CheckResult {
            check: Check::SpdimIdealLtSpdimQuotient,
            status: ideal_below_quotient.clone(),
        },
        CheckResult {
            check: Check::SdepthQuotientLeDepth,
            status: status(sq.lo >= pdim_quotient, sq.hi.is_some_and(|h| h < pdim_quotient)),
        },
        CheckResult {
            check: Check::SdepthIdealGtSdepthQuotient,
            status: ideal_below_quotient,
        },
    ]
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?
            .install(f),
        None => f(),
    }
}

/// Run the full verification for `k` atoms.
pub fn verify(k: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    if !(2..=5).contains(&k) {
        return Err(Error::invalid(format!("verification supports 2 to 5 atoms, got {k}")));
    }
    in_pool(options.jobs, || verify_inner(k, options))
}

fn verify_inner(k: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    let mut timings = BTreeMap::new();
    let store = options.out.as_deref().map(Store::open).transpose()?;
    let mut manifest = match &store {
        Some(s) if options.resume => s.manifest(),
        _ => PhaseManifest::default(),
    };
    if manifest.k != k {
        manifest = PhaseManifest {
            k,
            ..PhaseManifest::default()
        };
    }

    let clock = Instant::now();
    let dag = match &store {
        Some(s) if manifest.enumerate => read_dag(&s.enumerate_dir())?,
        _ => {
            let dag = generate_all_with(k, None)?;
            if let Some(s) = &store {
                write_dag(&dag, &s.enumerate_dir())?;
                manifest.enumerate = true;
                s.save_manifest(&manifest)?;
            }
            dag
        }
    };
    timings.insert("enumerate".to_string(), clock.elapsed().as_secs_f64());

    let clock = Instant::now();
    let mut states: Vec<NodeState> = dag
        .nodes
        .par_iter()
        .map(|node| {
            let hex = node.canonical.to_hex();
            if let Some(state) = store.as_ref().filter(|_| options.resume).and_then(|s| s.load_node(node.id, &hex)) {
                return Ok(state);
            }
            let state = compute_node(node.id, hex, &node.representative)?;
            if let Some(s) = &store {
                s.save_node(&state)?;
            }
            Ok(state)
        })
        .collect::<Result<_>>()?;
    if let Some(s) = &store {
        manifest.invariants = true;
        s.save_manifest(&manifest)?;
    }
    timings.insert("invariants".to_string(), clock.elapsed().as_secs_f64());

    let clock = Instant::now();
    let pdims: Vec<usize> = states.iter().map(|s| s.pdim_quotient).collect();
    let group = |m: BTreeMap<i64, Vec<usize>>| -> BTreeMap<usize, Vec<usize>> {
        m.into_iter().map(|(v, ids)| (v as usize, ids)).collect()
    };
    let maximal_by_pdim = group(maximal_nodes_by_value(&dag, |n| pdims[n.id] as i64));
    let minimal_by_pdim = group(minimal_nodes_by_value(&dag, |n| pdims[n.id] as i64));

    // (quotient, ideal) searches per node
    let mut wanted = vec![(options.exhaustive, options.exhaustive); dag.len()];
    for ids in maximal_by_pdim.values() {
        for &id in ids {
            wanted[id] = (true, true);
        }
    }
    for ids in minimal_by_pdim.values() {
        for &id in ids {
            wanted[id].0 = true;
        }
    }
    run_searches(&mut states, &wanted, options.box_cap, store.as_ref())?;
    if let Some(s) = &store {
        manifest.sdepth = true;
        s.save_manifest(&manifest)?;
    }
    timings.insert("sdepth".to_string(), clock.elapsed().as_secs_f64());

    let clock = Instant::now();
    let mut results = settle(&dag, &states);
    // fall back to direct computation wherever the bounds were inconclusive
    let unsettled: Vec<usize> = (0..dag.len())
        .filter(|&i| results[i].2.iter().any(|c| c.status != Status::Pass))
        .collect();
    if !unsettled.is_empty() {
        for &i in &unsettled {
            wanted[i] = (true, true);
        }
        run_searches(&mut states, &wanted, options.box_cap, store.as_ref())?;
        results = settle(&dag, &states);
    }

    let mut nodes = Vec::with_capacity(dag.len());
    for (i, (sq, si, mut checks)) in results.into_iter().enumerate() {
        let state = &states[i];
        if let Some(err) = &state.error {
            for c in checks.iter_mut().filter(|c| c.status != Status::Pass) {
                c.status = Status::Error(err.clone());
            }
        }
        let witness = if checks.iter().any(|c| c.status != Status::Pass) {
            let lattice = &dag.nodes[i].representative;
            Some(Witness {
                lattice_file: store.as_ref().map(|s| s.enumerate_dir().join(node_file_name(i)).display().to_string()),
                lattice: lattice.to_record(),
                ideal: state.ideal.clone(),
                betti: betti_table(lattice)?.entries(),
                quotient_certificate: state.quotient_certificate.clone(),
                ideal_certificate: state.ideal_certificate.clone(),
            })
        } else {
            None
        };
        nodes.push(NodeReport {
            canonical_hex: state.canonical_hex.clone(),
            ideal: state.ideal.to_string(),
            record: InvariantRecord {
                id: i,
                cardinality: dag.nodes[i].cardinality,
                pdim_quotient: Some(state.pdim_quotient),
                spdim_quotient: sq.value(),
                pdim_ideal: Some(state.pdim_quotient - 1),
                spdim_ideal: si.value(),
                length: state.length,
                breadth: state.breadth,
                order_dimension: state.order_dimension,
            },
            spdim_quotient_bounds: sq,
            spdim_ideal_bounds: si,
            searched: state.spdim_quotient.is_some() || state.spdim_ideal.is_some(),
            checks,
            witness,
        });
    }
    timings.insert("verify".to_string(), clock.elapsed().as_secs_f64());

    let searched = nodes.iter().filter(|n| n.searched).map(|n| n.record.id).collect();
    let all_pass = nodes.iter().all(|n| n.checks.iter().all(|c| c.status == Status::Pass));
    let report = VerificationReport {
        k,
        exhaustive: options.exhaustive,
        nodes,
        maximal_by_pdim,
        minimal_by_pdim,
        searched,
        timings_secs: timings,
        all_pass,
    };
    if let Some(s) = &store {
        write_atomic(&s.root.join(REPORT), &serde_json::to_string_pretty(&report).expect("report serializes"))?;
        manifest.verify = true;
        s.save_manifest(&manifest)?;
    }
    Ok(report)
}

fn run_searches(states: &mut [NodeState], wanted: &[(bool, bool)], box_cap: usize, store: Option<&Store>) -> Result<()> {
    states
        .par_iter_mut()
        .zip(wanted.par_iter())
        .filter(|(s, &(q, i))| (q && s.spdim_quotient.is_none()) || (i && s.spdim_ideal.is_none()))
        .filter(|(s, _)| s.error.is_none())
        .try_for_each(|(state, &(q, i))| {
            search_node(state, q, i, box_cap);
            store.map_or(Ok(()), |s| s.save_node(state))
        })
}

fn settle(dag: &EnumerationDag, states: &[NodeState]) -> Vec<(Bounds, Bounds, Vec<CheckResult>)> {
    let quotient: Vec<Option<usize>> = states.iter().map(|s| s.spdim_quotient).collect();
    let ideal: Vec<Option<usize>> = states.iter().map(|s| s.spdim_ideal).collect();
    let qb = propagate(dag, &quotient);
    let ib = propagate(dag, &ideal);
    (0..dag.len())
        .map(|i| {
            let sq = quotient[i].map_or(qb[i], Bounds::exact);
            let si = ideal[i].map_or(ib[i], Bounds::exact);
            (sq, si, evaluate(states[i].pdim_quotient, sq, si))
        })
        .collect()
}

/// Invariants of a single ideal, with the comparison chain
/// `depth S/I = sdepth S/I < sdepth I`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealVerification {
    pub num_vars: usize,
    pub num_generators: usize,
    pub depth: usize,
    pub pdim_quotient: usize,
    pub pdim_ideal: usize,
    pub sdepth_quotient: usize,
    pub sdepth_ideal: usize,
    pub spdim_quotient: usize,
    pub spdim_ideal: usize,
    /// The equality is only claimed for ideals with at most five generators;
    /// for larger ideals the statuses are reported but not asserted.
    pub asserted: bool,
    pub checks: Vec<CheckResult>,
}

impl IdealVerification {
    /// Whether every asserted check passed.
    pub fn passes(&self) -> bool {
        !self.asserted || self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn depth_equals_sdepth(&self) -> bool {
        self.depth == self.sdepth_quotient
    }
}

pub fn verify_ideal(ideal: &MonomialIdeal) -> Result<IdealVerification> {
    verify_ideal_with_cap(ideal, box_cap_from_env())
}

pub fn verify_ideal_with_cap(ideal: &MonomialIdeal, box_cap: usize) -> Result<IdealVerification> {
    let n = ideal.num_vars();
    let pdim_quotient = betti_table(&lcm_lattice(ideal)?.lattice)?.projective_dimension();
    let depth = n - pdim_quotient;
    let (sdepth_quotient, _) = sdepth_with_certificate(ideal, Mode::Quotient, box_cap, Some(depth))?;
    let (sdepth_ideal, _) = sdepth_with_certificate(ideal, Mode::Ideal, box_cap, Some(depth + 1))?;
    let (spdim_quotient, spdim_ideal) = (n - sdepth_quotient, n - sdepth_ideal);
    let checks = evaluate(pdim_quotient, Bounds::exact(spdim_quotient), Bounds::exact(spdim_ideal));
    Ok(IdealVerification {
        num_vars: n,
        num_generators: ideal.num_generators(),
        depth,
        pdim_quotient,
        pdim_ideal: pdim_quotient - 1,
        sdepth_quotient,
        sdepth_ideal,
        spdim_quotient,
        spdim_ideal,
        asserted: ideal.num_generators() <= 5,
        checks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: &str = "No.,|L|,pdim S/I,spdim S/I,pdim I,spdim I,Length,dim,Breadth";

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Appendix-style table, one row per record, numbered from 1 in record order.
pub fn report_csv(records: &[InvariantRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (row, r) in records.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row + 1,
            r.cardinality,
            opt(r.pdim_quotient),
            opt(r.spdim_quotient),
            opt(r.pdim_ideal),
            opt(r.spdim_ideal),
            r.length,
            r.order_dimension,
            r.breadth
        ));
    }
    out
}

/// Companion table of realizing ideals.
pub fn ideals_csv(ideals: &[String]) -> String {
    let mut out = String::from("No.,Ideal\n");
    for (row, ideal) in ideals.iter().enumerate() {
        out.push_str(&format!("{},\"{}\"\n", row + 1, ideal));
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    no: usize,
    ideal: &'a str,
    #[serde(flatten)]
    record: &'a InvariantRecord,
}

pub fn report_json(records: &[InvariantRecord], ideals: &[String]) -> String {
    let rows: Vec<JsonRow> = records
        .iter()
        .zip(ideals)
        .enumerate()
        .map(|(i, (record, ideal))| JsonRow {
            no: i + 1,
            ideal,
            record,
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"
}

/// Load the report written by [`verify`] into `dir`.
pub fn read_report(dir: &Path) -> Result<VerificationReport> {
    let path = dir.join(REPORT);
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    serde_json::from_str(&text).map_err(|source| Error::Json { path, source })
}

/// Write `report.csv` + `ideals.csv` or `report.json` into `dir`, in node
/// order (cardinality descending, then canonical key). Returns the paths.
pub fn write_report(dir: &Path, report: &VerificationReport, format: ReportFormat) -> Result<Vec<PathBuf>> {
    let records = report.records();
    let ideals: Vec<String> = report.nodes.iter().map(|n| n.ideal.clone()).collect();
    let files: Vec<(PathBuf, String)> = match format {
        ReportFormat::Csv => vec![
            (dir.join("report.csv"), report_csv(&records)),
            (dir.join("ideals.csv"), ideals_csv(&ideals)),
        ],
        ReportFormat::Json => vec![(dir.join("report.json"), report_json(&records, &ideals))],
    };
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    for (path, text) in &files {
        fs::write(path, text).map_err(|e| Error::io(path, e))?;
    }
    Ok(files.into_iter().map(|(p, _)| p).collect())
}
