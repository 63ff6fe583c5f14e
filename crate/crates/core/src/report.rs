//! Per-`k` verification of both families and the JSON reports it emits.
//!
//! Field names and the `"p/q"` rational encoding are part of the file
//! format; `certify` reads these files back without the search engine.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::engine::{
    self, EdgeVerdict, EdgeWitnessHint, MinimalityReport, SearchOptions, ToughnessResult, WitnessSource,
};
use crate::error::EngineError;
use crate::families::{expected_toughness, kriesell_gap, tight_cut, FamilyId, KriesellGap};
use crate::graph::{Edge, VertexSet};
use crate::invariants::{independence_number, vertex_connectivity};
use crate::io::write_graph6;
use crate::ratio::Ratio;

pub const REPORT_FORMAT: &str = "toughlab-theorem-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Timeout,
}

/// A cut with 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutRecord {
    pub cut: Vec<usize>,
    pub size: usize,
    pub components: usize,
}

impl CutRecord {
    pub fn new(cut: VertexSet, components: usize) -> Self {
        CutRecord {
            cut: cut.labels(),
            size: cut.len(),
            components,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCertificate {
    /// 1-based endpoints, ascending.
    pub edge: [usize; 2],
    pub dropped: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<WitnessSource>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<CutRecord>,
}

impl EdgeCertificate {
    pub fn from_verdict(ev: &EdgeVerdict) -> Self {
        EdgeCertificate {
            edge: ev.edge.labels(),
            dropped: ev.verdict.dropped,
            source: ev.verdict.source,
            witness: ev
                .verdict
                .witness
                .zip(ev.verdict.components)
                .map(|(w, c)| CutRecord::new(w, c)),
        }
    }
}

/// Serialized form of a toughness computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessRecord {
    pub tau: Ratio,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub components: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl ToughnessRecord {
    pub fn new(result: &ToughnessResult, elapsed_ms: Option<u64>) -> Self {
        ToughnessRecord {
            tau: result.value,
            witness: result.witness.map(VertexSet::labels),
            components: result.witness_components,
            elapsed_ms,
        }
    }
}

/// Serialized form of a minimality check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityRecord {
    pub tau: Ratio,
    pub minimally_tough: bool,
    pub edges: Vec<EdgeCertificate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl MinimalityRecord {
    pub fn new(report: &MinimalityReport, elapsed_ms: Option<u64>) -> Self {
        MinimalityRecord {
            tau: report.tau.value,
            minimally_tough: report.minimally_tough,
            edges: report.per_edge.iter().map(EdgeCertificate::from_verdict).collect(),
            elapsed_ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub tight: CutRecord,
    /// The engine's tie-broken optimal cut.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub optimal: Option<CutRecord>,
    pub edges: Vec<EdgeCertificate>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseTimes {
    pub construct: u64,
    pub alpha: u64,
    pub kappa: u64,
    pub tau: u64,
    pub minimality: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub family: FamilyId,
    pub order: usize,
    pub graph6: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub computed_tau: Option<Ratio>,
    pub expected_tau: Ratio,
    pub tau_matches: bool,
    pub minimally_tough: bool,
    pub canonical_witnesses: bool,
    pub alpha: usize,
    pub kappa: usize,
    pub kriesell: KriesellGap,
    pub witnesses: Witnesses,
    pub elapsed_ms: PhaseTimes,
}

impl TheoremReport {
    /// The acceptance rule for one `k`.
    pub fn passes(&self) -> bool {
        self.tau_matches && self.minimally_tough && (self.family.k < 5 || self.kriesell.violates)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub format: String,
    pub version: u32,
    pub reports: Vec<TheoremReport>,
}

impl ReportFile {
    pub fn new(reports: Vec<TheoremReport>) -> Self {
        ReportFile {
            format: REPORT_FORMAT.to_string(),
            version: REPORT_VERSION,
            reports,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(TheoremReport::passes)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Try the family's closed-form edge witnesses before searching.
    pub canonical: bool,
    pub timeout: Option<Duration>,
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            canonical: true,
            timeout: Some(Duration::from_secs(600)),
            parallel: true,
        }
    }
}

fn ms(since: Instant) -> u64 {
    since.elapsed().as_millis() as u64
}

/// Builds the member, computes every invariant and assembles its report.
/// A deadline overrun yields a `TIMEOUT` report rather than an error.
pub fn verify_family(id: FamilyId, opts: &VerifyOptions) -> TheoremReport {
    let start = Instant::now();
    let deadline = opts.timeout.map(|t| start + t);
    let search = SearchOptions {
        deadline,
        parallel: opts.parallel,
    };
    let mut times = PhaseTimes::default();

    let g = id.graph();
    let expected_tau = expected_toughness(id);
    let tight = tight_cut(id);
    let tight_components = g.count_components(tight.cut.bits());
    times.construct = ms(start);

    let t = Instant::now();
    let alpha = independence_number(&g);
    times.alpha = ms(t);

    let t = Instant::now();
    let kappa = vertex_connectivity(&g);
    times.kappa = ms(t);

    let mut report = TheoremReport {
        family: id,
        order: g.order(),
        graph6: write_graph6(&g),
        status: Status::Timeout,
        computed_tau: None,
        expected_tau,
        tau_matches: false,
        minimally_tough: false,
        canonical_witnesses: opts.canonical,
        alpha,
        kappa,
        kriesell: kriesell_gap(id),
        witnesses: Witnesses {
            tight: CutRecord::new(tight.cut, tight_components),
            optimal: None,
            edges: Vec::new(),
        },
        elapsed_ms: times,
    };

    let t = Instant::now();
    let tau = match engine::toughness_with(&g, &search) {
        Ok(tau) => tau,
        Err(EngineError::Timeout) => {
            report.elapsed_ms.tau = ms(t);
            return report;
        }
        Err(e) => unreachable!("family graphs are valid: {e}"),
    };
    report.elapsed_ms.tau = ms(t);
    report.computed_tau = Some(tau.value);
    report.tau_matches = tau.value == expected_tau;
    if let (Some(w), Some(c)) = (tau.witness, tau.witness_components) {
        report.witnesses.optimal = Some(CutRecord::new(w, c));
    }

    let t = Instant::now();
    let hint: Option<&dyn EdgeWitnessHint> = if opts.canonical { Some(&id) } else { None };
    let minimality = engine::minimality_given_tau(&g, tau, hint, &search);
    report.elapsed_ms.minimality = ms(t);
    let minimality = match minimality {
        Ok(m) => m,
        Err(EngineError::Timeout) => return report,
        Err(e) => unreachable!("family graphs are valid: {e}"),
    };
    report.minimally_tough = minimality.minimally_tough;
    report.witnesses.edges = minimality.per_edge.iter().map(EdgeCertificate::from_verdict).collect();
    report.status = if report.passes() { Status::Pass } else { Status::Fail };
    report
}

/// One report per `k`, in increasing `k`.
pub fn verify_range(
    kind: crate::families::FamilyKind,
    ks: std::ops::RangeInclusive<usize>,
    opts: &VerifyOptions,
) -> Result<Vec<TheoremReport>, crate::error::FamilyError> {
    let ids: Vec<FamilyId> = ks.map(|k| FamilyId::new(kind, k)).collect::<Result<_, _>>()?;
    Ok(ids.into_iter().map(|id| verify_family(id, opts)).collect())
}

fn fmt_ratio(r: Option<Ratio>) -> String {
    match r {
        Some(Ratio::Finite { num, den: 1 }) => num.to_string(),
        Some(r) => r.to_string(),
        None => "-".into(),
    }
}

/// Human-readable summary table.
pub fn render_table(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<5} {:>3} {:>3}  {:>7} {:>7}  {:>5} {:>5}  {:<16} {:<7} {:>9}  status",
        "kind", "k", "n", "tau", "expect", "alpha", "kappa", "kriesell", "minimal", "ms"
    )
    .unwrap();
    for r in reports {
        let gap = &r.kriesell;
        let kriesell = if gap.violates {
            format!("{} < {} VIOLATED", gap.ceil_2t, gap.degree)
        } else {
            format!("{} vs {} holds", gap.ceil_2t, gap.degree)
        };
        let minimal = match r.status {
            Status::Timeout if r.witnesses.edges.is_empty() => "-",
            _ if r.minimally_tough => "yes",
            _ => "no",
        };
        let t = &r.elapsed_ms;
        let total = t.construct + t.alpha + t.kappa + t.tau + t.minimality;
        writeln!(
            out,
            "{:<5} {:>3} {:>3}  {:>7} {:>7}  {:>5} {:>5}  {:<16} {:<7} {:>9}  {}",
            r.family.kind.to_string(),
            r.family.k,
            r.order,
            fmt_ratio(r.computed_tau),
            fmt_ratio(Some(r.expected_tau)),
            r.alpha,
            r.kappa,
            kriesell,
            minimal,
            total,
            match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Timeout => "TIMEOUT",
            }
        )
        .unwrap();
    }
    out
}

pub(crate) fn edge_from_labels(labels: [usize; 2]) -> Option<Edge> {
    let [a, b] = labels;
    if a == 0 || b == 0 || a == b {
        return None;
    }
    Some(Edge::new(a - 1, b - 1))
}
