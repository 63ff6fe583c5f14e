//! Re-checks emitted reports using only graph primitives and integer
//! arithmetic. Nothing here calls into the search engine.

use std::collections::BTreeSet;
use std::fmt;

use crate::engine::WitnessSource;
use crate::families::{edge_witness, expected_toughness, FamilyId};
use crate::graph::{Edge, Graph, VertexSet};
use crate::io::read_graph6;
use crate::ratio::Ratio;
use crate::report::{edge_from_labels, CutRecord, ReportFile, Status, TheoremReport, REPORT_FORMAT, REPORT_VERSION};

/// One failed check, tied to the report (by family) it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub family: String,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.family, self.message)
    }
}

struct Checker {
    family: String,
    failures: Vec<Failure>,
}

impl Checker {
    fn fail(&mut self, message: impl Into<String>) {
        self.failures.push(Failure {
            family: self.family.clone(),
            message: message.into(),
        });
    }

    fn ensure(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok {
            self.fail(message());
        }
    }
}

fn cut_set(record: &CutRecord, n: usize) -> Option<VertexSet> {
    if record.cut.iter().any(|&l| l == 0 || l > n) {
        return None;
    }
    let set = VertexSet::from_labels(record.cut.iter().copied()).ok()?;
    (set.len() == record.cut.len()).then_some(set)
}

/// Validates the record's size and component count on `host`; returns the
/// set when both match.
fn check_cut(ck: &mut Checker, what: &str, record: &CutRecord, host: &Graph) -> Option<VertexSet> {
    let Some(set) = cut_set(record, host.order()) else {
        ck.fail(format!("{what}: cut {:?} has invalid or repeated labels", record.cut));
        return None;
    };
    if set.len() != record.size {
        ck.fail(format!(
            "{what}: cut {:?} has {} vertices, report says {}",
            record.cut,
            set.len(),
            record.size
        ));
        return None;
    }
    let c = host.count_components(set.bits());
    if c != record.components {
        ck.fail(format!(
            "{what}: cut {:?} leaves {c} components, report says {}",
            record.cut, record.components
        ));
        return None;
    }
    if c < 2 {
        ck.fail(format!("{what}: cut {:?} is not a vertex cut", record.cut));
        return None;
    }
    Some(set)
}

/// All certificate failures in one report; empty means it checks.
pub fn certify_report(report: &TheoremReport) -> Vec<Failure> {
    let mut ck = Checker {
        family: format!("{} k={}", report.family.kind, report.family.k),
        failures: Vec::new(),
    };

    let id = match FamilyId::new(report.family.kind, report.family.k) {
        Ok(id) => id,
        Err(e) => {
            ck.fail(format!("invalid family: {e}"));
            return ck.failures;
        }
    };
    let g = match read_graph6(&report.graph6) {
        Ok(g) => g,
        Err(e) => {
            ck.fail(format!("graph6 does not decode: {e}"));
            return ck.failures;
        }
    };
    if g != id.graph() {
        ck.fail(format!("graph6 `{}` is not the {id} member", report.graph6));
        return ck.failures;
    }
    ck.ensure(report.order == g.order(), || {
        format!("order {} but graph has {}", report.order, g.order())
    });

    let expected = expected_toughness(id);
    ck.ensure(report.expected_tau == expected, || {
        format!(
            "expected_tau {} but the closed form gives {expected}",
            report.expected_tau
        )
    });
    ck.ensure(
        report.tau_matches == (report.computed_tau == Some(report.expected_tau)),
        || "tau_matches disagrees with computed_tau/expected_tau".into(),
    );

    let profile = g.degree_profile();
    let gap = &report.kriesell;
    ck.ensure(profile.regular && profile.min == gap.degree, || {
        format!(
            "kriesell degree {} but graph degrees span {}..{}",
            gap.degree, profile.min, profile.max
        )
    });
    let ceil_2t = expected.scale(2).ceil();
    ck.ensure(Some(gap.ceil_2t) == ceil_2t, || {
        format!("ceil(2t) reported {} but is {ceil_2t:?}", gap.ceil_2t)
    });
    ck.ensure(gap.violates == (gap.ceil_2t < gap.degree as u64), || {
        "kriesell verdict inconsistent".into()
    });

    // The tight cut certifies tau <= expected.
    if check_cut(&mut ck, "tight cut", &report.witnesses.tight, &g).is_some() {
        let r = Ratio::of_cut(report.witnesses.tight.size, report.witnesses.tight.components);
        ck.ensure(r == expected, || format!("tight cut ratio {r} differs from {expected}"));
        if let Some(tau) = report.computed_tau {
            ck.ensure(tau <= r, || {
                format!("computed tau {tau} exceeds the tight cut ratio {r}")
            });
        }
    }

    if let Some(opt) = &report.witnesses.optimal {
        if check_cut(&mut ck, "optimal cut", opt, &g).is_some() {
            let r = Ratio::of_cut(opt.size, opt.components);
            ck.ensure(report.computed_tau == Some(r), || {
                format!(
                    "optimal cut ratio {r} differs from computed tau {:?}",
                    report.computed_tau.map(|t| t.to_string())
                )
            });
        }
    }

    if report.minimally_tough || !report.witnesses.edges.is_empty() {
        check_edges(&mut ck, report, id, &g);
    }

    let passes = report.passes();
    match report.status {
        Status::Pass => ck.ensure(passes, || "status PASS but the pass rule does not hold".into()),
        Status::Fail => ck.ensure(!passes, || "status FAIL but the pass rule holds".into()),
        Status::Timeout => ck.ensure(!passes, || "status TIMEOUT on a passing report".into()),
    }
    ck.failures
}

fn check_edges(ck: &mut Checker, report: &TheoremReport, id: FamilyId, g: &Graph) {
    let Some(tau) = report.computed_tau else {
        ck.fail("edge certificates without a computed tau");
        return;
    };
    let mut seen = BTreeSet::new();
    for cert in &report.witnesses.edges {
        let what = format!("edge {{v{}, v{}}}", cert.edge[0], cert.edge[1]);
        let Some(e) = edge_from_labels(cert.edge).filter(|e| g.has_edge(e.0, e.1)) else {
            ck.fail(format!("{what} is not an edge of the graph"));
            continue;
        };
        if !seen.insert(e) {
            ck.fail(format!("{what} certified twice"));
            continue;
        }
        if !cert.dropped {
            ck.ensure(!report.minimally_tough, || {
                format!("{what} not dropped but minimally_tough claimed")
            });
            continue;
        }
        let Some(record) = &cert.witness else {
            ck.fail(format!("{what} claims a drop without a witness"));
            continue;
        };
        let host = g.delete_edge(e.0, e.1).expect("edge checked above");
        if check_cut(ck, &what, record, &host).is_none() {
            continue;
        }
        ck.ensure(tau.exceeds_cut(record.size, record.components), || {
            format!(
                "{what}: cut {:?} gives {}/{} which is not below {tau}",
                record.cut, record.size, record.components
            )
        });
        if cert.source == Some(WitnessSource::Canonical) {
            check_canonical_pair(ck, &what, id, e, record);
        }
    }
    if report.minimally_tough {
        let all: BTreeSet<Edge> = g.edges().into_iter().collect();
        let missing = all.difference(&seen).count();
        ck.ensure(missing == 0, || format!("{missing} edges lack a certificate"));
    }
}

fn check_canonical_pair(ck: &mut Checker, what: &str, id: FamilyId, e: Edge, record: &CutRecord) {
    match edge_witness(id, e) {
        Ok(w) => {
            let claimed = (record.size, record.components);
            let expected = (w.expected_size, w.expected_components);
            ck.ensure(claimed == expected, || {
                format!(
                    "{what}: canonical witness should have (size, components) = {expected:?}, report has {claimed:?}"
                )
            });
            ck.ensure(w.cut.labels() == record.cut, || {
                format!("{what}: cut {:?} is not the canonical witness", record.cut)
            });
        }
        Err(err) => ck.fail(format!("{what}: {err}")),
    }
}

#[derive(Debug)]
pub enum CertifyError {
    Malformed(String),
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::Malformed(m) => write!(f, "malformed report: {m}"),
        }
    }
}

impl std::error::Error for CertifyError {}

pub fn parse_report_file(text: &str) -> Result<ReportFile, CertifyError> {
    let file: ReportFile = serde_json::from_str(text).map_err(|e| CertifyError::Malformed(e.to_string()))?;
    if file.format != REPORT_FORMAT {
        return Err(CertifyError::Malformed(format!("unknown format `{}`", file.format)));
    }
    if file.version != REPORT_VERSION {
        return Err(CertifyError::Malformed(format!("unsupported version {}", file.version)));
    }
    Ok(file)
}

/// Certifies every report in a file.
pub fn certify_file(file: &ReportFile) -> Vec<Failure> {
    file.reports.iter().flat_map(certify_report).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{verify_family, VerifyOptions};

    fn sample() -> TheoremReport {
        verify_family(FamilyId::four_regular(4).unwrap(), &VerifyOptions::default())
    }

    #[test]
    fn sound_report_checks() {
        assert_eq!(certify_report(&sample()), vec![]);
        let r = verify_family(
            FamilyId::six_regular(3).unwrap(),
            &VerifyOptions {
                canonical: false,
                ..Default::default()
            },
        );
        assert_eq!(certify_report(&r), vec![]);
    }

    #[test]
    fn flipped_witness_bit_is_caught() {
        let mut r = sample();
        let cut = &mut r.witnesses.edges[3].witness.as_mut().unwrap().cut;
        cut[0] = if cut[0] == 1 { 2 } else { 1 };
        cut.sort();
        let failures = certify_report(&r);
        assert!(!failures.is_empty());
        assert!(failures[0].message.contains("edge"), "{failures:?}");
    }

    #[test]
    fn wrong_k_is_caught() {
        let mut r = sample();
        r.family.k = 5;
        let failures = certify_report(&r);
        assert!(
            failures[0].message.contains("is not the 4reg k=5 member"),
            "{failures:?}"
        );
    }

    #[test]
    fn tampered_tau_is_caught() {
        let mut r = sample();
        r.computed_tau = Some(Ratio::integer(3));
        assert!(!certify_report(&r).is_empty());
    }

    #[test]
    fn missing_edge_certificate_is_caught() {
        let mut r = sample();
        r.witnesses.edges.pop();
        let failures = certify_report(&r);
        assert!(failures.iter().any(|f| f.message.contains("lack a certificate")));
    }

    #[test]
    fn malformed_files() {
        assert!(parse_report_file("{").is_err());
        assert!(parse_report_file(r#"{"format":"other","version":1,"reports":[]}"#).is_err());
        let ok = parse_report_file(r#"{"format":"toughlab-theorem-report","version":1,"reports":[]}"#).unwrap();
        assert!(certify_file(&ok).is_empty());
    }
}
