//! Report documents: the stable JSON/CSV surface of the harness.
//!
//! Key order is fixed by struct field order, rationals travel as
//! numerator/denominator pairs, and absent values are `null`, so a given
//! input always serializes to identical bytes.

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundReport, ProofChainReport, Rational, StepId, StepStatus};
use crate::clique::HandshakingReport;

fn to_i64(x: i128, what: &str) -> i64 {
    i64::try_from(x).unwrap_or_else(|_| panic!("{what} {x} does not fit the report range"))
}

fn rational_parts(r: &Rational, what: &str) -> (i64, i64) {
    (to_i64(*r.numer(), what), to_i64(*r.denom(), what))
}

/// What a finding witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    /// An eligible graph broke a Mantel-type bound.
    BoundViolation,
    /// A proof-chain step failed on an eligible graph.
    StepViolation,
    /// An identity that must always hold came out unequal, which means
    /// an engine defect rather than a mathematical discovery.
    IdentityViolation,
}

/// A reproducible violation witness. The graph6 string decodes to a
/// graph on which re-running the named check fails again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub kind: FindingKind,
    /// graph6 of the witness graph.
    pub graph: String,
    pub k: usize,
    /// Step id for step violations, `null` otherwise.
    pub step: Option<String>,
    pub lhs_num: i64,
    pub lhs_den: i64,
    pub rhs_num: i64,
    pub rhs_den: i64,
}

impl Finding {
    pub fn new(
        kind: FindingKind,
        graph: String,
        k: usize,
        step: Option<StepId>,
        lhs: Rational,
        rhs: Rational,
    ) -> Self {
        let (lhs_num, lhs_den) = rational_parts(&lhs, "finding lhs");
        let (rhs_num, rhs_den) = rational_parts(&rhs, "finding rhs");
        Self {
            kind,
            graph,
            k,
            step: step.map(|s| s.to_string()),
            lhs_num,
            lhs_den,
            rhs_num,
            rhs_den,
        }
    }

    /// Canonical report order: witness string first, then the rest.
    pub fn sort_key(&self) -> (String, FindingKind, usize, Option<String>) {
        (self.graph.clone(), self.kind, self.k, self.step.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandshakeRow {
    pub k: usize,
    pub sum: u64,
    pub rhs: u64,
    pub equal: bool,
}

impl From<&HandshakingReport> for HandshakeRow {
    fn from(r: &HandshakingReport) -> Self {
        Self {
            k: r.k,
            sum: r.value_sum,
            rhs: r.rhs,
            equal: r.equal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: usize,
    pub eligible: bool,
    pub lhs: u64,
    pub rhs_num: i64,
    pub rhs_den: i64,
    pub holds: Option<bool>,
    pub slack_num: Option<i64>,
    pub slack_den: Option<i64>,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        let (rhs_num, rhs_den) = rational_parts(&r.rhs, "bound rhs");
        let slack = r.slack.as_ref().map(|s| rational_parts(s, "bound slack"));
        Self {
            k: r.k,
            eligible: r.eligible,
            lhs: r.lhs,
            rhs_num,
            rhs_den,
            holds: r.holds,
            slack_num: slack.map(|p| p.0),
            slack_den: slack.map(|p| p.1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRow {
    pub id: String,
    /// `null` encodes an unknown verdict (packing not proven optimal).
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDoc {
    pub k: usize,
    #[serde(rename = "A_size")]
    pub a_size: usize,
    #[serde(rename = "B_size")]
    pub b_size: usize,
    pub steps: Vec<StepRow>,
}

impl From<&ProofChainReport> for ChainDoc {
    fn from(r: &ProofChainReport) -> Self {
        Self {
            k: r.k,
            a_size: r.a_size,
            b_size: r.b_size,
            steps: r
                .steps
                .iter()
                .map(|s| StepRow {
                    id: s.id.to_string(),
                    holds: match s.status {
                        StepStatus::Holds => Some(true),
                        StepStatus::Fails => Some(false),
                        StepStatus::Unknown => None,
                    },
                })
                .collect(),
        }
    }
}

/// Single-graph report emitted by the analyze command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeDoc {
    pub graph6: String,
    pub census: Vec<u64>,
    pub handshaking: Vec<HandshakeRow>,
    pub bounds: Vec<BoundRow>,
    pub chain: Option<ChainDoc>,
    pub findings: Vec<Finding>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

/// Multi-suite summary emitted by the verify command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub suites: Vec<SuiteRow>,
    pub findings: Vec<Finding>,
}

/// Sampling summary emitted by the hunt command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntDoc {
    pub samples: u64,
    pub eligible: u64,
    pub findings: Vec<Finding>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report types always serialize");
    s.push('\n');
    s
}

pub fn parse_analyze(s: &str) -> Result<AnalyzeDoc, serde_json::Error> {
    serde_json::from_str(s)
}

fn csv_opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn findings_csv(out: &mut String, findings: &[Finding]) {
    out.push_str("kind,graph,k,step,lhs_num,lhs_den,rhs_num,rhs_den\n");
    for f in findings {
        let kind = match f.kind {
            FindingKind::BoundViolation => "bound_violation",
            FindingKind::StepViolation => "step_violation",
            FindingKind::IdentityViolation => "identity_violation",
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            kind,
            f.graph,
            f.k,
            csv_opt(&f.step),
            f.lhs_num,
            f.lhs_den,
            f.rhs_num,
            f.rhs_den
        ));
    }
}

/// CSV flattens the bounds table; findings follow when present.
pub fn analyze_csv(doc: &AnalyzeDoc) -> String {
    let mut out = String::from("k,eligible,lhs,rhs_num,rhs_den,holds,slack_num,slack_den\n");
    for b in &doc.bounds {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            b.k,
            b.eligible,
            b.lhs,
            b.rhs_num,
            b.rhs_den,
            csv_opt(&b.holds),
            csv_opt(&b.slack_num),
            csv_opt(&b.slack_den)
        ));
    }
    if !doc.findings.is_empty() {
        out.push('\n');
        findings_csv(&mut out, &doc.findings);
    }
    out
}

pub fn verify_csv(doc: &VerifyDoc) -> String {
    let mut out = String::from("suite,cases,failures\n");
    for s in &doc.suites {
        out.push_str(&format!("{},{},{}\n", s.name, s.cases, s.failures));
    }
    if !doc.findings.is_empty() {
        out.push('\n');
        findings_csv(&mut out, &doc.findings);
    }
    out
}

pub fn hunt_csv(doc: &HuntDoc) -> String {
    let mut out = String::new();
    findings_csv(&mut out, &doc.findings);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::check_clique_mantel;
    use crate::clique::verify_handshaking;
    use crate::generators;
    use crate::graph6;

    #[test]
    fn bound_row_matches_fixed_shape() {
        let g = generators::complete_bipartite(3, 3);
        let row = BoundRow::from(&check_clique_mantel(&g, 1).unwrap());
        let json = serde_json::to_string(&row).unwrap();
        assert_eq!(
            json,
            "{\"k\":1,\"eligible\":true,\"lhs\":9,\"rhs_num\":9,\"rhs_den\":1,\
             \"holds\":true,\"slack_num\":0,\"slack_den\":1}"
        );

        let c5 = generators::cycle(5).unwrap();
        let row = BoundRow::from(&check_clique_mantel(&c5, 1).unwrap());
        assert_eq!((row.slack_num, row.slack_den), (Some(5), Some(4)));

        let k3 = generators::complete(3);
        let row = BoundRow::from(&check_clique_mantel(&k3, 1).unwrap());
        assert!(!row.eligible);
        assert_eq!(
            (row.holds, row.slack_num, row.slack_den),
            (None, None, None)
        );
    }

    #[test]
    fn analyze_doc_round_trips() {
        let g = generators::book(3).unwrap();
        let doc = AnalyzeDoc {
            graph6: graph6::encode(&g).unwrap(),
            census: vec![5, 7, 3],
            handshaking: vec![HandshakeRow::from(&verify_handshaking(&g, 2).unwrap())],
            bounds: vec![BoundRow::from(&check_clique_mantel(&g, 2).unwrap())],
            chain: None,
            findings: vec![Finding::new(
                FindingKind::StepViolation,
                graph6::encode(&g).unwrap(),
                2,
                Some(crate::bounds::StepId::S1),
                Rational::from_integer(3),
                Rational::from_integer(2),
            )],
        };
        let json = to_json(&doc);
        let back = parse_analyze(&json).unwrap();
        assert_eq!(back, doc);
        // Stable key order at the top level.
        let graph6_pos = json.find("\"graph6\"").unwrap();
        let census_pos = json.find("\"census\"").unwrap();
        let findings_pos = json.find("\"findings\"").unwrap();
        assert!(graph6_pos < census_pos && census_pos < findings_pos);
    }

    #[test]
    fn csv_shapes() {
        let g1 = crate::Graph::from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let doc = AnalyzeDoc {
            graph6: graph6::encode(&g1).unwrap(),
            census: vec![4, 4, 1],
            handshaking: vec![],
            bounds: vec![
                BoundRow::from(&check_clique_mantel(&g1, 1).unwrap()),
                BoundRow::from(&check_clique_mantel(&g1, 2).unwrap()),
            ],
            chain: None,
            findings: vec![],
        };
        let csv = analyze_csv(&doc);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "k,eligible,lhs,rhs_num,rhs_den,holds,slack_num,slack_den"
        );
        assert_eq!(lines[1], "1,false,4,4,1,,,");
        assert_eq!(lines[2], "2,true,1,2,1,true,1,1");
    }

    #[test]
    fn finding_serialization_uses_snake_case_and_null_step() {
        let f = Finding::new(
            FindingKind::IdentityViolation,
            "C~".to_string(),
            2,
            None,
            Rational::from_integer(1),
            Rational::from_integer(2),
        );
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"kind\":\"identity_violation\""));
        assert!(json.contains("\"step\":null"));
    }
}
