//! Machine-readable report documents.
//!
//! Reports serialize to JSON with a fixed key order and sorted histogram
//! keys, so identical inputs produce byte-identical output. Indices in
//! reports are 1-based.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use orthokit::{
    CensusReport, ConformanceReport, GramCheck, IntMatrix, SignMatrix, SplitWitness,
    SpectrumReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimensions {
    pub rows: usize,
    pub cols: usize,
}

/// One pair with its product, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub a: usize,
    pub b: usize,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub label: String,
    pub reason: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub pairs: Vec<PairEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiBGroups {
    pub groups: Vec<Vec<usize>>,
    pub constant: i64,
}

/// Result of the optional subset search: present only when requested,
/// with `found` false when no split exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveSplit {
    pub found: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub orthogonal: Vec<usize>,
    #[serde(rename = "nonOrthogonal", skip_serializing_if = "Vec::is_empty", default)]
    pub non_orthogonal: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Groupings {
    #[serde(rename = "quasiAGroups", skip_serializing_if = "Option::is_none", default)]
    pub quasi_a_groups: Option<Vec<Vec<usize>>>,
    #[serde(rename = "quasiBGroups", skip_serializing_if = "Option::is_none", default)]
    pub quasi_b_groups: Option<QuasiBGroups>,
    #[serde(rename = "semiSplitIndex", skip_serializing_if = "Option::is_none", default)]
    pub semi_split_index: Option<usize>,
    #[serde(rename = "exhaustiveSplit", skip_serializing_if = "Option::is_none", default)]
    pub exhaustive_split: Option<ExhaustiveSplit>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<WitnessEntry>,
}

/// One claimed-versus-observed entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConformanceEntry {
    pub claimed: String,
    pub observed: Value,
    pub verdict: String,
    #[serde(rename = "kWitnesses", skip_serializing_if = "Vec::is_empty", default)]
    pub k_witnesses: Vec<KWitness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub violations: Vec<PairEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KWitness {
    pub a: usize,
    pub b: usize,
    pub g: i64,
    pub k: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub order: usize,
    #[serde(rename = "totalArrangements")]
    pub total_arrangements: u64,
    #[serde(rename = "distinctCount")]
    pub distinct_count: u64,
    #[serde(rename = "allSameClass")]
    pub all_same_class: bool,
}

/// The report tree shared by the classify and verify commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub dimensions: Dimensions,
    #[serde(
        rename = "rowSpectrumHistogram",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub row_spectrum_histogram: Option<BTreeMap<i64, usize>>,
    #[serde(
        rename = "colSpectrumHistogram",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub col_spectrum_histogram: Option<BTreeMap<i64, usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub groupings: Option<Groupings>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conformance: Option<Vec<ConformanceEntry>>,
    #[serde(rename = "censusCounts", skip_serializing_if = "Option::is_none", default)]
    pub census_counts: Option<CensusCounts>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn one_based(groups: &[Vec<usize>]) -> Vec<Vec<usize>> {
    groups
        .iter()
        .map(|g| g.iter().map(|&c| c + 1).collect())
        .collect()
}

fn int_matrix_value(m: &IntMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            let row: Vec<i64> = (0..m.cols()).map(|c| m.get(r, c)).collect();
            json!(row)
        })
        .collect();
    Value::Array(rows)
}

fn verdict(ok: bool) -> String {
    if ok { "conforming" } else { "nonconforming" }.to_string()
}

/// Classification report for a matrix, with optional exhaustive-split
/// result.
pub fn classification_document(
    m: &SignMatrix,
    report: &SpectrumReport,
    exhaustive: Option<&Option<SplitWitness>>,
) -> ReportDocument {
    let classification = &report.classification;
    let witnesses = classification
        .rejections
        .iter()
        .map(|r| WitnessEntry {
            label: r.label.as_str().to_string(),
            reason: r.reason.clone(),
            pairs: r
                .pairs
                .iter()
                .map(|p| PairEntry {
                    a: p.a + 1,
                    b: p.b + 1,
                    value: p.value,
                })
                .collect(),
        })
        .collect();
    let groupings = Groupings {
        quasi_a_groups: classification.quasi_a_groups.as_deref().map(one_based),
        quasi_b_groups: classification.quasi_b.as_ref().map(|q| QuasiBGroups {
            groups: one_based(&q.groups),
            constant: q.constant,
        }),
        semi_split_index: classification.semi_split_index,
        exhaustive_split: exhaustive.map(|outcome| match outcome {
            Some(w) => ExhaustiveSplit {
                found: true,
                orthogonal: w.orthogonal.iter().map(|&c| c + 1).collect(),
                non_orthogonal: w.non_orthogonal.iter().map(|&c| c + 1).collect(),
            },
            None => ExhaustiveSplit {
                found: false,
                orthogonal: Vec::new(),
                non_orthogonal: Vec::new(),
            },
        }),
        witnesses,
    };
    ReportDocument {
        dimensions: Dimensions {
            rows: m.rows(),
            cols: m.cols(),
        },
        row_spectrum_histogram: Some(report.row_spectrum.histogram()),
        col_spectrum_histogram: Some(report.col_spectrum.histogram()),
        labels: classification
            .labels
            .iter()
            .map(|l| l.as_str().to_string())
            .collect(),
        groupings: Some(groupings),
        conformance: None,
        census_counts: None,
    }
}

/// Report for an M-matrix conformance run.
pub fn conformance_document(report: &ConformanceReport) -> ReportDocument {
    let histogram = report.observed.histogram();
    let entry = ConformanceEntry {
        claimed: format!("{} with integer k >= 0, tested on |g|", report.claimed_form),
        observed: json!(histogram),
        verdict: verdict(report.all_conforming),
        k_witnesses: report
            .pairs
            .iter()
            .filter(|p| p.conforming)
            .map(|p| KWitness {
                a: p.a + 1,
                b: p.b + 1,
                g: p.g,
                k: p.k.expect("conforming pairs carry k"),
            })
            .collect(),
        violations: report
            .pairs
            .iter()
            .filter(|p| !p.conforming)
            .map(|p| PairEntry {
                a: p.a + 1,
                b: p.b + 1,
                value: p.g,
            })
            .collect(),
        note: report.sign_sensitive.then(|| {
            "odd order: the absolute-value congruence admits only one of the two odd residues"
                .to_string()
        }),
    };
    ReportDocument {
        dimensions: Dimensions {
            rows: report.n,
            cols: report.n,
        },
        row_spectrum_histogram: Some(histogram),
        col_spectrum_histogram: None,
        labels: Vec::new(),
        groupings: None,
        conformance: Some(vec![entry]),
        census_counts: None,
    }
}

/// Report for the repeated-block Gram identities.
pub fn gram_document(check: &GramCheck) -> ReportDocument {
    let entries = vec![
        ConformanceEntry {
            claimed: format!("D * D^T = {} * I({})", check.m * check.n, check.n),
            observed: int_matrix_value(&check.row_gram),
            verdict: verdict(check.row_identity),
            k_witnesses: Vec::new(),
            violations: Vec::new(),
            note: None,
        },
        ConformanceEntry {
            claimed: format!(
                "D^T * D = ones({}) kron {} * I({})",
                check.m, check.n, check.n
            ),
            observed: int_matrix_value(&check.col_gram),
            verdict: verdict(check.col_identity),
            k_witnesses: Vec::new(),
            violations: Vec::new(),
            note: None,
        },
    ];
    ReportDocument {
        dimensions: Dimensions {
            rows: check.n,
            cols: check.m * check.n,
        },
        row_spectrum_histogram: None,
        col_spectrum_histogram: None,
        labels: Vec::new(),
        groupings: None,
        conformance: Some(entries),
        census_counts: None,
    }
}

/// Report for a permutation census.
pub fn census_document(report: &CensusReport) -> ReportDocument {
    ReportDocument {
        dimensions: Dimensions {
            rows: report.n,
            cols: report.n,
        },
        row_spectrum_histogram: None,
        col_spectrum_histogram: None,
        labels: report
            .class_labels
            .iter()
            .map(|l| l.as_str().to_string())
            .collect(),
        groupings: None,
        conformance: None,
        census_counts: Some(CensusCounts {
            order: report.n,
            total_arrangements: u64::try_from(report.total_arrangements)
                .expect("enumerable arrangement counts fit in u64"),
            distinct_count: report.distinct_count,
            all_same_class: report.all_same_class,
        }),
    }
}

/// Report for the order condition.
pub fn order_document(n: usize, ok: bool) -> ReportDocument {
    ReportDocument {
        dimensions: Dimensions { rows: n, cols: n },
        row_spectrum_histogram: None,
        col_spectrum_histogram: None,
        labels: Vec::new(),
        groupings: None,
        conformance: Some(vec![ConformanceEntry {
            claimed: "n = 1, n = 2, or n ≡ 0 (mod 4)".to_string(),
            observed: json!(n),
            verdict: verdict(ok),
            k_witnesses: Vec::new(),
            violations: Vec::new(),
            note: None,
        }]),
        census_counts: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthokit::{all_ones, kronecker, spectrum_report, sylvester};

    #[test]
    fn classification_document_uses_one_based_groups() {
        let m = kronecker(&all_ones(2), &sylvester(1).unwrap());
        let doc = classification_document(&m, &spectrum_report(&m), None);
        assert_eq!(doc.labels, vec!["QUASI_A", "QUASI_B"]);
        let groupings = doc.groupings.unwrap();
        assert_eq!(
            groupings.quasi_a_groups,
            Some(vec![vec![1, 3], vec![2, 4]])
        );
    }

    #[test]
    fn documents_round_trip_through_json() {
        let m = kronecker(&all_ones(2), &sylvester(1).unwrap());
        let doc = classification_document(&m, &spectrum_report(&m), None);
        let json = doc.to_json();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn serialization_is_deterministic() {
        let m = sylvester(2).unwrap();
        let a = classification_document(&m, &spectrum_report(&m), None).to_json();
        let b = classification_document(&m, &spectrum_report(&m), None).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn histogram_keys_serialize_as_signed_integers() {
        let m = orthokit::m_matrix(
            orthokit::MMatrixKind::TypeII,
            4,
            orthokit::SignRule::Parity,
        )
        .unwrap();
        let doc = classification_document(&m, &spectrum_report(&m), None);
        let json = doc.to_json();
        assert!(json.contains("\"-4\""));
    }
}
