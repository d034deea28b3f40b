//! Round-trip properties for the file format and the report documents.

use proptest::prelude::*;

use orthokit::SignMatrix;
use orthokit_cli::format::{parse_sign_matrix, serialize_sign_matrix};
use orthokit_cli::report::{classification_document, ReportDocument};

fn sign_matrix() -> impl Strategy<Value = SignMatrix> {
    (1..=9usize, 1..=9usize).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::sample::select(vec![-1i8, 0, 1]), r * c)
            .prop_map(move |entries| SignMatrix::new(r, c, entries).unwrap())
    })
}

proptest! {
    #[test]
    fn parse_inverts_serialize(m in sign_matrix()) {
        let text = serialize_sign_matrix(&m);
        prop_assert_eq!(parse_sign_matrix(&text).unwrap(), m);
    }

    /// Spaced bodies and explicit headers parse to the same matrix as the
    /// compact form.
    #[test]
    fn parse_accepts_equivalent_spellings(m in sign_matrix()) {
        let compact = serialize_sign_matrix(&m);
        let spaced: String = compact
            .lines()
            .map(|l| {
                let chars: Vec<String> = l.chars().map(|c| c.to_string()).collect();
                chars.join(" ") + "\n"
            })
            .collect();
        prop_assert_eq!(parse_sign_matrix(&spaced).unwrap(), m.clone());

        let headered = format!("{} {}\n{compact}", m.rows(), m.cols());
        prop_assert_eq!(parse_sign_matrix(&headered).unwrap(), m);
    }

    #[test]
    fn report_documents_round_trip(m in sign_matrix()) {
        let doc = classification_document(&m, &orthokit::spectrum_report(&m), None);
        let back: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
        prop_assert_eq!(back, doc);
    }
}
