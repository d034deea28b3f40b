//! Acceptance suite. Each test covers one release criterion and prints a
//! pass line; run with `--nocapture` to see them:
//!
//! ```text
//! cargo test -p orthokit --test acceptance -- --nocapture
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orthokit::{
    all_ones, assemble_blocks, circulant_table, claim_check, classify, col_spectrum,
    cycled_family, determinant_check, doubling, formula_conformance, four_block, gram_cols,
    gram_rows, gram_structure_check, inner_product, juxtapose, kronecker, m_matrix,
    permutation_census, row_spectrum, sylvester, type_ii_table, IntMatrix, Label, MMatrixKind,
    SignMatrix, SignRule, Spectrum,
};

fn pass(criterion: u32, what: &str) {
    println!("[acceptance] criterion {criterion}: PASS - {what}");
}

fn h2() -> SignMatrix {
    sylvester(1).unwrap()
}

fn m2() -> SignMatrix {
    SignMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap()
}

/// Hand-entered zero-diagonal 4x4 fixture; its second row swaps the last
/// two entries relative to zero_diagonal(sylvester(2)).
fn conference_variant() -> SignMatrix {
    SignMatrix::from_rows(&[
        vec![0, 1, 1, 1],
        vec![1, 0, -1, 1],
        vec![1, 1, 0, -1],
        vec![1, -1, -1, 0],
    ])
    .unwrap()
}

/// Independent spectrum route used by the dual-oracle checks: read the
/// off-diagonals of the Gram matrix instead of looping over pairs.
fn spectrum_via_gram(m: &SignMatrix, rows: bool) -> Vec<i64> {
    let gram = if rows { gram_rows(m) } else { gram_cols(m) };
    let n = gram.rows();
    let mut values = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            values.push(gram.get(a, b));
        }
    }
    values.sort_unstable();
    values
}

fn assert_dual_oracle(m: &SignMatrix) {
    assert_eq!(
        row_spectrum(m).sorted_values(),
        spectrum_via_gram(m, true),
        "row spectrum disagrees with the Gram route"
    );
    assert_eq!(
        col_spectrum(m).sorted_values(),
        spectrum_via_gram(m, false),
        "column spectrum disagrees with the Gram route"
    );
}

#[test]
fn criterion_01_sylvester_orders_are_orthogonal() {
    let start = Instant::now();
    for k in 1..=4u32 {
        let n = 1usize << k;
        let h = sylvester(k).unwrap();
        assert_eq!(gram_rows(&h), IntMatrix::scaled_identity(n, n as i64));
        assert!(classify(&h).has(Label::Orthogonal), "order {n}");
        let det = determinant_check(&h).unwrap();
        assert!(det.scaled_unimodular, "order {n} determinant {}", det.determinant);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(1, "orders 2, 4, 8, 16 orthogonal with extremal determinants");
}

#[test]
fn criterion_02_ones_kron_h2_reproduction() {
    let m = kronecker(&all_ones(2), &h2());
    let expected = SignMatrix::from_rows(&[
        vec![1, 1, 1, 1],
        vec![1, -1, 1, -1],
        vec![1, 1, 1, 1],
        vec![1, -1, 1, -1],
    ])
    .unwrap();
    assert_eq!(m, expected, "kron output is not bit-identical");

    let hist = col_spectrum(&m).histogram();
    let expected_hist: BTreeMap<i64, usize> = [(0, 4), (4, 2)].into_iter().collect();
    assert_eq!(hist, expected_hist);

    let report = classify(&m);
    assert!(report.has(Label::QuasiA));
    assert_eq!(report.quasi_a_groups, Some(vec![vec![0, 2], vec![1, 3]]));
    pass(2, "ones(2) kron h(2) matches bit for bit, histogram {0:4, 4:2}, groups {1,3}/{2,4}");
}

#[test]
fn criterion_03_juxtaposition_reproduction() {
    let m = juxtapose(&[h2(), m2()]).unwrap();
    let expected = SignMatrix::from_rows(&[vec![1, 1, 1, -1], vec![1, -1, -1, 1]]).unwrap();
    assert_eq!(m, expected, "juxtaposed output is not bit-identical");

    let values = col_spectrum(&m).value_set();
    let expected_values: BTreeSet<i64> = [-2, 0, 2].into_iter().collect();
    assert_eq!(values, expected_values);

    let report = classify(&m);
    assert!(report.has(Label::SemiSplit));
    assert_eq!(report.semi_split_index, Some(2));
    pass(3, "h(2):m(2) matches bit for bit, values {-2, 0, 2}, split after column 2");
}

#[test]
fn criterion_04_conference_fixture_spectrum() {
    let m = conference_variant();
    let spectrum = col_spectrum(&m);
    for g in spectrum.values() {
        assert!(g.abs() == 0 || g.abs() == 2, "value {g}");
    }
    let nonzero: Vec<(usize, usize, i64)> = spectrum
        .pairs()
        .iter()
        .filter(|p| p.value != 0)
        .map(|p| (p.a + 1, p.b + 1, p.value))
        .collect();
    assert_eq!(nonzero, vec![(1, 3, -2), (2, 3, 2)]);

    // the grouping {1,4} / {2,3} that zero_diagonal(sylvester(2)) would
    // produce fails on this variant: columns 1 and 4 are orthogonal here,
    // and column 3 pairs non-orthogonally across that group boundary
    assert_eq!(spectrum.get(0, 3), Some(0));
    let report = classify(&m);
    assert_eq!(report.labels, vec![Label::Mixed]);
    let quasi_a = report
        .rejections
        .iter()
        .find(|r| r.label == Label::QuasiA)
        .expect("quasi-A rejection is recorded");
    assert!(!quasi_a.pairs.is_empty());

    // the sign-free value claim {0, 2} does hold
    assert!(claim_check(&[0, 2], &spectrum).matches);
    pass(4, "fixture has |g| in {0, 2}, nonzero pairs (1,3) -> -2 and (2,3) -> 2, grouping discrepancy recorded");
}

#[test]
fn criterion_05_repeated_block_gram_identities() {
    let check = gram_structure_check(&sylvester(2).unwrap(), 3).unwrap();
    assert!(check.row_identity);
    assert!(check.col_identity);
    assert_eq!(check.row_gram, IntMatrix::scaled_identity(4, 12));
    let expected_cols = IntMatrix::constant(3, 1).kronecker(&IntMatrix::scaled_identity(4, 4));
    assert_eq!(check.col_gram, expected_cols);
    pass(5, "DD^T = 12*I(4) and D^T D = ones(3) kron 4*I(4), exactly");
}

#[test]
fn criterion_06_circulant_assembly_values() {
    let fam = cycled_family(&sylvester(2).unwrap()).unwrap();
    let a = assemble_blocks(&circulant_table(4), &fam).unwrap();
    let values = row_spectrum(&a).value_set();
    let expected: BTreeSet<i64> = [0, 16].into_iter().collect();
    assert_eq!(values, expected, "both 0 and 16 must be attained");
    pass(6, "circulant assembly of order 4 yields exactly the values {0, 16}");
}

#[test]
fn criterion_07_type_ii_assembly_dual_oracle_and_verdict() {
    let fam = cycled_family(&sylvester(2).unwrap()).unwrap();
    let a = assemble_blocks(&type_ii_table(4).unwrap(), &fam).unwrap();
    assert_dual_oracle(&a);

    let spectrum = row_spectrum(&a);
    let expected_hist: BTreeMap<i64, usize> =
        [(0, 56), (4, 32), (8, 32)].into_iter().collect();
    assert_eq!(spectrum.histogram(), expected_hist);

    let check = claim_check(&[0, 4], &spectrum);
    assert!(!check.matches, "observed values exceed the claimed set");
    assert_eq!(check.observed, [0, 4, 8].into_iter().collect());
    pass(7, "both oracles agree; claimed {0, 4} vs observed {0, 4, 8}: verdict nonconforming, recorded");
}

#[test]
fn criterion_08_type_ii_conformance() {
    for n in [4usize, 6] {
        let report = formula_conformance(MMatrixKind::TypeII, n, SignRule::Parity).unwrap();
        assert!(report.all_conforming, "order {n}");
        for p in &report.pairs {
            assert_eq!(
                p.g.rem_euclid(4),
                (-(n as i64)).rem_euclid(4),
                "order {n} pair ({}, {})",
                p.a,
                p.b
            );
        }
    }

    let archive_dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    for n in [10usize, 12] {
        let report = formula_conformance(MMatrixKind::TypeII, n, SignRule::Parity).unwrap();
        let path = archive_dir.join(format!("conformance-type2-n{n}.txt"));
        std::fs::write(&path, report.render()).unwrap();
        assert!(path.exists());
    }
    pass(8, "type II conforms for n = 4, 6; reports archived for n = 10, 12");
}

#[test]
fn criterion_09_permutation_census() {
    let small = permutation_census(&h2(), 5).unwrap();
    assert_eq!(small.total_arrangements, 4);
    assert_eq!(small.distinct_count, 4);
    assert!(small.all_same_class);
    assert_eq!(small.class_labels, vec![Label::Orthogonal]);

    let start = Instant::now();
    let report = permutation_census(&sylvester(2).unwrap(), 5).unwrap();
    assert_eq!(report.total_arrangements, 576);
    assert!(report.all_same_class);
    assert_eq!(report.class_labels, vec![Label::Orthogonal]);

    // independent second enumeration
    let h4 = sylvester(2).unwrap();
    let mut seen: std::collections::HashSet<Vec<i8>> = std::collections::HashSet::new();
    for rp in (0..4usize).permutations(4) {
        for cp in (0..4usize).permutations(4) {
            seen.insert(h4.permuted(&rp, &cp).entries().to_vec());
        }
    }
    assert_eq!(report.distinct_count as usize, seen.len());

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    pass(9, "order-2 census is 4 of 4; order-4 census agrees across two enumerations");
}

fn random_pm_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> SignMatrix {
    let entries: Vec<i8> = (0..rows * cols)
        .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    SignMatrix::new(rows, cols, entries).unwrap()
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

/// Deterministic corpus shared by criteria 10 and 11.
fn metamorphic_corpus() -> Vec<SignMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut corpus = Vec::new();
    while corpus.len() < 220 {
        let rows = rng.gen_range(2..=8);
        let cols = rng.gen_range(2..=8);
        corpus.push(random_pm_matrix(&mut rng, rows, cols));
    }
    corpus
}

#[test]
fn criterion_10_metamorphic_suite() {
    let start = Instant::now();
    let corpus = metamorphic_corpus();
    assert!(corpus.len() >= 200);
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc0);

    for m in &corpus {
        let rows = m.rows();
        let cols = m.cols();
        let rs = row_spectrum(m);

        // juxtaposition additivity against a fresh partner
        let partner_cols = rng.gen_range(1..=4);
        let partner = random_pm_matrix(&mut rng, rows, partner_cols);
        let joined = juxtapose(&[m.clone(), partner.clone()]).unwrap();
        let ps = row_spectrum(&partner);
        for p in row_spectrum(&joined).pairs() {
            assert_eq!(
                p.value,
                rs.get(p.a, p.b).unwrap() + ps.get(p.a, p.b).unwrap()
            );
        }

        // doubling law: every g twice as 2g, plus rows^2 zeros
        let mut expected: Vec<i64> = rs.values().flat_map(|g| [2 * g, 2 * g]).collect();
        expected.extend(std::iter::repeat_n(0, rows * rows));
        expected.sort_unstable();
        assert_eq!(row_spectrum(&doubling(m)).sorted_values(), expected);

        // Kronecker mixed-product law against a small factor
        let factor_rows = rng.gen_range(1..=3);
        let factor_cols = rng.gen_range(1..=3);
        let factor = random_pm_matrix(&mut rng, factor_rows, factor_cols);
        let product = kronecker(m, &factor);
        let fr = factor.rows();
        for p in row_spectrum(&product).pairs() {
            let left = inner_product(m.row(p.a / fr), m.row(p.b / fr)).unwrap();
            let right = inner_product(factor.row(p.a % fr), factor.row(p.b % fr)).unwrap();
            assert_eq!(p.value, left * right);
        }

        // four-block identity
        assert_eq!(four_block(m), kronecker(&sylvester(2).unwrap(), m));
        assert_eq!(four_block(m), doubling(&doubling(m)));

        // permutation invariance of spectra and labels; SEMI_SPLIT is
        // checked against the given column order on purpose, so it and
        // the MIXED fallback are excluded for rectangular shapes
        let rp = random_permutation(&mut rng, rows);
        let cp = random_permutation(&mut rng, cols);
        let image = m.permuted(&rp, &cp);
        assert_eq!(row_spectrum(&image).sorted_values(), rs.sorted_values());
        assert_eq!(
            col_spectrum(&image).sorted_values(),
            col_spectrum(m).sorted_values()
        );
        let order_free = |labels: &[Label]| -> Vec<Label> {
            labels
                .iter()
                .copied()
                .filter(|l| !matches!(l, Label::SemiSplit | Label::Mixed))
                .collect()
        };
        if rows == cols {
            assert_eq!(classify(&image).labels, classify(m).labels);
        } else {
            assert_eq!(
                order_free(&classify(&image).labels),
                order_free(&classify(m).labels)
            );
        }

        // square equivalence and the rectangular obstruction
        if rows == cols {
            let target = IntMatrix::scaled_identity(rows, rows as i64);
            assert_eq!(gram_rows(m) == target, gram_cols(m) == target);
        }
        if rows < cols {
            assert!(col_spectrum(m).values().any(|g| g != 0));
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    pass(10, "220 random matrices, zero violations across all seven laws");
}

#[test]
fn criterion_11_dual_oracle_everywhere() {
    // named fixtures
    let fixtures: Vec<SignMatrix> = vec![
        sylvester(0).unwrap(),
        sylvester(1).unwrap(),
        sylvester(2).unwrap(),
        sylvester(3).unwrap(),
        all_ones(3),
        kronecker(&all_ones(2), &h2()),
        juxtapose(&[h2(), m2()]).unwrap(),
        conference_variant(),
        m_matrix(MMatrixKind::TypeII, 4, SignRule::Parity).unwrap(),
        m_matrix(MMatrixKind::TypeI, 5, SignRule::Parity).unwrap(),
        m_matrix(MMatrixKind::TypeIII, 6, SignRule::Parity).unwrap(),
        assemble_blocks(
            &circulant_table(4),
            &cycled_family(&sylvester(2).unwrap()).unwrap(),
        )
        .unwrap(),
        assemble_blocks(
            &type_ii_table(4).unwrap(),
            &cycled_family(&sylvester(2).unwrap()).unwrap(),
        )
        .unwrap(),
    ];
    for m in &fixtures {
        assert_dual_oracle(m);
    }

    // the same corpus as criterion 10
    for m in &metamorphic_corpus() {
        assert_dual_oracle(m);
    }
    pass(11, "pair-loop and Gram spectra agree on all fixtures and the random corpus");
}

#[test]
fn determinant_matches_an_independent_cofactor_expansion() {
    // cross-check the elimination route on small orders
    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        let mut acc = 0;
        for (j, &lead) in m[0].iter().enumerate() {
            if lead == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            acc += sign * lead * cofactor_det(&minor);
        }
        acc
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xdef);
    for _ in 0..40 {
        let n = rng.gen_range(1..=5);
        let entries: Vec<i8> = (0..n * n).map(|_| rng.gen_range(-1..=1)).collect();
        let m = SignMatrix::new(n, n, entries).unwrap();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|r| m.row(r).iter().map(|&v| v as i64).collect())
            .collect();
        let expected = BigInt::from(cofactor_det(&rows));
        assert_eq!(determinant_check(&m).unwrap().determinant, expected);
    }
}

#[test]
fn spectra_agree_with_a_recomputed_reference() {
    // a third, structurally different spectrum route: accumulate products
    // column by column instead of row by row
    fn reference_row_spectrum(m: &SignMatrix) -> Vec<i64> {
        let n = m.rows();
        let mut acc = vec![0i64; n * n];
        for c in 0..m.cols() {
            for a in 0..n {
                for b in 0..n {
                    acc[a * n + b] += m.get(a, c) as i64 * m.get(b, c) as i64;
                }
            }
        }
        let mut values = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                values.push(acc[a * n + b]);
            }
        }
        values.sort_unstable();
        values
    }

    for m in metamorphic_corpus().iter().take(50) {
        assert_eq!(row_spectrum(m).sorted_values(), reference_row_spectrum(m));
    }
    let spectrum: Spectrum = row_spectrum(&sylvester(3).unwrap());
    assert_eq!(
        spectrum.sorted_values(),
        reference_row_spectrum(&sylvester(3).unwrap())
    );
}
