//! Verification engine: residue-family conformance checks, repeated-block
//! Gram identities, permutation census, the Hadamard order condition,
//! exact determinants, and claim-versus-observed reports.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::classify::{classify, ClassificationReport, Label};
use crate::compose::juxtapose;
use crate::error::{Error, Result};
use crate::generators::{m_matrix, MMatrixKind, SignRule};
use crate::matrix::{
    col_spectrum, gram_cols, gram_rows, row_spectrum, IntMatrix, SignMatrix, Spectrum,
};

/// One row pair checked against the applicable value family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConformancePair {
    pub a: usize,
    pub b: usize,
    /// Signed observed value.
    pub g: i64,
    pub abs_g: i64,
    /// The solved parameter with `|g| = 4k + offset - n`, when one exists.
    pub k: Option<i64>,
    pub conforming: bool,
}

/// Conformance of an M-matrix spectrum against its value family
/// `|g| = 4k + offset - n` with `offset` 2 (Type I), 0 (Type II and
/// Type III with even n), or -2 (Type III with odd n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformanceReport {
    pub kind: MMatrixKind,
    pub n: usize,
    pub rule: SignRule,
    pub claimed_form: String,
    pub offset: i64,
    pub observed: Spectrum,
    pub pairs: Vec<ConformancePair>,
    pub all_conforming: bool,
    /// For odd `n` every value is odd and a sign flip moves `|g|` between
    /// the two odd residues mod 4, so the absolute-value test is weak.
    pub sign_sensitive: bool,
}

impl ConformanceReport {
    /// Plain-text rendering for archiving.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "conformance: type {} order {} rule {}\n",
            self.kind, self.n, self.rule
        ));
        out.push_str(&format!("claimed form: {}\n", self.claimed_form));
        out.push_str(&format!(
            "verdict: {}\n",
            if self.all_conforming {
                "conforming"
            } else {
                "nonconforming"
            }
        ));
        if self.sign_sensitive {
            out.push_str("note: odd order, absolute-value congruence test is weak\n");
        }
        for p in &self.pairs {
            out.push_str(&format!(
                "pair ({}, {}): g = {}, |g| = {}, k = {}, {}\n",
                p.a + 1,
                p.b + 1,
                p.g,
                p.abs_g,
                p.k.map_or("none".to_string(), |k| k.to_string()),
                if p.conforming { "ok" } else { "violates" }
            ));
        }
        out
    }
}

fn formula_offset(kind: MMatrixKind, n: usize) -> i64 {
    match kind {
        MMatrixKind::TypeI => 2,
        MMatrixKind::TypeII => 0,
        MMatrixKind::TypeIII => {
            if n % 2 == 1 {
                -2
            } else {
                0
            }
        }
    }
}

fn claimed_form(kind: MMatrixKind, n: usize) -> String {
    match kind {
        MMatrixKind::TypeI => "g = 4k + 2 - n".to_string(),
        MMatrixKind::TypeII => "g = 4k - n".to_string(),
        MMatrixKind::TypeIII => {
            if n % 2 == 1 {
                "g = 4k - 2 - n".to_string()
            } else {
                "g = 4k - n (even order, as in Type II)".to_string()
            }
        }
    }
}

/// Builds the M-matrix, computes its row spectrum, and tests every pair
/// value against the family for its kind, solving for the parameter `k`.
pub fn formula_conformance(
    kind: MMatrixKind,
    n: usize,
    rule: SignRule,
) -> Result<ConformanceReport> {
    let m = m_matrix(kind, n, rule)?;
    let observed = row_spectrum(&m);
    let offset = formula_offset(kind, n);
    let mut pairs = Vec::with_capacity(observed.len());
    let mut all_conforming = true;
    for p in observed.pairs() {
        let abs_g = p.value.abs();
        let numerator = abs_g + n as i64 - offset;
        let (k, conforming) = if numerator % 4 == 0 && numerator >= 0 {
            (Some(numerator / 4), true)
        } else {
            (None, false)
        };
        all_conforming &= conforming;
        pairs.push(ConformancePair {
            a: p.a,
            b: p.b,
            g: p.value,
            abs_g,
            k,
            conforming,
        });
    }
    Ok(ConformanceReport {
        kind,
        n,
        rule,
        claimed_form: claimed_form(kind, n),
        offset,
        observed,
        pairs,
        all_conforming,
        sign_sensitive: n % 2 == 1,
    })
}

/// Result of checking the repeated-block identities for `D = [H : ... : H]`
/// (`m` copies): `D D^T = m n I` and `D^T D = ones(m) (x) n I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramCheck {
    pub n: usize,
    pub m: usize,
    pub row_identity: bool,
    pub col_identity: bool,
    pub holds: bool,
    pub row_gram: IntMatrix,
    pub col_gram: IntMatrix,
}

/// Verifies both repeated-block Gram identities exactly. They hold if and
/// only if the square seed is orthogonal in the scaled sense.
pub fn gram_structure_check(h: &SignMatrix, m: usize) -> Result<GramCheck> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    assert!(m >= 1, "repetition count must be positive");
    let n = h.rows();
    let d = juxtapose(&vec![h.clone(); m]).expect("copies share the row count");
    let row_gram = gram_rows(&d);
    let col_gram = gram_cols(&d);
    let row_expected = IntMatrix::scaled_identity(n, (m * n) as i64);
    let col_expected = IntMatrix::constant(m, 1).kronecker(&IntMatrix::scaled_identity(n, n as i64));
    let row_identity = row_gram == row_expected;
    let col_identity = col_gram == col_expected;
    Ok(GramCheck {
        n,
        m,
        row_identity,
        col_identity,
        holds: row_identity && col_identity,
        row_gram,
        col_gram,
    })
}

/// Default order bound for [`permutation_census`]; `(5!)^2 = 14400`
/// arrangements.
pub const DEFAULT_MAX_CENSUS_ORDER: usize = 5;

/// Outcome of enumerating every row-and-column permutation image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    /// `(n!)^2`, the number of enumerated arrangements.
    pub total_arrangements: u128,
    /// Number of distinct matrices among the images.
    pub distinct_count: u64,
    /// Whether every image classifies with the same labels as the seed.
    pub all_same_class: bool,
    /// The seed's labels.
    pub class_labels: Vec<Label>,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All permutations of `0..n` by Heap's algorithm, in its native order.
fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut stack = vec![0usize; n];
    out.push(items.clone());
    let mut i = 0;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(stack[i], i);
            }
            out.push(items.clone());
            stack[i] += 1;
            i = 0;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    out
}

/// Enumerates all `(n!)^2` row-times-column permutation images of a square
/// matrix, counting distinct images and verifying that every image keeps
/// the seed's classification labels.
pub fn permutation_census(m: &SignMatrix, max_order: usize) -> Result<CensusReport> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n > max_order {
        return Err(Error::OrderTooLarge { n, max: max_order });
    }
    let base_labels = classify(m).labels;
    let perms = heap_permutations(n);
    let mut distinct: std::collections::HashSet<Vec<i8>> = std::collections::HashSet::new();
    let mut all_same_class = true;
    for rp in &perms {
        for cp in &perms {
            let image = m.permuted(rp, cp);
            if classify(&image).labels != base_labels {
                all_same_class = false;
            }
            distinct.insert(image.entries().to_vec());
        }
    }
    Ok(CensusReport {
        n,
        total_arrangements: factorial(n) * factorial(n),
        distinct_count: distinct.len() as u64,
        all_same_class,
        class_labels: base_labels,
    })
}

/// Necessary order condition for a zero-free orthogonal sign matrix:
/// `n` is 1, 2, or divisible by 4. Sufficiency is not checked.
pub fn hadamard_order_guard(n: usize) -> bool {
    n == 1 || n == 2 || (n >= 4 && n.is_multiple_of(4))
}

/// Exact determinant plus the scaled unimodularity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantCheck {
    pub determinant: BigInt,
    /// `det^2 = n^n`, the integer form of `|det(M / sqrt(n))| = 1`.
    pub scaled_unimodular: bool,
}

/// Bareiss fraction-free elimination over exact integers.
fn bareiss_determinant(m: &SignMatrix) -> BigInt {
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| (0..n).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k] == BigInt::from(0) {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != BigInt::from(0)) else {
                return BigInt::from(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone() * sign
}

/// Exact integer determinant via fraction-free elimination, alongside the
/// check `det^2 = n^n`.
pub fn determinant_check(m: &SignMatrix) -> Result<DeterminantCheck> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let determinant = bareiss_determinant(m);
    let bound = BigInt::from(n).pow(n as u32);
    let scaled_unimodular = &determinant * &determinant == bound;
    Ok(DeterminantCheck {
        determinant,
        scaled_unimodular,
    })
}

/// Spectra plus classification in one value, for report assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub rows: usize,
    pub cols: usize,
    pub row_spectrum: Spectrum,
    pub col_spectrum: Spectrum,
    pub classification: ClassificationReport,
}

pub fn spectrum_report(m: &SignMatrix) -> SpectrumReport {
    SpectrumReport {
        rows: m.rows(),
        cols: m.cols(),
        row_spectrum: row_spectrum(m),
        col_spectrum: col_spectrum(m),
        classification: classify(m),
    }
}

/// Comparison of a claimed value set against an observed spectrum.
///
/// Claims in this domain are usually stated sign-free, so the verdict
/// compares absolute value sets; the observed signed set is kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub claimed: BTreeSet<i64>,
    pub observed: BTreeSet<i64>,
    pub matches: bool,
}

pub fn claim_check(claimed_values: &[i64], observed: &Spectrum) -> ClaimCheck {
    let claimed: BTreeSet<i64> = claimed_values.iter().copied().collect();
    let observed_set = observed.value_set();
    let claimed_abs: BTreeSet<i64> = claimed.iter().map(|v| v.abs()).collect();
    let observed_abs: BTreeSet<i64> = observed_set.iter().map(|v| v.abs()).collect();
    ClaimCheck {
        claimed,
        observed: observed_set,
        matches: claimed_abs == observed_abs,
    }
}
