//! Base matrix constructions: Sylvester doubling, all-ones blocks, modular
//! residue tables with sign mappings, and cyclically shifted families.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SignMatrix;

/// Largest exponent accepted by [`sylvester`]; order `2^10 = 1024`.
pub const MAX_SYLVESTER_EXPONENT: u32 = 10;

/// Sylvester-type matrix of order `2^k`: start from `(+1)` and apply the
/// doubling pattern `[A A; A -A]` k times. Zero-free, first row and first
/// column all `+1`, and `M * M^T = 2^k * I`.
pub fn sylvester(k: u32) -> Result<SignMatrix> {
    if k > MAX_SYLVESTER_EXPONENT {
        return Err(Error::OrderTooLarge {
            n: 1usize << k,
            max: 1usize << MAX_SYLVESTER_EXPONENT,
        });
    }
    let n = 1usize << k;
    let mut entries = vec![1i8; n * n];
    let mut size = 1;
    while size < n {
        for r in 0..size {
            for c in 0..size {
                let v = entries[r * n + c];
                entries[r * n + (c + size)] = v;
                entries[(r + size) * n + c] = v;
                entries[(r + size) * n + (c + size)] = -v;
            }
        }
        size *= 2;
    }
    SignMatrix::new(n, n, entries)
}

/// The `m x m` matrix of all `+1`.
pub fn all_ones(m: usize) -> SignMatrix {
    assert!(m >= 1, "order must be positive");
    SignMatrix::new(m, m, vec![1; m * m]).expect("all-ones entries are valid")
}

/// The three residue-table families. Each one fills an `n x n` table from
/// 1-based indices `i, j`:
///
/// * Type I: `(1 + (i-1)(j-1)) mod n`, requires `n` prime.
/// * Type II: `(i * j) mod (n+1)`, requires `n+1` prime.
/// * Type III: `(i + j) mod n`, any `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MMatrixKind {
    TypeI,
    TypeII,
    TypeIII,
}

impl MMatrixKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MMatrixKind::TypeI => "I",
            MMatrixKind::TypeII => "II",
            MMatrixKind::TypeIII => "III",
        }
    }
}

impl fmt::Display for MMatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rule mapping residues to signs.
///
/// * `Parity`: odd residues map to `+1`, even residues (including 0) to `-1`.
/// * `Threshold`: residues in `1..=ceil(n/2)` map to `+1`, all others
///   (including 0) to `-1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignRule {
    #[default]
    Parity,
    Threshold,
}

impl SignRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            SignRule::Parity => "parity",
            SignRule::Threshold => "threshold",
        }
    }

    fn apply(&self, residue: u64, n: usize) -> i8 {
        match self {
            SignRule::Parity => {
                if residue % 2 == 1 {
                    1
                } else {
                    -1
                }
            }
            SignRule::Threshold => {
                let cutoff = (n as u64).div_ceil(2);
                if residue >= 1 && residue <= cutoff {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

impl fmt::Display for SignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An `n x n` table of modular residues, the pre-sign stage of the
/// M-matrix constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueTable {
    kind: MMatrixKind,
    n: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl ResidueTable {
    pub fn kind(&self) -> MMatrixKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        assert!(row < self.n && col < self.n, "index out of bounds");
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Builds the residue table for the requested kind, checking the primality
/// condition first.
pub fn residue_table(kind: MMatrixKind, n: usize) -> Result<ResidueTable> {
    let ok = match kind {
        MMatrixKind::TypeI => is_prime(n as u64),
        MMatrixKind::TypeII => is_prime(n as u64 + 1),
        MMatrixKind::TypeIII => n >= 1,
    };
    if !ok {
        return Err(Error::PrimalityViolation { kind, n });
    }
    let modulus = match kind {
        MMatrixKind::TypeI | MMatrixKind::TypeIII => n as u64,
        MMatrixKind::TypeII => n as u64 + 1,
    };
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n as u128 {
        for j in 1..=n as u128 {
            let value = match kind {
                MMatrixKind::TypeI => (1 + (i - 1) * (j - 1)) % modulus as u128,
                MMatrixKind::TypeII => (i * j) % modulus as u128,
                MMatrixKind::TypeIII => (i + j) % modulus as u128,
            };
            entries.push(value as u64);
        }
    }
    Ok(ResidueTable {
        kind,
        n,
        modulus,
        entries,
    })
}

/// Applies a sign rule entrywise to a residue table.
pub fn sign_map(table: &ResidueTable, rule: SignRule) -> SignMatrix {
    let n = table.n();
    let entries = table
        .entries()
        .iter()
        .map(|&r| rule.apply(r, n))
        .collect();
    SignMatrix::new(n, n, entries).expect("sign rule produces valid entries")
}

/// `sign_map(residue_table(kind, n), rule)`.
pub fn m_matrix(kind: MMatrixKind, n: usize, rule: SignRule) -> Result<SignMatrix> {
    Ok(sign_map(&residue_table(kind, n)?, rule))
}

/// An ordered family of equally sized square matrices, indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFamily {
    members: Vec<SignMatrix>,
}

impl MatrixFamily {
    /// Builds a family from explicit members; all must share dimensions.
    pub fn new(members: Vec<SignMatrix>) -> Result<Self> {
        let first = members.first().ok_or(Error::NoOperands)?;
        let (rows, cols) = (first.rows(), first.cols());
        for m in &members {
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::OrderMismatch {
                    left_rows: rows,
                    left_cols: cols,
                    right_rows: m.rows(),
                    right_cols: m.cols(),
                });
            }
        }
        Ok(Self { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member by 1-based index.
    pub fn member(&self, index: usize) -> &SignMatrix {
        assert!(index >= 1 && index <= self.members.len(), "member index");
        &self.members[index - 1]
    }

    pub fn members(&self) -> &[SignMatrix] {
        &self.members
    }

    pub fn member_order(&self) -> usize {
        self.members[0].rows()
    }
}

/// The n matrices obtained from a square matrix by cyclic row shifts:
/// member 1 is the seed, and member i+1 shifts the rows of member i up by
/// one position.
pub fn cycled_family(h: &SignMatrix) -> Result<MatrixFamily> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let n = h.rows();
    let mut members = Vec::with_capacity(n);
    for shift in 0..n {
        let perm: Vec<usize> = (0..n).map(|r| (r + shift) % n).collect();
        let identity: Vec<usize> = (0..n).collect();
        members.push(h.permuted(&perm, &identity));
    }
    MatrixFamily::new(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{gram_rows, row_spectrum, IntMatrix};

    #[test]
    fn sylvester_base_cases() {
        let h1 = sylvester(0).unwrap();
        assert_eq!(h1.rows(), 1);
        assert_eq!(h1.get(0, 0), 1);

        let h2 = sylvester(1).unwrap();
        assert_eq!(h2.entries(), &[1, 1, 1, -1]);
    }

    #[test]
    fn sylvester_order_four() {
        let h4 = sylvester(2).unwrap();
        let expected = SignMatrix::from_rows(&[
            vec![1, 1, 1, 1],
            vec![1, -1, 1, -1],
            vec![1, 1, -1, -1],
            vec![1, -1, -1, 1],
        ])
        .unwrap();
        assert_eq!(h4, expected);
    }

    #[test]
    fn sylvester_structure_up_to_bound() {
        for k in 0..=6u32 {
            let h = sylvester(k).unwrap();
            let n = 1usize << k;
            assert!(h.is_zero_free());
            for i in 0..n {
                assert_eq!(h.get(0, i), 1);
                assert_eq!(h.get(i, 0), 1);
            }
            assert_eq!(gram_rows(&h), IntMatrix::scaled_identity(n, n as i64));
        }
    }

    #[test]
    fn sylvester_rejects_oversize_exponent() {
        assert!(matches!(
            sylvester(MAX_SYLVESTER_EXPONENT + 1),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn all_ones_fixtures() {
        assert_eq!(all_ones(2).entries(), &[1, 1, 1, 1]);
        assert_eq!(all_ones(1).entries(), &[1]);
        assert_eq!(row_spectrum(&all_ones(3)).sorted_values(), vec![3, 3, 3]);
    }

    #[test]
    fn residue_table_type_ii_order_four() {
        let t = residue_table(MMatrixKind::TypeII, 4).unwrap();
        assert_eq!(t.modulus(), 5);
        assert_eq!(
            t.entries(),
            &[1, 2, 3, 4, 2, 4, 1, 3, 3, 1, 4, 2, 4, 3, 2, 1]
        );
    }

    #[test]
    fn residue_table_type_i_order_three() {
        let t = residue_table(MMatrixKind::TypeI, 3).unwrap();
        assert_eq!(t.entries(), &[1, 1, 1, 1, 2, 0, 1, 0, 2]);
    }

    #[test]
    fn residue_table_type_iii_order_four() {
        let t = residue_table(MMatrixKind::TypeIII, 4).unwrap();
        assert_eq!(
            t.entries(),
            &[2, 3, 0, 1, 3, 0, 1, 2, 0, 1, 2, 3, 1, 2, 3, 0]
        );
    }

    #[test]
    fn residue_table_reports_violated_condition() {
        let err = residue_table(MMatrixKind::TypeI, 4).unwrap_err();
        assert_eq!(
            err,
            Error::PrimalityViolation {
                kind: MMatrixKind::TypeI,
                n: 4
            }
        );
        assert!(err.to_string().contains("n must be prime"));

        let err = residue_table(MMatrixKind::TypeII, 5).unwrap_err();
        assert!(err.to_string().contains("n+1 must be prime"));

        assert!(residue_table(MMatrixKind::TypeIII, 0).is_err());
    }

    #[test]
    fn residue_tables_are_symmetric() {
        for (kind, n) in [
            (MMatrixKind::TypeI, 5),
            (MMatrixKind::TypeI, 7),
            (MMatrixKind::TypeII, 4),
            (MMatrixKind::TypeII, 6),
            (MMatrixKind::TypeIII, 5),
            (MMatrixKind::TypeIII, 8),
        ] {
            let t = residue_table(kind, n).unwrap();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(t.get(i, j), t.get(j, i), "{kind:?} n={n} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn type_ii_rows_are_permutations() {
        for n in [2usize, 4, 6, 10] {
            let t = residue_table(MMatrixKind::TypeII, n).unwrap();
            for i in 0..n {
                let mut row: Vec<u64> = (0..n).map(|j| t.get(i, j)).collect();
                row.sort_unstable();
                let expected: Vec<u64> = (1..=n as u64).collect();
                assert_eq!(row, expected, "row {i} of order {n}");
            }
        }
    }

    #[test]
    fn parity_rule_fixtures() {
        let t = residue_table(MMatrixKind::TypeII, 4).unwrap();
        let m = sign_map(&t, SignRule::Parity);
        let expected = SignMatrix::from_rows(&[
            vec![1, -1, 1, -1],
            vec![-1, -1, 1, 1],
            vec![1, 1, -1, -1],
            vec![-1, 1, -1, 1],
        ])
        .unwrap();
        assert_eq!(m, expected);
        // 0 is even, so it maps to -1
        assert_eq!(SignRule::Parity.apply(0, 4), -1);
        assert_eq!(SignRule::Parity.apply(1, 4), 1);
    }

    #[test]
    fn threshold_rule_uses_half_range() {
        // n = 5: residues 1..=3 positive, 0 and 4 negative
        assert_eq!(SignRule::Threshold.apply(1, 5), 1);
        assert_eq!(SignRule::Threshold.apply(3, 5), 1);
        assert_eq!(SignRule::Threshold.apply(4, 5), -1);
        assert_eq!(SignRule::Threshold.apply(0, 5), -1);
    }

    #[test]
    fn m_matrix_type_ii_order_four_spectrum() {
        let m = m_matrix(MMatrixKind::TypeII, 4, SignRule::Parity).unwrap();
        assert_eq!(
            row_spectrum(&m).sorted_values(),
            vec![-4, -4, 0, 0, 0, 0]
        );
    }

    #[test]
    fn m_matrix_type_i_order_five_spectrum() {
        let m = m_matrix(MMatrixKind::TypeI, 5, SignRule::Parity).unwrap();
        for v in row_spectrum(&m).values() {
            assert!(v == 1 || v == -1, "unexpected value {v}");
        }
    }

    #[test]
    fn m_matrix_propagates_primality_errors() {
        assert!(matches!(
            m_matrix(MMatrixKind::TypeI, 4, SignRule::Parity),
            Err(Error::PrimalityViolation { .. })
        ));
    }

    #[test]
    fn cycled_family_first_member_is_seed() {
        let h4 = sylvester(2).unwrap();
        let fam = cycled_family(&h4).unwrap();
        assert_eq!(fam.len(), 4);
        assert_eq!(fam.member(1), &h4);
    }

    #[test]
    fn cycled_family_second_member_shifts_rows() {
        let h2 = sylvester(1).unwrap();
        let fam = cycled_family(&h2).unwrap();
        let expected = SignMatrix::from_rows(&[vec![1, -1], vec![1, 1]]).unwrap();
        assert_eq!(fam.member(2), &expected);
    }

    #[test]
    fn cycled_family_members_stay_orthogonal() {
        let h4 = sylvester(2).unwrap();
        let fam = cycled_family(&h4).unwrap();
        for m in fam.members() {
            assert_eq!(gram_rows(m), IntMatrix::scaled_identity(4, 4));
        }
    }

    #[test]
    fn cycled_family_members_share_row_spectrum() {
        let m = m_matrix(MMatrixKind::TypeII, 4, SignRule::Parity).unwrap();
        let fam = cycled_family(&m).unwrap();
        let base = row_spectrum(&m).sorted_values();
        for member in fam.members() {
            assert_eq!(row_spectrum(member).sorted_values(), base);
        }
    }

    #[test]
    fn cycled_family_rejects_rectangular() {
        let m = SignMatrix::new(1, 2, vec![1, 1]).unwrap();
        assert!(matches!(cycled_family(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn family_members_must_share_dimensions() {
        let a = sylvester(1).unwrap();
        let b = sylvester(0).unwrap();
        assert!(matches!(
            MatrixFamily::new(vec![a, b]),
            Err(Error::OrderMismatch { .. })
        ));
        assert!(matches!(MatrixFamily::new(vec![]), Err(Error::NoOperands)));
    }

    #[test]
    fn primality_helper() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(!is_prime(15));
    }
}
