//! Sign matrices, pair inner products, spectra, and Gram matrices.
//!
//! A [`SignMatrix`] is a dense rectangular matrix over `{-1, 0, +1}`. All
//! arithmetic is exact: inner products and Gram entries are `i64`, and the
//! two spectrum routines ([`row_spectrum`], [`col_spectrum`]) enumerate
//! every unordered pair of rows or columns in lexicographic order.
//!
//! Gram matrices are computed by an independent code path (plain matrix
//! multiplication) so that spectra and Gram off-diagonals can be checked
//! against each other.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Dense rectangular matrix with entries in `{-1, 0, +1}`.
///
/// Row-major storage, zero-based indexing. Immutable after construction;
/// every operation on it is a pure function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    /// Builds a matrix from row-major entries, validating dimensions and
    /// the `{-1, 0, +1}` alphabet.
    pub fn new(rows: usize, cols: usize, entries: Vec<i8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                found: entries.len(),
            });
        }
        for (idx, &v) in entries.iter().enumerate() {
            if !matches!(v, -1..=1) {
                return Err(Error::InvalidEntry {
                    row: idx / cols,
                    col: idx % cols,
                    value: v as i64,
                });
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a slice of equal-length rows.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = rows[0].len();
        for (index, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RowCountMismatch {
                    index,
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        let entries = rows.iter().flatten().copied().collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[i8] {
        assert!(row < self.rows, "row index out of bounds");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<i8> {
        assert!(col < self.cols, "column index out of bounds");
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// True when no entry is zero.
    pub fn is_zero_free(&self) -> bool {
        self.entries.iter().all(|&v| v != 0)
    }

    pub fn transpose(&self) -> SignMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c));
            }
        }
        SignMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Entrywise negation.
    pub fn negated(&self) -> SignMatrix {
        SignMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&v| -v).collect(),
        }
    }

    /// Applies a row permutation and a column permutation.
    ///
    /// `row_perm[i]` names the source row placed at row `i`, likewise for
    /// columns. Both slices must be permutations of `0..rows` / `0..cols`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SignMatrix {
        assert_eq!(row_perm.len(), self.rows, "row permutation length");
        assert_eq!(col_perm.len(), self.cols, "column permutation length");
        let mut entries = Vec::with_capacity(self.entries.len());
        for &r in row_perm {
            for &c in col_perm {
                entries.push(self.get(r, c));
            }
        }
        SignMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SignMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = self
                .row(r)
                .iter()
                .map(|&v| match v {
                    1 => '+',
                    -1 => '-',
                    _ => '0',
                })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Exact inner product of two integer vectors.
pub fn inner_product(a: &[i8], b: &[i8]) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b.iter())
        .map(|(&x, &y)| x as i64 * y as i64)
        .sum())
}

/// Which axis a spectrum was taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

/// One unordered pair `(a, b)` with `a < b` and its inner product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairValue {
    pub a: usize,
    pub b: usize,
    pub value: i64,
}

/// The multiset of inner products over all unordered distinct pairs of
/// rows or columns, with a lexicographically ordered pair index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    axis: Axis,
    vector_len: usize,
    pairs: Vec<PairValue>,
}

impl Spectrum {
    pub fn axis(&self) -> Axis {
        self.axis
    }

    /// Length of the vectors whose products were taken; every value `g`
    /// satisfies `|g| <= vector_len`.
    pub fn vector_len(&self) -> usize {
        self.vector_len
    }

    pub fn pairs(&self) -> &[PairValue] {
        &self.pairs
    }

    /// Number of pairs, `C(n, 2)` for the pair-axis dimension `n`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Looks up the value for an unordered pair.
    pub fn get(&self, a: usize, b: usize) -> Option<i64> {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.pairs
            .iter()
            .find(|p| p.a == lo && p.b == hi)
            .map(|p| p.value)
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.pairs.iter().map(|p| p.value)
    }

    /// Multiset view: value -> multiplicity.
    pub fn histogram(&self) -> BTreeMap<i64, usize> {
        let mut hist = BTreeMap::new();
        for v in self.values() {
            *hist.entry(v).or_insert(0) += 1;
        }
        hist
    }

    /// Distinct values, sorted.
    pub fn value_set(&self) -> BTreeSet<i64> {
        self.values().collect()
    }

    /// Canonical multiset form for equality checks.
    pub fn sorted_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.values().collect();
        v.sort_unstable();
        v
    }
}

fn pair_spectrum(vectors: &[&[i8]], axis: Axis, vector_len: usize) -> Spectrum {
    let n = vectors.len();
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            let value = inner_product(vectors[a], vectors[b]).expect("equal lengths");
            pairs.push(PairValue { a, b, value });
        }
    }
    Spectrum {
        axis,
        vector_len,
        pairs,
    }
}

/// Inner products of all unordered distinct row pairs.
pub fn row_spectrum(m: &SignMatrix) -> Spectrum {
    let rows: Vec<&[i8]> = (0..m.rows()).map(|r| m.row(r)).collect();
    pair_spectrum(&rows, Axis::Row, m.cols())
}

/// Inner products of all unordered distinct column pairs.
pub fn col_spectrum(m: &SignMatrix) -> Spectrum {
    let cols: Vec<Vec<i8>> = (0..m.cols()).map(|c| m.column(c)).collect();
    let views: Vec<&[i8]> = cols.iter().map(|c| c.as_slice()).collect();
    pair_spectrum(&views, Axis::Column, m.rows())
}

/// Exact integer matrix, used for Gram matrices and block identities.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// `s * I_n`.
    pub fn scaled_identity(n: usize, s: i64) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = s;
        }
        Self {
            rows: n,
            cols: n,
            entries,
        }
    }

    /// `n x n` matrix with every entry `s`.
    pub fn constant(n: usize, s: i64) -> Self {
        Self {
            rows: n,
            cols: n,
            entries: vec![s; n * n],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    /// True for a square matrix whose off-diagonal entries are all zero.
    pub fn is_diagonal(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c && self.get(r, c) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Kronecker product of two integer matrices.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for p in 0..self.rows {
            for r in 0..other.rows {
                for q in 0..self.cols {
                    for s in 0..other.cols {
                        entries.push(self.get(p, q) * other.get(r, s));
                    }
                }
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// `M * M^T`, computed by plain matrix multiplication.
///
/// Kept independent of [`row_spectrum`] so the two routes can serve as
/// mutual oracles: the off-diagonal `(l, m)` equals the spectrum pair
/// `(l, m)` for every input.
pub fn gram_rows(m: &SignMatrix) -> IntMatrix {
    let n = m.rows();
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0i64;
            for k in 0..m.cols() {
                acc += m.get(i, k) as i64 * m.get(j, k) as i64;
            }
            entries[i * n + j] = acc;
        }
    }
    IntMatrix::new(n, n, entries)
}

/// `M^T * M`, computed by plain matrix multiplication.
pub fn gram_cols(m: &SignMatrix) -> IntMatrix {
    let n = m.cols();
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0i64;
            for k in 0..m.rows() {
                acc += m.get(k, i) as i64 * m.get(k, j) as i64;
            }
            entries[i * n + j] = acc;
        }
    }
    IntMatrix::new(n, n, entries)
}

/// Copy of a square matrix with the principal diagonal set to zero.
pub fn zero_diagonal(m: &SignMatrix) -> Result<SignMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut entries = m.entries().to_vec();
    for i in 0..n {
        entries[i * n + i] = 0;
    }
    SignMatrix::new(n, n, entries)
}
