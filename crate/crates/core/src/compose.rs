//! Composition patterns: Kronecker products, juxtaposition, doubling,
//! mixed blocks, and index-table-driven block assemblies.

use crate::error::{Error, Result};
use crate::generators::{sylvester, MatrixFamily};
use crate::matrix::SignMatrix;

/// Kronecker product `A (x) B`. Entries stay in `{-1, 0, +1}` because both
/// factors are sign matrices.
pub fn kronecker(a: &SignMatrix, b: &SignMatrix) -> SignMatrix {
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    let mut entries = Vec::with_capacity(rows * cols);
    for p in 0..a.rows() {
        for r in 0..b.rows() {
            for q in 0..a.cols() {
                for s in 0..b.cols() {
                    entries.push(a.get(p, q) * b.get(r, s));
                }
            }
        }
    }
    SignMatrix::new(rows, cols, entries).expect("product of sign entries is a sign entry")
}

/// Horizontal concatenation of matrices with equal row counts.
pub fn juxtapose(parts: &[SignMatrix]) -> Result<SignMatrix> {
    let first = parts.first().ok_or(Error::NoOperands)?;
    let rows = first.rows();
    for (index, p) in parts.iter().enumerate() {
        if p.rows() != rows {
            return Err(Error::RowCountMismatch {
                index,
                expected: rows,
                found: p.rows(),
            });
        }
    }
    let cols: usize = parts.iter().map(|p| p.cols()).sum();
    let mut entries = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for p in parts {
            entries.extend_from_slice(p.row(r));
        }
    }
    SignMatrix::new(rows, cols, entries)
}

/// The block pattern `[A A; A -A]`, of size `2r x 2c`.
pub fn doubling(a: &SignMatrix) -> SignMatrix {
    let (r, c) = (a.rows(), a.cols());
    let mut entries = Vec::with_capacity(4 * r * c);
    for row in 0..r {
        entries.extend_from_slice(a.row(row));
        entries.extend_from_slice(a.row(row));
    }
    for row in 0..r {
        entries.extend_from_slice(a.row(row));
        entries.extend(a.row(row).iter().map(|&v| -v));
    }
    SignMatrix::new(2 * r, 2 * c, entries).expect("doubling preserves the sign alphabet")
}

/// The sixteen-block sign pattern that repeats `M` with the order-4
/// Sylvester signs. Defined as the Kronecker identity `S_4 (x) M`, which
/// equals `doubling(doubling(M))` entrywise.
pub fn four_block(m: &SignMatrix) -> SignMatrix {
    let h4 = sylvester(2).expect("order 4 is within bounds");
    kronecker(&h4, m)
}

/// Block order for [`mixed_block`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedOrder {
    /// `[H M; M -H]`
    Hm,
    /// `[M H; H -M]`
    Mh,
}

/// Two-by-two block mix of two square matrices of the same order.
pub fn mixed_block(h: &SignMatrix, m: &SignMatrix, order: MixedOrder) -> Result<SignMatrix> {
    if !h.is_square() || !m.is_square() || h.rows() != m.rows() {
        return Err(Error::OrderMismatch {
            left_rows: h.rows(),
            left_cols: h.cols(),
            right_rows: m.rows(),
            right_cols: m.cols(),
        });
    }
    let (top_left, top_right) = match order {
        MixedOrder::Hm => (h, m),
        MixedOrder::Mh => (m, h),
    };
    let (bottom_left, bottom_right) = (top_right, top_left);
    let n = h.rows();
    let mut entries = Vec::with_capacity(4 * n * n);
    for row in 0..n {
        entries.extend_from_slice(top_left.row(row));
        entries.extend_from_slice(top_right.row(row));
    }
    for row in 0..n {
        entries.extend_from_slice(bottom_left.row(row));
        entries.extend(bottom_right.row(row).iter().map(|&v| -v));
    }
    SignMatrix::new(2 * n, 2 * n, entries)
}

/// An `n x n` table of block indices in `1..=n`, used to drive block
/// assemblies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockIndexTable {
    n: usize,
    entries: Vec<usize>,
}

impl BlockIndexTable {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(Error::EntryCount {
                rows: n,
                cols: n,
                found: entries.len(),
            });
        }
        for (idx, &v) in entries.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::InvalidBlockIndex {
                    row: idx / n,
                    col: idx % n,
                    value: v,
                    order: n,
                });
            }
        }
        Ok(Self { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Block index (1-based value) at a 0-based position.
    pub fn get(&self, row: usize, col: usize) -> usize {
        assert!(row < self.n && col < self.n, "index out of bounds");
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
}

/// Circulant index table over the list `1, 2, ..., n`: entry `(i, j)` is
/// `((i + j - 2) mod n) + 1` in 1-based coordinates.
pub fn circulant_table(n: usize) -> BlockIndexTable {
    assert!(n >= 1, "order must be positive");
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(((i + j) % n) + 1);
        }
    }
    BlockIndexTable::new(n, entries).expect("circulant entries are in range")
}

/// Index table taken from the Type II residue table: entry `(i, j)` is
/// `(i * j) mod (n+1)`, which lands in `1..=n` whenever `n+1` is prime.
pub fn type_ii_table(n: usize) -> Result<BlockIndexTable> {
    let t = crate::generators::residue_table(crate::generators::MMatrixKind::TypeII, n)?;
    let entries = t.entries().iter().map(|&v| v as usize).collect();
    BlockIndexTable::new(n, entries)
}

/// Replaces each entry of the index table by the corresponding family
/// member, producing an `n*p x n*p` matrix from an order-`n` table and a
/// family of `n` members of order `p`.
pub fn assemble_blocks(table: &BlockIndexTable, family: &MatrixFamily) -> Result<SignMatrix> {
    let n = table.order();
    if family.len() != n {
        return Err(Error::SizeMismatch {
            table_order: n,
            family_len: family.len(),
        });
    }
    let first = family.member(1);
    if !first.is_square() {
        return Err(Error::NotSquare {
            rows: first.rows(),
            cols: first.cols(),
        });
    }
    let p = first.rows();
    let size = n * p;
    let mut entries = vec![0i8; size * size];
    for bi in 0..n {
        for bj in 0..n {
            let block = family.member(table.get(bi, bj));
            for r in 0..p {
                for c in 0..p {
                    entries[(bi * p + r) * size + (bj * p + c)] = block.get(r, c);
                }
            }
        }
    }
    SignMatrix::new(size, size, entries)
}
