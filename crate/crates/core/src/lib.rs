//! Exact-integer toolkit for sign matrices.
//!
//! Everything here works over matrices with entries in `{-1, 0, +1}` and
//! uses exact integer arithmetic throughout; there is no floating point
//! anywhere in the crate.
//!
//! * [`matrix`]: the [`SignMatrix`] carrier, inner products, pair spectra,
//!   Gram matrices, and diagonal zeroing.
//! * [`classify`](mod@classify): orthogonality labels with grouping
//!   witnesses.
//! * [`generators`]: Sylvester doubling, all-ones blocks, residue tables
//!   with sign rules, and cyclically shifted families.
//! * [`compose`]: Kronecker products, juxtaposition, doubling, mixed
//!   blocks, and index-table block assemblies.
//! * [`analysis`]: conformance and claim checks, Gram identities, the
//!   permutation census, order guard, and exact determinants.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so shared references can be used freely across threads.

pub mod analysis;
pub mod classify;
pub mod compose;
pub mod error;
pub mod generators;
pub mod matrix;

pub use analysis::{
    claim_check, determinant_check, formula_conformance, gram_structure_check,
    hadamard_order_guard, permutation_census, spectrum_report, CensusReport, ClaimCheck,
    ConformancePair, ConformanceReport, DeterminantCheck, GramCheck, SpectrumReport,
    DEFAULT_MAX_CENSUS_ORDER,
};
pub use classify::{
    classify, exhaustive_semi_split, ClassificationReport, Label, QuasiBWitness, Rejection,
    SplitWitness, MAX_EXHAUSTIVE_SPLIT_COLS,
};
pub use compose::{
    assemble_blocks, circulant_table, doubling, four_block, juxtapose, kronecker, mixed_block,
    type_ii_table, BlockIndexTable, MixedOrder,
};
pub use error::{Error, Result};
pub use generators::{
    all_ones, cycled_family, m_matrix, residue_table, sign_map, sylvester, MMatrixKind,
    MatrixFamily, ResidueTable, SignRule, MAX_SYLVESTER_EXPONENT,
};
pub use matrix::{
    col_spectrum, gram_cols, gram_rows, inner_product, row_spectrum, zero_diagonal, Axis,
    IntMatrix, PairValue, SignMatrix, Spectrum,
};
