//! Support library for the `orthokit` binary: the matrix file format and
//! the report document model.

pub mod format;
pub mod report;
