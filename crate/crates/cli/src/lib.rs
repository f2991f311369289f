//! Instance file formats, deterministic generators, and per-theorem
//! verification suites behind the `semilocal` command-line tool.

pub mod format;
pub mod generate;
pub mod suites;
