//! Exact arithmetic for base-φ and base-σ numeration.
//!
//! Every natural number has a unique finite expansion in powers of the
//! golden ratio φ with digits 0/1 and no two adjacent 1's, and a second
//! canonical form in which the digit pair at exponents (1, 0) may — and
//! then must — be 11. This crate constructs both, normalizes digit-wise
//! sums back to admissible form, exposes the interval combinatorics that
//! drive the recursions (Lucas intervals, run lengths, chains between
//! runs, generalized Beatty sequences), and carries the same program over
//! to the silver mean σ = 1 + √2 with digits 0/1/2.
//!
//! All arithmetic is exact: elements of ℤ[φ] and ℤ[√2] with big-integer
//! coordinates, never floating point. Scans over ranges of N parallelize
//! with rayon when the `parallel` feature (on by default) is enabled.

#![forbid(unsafe_code)]

pub mod beatty;
pub mod digits;
pub mod quad;
pub mod report;
pub mod representation;
pub mod runs;
pub mod scan;
pub mod silver;
pub mod structure;
pub mod table;

pub use digits::{DigitString, RadixGlyph};
pub use quad::{Base, QuadInt};
pub use representation::{
    bergman_of, canonical_of, expansion_of, normalize, normalize_with_trace, Scheme, TypeCode,
};
pub use silver::{silver_canonical_of, silver_expansion_of, silver_standard_of};
