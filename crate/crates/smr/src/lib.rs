//! Signed magic rectangles with three filled cells per column.
//!
//! A signed magic rectangle `SMR(m,n;k,s)` is an `m x n` array with `k`
//! filled cells in every row and `s` in every column, using each element of
//! the symmetric symbol set
//!
//! ```text
//! X = {0, ±1, ..., ±(mk-1)/2}   (mk odd)
//! X = {±1, ±2, ..., ±mk/2}      (mk even)
//! ```
//!
//! exactly once, with every row and every column summing to zero. For
//! `s = 3` such a rectangle exists if and only if `3 <= m,k <= n` and
//! `mk = 3n`; this crate builds a witness for every admissible triple.
//!
//! The constructive core works from a fully filled `3 x n` base rectangle
//! whose rows are closed under negation. Its symbol set is partitioned into
//! zero-sum `k`-blocks meeting each base column at most once, and each block
//! becomes one row of the target ([`assemble`]). Even `k` uses plain
//! pair grouping ([`build_partition_even`]); odd `k >= 5` seeds each block
//! with a zero-sum triple straddling two base rows ([`build_partition_odd`]).
//! `k = 3` squares get a cyclic three-diagonal scheme ([`smr_square_k3`]),
//! and odd `n` falls back to an exhaustive search over classical magic
//! rectangles followed by a half-range shift ([`mr_to_smr`]).
//!
//! Everything constructive is gated by [`verify_smr`]: no function returns
//! an array the verifier has not accepted.

mod assembler;
mod base;
mod error;
mod even_k;
pub mod format;
mod odd_k;
mod search;
mod types;
mod verify;

pub use assembler::{assemble, enumerate_params, generate, generate_with_budget};
pub use base::{fixed_smr_4_12, mr_to_smr, row_sets, small_case_s12, smr3_even, special_s3};
pub use error::Error;
pub use even_k::{build_partition_even, negation_pairs};
pub use odd_k::{build_partition_odd, build_s1_s2, build_s3, smr_square_k3, TripleFamilies};
pub use search::{
    count_smr, search_mr, search_smr, search_zero_sum_blocks, CountResult, FamilySpec,
    SearchBudget, SearchOutcome,
};
pub use types::{column_partition, Block, Params, Partition, RowSets, SparseRectangle, SymbolSet};
pub use verify::{
    is_near_orthogonal, verify_mr, verify_s12, verify_s3, verify_smr, Rule, VerificationReport,
    Violation, Witness,
};
