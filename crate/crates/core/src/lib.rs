//! Two bijections from row-increasing two-row arrays: one onto ordered pairs
//! of hook-shaped standard Young tableaux, one onto standard Young tableaux
//! with at most two rows. Together they give a bijective proof of
//!
//! ```text
//! Σ_{μ ∈ H(1,1;n+1)} (f^μ)² = Σ_{λ ∈ H(2,0;2n)} f^λ
//! ```
//!
//! and of the analogous identity for `(n+1, n)` arrays. The [`verify`]
//! module certifies both exhaustively for small `n`.

pub mod arrays;
pub mod error;
pub mod hooks;
pub mod partition;
pub mod tableau;
pub mod two_row;
pub mod verify;

pub use arrays::{
    array_count, enumerate_arrays, enumerate_arrays_bounded, ArrayPair, Arrays, Mode,
};
pub use error::{Error, Result};
pub use hooks::{from_hook_pair, to_hook_pair, HookTableauPair};
pub use partition::{hook_partitions, in_hook, partition_of, partitions_of, HookFamily, Partition};
pub use tableau::{count_syt, enumerate_syt, enumerate_syt_bounded, is_standard, Tableau};
pub use two_row::{
    from_two_row_syt, run_forward, to_two_row_syt, trace_two_row, BijectionTrace, TwoRowState,
};
pub use verify::{certify, certify_remark, certify_with, identity_sides, IdentityReport};
