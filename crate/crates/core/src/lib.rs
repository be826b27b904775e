//! Exact evaluators, enumerators and exhaustive verifiers for OEIS A000975
//! (1, 2, 5, 10, 21, 42, 85, ...) and the sequences and counting problems
//! in which it appears: triangular numbers versus even-length binary
//! palindromes, the zero runs of A265158, Chinese Rings and Gray codes,
//! circular three-colorings and two-colored bubbles.
//!
//! All sequence values are [`Nat`]s (arbitrary precision). Indices are
//! machine integers.

pub mod bfile;
pub mod claims;
pub mod colorings;
pub mod error;
pub mod puzzles;
pub mod report;
pub mod runs;
pub mod seq;
pub mod words;

pub use bfile::BFile;
pub use claims::{Bounds, ClaimId, Mutant, Reference, Subject};
pub use colorings::{AffinityPartition, Bubble, EdgeColor, Group};
pub use error::{Error, Result};
pub use puzzles::{GrayWord, RingState};
pub use report::{Counterexample, Report, Status};
pub use runs::{RecordEntry, RecordTable, Run};
pub use seq::{Method, Nat, SeqId};
pub use words::{BitWord, CatalanWord};
