//! Exact spectra of the normal Cayley graphs `Cay(S_n, C(n,I))`, where
//! `C(n,I)` is the set of all cycles of `S_n` whose length lies in `I`.
//!
//! Eigenvalues come from irreducible characters of `S_n` evaluated exactly
//! by the Murnaghan–Nakayama rule; a brute-force graph oracle cross-checks
//! them at small `n`.

pub mod characters;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod inequalities;
pub mod json;
pub mod oracle;
pub mod partitions;
pub mod spectra;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use spectra::ConnectionSpec;
