//! Exact-arithmetic toolkit for noncommutative Witt symmetric functions.
//!
//! The crate is organized around five cooperating layers:
//!
//! * [`freealg`] — alphabets, weighted words, and degree-truncated
//!   noncommutative series with exact rational coefficients;
//! * [`ncsf`] — the algebra **Sym** of noncommutative symmetric functions
//!   on the S/Λ/Φ/R bases together with the Witt basis Q and all basis
//!   conversions;
//! * [`codes`] — graded codes (finite or lazily enumerated), Lazard
//!   bisection, right length factorizations, and code specializations of
//!   **Sym**;
//! * [`witt`] — universal Witt vectors over ℚ, ghost components, the
//!   `e`-map into power series, *-multinomials and *-factorials, and the
//!   Fuss–Catalan machinery;
//! * [`combi`] — enumerators (prime Dyck words, n-ary trees, bounded
//!   lattice paths) and the word-level specializations built on them.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The [`verify`] module packages the golden-table
//! and identity checks exposed by the `wittcode` command-line tool.

pub mod codes;
pub mod combi;
mod error;
pub mod freealg;
pub mod ncsf;
pub mod pseries;
pub mod rational;
pub mod verify;
pub mod witt;

pub use codes::{Factorization, GradedCode};
pub use error::{Error, Result};
pub use freealg::{Alphabet, LetterId, NcSeries, Word};
pub use ncsf::{Basis, Composition, SymElement};
pub use pseries::PowerSeries;
pub use rational::Rational;
pub use witt::{GhostVector, WittVector};
