//! Combinatorial enumerators and word-level specializations: prime Dyck
//! words, n-ary tree letters, staircase-bounded lattice paths, and the
//! shuffle analogue of star-multinomials.

pub mod dyck;
pub mod lattice;
pub mod shuffle;
pub mod trees;

pub use dyck::{dyck_phi, dyck_primes, pair_alphabet};
pub use lattice::{lattice_count, lattice_paths, lattice_specializations, LatticeSpec};
pub use shuffle::shuffle_witt;
pub use trees::{nary_forest_phi, nary_tree_alphabet};
