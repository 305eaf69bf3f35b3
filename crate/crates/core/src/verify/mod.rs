//! The verification suite behind the `verify` command: golden tables and
//! identity checks, each reported as a pass/fail line with timing.

pub mod checks;
pub mod golden;

pub use checks::{all_check_names, run_all, run_checks, run_suite, CheckOutcome, Suite};
