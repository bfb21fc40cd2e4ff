//! Configuration, case registry, artifact output and reference comparison
//! around the `weno3` solvers.

pub mod compare;
pub mod config;
pub mod run;

pub use compare::{compare, Comparison, Profile, Window};
pub use config::{parse_config, CaseKind, ConfigError, RunConfig};
pub use run::{make_reference, run, HarnessError, RunOutcome};
