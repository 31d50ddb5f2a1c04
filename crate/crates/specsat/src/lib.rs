//! Standard-library companion to `specsat-core`: edge-list files, the
//! experiment harness and its reports.

pub mod config;
pub mod edgelist;
pub mod harness;
pub mod report;

pub use config::{ExperimentConfig, Family, Mode};
pub use harness::{run, run_exhaustive, run_family_sweep, run_random_hunt, run_tightness, HarnessError};
pub use report::{ExperimentReport, RunMeta};
