//! Support library for the `saddleq` binary.
//!
//! - [`sysfile`]: the line-oriented system description format
//! - [`report`]: machine-readable JSON run reports

pub mod report;
pub mod sysfile;
