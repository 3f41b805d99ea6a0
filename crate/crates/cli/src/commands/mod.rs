//! Subcommand implementations. Each returns the process exit code on
//! success; errors carry their own code.

pub mod experiments;
pub mod lottery;
pub mod rbts;
pub mod replay;
pub mod simulate;
