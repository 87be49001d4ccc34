//! Command-line front end for `birestr`: configuration, JSON records, seeded
//! generators and the invariant suites.

pub mod commands;
pub mod config;
pub mod gen;
pub mod record;
pub mod suites;

pub use commands::{Model, Outcome};
pub use config::{CliConfig, Format};
pub use record::{ElementRecord, SuiteReport};
pub use suites::{Sizes, Suite};
