//! Input parsing, report serialization and the sweep driver behind the
//! `nonint` binary.

pub mod error;
pub mod expr;
pub mod report;
pub mod run;
pub mod spec;

pub use error::CliError;
pub use expr::{parse_constant, parse_poly, parse_ratfunc, ParseError};
pub use report::ReportDocument;
pub use run::{exit_code, run_check, sweep, SweepReport};
pub use spec::{parse_config, Config, Family, SystemSource, SystemSpec};
