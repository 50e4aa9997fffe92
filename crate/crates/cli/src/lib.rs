//! Command line front end for the `johnson-search` crate.

pub mod app;
pub mod error;
pub mod svg;
pub mod table;

pub use app::run;
pub use error::CliError;
