//! File formats, JSON reports, parallel drivers and the command line for
//! `hyperterrain-core`.

pub mod cli;
pub mod dto;
pub mod error;
pub mod io;
pub mod suite;

pub use error::CliError;
