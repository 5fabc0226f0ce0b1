//! Command-line frontend: build or ingest an algebra, run the full pipeline,
//! emit deterministic JSON/CSV reports, sweep parameter grids, and run the
//! reference-verification suite.

pub mod commands;
pub mod document;
pub mod grid;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    /// Exit codes: 2 for every input problem (parse, constraint, io).
    pub fn exit_code(&self) -> i32 {
        2
    }
}
