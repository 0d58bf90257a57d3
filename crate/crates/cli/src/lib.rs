//! Command-line front end for `qschubert`: expression parsing, rendering and
//! the `mult`, `gw`, `table`, `verify` and `vi` commands.

pub mod commands;
pub mod expr;
pub mod render;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Classical,
    Quantum,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Classical => "classical",
            Mode::Quantum => "quantum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Pieri,
    Vi,
    Both,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] qschubert::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(qschubert::Error::Residual { .. }) => commands::EXIT_RESIDUAL,
            _ => commands::EXIT_USAGE,
        }
    }
}
