//! Parser, pipeline and reporting behind the `ddgalois` command.

pub mod error;
pub mod parse;
pub mod report;

use rayon::prelude::*;
use serde_json::Value;

pub use error::CliError;
pub use parse::{parse_equation, parse_field_poly, parse_ratfunc, EquationInput};
pub use report::{
    error_json, render_text, run_classify, run_hypergeom, run_relations, run_residues, run_telescope, Options,
    SCHEMA_VERSION,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Relations,
    Residues,
    Telescope,
    Hypergeom,
}

/// Parses `input` as the command expects and runs it.
pub fn run_command(cmd: Command, input: &str, opts: &Options) -> Result<Value, CliError> {
    match cmd {
        Command::Classify => run_classify(&parse_equation(input)?, opts),
        Command::Relations => run_relations(&parse_equation(input)?, opts),
        Command::Hypergeom => run_hypergeom(&parse_equation(input)?, opts),
        Command::Residues => run_residues(&parse_ratfunc(input)?, opts),
        Command::Telescope => run_telescope(&parse_ratfunc(input)?, opts),
    }
}

/// Non-empty, non-comment lines of a batch file.
pub fn batch_lines(text: &str) -> Vec<&str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect()
}

/// Runs every line concurrently; results keep the input order.
pub fn run_batch(cmd: Command, lines: &[&str], opts: &Options) -> Vec<Result<Value, CliError>> {
    lines.par_iter().map(|l| run_command(cmd, l, opts)).collect()
}
