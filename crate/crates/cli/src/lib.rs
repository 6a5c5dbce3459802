//! Library side of the `gbei` command: graph resolution, per-command reports and
//! the corpus harness.

pub mod commands;
pub mod corpus;
pub mod error;

pub use error::{CliError, CliResult};

use std::path::Path;

use gbei_core::{fixtures, io, SimpleGraph};

/// A fixture name (`fig1`, `cycle6`, ...), a graph file (JSON or edge list), or `-` for stdin.
pub fn resolve_graph(source: &str) -> CliResult<SimpleGraph> {
    if source == "-" {
        let text = std::io::read_to_string(std::io::stdin())?;
        return Ok(io::parse_graph(&text)?);
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return Ok(io::parse_graph(&text)?);
    }
    fixtures::by_name(source).map_err(|_| CliError::Usage(format!("{source:?} is neither a file nor a fixture name")))
}
