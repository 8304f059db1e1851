//! Command-line surface of the latcover toolkit, plus seeded corpora.

mod commands;
pub mod corpus;

pub use commands::{polytope_from_str, run, Cli, Command, CommandResult, CorpusKind, CoverMethod, Format, Outcome, Status};
