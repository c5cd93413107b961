//! File formats and the command-line front end for `transor-core`.

pub mod cli;
pub mod format;
pub mod output;

pub use cli::run;
pub use format::{parse_edge_list, ParseError, Parsed};
