//! Text formats for elections, price functions and graphs.
//!
//! Every parser reports the 1-based line of the first problem. Lines
//! starting with `#` are comments (PrefLib headers aside) and are not
//! preserved by the writers.

mod election;
mod graph;
mod prices;

pub use election::{parse_election, write_election};
pub use graph::{parse_graph, write_graph};
pub use prices::{parse_prices, write_prices};

use crate::error::Error;

fn parse_error<T>(line: usize, msg: impl Into<String>) -> Result<T, Error> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

/// Non-empty lines with their 1-based numbers, comments and surrounding
/// whitespace removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}
