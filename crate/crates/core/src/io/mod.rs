//! Plain-text instance formats. All parsers skip blank lines and `c`
//! comment lines, and report the 1-based line of the first problem.

mod gr;
mod perm;
mod subtree;
mod td;

pub use gr::{emit_gr, emit_gr_with_comments, parse_gr};
pub use perm::{emit_perm, parse_perm};
pub use subtree::{emit_subtree, parse_subtree};
pub use td::{emit_td, parse_td};

use crate::error::{Error, Result};

/// Upper bound on declared sizes, so a hostile header cannot force a huge
/// allocation.
pub const MAX_DECLARED: usize = 1 << 22;

/// Non-comment lines as `(line number, tokens)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn number(line: usize, token: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {token:?}")))
}

fn declared(line: usize, token: &str) -> Result<usize> {
    let v = number(line, token)?;
    if v > MAX_DECLARED {
        return Err(Error::parse(line, format!("declared size {v} exceeds {MAX_DECLARED}")));
    }
    Ok(v)
}

fn expect_len(line: usize, tokens: &[&str], len: usize) -> Result<()> {
    if tokens.len() != len {
        return Err(Error::parse(
            line,
            format!("expected {len} fields, found {}", tokens.len()),
        ));
    }
    Ok(())
}
