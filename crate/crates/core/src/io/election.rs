//! Native election files and PrefLib strict-order profiles.
//!
//! Native format:
//!
//! ```text
//! 4 4
//! a b c d
//! b a c d
//! d b a c
//! d c a b
//! d a b c
//! ```
//!
//! The first line gives `m n`, the second the candidate names, and each
//! of the next `n` lines a full ranking, best first.
//!
//! PrefLib input uses `# ALTERNATIVE NAME i: name` headers and
//! `count: a,b,c` ballot lines, where the tokens are alternative numbers or
//! names. Without headers the tokens are names and candidates are numbered
//! in the order of the first ballot.

use std::collections::HashMap;
use std::fmt::Write;

use super::{content_lines, parse_error};
use crate::election::Election;
use crate::error::{Error, Result};

/// Parses either format; PrefLib is recognized by its headers or by
/// `count:` ballot lines.
pub fn parse_election(text: &str) -> Result<Election> {
    let preflib = text.lines().any(|l| {
        let l = l.trim();
        l.starts_with("# ALTERNATIVE NAME") || (!l.starts_with('#') && l.contains(':'))
    });
    if preflib {
        parse_preflib(text)
    } else {
        parse_native(text)
    }
}

/// Writes the native format.
pub fn write_election(e: &Election) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", e.num_candidates(), e.num_voters());
    out.push_str(&e.names().join(" "));
    out.push('\n');
    for vote in e.votes() {
        let names: Vec<&str> = vote.iter().map(|&c| e.name(c)).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

fn parse_native(text: &str) -> Result<Election> {
    let mut lines = content_lines(text);
    let Some((ln, header)) = lines.next() else {
        return parse_error(1, "empty election file");
    };
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .or_else(|_| parse_error(ln, "expected two counts `m n`"))?;
    let [m, n] = dims[..] else {
        return parse_error(ln, "expected two counts `m n`");
    };

    let Some((ln, names)) = lines.next() else {
        return parse_error(ln + 1, "missing candidate names");
    };
    let names: Vec<String> = names.split_whitespace().map(str::to_string).collect();
    if names.len() != m {
        return parse_error(ln, format!("{} names for {m} candidates", names.len()));
    }
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    if index.len() != m {
        return parse_error(ln, "duplicate candidate name");
    }

    let mut votes = Vec::with_capacity(n);
    let mut last = ln;
    for (ln, line) in lines {
        if votes.len() == n {
            return parse_error(ln, format!("more than {n} rankings"));
        }
        votes.push(ranking(ln, line.split_whitespace(), &index, m)?);
        last = ln;
    }
    if votes.len() != n {
        return parse_error(last + 1, format!("expected {n} rankings, found {}", votes.len()));
    }
    Election::new(names, votes).or_else(|e| parse_error(ln, e.to_string()))
}

/// One complete ranking from name tokens.
fn ranking<'a>(
    ln: usize,
    tokens: impl Iterator<Item = &'a str>,
    index: &HashMap<&str, usize>,
    m: usize,
) -> Result<Vec<usize>> {
    let mut seen = vec![false; m];
    let mut vote = Vec::with_capacity(m);
    for tok in tokens {
        let Some(&c) = index.get(tok) else {
            return parse_error(ln, format!("unknown candidate {tok:?}"));
        };
        if std::mem::replace(&mut seen[c], true) {
            return parse_error(ln, format!("candidate {tok:?} ranked twice"));
        }
        vote.push(c);
    }
    if vote.len() != m {
        return parse_error(ln, format!("incomplete ranking: {} of {m} candidates", vote.len()));
    }
    Ok(vote)
}

fn parse_preflib(text: &str) -> Result<Election> {
    // alternative number -> name, from the headers
    let mut alternatives: Vec<(usize, String)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let Some(rest) = line.trim().strip_prefix("# ALTERNATIVE NAME") else {
            continue;
        };
        let Some((num, name)) = rest.split_once(':') else {
            return parse_error(i + 1, "expected `# ALTERNATIVE NAME i: name`");
        };
        let num = num
            .trim()
            .parse()
            .or_else(|_| parse_error(i + 1, format!("bad alternative number {:?}", num.trim())))?;
        let name: String = name.split_whitespace().collect::<Vec<_>>().join("_");
        alternatives.push((num, name));
    }
    alternatives.sort();

    let mut names: Vec<String> = alternatives.iter().map(|(_, s)| s.clone()).collect();
    let mut index: HashMap<String, usize> = HashMap::new();
    for (i, (num, name)) in alternatives.iter().enumerate() {
        index.insert(num.to_string(), i);
        index.insert(name.clone(), i);
    }

    let mut votes = Vec::new();
    let mut first_line = 0;
    for (ln, line) in content_lines(text) {
        let Some((count, ballot)) = line.split_once(':') else {
            return parse_error(ln, "expected `count: a,b,c`");
        };
        let count: usize = count
            .trim()
            .parse()
            .or_else(|_| parse_error(ln, format!("bad multiplicity {:?}", count.trim())))?;
        let tokens: Vec<&str> = ballot.split(',').map(str::trim).collect();
        if names.is_empty() {
            for tok in &tokens {
                if !index.contains_key(*tok) {
                    index.insert(tok.to_string(), names.len());
                    names.push(tok.to_string());
                }
            }
        }
        let lookup: HashMap<&str, usize> = index.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        let vote = ranking(ln, tokens.into_iter(), &lookup, names.len())?;
        if first_line == 0 {
            first_line = ln;
        }
        votes.extend(std::iter::repeat_n(vote, count));
    }
    if votes.is_empty() {
        return parse_error(first_line.max(1), "no ballots");
    }
    Election::new(names, votes).map_err(|e| Error::Parse {
        line: first_line,
        msg: e.to_string(),
    })
}
