//! Edge-list graph files.
//!
//! Each line is `u v` (an edge), `color u c` (a vertex color), or a single
//! vertex label (an isolated vertex). Vertices are numbered in order of first
//! appearance. Color labels are ranked by value, numerically when they are
//! all numbers, so `1 2 3` and `a b c` both become colors `0 1 2`.

use std::collections::HashMap;

use super::{content_lines, parse_error};
use crate::error::Result;
use crate::generators::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut vertex = |name: &str, labels: &mut Vec<String>| -> usize {
        *ids.entry(name.to_string()).or_insert_with(|| {
            labels.push(name.to_string());
            labels.len() - 1
        })
    };
    let mut edges = Vec::new();
    let mut colors: Vec<(usize, usize, String)> = Vec::new();
    for (ln, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["color", v, c] => {
                let v = vertex(v, &mut labels);
                colors.push((ln, v, c.to_string()));
            }
            [v] => {
                vertex(v, &mut labels);
            }
            [u, v] => {
                let (u, v) = (vertex(u, &mut labels), vertex(v, &mut labels));
                edges.push((ln, u, v));
            }
            _ => return parse_error(ln, format!("expected `u v`, `color u c` or a vertex, got {line:?}")),
        }
    }

    let plain: Vec<(usize, usize)> = edges.iter().map(|&(_, u, v)| (u, v)).collect();
    let graph = match Graph::with_labels(labels.clone(), &plain) {
        Ok(g) => g,
        Err(e) => {
            // locate the offending edge for the message
            let line = (1..=edges.len())
                .find(|&k| Graph::with_labels(labels.clone(), &plain[..k]).is_err())
                .map_or(1, |k| edges[k - 1].0);
            return parse_error(line, e.to_string());
        }
    };
    if colors.is_empty() {
        return Ok(graph);
    }

    let mut values: Vec<&str> = colors.iter().map(|(_, _, c)| c.as_str()).collect();
    let numeric = values.iter().all(|c| c.parse::<u64>().is_ok());
    if numeric {
        values.sort_by_key(|c| c.parse::<u64>().unwrap_or(0));
    } else {
        values.sort_unstable();
    }
    values.dedup();
    let mut assigned: Vec<Option<usize>> = vec![None; labels.len()];
    for (ln, v, c) in &colors {
        let rank = values.iter().position(|x| x == c).unwrap_or(0);
        if assigned[*v].is_some_and(|old| old != rank) {
            return parse_error(*ln, format!("vertex {} colored twice", labels[*v]));
        }
        assigned[*v] = Some(rank);
    }
    let last = colors.last().map_or(1, |c| c.0);
    if let Some(v) = assigned.iter().position(Option::is_none) {
        return parse_error(last, format!("vertex {} has no color", labels[v]));
    }
    graph
        .colored(assigned.into_iter().flatten().collect())
        .or_else(|e| parse_error(last, e.to_string()))
}

/// Writes edges first, then colors, using the vertex labels.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let l = g.labels();
    let mut mentioned = vec![false; l.len()];
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", l[u], l[v]));
        mentioned[u] = true;
        mentioned[v] = true;
    }
    if let Some(colors) = g.colors() {
        for (v, c) in colors.iter().enumerate() {
            out.push_str(&format!("color {} {c}\n", l[v]));
        }
    } else {
        for v in (0..l.len()).filter(|&v| !mentioned[v]) {
            out.push_str(&format!("{}\n", l[v]));
        }
    }
    out
}
