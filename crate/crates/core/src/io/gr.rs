use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{content_lines, declared, expect_len, number};

/// Parses `p fbk <n> <m>` followed by exactly `m` lines `e <u> <v>`.
pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        match tokens[0] {
            "p" => {
                expect_len(line, &tokens, 4)?;
                if header.is_some() {
                    return Err(Error::parse(line, "second problem line"));
                }
                if tokens[1] != "fbk" {
                    return Err(Error::parse(line, format!("unknown problem kind {:?}", tokens[1])));
                }
                header = Some((declared(line, tokens[2])?, declared(line, tokens[3])?));
            }
            "e" => {
                expect_len(line, &tokens, 3)?;
                let Some((n, m)) = header else {
                    return Err(Error::parse(line, "edge before the problem line"));
                };
                let (u, v) = (number(line, tokens[1])?, number(line, tokens[2])?);
                if u >= n || v >= n {
                    return Err(Error::parse(line, format!("edge {u} {v} out of range for n = {n}")));
                }
                if u == v {
                    return Err(Error::parse(line, format!("self-loop on {u}")));
                }
                if edges.len() == m {
                    return Err(Error::parse(line, format!("more than the declared {m} edges")));
                }
                edges.push((u, v));
            }
            other => return Err(Error::parse(line, format!("unknown line type {other:?}"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(last_line.max(1), "missing problem line"));
    };
    if edges.len() != m {
        return Err(Error::parse(
            last_line.max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges).map_err(|e| match e {
        Error::DuplicateEdge(u, v) => Error::parse(
            duplicate_line(text, u, v).unwrap_or(last_line),
            format!("duplicate edge {u} {v}"),
        ),
        other => other,
    })
}

fn duplicate_line(text: &str, u: usize, v: usize) -> Option<usize> {
    let mut seen = 0;
    for (line, tokens) in content_lines(text) {
        if tokens[0] == "e" {
            let a: usize = tokens[1].parse().ok()?;
            let b: usize = tokens[2].parse().ok()?;
            if (a.min(b), a.max(b)) == (u, v) {
                seen += 1;
                if seen == 2 {
                    return Some(line);
                }
            }
        }
    }
    None
}

/// Canonical form: header, then edges `u < v` in lexicographic order.
pub fn emit_gr(g: &Graph) -> String {
    emit_gr_with_comments(g, &[])
}

/// Canonical form preceded by one `c <comment>` line per entry.
pub fn emit_gr_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p fbk {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
