use std::fmt::Write;

use crate::error::{Error, Result};
use crate::intersection::SubtreeRepresentation;
use crate::io::{content_lines, declared, expect_len, number};

/// Parses `host <N_T>`, host edges `ht <a> <b>`, and one `sub <v> <node…>`
/// line for each vertex `0..n`.
pub fn parse_subtree(text: &str) -> Result<SubtreeRepresentation> {
    let mut host_n: Option<usize> = None;
    let mut host_edges = Vec::new();
    let mut subs: Vec<Option<Vec<usize>>> = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        match tokens[0] {
            "host" => {
                expect_len(line, &tokens, 2)?;
                if host_n.is_some() {
                    return Err(Error::parse(line, "second host line"));
                }
                host_n = Some(declared(line, tokens[1])?);
            }
            "ht" => {
                expect_len(line, &tokens, 3)?;
                let Some(h) = host_n else {
                    return Err(Error::parse(line, "host edge before the host line"));
                };
                let (a, b) = (number(line, tokens[1])?, number(line, tokens[2])?);
                if a >= h || b >= h {
                    return Err(Error::parse(line, format!("host edge {a} {b} out of range")));
                }
                host_edges.push((a, b));
            }
            "sub" => {
                if tokens.len() < 3 {
                    return Err(Error::parse(line, "subtree line needs a vertex and at least one node"));
                }
                let Some(h) = host_n else {
                    return Err(Error::parse(line, "subtree before the host line"));
                };
                let v = declared(line, tokens[1])?;
                let nodes = tokens[2..]
                    .iter()
                    .map(|t| {
                        let x = number(line, t)?;
                        if x >= h {
                            return Err(Error::parse(line, format!("host node {x} out of range")));
                        }
                        Ok(x)
                    })
                    .collect::<Result<Vec<_>>>()?;
                if v >= subs.len() {
                    subs.resize(v + 1, None);
                }
                if subs[v].replace(nodes).is_some() {
                    return Err(Error::parse(line, format!("second subtree for vertex {v}")));
                }
            }
            other => return Err(Error::parse(line, format!("unknown line type {other:?}"))),
        }
    }
    let Some(host_n) = host_n else {
        return Err(Error::parse(last_line.max(1), "missing host line"));
    };
    let subtrees = subs
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::parse(last_line, format!("no subtree for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    SubtreeRepresentation::new(host_n, host_edges, subtrees).map_err(|e| Error::parse(last_line.max(1), e.to_string()))
}

pub fn emit_subtree(rep: &SubtreeRepresentation) -> String {
    let mut out = String::new();
    writeln!(out, "host {}", rep.host_n).unwrap();
    for &(a, b) in &rep.host_edges {
        writeln!(out, "ht {a} {b}").unwrap();
    }
    for (v, nodes) in rep.subtrees.iter().enumerate() {
        let nodes: Vec<String> = nodes.iter().map(ToString::to_string).collect();
        writeln!(out, "sub {v} {}", nodes.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "host 4\nht 0 1\nht 1 2\nht 2 3\nsub 0 0 1\nsub 1 1 2\nsub 2 2 3\nsub 3 3\n";
        let rep = parse_subtree(text).unwrap();
        assert_eq!(rep, SubtreeRepresentation::from_intervals(&[(0, 1), (1, 2), (2, 3), (3, 3)]).unwrap());
        assert_eq!(emit_subtree(&rep), text);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_subtree("host 2\nht 0 1\nsub 1 0\n").is_err());
        assert!(parse_subtree("host 3\nht 0 1\nht 1 2\nsub 0 0 2\n").is_err());
        assert!(parse_subtree("host 2\nht 0 5\n").is_err());
        assert!(parse_subtree("sub 0 0\n").is_err());
        assert!(parse_subtree("host 2\nht 0 1\nsub 0 0\nsub 0 1\n").is_err());
    }
}
