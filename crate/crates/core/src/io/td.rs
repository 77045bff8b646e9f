use std::fmt::Write;

use crate::error::{Error, Result};
use crate::io::{content_lines, declared, expect_len, number};
use crate::treewidth::TreeDecomposition;

/// Parses `s td <#bags> <width+1> <n>`, bag lines `b <id> <v…>` with bag
/// ids `1..=#bags` and 0-based vertices, and tree edge lines `<i> <j>` over
/// bag ids. Returns the decomposition and the declared vertex count.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        if tokens[0] == "s" {
            expect_len(line, &tokens, 5)?;
            if header.is_some() {
                return Err(Error::parse(line, "second solution line"));
            }
            if tokens[1] != "td" {
                return Err(Error::parse(line, format!("unknown solution kind {:?}", tokens[1])));
            }
            let h = (declared(line, tokens[2])?, declared(line, tokens[3])?, declared(line, tokens[4])?);
            bags = vec![None; h.0];
            header = Some(h);
            continue;
        }
        let Some((nb, _, n)) = header else {
            return Err(Error::parse(line, "content before the solution line"));
        };
        let bag_id = |tok: &str| -> Result<usize> {
            let id = number(line, tok)?;
            if id == 0 || id > nb {
                return Err(Error::parse(line, format!("bag id {id} outside 1..={nb}")));
            }
            Ok(id - 1)
        };
        if tokens[0] == "b" {
            if tokens.len() < 2 {
                return Err(Error::parse(line, "bag line needs an id"));
            }
            let id = bag_id(tokens[1])?;
            let vs = tokens[2..]
                .iter()
                .map(|t| {
                    let v = number(line, t)?;
                    if v >= n {
                        return Err(Error::parse(line, format!("vertex {v} out of range for n = {n}")));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            if bags[id].replace(vs).is_some() {
                return Err(Error::parse(line, format!("bag {} listed twice", id + 1)));
            }
        } else {
            expect_len(line, &tokens, 2)?;
            edges.push((bag_id(tokens[0])?, bag_id(tokens[1])?));
        }
    }
    let Some((_, width1, n)) = header else {
        return Err(Error::parse(last_line.max(1), "missing solution line"));
    };
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(last_line, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let td = TreeDecomposition::new(bags, edges);
    let actual = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    if actual != width1 {
        return Err(Error::parse(
            last_line.max(1),
            format!("header declares largest bag {width1}, found {actual}"),
        ));
    }
    Ok((td, n))
}

pub fn emit_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let width1 = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    writeln!(out, "s td {} {width1} {n}", td.bags.len()).unwrap();
    for (i, bag) in td.bags.iter().enumerate() {
        let mut line = format!("b {}", i + 1);
        for v in bag {
            write!(line, " {v}").unwrap();
        }
        writeln!(out, "{line}").unwrap();
    }
    for &(a, b) in &td.tree_edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}
