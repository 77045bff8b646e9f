use std::fmt::Write;

use crate::error::{Error, Result};
use crate::intersection::PermutationRepresentation;
use crate::io::{content_lines, declared, expect_len, number};

/// Parses `perm <n>` followed by `n` bottom positions, spread over any
/// number of lines.
pub fn parse_perm(text: &str) -> Result<PermutationRepresentation> {
    let mut n: Option<usize> = None;
    let mut pi = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        if tokens[0] == "perm" {
            expect_len(line, &tokens, 2)?;
            if n.is_some() {
                return Err(Error::parse(line, "second perm header"));
            }
            n = Some(declared(line, tokens[1])?);
            continue;
        }
        let Some(n) = n else {
            return Err(Error::parse(line, "values before the perm header"));
        };
        for tok in tokens {
            if pi.len() == n {
                return Err(Error::parse(line, format!("more than {n} values")));
            }
            pi.push(number(line, tok)?);
        }
    }
    let Some(n) = n else {
        return Err(Error::parse(last_line.max(1), "missing perm header"));
    };
    if pi.len() != n {
        return Err(Error::parse(last_line.max(1), format!("expected {n} values, found {}", pi.len())));
    }
    PermutationRepresentation::new(pi).map_err(|e| Error::parse(last_line.max(1), e.to_string()))
}

pub fn emit_perm(rep: &PermutationRepresentation) -> String {
    let mut out = String::new();
    writeln!(out, "perm {}", rep.n()).unwrap();
    let values: Vec<String> = rep.pi.iter().map(ToString::to_string).collect();
    writeln!(out, "{}", values.join(" ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "perm 5\n1 3 4 0 2\n";
        let rep = parse_perm(text).unwrap();
        assert_eq!(rep.pi, vec![1, 3, 4, 0, 2]);
        assert_eq!(emit_perm(&rep), text);
        assert_eq!(parse_perm("c x\nperm 3\n2\n0 1\n").unwrap().pi, vec![2, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_perm("perm 3\n0 0 1\n").is_err());
        assert!(parse_perm("perm 3\n0 1\n").is_err());
        assert!(parse_perm("perm 2\n0 1 2\n").is_err());
        assert!(parse_perm("0 1\n").is_err());
        assert!(parse_perm("perm x\n").is_err());
    }
}
