use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use crate::closed_form::firebreak_easy;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Algorithm, FirebreakInstance, SolveResult};
use crate::intersection::{union, PaddedSearch};

/// Segments between two parallel lines: vertex `i` runs from top position
/// `i` to bottom position `pi[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationRepresentation {
    pub pi: Vec<usize>,
}

impl PermutationRepresentation {
    pub fn new(pi: Vec<usize>) -> Result<Self> {
        let rep = PermutationRepresentation { pi };
        rep.validate()?;
        Ok(rep)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.pi.len();
        let mut seen = vec![false; n];
        for &p in &self.pi {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidRepresentation(format!(
                    "bottom positions are not a permutation of 0..{n}"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.pi.len()
    }

    /// Segments `i` and `j` cross.
    pub fn crosses(&self, i: usize, j: usize) -> bool {
        (i < j) != (self.pi[i] < self.pi[j])
    }

    /// Segments crossing the cut-line after top position `gt` and after
    /// bottom position `gb`.
    fn crossed(&self, gt: usize, gb: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| (i <= gt) != (self.pi[i] <= gb))
            .collect()
    }
}

/// The crossing graph of the segments.
pub fn permutation_graph(rep: &PermutationRepresentation) -> Result<Graph> {
    rep.validate()?;
    let n = rep.n();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| rep.crosses(i, j))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Number of components `C` of `G - s` with `N(C) = s`.
fn full_components(g: &Graph, s: &[usize]) -> usize {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    s.iter().for_each(|&v| label[v] = usize::MAX - 1);
    let mut full = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = start;
        stack.push(start);
        let mut touched: BTreeSet<usize> = BTreeSet::new();
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if label[w] == usize::MAX {
                    label[w] = start;
                    stack.push(w);
                } else if label[w] == usize::MAX - 1 {
                    touched.insert(w);
                }
            }
        }
        if touched.len() == s.len() {
            full += 1;
        }
    }
    full
}

/// Whether `s` is a minimal separator of `g`: `G - s` has at least two
/// components whose neighbourhood is all of `s`.
pub(crate) fn is_minimal_separator(g: &Graph, s: &[usize]) -> bool {
    full_components(g, s) >= 2
}

/// Every minimal separator of the permutation graph, found as the set of
/// segments crossed by one of the `(n-1)^2` cut-lines. Sorted and
/// deduplicated.
pub fn cutline_minimal_separators(rep: &PermutationRepresentation) -> Result<Vec<Vec<usize>>> {
    let g = permutation_graph(rep)?;
    let n = rep.n();
    let mut out = BTreeSet::new();
    for gt in 0..n.saturating_sub(1) {
        for gb in 0..n - 1 {
            let s = rep.crossed(gt, gb);
            if !out.contains(&s) && is_minimal_separator(&g, &s) {
                out.insert(s);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Firebreak on a permutation graph.
///
/// Collects the minimal separators of size at most `k` avoiding `vf`, split
/// into those whose cut-line has `vf` on its left and on its right (the
/// empty set joins both). Every union of one set from each side that fits
/// the budget is padded to exactly `k` vertices and scored; the best score
/// is `F(G, k, vf)`.
pub fn firebreak_permutation(rep: &PermutationRepresentation, k: usize, t: usize, vf: usize) -> Result<SolveResult> {
    let started = Instant::now();
    let g = permutation_graph(rep)?;
    let inst = FirebreakInstance::new(g, k, t, vf)?;
    if inst.fire_degree() <= k {
        let mut r = firebreak_easy(&inst)?;
        r.algorithm = Algorithm::Permutation;
        return Ok(r);
    }
    let g = &inst.graph;
    let n = rep.n();
    let mut left = BTreeSet::from([Vec::new()]);
    let mut right = BTreeSet::from([Vec::new()]);
    for gt in 0..n - 1 {
        for gb in 0..n - 1 {
            let s = rep.crossed(gt, gb);
            if s.len() > k || s.contains(&vf) {
                continue;
            }
            let fire_left = vf <= gt;
            let family = if fire_left { &mut left } else { &mut right };
            if !family.contains(&s) && is_minimal_separator(g, &s) {
                family.insert(s);
            }
        }
    }
    let mut search = PaddedSearch::new(g, vf, k);
    let mut seen = HashSet::new();
    'outer: for s in &left {
        for t in &right {
            let u = union(s, t);
            if u.len() <= k && seen.insert(u.clone()) {
                search.consider(&u);
                if search.saturated() {
                    break 'outer;
                }
            }
        }
    }
    let (value, witness) = search.finish();
    Ok(SolveResult::new(value, Some(witness), t, Algorithm::Permutation, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(pi: &[usize]) -> PermutationRepresentation {
        PermutationRepresentation::new(pi.to_vec()).unwrap()
    }

    #[test]
    fn graph_examples() {
        assert_eq!(permutation_graph(&rep(&[0, 1, 2, 3, 4])).unwrap().m(), 0);
        assert!(permutation_graph(&rep(&[3, 2, 1, 0])).unwrap().is_complete());
        let g = permutation_graph(&rep(&[1, 3, 4, 0, 2])).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3), (1, 4), (2, 3), (2, 4)]);
        assert!(PermutationRepresentation::new(vec![0, 0, 1]).is_err());
        assert!(PermutationRepresentation::new(vec![0, 3]).is_err());
    }

    #[test]
    fn separator_examples() {
        assert_eq!(cutline_minimal_separators(&rep(&[0, 1, 2])).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(cutline_minimal_separators(&rep(&[2, 0, 1])).unwrap(), vec![vec![0]]);
        assert!(cutline_minimal_separators(&rep(&[2, 1, 0])).unwrap().is_empty());
    }

    #[test]
    fn solver_examples() {
        let r = firebreak_permutation(&rep(&[2, 0, 1]), 1, 1, 1).unwrap();
        assert!(r.decision);
        assert_eq!(r.witness, Some(vec![0]));
        let r = firebreak_permutation(&rep(&[2, 1, 0]), 1, 1, 0).unwrap();
        assert!(!r.decision);
        assert_eq!(r.value, 0);
    }

    #[test]
    fn figure_graph_values() {
        let r = rep(&[1, 3, 4, 0, 2]);
        // fire at 0, whose only neighbour is 3
        let res = firebreak_permutation(&r, 1, 0, 0).unwrap();
        assert_eq!(res.value, 3);
        // fire at 3, neighbours 0, 1, 2: deleting 1 and 2 cuts off 4
        let res = firebreak_permutation(&r, 2, 1, 3).unwrap();
        assert_eq!((res.value, res.witness), (1, Some(vec![1, 2])));
    }
}
