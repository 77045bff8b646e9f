//! Linear-time Firebreak on trees.
//!
//! Rooted at the fire, deleting a child `c` of `vf` saves the `size(c) - 1`
//! other vertices of its subtree, and deleting anything deeper saves less.
//! The optimum deletes the `k` children with the largest subtrees.

use std::cmp::Ordering;
use std::time::Instant;

use crate::closed_form::firebreak_easy;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Algorithm, FirebreakInstance, SolveResult};

/// Parent pointers and subtree sizes of a tree rooted at a chosen vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedSubtreeSizes {
    pub root: usize,
    /// `usize::MAX` for the root.
    pub parent: Vec<usize>,
    pub size: Vec<usize>,
}

impl RootedSubtreeSizes {
    /// Roots `g` at `root` with an explicit stack; `g` must be a tree.
    pub fn new(g: &Graph, root: usize) -> Result<Self> {
        g.check_vertex(root)?;
        if !g.is_tree() {
            return Err(Error::NotATree);
        }
        let n = g.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in g.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        let mut size = vec![1; n];
        for &u in order.iter().rev() {
            if u != root {
                size[parent[u]] += size[u];
            }
        }
        parent[root] = usize::MAX;
        Ok(RootedSubtreeSizes { root, parent, size })
    }
}

/// Optimal firebreak on a tree.
pub fn firebreak_tree(inst: &FirebreakInstance) -> Result<SolveResult> {
    let started = Instant::now();
    inst.validate()?;
    let g = &inst.graph;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if inst.fire_degree() <= inst.k {
        let mut r = firebreak_easy(inst)?;
        r.algorithm = Algorithm::Tree;
        return Ok(r);
    }
    let rooted = RootedSubtreeSizes::new(g, inst.vf)?;
    let mut children: Vec<(usize, usize)> = g
        .neighbors(inst.vf)
        .iter()
        .map(|&c| (rooted.size[c], c))
        .collect();
    let k = inst.k;
    // larger subtree first, lower id on ties
    let by_rank = |a: &(usize, usize), b: &(usize, usize)| -> Ordering { b.0.cmp(&a.0).then(a.1.cmp(&b.1)) };
    let chosen: &[(usize, usize)] = if k == 0 {
        &[]
    } else {
        children.select_nth_unstable_by(k - 1, by_rank);
        &children[..k]
    };
    let value = chosen.iter().map(|&(s, _)| s).sum::<usize>() - k;
    let witness = chosen.iter().map(|&(_, c)| c).collect();
    Ok(SolveResult::new(
        value,
        Some(witness),
        inst.t,
        Algorithm::Tree,
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Center 0 with legs of lengths 3, 2 and 1.
    fn spider() -> Graph {
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6)]).unwrap()
    }

    fn solve(g: Graph, k: usize, vf: usize) -> SolveResult {
        firebreak_tree(&FirebreakInstance::new(g, k, 0, vf).unwrap()).unwrap()
    }

    #[test]
    fn spider_examples() {
        let r = solve(spider(), 1, 0);
        assert_eq!((r.value, r.witness), (2, Some(vec![1])));
        let r = solve(spider(), 2, 0);
        assert_eq!((r.value, r.witness), (3, Some(vec![1, 4])));
    }

    #[test]
    fn path_middle() {
        let r = solve(Graph::path(5), 1, 2);
        assert_eq!((r.value, r.witness), (1, Some(vec![1])));
    }

    #[test]
    fn zero_budget_and_easy_case() {
        assert_eq!(solve(spider(), 0, 0).value, 0);
        let r = solve(Graph::path(5), 1, 0);
        assert_eq!(r.value, 3);
        assert_eq!(r.algorithm, Algorithm::Tree);
    }

    #[test]
    fn ties_prefer_lower_ids() {
        let r = solve(Graph::star(5), 2, 0);
        assert_eq!(r.witness, Some(vec![1, 2]));
        assert_eq!(r.value, 0);
    }

    #[test]
    fn rejects_non_trees() {
        let inst = FirebreakInstance::new(Graph::cycle(4), 1, 0, 0).unwrap();
        assert_eq!(firebreak_tree(&inst), Err(Error::NotATree));
    }

    #[test]
    fn subtree_sizes() {
        let r = RootedSubtreeSizes::new(&spider(), 0).unwrap();
        assert_eq!(r.size, vec![7, 3, 2, 1, 2, 1, 1]);
        assert_eq!(r.parent[0], usize::MAX);
        assert_eq!(r.parent[3], 2);
    }
}
