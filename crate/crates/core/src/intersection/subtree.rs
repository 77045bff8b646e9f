use std::collections::BTreeSet;
use std::time::Instant;

use crate::closed_form::firebreak_easy;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Algorithm, FirebreakInstance, SolveResult};
use crate::intersection::{union, PaddedSearch};
use crate::subsets::DEFAULT_SUBSET_GUARD;

/// Largest host leaf count the subtree solver accepts by default.
pub const DEFAULT_LEAFAGE_GUARD: usize = 4;

/// Graph vertices as subtrees of a host tree on nodes `0..host_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeRepresentation {
    pub host_n: usize,
    pub host_edges: Vec<(usize, usize)>,
    /// Sorted host nodes of each vertex's subtree.
    pub subtrees: Vec<Vec<usize>>,
}

impl SubtreeRepresentation {
    pub fn new(host_n: usize, host_edges: Vec<(usize, usize)>, mut subtrees: Vec<Vec<usize>>) -> Result<Self> {
        for s in &mut subtrees {
            s.sort_unstable();
            s.dedup();
        }
        let rep = SubtreeRepresentation {
            host_n,
            host_edges,
            subtrees,
        };
        rep.validate()?;
        Ok(rep)
    }

    /// Interval graph: interval `i` covers points `lo..=hi` of a host path.
    pub fn from_intervals(intervals: &[(usize, usize)]) -> Result<Self> {
        let host_n = intervals.iter().map(|&(_, hi)| hi + 1).max().unwrap_or(1);
        let host_edges = (1..host_n).map(|x| (x - 1, x)).collect();
        let subtrees = intervals
            .iter()
            .map(|&(lo, hi)| {
                if lo > hi {
                    Err(Error::InvalidRepresentation(format!("empty interval [{lo}, {hi}]")))
                } else {
                    Ok((lo..=hi).collect())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SubtreeRepresentation::new(host_n, host_edges, subtrees)
    }

    fn host(&self) -> Result<Graph> {
        Graph::from_edges(self.host_n, &self.host_edges)
            .map_err(|e| Error::InvalidRepresentation(format!("host: {e}")))
    }

    /// Host is a tree and every subtree is a non-empty connected node set.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRepresentation(msg));
        if self.host_n == 0 {
            return bad("host tree has no nodes".into());
        }
        let host = self.host()?;
        if !host.is_tree() {
            return bad("host is not a tree".into());
        }
        for (v, nodes) in self.subtrees.iter().enumerate() {
            if nodes.is_empty() {
                return bad(format!("vertex {v} has an empty subtree"));
            }
            if let Some(&x) = nodes.iter().find(|&&x| x >= self.host_n) {
                return bad(format!("vertex {v} uses unknown host node {x}"));
            }
            let outside: Vec<usize> = (0..self.host_n).filter(|x| nodes.binary_search(x).is_err()).collect();
            if host.component_of(&outside, nodes[0]).len() != nodes.len() {
                return bad(format!("subtree of vertex {v} is not connected"));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.subtrees.len()
    }

    /// Number of host leaves (a single-node host counts as one leaf).
    pub fn leafage(&self) -> usize {
        let mut deg = vec![0usize; self.host_n];
        for &(a, b) in &self.host_edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.iter().filter(|&&d| d <= 1).count()
    }

    /// The intersection graph: `u ~ v` iff their subtrees share a node.
    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.n();
        let mut holders = vec![Vec::new(); self.host_n];
        for (v, nodes) in self.subtrees.iter().enumerate() {
            nodes.iter().for_each(|&x| holders[x].push(v));
        }
        let mut edges = BTreeSet::new();
        for hs in &holders {
            for (i, &u) in hs.iter().enumerate() {
                for &w in &hs[i + 1..] {
                    edges.insert((u, w));
                }
            }
        }
        Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>())
    }

    /// Vertices whose subtree contains all of `nodes`.
    fn holding(&self, nodes: &[usize]) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| nodes.iter().all(|x| self.subtrees[v].binary_search(x).is_ok()))
            .collect()
    }
}

/// Firebreak on a subtree intersection graph with the default leafage guard.
pub fn firebreak_subtree(rep: &SubtreeRepresentation, k: usize, t: usize, vf: usize) -> Result<SolveResult> {
    firebreak_subtree_with(rep, k, t, vf, DEFAULT_LEAFAGE_GUARD)
}

/// Firebreak on a subtree intersection graph.
///
/// For each host leaf, walk the host path towards the nearest node of
/// `vf`'s subtree. The candidate separators on that path are the vertices
/// holding a path node and the vertices holding a path edge. One candidate
/// (or none) is chosen per leaf; every union within budget is padded to
/// exactly `k` and scored. The number of combinations is exponential only in
/// the leafage.
pub fn firebreak_subtree_with(
    rep: &SubtreeRepresentation,
    k: usize,
    t: usize,
    vf: usize,
    max_leafage: usize,
) -> Result<SolveResult> {
    let started = Instant::now();
    let g = rep.graph()?;
    let leafage = rep.leafage();
    if leafage > max_leafage {
        return Err(Error::GuardExceeded {
            what: "subtree solver leafage",
            needed: leafage as u128,
            limit: max_leafage as u128,
        });
    }
    let inst = FirebreakInstance::new(g, k, t, vf)?;
    if inst.fire_degree() <= k {
        let mut r = firebreak_easy(&inst)?;
        r.algorithm = Algorithm::Subtree;
        return Ok(r);
    }
    let g = &inst.graph;
    let host = rep.host()?;
    let fire_nodes = &rep.subtrees[vf];

    // multi-source BFS from vf's subtree gives each host node its next hop
    let mut next = vec![usize::MAX; rep.host_n];
    let mut queue: Vec<usize> = fire_nodes.clone();
    fire_nodes.iter().for_each(|&x| next[x] = x);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &y in host.neighbors(x) {
            if next[y] == usize::MAX {
                next[y] = x;
                queue.push(y);
            }
        }
    }

    let mut per_leaf: Vec<Vec<Vec<usize>>> = Vec::new();
    for leaf in (0..rep.host_n).filter(|&x| host.degree(x) <= 1) {
        let mut options = BTreeSet::from([Vec::new()]);
        let mut x = leaf;
        while next[x] != x {
            for s in [rep.holding(&[x]), rep.holding(&[x, next[x]])] {
                if s.len() <= k && !s.contains(&vf) {
                    options.insert(s);
                }
            }
            x = next[x];
        }
        per_leaf.push(options.into_iter().collect());
    }
    let combos: u128 = per_leaf.iter().map(|o| o.len() as u128).product();
    if combos > DEFAULT_SUBSET_GUARD {
        return Err(Error::GuardExceeded {
            what: "subtree solver combinations",
            needed: combos,
            limit: DEFAULT_SUBSET_GUARD,
        });
    }

    let mut search = PaddedSearch::new(g, vf, k);
    let mut seen = BTreeSet::new();
    let mut choice = vec![0usize; per_leaf.len()];
    loop {
        let u = choice
            .iter()
            .zip(&per_leaf)
            .fold(Vec::new(), |acc, (&c, opts)| union(&acc, &opts[c]));
        if u.len() <= k && seen.insert(u.clone()) {
            search.consider(&u);
            if search.saturated() {
                break;
            }
        }
        // odometer over the per-leaf choices
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < per_leaf[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    let (value, witness) = search.finish();
    Ok(SolveResult::new(value, Some(witness), t, Algorithm::Subtree, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Host path h0-h1-h2-h3 with vf = {h0,h1}, a = {h1,h2}, b = {h2,h3}, c = {h3}.
    fn chain() -> SubtreeRepresentation {
        SubtreeRepresentation::from_intervals(&[(0, 1), (1, 2), (2, 3), (3, 3)]).unwrap()
    }

    #[test]
    fn chain_examples() {
        let r = firebreak_subtree(&chain(), 1, 2, 0).unwrap();
        assert!(r.decision);
        assert_eq!(r.witness, Some(vec![1]));
        assert!(!firebreak_subtree(&chain(), 1, 3, 0).unwrap().decision);
    }

    #[test]
    fn node_separators_alone_are_not_enough() {
        // p = q = {h1} make every host-node separator contain the fire
        let rep = SubtreeRepresentation::from_intervals(&[(0, 1), (1, 1), (1, 1), (1, 2), (2, 3), (3, 3)]).unwrap();
        let r = firebreak_subtree(&rep, 1, 2, 0).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, Some(vec![3]));
    }

    #[test]
    fn validation() {
        assert!(SubtreeRepresentation::new(3, vec![(0, 1), (1, 2)], vec![vec![0, 2]]).is_err());
        assert!(SubtreeRepresentation::new(3, vec![(0, 1)], vec![vec![0]]).is_err());
        assert!(SubtreeRepresentation::new(2, vec![(0, 1)], vec![vec![]]).is_err());
        assert!(SubtreeRepresentation::new(2, vec![(0, 1)], vec![vec![5]]).is_err());
        let star = SubtreeRepresentation::new(4, vec![(0, 1), (0, 2), (0, 3)], vec![vec![0, 1]]).unwrap();
        assert_eq!(star.leafage(), 3);
        assert_eq!(chain().leafage(), 2);
    }

    #[test]
    fn graph_of_chain() {
        let g = chain().graph().unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn leafage_guard() {
        let host = vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)];
        let rep = SubtreeRepresentation::new(6, host, (0..6).map(|x| vec![x]).collect()).unwrap();
        assert!(firebreak_subtree(&rep, 1, 0, 0).unwrap_err().is_guard());
        assert!(firebreak_subtree_with(&rep, 1, 0, 0, 5).is_ok());
    }
}
