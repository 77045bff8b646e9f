use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bags over a tree. Bag contents are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        TreeDecomposition { bags, tree_edges }
    }

    /// Maximum bag size minus one (zero for an empty decomposition).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub(crate) fn adjacency(&self) -> Result<Vec<Vec<usize>>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            if a >= self.bags.len() || b >= self.bags.len() || a == b {
                return Err(Error::InvalidDecomposition(format!("bad tree edge {a}-{b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(adj)
    }

    /// Checks the bag tree is a tree and all three decomposition axioms:
    /// vertex coverage, edge coverage, and connectedness of each vertex's
    /// bags.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let nb = self.bags.len();
        let n = g.n();
        if nb == 0 {
            return if n == 0 {
                Ok(())
            } else {
                Err(Error::InvalidDecomposition("no bags".into()))
            };
        }
        let adj = self.adjacency()?;
        if self.tree_edges.len() + 1 != nb || !connected(&adj, |_| true) {
            return Err(Error::InvalidDecomposition("bag graph is not a tree".into()));
        }
        let mut holders = vec![Vec::new(); n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Error::InvalidDecomposition(format!(
                        "bag {i} holds unknown vertex {v}"
                    )));
                }
                holders[v].push(i);
            }
        }
        if let Some(v) = holders.iter().position(Vec::is_empty) {
            return Err(Error::InvalidDecomposition(format!("vertex {v} in no bag")));
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok()) {
                return Err(Error::InvalidDecomposition(format!("edge {u}-{v} not covered")));
            }
        }
        let mut in_set = vec![false; nb];
        for (v, hs) in holders.iter().enumerate() {
            hs.iter().for_each(|&i| in_set[i] = true);
            let ok = connected_from(&adj, hs[0], |i| in_set[i]) == hs.len();
            hs.iter().for_each(|&i| in_set[i] = false);
            if !ok {
                return Err(Error::InvalidDecomposition(format!(
                    "bags holding vertex {v} are not connected"
                )));
            }
        }
        Ok(())
    }
}

fn connected(adj: &[Vec<usize>], keep: impl Fn(usize) -> bool) -> bool {
    adj.is_empty() || connected_from(adj, 0, keep) == adj.len()
}

fn connected_from(adj: &[Vec<usize>], start: usize, keep: impl Fn(usize) -> bool) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 0;
    while let Some(u) = stack.pop() {
        count += 1;
        for &w in &adj[u] {
            if !seen[w] && keep(w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    count
}

/// Tree decomposition from a min-fill elimination ordering (ties broken by
/// minimum degree, then lowest id). Bags that are subsets of a neighbouring
/// bag are contracted away. The result is validated before it is returned.
pub fn build_tree_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return Ok(TreeDecomposition::new(vec![Vec::new()], Vec::new()));
    }
    let order = min_fill_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    // eliminate, recording each vertex's higher neighbourhood
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    for &v in &order {
        let later: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &later {
            adj[a].remove(&v);
        }
        // bag index = elimination position of v
        parent[position[v]] = later
            .iter()
            .map(|&a| position[a])
            .min()
            .unwrap_or(usize::MAX);
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    // join the roots of the elimination forest into one tree
    let roots: Vec<usize> = (0..n).filter(|&i| parent[i] == usize::MAX).collect();
    for w in roots.windows(2) {
        parent[w[0]] = w[1];
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .filter(|&i| parent[i] != usize::MAX)
        .map(|i| (i, parent[i]))
        .collect();
    let td = contract_subset_bags(TreeDecomposition::new(bags, edges));
    td.validate(g)?;
    Ok(td)
}

fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill_in(&adj, v), adj[v].len(), v))
            .expect("a live vertex remains");
        let nb: Vec<usize> = adj[pick].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
            adj[a].remove(&pick);
        }
        adj[pick].clear();
        alive[pick] = false;
        order.push(pick);
    }
    order
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let nb: Vec<usize> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nb.iter().enumerate() {
        missing += nb[i + 1..].iter().filter(|b| !adj[a].contains(b)).count();
    }
    missing
}

/// Merges every bag contained in a neighbouring bag into that neighbour.
fn contract_subset_bags(td: TreeDecomposition) -> TreeDecomposition {
    let nb = td.bags.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nb];
    for &(a, b) in &td.tree_edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut bags: Vec<Option<Vec<usize>>> = td.bags.into_iter().map(Some).collect();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|v| b.binary_search(v).is_ok());
    loop {
        let mut merged = false;
        for i in 0..nb {
            let Some(bag) = bags[i].as_ref() else { continue };
            let target = adj[i]
                .iter()
                .copied()
                .find(|&j| bags[j].as_ref().is_some_and(|other| subset(bag, other)));
            if let Some(j) = target {
                let neighbours: Vec<usize> = adj[i].iter().copied().filter(|&x| x != j).collect();
                for x in neighbours {
                    adj[x].remove(&i);
                    adj[x].insert(j);
                    adj[j].insert(x);
                }
                adj[j].remove(&i);
                adj[i].clear();
                bags[i] = None;
                merged = true;
            }
        }
        if !merged {
            break;
        }
    }
    let mut remap = vec![usize::MAX; nb];
    let mut out = Vec::new();
    for (i, bag) in bags.into_iter().enumerate() {
        if let Some(bag) = bag {
            remap[i] = out.len();
            out.push(bag);
        }
    }
    let mut edges = Vec::new();
    for (i, list) in adj.iter().enumerate() {
        for &j in list {
            if i < j && remap[i] != usize::MAX && remap[j] != usize::MAX {
                edges.push((remap[i], remap[j]));
            }
        }
    }
    TreeDecomposition::new(out, edges)
}
