use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treewidth::TreeDecomposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// A rooted nice tree decomposition stored bottom-up: every child index is
/// smaller than its parent's, and the root is the last node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Checks node-type invariants, an empty root bag, and that the bags
    /// form a valid tree decomposition of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.nodes.is_empty() {
            return bad("no nodes".into());
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return bad("root bag is not empty".into());
        }
        let mut parents = vec![0usize; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            if node.bag.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("node {i} bag is not sorted"));
            }
            for &c in &node.children {
                if c >= i {
                    return bad(format!("node {i} has child {c} out of order"));
                }
                parents[c] += 1;
            }
            let child_bag = |j: usize| &self.nodes[node.children[j]].bag;
            let ok = match node.kind {
                NiceKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NiceKind::Introduce(v) => {
                    node.children.len() == 1
                        && node.bag.binary_search(&v).is_ok()
                        && child_bag(0).len() + 1 == node.bag.len()
                        && child_bag(0).iter().all(|u| node.bag.binary_search(u).is_ok())
                }
                NiceKind::Forget(v) => {
                    node.children.len() == 1
                        && node.bag.binary_search(&v).is_err()
                        && child_bag(0).len() == node.bag.len() + 1
                        && node.bag.iter().all(|u| child_bag(0).binary_search(u).is_ok())
                        && child_bag(0).binary_search(&v).is_ok()
                }
                NiceKind::Join => {
                    node.children.len() == 2 && *child_bag(0) == node.bag && *child_bag(1) == node.bag
                }
            };
            if !ok {
                return bad(format!("node {i} violates its {:?} shape", node.kind));
            }
        }
        if parents[..self.root()].iter().any(|&p| p != 1) {
            return bad("nodes do not form a single rooted tree".into());
        }
        self.as_tree_decomposition().validate(g)
    }

    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition::new(bags, edges)
    }
}

/// Normalizes a valid decomposition into Leaf / Introduce / Forget / Join
/// nodes with an empty root bag and the same width.
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    let nb = td.bags.len();
    if nb == 0 {
        return Err(Error::InvalidDecomposition("no bags".into()));
    }
    let adj = td.adjacency()?;
    if td.tree_edges.len() + 1 != nb {
        return Err(Error::InvalidDecomposition("bag graph is not a tree".into()));
    }

    // iterative post-order from bag 0
    let mut parent = vec![usize::MAX; nb];
    let mut order = Vec::with_capacity(nb);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in &adj[u] {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    if order.len() != nb {
        return Err(Error::InvalidDecomposition("bag graph is not connected".into()));
    }

    let mut nice = NiceTreeDecomposition { nodes: Vec::new() };
    let mut top = vec![usize::MAX; nb];
    for &u in order.iter().rev() {
        let target = &td.bags[u];
        let kids: Vec<usize> = adj[u].iter().copied().filter(|&w| w != parent[u] || u == 0).collect();
        let mut branches: Vec<usize> = kids
            .iter()
            .map(|&c| morph(&mut nice, top[c], target))
            .collect();
        if branches.is_empty() {
            let leaf = nice.push(NiceKind::Leaf, Vec::new(), Vec::new());
            branches.push(morph(&mut nice, leaf, target));
        }
        let mut acc = branches[0];
        for &b in &branches[1..] {
            acc = nice.push(NiceKind::Join, target.clone(), vec![acc, b]);
        }
        top[u] = acc;
    }
    morph(&mut nice, top[0], &[]);
    Ok(nice)
}

/// Chains Forget then Introduce nodes on top of `from` until its bag equals
/// `target`, returning the new top node.
fn morph(nice: &mut NiceTreeDecomposition, from: usize, target: &[usize]) -> usize {
    let mut cur = from;
    let mut bag = nice.nodes[from].bag.clone();
    let drop: Vec<usize> = bag.iter().copied().filter(|v| target.binary_search(v).is_err()).collect();
    for v in drop {
        bag.retain(|&x| x != v);
        cur = nice.push(NiceKind::Forget(v), bag.clone(), vec![cur]);
    }
    let add: Vec<usize> = target.iter().copied().filter(|v| bag.binary_search(v).is_err()).collect();
    for v in add {
        let pos = bag.binary_search(&v).unwrap_err();
        bag.insert(pos, v);
        cur = nice.push(NiceKind::Introduce(v), bag.clone(), vec![cur]);
    }
    cur
}
