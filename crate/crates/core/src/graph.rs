//! Undirected simple graphs on dense vertex ids `0..n`.
//!
//! Every solver in the crate works on [`Graph`]. Adjacency lists are kept
//! sorted so membership tests are a binary search and edge iteration is
//! deterministic.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("complete graph edges are simple")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are simple")
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Connected components: the count and a per-vertex label in `0..count`.
    /// Labels are assigned in order of each component's smallest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// `c(G - S)`: the number of components after deleting `removed`.
    pub fn components_without(&self, removed: &[usize]) -> Result<usize> {
        let mut probe = Probe::new(self.n());
        for &v in removed {
            self.check_vertex(v)?;
            probe.block(v);
        }
        Ok(probe.count_components(self))
    }

    /// Number of vertices outside `s ∪ {vf}` that are not connected to `vf`
    /// in `G - s`.
    pub fn separated_count(&self, s: &[usize], vf: usize) -> Result<usize> {
        self.check_vertex(vf)?;
        let mut probe = Probe::new(self.n());
        for &v in s {
            self.check_vertex(v)?;
            if v == vf {
                return Err(Error::Precondition(format!(
                    "fire origin {vf} is in the deleted set"
                )));
            }
            probe.block(v);
        }
        Ok(probe.separated(self, vf))
    }

    /// The vertex set of `vf`'s component in `G - s` (sorted).
    pub fn component_of(&self, s: &[usize], vf: usize) -> Vec<usize> {
        let mut probe = Probe::new(self.n());
        for &v in s {
            probe.block(v);
        }
        probe.reach(self, vf);
        let mut out = probe.queue.clone();
        out.sort_unstable();
        out
    }

    /// Vertex connectivity `κ(G)`: the size of a smallest vertex set whose
    /// removal disconnects the graph, with `κ(K_n) = n - 1`.
    pub fn connectivity(&self) -> Result<usize> {
        Ok(self.min_vertex_cut()?.0)
    }

    /// `κ(G)` together with a cut of that size (`None` for complete graphs).
    ///
    /// Local connectivities come from unit-capacity max flow on the
    /// vertex-split network. Only pairs `(v_i, v_j)` with `i <= best` are
    /// probed: some vertex among the first `κ + 1` lies outside a minimum
    /// cut, and every lower-index vertex is inside it.
    pub fn min_vertex_cut(&self) -> Result<(usize, Option<Vec<usize>>)> {
        let n = self.n();
        if n < 2 {
            return Err(Error::Precondition(
                "connectivity needs at least 2 vertices".into(),
            ));
        }
        if !self.is_connected() {
            return Ok((0, Some(Vec::new())));
        }
        if self.is_complete() {
            return Ok((n - 1, None));
        }
        let mut best = n - 1;
        let mut best_cut = None;
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if self.has_edge(i, j) {
                    continue;
                }
                let mut net = flow::SplitNetwork::new(self, i, j);
                let f = net.max_flow(best);
                if f < best {
                    best = f;
                    best_cut = Some(net.min_cut());
                }
            }
            i += 1;
        }
        Ok((best, best_cut))
    }
}

/// Reusable BFS scratch space for repeated separation queries on one graph.
pub(crate) struct Probe {
    blocked: Vec<bool>,
    mark: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
}

impl Probe {
    pub(crate) fn new(n: usize) -> Self {
        Probe {
            blocked: vec![false; n],
            mark: vec![0; n],
            stamp: 0,
            queue: Vec::with_capacity(n),
        }
    }

    pub(crate) fn block(&mut self, v: usize) {
        self.blocked[v] = true;
    }

    pub(crate) fn unblock(&mut self, v: usize) {
        self.blocked[v] = false;
    }

    fn next_stamp(&mut self) {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
    }

    /// Fills `queue` with the vertices reachable from `s` avoiding blocked ones.
    fn reach(&mut self, g: &Graph, s: usize) -> usize {
        self.next_stamp();
        self.queue.clear();
        if self.blocked[s] {
            return 0;
        }
        self.mark[s] = self.stamp;
        self.queue.push(s);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !self.blocked[w] && self.mark[w] != self.stamp {
                    self.mark[w] = self.stamp;
                    self.queue.push(w);
                }
            }
        }
        self.queue.len()
    }

    pub(crate) fn separated(&mut self, g: &Graph, vf: usize) -> usize {
        let blocked = self.blocked.iter().filter(|&&b| b).count();
        let reached = self.reach(g, vf);
        g.n() - blocked - reached
    }

    pub(crate) fn count_components(&mut self, g: &Graph) -> usize {
        self.next_stamp();
        let stamp = self.stamp;
        let mut count = 0;
        let mut stack = std::mem::take(&mut self.queue);
        for s in 0..g.n() {
            if self.blocked[s] || self.mark[s] == stamp {
                continue;
            }
            count += 1;
            self.mark[s] = stamp;
            stack.clear();
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(u) {
                    if !self.blocked[w] && self.mark[w] != stamp {
                        self.mark[w] = stamp;
                        stack.push(w);
                    }
                }
            }
        }
        self.queue = stack;
        count
    }
}

mod flow {
    use super::*;

    struct Arc {
        to: usize,
        cap: usize,
    }

    /// Vertex-split flow network: `v_in = 2v`, `v_out = 2v + 1`, unit
    /// capacity on every `v_in -> v_out` arc except at the terminals.
    pub(super) struct SplitNetwork {
        arcs: Vec<Arc>,
        out: Vec<Vec<usize>>,
        source: usize,
        sink: usize,
    }

    impl SplitNetwork {
        pub(super) fn new(g: &Graph, s: usize, t: usize) -> Self {
            let n = g.n();
            let inf = n + 1;
            let mut net = SplitNetwork {
                arcs: Vec::with_capacity(2 * (n + 2 * g.m())),
                out: vec![Vec::new(); 2 * n],
                source: 2 * s + 1,
                sink: 2 * t,
            };
            for v in 0..n {
                let cap = if v == s || v == t { inf } else { 1 };
                net.add(2 * v, 2 * v + 1, cap);
            }
            for (u, v) in g.edges() {
                net.add(2 * u + 1, 2 * v, inf);
                net.add(2 * v + 1, 2 * u, inf);
            }
            net
        }

        fn add(&mut self, from: usize, to: usize, cap: usize) {
            self.out[from].push(self.arcs.len());
            self.arcs.push(Arc { to, cap });
            self.out[to].push(self.arcs.len());
            self.arcs.push(Arc { to: from, cap: 0 });
        }

        /// Augments until no path remains or the flow reaches `limit`.
        pub(super) fn max_flow(&mut self, limit: usize) -> usize {
            let mut flow = 0;
            let nodes = self.out.len();
            let mut pred = vec![usize::MAX; nodes];
            while flow < limit {
                pred.iter_mut().for_each(|p| *p = usize::MAX);
                let mut queue = VecDeque::from([self.source]);
                let mut found = false;
                'bfs: while let Some(u) = queue.pop_front() {
                    for &a in &self.out[u] {
                        let to = self.arcs[a].to;
                        if self.arcs[a].cap > 0 && to != self.source && pred[to] == usize::MAX {
                            pred[to] = a;
                            if to == self.sink {
                                found = true;
                                break 'bfs;
                            }
                            queue.push_back(to);
                        }
                    }
                }
                if !found {
                    break;
                }
                let mut v = self.sink;
                while v != self.source {
                    let a = pred[v];
                    self.arcs[a].cap -= 1;
                    self.arcs[a ^ 1].cap += 1;
                    v = self.arcs[a ^ 1].to;
                }
                flow += 1;
            }
            flow
        }

        /// Vertices whose split arc crosses the residual source side.
        pub(super) fn min_cut(&self) -> Vec<usize> {
            let nodes = self.out.len();
            let mut seen = vec![false; nodes];
            let mut stack = vec![self.source];
            seen[self.source] = true;
            while let Some(u) = stack.pop() {
                for &a in &self.out[u] {
                    let to = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && !seen[to] {
                        seen[to] = true;
                        stack.push(to);
                    }
                }
            }
            (0..nodes / 2)
                .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::empty(5).components().0, 5);
        assert_eq!(Graph::path(3).components().0, 1);
        let (count, labels) = two_triangles().components();
        assert_eq!(count, 2);
        assert_eq!(labels, vec![0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn separated_count_examples() {
        assert_eq!(Graph::path(3).separated_count(&[1], 0).unwrap(), 1);
        assert_eq!(Graph::cycle(5).separated_count(&[], 2).unwrap(), 0);
        assert_eq!(Graph::complete(4).separated_count(&[1], 0).unwrap(), 0);
        assert!(Graph::path(3).separated_count(&[0], 0).is_err());
        assert!(Graph::path(3).separated_count(&[7], 0).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(Graph::complete(5).connectivity().unwrap(), 4);
        assert_eq!(Graph::path(3).connectivity().unwrap(), 1);
        assert_eq!(Graph::cycle(6).connectivity().unwrap(), 2);
        assert_eq!(two_triangles().connectivity().unwrap(), 0);
        assert!(Graph::empty(1).connectivity().is_err());
    }

    #[test]
    fn min_cut_witness_disconnects() {
        let g = Graph::cycle(7);
        let (k, cut) = g.min_vertex_cut().unwrap();
        let cut = cut.unwrap();
        assert_eq!(cut.len(), k);
        assert!(g.components_without(&cut).unwrap() >= 2);
    }

    #[test]
    fn edges_are_sorted_pairs() {
        let g = Graph::from_edges(4, &[(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(3, 1));
    }
}
