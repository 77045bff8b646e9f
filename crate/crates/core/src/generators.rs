//! Seeded instance generators. Every generator is a pure function of its
//! parameters and seed (xoshiro256++ seeded from a `u64`).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::closed_form::SplitPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intersection::{PermutationRepresentation, SubtreeRepresentation};

pub type Rand = Xoshiro256PlusPlus;

pub fn rng(seed: u64) -> Rand {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidInstance(format!("probability {p} outside [0, 1]")))
    }
}

/// Four copies `Q0..Q3` of `K_t` with `Q_j[i] = j*t + i`, joined by the
/// row edges `Q_j[i] - Q_{j+1}[i]`. Connectivity `t`, and more than `2^t`
/// minimum cuts.
pub fn gen_manycuts(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::InvalidInstance(format!("many-cuts family needs t >= 2, got {t}")));
    }
    let mut edges = Vec::new();
    for j in 0..4 {
        for a in 0..t {
            for b in a + 1..t {
                edges.push((j * t + a, j * t + b));
            }
        }
    }
    for j in 0..3 {
        for i in 0..t {
            edges.push((j * t + i, (j + 1) * t + i));
        }
    }
    Graph::from_edges(4 * t, &edges)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("Petersen edges are simple")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Split graph: clique `0..na`, independent set `na..na+nb`, each clique /
/// independent pair joined with probability `p`. An independent vertex that
/// sees the whole clique is moved into it so the clique stays maximum.
pub fn gen_split(na: usize, nb: usize, p: f64, seed: u64) -> Result<(Graph, SplitPartition)> {
    check_probability(p)?;
    if na == 0 {
        return Err(Error::InvalidInstance("clique side must be non-empty".into()));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for a in 0..na {
        for b in a + 1..na {
            edges.push((a, b));
        }
    }
    for b in na..na + nb {
        for a in 0..na {
            if r.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::from_edges(na + nb, &edges)?;
    let mut clique: Vec<usize> = (0..na).collect();
    let mut independent: Vec<usize> = (na..na + nb).collect();
    if let Some(pos) = independent.iter().position(|&b| g.degree(b) == na) {
        clique.push(independent.remove(pos));
    }
    let part = SplitPartition {
        clique,
        independent,
    };
    part.validate(&g)?;
    Ok((g, part))
}

/// Uniformly random permutation representation.
pub fn gen_permutation(n: usize, seed: u64) -> Result<PermutationRepresentation> {
    if n == 0 {
        return Err(Error::InvalidInstance("permutation needs n >= 1".into()));
    }
    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(&mut rng(seed));
    PermutationRepresentation::new(pi)
}

/// Random recursive tree with shuffled labels. Linear time.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidInstance("tree needs n >= 1".into()));
    }
    let mut r = rng(seed);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|v| (label[r.random_range(0..v)], label[v]))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Partial `w`-tree: a random `w`-tree on `n` vertices (each new vertex
/// joined to a random existing `w`-clique), then every edge kept with
/// probability `q`. Treewidth is at most `w`.
pub fn gen_partial_ktree(n: usize, w: usize, q: f64, seed: u64) -> Result<Graph> {
    check_probability(q)?;
    if n == 0 || w == 0 {
        return Err(Error::InvalidInstance("partial k-tree needs n >= 1 and w >= 1".into()));
    }
    let mut r = rng(seed);
    let base = n.min(w + 1);
    let mut edges = Vec::new();
    for a in 0..base {
        for b in a + 1..base {
            edges.push((a, b));
        }
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    if n > w + 1 {
        for skip in 0..=w {
            cliques.push((0..=w).filter(|&x| x != skip).collect());
        }
    }
    for v in w + 1..n {
        let c = cliques[r.random_range(0..cliques.len())].clone();
        for &u in &c {
            edges.push((u, v));
        }
        for skip in 0..w {
            let mut next: Vec<usize> = c.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, x)| x).collect();
            next.push(v);
            cliques.push(next);
        }
    }
    let kept: Vec<(usize, usize)> = edges.into_iter().filter(|_| r.random_bool(q)).collect();
    Graph::from_edges(n, &kept)
}

/// Random subtree representation on a spider host with `legs` legs over
/// `host_n` nodes (a path when `legs <= 2`). Each vertex grows a connected
/// subtree of up to `max_size` nodes from a random start.
pub fn gen_subtree(n: usize, host_n: usize, legs: usize, max_size: usize, seed: u64) -> Result<SubtreeRepresentation> {
    if host_n == 0 || max_size == 0 {
        return Err(Error::InvalidInstance("host and subtree sizes must be positive".into()));
    }
    let mut r = rng(seed);
    let legs = legs.max(1);
    let mut host_edges = Vec::new();
    let mut tips = vec![0usize; legs];
    for x in 1..host_n {
        let leg = if legs <= 2 { 0 } else { r.random_range(0..legs) };
        host_edges.push((tips[leg], x));
        tips[leg] = x;
    }
    let host = Graph::from_edges(host_n, &host_edges)?;
    let mut subtrees = Vec::with_capacity(n);
    for _ in 0..n {
        let size = r.random_range(1..=max_size.min(host_n));
        let mut nodes = vec![r.random_range(0..host_n)];
        while nodes.len() < size {
            let frontier: Vec<usize> = nodes
                .iter()
                .flat_map(|&x| host.neighbors(x).iter().copied())
                .filter(|y| !nodes.contains(y))
                .collect();
            if frontier.is_empty() {
                break;
            }
            nodes.push(frontier[r.random_range(0..frontier.len())]);
        }
        subtrees.push(nodes);
    }
    SubtreeRepresentation::new(host_n, host_edges, subtrees)
}

/// Random intervals over points `0..span`.
pub fn gen_intervals(n: usize, span: usize, seed: u64) -> Result<Vec<(usize, usize)>> {
    if span == 0 {
        return Err(Error::InvalidInstance("interval span must be positive".into()));
    }
    let mut r = rng(seed);
    Ok((0..n)
        .map(|_| {
            let a = r.random_range(0..span);
            let b = r.random_range(0..span);
            (a.min(b), a.max(b))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::split_partition;
    use crate::intersection::permutation_graph;
    use crate::treewidth::build_tree_decomposition;

    #[test]
    fn manycuts_shape() {
        let g = gen_manycuts(3).unwrap();
        assert_eq!((g.n(), g.m()), (12, 21));
        assert_eq!(g.connectivity().unwrap(), 3);
        assert!(gen_manycuts(1).is_err());
    }

    #[test]
    fn petersen_is_cubic_and_three_connected() {
        let g = petersen();
        assert_eq!(g.m(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(g.connectivity().unwrap(), 3);
    }

    #[test]
    fn trees_and_splits() {
        for seed in 0..20 {
            let g = gen_tree(1 + seed as usize * 3, seed).unwrap();
            assert!(g.is_tree());
            let (g, part) = gen_split(4, 5, 0.5, seed).unwrap();
            assert!(split_partition(&g).is_ok());
            assert_eq!(part.clique.len() + part.independent.len(), 9);
        }
    }

    #[test]
    fn permutations_round_trip() {
        let rep = gen_permutation(8, 3).unwrap();
        let g = permutation_graph(&rep).unwrap();
        assert_eq!(g, permutation_graph(&PermutationRepresentation::new(rep.pi.clone()).unwrap()).unwrap());
    }

    #[test]
    fn full_ktrees_have_width_k() {
        for seed in 0..10 {
            let g = gen_partial_ktree(40, 3, 1.0, seed).unwrap();
            assert!(build_tree_decomposition(&g).unwrap().width() <= 3);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(gen_gnp(12, 0.3, 9).unwrap(), gen_gnp(12, 0.3, 9).unwrap());
        assert_eq!(gen_subtree(6, 7, 3, 3, 1).unwrap(), gen_subtree(6, 7, 3, 3, 1).unwrap());
        assert!(gen_subtree(6, 7, 3, 3, 1).unwrap().leafage() <= 3);
    }
}
