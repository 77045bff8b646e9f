//! Firebreak on permutation graphs and on intersection graphs of subtrees
//! of a tree, driven by the separators their representations expose.

mod permutation;
mod subtree;

pub use permutation::{
    cutline_minimal_separators, firebreak_permutation, permutation_graph, PermutationRepresentation,
};
pub use subtree::{
    firebreak_subtree, firebreak_subtree_with, SubtreeRepresentation, DEFAULT_LEAFAGE_GUARD,
};

use crate::graph::Graph;

/// Tracks the best exact-`k` firebreak built from candidate deletion sets of
/// size at most `k`.
///
/// A candidate `U` is padded to `k` vertices with the lowest ids of `vf`'s
/// component first (which never reconnects anything), then with the lowest
/// separated ids. The padded set is scored directly.
pub(crate) struct PaddedSearch<'g> {
    g: &'g Graph,
    vf: usize,
    k: usize,
    best: Option<(usize, Vec<usize>)>,
}

impl<'g> PaddedSearch<'g> {
    pub(crate) fn new(g: &'g Graph, vf: usize, k: usize) -> Self {
        PaddedSearch {
            g,
            vf,
            k,
            best: None,
        }
    }

    /// Scores `u` (sorted, without `vf`, at most `k` vertices).
    pub(crate) fn consider(&mut self, u: &[usize]) {
        debug_assert!(u.len() <= self.k && !u.contains(&self.vf));
        let g = self.g;
        let n = g.n();
        let mut deleted = vec![false; n];
        u.iter().for_each(|&v| deleted[v] = true);
        let mut in_fire = vec![false; n];
        g.component_of(u, self.vf).into_iter().for_each(|v| in_fire[v] = true);
        let mut witness = u.to_vec();
        let mut need = self.k - u.len();
        let fire_side = (0..n).filter(|&v| in_fire[v] && v != self.vf);
        let far_side = (0..n).filter(|&v| !in_fire[v] && !deleted[v]);
        for v in fire_side.chain(far_side) {
            if need == 0 {
                break;
            }
            witness.push(v);
            need -= 1;
        }
        witness.sort_unstable();
        let value = g
            .separated_count(&witness, self.vf)
            .expect("padded witness excludes vf");
        if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
            self.best = Some((value, witness));
        }
    }

    /// No candidate can beat the current best.
    pub(crate) fn saturated(&self) -> bool {
        self.best
            .as_ref()
            .is_some_and(|(b, _)| *b + self.k + 1 >= self.g.n())
    }

    pub(crate) fn finish(self) -> (usize, Vec<usize>) {
        self.best.expect("the empty candidate is always considered")
    }
}

/// Sorted, deduplicated union of two sorted sets.
pub(crate) fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}
