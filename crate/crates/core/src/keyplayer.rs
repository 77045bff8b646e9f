//! Key Player with budget exactly `κ(G)`: exhaustive over `κ`-subsets when
//! `κ <= 3`, otherwise via the `κ`-shredders of the graph.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Algorithm, SolveResult};
use crate::oracle::components_scorer;
use crate::subsets::{best_subset, check_guard, DEFAULT_SUBSET_GUARD};

/// Largest number of minimal separators the enumeration will produce.
pub const DEFAULT_SEPARATOR_GUARD: usize = 1_000_000;

/// A `k`-set whose removal leaves at least three components.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Shredder {
    pub vertices: Vec<usize>,
    pub component_count: usize,
}

/// Components of `G - removed` as vertex lists, plus for each the sorted
/// set of removed vertices adjacent to it.
fn component_neighborhoods(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut boundary = BTreeSet::new();
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if removed[w] {
                    boundary.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(boundary.into_iter().collect());
    }
    out
}

/// Every minimal vertex separator of `g`, sorted.
///
/// Seeds are the neighbourhoods of the components of `G - N[v]`; each
/// separator `S` and vertex `x ∈ S` then yield the neighbourhoods of the
/// components of `G - (S ∪ N(x))`. The closure is exactly the set of
/// minimal separators.
pub fn minimal_separators(g: &Graph, guard: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    let mut removed = vec![false; n];
    let push = |s: Vec<usize>, found: &mut BTreeSet<Vec<usize>>, queue: &mut Vec<Vec<usize>>| -> Result<()> {
        if !found.contains(&s) {
            if found.len() >= guard {
                return Err(Error::GuardExceeded {
                    what: "minimal separator enumeration",
                    needed: guard as u128 + 1,
                    limit: guard as u128,
                });
            }
            found.insert(s.clone());
            queue.push(s);
        }
        Ok(())
    };
    for v in 0..n {
        removed[v] = true;
        g.neighbors(v).iter().for_each(|&w| removed[w] = true);
        for s in component_neighborhoods(g, &removed) {
            if !s.is_empty() {
                push(s, &mut found, &mut queue)?;
            }
        }
        removed.iter_mut().for_each(|r| *r = false);
    }
    while let Some(s) = queue.pop() {
        for &x in &s {
            s.iter().for_each(|&w| removed[w] = true);
            g.neighbors(x).iter().for_each(|&w| removed[w] = true);
            for c in component_neighborhoods(g, &removed) {
                if !c.is_empty() {
                    push(c, &mut found, &mut queue)?;
                }
            }
            removed.iter_mut().for_each(|r| *r = false);
        }
    }
    if !g.is_connected() && n > 0 {
        found.insert(Vec::new());
    }
    Ok(found.into_iter().collect())
}

/// All `k`-shredders of a `k`-connected graph, sorted by vertex set.
pub fn find_k_shredders(g: &Graph, k: usize) -> Result<Vec<Shredder>> {
    if g.n() < 2 {
        return Err(Error::Precondition("need at least 2 vertices".into()));
    }
    if g.connectivity()? < k {
        return Err(Error::NotKConnected(k));
    }
    let mut out = Vec::new();
    for s in minimal_separators(g, DEFAULT_SEPARATOR_GUARD)? {
        if s.len() != k {
            continue;
        }
        let c = g.components_without(&s)?;
        if c >= 3 {
            out.push(Shredder {
                vertices: s,
                component_count: c,
            });
        }
    }
    Ok(out)
}

/// `max c(G - S)` over the minimum vertex cuts `S` of a connected,
/// non-complete graph, with `decision = value >= t`.
pub fn keyplayer_at_connectivity(g: &Graph, t: usize) -> Result<SolveResult> {
    let started = Instant::now();
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (kappa, cut) = g.min_vertex_cut()?;
    let Some(cut) = cut else {
        return Err(Error::CompleteGraph);
    };
    let (value, witness) = if kappa <= 3 {
        check_guard("key player at connectivity", n, kappa, DEFAULT_SUBSET_GUARD)?;
        let candidates: Vec<usize> = (0..n).collect();
        best_subset(&candidates, kappa, n - kappa, || components_scorer(g, |c| c >= 2))
            .expect("a minimum cut exists")
    } else {
        let shredders = find_k_shredders(g, kappa)?;
        debug_assert!(3 * shredders.len() <= 2 * n, "more shredders than 2n/3");
        let best = shredders.iter().fold(None::<&Shredder>, |acc, s| match acc {
            Some(b) if b.component_count >= s.component_count => Some(b),
            _ => Some(s),
        });
        match best {
            Some(s) => (s.component_count, s.vertices.clone()),
            None => (2, cut),
        }
    };
    Ok(SolveResult::new(value, Some(witness), t, Algorithm::KeyPlayerKappa, started))
}
