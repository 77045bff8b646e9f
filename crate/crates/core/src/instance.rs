use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A Firebreak instance: delete exactly `k` vertices other than `vf` so that
/// at least `t` vertices end up disconnected from `vf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirebreakInstance {
    pub graph: Graph,
    pub k: usize,
    pub t: usize,
    pub vf: usize,
}

impl FirebreakInstance {
    pub fn new(graph: Graph, k: usize, t: usize, vf: usize) -> Result<Self> {
        let inst = FirebreakInstance { graph, k, t, vf };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        self.graph.check_vertex(self.vf)?;
        if self.k >= self.graph.n() {
            return Err(Error::InvalidInstance(format!(
                "budget k={} must be at most n-1={}",
                self.k,
                self.graph.n() - 1
            )));
        }
        Ok(())
    }

    /// `|N(vf)|`.
    pub fn fire_degree(&self) -> usize {
        self.graph.degree(self.vf)
    }
}

/// A Key Player instance: delete exactly `k` vertices so that at least `t`
/// components remain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPlayerInstance {
    pub graph: Graph,
    pub k: usize,
    pub t: usize,
}

impl KeyPlayerInstance {
    pub fn new(graph: Graph, k: usize, t: usize) -> Result<Self> {
        let inst = KeyPlayerInstance { graph, k, t };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k > self.graph.n() {
            return Err(Error::InvalidInstance(format!(
                "budget k={} exceeds n={}",
                self.k,
                self.graph.n()
            )));
        }
        Ok(())
    }
}

/// Which solver produced a [`SolveResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Oracle,
    Easy,
    BoundedDegree,
    Tree,
    TreewidthDp,
    Permutation,
    Subtree,
    KeyPlayerOracle,
    KeyPlayerSplit,
    KeyPlayerKappa,
}

impl Algorithm {
    pub const ALL: [Algorithm; 10] = [
        Algorithm::Oracle,
        Algorithm::Easy,
        Algorithm::BoundedDegree,
        Algorithm::Tree,
        Algorithm::TreewidthDp,
        Algorithm::Permutation,
        Algorithm::Subtree,
        Algorithm::KeyPlayerOracle,
        Algorithm::KeyPlayerSplit,
        Algorithm::KeyPlayerKappa,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Easy => "easy",
            Algorithm::BoundedDegree => "bounded-degree",
            Algorithm::Tree => "tree",
            Algorithm::TreewidthDp => "treewidth-dp",
            Algorithm::Permutation => "permutation",
            Algorithm::Subtree => "subtree",
            Algorithm::KeyPlayerOracle => "keyplayer-oracle",
            Algorithm::KeyPlayerSplit => "keyplayer-split",
            Algorithm::KeyPlayerKappa => "keyplayer-kappa",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.tag() == tag)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Outcome of a solver run.
///
/// `value` is the optimum (separated vertices for Firebreak, components for
/// Key Player) and `decision` is `value >= t`. Witnesses are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Option<Vec<usize>>,
    pub decision: bool,
    pub algorithm: Algorithm,
    pub elapsed: Duration,
}

impl SolveResult {
    pub(crate) fn new(
        value: usize,
        witness: Option<Vec<usize>>,
        t: usize,
        algorithm: Algorithm,
        started: Instant,
    ) -> Self {
        let witness = witness.map(|mut w| {
            w.sort_unstable();
            w
        });
        SolveResult {
            value,
            witness,
            decision: value >= t,
            algorithm,
            elapsed: started.elapsed(),
        }
    }

    pub fn elapsed_ms(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1e3
    }
}

/// Checks a candidate firebreak: valid iff `|s| = k`, `vf ∉ s`, ids in range
/// and no repeats. `separated` is only meaningful for valid sets.
pub fn verify_witness(inst: &FirebreakInstance, s: &[usize]) -> (bool, usize) {
    let n = inst.graph.n();
    let mut seen = vec![false; n];
    for &v in s {
        if v >= n || v == inst.vf || seen[v] {
            return (false, 0);
        }
        seen[v] = true;
    }
    if s.len() != inst.k {
        return (false, 0);
    }
    match inst.graph.separated_count(s, inst.vf) {
        Ok(sep) => (true, sep),
        Err(_) => (false, 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_witness_examples() {
        let inst = FirebreakInstance::new(Graph::path(5), 1, 0, 0).unwrap();
        assert_eq!(verify_witness(&inst, &[1]), (true, 3));
        assert!(!verify_witness(&inst, &[0]).0);
        assert!(!verify_witness(&inst, &[1, 2]).0);
        assert!(!verify_witness(&inst, &[9]).0);
    }

    #[test]
    fn instance_bounds() {
        assert!(FirebreakInstance::new(Graph::path(3), 3, 0, 0).is_err());
        assert!(FirebreakInstance::new(Graph::path(3), 2, 0, 3).is_err());
        assert!(KeyPlayerInstance::new(Graph::path(3), 3, 0).is_ok());
        assert!(KeyPlayerInstance::new(Graph::path(3), 4, 0).is_err());
    }

    #[test]
    fn algorithm_tags_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(Algorithm::from_tag(a.tag()), Some(a));
        }
    }
}
