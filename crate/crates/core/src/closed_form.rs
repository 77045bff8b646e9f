//! Linear-time special cases and split-graph recognition.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Algorithm, FirebreakInstance, SolveResult};
use crate::oracle::{firebreak_search, OracleConfig};

/// A split partition: `clique` induces a maximum clique, `independent` is
/// an independent set, and together they partition `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    /// Checks the partition against `g`, including maximality of the clique.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut side = vec![None; n];
        for (part, set) in [(true, &self.clique), (false, &self.independent)] {
            for &v in set {
                g.check_vertex(v)?;
                if side[v].replace(part).is_some() {
                    return Err(Error::Precondition(format!("vertex {v} listed twice")));
                }
            }
        }
        if side.iter().any(Option::is_none) {
            return Err(Error::Precondition("partition does not cover V".into()));
        }
        for (i, &a) in self.clique.iter().enumerate() {
            for &b in &self.clique[i + 1..] {
                if !g.has_edge(a, b) {
                    return Err(Error::Precondition(format!("clique side misses {a}-{b}")));
                }
            }
        }
        for (u, v) in g.edges() {
            if side[u] == Some(false) && side[v] == Some(false) {
                return Err(Error::Precondition(format!(
                    "independent side has edge {u}-{v}"
                )));
            }
        }
        let a = self.clique.len();
        if self.independent.iter().any(|&b| g.degree(b) == a && a > 0) {
            return Err(Error::Precondition("clique side is not maximum".into()));
        }
        Ok(())
    }
}

/// The easy case `|N(vf)| <= k`: delete all of `N(vf)` and pad with the
/// lowest-id vertices outside `N[vf]`. Every survivor except `vf` is cut off.
pub fn firebreak_easy(inst: &FirebreakInstance) -> Result<SolveResult> {
    let started = Instant::now();
    inst.validate()?;
    let g = &inst.graph;
    let (n, k, vf) = (g.n(), inst.k, inst.vf);
    if g.degree(vf) > k {
        return Err(Error::Precondition(format!(
            "|N(vf)| = {} exceeds k = {k}",
            g.degree(vf)
        )));
    }
    let mut witness = g.neighbors(vf).to_vec();
    let fill = k - witness.len();
    witness.extend(
        (0..n)
            .filter(|&v| v != vf && !g.has_edge(vf, v))
            .take(fill),
    );
    Ok(SolveResult::new(
        n - k - 1,
        Some(witness),
        inst.t,
        Algorithm::Easy,
        started,
    ))
}

/// Recognizes split graphs from the degree sequence.
///
/// With degrees sorted non-increasingly (ties by id), `m` is the largest `i`
/// with `d_i >= i - 1`. The top `m` vertices form a clique and the rest an
/// independent set exactly when `Σ_{i<=m} d_i = m(m-1) + Σ_{i>m} d_i`; the
/// resulting sides are then checked explicitly.
pub fn split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.n();
    if n == 0 {
        return Ok(SplitPartition {
            clique: Vec::new(),
            independent: Vec::new(),
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(1);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * (m - 1) + tail {
        return Err(Error::NotSplit);
    }
    let mut clique = order[..m].to_vec();
    let mut independent = order[m..].to_vec();
    // an independent vertex seeing the whole clique extends it
    if let Some(pos) = independent.iter().position(|&b| g.degree(b) == clique.len()) {
        clique.push(independent.remove(pos));
    }
    clique.sort_unstable();
    independent.sort_unstable();
    let part = SplitPartition {
        clique,
        independent,
    };
    part.validate(g).map_err(|_| Error::NotSplit)?;
    Ok(part)
}

/// Key Player on a split graph with `k >= |A|`: delete the clique and pad
/// from the independent side, leaving `n - k` isolated vertices.
pub fn keyplayer_split(g: &Graph, part: &SplitPartition, k: usize, t: usize) -> Result<SolveResult> {
    let started = Instant::now();
    part.validate(g)?;
    let n = g.n();
    if k > n {
        return Err(Error::InvalidInstance(format!("budget k={k} exceeds n={n}")));
    }
    if k < part.clique.len() {
        return Err(Error::Precondition(format!(
            "k = {k} is below the clique size {}",
            part.clique.len()
        )));
    }
    let mut witness = part.clique.clone();
    witness.extend(part.independent.iter().take(k - part.clique.len()));
    Ok(SolveResult::new(
        n - k,
        Some(witness),
        t,
        Algorithm::KeyPlayerSplit,
        started,
    ))
}

/// Firebreak on bounded-degree graphs: the easy case when `k >= deg(vf)`,
/// otherwise exhaustive search whose exponent `k < deg(vf) <= Δ` is bounded.
pub fn firebreak_bounded_degree(inst: &FirebreakInstance) -> Result<SolveResult> {
    firebreak_bounded_degree_with(inst, &OracleConfig::default())
}

pub fn firebreak_bounded_degree_with(
    inst: &FirebreakInstance,
    cfg: &OracleConfig,
) -> Result<SolveResult> {
    inst.validate()?;
    if inst.k >= inst.fire_degree() {
        let mut r = firebreak_easy(inst)?;
        r.algorithm = Algorithm::BoundedDegree;
        return Ok(r);
    }
    let started = Instant::now();
    let (value, witness) = firebreak_search(inst, cfg)?;
    Ok(SolveResult::new(
        value,
        Some(witness),
        inst.t,
        Algorithm::BoundedDegree,
        started,
    ))
}
