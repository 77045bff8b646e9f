//! Exhaustive solvers used as ground truth.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{Graph, Probe};
use crate::instance::{Algorithm, FirebreakInstance, KeyPlayerInstance, SolveResult};
use crate::subsets::{best_subset, check_guard, count_subsets, DEFAULT_SUBSET_GUARD};

/// Limits for the exhaustive solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Refuse inputs with more than this many candidate subsets.
    pub subset_guard: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            subset_guard: DEFAULT_SUBSET_GUARD,
        }
    }
}

/// `F(G, k, vf)` by enumerating every `k`-subset of `V \ {vf}`.
pub fn firebreak_oracle(inst: &FirebreakInstance) -> Result<SolveResult> {
    firebreak_oracle_with(inst, &OracleConfig::default())
}

pub fn firebreak_oracle_with(inst: &FirebreakInstance, cfg: &OracleConfig) -> Result<SolveResult> {
    let started = Instant::now();
    let (value, witness) = firebreak_search(inst, cfg)?;
    Ok(SolveResult::new(
        value,
        Some(witness),
        inst.t,
        Algorithm::Oracle,
        started,
    ))
}

pub(crate) fn firebreak_search(
    inst: &FirebreakInstance,
    cfg: &OracleConfig,
) -> Result<(usize, Vec<usize>)> {
    inst.validate()?;
    let g = &inst.graph;
    let (n, k, vf) = (g.n(), inst.k, inst.vf);
    check_guard("firebreak oracle", n - 1, k, cfg.subset_guard)?;
    let candidates: Vec<usize> = (0..n).filter(|&v| v != vf).collect();
    let ceiling = n - k - 1;
    let best = best_subset(&candidates, k, ceiling, || {
        let mut probe = Probe::new(n);
        move |s: &[usize]| {
            s.iter().for_each(|&v| probe.block(v));
            let sep = probe.separated(g, vf);
            s.iter().for_each(|&v| probe.unblock(v));
            Some(sep)
        }
    });
    Ok(best.expect("k <= n-1 leaves at least one candidate subset"))
}

/// `max c(G - S)` over all `k`-subsets `S` of `V`.
pub fn keyplayer_oracle(inst: &KeyPlayerInstance) -> Result<SolveResult> {
    keyplayer_oracle_with(inst, &OracleConfig::default())
}

pub fn keyplayer_oracle_with(inst: &KeyPlayerInstance, cfg: &OracleConfig) -> Result<SolveResult> {
    let started = Instant::now();
    inst.validate()?;
    let g = &inst.graph;
    let n = g.n();
    check_guard("key player oracle", n, inst.k, cfg.subset_guard)?;
    let candidates: Vec<usize> = (0..n).collect();
    let ceiling = n - inst.k;
    let (value, witness) =
        best_subset(&candidates, inst.k, ceiling, || components_scorer(g, |_| true))
            .expect("k <= n leaves at least one candidate subset");
    Ok(SolveResult::new(
        value,
        Some(witness),
        inst.t,
        Algorithm::KeyPlayerOracle,
        started,
    ))
}

/// Scorer returning `c(G - S)` for subsets accepted by `keep`.
pub(crate) fn components_scorer<'g, P>(
    g: &'g Graph,
    keep: P,
) -> impl FnMut(&[usize]) -> Option<usize> + 'g
where
    P: Fn(usize) -> bool + 'g,
{
    let mut probe = Probe::new(g.n());
    move |s: &[usize]| {
        s.iter().for_each(|&v| probe.block(v));
        let c = probe.count_components(g);
        s.iter().for_each(|&v| probe.unblock(v));
        keep(c).then_some(c)
    }
}

/// Number of vertex sets of size `κ(G)` whose removal disconnects `g`.
pub fn count_min_cuts(g: &Graph) -> Result<u64> {
    count_min_cuts_with(g, &OracleConfig::default())
}

pub fn count_min_cuts_with(g: &Graph, cfg: &OracleConfig) -> Result<u64> {
    if g.n() < 2 {
        return Err(Error::Precondition("need at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let kappa = g.connectivity()?;
    check_guard("minimum cut count", g.n(), kappa, cfg.subset_guard)?;
    let candidates: Vec<usize> = (0..g.n()).collect();
    let mut score = components_scorer(g, |c| c >= 2);
    Ok(count_subsets(&candidates, kappa, |s| score(s).is_some()))
}
