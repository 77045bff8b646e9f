//! Picks a Firebreak solver for an instance.

use crate::closed_form::{firebreak_bounded_degree_with, firebreak_easy};
use crate::error::{Error, Result};
use crate::instance::{Algorithm, FirebreakInstance, SolveResult};
use crate::intersection::{
    firebreak_permutation, firebreak_subtree_with, permutation_graph, PermutationRepresentation,
    SubtreeRepresentation, DEFAULT_LEAFAGE_GUARD,
};
use crate::oracle::{firebreak_oracle_with, OracleConfig};
use crate::tree::firebreak_tree;
use crate::treewidth::{build_tree_decomposition, firebreak_treewidth_dp, make_nice, TreeDecomposition};

/// Extra structure and limits available to the dispatcher.
#[derive(Debug, Clone)]
pub struct Hints {
    pub perm: Option<PermutationRepresentation>,
    pub subtrees: Option<SubtreeRepresentation>,
    pub td: Option<TreeDecomposition>,
    /// Largest decomposition width handed to the dynamic program.
    pub width_guard: usize,
    pub leafage_guard: usize,
    pub oracle: OracleConfig,
}

impl Default for Hints {
    fn default() -> Self {
        Hints {
            perm: None,
            subtrees: None,
            td: None,
            width_guard: 8,
            leafage_guard: DEFAULT_LEAFAGE_GUARD,
            oracle: OracleConfig::default(),
        }
    }
}

fn perm_matches(inst: &FirebreakInstance, rep: &PermutationRepresentation) -> Result<()> {
    if permutation_graph(rep)? != inst.graph {
        return Err(Error::InvalidRepresentation(
            "permutation does not represent the instance graph".into(),
        ));
    }
    Ok(())
}

fn subtree_matches(inst: &FirebreakInstance, rep: &SubtreeRepresentation) -> Result<()> {
    if rep.graph()? != inst.graph {
        return Err(Error::InvalidRepresentation(
            "subtrees do not represent the instance graph".into(),
        ));
    }
    Ok(())
}

fn run_dp(inst: &FirebreakInstance, td: &TreeDecomposition) -> Result<SolveResult> {
    let started = std::time::Instant::now();
    td.validate(&inst.graph)?;
    let ntd = make_nice(td)?;
    let mut r = firebreak_treewidth_dp(inst, &ntd)?;
    r.elapsed = started.elapsed();
    Ok(r)
}

/// Tries, in order: the easy case, trees, a supplied permutation or subtree
/// representation, the decomposition DP within the width guard, and finally
/// exhaustive search within the subset guard.
pub fn solve_auto(inst: &FirebreakInstance, hints: &Hints) -> Result<SolveResult> {
    inst.validate()?;
    if inst.fire_degree() <= inst.k {
        return firebreak_easy(inst);
    }
    if inst.graph.is_tree() {
        return firebreak_tree(inst);
    }
    if let Some(rep) = &hints.perm {
        perm_matches(inst, rep)?;
        return firebreak_permutation(rep, inst.k, inst.t, inst.vf);
    }
    if let Some(rep) = &hints.subtrees {
        subtree_matches(inst, rep)?;
        if rep.leafage() <= hints.leafage_guard {
            return firebreak_subtree_with(rep, inst.k, inst.t, inst.vf, hints.leafage_guard);
        }
    }
    let td = match &hints.td {
        Some(td) => td.clone(),
        None => build_tree_decomposition(&inst.graph)?,
    };
    if td.width() <= hints.width_guard {
        return run_dp(inst, &td);
    }
    firebreak_oracle_with(inst, &hints.oracle)
}

/// Runs one named solver, or [`solve_auto`] when `alg` is `None`.
pub fn solve_firebreak(inst: &FirebreakInstance, alg: Option<Algorithm>, hints: &Hints) -> Result<SolveResult> {
    let Some(alg) = alg else {
        return solve_auto(inst, hints);
    };
    let missing = |what: &str| Error::NoSolver(format!("{} needs a {what}", alg.tag()));
    match alg {
        Algorithm::Oracle => firebreak_oracle_with(inst, &hints.oracle),
        Algorithm::Easy => firebreak_easy(inst),
        Algorithm::BoundedDegree => firebreak_bounded_degree_with(inst, &hints.oracle),
        Algorithm::Tree => firebreak_tree(inst),
        Algorithm::TreewidthDp => {
            let td = match &hints.td {
                Some(td) => td.clone(),
                None => build_tree_decomposition(&inst.graph)?,
            };
            if td.width() > hints.width_guard {
                return Err(Error::GuardExceeded {
                    what: "decomposition width",
                    needed: td.width() as u128,
                    limit: hints.width_guard as u128,
                });
            }
            run_dp(inst, &td)
        }
        Algorithm::Permutation => {
            let rep = hints.perm.as_ref().ok_or_else(|| missing("permutation representation"))?;
            perm_matches(inst, rep)?;
            firebreak_permutation(rep, inst.k, inst.t, inst.vf)
        }
        Algorithm::Subtree => {
            let rep = hints.subtrees.as_ref().ok_or_else(|| missing("subtree representation"))?;
            subtree_matches(inst, rep)?;
            firebreak_subtree_with(rep, inst.k, inst.t, inst.vf, hints.leafage_guard)
        }
        Algorithm::KeyPlayerOracle | Algorithm::KeyPlayerSplit | Algorithm::KeyPlayerKappa => Err(
            Error::NoSolver(format!("{} solves Key Player, not Firebreak", alg.tag())),
        ),
    }
}
