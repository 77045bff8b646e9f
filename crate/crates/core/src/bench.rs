//! Benchmark harness producing CSV rows.

use std::fmt::Write;

use crate::dispatch::{solve_firebreak, Hints};
use crate::error::Result;
use crate::generators::{gen_gnp, gen_manycuts, gen_partial_ktree, gen_permutation, gen_tree};
use crate::graph::Graph;
use crate::instance::{Algorithm, FirebreakInstance};
use crate::intersection::permutation_graph;
use crate::oracle::firebreak_oracle_with;
use crate::subsets::binomial;

/// Instance family for a benchmark run.
#[derive(Debug, Clone, PartialEq)]
pub enum BenchGenerator {
    Tree,
    PartialKtree { w: usize, q: f64 },
    Gnp { p: f64 },
    Permutation,
    Manycuts,
}

impl BenchGenerator {
    fn name(&self) -> &'static str {
        match self {
            BenchGenerator::Tree => "tree",
            BenchGenerator::PartialKtree { .. } => "ktree",
            BenchGenerator::Gnp { .. } => "gnp",
            BenchGenerator::Permutation => "perm",
            BenchGenerator::Manycuts => "manycuts",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub generator: BenchGenerator,
    /// Vertex counts, or `t` for the many-cuts family.
    pub sizes: Vec<usize>,
    pub solvers: Vec<Option<Algorithm>>,
    pub repetitions: usize,
    pub seed: u64,
    pub k: usize,
    /// Fire origin; clamped to the instance size.
    pub vf: usize,
    /// Oracle comparison only when `C(n-1, k)` is at most this.
    pub oracle_guard: u128,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub algorithm: String,
    /// `None` when the solver refused the instance.
    pub value: Option<usize>,
    pub elapsed_ms: f64,
    pub match_oracle: Option<bool>,
}

/// Runs every solver on every generated instance, in the given order.
pub fn run_bench(spec: &BenchSpec) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &size in &spec.sizes {
        for rep in 0..spec.repetitions {
            let seed = spec.seed.wrapping_add(rep as u64);
            let mut hints = Hints::default();
            let g: Graph = match &spec.generator {
                BenchGenerator::Tree => gen_tree(size, seed)?,
                BenchGenerator::PartialKtree { w, q } => gen_partial_ktree(size, *w, *q, seed)?,
                BenchGenerator::Gnp { p } => gen_gnp(size, *p, seed)?,
                BenchGenerator::Permutation => {
                    let perm = gen_permutation(size, seed)?;
                    let g = permutation_graph(&perm)?;
                    hints.perm = Some(perm);
                    g
                }
                BenchGenerator::Manycuts => gen_manycuts(size)?,
            };
            let n = g.n();
            let k = spec.k.min(n.saturating_sub(1));
            let vf = spec.vf.min(n - 1);
            let instance = format!("{}-n{n}-s{seed}", spec.generator.name());
            let inst = FirebreakInstance::new(g, k, 0, vf)?;
            let oracle = if binomial(n - 1, k) <= spec.oracle_guard {
                firebreak_oracle_with(&inst, &hints.oracle).ok().map(|r| r.value)
            } else {
                None
            };
            for &alg in &spec.solvers {
                let outcome = solve_firebreak(&inst, alg, &hints);
                let (algorithm, value, elapsed_ms) = match &outcome {
                    Ok(r) => (r.algorithm.tag().to_string(), Some(r.value), r.elapsed_ms()),
                    Err(_) => (alg.map_or("auto", Algorithm::tag).to_string(), None, 0.0),
                };
                rows.push(BenchRow {
                    instance: instance.clone(),
                    n,
                    m: inst.graph.m(),
                    k,
                    algorithm,
                    value,
                    elapsed_ms,
                    match_oracle: value.zip(oracle).map(|(a, b)| a == b),
                });
            }
        }
    }
    Ok(rows)
}

/// CSV with header `instance,n,m,k,algorithm,value,elapsed_ms,match_oracle`.
/// Refused runs show `skipped`; the oracle column is empty when no oracle
/// value was computed.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("instance,n,m,k,algorithm,value,elapsed_ms,match_oracle\n");
    for r in rows {
        let value = r.value.map_or("skipped".to_string(), |v| v.to_string());
        let matched = r.match_oracle.map_or(String::new(), |b| b.to_string());
        writeln!(
            out,
            "{},{},{},{},{},{},{:.3},{}",
            r.instance, r.n, r.m, r.k, r.algorithm, value, r.elapsed_ms, matched
        )
        .unwrap();
    }
    out
}
