use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use firebreak::bench::{run_bench, to_csv, BenchGenerator, BenchSpec};
use firebreak::closed_form::{keyplayer_split, split_partition};
use firebreak::dispatch::{solve_firebreak, Hints};
use firebreak::generators::{gen_manycuts, gen_partial_ktree, gen_permutation, gen_split, gen_tree};
use firebreak::io::{emit_gr_with_comments, emit_perm, parse_gr, parse_perm, parse_subtree, parse_td};
use firebreak::keyplayer::keyplayer_at_connectivity;
use firebreak::oracle::keyplayer_oracle;
use firebreak::reductions::{is_to_kpp, kpp_to_fbp, split_to_bipartite};
use firebreak::{verify_witness, Algorithm, Error, FirebreakInstance, Graph, KeyPlayerInstance, SolveResult};
use serde_json::json;

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "firebreak", version, about = "Firebreak and Key Player solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Separate as many vertices as possible from a fire origin.
    SolveFirebreak(FirebreakArgs),
    /// Maximize the number of components after deleting vertices.
    SolveKeyplayer(KeyPlayerArgs),
    /// Build a reduced instance and print it as a graph file.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Generate an instance.
    #[command(subcommand)]
    Gen(Gen),
    /// Check a candidate firebreak.
    Verify(VerifyArgs),
    /// Run a benchmark and print CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct FirebreakArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    vf: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// Solver tag; automatic dispatch when omitted.
    #[arg(long)]
    alg: Option<String>,
    #[arg(long)]
    perm: Option<PathBuf>,
    #[arg(long)]
    subtrees: Option<PathBuf>,
    #[arg(long)]
    td: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KeyPlayerArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Ignored by keyplayer-kappa, which uses the connectivity as budget.
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// keyplayer-oracle (default), keyplayer-split or keyplayer-kappa.
    #[arg(long)]
    alg: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Reduce {
    /// Key Player on a split graph to Firebreak.
    KppToFbp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Firebreak on a split graph to Firebreak on a bipartite graph.
    SplitToBipartite {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        vf: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Independent Set to Key Player.
    IsToKpp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum Gen {
    Manycuts {
        #[arg(long)]
        t: usize,
    },
    Split {
        #[arg(long)]
        na: usize,
        #[arg(long)]
        nb: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Perm {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Ktree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
        /// Probability of keeping each edge of the full k-tree.
        #[arg(long, default_value_t = 0.7)]
        q: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    vf: usize,
    /// Comma-separated vertex ids; the budget is the set size.
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    t: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Tree,
    Ktree,
    Gnp,
    Perm,
    Manycuts,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    gen: GenKind,
    /// Comma-separated vertex counts (values of t for manycuts).
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Comma-separated solver tags; `auto` for dispatch.
    #[arg(long, value_delimiter = ',', default_value = "auto")]
    alg: Vec<String>,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    vf: usize,
    #[arg(long, default_value_t = 3)]
    w: usize,
    #[arg(long, default_value_t = 0.7)]
    q: f64,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 1_000_000)]
    oracle_guard: u128,
}

enum Failure {
    Usage(String),
    Solver(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Solver(e),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> firebreak::Result<T>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn algorithm(tag: &str) -> Result<Algorithm, Failure> {
    Algorithm::from_tag(tag).ok_or_else(|| Failure::Usage(format!("unknown algorithm {tag:?}")))
}

fn decision_code(yes: bool) -> u8 {
    if yes {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn report(r: &SolveResult, g: &Graph, k: usize, t: usize, vf: Option<usize>, as_json: bool) {
    if as_json {
        let out = json!({
            "value": r.value,
            "witness": r.witness,
            "decision": r.decision,
            "algorithm": r.algorithm.tag(),
            "elapsed_ms": r.elapsed_ms(),
            "n": g.n(),
            "m": g.m(),
            "k": k,
            "t": t,
            "vf": vf,
        });
        println!("{out}");
    } else {
        println!("value {}", r.value);
        if let Some(w) = &r.witness {
            println!("witness {}", join(w));
        }
        println!("decision {}", if r.decision { "yes" } else { "no" });
        println!("algorithm {}", r.algorithm.tag());
        println!("elapsed_ms {:.3}", r.elapsed_ms());
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn solve_fbp(a: &FirebreakArgs) -> Outcome {
    let g = load(&a.graph, parse_gr)?;
    let mut hints = Hints::default();
    if let Some(p) = &a.perm {
        hints.perm = Some(load(p, parse_perm)?);
    }
    if let Some(p) = &a.subtrees {
        hints.subtrees = Some(load(p, parse_subtree)?);
    }
    if let Some(p) = &a.td {
        let (td, n) = load(p, parse_td)?;
        if n != g.n() {
            return Err(Failure::Usage(format!("decomposition is for {n} vertices, graph has {}", g.n())));
        }
        hints.td = Some(td);
    }
    let alg = a.alg.as_deref().map(algorithm).transpose()?;
    let inst = FirebreakInstance::new(g, a.k, a.t, a.vf)?;
    let r = solve_firebreak(&inst, alg, &hints)?;
    report(&r, &inst.graph, a.k, a.t, Some(a.vf), a.json);
    Ok(decision_code(r.decision))
}

fn solve_kpp(a: &KeyPlayerArgs) -> Outcome {
    let g = load(&a.graph, parse_gr)?;
    let alg = algorithm(a.alg.as_deref().unwrap_or("keyplayer-oracle"))?;
    let (r, k) = match alg {
        Algorithm::KeyPlayerOracle => (keyplayer_oracle(&KeyPlayerInstance::new(g.clone(), a.k, a.t)?)?, a.k),
        Algorithm::KeyPlayerSplit => {
            KeyPlayerInstance::new(g.clone(), a.k, a.t)?;
            (keyplayer_split(&g, &split_partition(&g)?, a.k, a.t)?, a.k)
        }
        Algorithm::KeyPlayerKappa => {
            let r = keyplayer_at_connectivity(&g, a.t)?;
            let k = r.witness.as_ref().map_or(0, Vec::len);
            (r, k)
        }
        other => return Err(Failure::Usage(format!("{} is not a Key Player solver", other.tag()))),
    };
    report(&r, &g, k, a.t, None, a.json);
    Ok(decision_code(r.decision))
}

fn reduce(r: &Reduce) -> Outcome {
    let (graph, header, provenance) = match r {
        Reduce::KppToFbp { graph, k, t } => {
            let g = load(graph, parse_gr)?;
            let red = kpp_to_fbp(&g, &split_partition(&g)?, *k, *t)?;
            let i = red.instance;
            (i.graph, format!("instance k {} t {} vf {}", i.k, i.t, i.vf), red.provenance)
        }
        Reduce::SplitToBipartite { graph, vf, k, t } => {
            let g = load(graph, parse_gr)?;
            let red = split_to_bipartite(&g, &split_partition(&g)?, *vf, *k, *t)?;
            let i = red.instance;
            (i.graph, format!("instance k {} t {} vf {}", i.k, i.t, i.vf), red.provenance)
        }
        Reduce::IsToKpp { graph, m } => {
            let g = load(graph, parse_gr)?;
            let red = is_to_kpp(&g, *m)?;
            let i = red.instance;
            (i.graph, format!("instance k {} t {}", i.k, i.t), red.provenance)
        }
    };
    let mut comments = vec![header];
    comments.extend(provenance.into_iter().map(|p| format!("provenance {p}")));
    print!("{}", emit_gr_with_comments(&graph, &comments));
    Ok(EXIT_YES)
}

fn generate(g: &Gen) -> Outcome {
    let seeded = |name: &str, seed: u64| vec![format!("{name} seed {seed}")];
    let text = match *g {
        Gen::Manycuts { t } => emit_gr_with_comments(&gen_manycuts(t)?, &[format!("manycuts t {t}")]),
        Gen::Split { na, nb, p, seed } => {
            let (graph, part) = gen_split(na, nb, p, seed)?;
            let mut comments = seeded("split", seed);
            comments.push(format!("clique {}", join(&part.clique)));
            comments.push(format!("independent {}", join(&part.independent)));
            emit_gr_with_comments(&graph, &comments)
        }
        Gen::Perm { n, seed } => format!("c perm seed {seed}\n{}", emit_perm(&gen_permutation(n, seed)?)),
        Gen::Tree { n, seed } => emit_gr_with_comments(&gen_tree(n, seed)?, &seeded("tree", seed)),
        Gen::Ktree { n, w, q, seed } => {
            emit_gr_with_comments(&gen_partial_ktree(n, w, q, seed)?, &seeded("ktree", seed))
        }
    };
    print!("{text}");
    Ok(EXIT_YES)
}

fn verify(a: &VerifyArgs) -> Outcome {
    let g = load(&a.graph, parse_gr)?;
    let inst = FirebreakInstance::new(g, a.set.len(), a.t, a.vf)?;
    let (valid, separated) = verify_witness(&inst, &a.set);
    let yes = valid && separated >= a.t;
    if a.json {
        println!("{}", json!({ "valid": valid, "separated": separated, "decision": yes }));
    } else if valid {
        println!("separated {separated}");
        println!("decision {}", if yes { "yes" } else { "no" });
    } else {
        println!("invalid set");
    }
    Ok(decision_code(yes))
}

fn bench(a: &BenchArgs) -> Outcome {
    let generator = match a.gen {
        GenKind::Tree => BenchGenerator::Tree,
        GenKind::Ktree => BenchGenerator::PartialKtree { w: a.w, q: a.q },
        GenKind::Gnp => BenchGenerator::Gnp { p: a.p },
        GenKind::Perm => BenchGenerator::Permutation,
        GenKind::Manycuts => BenchGenerator::Manycuts,
    };
    let solvers = a
        .alg
        .iter()
        .map(|tag| if tag == "auto" { Ok(None) } else { algorithm(tag).map(Some) })
        .collect::<Result<_, _>>()?;
    let spec = BenchSpec {
        generator,
        sizes: a.sizes.clone(),
        solvers,
        repetitions: a.reps,
        seed: a.seed,
        k: a.k,
        vf: a.vf,
        oracle_guard: a.oracle_guard,
    };
    print!("{}", to_csv(&run_bench(&spec)?));
    Ok(EXIT_YES)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::SolveFirebreak(a) => solve_fbp(a),
        Command::SolveKeyplayer(a) => solve_kpp(a),
        Command::Reduce(r) => reduce(r),
        Command::Gen(g) => generate(g),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Solver(e)) => {
            eprintln!("error: {e}");
            if e.is_guard() {
                EXIT_GUARD
            } else {
                EXIT_USAGE
            }
        }
    };
    ExitCode::from(code)
}
