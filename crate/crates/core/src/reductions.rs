//! Instance transformations between Key Player, Firebreak and Independent
//! Set, each carrying a provenance trail for the vertices it creates.

use crate::closed_form::SplitPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{FirebreakInstance, KeyPlayerInstance};
use crate::subsets::binomial;

/// A constructed instance plus one human-readable line per new vertex or
/// parameter change, emitted as `c provenance ...` comments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction<I> {
    pub instance: I,
    pub provenance: Vec<String>,
}

/// Key Player on a split graph with `k < |A|` to Firebreak: add a fire
/// vertex adjacent to the whole clique, keep `k`, lower `t` by one.
pub fn kpp_to_fbp(
    g: &Graph,
    part: &SplitPartition,
    k: usize,
    t: usize,
) -> Result<Reduction<FirebreakInstance>> {
    part.validate(g)?;
    if k >= part.clique.len() {
        return Err(Error::Precondition(format!(
            "k = {k} is not below the clique size {}; solve directly",
            part.clique.len()
        )));
    }
    let n = g.n();
    let vf = n;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(part.clique.iter().map(|&a| (a, vf)));
    let graph = Graph::from_edges(n + 1, &edges)?;
    let t2 = t.saturating_sub(1);
    let provenance = vec![
        format!("v {vf} fire origin adjacent to clique {}", join(&part.clique)),
        format!("k {k} t {t2} from key player t {t}"),
    ];
    Ok(Reduction {
        instance: FirebreakInstance::new(graph, k, t2, vf)?,
        provenance,
    })
}

/// Firebreak on a split graph to Firebreak on a bipartite graph by
/// subdividing every clique edge. Requires `k < |A ∩ N(vf)|`, under which
/// `F(G', k, vf) = F(G, k, vf) + C(k, 2)`; the threshold shifts by `C(k, 2)`.
///
/// Subdivision vertices `c(a1, a2)` get ids `n, n+1, ...` in lexicographic
/// order of `(a1, a2)`.
pub fn split_to_bipartite(
    g: &Graph,
    part: &SplitPartition,
    vf: usize,
    k: usize,
    t: usize,
) -> Result<Reduction<FirebreakInstance>> {
    part.validate(g)?;
    g.check_vertex(vf)?;
    let clique_neighbors = part.clique.iter().filter(|&&a| g.has_edge(a, vf)).count();
    if k >= clique_neighbors {
        return Err(Error::Precondition(format!(
            "k = {k} is not below |A ∩ N(vf)| = {clique_neighbors}"
        )));
    }
    let n = g.n();
    let in_clique = {
        let mut mask = vec![false; n];
        part.clique.iter().for_each(|&a| mask[a] = true);
        mask
    };
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| !(in_clique[u] && in_clique[v]))
        .collect();
    let mut provenance = Vec::new();
    let mut next = n;
    for (i, &a1) in part.clique.iter().enumerate() {
        for &a2 in &part.clique[i + 1..] {
            edges.push((a1, next));
            edges.push((next, a2));
            provenance.push(format!("v {next} subdivides {a1} {a2}"));
            next += 1;
        }
    }
    let shift = binomial(k, 2) as usize;
    provenance.push(format!("k {k} t {} from t {t} plus C(k,2) = {shift}", t + shift));
    let graph = Graph::from_edges(next, &edges)?;
    Ok(Reduction {
        instance: FirebreakInstance::new(graph, k, t + shift, vf)?,
        provenance,
    })
}

/// Independent Set `(G, m)` to Key Player `(G, n - m, m)`.
pub fn is_to_kpp(g: &Graph, m: usize) -> Result<Reduction<KeyPlayerInstance>> {
    let n = g.n();
    if m == 0 || m > n {
        return Err(Error::Precondition(format!("m = {m} outside 1..={n}")));
    }
    Ok(Reduction {
        instance: KeyPlayerInstance::new(g.clone(), n - m, m)?,
        provenance: vec![format!("k {} t {m} from independent set size {m}", n - m)],
    })
}

/// t-Way Vertex Cut (`|S| <= k`, `c(G - S) >= t`) answered with an exact
/// Key Player decision procedure, one query per budget `k' = 0..=k`.
pub fn tway_cut_via_kpp<F>(g: &Graph, k: usize, t: usize, mut kpp_solver: F) -> Result<bool>
where
    F: FnMut(&KeyPlayerInstance) -> Result<bool>,
{
    for budget in 0..=k.min(g.n()) {
        if kpp_solver(&KeyPlayerInstance::new(g.clone(), budget, t)?)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::split_partition;
    use crate::oracle::{firebreak_oracle, keyplayer_oracle};

    fn kpp_decides(inst: &KeyPlayerInstance) -> Result<bool> {
        Ok(keyplayer_oracle(inst)?.decision)
    }

    #[test]
    fn kpp_to_fbp_shape_and_answers() {
        // K3 {0,1,2} with pendant 3 on vertex 0
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let part = split_partition(&g).unwrap();
        let red = kpp_to_fbp(&g, &part, 1, 2).unwrap();
        let fbp = &red.instance;
        assert_eq!(fbp.graph.n(), g.n() + 1);
        assert_eq!(fbp.graph.m(), g.m() + part.clique.len());
        assert_eq!((fbp.k, fbp.t, fbp.vf), (1, 1, 4));
        assert!(firebreak_oracle(fbp).unwrap().decision);
        assert!(kpp_decides(&KeyPlayerInstance::new(g.clone(), 1, 2).unwrap()).unwrap());

        let k3 = Graph::complete(3);
        let part = split_partition(&k3).unwrap();
        let red = kpp_to_fbp(&k3, &part, 1, 3).unwrap();
        assert!(!firebreak_oracle(&red.instance).unwrap().decision);
        assert!(!kpp_decides(&KeyPlayerInstance::new(k3, 1, 3).unwrap()).unwrap());
        assert!(kpp_to_fbp(&g, &part_of(&g), 3, 1).is_err());
    }

    fn part_of(g: &Graph) -> SplitPartition {
        split_partition(g).unwrap()
    }

    #[test]
    fn bipartite_subdivision_small_cases() {
        // triangle a=0,b=1,c=2 with x=3 on a; fire at b
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let part = part_of(&g);
        let red = split_to_bipartite(&g, &part, 1, 1, 0).unwrap();
        let gp = &red.instance.graph;
        assert_eq!(gp.n(), 4 + 3);
        assert_eq!(gp.m(), 4 + 3);
        let before = firebreak_oracle(&FirebreakInstance::new(g.clone(), 1, 0, 1).unwrap()).unwrap();
        let after = firebreak_oracle(&red.instance).unwrap();
        assert_eq!(before.value, 1);
        assert_eq!(after.value, 1);

        // K4 a=0,b=1,c=2,d=3 with x=4 on a and y=5 on c; fire at b, k=2
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (2, 5)],
        )
        .unwrap();
        let part = part_of(&g);
        assert_eq!(part.clique, vec![0, 1, 2, 3]);
        let red = split_to_bipartite(&g, &part, 1, 2, 0).unwrap();
        let before = firebreak_oracle(&FirebreakInstance::new(g.clone(), 2, 0, 1).unwrap()).unwrap();
        let after = firebreak_oracle(&red.instance).unwrap();
        assert_eq!(after.value, before.value + 1);
        assert_eq!(red.instance.t, 1);
        assert!(split_to_bipartite(&g, &part, 1, 3, 0).is_err());
    }

    #[test]
    fn subdivision_ids_are_lexicographic() {
        let g = Graph::complete(3);
        let red = split_to_bipartite(&g, &part_of(&g), 0, 1, 0).unwrap();
        assert_eq!(
            red.provenance[..3],
            ["v 3 subdivides 0 1", "v 4 subdivides 0 2", "v 5 subdivides 1 2"]
        );
        let gp = &red.instance.graph;
        assert!(gp.has_edge(0, 3) && gp.has_edge(3, 1) && !gp.has_edge(0, 1));
    }

    #[test]
    fn is_to_kpp_examples() {
        let yes = |g: Graph, m| kpp_decides(&is_to_kpp(&g, m).unwrap().instance).unwrap();
        assert!(yes(Graph::cycle(5), 2));
        assert!(!yes(Graph::complete(4), 2));
        assert!(yes(Graph::path(4), 2));
        assert!(is_to_kpp(&Graph::path(4), 0).is_err());
        assert!(is_to_kpp(&Graph::path(4), 5).is_err());
    }

    #[test]
    fn tway_cut_examples() {
        assert!(tway_cut_via_kpp(&Graph::path(5), 2, 3, kpp_decides).unwrap());
        assert!(!tway_cut_via_kpp(&Graph::complete(4), 2, 2, kpp_decides).unwrap());
        assert!(tway_cut_via_kpp(&Graph::path(5), 3, 3, kpp_decides).unwrap());
        // edgeless graphs only lose components when a vertex is deleted
        assert!(tway_cut_via_kpp(&Graph::empty(3), 2, 3, kpp_decides).unwrap());
    }
}
