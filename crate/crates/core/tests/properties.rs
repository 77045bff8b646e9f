use firebreak::closed_form::{keyplayer_split, split_partition};
use firebreak::dispatch::{solve_auto, Hints};
use firebreak::generators::{
    gen_gnp, gen_intervals, gen_partial_ktree, gen_permutation, gen_split, gen_subtree, gen_tree, rng,
};
use firebreak::graph::Graph;
use firebreak::instance::{FirebreakInstance, KeyPlayerInstance};
use firebreak::intersection::{
    cutline_minimal_separators, firebreak_subtree, permutation_graph, SubtreeRepresentation,
};
use firebreak::io::{emit_gr, emit_perm, emit_subtree, emit_td, parse_gr, parse_perm, parse_subtree, parse_td};
use firebreak::oracle::{firebreak_oracle, keyplayer_oracle};
use firebreak::subsets::binomial;
use firebreak::tree::firebreak_tree;
use firebreak::treewidth::{
    build_tree_decomposition, coloring_is_legal, firebreak_treewidth_dp, make_nice, Color,
};
use proptest::prelude::*;
use rand::Rng;

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Reachability from `vf` in `G - s`, by repeated relaxation.
fn naive_separated(g: &Graph, s: &[usize], vf: usize) -> usize {
    let n = g.n();
    let mut reach = vec![false; n];
    reach[vf] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for (u, v) in g.edges() {
            if s.contains(&u) || s.contains(&v) {
                continue;
            }
            if reach[u] != reach[v] {
                reach[u] = true;
                reach[v] = true;
                changed = true;
            }
        }
    }
    (0..n).filter(|&v| !reach[v] && !s.contains(&v)).count()
}

fn naive_f(g: &Graph, k: usize, vf: usize) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&m| m.count_ones() as usize == k && m >> vf & 1 == 0)
        .map(|m| naive_separated(g, &members(m, n), vf))
        .max()
        .unwrap()
}

fn naive_kappa(g: &Graph) -> usize {
    let n = g.n();
    (0..n - 1)
        .find(|&size| {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == size)
                .any(|m| g.components_without(&members(m, n)).unwrap() >= 2)
        })
        .unwrap_or(n - 1)
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| gen_gnp(n, p, seed).unwrap())
}

fn is_induced(g: &Graph, vs: &[usize], edges: &[(usize, usize)]) -> bool {
    (0..vs.len()).all(|i| {
        (i + 1..vs.len()).all(|j| g.has_edge(vs[i], vs[j]) == edges.contains(&(i, j)))
    })
}

/// Some ordered tuple of distinct vertices induces the pattern.
fn has_induced(g: &Graph, size: usize, edges: &[(usize, usize)]) -> bool {
    fn rec(g: &Graph, size: usize, edges: &[(usize, usize)], cur: &mut Vec<usize>) -> bool {
        if cur.len() == size {
            return is_induced(g, cur, edges);
        }
        for v in 0..g.n() {
            if !cur.contains(&v) {
                cur.push(v);
                if rec(g, size, edges, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    rec(g, size, edges, &mut Vec::new())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn separated_count_is_bounded_and_matches_components(g in graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut r = rng(seed);
        let vf = r.random_range(0..n);
        let s: Vec<usize> = (0..n).filter(|&v| v != vf && r.random_bool(0.3)).collect();
        let sep = g.separated_count(&s, vf).unwrap();
        prop_assert!(sep + s.len() < n);
        prop_assert_eq!(sep, naive_separated(&g, &s, vf));
        let fire = g.component_of(&s, vf);
        prop_assert_eq!(sep, n - s.len() - fire.len());
        prop_assert!(g.separated_count(&[vf], vf).is_err());
    }

    #[test]
    fn connectivity_matches_brute_force(g in graph(8)) {
        prop_assume!(g.n() >= 2);
        prop_assert_eq!(g.connectivity().unwrap(), naive_kappa(&g));
        let (kappa, cut) = g.min_vertex_cut().unwrap();
        if let Some(cut) = cut {
            prop_assert_eq!(cut.len(), kappa);
            prop_assert!(g.components_without(&cut).unwrap() >= 2);
        }
    }

    #[test]
    fn oracle_matches_naive_enumeration(g in graph(8), seed in any::<u64>()) {
        let n = g.n();
        let vf = rng(seed).random_range(0..n);
        let mut last: Option<usize> = None;
        for k in 0..n {
            let res = firebreak_oracle(&FirebreakInstance::new(g.clone(), k, 0, vf).unwrap()).unwrap();
            prop_assert_eq!(res.value, naive_f(&g, k, vf));
            // one more deletion loses at most the deleted vertex
            if let Some(prev) = last {
                prop_assert!(res.value + 1 >= prev);
            }
            prop_assert!(res.value < n - k);
            if g.degree(vf) <= k {
                prop_assert_eq!(res.value, n - k - 1);
            }
            last = Some(res.value);
        }
    }

    #[test]
    fn keyplayer_never_below_components(g in graph(9), seed in any::<u64>()) {
        let k = rng(seed).random_range(0..=g.n());
        let res = keyplayer_oracle(&KeyPlayerInstance::new(g.clone(), k, 0).unwrap()).unwrap();
        let c = g.components().0;
        prop_assert!(res.value >= c.min(g.n() - k) || k == g.n());
        prop_assert_eq!(res.value, g.components_without(res.witness.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn split_recognition_matches_forbidden_subgraphs(g in graph(7)) {
        let two_k2 = has_induced(&g, 4, &[(0, 1), (2, 3)]);
        let c4 = has_induced(&g, 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let c5 = has_induced(&g, 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        prop_assert_eq!(split_partition(&g).is_err(), two_k2 || c4 || c5);
    }

    #[test]
    fn keyplayer_split_matches_oracle(na in 1usize..5, nb in 0usize..5, p in 0.0f64..1.0, seed in any::<u64>()) {
        let (g, part) = gen_split(na, nb, p, seed).unwrap();
        for k in part.clique.len()..=g.n() {
            let closed = keyplayer_split(&g, &part, k, 0).unwrap().value;
            let oracle = keyplayer_oracle(&KeyPlayerInstance::new(g.clone(), k, 0).unwrap()).unwrap().value;
            prop_assert_eq!(closed, oracle);
        }
    }

    #[test]
    fn tree_witness_is_within_the_fire_neighbourhood(n in 2usize..40, seed in any::<u64>()) {
        let g = gen_tree(n, seed).unwrap();
        let vf = rng(seed).random_range(0..n);
        for k in 0..g.degree(vf) {
            let res = firebreak_tree(&FirebreakInstance::new(g.clone(), k, 0, vf).unwrap()).unwrap();
            prop_assert!(res.witness.unwrap().iter().all(|&v| g.has_edge(v, vf)));
        }
    }

    #[test]
    fn dp_matches_tree_solver(n in 1usize..50, seed in any::<u64>()) {
        let g = gen_tree(n, seed).unwrap();
        let ntd = make_nice(&build_tree_decomposition(&g).unwrap()).unwrap();
        let mut r = rng(seed);
        let vf = r.random_range(0..n);
        let k = r.random_range(0..n);
        let inst = FirebreakInstance::new(g, k, 0, vf).unwrap();
        prop_assert_eq!(firebreak_treewidth_dp(&inst, &ntd).unwrap().value, firebreak_tree(&inst).unwrap().value);
    }

    #[test]
    fn permutation_graph_matches_geometry(n in 1usize..9, seed in any::<u64>()) {
        let rep = gen_permutation(n, seed).unwrap();
        let g = permutation_graph(&rep).unwrap();
        // segment i from (i, 1) to (pi[i], 0); proper crossing by orientation signs
        let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
            ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
        };
        for i in 0..n {
            for j in i + 1..n {
                let (p1, p2) = ((i as f64, 1.0), (rep.pi[i] as f64, 0.0));
                let (q1, q2) = ((j as f64, 1.0), (rep.pi[j] as f64, 0.0));
                let cross = orient(p1, p2, q1) != orient(p1, p2, q2) && orient(q1, q2, p1) != orient(q1, q2, p2);
                prop_assert_eq!(g.has_edge(i, j), cross);
            }
        }
    }

    #[test]
    fn cutline_separators_are_minimal(n in 1usize..9, seed in any::<u64>()) {
        let rep = gen_permutation(n, seed).unwrap();
        let g = permutation_graph(&rep).unwrap();
        for s in cutline_minimal_separators(&rep).unwrap() {
            let base = g.components_without(&s).unwrap();
            prop_assert!(base >= 2);
            for &x in &s {
                let smaller: Vec<usize> = s.iter().copied().filter(|&y| y != x).collect();
                // dropping a vertex of a minimal separator merges two full components
                prop_assert!(g.components_without(&smaller).unwrap() < base || smaller.is_empty() && base > 2);
            }
        }
    }

    #[test]
    fn interval_graphs_match_oracle(n in 1usize..8, span in 1usize..8, seed in any::<u64>()) {
        let rep = SubtreeRepresentation::from_intervals(&gen_intervals(n, span, seed).unwrap()).unwrap();
        prop_assert!(rep.leafage() <= 2);
        let g = rep.graph().unwrap();
        for vf in 0..n {
            for k in 0..n {
                let f = firebreak_oracle(&FirebreakInstance::new(g.clone(), k, 0, vf).unwrap()).unwrap().value;
                prop_assert_eq!(firebreak_subtree(&rep, k, f, vf).unwrap().decision, true);
                prop_assert_eq!(firebreak_subtree(&rep, k, f + 1, vf).unwrap().decision, false);
            }
        }
    }

    #[test]
    fn formats_round_trip(g in graph(12), n in 1usize..10, seed in any::<u64>()) {
        let text = emit_gr(&g);
        let back = parse_gr(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_gr(&back), text);

        let perm = gen_permutation(n, seed).unwrap();
        prop_assert_eq!(parse_perm(&emit_perm(&perm)).unwrap(), perm);

        let sub = gen_subtree(n, 6, 3, 3, seed).unwrap();
        prop_assert_eq!(parse_subtree(&emit_subtree(&sub)).unwrap(), sub);

        let td = build_tree_decomposition(&g).unwrap();
        let (back, m) = parse_td(&emit_td(&td, g.n())).unwrap();
        prop_assert_eq!(m, g.n());
        back.validate(&g).unwrap();
        prop_assert_eq!(back, td);
    }

    #[test]
    fn solve_auto_matches_oracle(g in graph(10), seed in any::<u64>()) {
        let n = g.n();
        let mut r = rng(seed);
        let vf = r.random_range(0..n);
        let k = r.random_range(0..n);
        let inst = FirebreakInstance::new(g, k, 0, vf).unwrap();
        let auto = solve_auto(&inst, &Hints::default()).unwrap();
        prop_assert_eq!(auto.value, firebreak_oracle(&inst).unwrap().value);
        prop_assert_eq!(auto.witness.unwrap().len(), k);
    }

    #[test]
    fn generators_are_pure(n in 1usize..30, seed in any::<u64>()) {
        prop_assert_eq!(gen_tree(n, seed).unwrap(), gen_tree(n, seed).unwrap());
        prop_assert_eq!(gen_gnp(n, 0.3, seed).unwrap(), gen_gnp(n, 0.3, seed).unwrap());
        prop_assert_eq!(gen_permutation(n, seed).unwrap(), gen_permutation(n, seed).unwrap());
        prop_assert_eq!(gen_partial_ktree(n, 2, 0.7, seed).unwrap(), gen_partial_ktree(n, 2, 0.7, seed).unwrap());
    }
}

#[test]
fn coloring_semantics() {
    let mut r = rng(31);
    for _ in 0..40 {
        let n = r.random_range(1..=7);
        let g = gen_gnp(n, r.random_range(0.2..0.7), r.random()).unwrap();
        let vf = r.random_range(0..n);
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<Color> = (0..n)
                .map(|_| {
                    let d = c % 3;
                    c /= 3;
                    [Color::Reachable, Color::Separated, Color::Deleted][d]
                })
                .collect();
            if !coloring_is_legal(&g, vf, &colors) {
                continue;
            }
            let deleted: Vec<usize> = (0..n).filter(|&v| colors[v] == Color::Deleted).collect();
            let fire = g.component_of(&deleted, vf);
            for v in 0..n {
                if colors[v] == Color::Separated {
                    assert!(!fire.contains(&v));
                }
            }
        }
        // the status colouring of an optimal set is legal
        for k in 0..n {
            let res = firebreak_oracle(&FirebreakInstance::new(g.clone(), k, 0, vf).unwrap()).unwrap();
            let s = res.witness.unwrap();
            let fire = g.component_of(&s, vf);
            let colors: Vec<Color> = (0..n)
                .map(|v| {
                    if s.contains(&v) {
                        Color::Deleted
                    } else if fire.contains(&v) {
                        Color::Reachable
                    } else {
                        Color::Separated
                    }
                })
                .collect();
            assert!(coloring_is_legal(&g, vf, &colors));
        }
    }
}

#[test]
fn dp_matches_oracle_on_partial_three_trees() {
    let mut r = rng(32);
    let mut compared = 0;
    for _ in 0..50 {
        let n = r.random_range(10..=40);
        let g = gen_partial_ktree(n, 3, r.random_range(0.6..1.0), r.random()).unwrap();
        let ntd = make_nice(&build_tree_decomposition(&g).unwrap()).unwrap();
        let vf = r.random_range(0..n);
        let k = r.random_range(0..4.min(n));
        if binomial(n - 1, k) > 200_000 {
            continue;
        }
        let inst = FirebreakInstance::new(g, k, 0, vf).unwrap();
        let dp = firebreak_treewidth_dp(&inst, &ntd).unwrap();
        assert_eq!(dp.value, firebreak_oracle(&inst).unwrap().value);
        compared += 1;
    }
    assert!(compared >= 40);
}

#[test]
fn subtree_hosts_with_three_leaves_match_oracle() {
    let mut r = rng(33);
    for _ in 0..100 {
        let n = r.random_range(1..=9);
        let rep = gen_subtree(n, r.random_range(1..=9), 3, 4, r.random()).unwrap();
        let g = rep.graph().unwrap();
        for vf in 0..n {
            for k in 0..n {
                let f = firebreak_oracle(&FirebreakInstance::new(g.clone(), k, 0, vf).unwrap()).unwrap().value;
                assert_eq!(firebreak_subtree(&rep, k, 0, vf).unwrap().value, f);
            }
        }
    }
}
