//! Three-colour dynamic program over a nice tree decomposition.
//!
//! Every vertex is coloured Reachable, Separated or Deleted. A colouring is
//! legal when no edge joins a Reachable and a Separated vertex and `vf` is
//! Reachable; then every Separated vertex is cut off from `vf` in
//! `G - Deleted`. Maximizing the Separated count over legal colourings with
//! exactly `k` Deleted vertices gives `F(G, k, vf)`.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Algorithm, FirebreakInstance, SolveResult};
use crate::treewidth::{NiceKind, NiceTreeDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Reachable = 0,
    Separated = 1,
    Deleted = 2,
}

impl Color {
    const ALL: [Color; 3] = [Color::Reachable, Color::Separated, Color::Deleted];

    fn from_digit(d: u64) -> Color {
        Color::ALL[d as usize]
    }
}

/// A colouring of one bag plus the number of Deleted vertices already
/// forgotten below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringState {
    /// Colours in sorted bag order.
    pub colors: Vec<Color>,
    pub budget_used: usize,
}

/// Per-budget best objective and back-pointer for one bag colouring.
/// The back-pointer is the forgotten vertex's colour at Forget nodes and the
/// left child's budget at Join nodes.
type Row = Vec<Option<(u32, u32)>>;
type Table = BTreeMap<u64, Row>;

fn encode(colors: &[Color]) -> u64 {
    colors.iter().rev().fold(0, |acc, &c| acc * 3 + c as u64)
}

fn decode(mut code: u64, len: usize) -> Vec<Color> {
    (0..len)
        .map(|_| {
            let c = Color::from_digit(code % 3);
            code /= 3;
            c
        })
        .collect()
}

fn improve(slot: &mut Option<(u32, u32)>, obj: u32, back: u32) {
    if slot.is_none_or(|(o, _)| obj > o) {
        *slot = Some((obj, back));
    }
}

struct Dp<'a> {
    g: &'a Graph,
    vf: usize,
    kmax: usize,
    ntd: &'a NiceTreeDecomposition,
    tables: Vec<Table>,
}

impl<'a> Dp<'a> {
    fn run(g: &'a Graph, vf: usize, kmax: usize, ntd: &'a NiceTreeDecomposition) -> Result<Self> {
        g.check_vertex(vf)?;
        ntd.validate(g)?;
        if ntd.nodes.iter().any(|n| n.bag.len() > 40) {
            return Err(Error::InvalidDecomposition("bag too large to encode".into()));
        }
        let mut dp = Dp {
            g,
            vf,
            kmax,
            ntd,
            tables: Vec::with_capacity(ntd.nodes.len()),
        };
        for i in 0..ntd.nodes.len() {
            let table = dp.table_for(i);
            dp.tables.push(table);
        }
        Ok(dp)
    }

    fn empty_row(&self) -> Row {
        vec![None; self.kmax + 1]
    }

    fn table_for(&self, i: usize) -> Table {
        let node = &self.ntd.nodes[i];
        let bag = &node.bag;
        let mut out = Table::new();
        match node.kind {
            NiceKind::Leaf => {
                let mut row = self.empty_row();
                row[0] = Some((0, 0));
                out.insert(0, row);
            }
            NiceKind::Introduce(v) => {
                let pos = bag.binary_search(&v).expect("introduced vertex in bag");
                for (&code, row) in &self.tables[node.children[0]] {
                    let child = decode(code, bag.len() - 1);
                    for c in Color::ALL {
                        if v == self.vf && c != Color::Reachable {
                            continue;
                        }
                        let mut colors = child.clone();
                        colors.insert(pos, c);
                        if !self.legal_at(bag, &colors, pos) {
                            continue;
                        }
                        out.insert(encode(&colors), row.clone());
                    }
                }
            }
            NiceKind::Forget(v) => {
                let child_bag = &self.ntd.nodes[node.children[0]].bag;
                let pos = child_bag.binary_search(&v).expect("forgotten vertex in child bag");
                for (&code, row) in &self.tables[node.children[0]] {
                    let mut colors = decode(code, child_bag.len());
                    let c = colors.remove(pos);
                    let target = out.entry(encode(&colors)).or_insert_with(|| vec![None; self.kmax + 1]);
                    for (b, entry) in row.iter().enumerate() {
                        let Some((obj, _)) = *entry else { continue };
                        let (b2, obj2) = match c {
                            Color::Deleted => (b + 1, obj),
                            Color::Separated => (b, obj + 1),
                            Color::Reachable => (b, obj),
                        };
                        if b2 <= self.kmax {
                            improve(&mut target[b2], obj2, c as u32);
                        }
                    }
                }
            }
            NiceKind::Join => {
                let (left, right) = (&self.tables[node.children[0]], &self.tables[node.children[1]]);
                for (&code, lrow) in left {
                    let Some(rrow) = right.get(&code) else { continue };
                    let mut row = self.empty_row();
                    for (b1, l) in lrow.iter().enumerate() {
                        let Some((lo, _)) = *l else { continue };
                        for (b2, r) in rrow.iter().enumerate().take(self.kmax + 1 - b1) {
                            if let Some((ro, _)) = *r {
                                improve(&mut row[b1 + b2], lo + ro, b1 as u32);
                            }
                        }
                    }
                    out.insert(code, row);
                }
            }
        }
        out
    }

    /// No Reachable-Separated edge between `bag[pos]` and the rest of the bag.
    fn legal_at(&self, bag: &[usize], colors: &[Color], pos: usize) -> bool {
        let c = colors[pos];
        let clash = match c {
            Color::Reachable => Color::Separated,
            Color::Separated => Color::Reachable,
            Color::Deleted => return true,
        };
        bag.iter()
            .zip(colors)
            .all(|(&u, &cu)| cu != clash || !self.g.has_edge(bag[pos], u))
    }

    fn root_value(&self, k: usize) -> Option<usize> {
        let root = &self.tables[self.ntd.root()];
        root.get(&0).and_then(|row| row[k]).map(|(obj, _)| obj as usize)
    }

    /// Colours of every vertex in an optimal colouring with budget `k`.
    fn reconstruct(&self, k: usize) -> Vec<Color> {
        let mut colors = vec![Color::Reachable; self.g.n()];
        let mut stack = vec![(self.ntd.root(), 0u64, k)];
        while let Some((i, code, b)) = stack.pop() {
            let node = &self.ntd.nodes[i];
            match node.kind {
                NiceKind::Leaf => {}
                NiceKind::Introduce(v) => {
                    let pos = node.bag.binary_search(&v).expect("introduced vertex in bag");
                    let mut cs = decode(code, node.bag.len());
                    cs.remove(pos);
                    stack.push((node.children[0], encode(&cs), b));
                }
                NiceKind::Forget(v) => {
                    let (_, back) = self.tables[i][&code][b].expect("back-pointer on optimal path");
                    let c = Color::from_digit(back as u64);
                    colors[v] = c;
                    let child = node.children[0];
                    let child_bag = &self.ntd.nodes[child].bag;
                    let pos = child_bag.binary_search(&v).expect("forgotten vertex in child bag");
                    let mut cs = decode(code, node.bag.len());
                    cs.insert(pos, c);
                    let b_child = if c == Color::Deleted { b - 1 } else { b };
                    stack.push((child, encode(&cs), b_child));
                }
                NiceKind::Join => {
                    let (_, b1) = self.tables[i][&code][b].expect("back-pointer on optimal path");
                    let b1 = b1 as usize;
                    stack.push((node.children[0], code, b1));
                    stack.push((node.children[1], code, b - b1));
                }
            }
        }
        colors
    }
}

/// Exact Firebreak by dynamic programming over `ntd`, a nice decomposition
/// of `inst.graph`. The witness holds exactly `k` vertices.
pub fn firebreak_treewidth_dp(inst: &FirebreakInstance, ntd: &NiceTreeDecomposition) -> Result<SolveResult> {
    let started = Instant::now();
    inst.validate()?;
    let dp = Dp::run(&inst.graph, inst.vf, inst.k, ntd)?;
    let value = dp
        .root_value(inst.k)
        .expect("every k <= n-1 admits a legal colouring");
    let colors = dp.reconstruct(inst.k);
    let witness: Vec<usize> = (0..inst.graph.n()).filter(|&v| colors[v] == Color::Deleted).collect();
    debug_assert_eq!(witness.len(), inst.k);
    Ok(SolveResult::new(
        value,
        Some(witness),
        inst.t,
        Algorithm::TreewidthDp,
        started,
    ))
}

/// `F(G, k, vf)` for every `k` in `0..=kmax` from a single DP run.
pub fn firebreak_treewidth_profile(
    g: &Graph,
    vf: usize,
    kmax: usize,
    ntd: &NiceTreeDecomposition,
) -> Result<Vec<usize>> {
    if kmax >= g.n() {
        return Err(Error::InvalidInstance(format!(
            "budget k={kmax} must be at most n-1={}",
            g.n().saturating_sub(1)
        )));
    }
    let dp = Dp::run(g, vf, kmax, ntd)?;
    Ok((0..=kmax)
        .map(|k| dp.root_value(k).expect("every k <= n-1 admits a legal colouring"))
        .collect())
}

/// Whether a full colouring (indexed by vertex) is legal: `vf` Reachable and
/// no Reachable-Separated edge.
pub fn coloring_is_legal(g: &Graph, vf: usize, colors: &[Color]) -> bool {
    colors[vf] == Color::Reachable
        && g.edges().all(|(u, v)| {
            !matches!(
                (colors[u], colors[v]),
                (Color::Reachable, Color::Separated) | (Color::Separated, Color::Reachable)
            )
        })
}
