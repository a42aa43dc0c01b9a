//! Brute-force connectivity oracles.
//!
//! Everything here is deliberately simple: component counting after edge
//! removal, subset checks for minimality, and augmenting-path max-flow. The
//! verifier and the test suites rely on these, so none of it shares code
//! with the production path in [`crate::connectivity`].

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};

/// Default edge cap for exhaustive 3-cut enumeration.
pub const DEFAULT_CAP: usize = 60;

/// Unordered pair of distinct edges, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutPair(pub [EdgeId; 2]);

/// Unordered triple of distinct edges, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutTriple(pub [EdgeId; 3]);

impl CutPair {
    pub fn new(a: EdgeId, b: EdgeId) -> Self {
        CutPair(if a <= b { [a, b] } else { [b, a] })
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }
}

impl CutTriple {
    pub fn new(a: EdgeId, b: EdgeId, c: EdgeId) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        CutTriple(t)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }
}

impl fmt::Display for CutPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0[0], self.0[1])
    }
}

impl fmt::Display for CutTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalConnectivity {
    pub source: VertexId,
    pub sink: VertexId,
    pub value: u32,
}

/// Partition of the live edges into classes of the 2-cut equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassPartition {
    /// Classes sorted by their smallest edge; each class sorted.
    pub classes: Vec<Vec<EdgeId>>,
}

impl EdgeClassPartition {
    pub fn class_of(&self, e: EdgeId) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&e))
    }

    pub fn same_class(&self, a: EdgeId, b: EdgeId) -> bool {
        self.class_of(a).is_some() && self.class_of(a) == self.class_of(b)
    }
}

fn count_without(g: &CubicGraph, removed: &[EdgeId]) -> usize {
    g.components_avoiding(removed).count
}

/// Does removing `set` increase the number of components?
fn disconnects(g: &CubicGraph, base: usize, set: &[EdgeId]) -> bool {
    count_without(g, set) > base
}

fn check_distinct_live(g: &CubicGraph, edges: &[EdgeId]) -> Result<()> {
    for (i, &e) in edges.iter().enumerate() {
        g.check_live(e)?;
        if edges[..i].contains(&e) {
            return Err(Error::Input(format!("edge {e} repeated")));
        }
    }
    Ok(())
}

pub fn is_bridge(g: &CubicGraph, e: EdgeId) -> Result<bool> {
    g.check_live(e)?;
    Ok(disconnects(g, count_without(g, &[]), &[e]))
}

/// True iff removing both edges disconnects and neither alone does.
pub fn is_2_edge_cut(g: &CubicGraph, pair: CutPair) -> Result<bool> {
    let [a, b] = pair.0;
    check_distinct_live(g, &[a, b])?;
    let base = count_without(g, &[]);
    Ok(disconnects(g, base, &[a, b]) && !disconnects(g, base, &[a]) && !disconnects(g, base, &[b]))
}

/// True iff removing the triple disconnects and no proper subset does.
pub fn is_minimal_3_cut(g: &CubicGraph, t: CutTriple) -> Result<bool> {
    let [a, b, c] = t.0;
    check_distinct_live(g, &[a, b, c])?;
    let base = count_without(g, &[]);
    if !disconnects(g, base, &[a, b, c]) {
        return Ok(false);
    }
    // pairs cover the singletons: removal is monotone
    Ok(!disconnects(g, base, &[a, b])
        && !disconnects(g, base, &[a, c])
        && !disconnects(g, base, &[b, c]))
}

pub fn enumerate_bridges(g: &CubicGraph) -> Vec<EdgeId> {
    let base = count_without(g, &[]);
    g.live_edges()
        .filter(|&e| disconnects(g, base, &[e]))
        .collect()
}

/// All 2-edge-cuts in lexicographic order.
pub fn enumerate_2_edge_cuts(g: &CubicGraph) -> Vec<CutPair> {
    let base = count_without(g, &[]);
    let edges: Vec<EdgeId> = g.live_edges().collect();
    let bridge: Vec<bool> = edges.iter().map(|&e| disconnects(g, base, &[e])).collect();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        if bridge[i] {
            continue;
        }
        for j in i + 1..edges.len() {
            if !bridge[j] && disconnects(g, base, &[edges[i], edges[j]]) {
                out.push(CutPair::new(edges[i], edges[j]));
            }
        }
    }
    out
}

/// All inclusion-minimal 3-edge-cuts in lexicographic order.
///
/// Fails with [`Error::TooLarge`] above `cap` live edges: the number of
/// 3-cuts of a graph with 2-cuts can be exponential.
pub fn enumerate_3_edge_cuts(g: &CubicGraph, cap: usize) -> Result<Vec<CutTriple>> {
    let m = g.live_edge_count();
    if m > cap {
        return Err(Error::TooLarge { size: m, cap });
    }
    let base = count_without(g, &[]);
    let edges: Vec<EdgeId> = g.live_edges().collect();
    let k = edges.len();
    let bridge: Vec<bool> = edges.iter().map(|&e| disconnects(g, base, &[e])).collect();
    let mut pair_cut = vec![false; k * k];
    for i in 0..k {
        for j in i + 1..k {
            let d = bridge[i] || bridge[j] || disconnects(g, base, &[edges[i], edges[j]]);
            pair_cut[i * k + j] = d;
            pair_cut[j * k + i] = d;
        }
    }
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if pair_cut[i * k + j] {
                continue;
            }
            for l in j + 1..k {
                if pair_cut[i * k + l] || pair_cut[j * k + l] {
                    continue;
                }
                if disconnects(g, base, &[edges[i], edges[j], edges[l]]) {
                    out.push(CutTriple::new(edges[i], edges[j], edges[l]));
                }
            }
        }
    }
    Ok(out)
}

/// Maximum number of edge-disjoint `u`-`v` paths (unit-capacity max-flow).
pub fn local_edge_connectivity(
    g: &CubicGraph,
    u: VertexId,
    v: VertexId,
) -> Result<LocalConnectivity> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let n = g.vertex_count();
    for w in [u, v] {
        if w.index() >= n {
            return Err(Error::Input(format!("vertex {w} out of range")));
        }
    }
    // flow[e] in {-1, 0, 1}, positive meaning ends[0] -> ends[1]
    let mut flow = vec![0i8; g.edge_id_bound()];
    let mut value = 0;
    loop {
        let mut via: Vec<Option<EdgeId>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[u.index()] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &e in g.incident(x) {
                let y = g.opposite(e, x);
                let forward = g.endpoints(e).0 == x;
                let f = if forward {
                    flow[e.index()]
                } else {
                    -flow[e.index()]
                };
                if f < 1 && !seen[y.index()] {
                    seen[y.index()] = true;
                    via[y.index()] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        if !seen[v.index()] {
            break;
        }
        let mut x = v;
        while x != u {
            let e = via[x.index()].unwrap();
            let y = g.opposite(e, x);
            if g.endpoints(e).0 == y {
                flow[e.index()] += 1;
            } else {
                flow[e.index()] -= 1;
            }
            x = y;
        }
        value += 1;
    }
    Ok(LocalConnectivity {
        source: u,
        sink: v,
        value,
    })
}

/// Maximal vertex classes with pairwise local connectivity at least 3.
pub fn three_edge_connected_components(g: &CubicGraph) -> Result<Vec<Vec<VertexId>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    'outer: for v in g.vertices() {
        for class in classes.iter_mut() {
            if local_edge_connectivity(g, class[0], v)?.value >= 3 {
                class.push(v);
                continue 'outer;
            }
        }
        classes.push(vec![v]);
    }
    Ok(classes)
}

/// Classes of `e ~ f` (equal, or a 2-edge-cut) on a bridgeless graph.
pub fn edge_equivalence_classes(g: &CubicGraph) -> Result<EdgeClassPartition> {
    if let Some(&b) = enumerate_bridges(g).first() {
        return Err(Error::HasBridge(b));
    }
    let mut parent: Vec<usize> = (0..g.edge_id_bound()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for CutPair([a, b]) in enumerate_2_edge_cuts(g) {
        let (ra, rb) = (find(&mut parent, a.index()), find(&mut parent, b.index()));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    let mut slot = vec![usize::MAX; g.edge_id_bound()];
    for e in g.live_edges() {
        let r = find(&mut parent, e.index());
        if slot[r] == usize::MAX {
            slot[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[r]].push(e);
    }
    Ok(EdgeClassPartition { classes })
}
