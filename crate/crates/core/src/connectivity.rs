//! Linear-time connectivity routines used on the solving path.
//!
//! 2-edge-cuts are found through cycle equivalence: every non-tree edge of a
//! DFS forest gets a random 128-bit label, and every tree edge the XOR of the
//! labels of the non-tree edges covering it. Two edges of a bridgeless graph
//! form a 2-edge-cut exactly when their covering sets coincide, which the
//! labels detect up to a collision probability of about `m^2 / 2^128`.
//! Labels come from a fixed-seed generator, so results are reproducible.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};

const LABEL_SEED: u64 = 0x5eed_2c07_ca57_0001;

/// DFS forest over live edges, optionally ignoring one edge.
#[derive(Clone, Debug)]
pub(crate) struct SpanningForest {
    pub parent_edge: Vec<Option<EdgeId>>,
    pub preorder: Vec<VertexId>,
    pub pre: Vec<u32>,
    pub depth: Vec<u32>,
    pub is_tree: Vec<bool>,
    pub roots: usize,
}

impl SpanningForest {
    pub fn new(g: &CubicGraph, skip: Option<EdgeId>) -> Self {
        const UNSEEN: u32 = u32::MAX;
        let n = g.vertex_count();
        let mut f = SpanningForest {
            parent_edge: vec![None; n],
            preorder: Vec::with_capacity(n),
            pre: vec![UNSEEN; n],
            depth: vec![0; n],
            is_tree: vec![false; g.edge_id_bound()],
            roots: 0,
        };
        let mut stack: Vec<(VertexId, usize)> = Vec::new();
        for root in g.vertices() {
            if f.pre[root.index()] != UNSEEN {
                continue;
            }
            f.roots += 1;
            f.pre[root.index()] = f.preorder.len() as u32;
            f.preorder.push(root);
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let (v, i) = *top;
                let inc = g.incident(v);
                if i == inc.len() {
                    stack.pop();
                    continue;
                }
                top.1 += 1;
                let e = inc[i];
                if Some(e) == skip {
                    continue;
                }
                let w = g.opposite(e, v);
                if f.pre[w.index()] == UNSEEN {
                    f.pre[w.index()] = f.preorder.len() as u32;
                    f.preorder.push(w);
                    f.parent_edge[w.index()] = Some(e);
                    f.depth[w.index()] = f.depth[v.index()] + 1;
                    f.is_tree[e.index()] = true;
                    stack.push((w, 0));
                }
            }
        }
        f
    }

    /// The deeper endpoint of tree edge `e`.
    fn child_of(&self, g: &CubicGraph, e: EdgeId) -> VertexId {
        let (a, b) = g.endpoints(e);
        if self.parent_edge[a.index()] == Some(e) {
            a
        } else {
            b
        }
    }
}

/// Bridges in ascending id order (low-link).
pub fn bridges(g: &CubicGraph) -> Vec<EdgeId> {
    let f = SpanningForest::new(g, None);
    let mut low: Vec<u32> = f.pre.clone();
    for &v in f.preorder.iter().rev() {
        for &e in g.incident(v) {
            if !f.is_tree[e.index()] {
                let w = g.opposite(e, v);
                low[v.index()] = low[v.index()].min(f.pre[w.index()]);
            }
        }
        if let Some(pe) = f.parent_edge[v.index()] {
            let p = g.opposite(pe, v);
            low[p.index()] = low[p.index()].min(low[v.index()]);
        }
    }
    let mut out: Vec<EdgeId> = f
        .preorder
        .iter()
        .filter_map(|&v| {
            let pe = f.parent_edge[v.index()]?;
            (low[v.index()] == f.pre[v.index()]).then_some(pe)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Cycle-equivalence classes of size at least two.
#[derive(Clone, Debug)]
pub(crate) struct CycleClasses {
    /// Classes sorted by smallest member; members ascending.
    pub classes: Vec<Vec<EdgeId>>,
    /// Class index per edge id, `u32::MAX` for none.
    pub class_of: Vec<u32>,
}

fn random_labels(bound: usize) -> Vec<u128> {
    let mut rng = ChaCha8Rng::seed_from_u64(LABEL_SEED);
    (0..bound).map(|_| rng.gen::<u128>() | 1).collect()
}

pub(crate) fn cycle_classes(
    g: &CubicGraph,
    f: &SpanningForest,
    skip: Option<EdgeId>,
    random: &[u128],
) -> CycleClasses {
    let bound = g.edge_id_bound();
    let mut label = vec![0u128; bound];
    let mut sub = vec![0u128; g.vertex_count()];
    for e in g.live_edges() {
        if Some(e) == skip || f.is_tree[e.index()] {
            continue;
        }
        let (a, b) = g.endpoints(e);
        label[e.index()] = random[e.index()];
        sub[a.index()] ^= random[e.index()];
        sub[b.index()] ^= random[e.index()];
    }
    for &v in f.preorder.iter().rev() {
        if let Some(pe) = f.parent_edge[v.index()] {
            label[pe.index()] = sub[v.index()];
            let p = g.opposite(pe, v);
            sub[p.index()] ^= sub[v.index()];
        }
    }
    let mut by_label: HashMap<u128, u32> = HashMap::new();
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    for e in g.live_edges() {
        if Some(e) == skip || label[e.index()] == 0 {
            continue;
        }
        let slot = *by_label.entry(label[e.index()]).or_insert_with(|| {
            classes.push(Vec::new());
            (classes.len() - 1) as u32
        });
        classes[slot as usize].push(e);
    }
    classes.retain(|c| c.len() >= 2);
    let mut class_of = vec![u32::MAX; bound];
    for (i, c) in classes.iter().enumerate() {
        for &e in c {
            class_of[e.index()] = i as u32;
        }
    }
    CycleClasses { classes, class_of }
}

/// Labels each vertex with its 3-edge-connected component.
///
/// For a class `C` of size `k`, `G - C` has `k` components arranged in a
/// cycle, and along any root path the tree edges of `C` are met in cyclic
/// order. A vertex's position on that cycle is the number of `C` tree edges
/// above it, modulo `k`; the signature sums these positions over all classes
/// with random weights.
pub(crate) fn three_edge_signatures(
    g: &CubicGraph,
    f: &SpanningForest,
    cc: &CycleClasses,
) -> Vec<u128> {
    let mut rng = ChaCha8Rng::seed_from_u64(LABEL_SEED ^ 0xffff);
    let mut delta = vec![0u128; g.edge_id_bound()];
    for class in &cc.classes {
        let weight: u128 = rng.gen();
        let k = class.len() as u128;
        let mut tree: Vec<EdgeId> = class
            .iter()
            .copied()
            .filter(|e| f.is_tree[e.index()])
            .collect();
        tree.sort_by_key(|&e| f.depth[f.child_of(g, e).index()]);
        for (i, &t) in tree.iter().enumerate() {
            let pos = i as u128 + 1;
            delta[t.index()] = if pos < k {
                weight
            } else {
                // last crossing of a class with no back edge wraps to 0
                weight.wrapping_mul(k - 1).wrapping_neg()
            };
        }
    }
    let mut sig = vec![0u128; g.vertex_count()];
    let mut root_weight = 0u128;
    for &v in &f.preorder {
        sig[v.index()] = match f.parent_edge[v.index()] {
            Some(pe) => sig[g.opposite(pe, v).index()].wrapping_add(delta[pe.index()]),
            None => {
                root_weight = root_weight.wrapping_add(rng.gen());
                root_weight
            }
        };
    }
    sig
}

/// Result of the 2-cut analysis of a connected bridgeless graph.
#[derive(Clone, Debug)]
pub struct TwoCutStructure {
    /// Component index per vertex, numbered by smallest member.
    pub component_of: Vec<u32>,
    pub component_count: usize,
    /// Classes of mutually 2-cut edges (size at least two).
    pub classes: Vec<Vec<EdgeId>>,
    /// Class index per edge id, `u32::MAX` for none.
    pub class_of: Vec<u32>,
}

/// 3-edge-connected components and 2-cut classes in `O(m)` expected time.
pub fn two_cut_structure(g: &CubicGraph) -> Result<TwoCutStructure> {
    let f = SpanningForest::new(g, None);
    if f.roots != 1 {
        return Err(Error::Disconnected);
    }
    if let Some(&b) = bridges(g).first() {
        return Err(Error::HasBridge(b));
    }
    let random = random_labels(g.edge_id_bound());
    let cc = cycle_classes(g, &f, None, &random);
    let sig = three_edge_signatures(g, &f, &cc);
    let mut index: HashMap<u128, u32> = HashMap::new();
    let component_of: Vec<u32> = sig
        .iter()
        .map(|s| {
            let next = index.len() as u32;
            *index.entry(*s).or_insert(next)
        })
        .collect();
    Ok(TwoCutStructure {
        component_of,
        component_count: index.len(),
        classes: cc.classes,
        class_of: cc.class_of,
    })
}

/// Connected, bridgeless and without 2-edge-cuts.
pub fn is_three_edge_connected(g: &CubicGraph) -> bool {
    match two_cut_structure(g) {
        Ok(s) => s.classes.is_empty(),
        Err(_) => false,
    }
}

/// All 3-edge-cuts of a 3-edge-connected graph, sorted.
///
/// For each edge `e`, the 3-cuts through `e` are `e` plus a 2-cut of
/// `G - e`, so this costs `O(m)` per edge plus output size.
pub fn three_cuts_of_3ec(g: &CubicGraph) -> Vec<[EdgeId; 3]> {
    let random = random_labels(g.edge_id_bound());
    let mut out = Vec::new();
    for e in g.live_edges() {
        let f = SpanningForest::new(g, Some(e));
        let cc = cycle_classes(g, &f, Some(e), &random);
        for class in &cc.classes {
            for (i, &a) in class.iter().enumerate() {
                if a < e {
                    continue;
                }
                for &b in &class[i + 1..] {
                    out.push([e, a, b]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}
