//! Cactus representation of the 2-edge-cuts of a bridgeless cubic graph.
//!
//! Nodes are the 3-edge-connected components of the graph and each cactus
//! edge stands for one external graph edge. Two external edges form a
//! 2-edge-cut exactly when their cactus edges lie on a common cycle; every
//! cactus edge carries the id of its cycle, so that query is a comparison.
//!
//! The structure is an arena: nodes and edges are marked dead instead of
//! being removed, so ids stay valid for the whole reduction run.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::connectivity;
use crate::cuts;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CactusEdgeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl CactusEdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct Node {
    members: Vec<VertexId>,
    incident: Vec<CactusEdgeId>,
    alive: bool,
}

#[derive(Clone, Debug)]
struct CEdge {
    ends: [NodeId; 2],
    graph_edge: EdgeId,
    cycle: Option<CycleId>,
    alive: bool,
    /// position of this edge in each endpoint's incidence list
    pos: [u32; 2],
}

#[derive(Clone, Debug, Default)]
pub struct Cactus {
    nodes: Vec<Node>,
    edges: Vec<CEdge>,
    live_nodes: usize,
    live_edges: usize,
}

/// The vertex map `V(G) -> V(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi {
    node_of: Vec<NodeId>,
}

impl Phi {
    pub fn new(node_of: Vec<NodeId>) -> Self {
        Phi { node_of }
    }

    #[inline]
    pub fn of(&self, v: VertexId) -> NodeId {
        self.node_of[v.index()]
    }
}

/// Nodes of cactus degree 2, ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Degree2List(pub BTreeSet<NodeId>);

impl Degree2List {
    pub fn first(&self) -> Option<NodeId> {
        self.0.first().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.0.iter().copied()
    }
}

/// The two cactus edges at a degree-2 node and their graph edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutAt {
    pub a: CactusEdgeId,
    pub b: CactusEdgeId,
    pub e1: EdgeId,
    pub e2: EdgeId,
}

/// Builds the cactus of `g` from its 3-edge-connected components.
///
/// The construction is checked structurally (every cycle class closes into
/// one cycle, cycle count equals the cyclomatic number); a failure means an
/// internal bug and is reported as [`Error::NotCactus`].
pub fn build_cactus(g: &CubicGraph) -> Result<(Cactus, Phi)> {
    g.require_cubic()?;
    let s = connectivity::two_cut_structure(g)?;
    let mut nodes: Vec<Node> = (0..s.component_count)
        .map(|_| Node {
            members: Vec::new(),
            incident: Vec::new(),
            alive: true,
        })
        .collect();
    for v in g.vertices() {
        nodes[s.component_of[v.index()] as usize].members.push(v);
    }
    let mut t = Cactus {
        live_nodes: nodes.len(),
        nodes,
        edges: Vec::new(),
        live_edges: 0,
    };
    let phi = Phi::new(s.component_of.iter().map(|&c| NodeId(c)).collect());
    for e in g.live_edges() {
        let (u, v) = g.endpoints(e);
        let (x, y) = (phi.of(u), phi.of(v));
        let class = s.class_of[e.index()];
        match (x == y, class == u32::MAX) {
            (true, true) => {}
            (false, false) => {
                t.attach([x, y], e, Some(CycleId(class)));
            }
            _ => {
                return Err(Error::NotCactus(format!(
                    "edge {e} disagrees between classes and components"
                )))
            }
        }
    }
    t.check_invariants().map_err(Error::NotCactus)?;
    Ok((t, phi))
}

impl Cactus {
    /// A cactus with the single live node `id`.
    pub fn singleton(id: NodeId, members: Vec<VertexId>) -> Self {
        let mut nodes: Vec<Node> = (0..id.index())
            .map(|_| Node {
                members: Vec::new(),
                incident: Vec::new(),
                alive: false,
            })
            .collect();
        nodes.push(Node {
            members,
            incident: Vec::new(),
            alive: true,
        });
        Cactus {
            nodes,
            edges: Vec::new(),
            live_nodes: 1,
            live_edges: 0,
        }
    }

    /// Builds a cactus from explicit parts; intended for tests and tools.
    /// Each edge is `(x, y, graph_edge, cycle)`.
    pub fn from_parts(
        members: Vec<Vec<VertexId>>,
        edges: &[(u32, u32, EdgeId, Option<u32>)],
    ) -> Self {
        let mut t = Cactus {
            live_nodes: members.len(),
            nodes: members
                .into_iter()
                .map(|m| Node {
                    members: m,
                    incident: Vec::new(),
                    alive: true,
                })
                .collect(),
            edges: Vec::new(),
            live_edges: 0,
        };
        for &(x, y, e, c) in edges {
            t.attach([NodeId(x), NodeId(y)], e, c.map(CycleId));
        }
        t
    }

    pub fn node_count(&self) -> usize {
        self.live_nodes
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.alive)
            .map(|(i, _)| NodeId(i as u32))
    }

    pub fn edges(&self) -> impl Iterator<Item = CactusEdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.alive)
            .map(|(i, _)| CactusEdgeId(i as u32))
    }

    pub fn is_node_alive(&self, x: NodeId) -> bool {
        self.nodes.get(x.index()).is_some_and(|n| n.alive)
    }

    pub fn is_edge_alive(&self, a: CactusEdgeId) -> bool {
        self.edges.get(a.index()).is_some_and(|e| e.alive)
    }

    pub fn members(&self, x: NodeId) -> &[VertexId] {
        &self.nodes[x.index()].members
    }

    pub fn incident(&self, x: NodeId) -> &[CactusEdgeId] {
        &self.nodes[x.index()].incident
    }

    pub fn degree(&self, x: NodeId) -> usize {
        self.nodes[x.index()].incident.len()
    }

    pub fn endpoints(&self, a: CactusEdgeId) -> (NodeId, NodeId) {
        let [x, y] = self.edges[a.index()].ends;
        (x, y)
    }

    pub fn opposite(&self, a: CactusEdgeId, x: NodeId) -> NodeId {
        let [p, q] = self.edges[a.index()].ends;
        if p == x {
            q
        } else {
            p
        }
    }

    pub fn graph_edge(&self, a: CactusEdgeId) -> EdgeId {
        self.edges[a.index()].graph_edge
    }

    pub fn cycle(&self, a: CactusEdgeId) -> Option<CycleId> {
        self.edges[a.index()].cycle
    }

    pub fn common_cycle(&self, a: CactusEdgeId, b: CactusEdgeId) -> bool {
        a != b && self.cycle(a).is_some() && self.cycle(a) == self.cycle(b)
    }

    /// Union of the members of all live nodes.
    pub fn domain(&self) -> Vec<VertexId> {
        let mut d: Vec<VertexId> = self
            .nodes()
            .flat_map(|x| self.members(x).iter().copied())
            .collect();
        d.sort_unstable();
        d
    }

    pub fn degree2_nodes(&self) -> Degree2List {
        Degree2List(self.nodes().filter(|&x| self.degree(x) == 2).collect())
    }

    pub fn pick_cut_at(&self, x: NodeId) -> Result<CutAt> {
        if !self.is_node_alive(x) || self.degree(x) != 2 {
            return Err(Error::NotDegree2(x.0));
        }
        let mut inc = [self.incident(x)[0], self.incident(x)[1]];
        inc.sort_unstable();
        let [a, b] = inc;
        Ok(CutAt {
            a,
            b,
            e1: self.graph_edge(a),
            e2: self.graph_edge(b),
        })
    }

    fn attach(
        &mut self,
        ends: [NodeId; 2],
        graph_edge: EdgeId,
        cycle: Option<CycleId>,
    ) -> CactusEdgeId {
        debug_assert_ne!(ends[0], ends[1], "cactus loops are never stored");
        let id = CactusEdgeId(self.edges.len() as u32);
        let mut pos = [0u32; 2];
        for i in 0..2 {
            let list = &mut self.nodes[ends[i].index()].incident;
            pos[i] = list.len() as u32;
            list.push(id);
        }
        self.edges.push(CEdge {
            ends,
            graph_edge,
            cycle,
            alive: true,
            pos,
        });
        self.live_edges += 1;
        id
    }

    fn detach(&mut self, a: CactusEdgeId) {
        let CEdge { ends, pos, .. } = self.edges[a.index()];
        for i in 0..2 {
            let node = ends[i];
            let list = &mut self.nodes[node.index()].incident;
            let p = pos[i] as usize;
            list.swap_remove(p);
            if let Some(&moved) = list.get(p) {
                let m = &mut self.edges[moved.index()];
                let j = if m.ends[0] == node { 0 } else { 1 };
                m.pos[j] = p as u32;
            }
        }
        self.edges[a.index()].alive = false;
        self.live_edges -= 1;
    }

    /// Removes degree-2 node `x` and its edges `a`, `b`, joining the two
    /// far ends by a new edge for `new_graph_edge` unless that would be a
    /// loop. Returns the far ends and the new edge, if any.
    pub(crate) fn reduce_at(
        &mut self,
        x: NodeId,
        cut: CutAt,
        new_graph_edge: EdgeId,
    ) -> (NodeId, NodeId, Option<CactusEdgeId>) {
        let y = self.opposite(cut.a, x);
        let z = self.opposite(cut.b, x);
        let cycle = self.cycle(cut.a);
        self.detach(cut.a);
        self.detach(cut.b);
        self.nodes[x.index()].alive = false;
        self.live_nodes -= 1;
        let c = (y != z).then(|| self.attach([y, z], new_graph_edge, cycle));
        (y, z, c)
    }

    fn rebuild_incidence(&mut self) {
        for n in &mut self.nodes {
            n.incident.clear();
        }
        self.live_edges = 0;
        for i in 0..self.edges.len() {
            if !self.edges[i].alive {
                continue;
            }
            let ends = self.edges[i].ends;
            for (j, end) in ends.into_iter().enumerate() {
                let list = &mut self.nodes[end.index()].incident;
                self.edges[i].pos[j] = list.len() as u32;
                list.push(CactusEdgeId(i as u32));
            }
            self.live_edges += 1;
        }
        self.live_nodes = self.nodes.iter().filter(|n| n.alive).count();
    }

    /// Node sides of `T - removed`, as component labels over live nodes.
    fn sides_without(&self, removed: &[CactusEdgeId]) -> (usize, Vec<u32>) {
        let mut label = vec![u32::MAX; self.nodes.len()];
        let mut count = 0;
        for s in self.nodes() {
            if label[s.index()] != u32::MAX {
                continue;
            }
            label[s.index()] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &a in self.incident(x) {
                    if removed.contains(&a) {
                        continue;
                    }
                    let y = self.opposite(a, x);
                    if label[y.index()] == u32::MAX {
                        label[y.index()] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count as usize, label)
    }

    /// The `{a,b}`-reduction of the cactus, following the graph-side
    /// reduction that produced `e1p` and `e2p` in `g`.
    ///
    /// Returns `(T1, T2)` where `T1` covers the side holding `e1p`. A new
    /// cactus edge that would be a loop is dropped.
    pub fn reduce(
        &self,
        phi: &Phi,
        g: &CubicGraph,
        a: CactusEdgeId,
        b: CactusEdgeId,
        e1p: EdgeId,
        e2p: EdgeId,
    ) -> Result<(Cactus, Cactus)> {
        if !self.is_edge_alive(a) || !self.is_edge_alive(b) || !self.common_cycle(a, b) {
            return Err(Error::NotCactusCut);
        }
        let (count, side) = self.sides_without(&[a, b]);
        if count != 2 {
            return Err(Error::NotCactusCut);
        }
        let side_of_edge = |e: EdgeId| side[phi.of(g.endpoints(e).0).index()];
        let first = side_of_edge(e1p);
        if side_of_edge(e2p) == first {
            return Err(Error::Input(
                "new edges lie on the same side of the cactus cut".into(),
            ));
        }
        let cycle = self.cycle(a);
        let mut out = Vec::with_capacity(2);
        for (s, new_edge) in [(first, e1p), (1 - first, e2p)] {
            let mut t = self.clone();
            for (i, n) in t.nodes.iter_mut().enumerate() {
                if n.alive && side[i] != s {
                    n.alive = false;
                }
            }
            for e in t.edges.iter_mut() {
                if e.alive && side[e.ends[0].index()] != s {
                    e.alive = false;
                }
            }
            t.edges[a.index()].alive = false;
            t.edges[b.index()].alive = false;
            t.rebuild_incidence();
            let end_in = |c: CactusEdgeId| {
                let (x, y) = self.endpoints(c);
                if side[x.index()] == s {
                    x
                } else {
                    y
                }
            };
            let (p, q) = (end_in(a), end_in(b));
            if p != q {
                let (u, v) = g.endpoints(new_edge);
                let mut want = [phi.of(u), phi.of(v)];
                let mut have = [p, q];
                want.sort_unstable();
                have.sort_unstable();
                if want != have {
                    return Err(Error::RepresentationGap(format!(
                        "new edge {new_edge} does not join the cut ends of the cactus"
                    )));
                }
                t.attach([p, q], new_edge, cycle);
            }
            out.push(t);
        }
        let t2 = out.pop().unwrap();
        let t1 = out.pop().unwrap();
        Ok((t1, t2))
    }

    /// Checks the cactus property, the edge bound `|E| <= 2(|V|-1)`, loop
    /// freedom and that every edge lies on its labelled cycle.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.live_nodes;
        let m = self.live_edges;
        if n == 0 {
            return Err("cactus has no nodes".into());
        }
        if m > 2 * (n - 1) {
            return Err(format!("{m} edges exceed the bound 2(|V|-1) for {n} nodes"));
        }
        let mut by_cycle: HashMap<CycleId, Vec<CactusEdgeId>> = HashMap::new();
        for a in self.edges() {
            let (x, y) = self.endpoints(a);
            if x == y {
                return Err(format!("cactus edge {} is a loop", a.0));
            }
            if !self.is_node_alive(x) || !self.is_node_alive(y) {
                return Err(format!("cactus edge {} touches a dead node", a.0));
            }
            match self.cycle(a) {
                Some(c) => by_cycle.entry(c).or_default().push(a),
                None => return Err(format!("cactus edge {} lies on no cycle", a.0)),
            }
        }
        let (count, _) = self.sides_without(&[]);
        if count != 1 {
            return Err(format!("cactus has {count} components"));
        }
        for (c, group) in &by_cycle {
            // a single closed walk: every touched node has two ends, and
            // walking from one edge visits them all
            let mut ends: HashMap<NodeId, Vec<CactusEdgeId>> = HashMap::new();
            for &a in group {
                let (x, y) = self.endpoints(a);
                ends.entry(x).or_default().push(a);
                ends.entry(y).or_default().push(a);
            }
            if group.len() < 2 || ends.values().any(|v| v.len() != 2) {
                return Err(format!("cycle {} is not a simple cycle", c.0));
            }
            let start = group[0];
            let (mut node, mut edge) = (self.endpoints(start).1, start);
            let mut steps = 1;
            loop {
                let pair = &ends[&node];
                let next = if pair[0] == edge { pair[1] } else { pair[0] };
                if next == start {
                    break;
                }
                node = self.opposite(next, node);
                edge = next;
                steps += 1;
                if steps > group.len() {
                    break;
                }
            }
            if steps != group.len() {
                return Err(format!("cycle {} splits into several cycles", c.0));
            }
        }
        if m + 1 != n + by_cycle.len() {
            return Err(format!(
                "cyclomatic number {} differs from the {} labelled cycles",
                m + 1 - n,
                by_cycle.len()
            ));
        }
        Ok(())
    }

    /// DOT text for inspection; node labels list their graph vertices.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph cactus {\n");
        for x in self.nodes() {
            let members: Vec<String> = self.members(x).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "  n{} [label=\"n{}: {}\"];", x.0, x.0, members.join(" "));
        }
        for a in self.edges() {
            let (x, y) = self.endpoints(a);
            let cycle = self.cycle(a).map_or("-".to_string(), |c| c.0.to_string());
            let _ = writeln!(
                s,
                "  n{} -- n{} [label=\"e{} c{}\"];",
                x.0,
                y.0,
                self.graph_edge(a),
                cycle
            );
        }
        s.push_str("}\n");
        s
    }
}

fn gap(msg: impl Into<String>) -> Error {
    Error::RepresentationGap(msg.into())
}

/// Checks that `(t, phi)` represents exactly the 2-edge-cuts of the part of
/// `g` spanned by the live nodes of `t`, by brute-force enumeration.
///
/// Besides the two cut conditions, the external edges must correspond one
/// to one with cactus edges and the cactus must satisfy its invariants.
pub fn validate_representation(g: &CubicGraph, t: &Cactus, phi: &Phi, cap: usize) -> Result<()> {
    let mut domain = Vec::new();
    for x in t.nodes() {
        if t.members(x).is_empty() {
            return Err(gap(format!("node {} is empty", x.0)));
        }
        for &v in t.members(x) {
            if v.index() >= g.vertex_count() || phi.of(v) != x {
                return Err(gap(format!("vertex {v} is not mapped to node {}", x.0)));
            }
            domain.push(v);
        }
    }
    domain.sort_unstable();
    if domain.windows(2).any(|w| w[0] == w[1]) {
        return Err(gap("a vertex belongs to two nodes"));
    }
    let in_domain = |v: VertexId| domain.binary_search(&v).is_ok();
    for &v in &domain {
        if g.incident(v).iter().any(|&e| !in_domain(g.opposite(e, v))) {
            return Err(gap(format!(
                "vertex {v} has an edge leaving the represented part"
            )));
        }
    }
    let piece = g.induced_piece(&domain);
    if piece.graph.live_edge_count() > cap {
        return Err(Error::TooLarge {
            size: piece.graph.live_edge_count(),
            cap,
        });
    }
    if !piece.graph.is_connected() {
        return Err(gap("represented graph is disconnected"));
    }
    if let Some(&b) = cuts::enumerate_bridges(&piece.graph).first() {
        return Err(gap(format!(
            "graph edge {} is a bridge",
            piece.global_edge(b)
        )));
    }
    t.check_invariants().map_err(gap)?;

    // external edges <-> cactus edges
    let mut cactus_of: HashMap<EdgeId, CactusEdgeId> = HashMap::new();
    for a in t.edges() {
        let e = t.graph_edge(a);
        if piece.local_edge(e).is_none() || !g.is_live(e) {
            return Err(gap(format!(
                "cactus edge {} maps to unknown graph edge {e}",
                a.0
            )));
        }
        let (u, v) = g.endpoints(e);
        let mut want = [phi.of(u), phi.of(v)];
        let (x, y) = t.endpoints(a);
        let mut have = [x, y];
        want.sort_unstable();
        have.sort_unstable();
        if want != have {
            return Err(gap(format!(
                "cactus edge {} does not join the nodes of edge {e}",
                a.0
            )));
        }
        if cactus_of.insert(e, a).is_some() {
            return Err(gap(format!("graph edge {e} has two cactus edges")));
        }
    }
    for &e in &piece.edges {
        let (u, v) = g.endpoints(e);
        if phi.of(u) != phi.of(v) && !cactus_of.contains_key(&e) {
            return Err(gap(format!("external edge {e} has no cactus edge")));
        }
    }

    let local_two_cuts = cuts::enumerate_2_edge_cuts(&piece.graph);
    let two_cuts: HashSet<cuts::CutPair> = local_two_cuts
        .iter()
        .map(|c| cuts::CutPair::new(piece.global_edge(c.0[0]), piece.global_edge(c.0[1])))
        .collect();
    let anchor = domain[0];
    let canonical = |mut side: Vec<VertexId>| {
        side.sort_unstable();
        if side.binary_search(&anchor).is_ok() {
            side
        } else {
            domain
                .iter()
                .copied()
                .filter(|v| side.binary_search(v).is_err())
                .collect()
        }
    };

    // every minimum cut of T pulls back to a 2-edge-cut of G
    let edges: Vec<CactusEdgeId> = t.edges().collect();
    let mut pulled: HashSet<Vec<VertexId>> = HashSet::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if !t.common_cycle(a, b) {
                continue;
            }
            let (_, side) = t.sides_without(&[a, b]);
            let s = side[t.endpoints(a).0.index()];
            let x: Vec<VertexId> = domain
                .iter()
                .copied()
                .filter(|&v| side[phi.of(v).index()] == s)
                .collect();
            let crossing: Vec<EdgeId> = piece
                .edges
                .iter()
                .copied()
                .filter(|&e| {
                    let (u, v) = g.endpoints(e);
                    (side[phi.of(u).index()] == s) != (side[phi.of(v).index()] == s)
                })
                .collect();
            let pair = cuts::CutPair::new(t.graph_edge(a), t.graph_edge(b));
            if crossing.len() != 2
                || !two_cuts.contains(&pair)
                || !crossing.iter().all(|&e| pair.contains(e))
            {
                return Err(gap(format!(
                    "cactus cut {{{}, {}}} pulls back to {crossing:?}, not a 2-edge-cut",
                    a.0, b.0
                )));
            }
            pulled.insert(canonical(x));
        }
    }

    // every 2-edge-cut of G comes from a minimum cut of T
    for c in &local_two_cuts {
        let comps = piece.graph.components_avoiding(&c.0);
        let start = piece.graph.endpoints(c.0[0]).0;
        let side: Vec<VertexId> = comps
            .members(comps.of(start))
            .into_iter()
            .map(|v| piece.vertices[v.index()])
            .collect();
        if !pulled.contains(&canonical(side)) {
            return Err(gap(format!(
                "2-edge-cut {{{}, {}}} is not represented",
                piece.global_edge(c.0[0]),
                piece.global_edge(c.0[1])
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen, Family, H8_E1, H8_E2};

    #[test]
    fn k4_is_a_single_node() {
        let g = gen(&Family::K4).unwrap();
        let (t, phi) = build_cactus(&g).unwrap();
        assert_eq!((t.node_count(), t.edge_count()), (1, 0));
        assert!(t.degree2_nodes().is_empty());
        validate_representation(&g, &t, &phi, 60).unwrap();
    }

    #[test]
    fn h8_is_a_two_cycle() {
        let g = gen(&Family::H8).unwrap();
        let (t, phi) = build_cactus(&g).unwrap();
        assert_eq!((t.node_count(), t.edge_count()), (2, 2));
        let edges: Vec<_> = t.edges().collect();
        assert!(t.common_cycle(edges[0], edges[1]));
        assert_eq!(t.endpoints(edges[0]), t.endpoints(edges[1]));
        assert_eq!(
            t.degree2_nodes().iter().collect::<Vec<_>>(),
            vec![NodeId(0), NodeId(1)]
        );
        validate_representation(&g, &t, &phi, 60).unwrap();

        let cut = t.pick_cut_at(NodeId(0)).unwrap();
        assert_eq!((cut.e1, cut.e2), (H8_E1, H8_E2));
    }

    #[test]
    fn necklace3_is_a_triangle() {
        let g = gen(&Family::Necklace(3)).unwrap();
        let (t, phi) = build_cactus(&g).unwrap();
        assert_eq!((t.node_count(), t.edge_count()), (3, 3));
        assert_eq!(t.degree2_nodes().len(), 3);
        validate_representation(&g, &t, &phi, 60).unwrap();
        // node 0 holds block 0, whose ring edges are (1,4) = 15 and (9,0) = 17
        let cut = t.pick_cut_at(NodeId(0)).unwrap();
        let mut got = [cut.e1, cut.e2];
        got.sort();
        assert_eq!(got, [EdgeId(15), EdgeId(17)]);
    }

    #[test]
    fn corrupted_model_is_rejected() {
        let g = gen(&Family::H8).unwrap();
        let (_, phi) = build_cactus(&g).unwrap();
        let members = vec![
            (0..4).map(VertexId).collect(),
            (4..8).map(VertexId).collect(),
        ];
        let single = Cactus::from_parts(members.clone(), &[(0, 1, H8_E1, None)]);
        assert!(matches!(
            validate_representation(&g, &single, &phi, 60),
            Err(Error::RepresentationGap(_))
        ));
        let labelled = Cactus::from_parts(members, &[(0, 1, H8_E1, Some(0))]);
        assert!(matches!(
            validate_representation(&g, &labelled, &phi, 60),
            Err(Error::RepresentationGap(_))
        ));
    }

    #[test]
    fn missing_cut_is_a_gap() {
        let g = gen(&Family::H8).unwrap();
        let phi = Phi::new(vec![NodeId(0); 8]);
        let t = Cactus::singleton(NodeId(0), (0..8).map(VertexId).collect());
        assert!(matches!(
            validate_representation(&g, &t, &phi, 60),
            Err(Error::RepresentationGap(_))
        ));
    }

    #[test]
    fn not_degree2() {
        let g = gen(&Family::K4).unwrap();
        let (t, _) = build_cactus(&g).unwrap();
        assert_eq!(t.pick_cut_at(NodeId(0)), Err(Error::NotDegree2(0)));
    }

    #[test]
    fn errors_on_bad_inputs() {
        let mut two = CubicGraph::with_vertices(8);
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            two.add_edge(u, v).unwrap();
            two.add_edge(u + 4, v + 4).unwrap();
        }
        assert_eq!(build_cactus(&two).unwrap_err(), Error::Disconnected);
        let block = gen(&Family::Block).unwrap();
        assert!(matches!(build_cactus(&block), Err(Error::NotCubic { .. })));
    }

    #[test]
    fn reduce_h8_cycle_leaves_two_singletons() {
        let mut g = gen(&Family::H8).unwrap();
        let (t, phi) = build_cactus(&g).unwrap();
        let cut = t.pick_cut_at(NodeId(0)).unwrap();
        g.remove_edge(H8_E1).unwrap();
        g.remove_edge(H8_E2).unwrap();
        let e1p = g.add_edge(4, 5).unwrap();
        let e2p = g.add_edge(0, 1).unwrap();
        let (t1, t2) = t.reduce(&phi, &g, cut.a, cut.b, e1p, e2p).unwrap();
        assert_eq!((t1.node_count(), t1.edge_count()), (1, 0));
        assert_eq!((t2.node_count(), t2.edge_count()), (1, 0));
        assert_eq!(t1.nodes().next(), Some(NodeId(1)));
        validate_representation(&g, &t1, &phi, 60).unwrap();
        validate_representation(&g, &t2, &phi, 60).unwrap();
    }

    #[test]
    fn reduce_necklace3_at_node0() {
        let mut g = gen(&Family::Necklace(3)).unwrap();
        let (t, phi) = build_cactus(&g).unwrap();
        let cut = t.pick_cut_at(NodeId(0)).unwrap();
        // e1 = (1,4), e2 = (9,0); far ends 4 and 9, near ends 1 and 0
        g.remove_edge(cut.e1).unwrap();
        g.remove_edge(cut.e2).unwrap();
        let e1p = g.add_edge(4, 9).unwrap();
        let e2p = g.add_edge(1, 0).unwrap();
        let (rest, block) = t.reduce(&phi, &g, cut.a, cut.b, e1p, e2p).unwrap();
        assert_eq!((block.node_count(), block.edge_count()), (1, 0));
        assert_eq!((rest.node_count(), rest.edge_count()), (2, 2));
        assert_eq!(rest.degree2_nodes().len(), 2);
        validate_representation(&g, &rest, &phi, 60).unwrap();
        validate_representation(&g, &block, &phi, 60).unwrap();
    }

    #[test]
    fn reduce_needs_common_cycle() {
        // two triangles sharing node 0: edges on different cycles
        let members: Vec<Vec<VertexId>> = (0..5).map(|i| vec![VertexId(i)]).collect();
        let t = Cactus::from_parts(
            members,
            &[
                (0, 1, EdgeId(0), Some(0)),
                (1, 2, EdgeId(1), Some(0)),
                (2, 0, EdgeId(2), Some(0)),
                (0, 3, EdgeId(3), Some(1)),
                (3, 4, EdgeId(4), Some(1)),
                (4, 0, EdgeId(5), Some(1)),
            ],
        );
        t.check_invariants().unwrap();
        let g = CubicGraph::with_vertices(5);
        let phi = Phi::new((0..5).map(NodeId).collect());
        assert_eq!(
            t.reduce(
                &phi,
                &g,
                CactusEdgeId(0),
                CactusEdgeId(3),
                EdgeId(0),
                EdgeId(1)
            )
            .unwrap_err(),
            Error::NotCactusCut
        );
    }

    #[test]
    fn invariant_violations() {
        let members: Vec<Vec<VertexId>> = (0..3).map(|i| vec![VertexId(i)]).collect();
        // triangle plus a chord on the same cycle label
        let t = Cactus::from_parts(
            members.clone(),
            &[
                (0, 1, EdgeId(0), Some(0)),
                (1, 2, EdgeId(1), Some(0)),
                (2, 0, EdgeId(2), Some(0)),
                (0, 1, EdgeId(3), Some(0)),
            ],
        );
        assert!(t.check_invariants().is_err());
        let bridge = Cactus::from_parts(members, &[(0, 1, EdgeId(0), None)]);
        assert!(bridge.check_invariants().is_err());
    }

    #[test]
    fn dot_lists_members() {
        let g = gen(&Family::H8).unwrap();
        let (t, _) = build_cactus(&g).unwrap();
        let dot = t.to_dot();
        assert!(dot.starts_with("graph cactus {"));
        assert!(dot.contains("n0: 0 1 2 3"));
        assert!(dot.contains("n0 -- n1"));
    }
}
