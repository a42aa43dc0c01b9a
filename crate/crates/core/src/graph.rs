//! Multigraph storage with stable vertex and edge identities.
//!
//! Edges live in an append-only arena: removing an edge only marks it dead,
//! and every inserted edge receives the next unused [`EdgeId`]. Incidence
//! lists hold edge ids, so parallel edges are ordinary distinct edges.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

/// Index of a frozen piece inside a reduction plan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PieceId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl PieceId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for PieceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct EdgeSlot {
    ends: [VertexId; 2],
    alive: bool,
}

/// Loop-free multigraph with an edge arena.
///
/// Cubicity is not enforced on mutation (verifier inputs may be arbitrary);
/// call [`CubicGraph::require_cubic`] where it matters.
#[derive(Clone, Debug, Default)]
pub struct CubicGraph {
    edges: Vec<EdgeSlot>,
    incidence: Vec<SmallVec<[EdgeId; 3]>>,
    live_edges: usize,
}

/// Connected-component labelling of all vertices.
#[derive(Clone, Debug)]
pub struct Components {
    pub count: usize,
    pub label: Vec<u32>,
}

impl Components {
    pub fn of(&self, v: VertexId) -> u32 {
        self.label[v.index()]
    }

    pub fn members(&self, c: u32) -> Vec<VertexId> {
        self.label
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == c)
            .map(|(i, _)| VertexId(i as u32))
            .collect()
    }
}

impl CubicGraph {
    /// An edgeless graph on `n` vertices.
    pub fn with_vertices(n: usize) -> Self {
        CubicGraph {
            edges: Vec::new(),
            incidence: vec![SmallVec::new(); n],
            live_edges: 0,
        }
    }

    /// Builds a graph from endpoint pairs; pair `i` becomes `EdgeId(i)`.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("graph has no vertices".into()));
        }
        if n > u32::MAX as usize {
            return Err(Error::Input("too many vertices".into()));
        }
        let mut g = CubicGraph::with_vertices(n);
        g.edges.reserve(pairs.len());
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::Input(format!(
                "edge ({u},{v}) has an endpoint outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::Input(format!("loop at vertex {u}")));
        }
        let id = EdgeId(self.edges.len() as u32);
        let (u, v) = (VertexId(u as u32), VertexId(v as u32));
        self.edges.push(EdgeSlot {
            ends: [u, v],
            alive: true,
        });
        self.incidence[u.index()].push(id);
        self.incidence[v.index()].push(id);
        self.live_edges += 1;
        Ok(id)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        self.check_live(e)?;
        let ends = self.edges[e.index()].ends;
        self.edges[e.index()].alive = false;
        for v in ends {
            let list = &mut self.incidence[v.index()];
            let pos = list
                .iter()
                .position(|&x| x == e)
                .expect("incidence out of sync");
            list.remove(pos);
        }
        self.live_edges -= 1;
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    /// Number of edge ids ever issued, live or dead.
    #[inline]
    pub fn edge_id_bound(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn live_edge_count(&self) -> usize {
        self.live_edges
    }

    #[inline]
    pub fn is_live(&self, e: EdgeId) -> bool {
        self.edges.get(e.index()).is_some_and(|s| s.alive)
    }

    pub fn check_live(&self, e: EdgeId) -> Result<()> {
        if self.is_live(e) {
            Ok(())
        } else {
            Err(Error::DeadEdge(e))
        }
    }

    /// Endpoints of `e`; also answers for dead edges.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [u, v] = self.edges[e.index()].ends;
        (u, v)
    }

    #[inline]
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.edges[e.index()].ends;
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.index()]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v.index()].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count() as u32).map(VertexId)
    }

    /// Live edges in ascending id order.
    pub fn live_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, s)| s.alive)
            .map(|(i, _)| EdgeId(i as u32))
    }

    pub fn require_cubic(&self) -> Result<()> {
        match self.vertices().find(|&v| self.degree(v) != 3) {
            Some(v) => Err(Error::NotCubic {
                vertex: v,
                degree: self.degree(v),
            }),
            None => Ok(()),
        }
    }

    /// Components of the graph with `removed` edges ignored.
    pub fn components_avoiding(&self, removed: &[EdgeId]) -> Components {
        const UNSEEN: u32 = u32::MAX;
        let n = self.vertex_count();
        let mut label = vec![UNSEEN; n];
        let mut count = 0u32;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != UNSEEN {
                continue;
            }
            label[s] = count;
            queue.push_back(VertexId(s as u32));
            while let Some(v) = queue.pop_front() {
                for &e in self.incident(v) {
                    if removed.contains(&e) {
                        continue;
                    }
                    let w = self.opposite(e, v);
                    if label[w.index()] == UNSEEN {
                        label[w.index()] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        Components {
            count: count as usize,
            label,
        }
    }

    pub fn components(&self) -> Components {
        self.components_avoiding(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.components().count == 1
    }

    /// Frozen copy of the subgraph induced by `vertices`.
    ///
    /// Local ids are assigned in ascending global order, so the local edge
    /// order agrees with the global one.
    pub fn induced_piece(&self, vertices: &[VertexId]) -> Piece {
        let mut verts = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut edges = Vec::with_capacity(verts.len() * 3 / 2);
        for &v in &verts {
            for &e in self.incident(v) {
                let w = self.opposite(e, v);
                // take each internal edge once, from its smaller endpoint
                if v < w && verts.binary_search(&w).is_ok() {
                    edges.push(e);
                }
            }
        }
        edges.sort_unstable();
        let mut graph = CubicGraph::with_vertices(verts.len());
        graph.edges.reserve(edges.len());
        for &e in &edges {
            let (a, b) = self.endpoints(e);
            let la = verts.binary_search(&a).unwrap();
            let lb = verts.binary_search(&b).unwrap();
            graph.add_edge(la, lb).expect("induced edge is valid");
        }
        Piece {
            graph,
            vertices: verts,
            edges,
        }
    }

    /// Splits a freshly reduced graph into its two pieces.
    ///
    /// `e1`, `e2` must already be dead and `e1p`, `e2p` live. The first
    /// returned piece contains `e1p`, the second contains `e2p`.
    pub fn split_on_edge_pair(
        &self,
        e1: EdgeId,
        e2: EdgeId,
        e1p: EdgeId,
        e2p: EdgeId,
    ) -> Result<(Piece, Piece)> {
        for e in [e1, e2] {
            if self.is_live(e) || e.index() >= self.edge_id_bound() {
                return Err(Error::Input(format!("edge {e} should have been removed")));
            }
        }
        self.check_live(e1p)?;
        self.check_live(e2p)?;
        let comps = self.components();
        if comps.count != 2 {
            return Err(Error::ComponentCountMismatch(comps.count));
        }
        let c1 = comps.of(self.endpoints(e1p).0);
        let c2 = comps.of(self.endpoints(e2p).0);
        if c1 == c2 {
            return Err(Error::Input(
                "new edges of the reduction lie in the same component".into(),
            ));
        }
        Ok((
            self.induced_piece(&comps.members(c1)),
            self.induced_piece(&comps.members(c2)),
        ))
    }
}

/// A frozen subgraph with local ids and maps back to the parent's ids.
#[derive(Clone, Debug)]
pub struct Piece {
    pub graph: CubicGraph,
    /// local vertex index -> global id, ascending
    pub vertices: Vec<VertexId>,
    /// local edge index -> global id, ascending
    pub edges: Vec<EdgeId>,
}

impl Piece {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn global_edge(&self, local: EdgeId) -> EdgeId {
        self.edges[local.index()]
    }

    pub fn local_edge(&self, global: EdgeId) -> Option<EdgeId> {
        self.edges
            .binary_search(&global)
            .ok()
            .map(|i| EdgeId(i as u32))
    }

    pub fn local_vertex(&self, global: VertexId) -> Option<VertexId> {
        self.vertices
            .binary_search(&global)
            .ok()
            .map(|i| VertexId(i as u32))
    }

    /// Translates a matching of the local graph into global edge ids.
    pub fn lift(&self, local: &Matching) -> Matching {
        local.iter().map(|e| self.global_edge(e)).collect()
    }
}

/// A set of edge ids, ordered by id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching(BTreeSet<EdgeId>);

impl Matching {
    pub fn new() -> Self {
        Matching(BTreeSet::new())
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        self.0.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn extend_from(&mut self, other: &Matching) {
        self.0.extend(other.0.iter().copied());
    }

    /// Live-edge set in which no two edges share a vertex.
    pub fn is_matching(&self, g: &CubicGraph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        for e in self.iter() {
            if !g.is_live(e) {
                return false;
            }
            let (u, v) = g.endpoints(e);
            for w in [u, v] {
                if std::mem::replace(&mut seen[w.index()], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Every vertex covered exactly once by live edges.
    pub fn is_perfect(&self, g: &CubicGraph) -> bool {
        self.is_matching(g) && 2 * self.len() == g.vertex_count()
    }
}

impl FromIterator<EdgeId> for Matching {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        Matching(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Matching {
    type Item = EdgeId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, EdgeId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}
