//! 2-edge-cut reductions and the forward phase.
//!
//! The forward phase repeatedly picks the lowest degree-2 cactus node `x`,
//! cuts its two external edges, and closes both sides with fresh edges. The
//! side `φ⁻¹(x)` is frozen as a piece; the rest continues. What remains at
//! the end is a single 3-edge-connected graph `H_k`.

use std::collections::BTreeSet;

use crate::cactus::{Cactus, CutAt, NodeId, Phi};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Piece, PieceId, VertexId};

/// Endpoint naming for a 2-edge-cut `{e1 = u1v1, e2 = u2v2}` with `u1, u2`
/// on one side and `v1, v2` on the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub u1: VertexId,
    pub v1: VertexId,
    pub u2: VertexId,
    pub v2: VertexId,
}

/// One step of the forward phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionRecord {
    /// 1-based step index.
    pub step: usize,
    pub e1: EdgeId,
    pub e2: EdgeId,
    /// `u1u2`, in the continuing graph.
    pub e1p: EdgeId,
    /// `v1v2`, in the separated piece.
    pub e2p: EdgeId,
    pub orientation: Orientation,
    /// The piece split off at this step.
    pub separated: PieceId,
    pub continuing_size: usize,
    pub separated_size: usize,
}

#[derive(Clone, Debug)]
pub struct ReductionPlan {
    /// Vertex count of the input.
    pub n: usize,
    pub records: Vec<ReductionRecord>,
    /// `G_1, ..., G_k` followed by `H_k`, indexed by [`PieceId`].
    pub pieces: Vec<Piece>,
    /// Primitive operations spent by the forward phase.
    pub ops: u64,
}

impl ReductionPlan {
    pub fn k(&self) -> usize {
        self.records.len()
    }

    pub fn piece(&self, id: PieceId) -> &Piece {
        &self.pieces[id.index()]
    }

    pub fn final_piece(&self) -> &Piece {
        self.pieces.last().expect("a plan always has a final piece")
    }

    pub fn piece_vertex_total(&self) -> usize {
        self.pieces.iter().map(|p| p.vertex_count()).sum()
    }
}

/// State visible to an observer right after each forward step.
pub struct StepView<'a> {
    pub record: &'a ReductionRecord,
    /// The graph just before the step.
    pub before: &'a CubicGraph,
    /// The graph after the step; both sides are still present.
    pub graph: &'a CubicGraph,
    /// Cactus of the continuing side.
    pub cactus: &'a Cactus,
    /// Edgeless cactus of the separated side.
    pub separated: &'a Cactus,
    pub phi: &'a Phi,
    /// The node that was split off.
    pub node: NodeId,
}

/// Names the endpoints of the 2-edge-cut `{e1, e2}` by one traversal.
/// `u1` is the first stored endpoint of `e1`.
pub fn orient_cut(g: &CubicGraph, e1: EdgeId, e2: EdgeId) -> Result<Orientation> {
    g.check_live(e1)?;
    g.check_live(e2)?;
    if e1 == e2 {
        return Err(Error::NotTwoCut(e1, e2));
    }
    let base = g.components().count;
    let after = g.components_avoiding(&[e1, e2]);
    let single = |e| g.components_avoiding(&[e]).count;
    if after.count != base + 1 || single(e1) != base || single(e2) != base {
        return Err(Error::NotTwoCut(e1, e2));
    }
    let (u1, v1) = g.endpoints(e1);
    let (a, b) = g.endpoints(e2);
    let side = after.of(u1);
    if after.of(v1) == side {
        return Err(Error::NotTwoCut(e1, e2));
    }
    let (u2, v2) = if after.of(a) == side { (a, b) } else { (b, a) };
    Ok(Orientation { u1, v1, u2, v2 })
}

/// Replaces the cut by `e1p = u1u2` and `e2p = v1v2` for a known
/// orientation. A shared endpoint on either side means the input had a
/// bridge and is reported as [`Error::LoopWouldForm`].
pub fn reduce_oriented(
    g: &mut CubicGraph,
    e1: EdgeId,
    e2: EdgeId,
    o: Orientation,
) -> Result<(EdgeId, EdgeId)> {
    if o.u1 == o.u2 {
        return Err(Error::LoopWouldForm(o.u1));
    }
    if o.v1 == o.v2 {
        return Err(Error::LoopWouldForm(o.v1));
    }
    g.remove_edge(e1)?;
    g.remove_edge(e2)?;
    let e1p = g.add_edge(o.u1.index(), o.u2.index())?;
    let e2p = g.add_edge(o.v1.index(), o.v2.index())?;
    Ok((e1p, e2p))
}

/// Reduces `g` along the 2-edge-cut `{e1, e2}`.
pub fn two_cut_reduce(g: &mut CubicGraph, e1: EdgeId, e2: EdgeId) -> Result<(EdgeId, EdgeId)> {
    let o = orient_cut(g, e1, e2)?;
    reduce_oriented(g, e1, e2, o)
}

/// Runs the forward phase on a copy of `g`.
pub fn forward_phase(g: &CubicGraph, t: Cactus, phi: &Phi) -> Result<ReductionPlan> {
    run(g, t, phi, None::<fn(&StepView<'_>)>)
}

/// [`forward_phase`] calling `observe` after every step.
pub fn forward_phase_observed(
    g: &CubicGraph,
    t: Cactus,
    phi: &Phi,
    observe: impl FnMut(&StepView<'_>),
) -> Result<ReductionPlan> {
    run(g, t, phi, Some(observe))
}

fn run<F: FnMut(&StepView<'_>)>(
    g: &CubicGraph,
    mut t: Cactus,
    phi: &Phi,
    mut observe: Option<F>,
) -> Result<ReductionPlan> {
    let mut work = g.clone();
    let mut ops: u64 = 0;
    let mut l: BTreeSet<NodeId> = BTreeSet::new();
    for x in t.nodes() {
        ops += 1;
        if t.degree(x) == 2 {
            l.insert(x);
        }
    }
    let mut records = Vec::new();
    let mut pieces = Vec::new();
    let mut remaining: usize = t.nodes().map(|x| t.members(x).len()).sum();
    while t.edge_count() > 0 {
        let Some(x) = l.pop_first() else {
            return Err(Error::NotCactus(
                "edges remain but no node has degree 2".into(),
            ));
        };
        let cut = t.pick_cut_at(x)?;
        let o = orient_at(&work, phi, x, cut)?;
        let before = observe.as_ref().map(|_| work.clone());
        let (e1p, e2p) = reduce_oriented(&mut work, cut.e1, cut.e2, o)?;
        ops += 6;

        let (y, z, _) = t.reduce_at(x, cut, e1p);
        ops += 4;
        for w in [y, z] {
            ops += 1;
            if t.is_node_alive(w) && t.degree(w) == 2 {
                l.insert(w);
            } else {
                l.remove(&w);
            }
        }

        let size = t.members(x).len();
        ops += size as u64;
        let separated = PieceId(pieces.len() as u32);
        remaining -= size;
        let record = ReductionRecord {
            step: records.len() + 1,
            e1: cut.e1,
            e2: cut.e2,
            e1p,
            e2p,
            orientation: o,
            separated,
            continuing_size: remaining,
            separated_size: size,
        };
        log::debug!(
            "step {}: removed ({}, {}) added ({}, {}) sizes ({}, {})",
            record.step,
            record.e1,
            record.e2,
            e1p,
            e2p,
            remaining,
            size
        );
        pieces.push(work.induced_piece(t.members(x)));
        if let (Some(f), Some(before)) = (observe.as_mut(), before.as_ref()) {
            let single = Cactus::singleton(x, t.members(x).to_vec());
            f(&StepView {
                record: &record,
                before,
                graph: &work,
                cactus: &t,
                separated: &single,
                phi,
                node: x,
            });
        }
        records.push(record);
    }
    let last: Vec<VertexId> = t
        .nodes()
        .flat_map(|x| t.members(x).iter().copied())
        .collect();
    ops += last.len() as u64;
    pieces.push(work.induced_piece(&last));
    Ok(ReductionPlan {
        n: g.vertex_count(),
        records,
        pieces,
        ops,
    })
}

/// Orientation at a degree-2 node: the `v` side is `φ⁻¹(x)`.
fn orient_at(g: &CubicGraph, phi: &Phi, x: NodeId, cut: CutAt) -> Result<Orientation> {
    let inside_outside = |e: EdgeId| {
        let (a, b) = g.endpoints(e);
        if phi.of(a) == x {
            Ok((b, a))
        } else if phi.of(b) == x {
            Ok((a, b))
        } else {
            Err(Error::RepresentationGap(format!(
                "edge {e} does not touch node {}",
                x.0
            )))
        }
    };
    let (u1, v1) = inside_outside(cut.e1)?;
    let (u2, v2) = inside_outside(cut.e2)?;
    Ok(Orientation { u1, v1, u2, v2 })
}
