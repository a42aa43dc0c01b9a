//! Well-spread perfect matchings of 3-edge-connected cubic graphs.
//!
//! Any edge of such a graph lies in some well-spread perfect matching, and
//! so does the complement of any edge. The default backend is an exact
//! backtracking search that relies on that existence; the interface leaves
//! room for a faster backend with the same contract.

use crate::connectivity;
use crate::cuts;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Matching, VertexId};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Any,
    MustContain(EdgeId),
    MustAvoid(EdgeId),
}

#[derive(Clone, Copy, Debug)]
pub struct SolverRequest<'a> {
    pub graph: &'a CubicGraph,
    pub constraint: Constraint,
}

pub trait SolverBackend: Sync {
    fn name(&self) -> &'static str;

    fn solve(&self, req: &SolverRequest<'_>) -> Result<Matching>;

    fn wspm_any(&self, g: &CubicGraph) -> Result<Matching> {
        self.solve(&SolverRequest {
            graph: g,
            constraint: Constraint::Any,
        })
    }

    fn wspm_with_edge(&self, g: &CubicGraph, e: EdgeId) -> Result<Matching> {
        self.solve(&SolverRequest {
            graph: g,
            constraint: Constraint::MustContain(e),
        })
    }

    fn wspm_without_edge(&self, g: &CubicGraph, e: EdgeId) -> Result<Matching> {
        self.solve(&SolverRequest {
            graph: g,
            constraint: Constraint::MustAvoid(e),
        })
    }
}

/// Backtracking over the lowest uncovered vertex with per-cut counters.
#[derive(Clone, Copy, Debug)]
pub struct ExactBackend {
    /// Maximum number of edge choices tried per request.
    pub budget: u64,
    /// Graphs with more edges use the polynomial 3-cut listing instead of
    /// the brute-force one.
    pub cap: usize,
}

impl Default for ExactBackend {
    fn default() -> Self {
        ExactBackend {
            budget: DEFAULT_BUDGET,
            cap: cuts::DEFAULT_CAP,
        }
    }
}

impl SolverBackend for ExactBackend {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn solve(&self, req: &SolverRequest<'_>) -> Result<Matching> {
        let g = req.graph;
        g.require_cubic()?;
        if let Constraint::MustContain(e) | Constraint::MustAvoid(e) = req.constraint {
            g.check_live(e)?;
        }
        if !connectivity::is_three_edge_connected(g) {
            return Err(Error::NotThreeEdgeConnected);
        }
        let forced = match req.constraint {
            Constraint::Any => None,
            Constraint::MustContain(e) => Some(e),
            // cover the lower endpoint of e by another edge
            Constraint::MustAvoid(e) => {
                let (a, b) = g.endpoints(e);
                let u = a.min(b);
                g.incident(u).iter().copied().filter(|&f| f != e).min()
            }
        };
        let triples: Vec<[EdgeId; 3]> = if g.live_edge_count() <= self.cap {
            cuts::enumerate_3_edge_cuts(g, self.cap)?
                .into_iter()
                .map(|t| t.0)
                .collect()
        } else {
            connectivity::three_cuts_of_3ec(g)
        };
        let mut search = Search::new(g, &triples, self.budget);
        let found = match forced {
            Some(e) => search.choose(e) && search.run(),
            None => search.run(),
        };
        log::trace!(
            "exact solver: {} vertices, {} cuts, {} choices",
            g.vertex_count(),
            triples.len(),
            search.tried
        );
        if search.tried > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if !found {
            return Err(Error::NoWspm);
        }
        let m: Matching = search.chosen.iter().copied().collect();
        if let Constraint::MustAvoid(e) = req.constraint {
            debug_assert!(!m.contains(e));
        }
        Ok(m)
    }
}

pub fn wspm_any(g: &CubicGraph) -> Result<Matching> {
    ExactBackend::default().wspm_any(g)
}

pub fn wspm_with_edge(g: &CubicGraph, e: EdgeId) -> Result<Matching> {
    ExactBackend::default().wspm_with_edge(g, e)
}

pub fn wspm_without_edge(g: &CubicGraph, e: EdgeId) -> Result<Matching> {
    ExactBackend::default().wspm_without_edge(g, e)
}

struct Search<'a> {
    g: &'a CubicGraph,
    cuts_of: Vec<Vec<u32>>,
    in_m: Vec<u8>,
    open_in_cut: Vec<u32>,
    open: Vec<bool>,
    covered: Vec<bool>,
    chosen: Vec<EdgeId>,
    /// edges closed by each choice, for undo
    trail: Vec<EdgeId>,
    tried: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a CubicGraph, triples: &[[EdgeId; 3]], budget: u64) -> Self {
        let mut cuts_of = vec![Vec::new(); g.edge_id_bound()];
        for (i, t) in triples.iter().enumerate() {
            for e in t {
                cuts_of[e.index()].push(i as u32);
            }
        }
        let mut open = vec![false; g.edge_id_bound()];
        for e in g.live_edges() {
            open[e.index()] = true;
        }
        Search {
            g,
            cuts_of,
            in_m: vec![0; triples.len()],
            open_in_cut: vec![3; triples.len()],
            open,
            covered: vec![false; g.vertex_count()],
            chosen: Vec::new(),
            trail: Vec::new(),
            tried: 0,
            budget,
        }
    }

    /// Takes `e` into the matching; on conflict the state is restored and
    /// `false` returned.
    fn choose(&mut self, e: EdgeId) -> bool {
        if !self.open[e.index()] {
            return false;
        }
        self.tried += 1;
        let mark = self.trail.len();
        let (u, w) = self.g.endpoints(e);
        let mut ok = true;
        for c in &self.cuts_of[e.index()] {
            self.in_m[*c as usize] += 1;
        }
        self.covered[u.index()] = true;
        self.covered[w.index()] = true;
        for x in [u, w] {
            for &f in self.g.incident(x) {
                if self.open[f.index()] {
                    self.open[f.index()] = false;
                    self.trail.push(f);
                    for &c in &self.cuts_of[f.index()] {
                        self.open_in_cut[c as usize] -= 1;
                    }
                }
            }
        }
        for &f in &self.trail[mark..] {
            for &c in &self.cuts_of[f.index()] {
                let c = c as usize;
                if self.in_m[c] > 1 || (self.in_m[c] == 0 && self.open_in_cut[c] == 0) {
                    ok = false;
                }
            }
            // a neighbour left with no way to be covered
            for x in [self.g.endpoints(f).0, self.g.endpoints(f).1] {
                if !self.covered[x.index()]
                    && self.g.incident(x).iter().all(|h| !self.open[h.index()])
                {
                    ok = false;
                }
            }
        }
        if ok {
            self.chosen.push(e);
        } else {
            self.undo(e, mark);
        }
        ok
    }

    fn undo(&mut self, e: EdgeId, mark: usize) {
        while self.trail.len() > mark {
            let f = self.trail.pop().unwrap();
            self.open[f.index()] = true;
            for &c in &self.cuts_of[f.index()] {
                self.open_in_cut[c as usize] += 1;
            }
        }
        for c in &self.cuts_of[e.index()] {
            self.in_m[*c as usize] -= 1;
        }
        let (u, w) = self.g.endpoints(e);
        self.covered[u.index()] = false;
        self.covered[w.index()] = false;
    }

    fn run(&mut self) -> bool {
        self.dfs(0)
    }

    fn dfs(&mut self, from: usize) -> bool {
        let Some(v) = (from..self.covered.len()).find(|&v| !self.covered[v]) else {
            return true;
        };
        let mut options: Vec<EdgeId> = self.g.incident(VertexId(v as u32)).to_vec();
        options.sort_unstable();
        options.dedup();
        for e in options {
            if self.tried > self.budget {
                return false;
            }
            let mark = self.trail.len();
            if !self.choose(e) {
                continue;
            }
            if self.dfs(v + 1) {
                return true;
            }
            self.chosen.pop();
            self.undo(e, mark);
        }
        false
    }
}
