//! Independent checking of well-spread perfect matchings.
//!
//! Everything here is brute force over [`crate::cuts`] and plain graph
//! storage; no code is shared with the reduction pipeline.

use std::fmt;

use crate::cuts::{self, CutPair, CutTriple};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Matching, VertexId};

/// Largest vertex count [`count_wspms`] accepts.
pub const COUNT_CAP_VERTICES: usize = 24;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub perfect: bool,
    /// 3-edge-cuts not met exactly once, with the intersection size.
    pub violations: Vec<(CutTriple, usize)>,
    /// 2-edge-cuts met by exactly one edge.
    pub parity_violations: Vec<(CutPair, usize)>,
    /// Cut enumeration was skipped because the graph exceeds the cap.
    pub skipped: bool,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.perfect
            && self.violations.is_empty()
            && self.parity_violations.is_empty()
            && !self.skipped
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        if !self.perfect {
            writeln!(f, "not a perfect matching")?;
        }
        if self.skipped {
            writeln!(f, "cut enumeration skipped: graph exceeds the cap")?;
        }
        for (c, k) in &self.violations {
            writeln!(f, "3-edge-cut {c} meets the matching in {k} edges")?;
        }
        for (c, k) in &self.parity_violations {
            writeln!(f, "2-edge-cut {c} meets the matching in {k} edge")?;
        }
        Ok(())
    }
}

fn hits(m: &Matching, edges: &[EdgeId]) -> usize {
    edges.iter().filter(|&&e| m.contains(e)).count()
}

struct CutLists {
    threes: Vec<CutTriple>,
    twos: Vec<CutPair>,
}

fn cut_lists(g: &CubicGraph, cap: usize) -> Result<CutLists> {
    Ok(CutLists {
        threes: cuts::enumerate_3_edge_cuts(g, cap)?,
        twos: cuts::enumerate_2_edge_cuts(g),
    })
}

fn check(g: &CubicGraph, m: &Matching, lists: &CutLists) -> VerifyReport {
    let perfect = m.is_perfect(g);
    let violations = lists
        .threes
        .iter()
        .map(|c| (*c, hits(m, &c.0)))
        .filter(|&(_, k)| k != 1)
        .collect();
    let parity_violations = lists
        .twos
        .iter()
        .map(|c| (*c, hits(m, &c.0)))
        .filter(|&(_, k)| k % 2 == 1)
        .collect();
    VerifyReport {
        perfect,
        violations,
        parity_violations,
        skipped: false,
    }
}

/// Checks `m` against every 3-edge-cut and 2-edge-cut of `g`. Graphs with
/// more than `cap` live edges are only checked for perfectness.
pub fn verify_wspm(g: &CubicGraph, m: &Matching, cap: usize) -> VerifyReport {
    match cut_lists(g, cap) {
        Ok(lists) => check(g, m, &lists),
        Err(_) => VerifyReport {
            perfect: m.is_perfect(g),
            skipped: true,
            ..VerifyReport::default()
        },
    }
}

/// All perfect matchings of `g`, by exhaustive search.
pub fn perfect_matchings(g: &CubicGraph) -> Result<Vec<Matching>> {
    if g.vertex_count() > COUNT_CAP_VERTICES {
        return Err(Error::TooLarge {
            size: g.vertex_count(),
            cap: COUNT_CAP_VERTICES,
        });
    }
    fn rec(g: &CubicGraph, covered: &mut [bool], cur: &mut Vec<EdgeId>, out: &mut Vec<Matching>) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            out.push(cur.iter().copied().collect());
            return;
        };
        covered[v] = true;
        for &e in g.incident(VertexId(v as u32)) {
            let w = g.opposite(e, VertexId(v as u32)).index();
            if covered[w] {
                continue;
            }
            covered[w] = true;
            cur.push(e);
            rec(g, covered, cur, out);
            cur.pop();
            covered[w] = false;
        }
        covered[v] = false;
    }
    let mut out = Vec::new();
    rec(
        g,
        &mut vec![false; g.vertex_count()],
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

/// All well-spread perfect matchings of `g`.
pub fn enumerate_wspms(g: &CubicGraph) -> Result<Vec<Matching>> {
    let pms = perfect_matchings(g)?;
    let lists = cut_lists(g, usize::MAX)?;
    Ok(pms
        .into_iter()
        .filter(|m| check(g, m, &lists).is_valid())
        .collect())
}

pub fn count_wspms(g: &CubicGraph) -> Result<usize> {
    Ok(enumerate_wspms(g)?.len())
}
