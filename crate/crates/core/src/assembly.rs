//! Gluing piece matchings and the top-level solve.

use rayon::prelude::*;

use crate::cactus::build_cactus;
use crate::connectivity;
use crate::cuts;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Matching, Piece};
use crate::reduction::{forward_phase, ReductionPlan, ReductionRecord};
use crate::solver::{ExactBackend, SolverBackend, DEFAULT_BUDGET};
use crate::verify::verify_wspm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlueCase {
    BothAvoid,
    BothContain,
}

/// Which case applies, given a matching of the continuing side and one of
/// the separated piece (both in global ids).
pub fn glue_case(m1: &Matching, m2: &Matching, r: &ReductionRecord) -> Result<GlueCase> {
    match (m1.contains(r.e1p), m2.contains(r.e2p)) {
        (true, true) => Ok(GlueCase::BothContain),
        (false, false) => Ok(GlueCase::BothAvoid),
        _ => Err(Error::AgreementViolated(r.step)),
    }
}

/// Merges `m2` into `m1`, undoing the reduction of `r`.
pub fn glue_into(m1: &mut Matching, m2: &Matching, r: &ReductionRecord) -> Result<GlueCase> {
    let case = glue_case(m1, m2, r)?;
    m1.extend_from(m2);
    if case == GlueCase::BothContain {
        m1.remove(r.e1p);
        m1.remove(r.e2p);
        m1.insert(r.e1);
        m1.insert(r.e2);
    }
    Ok(case)
}

pub fn glue(m1: &Matching, m2: &Matching, r: &ReductionRecord) -> Result<Matching> {
    let mut out = m1.clone();
    glue_into(&mut out, m2, r)?;
    Ok(out)
}

/// One glue step as seen by an observer.
pub struct GlueView<'a> {
    pub record: &'a ReductionRecord,
    /// Matching of the continuing side before the step.
    pub before: &'a Matching,
    /// Matching of the separated piece, in global ids.
    pub piece: &'a Matching,
    pub after: &'a Matching,
    pub case: GlueCase,
}

fn solve_piece(
    backend: &dyn SolverBackend,
    piece: &Piece,
    r: &ReductionRecord,
    contain: bool,
) -> Result<Matching> {
    let local = piece
        .local_edge(r.e2p)
        .ok_or_else(|| Error::Input(format!("edge {} is not in piece {}", r.e2p, r.separated)))?;
    let m = if contain {
        backend.wspm_with_edge(&piece.graph, local)?
    } else {
        backend.wspm_without_edge(&piece.graph, local)?
    };
    Ok(piece.lift(&m))
}

/// Replays `plan` in reverse starting from `seed`, a matching of the final
/// piece in global ids.
pub fn backward_phase(
    plan: &ReductionPlan,
    seed: Matching,
    backend: &dyn SolverBackend,
) -> Result<Matching> {
    run_backward(plan, seed, backend, false, None::<fn(&GlueView<'_>)>)
}

/// [`backward_phase`] calling `observe` after every glue step.
pub fn backward_phase_observed(
    plan: &ReductionPlan,
    seed: Matching,
    backend: &dyn SolverBackend,
    observe: impl FnMut(&GlueView<'_>),
) -> Result<Matching> {
    run_backward(plan, seed, backend, false, Some(observe))
}

fn run_backward<F: FnMut(&GlueView<'_>)>(
    plan: &ReductionPlan,
    mut m: Matching,
    backend: &dyn SolverBackend,
    speculative: bool,
    mut observe: Option<F>,
) -> Result<Matching> {
    // both variants of every piece, solved up front in parallel
    let both: Option<Vec<(Matching, Matching)>> = if speculative {
        Some(
            plan.records
                .par_iter()
                .map(|r| {
                    let piece = plan.piece(r.separated);
                    Ok((
                        solve_piece(backend, piece, r, true)?,
                        solve_piece(backend, piece, r, false)?,
                    ))
                })
                .collect::<Result<_>>()?,
        )
    } else {
        None
    };
    for (i, r) in plan.records.iter().enumerate().rev() {
        let contain = m.contains(r.e1p);
        let mi = match &both {
            Some(pairs) if contain => pairs[i].0.clone(),
            Some(pairs) => pairs[i].1.clone(),
            None => solve_piece(backend, plan.piece(r.separated), r, contain)?,
        };
        match observe.as_mut() {
            Some(f) => {
                let before = m.clone();
                let case = glue_into(&mut m, &mi, r)?;
                f(&GlueView {
                    record: r,
                    before: &before,
                    piece: &mi,
                    after: &m,
                    case,
                });
            }
            None => {
                glue_into(&mut m, &mi, r)?;
            }
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug)]
pub struct WspmOptions {
    pub budget: u64,
    /// Enumeration cap for the solver's 3-cut listing and for verification.
    pub cap: usize,
    /// Check the result against every cut by brute force.
    pub verify: bool,
    /// Solve both variants of every piece in parallel before gluing.
    pub speculative: bool,
}

impl Default for WspmOptions {
    fn default() -> Self {
        WspmOptions {
            budget: DEFAULT_BUDGET,
            cap: cuts::DEFAULT_CAP,
            verify: false,
            speculative: false,
        }
    }
}

/// A well-spread perfect matching of a bridgeless cubic graph.
pub fn wspm(g: &CubicGraph) -> Result<Matching> {
    let opts = WspmOptions::default();
    let backend = ExactBackend {
        budget: opts.budget,
        cap: opts.cap,
    };
    wspm_with(g, &opts, &backend)
}

/// [`wspm`] with explicit options and backend. A disconnected input is
/// solved one component at a time.
pub fn wspm_with(
    g: &CubicGraph,
    opts: &WspmOptions,
    backend: &dyn SolverBackend,
) -> Result<Matching> {
    g.require_cubic()?;
    if let Some(&b) = connectivity::bridges(g).first() {
        return Err(Error::HasBridge(b));
    }
    let comps = g.components();
    if comps.count == 1 {
        let m = solve_connected(g, opts, backend)?;
        check(g, &m, opts)?;
        return Ok(m);
    }
    let mut out = Matching::new();
    for c in 0..comps.count as u32 {
        let piece = g.induced_piece(&comps.members(c));
        let m = solve_connected(&piece.graph, opts, backend)?;
        check(&piece.graph, &m, opts)?;
        out.extend_from(&piece.lift(&m));
    }
    Ok(out)
}

fn check(g: &CubicGraph, m: &Matching, opts: &WspmOptions) -> Result<()> {
    if !opts.verify {
        return Ok(());
    }
    let report = verify_wspm(g, m, opts.cap);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::VerificationFailed(
            report.to_string().trim_end().to_string(),
        ))
    }
}

fn solve_connected(
    g: &CubicGraph,
    opts: &WspmOptions,
    backend: &dyn SolverBackend,
) -> Result<Matching> {
    if connectivity::is_three_edge_connected(g) {
        return backend.wspm_any(g);
    }
    let (t, phi) = build_cactus(g)?;
    let plan = forward_phase(g, t, &phi)?;
    let last = plan.final_piece();
    let seed = last.lift(&backend.wspm_any(&last.graph)?);
    run_backward(
        &plan,
        seed,
        backend,
        opts.speculative,
        None::<fn(&GlueView<'_>)>,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen, Family, H8_E1, H8_E2};
    use crate::graph::EdgeId;
    use crate::verify::verify_wspm;

    fn h8_record() -> (CubicGraph, ReductionRecord) {
        let g = gen(&Family::H8).unwrap();
        let (t, phi) = build_cactus(&g).unwrap();
        let plan = forward_phase(&g, t, &phi).unwrap();
        (g, plan.records[0])
    }

    #[test]
    fn glue_h8_both_contain() {
        let (g, r) = h8_record();
        // the separated piece is block A with e2p = (0,1); the rest gets (4,5)
        // block A: 0 (0,2) 1 (0,3) 2 (1,2) 3 (1,3) 4 (2,3); block B is +5
        let m_rest: Matching = [r.e1p, EdgeId(9)].into_iter().collect();
        let m_sep: Matching = [r.e2p, EdgeId(4)].into_iter().collect();
        let m = glue(&m_rest, &m_sep, &r).unwrap();
        assert_eq!(
            m,
            [EdgeId(4), EdgeId(9), H8_E1, H8_E2].into_iter().collect()
        );
        assert!(verify_wspm(&g, &m, 60).is_valid());
    }

    #[test]
    fn glue_h8_both_avoid() {
        let (g, r) = h8_record();
        let m_rest: Matching = [EdgeId(5), EdgeId(8)].into_iter().collect();
        let m_sep: Matching = [EdgeId(0), EdgeId(3)].into_iter().collect();
        let m = glue(&m_rest, &m_sep, &r).unwrap();
        assert_eq!(m.len(), 4);
        assert!(verify_wspm(&g, &m, 60).is_valid());
    }

    #[test]
    fn glue_disagreement() {
        let (_, r) = h8_record();
        let m_rest: Matching = [r.e1p, EdgeId(9)].into_iter().collect();
        let m_sep: Matching = [EdgeId(0), EdgeId(3)].into_iter().collect();
        assert_eq!(glue(&m_rest, &m_sep, &r), Err(Error::AgreementViolated(1)));
    }

    #[test]
    fn families_end_to_end() {
        for f in [
            Family::Theta,
            Family::K4,
            Family::K33,
            Family::Petersen,
            Family::H8,
            Family::Necklace(2),
            Family::Necklace(3),
            Family::Necklace(5),
        ] {
            let g = gen(&f).unwrap();
            let m = wspm(&g).unwrap();
            assert!(verify_wspm(&g, &m, 60).is_valid(), "{f}");
        }
    }

    #[test]
    fn speculative_agrees() {
        let g = gen(&Family::Necklace(6)).unwrap();
        let plain = wspm(&g).unwrap();
        let opts = WspmOptions {
            speculative: true,
            verify: true,
            ..WspmOptions::default()
        };
        let fast = wspm_with(&g, &opts, &ExactBackend::default()).unwrap();
        assert_eq!(plain, fast);
    }

    #[test]
    fn bridge_is_rejected() {
        // two K4s with one edge subdivided each, joined by a bridge
        let mut pairs = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 8), (1, 8)];
        pairs.extend([
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
            (4, 9),
            (5, 9),
            (8, 9),
        ]);
        let g = CubicGraph::build(10, &pairs).unwrap();
        assert!(matches!(wspm(&g), Err(Error::HasBridge(_))));
    }

    #[test]
    fn components_are_solved_separately() {
        let mut g = CubicGraph::with_vertices(6);
        for _ in 0..3 {
            g.add_edge(0, 1).unwrap();
        }
        for (u, v) in [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)] {
            g.add_edge(u, v).unwrap();
        }
        let m = wspm(&g).unwrap();
        assert!(m.is_perfect(&g));
        assert_eq!(m.len(), 3);
    }
}
