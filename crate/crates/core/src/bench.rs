//! Forward-phase scaling on necklaces.

use std::time::{Duration, Instant};

use crate::cactus::{build_cactus, Cactus, Phi};
use crate::error::{Error, Result};
use crate::generate::{gen, Family};
use crate::graph::CubicGraph;
use crate::reduction::{forward_phase, ReductionPlan};

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub blocks: usize,
    pub n: usize,
    pub ops: u64,
    pub pieces: usize,
    pub build_secs: f64,
    pub forward_secs: f64,
}

impl BenchRecord {
    pub const CSV_HEADER: &'static str =
        "blocks,n,ops,ops_per_vertex,pieces,build_secs,forward_secs";

    pub fn ops_per_vertex(&self) -> f64 {
        self.ops as f64 / self.n as f64
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{:.4},{},{:.6},{:.6}",
            self.blocks,
            self.n,
            self.ops,
            self.ops_per_vertex(),
            self.pieces,
            self.build_secs,
            self.forward_secs
        )
    }
}

/// Times several inputs in interleaved rounds, one run of each per round,
/// until `min_total` has elapsed (at least three rounds). Returns the last
/// plan and fastest run time per input, in input order.
pub fn time_forward_all(
    inputs: &[(&CubicGraph, &Cactus, &Phi)],
    min_total: Duration,
) -> Result<Vec<(ReductionPlan, f64)>> {
    let mut best = vec![f64::INFINITY; inputs.len()];
    let mut plans = Vec::with_capacity(inputs.len());
    let start = Instant::now();
    let mut rounds = 0;
    while rounds < 3 || start.elapsed() < min_total {
        plans.clear();
        for (i, &(g, t, phi)) in inputs.iter().enumerate() {
            let cactus = t.clone();
            let begin = Instant::now();
            let plan = forward_phase(g, cactus, phi)?;
            best[i] = best[i].min(begin.elapsed().as_secs_f64());
            plans.push(plan);
        }
        rounds += 1;
    }
    Ok(plans.into_iter().zip(best).collect())
}

/// One record per `k = kmin, 2 kmin, 4 kmin, ...` up to `kmax`.
pub fn bench(kmin: usize, kmax: usize) -> Result<Vec<BenchRecord>> {
    bench_with(kmin, kmax, Duration::from_millis(50))
}

pub fn bench_with(kmin: usize, kmax: usize, min_total: Duration) -> Result<Vec<BenchRecord>> {
    if kmin < 2 {
        return Err(Error::BadParams(format!(
            "necklaces need at least 2 blocks, got {kmin}"
        )));
    }
    let mut built = Vec::new();
    let mut k = kmin;
    while k <= kmax {
        let g = gen(&Family::Necklace(k))?;
        let start = Instant::now();
        let (t, phi) = build_cactus(&g)?;
        built.push((k, g, t, phi, start.elapsed().as_secs_f64()));
        k *= 2;
    }
    let inputs: Vec<_> = built.iter().map(|(_, g, t, phi, _)| (g, t, phi)).collect();
    let timed = time_forward_all(&inputs, min_total * built.len() as u32)?;
    Ok(built
        .iter()
        .zip(timed)
        .map(
            |((k, g, _, _, build_secs), (plan, forward_secs))| BenchRecord {
                blocks: *k,
                n: g.vertex_count(),
                ops: plan.ops,
                pieces: plan.pieces.len(),
                build_secs: *build_secs,
                forward_secs,
            },
        )
        .collect())
}
