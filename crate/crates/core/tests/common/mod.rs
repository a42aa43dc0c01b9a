#![allow(dead_code)]

use wspm_core::cuts;
use wspm_core::generate::{gen, Family};
use wspm_core::CubicGraph;

pub const RANDOM_PER_SIZE: u64 = 72;

pub struct Case {
    pub name: String,
    pub graph: CubicGraph,
}

/// Cubic named families; necklaces stay within the default enumeration cap.
pub fn named() -> Vec<Case> {
    let mut fams = vec![
        Family::Theta,
        Family::K4,
        Family::K33,
        Family::Petersen,
        Family::H8,
    ];
    fams.extend((2..=10).map(Family::Necklace));
    fams.into_iter()
        .map(|f| Case {
            name: f.to_string(),
            graph: gen(&f).unwrap(),
        })
        .collect()
}

/// `per_size` rejection-sampled graphs for each even n in 4..=16.
pub fn random(per_size: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for n in (4..=16).step_by(2) {
        for seed in 0..per_size {
            let f = Family::Random { n, seed };
            out.push(Case {
                name: f.to_string(),
                graph: gen(&f).unwrap(),
            });
        }
    }
    out
}

pub fn corpus() -> Vec<Case> {
    let mut all = named();
    all.extend(random(RANDOM_PER_SIZE));
    all
}

/// Brute-force 3-edge-connectivity, independent of the fast path.
pub fn is_3ec_oracle(g: &CubicGraph) -> bool {
    g.is_connected()
        && cuts::enumerate_bridges(g).is_empty()
        && cuts::enumerate_2_edge_cuts(g).is_empty()
}
