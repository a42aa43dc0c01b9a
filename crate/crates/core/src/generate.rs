//! Named graph families and random bridgeless cubic multigraphs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId};

/// Ids of the two joining edges of [`Family::H8`]: `(0,4)` and `(1,5)`.
pub const H8_E1: EdgeId = EdgeId(10);
pub const H8_E2: EdgeId = EdgeId(11);

const MAX_ATTEMPTS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Theta,
    K4,
    K33,
    Petersen,
    H8,
    /// K4 minus the edge (0,1). Not cubic: vertices 0 and 1 have degree 2.
    Block,
    Necklace(usize),
    Random {
        n: usize,
        seed: u64,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Theta => write!(f, "theta"),
            Family::K4 => write!(f, "k4"),
            Family::K33 => write!(f, "k33"),
            Family::Petersen => write!(f, "petersen"),
            Family::H8 => write!(f, "h8"),
            Family::Block => write!(f, "block"),
            Family::Necklace(k) => write!(f, "necklace:{k}"),
            Family::Random { n, seed } => write!(f, "random:{n}:{seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `theta`, `k4`, `necklace:5`, `random:10:7`, ...
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<u64> {
            parts
                .get(i)
                .ok_or_else(|| Error::BadParams(format!("missing parameter in {s:?}")))?
                .parse()
                .map_err(|_| Error::BadParams(format!("bad number in {s:?}")))
        };
        let fam = match parts[0].to_ascii_lowercase().as_str() {
            "theta" => Family::Theta,
            "k4" => Family::K4,
            "k33" => Family::K33,
            "petersen" => Family::Petersen,
            "h8" => Family::H8,
            "block" => Family::Block,
            "necklace" => Family::Necklace(num(1)? as usize),
            "random" => Family::Random {
                n: num(1)? as usize,
                seed: if parts.len() > 2 { num(2)? } else { 0 },
            },
            other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
        };
        Ok(fam)
    }
}

const BLOCK_EDGES: [(usize, usize); 5] = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn push_block(pairs: &mut Vec<(usize, usize)>, offset: usize) {
    pairs.extend(BLOCK_EDGES.iter().map(|&(a, b)| (a + offset, b + offset)));
}

/// Generates a member of `family`. Every family except [`Family::Block`]
/// yields a bridgeless cubic graph.
pub fn gen(family: &Family) -> Result<CubicGraph> {
    let g = match *family {
        Family::Theta => CubicGraph::build(2, &[(0, 1), (0, 1), (0, 1)])?,
        Family::K4 => CubicGraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?,
        Family::K33 => {
            let pairs: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
            CubicGraph::build(6, &pairs)?
        }
        Family::Petersen => {
            let mut pairs = Vec::with_capacity(15);
            pairs.extend((0..5).map(|i| (i, (i + 1) % 5)));
            pairs.extend((0..5).map(|i| (i, i + 5)));
            pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            CubicGraph::build(10, &pairs)?
        }
        Family::H8 => {
            let mut pairs = Vec::with_capacity(12);
            push_block(&mut pairs, 0);
            push_block(&mut pairs, 4);
            pairs.push((0, 4));
            pairs.push((1, 5));
            CubicGraph::build(8, &pairs)?
        }
        Family::Block => CubicGraph::build(4, &BLOCK_EDGES)?,
        Family::Necklace(k) => necklace(k)?,
        Family::Random { n, seed } => random_bridgeless_cubic(n, seed)?,
    };
    Ok(g)
}

/// `k` blocks in a ring; vertex 1 of block `i` joins vertex 0 of block `i+1`.
fn necklace(k: usize) -> Result<CubicGraph> {
    if k < 2 {
        return Err(Error::BadParams(format!("necklace needs k >= 2, got {k}")));
    }
    let mut pairs = Vec::with_capacity(6 * k);
    for i in 0..k {
        push_block(&mut pairs, 4 * i);
    }
    for i in 0..k {
        pairs.push((4 * i + 1, 4 * ((i + 1) % k)));
    }
    CubicGraph::build(4 * k, &pairs)
}

/// Configuration-model sampling with rejection of loops, disconnected
/// graphs and graphs with bridges. Parallel edges are kept. Not uniform.
pub fn random_bridgeless_cubic(n: usize, seed: u64) -> Result<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadParams(format!(
            "random cubic graphs need an even n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        if points.chunks(2).any(|c| c[0] == c[1]) {
            continue;
        }
        let pairs: Vec<_> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        let g = CubicGraph::build(n, &pairs)?;
        if g.is_connected() && connectivity::bridges(&g).is_empty() {
            return Ok(g);
        }
    }
    Err(Error::BadParams(format!(
        "no bridgeless cubic graph on {n} vertices after {MAX_ATTEMPTS} attempts"
    )))
}
