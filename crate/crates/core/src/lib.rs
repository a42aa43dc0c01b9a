//! Well-spread perfect matchings in bridgeless cubic multigraphs.
//!
//! A well-spread perfect matching meets every 3-edge-cut in exactly one
//! edge. [`wspm`] finds one by splitting the graph along its 2-edge-cuts
//! into 3-edge-connected pieces, solving each piece, and gluing the piece
//! matchings back together.

pub mod assembly;
pub mod bench;
pub mod cactus;
pub mod connectivity;
pub mod cuts;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reduction;
pub mod solver;
pub mod verify;

pub use assembly::{wspm, wspm_with, WspmOptions};
pub use error::{Error, Result};
pub use graph::{CubicGraph, EdgeId, Matching, Piece, PieceId, VertexId};
pub use verify::{verify_wspm, VerifyReport};
