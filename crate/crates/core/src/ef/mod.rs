//! Ehrenfeucht–Fraïssé pebble games on pairs of graphs.
//!
//! * [`DepthSolver`] decides the `d`-round game with a fresh pebble per round
//!   (the back-and-forth relations `Eq_d`) and yields `D(G, H)` and
//!   distinguishing sentences.
//! * [`BoundedSolver`] decides the `r`-round `k`-pebble game with the full
//!   move set, relocation included.
//! * [`duplicator_fixpoint`] computes the greatest Duplicator-winning family
//!   of the unbounded `k`-pebble game explicitly, with the number of rounds
//!   Spoiler needs from every losing position; [`duplicator_survives`]
//!   answers only who wins, over positions with fewer than `k` pairs.

mod bounded;
mod depth;
mod fixpoint;
mod play;
mod position;

pub use bounded::{spoiler_wins, BoundedSolver};
pub use depth::{
    distinguishing_depth, extract_sentence, DepthSolver, DEPTH_CEILING, PRODUCT_CEILING,
};
pub use fixpoint::{
    distinguishing_width, duplicator_fixpoint, duplicator_survives, position_bound, Fixpoint,
    FIXPOINT_CEILING,
};
pub use play::{
    apply, game_step, replay, DuplicatorStep, Game, Pebbles, Role, SpoilerStep, Step, Transcript,
    TranscriptEntry,
};
pub use position::{Arena, Position, MAX_GAME_VERTICES};

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    G,
    H,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::G => Side::H,
            Side::H => Side::G,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Spoiler,
    Duplicator,
}

/// Spoiler puts pebble `slot` on `vertex` of graph `side` (lifting it first
/// if it is in use).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub side: Side,
    pub vertex: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameVerdict {
    pub winner: Player,
    /// A fastest winning first move for Spoiler, least in `(side, vertex,
    /// slot)` order; absent when Duplicator wins or no rounds remain.
    pub optimal_move: Option<Move>,
    /// Rounds Spoiler needs when he wins.
    pub rounds_to_win: Option<usize>,
}

pub(crate) fn require_non_isomorphic(g: &Graph, h: &Graph) -> Result<()> {
    if is_isomorphic(g, h) {
        return Err(Error::Precondition("the graphs are isomorphic".into()));
    }
    Ok(())
}

pub(crate) fn require_game_size(g: &Graph, h: &Graph) -> Result<()> {
    if g.n().max(h.n()) >= MAX_GAME_VERTICES {
        return Err(Error::Resource(format!(
            "games support graphs with fewer than {MAX_GAME_VERTICES} vertices"
        )));
    }
    Ok(())
}
