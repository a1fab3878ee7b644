//! The `r`-round `k`-pebble game with relocation.
//!
//! Each round Spoiler picks a pebble pair, in use or not, lifts it if
//! needed, and puts one pebble on a vertex of either graph; Duplicator puts
//! the partner pebble on the other graph. Positions are sets of pairs: two
//! pebble pairs on the same pair of vertices behave like one pair and a free
//! one, so the set records everything that matters.

use super::depth::{DEPTH_CEILING, PRODUCT_CEILING};
use super::{require_game_size, Arena, GameVerdict, Move, Player, Position, Side};
use crate::error::{param, Error, Result};
use crate::graph::Graph;
use rustc_hash::FxHashMap;

#[derive(Clone, Copy)]
struct Known {
    /// Spoiler wins within `r` rounds for every `r >= wins_from`.
    wins_from: u8,
    /// Duplicator survives `r` rounds for every `r <= survives_to`.
    survives_to: u8,
}

pub struct BoundedSolver<'a> {
    arena: Arena<'a>,
    k: usize,
    memo: FxHashMap<Position, Known>,
}

impl<'a> BoundedSolver<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, k: usize) -> Result<Self> {
        require_game_size(g, h)?;
        if k == 0 {
            return Err(param("the game needs at least one pebble pair"));
        }
        if g.n() * h.n() > PRODUCT_CEILING {
            return Err(Error::Resource(format!(
                "bounded games need v(G)*v(H) <= {PRODUCT_CEILING}, got {}",
                g.n() * h.n()
            )));
        }
        Ok(BoundedSolver {
            arena: Arena::new(g, h),
            k,
            memo: FxHashMap::default(),
        })
    }

    pub fn arena(&self) -> Arena<'a> {
        self.arena
    }

    pub fn pebbles(&self) -> usize {
        self.k
    }

    /// Positions left after lifting a pebble: `p` itself when a pair is
    /// free, and `p` minus each pair.
    fn bases(&self, p: &Position) -> Vec<Position> {
        let mut out = Vec::with_capacity(p.len() + 1);
        if p.len() < self.k {
            out.push(p.clone());
        }
        out.extend((0..p.len()).map(|i| p.without(i)));
        out
    }

    /// Whether Spoiler wins within `r` rounds from the partial isomorphism `p`.
    pub fn wins(&mut self, p: &Position, r: usize) -> bool {
        if r == 0 {
            return false;
        }
        let r8 = r.min(u8::MAX as usize - 1) as u8;
        if let Some(k) = self.memo.get(p) {
            if r8 >= k.wins_from {
                return true;
            }
            if r8 <= k.survives_to {
                return false;
            }
        }
        let mut result = false;
        'search: for base in self.bases(p) {
            for side in [Side::G, Side::H] {
                for x in 0..self.arena.order(side) {
                    if self.after_move_wins(&base, side, x, r - 1) {
                        result = true;
                        break 'search;
                    }
                }
            }
        }
        let k = self.memo.entry(p.clone()).or_insert(Known {
            wins_from: u8::MAX,
            survives_to: 0,
        });
        if result {
            k.wins_from = k.wins_from.min(r8);
        } else {
            k.survives_to = k.survives_to.max(r8);
        }
        result
    }

    /// Whether every reply to `x` on `side`, played from `base`, leaves a
    /// position Spoiler wins within `r` rounds.
    fn after_move_wins(&mut self, base: &Position, side: Side, x: usize, r: usize) -> bool {
        self.arena.replies(base, side, x).into_iter().all(|y| {
            let (u, v) = Arena::pair(side, x, y);
            self.wins(&base.with(u, v), r)
        })
    }

    /// Fewest rounds within `r` in which Spoiler wins from `p`.
    pub fn rounds_to_win(&mut self, p: &Position, r: usize) -> Option<usize> {
        if !p.is_partial_iso(self.arena.g, self.arena.h) {
            return Some(0);
        }
        (1..=r).find(|&t| self.wins(p, t))
    }

    /// Whether `mv` from the slot array `pebbles` wins within `r` rounds in
    /// total (the move included).
    pub fn move_wins(&mut self, pebbles: &[Option<(usize, usize)>], mv: Move, r: usize) -> bool {
        if r == 0 {
            return false;
        }
        let base = Position::from_pairs(
            pebbles
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != mv.slot)
                .filter_map(|(_, p)| *p),
        );
        self.after_move_wins(&base, mv.side, mv.vertex, r - 1)
    }
}

/// Exact outcome of the `r`-round `k`-pebble game from the empty position.
pub fn spoiler_wins(g: &Graph, h: &Graph, r: usize, k: usize) -> Result<GameVerdict> {
    if r > DEPTH_CEILING {
        return Err(Error::Resource(format!(
            "{r} rounds exceed the ceiling of {DEPTH_CEILING}"
        )));
    }
    let mut s = BoundedSolver::new(g, h, k)?;
    let empty = Position::empty();
    let Some(t) = s.rounds_to_win(&empty, r) else {
        return Ok(GameVerdict {
            winner: Player::Duplicator,
            optimal_move: None,
            rounds_to_win: None,
        });
    };
    let pebbles = vec![None; k];
    let arena = s.arena;
    let best = [Side::G, Side::H]
        .into_iter()
        .flat_map(|side| {
            (0..arena.order(side)).map(move |vertex| Move {
                side,
                vertex,
                slot: 0,
            })
        })
        .find(|&mv| s.move_wins(&pebbles, mv, t))
        .expect("a winning first move exists");
    Ok(GameVerdict {
        winner: Player::Spoiler,
        optimal_move: Some(best),
        rounds_to_win: Some(t),
    })
}
