//! The fresh-pebble game: `Eq_0(P)` iff `P` is a partial isomorphism, and
//! `Eq_{d+1}(P)` iff moreover every vertex on either side has a reply `y`
//! with `Eq_d(P + (x, y))`. Spoiler wins the `d`-round game from the empty
//! position iff `Eq_d` fails there.

use super::{require_game_size, require_non_isomorphic, Arena, Position, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::logic::Formula;
use rustc_hash::FxHashMap;

/// Largest `v(G) * v(H)` accepted by depth computations.
pub const PRODUCT_CEILING: usize = 400;
/// Largest number of rounds a depth computation may request.
pub const DEPTH_CEILING: usize = 7;

/// What is known about a position: `Eq_d` holds for `d <= holds_to` and
/// fails for `d >= fails_from`.
#[derive(Clone, Copy)]
struct Known {
    holds_to: u8,
    fails_from: u8,
}

pub struct DepthSolver<'a> {
    arena: Arena<'a>,
    memo: FxHashMap<Position, Known>,
}

impl<'a> DepthSolver<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Result<Self> {
        require_game_size(g, h)?;
        if g.n() * h.n() > PRODUCT_CEILING {
            return Err(Error::Resource(format!(
                "depth computations need v(G)*v(H) <= {PRODUCT_CEILING}, got {}",
                g.n() * h.n()
            )));
        }
        Ok(DepthSolver {
            arena: Arena::new(g, h),
            memo: FxHashMap::default(),
        })
    }

    fn check_depth(d: usize) -> Result<u8> {
        if d > DEPTH_CEILING {
            return Err(Error::Resource(format!(
                "depth {d} exceeds the ceiling of {DEPTH_CEILING}"
            )));
        }
        Ok(d as u8)
    }

    /// Whether Spoiler wins the `d`-round game from the empty position.
    pub fn spoiler_wins(&mut self, d: usize) -> Result<bool> {
        let d = Self::check_depth(d)?;
        Ok(!self.equivalent(&Position::empty(), d))
    }

    /// Number of positions in the memo table.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn moves(&self, p: &Position) -> impl Iterator<Item = (Side, usize)> + '_ {
        let a = self.arena;
        let p = p.clone();
        [Side::G, Side::H]
            .into_iter()
            .flat_map(move |s| (0..a.order(s)).map(move |x| (s, x)))
            .filter(move |&(s, x)| p.partner(s, x).is_none())
    }

    /// `Eq_d(p)` for a partial isomorphism `p`.
    fn equivalent(&mut self, p: &Position, d: u8) -> bool {
        if d == 0 {
            return true;
        }
        if let Some(k) = self.memo.get(p) {
            if d <= k.holds_to {
                return true;
            }
            if d >= k.fails_from {
                return false;
            }
        }
        let moves: Vec<(Side, usize)> = self.moves(p).collect();
        let mut options = Vec::with_capacity(moves.len());
        let mut result = true;
        for &(side, x) in &moves {
            let ys = self.arena.replies(p, side, x);
            if ys.is_empty() {
                result = false;
                break;
            }
            options.push((side, x, ys));
        }
        if result {
            options.sort_by_key(|o| o.2.len());
            for (side, x, ys) in options {
                let refuted = ys.iter().all(|&y| {
                    let (u, v) = Arena::pair(side, x, y);
                    !self.equivalent(&p.with(u, v), d - 1)
                });
                if refuted {
                    result = false;
                    break;
                }
            }
        }
        let k = self.memo.entry(p.clone()).or_insert(Known {
            holds_to: 0,
            fails_from: u8::MAX,
        });
        if result {
            k.holds_to = k.holds_to.max(d);
        } else {
            k.fails_from = k.fails_from.min(d);
        }
        result
    }

    /// Least `(side, vertex)` after which every reply leaves `Eq_{d-1}`
    /// false, when `Eq_d(p)` fails.
    pub fn winning_move(&mut self, p: &Position, d: usize) -> Option<(Side, usize)> {
        if d == 0 {
            return None;
        }
        let d = d.min(DEPTH_CEILING) as u8;
        let moves: Vec<(Side, usize)> = self.moves(p).collect();
        moves.into_iter().find(|&(side, x)| {
            self.arena.replies(p, side, x).into_iter().all(|y| {
                let (u, v) = Arena::pair(side, x, y);
                !self.equivalent(&p.with(u, v), d - 1)
            })
        })
    }

    fn var(i: usize) -> String {
        format!("x{}", i + 1)
    }

    /// An atom true on the `G` side and false on the `H` side of the last
    /// pair of `seq`, which breaks the partial isomorphism.
    fn atom(&self, seq: &[(usize, usize)]) -> Formula {
        let last = seq.len() - 1;
        let (a, b) = seq[last];
        let z = Self::var(last);
        for (i, &(c, d)) in seq[..last].iter().enumerate() {
            let xi = Self::var(i);
            if (a == c) != (b == d) {
                return if a == c {
                    Formula::eq(&xi, &z)
                } else {
                    Formula::not(Formula::eq(&xi, &z))
                };
            }
            let (eg, eh) = (self.arena.g.has_edge(a, c), self.arena.h.has_edge(b, d));
            if eg != eh {
                return if eg {
                    Formula::adj(&xi, &z)
                } else {
                    Formula::not(Formula::adj(&xi, &z))
                };
            }
        }
        unreachable!("atom requested for a partial isomorphism")
    }

    /// A formula with free variables `x1..` (one per pair of `seq`), true in
    /// `G` at the first coordinates and false in `H` at the second.
    fn separate(&mut self, seq: &mut Vec<(usize, usize)>, d: usize) -> Formula {
        let pos = Position::from_pairs(seq.iter().copied());
        if !pos.is_partial_iso(self.arena.g, self.arena.h) {
            return self.atom(seq);
        }
        let (side, x) = self
            .winning_move(&pos, d)
            .expect("Spoiler wins from this position");
        let z = Self::var(seq.len());
        let mut parts: Vec<Formula> = Vec::new();
        for y in 0..self.arena.order(side.other()) {
            seq.push(Arena::pair(side, x, y));
            let f = self.separate(seq, d - 1);
            seq.pop();
            if !parts.contains(&f) {
                parts.push(f);
            }
        }
        let body = |parts: Vec<Formula>, conj: bool| {
            if parts.len() == 1 {
                parts.into_iter().next().unwrap()
            } else if conj {
                Formula::And(parts)
            } else {
                Formula::Or(parts)
            }
        };
        match side {
            Side::G => Formula::exists(&z, body(parts, true)),
            Side::H => Formula::forall(&z, body(parts, false)),
        }
    }
}

/// `D(G, H)`: the least `d` for which Spoiler wins the `d`-round game.
pub fn distinguishing_depth(g: &Graph, h: &Graph) -> Result<usize> {
    require_non_isomorphic(g, h)?;
    let mut s = DepthSolver::new(g, h)?;
    for d in 1..=g.n().max(h.n()) + 1 {
        if s.spoiler_wins(d)? {
            return Ok(d);
        }
    }
    unreachable!("a sentence of depth max(v)+1 separates non-isomorphic graphs")
}

/// A sentence of quantifier depth at most `d` true on `g` and false on `h`,
/// read off a winning strategy of Spoiler in the `d`-round game.
pub fn extract_sentence(g: &Graph, h: &Graph, d: usize) -> Result<Formula> {
    let mut s = DepthSolver::new(g, h)?;
    if !s.spoiler_wins(d)? {
        return Err(Error::Precondition(format!(
            "Spoiler does not win the {d}-round game"
        )));
    }
    Ok(s.separate(&mut Vec::new(), d))
}
