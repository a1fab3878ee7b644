//! The unbounded `k`-pebble game, solved explicitly.
//!
//! All partial isomorphisms of size at most `k` are listed; a sweep removes
//! every position from which some Spoiler move (adding a pair while fewer
//! than `k` are down, relocating one otherwise) leaves only removed or
//! illegal replies. Sweeps read the previous state only, so the sweep in
//! which a position falls is exactly the number of rounds Spoiler needs from
//! it. Moves onto an already pebbled vertex are skipped: they only shrink
//! the position, which never helps Spoiler.
//!
//! Who wins needs less: a position with `k` pairs survives exactly when all
//! its `k - 1`-pair subpositions do, so [`duplicator_survives`] keeps only
//! positions with fewer than `k` pairs.

use super::{require_game_size, require_non_isomorphic, Arena, Position, Side};
use crate::error::{param, Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use std::sync::atomic::{AtomicBool, Ordering};

/// Positions an explicit fixpoint may enumerate.
pub const FIXPOINT_CEILING: f64 = 1e8;

const ALIVE: u32 = u32::MAX;

/// `sum_{j <= k} C(n_g, j) * n_h! / (n_h - j)!`, an upper bound on the number
/// of positions with at most `k` pairs.
pub fn position_bound(n_g: usize, n_h: usize, k: usize) -> f64 {
    let mut total = 0.0;
    let mut term = 1.0;
    for j in 0..=k.min(n_g).min(n_h) {
        total += term;
        term *= (n_g - j) as f64 / (j + 1) as f64 * (n_h - j) as f64;
    }
    total
}

pub struct Fixpoint {
    k: usize,
    positions: Vec<Position>,
    index: FxHashMap<Position, u32>,
    rank: Vec<u32>,
}

impl Fixpoint {
    pub fn pebbles(&self) -> usize {
        self.k
    }

    /// Number of partial isomorphisms with at most `k` pairs.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `None` if `p` is not a partial isomorphism with at most `k` pairs;
    /// otherwise `Some(None)` when Duplicator survives forever from `p` and
    /// `Some(Some(r))` when Spoiler wins in exactly `r` rounds.
    pub fn rank(&self, p: &Position) -> Option<Option<usize>> {
        let &i = self.index.get(p)?;
        Some(match self.rank[i as usize] {
            ALIVE => None,
            r => Some(r as usize),
        })
    }

    pub fn survives(&self, p: &Position) -> bool {
        self.rank(p) == Some(None)
    }

    pub fn empty_survives(&self) -> bool {
        self.survives(&Position::empty())
    }

    /// Rounds Spoiler needs from the empty position, if he wins.
    pub fn empty_rank(&self) -> Option<usize> {
        self.rank(&Position::empty()).flatten()
    }

    /// The greatest Duplicator-winning family.
    pub fn survivors(&self) -> impl Iterator<Item = &Position> + '_ {
        self.positions
            .iter()
            .zip(&self.rank)
            .filter(|(_, &r)| r == ALIVE)
            .map(|(p, _)| p)
    }
}

fn enumerate(arena: Arena<'_>, k: usize) -> Vec<Position> {
    let mut out = vec![Position::empty()];
    let mut frontier = vec![(Position::empty(), 0usize)];
    while let Some((p, from)) = frontier.pop() {
        if p.len() == k {
            continue;
        }
        for u in from..arena.g.n() {
            for v in arena.replies(&p, Side::G, u) {
                let q = p.with(u, v);
                out.push(q.clone());
                frontier.push((q, u + 1));
            }
        }
    }
    out.sort_unstable();
    out
}

fn dies(
    arena: Arena<'_>,
    k: usize,
    p: &Position,
    index: &FxHashMap<Position, u32>,
    rank: &[u32],
) -> bool {
    let bases: Vec<Position> = if p.len() < k {
        vec![p.clone()]
    } else {
        (0..p.len()).map(|i| p.without(i)).collect()
    };
    let dead = |q: &Position| rank[index[q] as usize] != ALIVE;
    bases.iter().any(|base| {
        [Side::G, Side::H].into_iter().any(|side| {
            (0..arena.order(side)).any(|x| {
                base.partner(side, x).is_none()
                    && arena.replies(base, side, x).into_iter().all(|y| {
                        let (u, v) = Arena::pair(side, x, y);
                        dead(&base.with(u, v))
                    })
            })
        })
    })
}

/// The greatest Duplicator-winning family of the `k`-pebble game, with
/// rounds-to-win for every other partial isomorphism.
pub fn duplicator_fixpoint(g: &Graph, h: &Graph, k: usize) -> Result<Fixpoint> {
    require_game_size(g, h)?;
    if k == 0 {
        return Err(param("the game needs at least one pebble pair"));
    }
    ceiling(g.n(), h.n(), k)?;
    let arena = Arena::new(g, h);
    let positions = enumerate(arena, k);
    let index: FxHashMap<Position, u32> = positions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as u32))
        .collect();
    let mut rank = vec![ALIVE; positions.len()];
    for sweep in 1u32.. {
        let fallen: Vec<usize> = (0..positions.len())
            .into_par_iter()
            .filter(|&i| rank[i] == ALIVE && dies(arena, k, &positions[i], &index, &rank))
            .collect();
        if fallen.is_empty() {
            break;
        }
        for i in fallen {
            rank[i] = sweep;
        }
    }
    Ok(Fixpoint {
        k,
        positions,
        index,
        rank,
    })
}

fn ceiling(n_g: usize, n_h: usize, pairs: usize) -> Result<()> {
    let bound = position_bound(n_g, n_h, pairs);
    if bound > FIXPOINT_CEILING {
        return Err(Error::Resource(format!(
            "positions with up to {pairs} pairs on {n_g}x{n_h} vertices may number {bound:.3e}, above {FIXPOINT_CEILING:e}"
        )));
    }
    Ok(())
}

fn distances(g: &Graph) -> Vec<u16> {
    let n = g.n();
    let far = n.min(u16::MAX as usize - 1) as u16 + 1;
    let mut d = vec![far; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if row[w] == far {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    d
}

/// Dense numbering of positions with at most `j` pairs and distinct
/// `G`-vertices: the `G`-vertices are ranked in colex order, the `H`-vertices
/// read as digits base `v(H)`.
struct Numbering {
    n_h: usize,
    binom: Vec<Vec<usize>>,
    offset: Vec<usize>,
}

impl Numbering {
    fn new(n_g: usize, n_h: usize, j: usize) -> Option<Self> {
        let mut binom = vec![vec![0usize; j + 1]; n_g + 1];
        for n in 0..=n_g {
            binom[n][0] = 1;
            for r in 1..=j.min(n) {
                binom[n][r] =
                    binom[n - 1][r - 1].checked_add(if r < n { binom[n - 1][r] } else { 0 })?;
            }
        }
        let mut offset = vec![0usize];
        for r in 0..=j {
            let block = binom[n_g][r].checked_mul(n_h.checked_pow(r as u32)?)?;
            offset.push(offset[r].checked_add(block)?);
        }
        Some(Numbering { n_h, binom, offset })
    }

    fn len(&self) -> usize {
        *self.offset.last().unwrap()
    }

    fn index(&self, p: &Position) -> usize {
        let (mut colex, mut digits) = (0, 0);
        for (i, (u, v)) in p.pairs().enumerate() {
            colex += self.binom[u][i + 1];
            digits = digits * self.n_h + v;
        }
        self.offset[p.len()] + colex * self.n_h.pow(p.len() as u32) + digits
    }
}

/// Survival over positions with fewer than `k` pairs.
struct Reduced<'a> {
    arena: Arena<'a>,
    k: usize,
    dist: [Vec<u16>; 2],
    numbering: Numbering,
    alive: Vec<AtomicBool>,
}

impl Reduced<'_> {
    fn alive(&self, p: &Position) -> bool {
        self.alive[self.numbering.index(p)].load(Ordering::Relaxed)
    }

    fn dist(&self, side: Side, a: usize, b: usize) -> u16 {
        let n = self.arena.order(side);
        self.dist[side as usize][a * n + b]
    }

    /// Whether the reply `y` to `x` keeps Duplicator inside the family.
    fn good(&self, q: &Position, side: Side, x: usize, y: usize) -> bool {
        let (u, v) = Arena::pair(side, x, y);
        let r = q.with(u, v);
        if r.len() < self.k {
            return self.alive(&r);
        }
        (0..r.len()).all(|i| r.pair(i) == (u, v) || self.alive(&r.without(i)))
    }

    /// Whether some reply to `x` stays inside the family, trying replies
    /// that match distances to pebbled vertices first.
    fn answerable(&self, q: &Position, side: Side, x: usize) -> bool {
        let mut ranked: SmallVec<[(u32, usize); 64]> = self
            .arena
            .replies(q, side, x)
            .into_iter()
            .map(|y| {
                let cost = q
                    .pairs()
                    .map(|(u, v)| {
                        let (a, b) = match side {
                            Side::G => (u, v),
                            Side::H => (v, u),
                        };
                        self.dist(side, x, a)
                            .abs_diff(self.dist(side.other(), y, b)) as u32
                    })
                    .sum();
                (cost, y)
            })
            .collect();
        ranked.sort_unstable();
        ranked.into_iter().any(|(_, y)| self.good(q, side, x, y))
    }

    /// Every Spoiler move from `q` can be answered. The move that refuted
    /// the previous position is tried first and updated on failure.
    fn holds(&self, q: &Position, killer: &mut (Side, usize)) -> bool {
        let (ks, kx) = *killer;
        if kx < self.arena.order(ks) && q.partner(ks, kx).is_none() && !self.answerable(q, ks, kx) {
            return false;
        }
        for side in [Side::G, Side::H] {
            for x in 0..self.arena.order(side) {
                if (side, x) != (ks, kx)
                    && q.partner(side, x).is_none()
                    && !self.answerable(q, side, x)
                {
                    *killer = (side, x);
                    return false;
                }
            }
        }
        true
    }
}

/// Whether Duplicator wins the unbounded `k`-pebble game.
pub fn duplicator_survives(g: &Graph, h: &Graph, k: usize) -> Result<bool> {
    require_game_size(g, h)?;
    if k == 0 {
        return Err(param("the game needs at least one pebble pair"));
    }
    ceiling(g.n(), h.n(), k - 1)?;
    let numbering = Numbering::new(g.n(), h.n(), k - 1)
        .filter(|n| n.len() as f64 <= 4.0 * FIXPOINT_CEILING)
        .ok_or_else(|| {
            Error::Resource(format!(
                "positions with up to {} pairs cannot be numbered",
                k - 1
            ))
        })?;
    let arena = Arena::new(g, h);
    let mut positions = enumerate(arena, k - 1);
    // larger positions first, so that one sweep carries deletions downwards
    positions.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let family = Reduced {
        arena,
        k,
        dist: [distances(g), distances(h)],
        alive: (0..numbering.len())
            .map(|_| AtomicBool::new(true))
            .collect(),
        numbering,
    };
    let empty = Position::empty();
    // deletions only shrink the family, so any order reaches the same fixpoint
    loop {
        let removed = positions
            .par_iter()
            .map_init(
                || (Side::G, usize::MAX),
                |killer, p| {
                    let slot = &family.alive[family.numbering.index(p)];
                    let dead = slot.load(Ordering::Relaxed) && !family.holds(p, killer);
                    if dead {
                        slot.store(false, Ordering::Relaxed);
                    }
                    dead
                },
            )
            .filter(|&dead| dead)
            .count();
        if removed == 0 || !family.alive(&empty) {
            return Ok(family.alive(&empty));
        }
    }
}

/// `W(G, H)`: the least `k` for which Spoiler wins the `k`-pebble game.
pub fn distinguishing_width(g: &Graph, h: &Graph) -> Result<usize> {
    require_non_isomorphic(g, h)?;
    for k in 1..=g.n().max(h.n()) + 1 {
        if !duplicator_survives(g, h, k)? {
            return Ok(k);
        }
    }
    unreachable!("max(v)+1 pebbles separate non-isomorphic graphs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ef::BoundedSolver;
    use crate::families::{complete_multipartite, hypercube};
    use crate::graph::enumerate_connected;

    #[test]
    fn bound_counts_positions() {
        assert_eq!(position_bound(3, 2, 1), 1.0 + 6.0);
        assert_eq!(position_bound(3, 2, 2), 1.0 + 6.0 + 3.0 * 2.0);
        let g = Graph::empty(4);
        let f = duplicator_fixpoint(&g, &g, 2).unwrap();
        assert_eq!(f.len() as f64, position_bound(4, 4, 2));
    }

    #[test]
    fn complete_graphs() {
        for l in 2..=5 {
            assert_eq!(
                distinguishing_width(&Graph::complete(l), &Graph::complete(l - 1)).unwrap(),
                l
            );
        }
        let f = duplicator_fixpoint(&Graph::complete(3), &Graph::complete(2), 3).unwrap();
        assert!(!f.empty_survives());
        assert_eq!(f.empty_rank(), Some(3));
    }

    #[test]
    fn cube_and_hexagon() {
        let (q, c) = (hypercube(3).unwrap(), Graph::cycle(6).unwrap());
        assert!(duplicator_fixpoint(&q, &c, 3).unwrap().empty_survives());
        assert!(!duplicator_fixpoint(&q, &c, 4).unwrap().empty_survives());
        assert!(duplicator_survives(&q, &c, 3).unwrap());
        assert!(!duplicator_survives(&q, &c, 4).unwrap());
    }

    #[test]
    fn one_pebble_sees_one_vertex() {
        let f = duplicator_fixpoint(&Graph::petersen(), &Graph::complete(2), 1).unwrap();
        assert!(f.empty_survives());
        let none = duplicator_fixpoint(&Graph::empty(0), &Graph::empty(1), 1).unwrap();
        assert!(!none.empty_survives());
    }

    #[test]
    fn multipartite_width() {
        let (g, h) = (
            complete_multipartite(3, 2).unwrap(),
            complete_multipartite(2, 2).unwrap(),
        );
        assert!(distinguishing_width(&g, &h).unwrap() >= 3);
    }

    #[test]
    fn survivors_are_closed_downwards() {
        let (g, h) = (
            Graph::cycle(6).unwrap(),
            Graph::cycle(3)
                .unwrap()
                .disjoint_union(&Graph::cycle(3).unwrap()),
        );
        let f = duplicator_fixpoint(&g, &h, 2).unwrap();
        assert!(f.empty_survives());
        for p in f.survivors() {
            for i in 0..p.len() {
                assert!(f.survives(&p.without(i)), "{p:?}");
            }
        }
    }

    #[test]
    fn ranks_match_the_bounded_game() {
        let graphs: Vec<Graph> = (2..=4)
            .flat_map(|n| enumerate_connected(n).unwrap())
            .collect();
        for g in &graphs {
            for h in &graphs {
                for k in 1..=3 {
                    let f = duplicator_fixpoint(g, h, k).unwrap();
                    let mut b = BoundedSolver::new(g, h, k).unwrap();
                    let rounds = b.rounds_to_win(&Position::empty(), 6);
                    assert_eq!(f.empty_rank(), rounds, "{g:?} {h:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn numbering_is_a_bijection() {
        let (g, h) = (Graph::path(6), Graph::cycle(5).unwrap());
        let arena = Arena::new(&g, &h);
        let numbering = Numbering::new(6, 5, 3).unwrap();
        let mut seen: Vec<usize> = enumerate(arena, 3)
            .iter()
            .map(|p| numbering.index(p))
            .collect();
        let count = seen.len();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), count);
        assert!(seen.iter().all(|&i| i < numbering.len()));
        assert_eq!(numbering.len(), 1 + 6 * 5 + 15 * 25 + 20 * 125);
    }

    #[test]
    fn survival_matches_the_full_fixpoint() {
        let graphs: Vec<Graph> = (1..=5)
            .flat_map(|n| enumerate_connected(n).unwrap())
            .collect();
        for g in &graphs {
            for h in &graphs {
                for k in 1..=3 {
                    let expect = duplicator_fixpoint(g, h, k).unwrap().empty_survives();
                    assert_eq!(
                        duplicator_survives(g, h, k).unwrap(),
                        expect,
                        "{g:?} {h:?} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn ceilings() {
        let big = Graph::path(300);
        assert!(matches!(
            duplicator_fixpoint(&big, &big, 4),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            duplicator_survives(&big, &big, 5),
            Err(Error::Resource(_))
        ));
        assert!(duplicator_survives(&big, &big, 0).is_err());
    }
}
