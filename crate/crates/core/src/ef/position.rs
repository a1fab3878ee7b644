use super::Side;
use crate::bits;
use crate::graph::Graph;
use smallvec::SmallVec;
use std::fmt;

/// A set of pebbled pairs `(u in G, v in H)`, kept sorted so that equal
/// sets compare and hash equally. Each pair is packed as `u << 16 | v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Position(SmallVec<[u32; 8]>);

/// Vertex labels must fit in 16 bits.
pub const MAX_GAME_VERTICES: usize = 1 << 16;

#[inline]
fn pack(u: usize, v: usize) -> u32 {
    debug_assert!(u < MAX_GAME_VERTICES && v < MAX_GAME_VERTICES);
    (u as u32) << 16 | v as u32
}

#[inline]
fn unpack(x: u32) -> (usize, usize) {
    ((x >> 16) as usize, (x & 0xffff) as usize)
}

impl Position {
    pub fn empty() -> Self {
        Position::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut v: SmallVec<[u32; 8]> = pairs.into_iter().map(|(a, b)| pack(a, b)).collect();
        v.sort_unstable();
        v.dedup();
        Position(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        unpack(self.0[i])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|&x| unpack(x))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.binary_search(&pack(u, v)).is_ok()
    }

    /// The position with `(u, v)` added.
    pub fn with(&self, u: usize, v: usize) -> Position {
        let x = pack(u, v);
        let mut out = self.clone();
        if let Err(i) = out.0.binary_search(&x) {
            out.0.insert(i, x);
        }
        out
    }

    /// The position with the `i`-th pair removed.
    pub fn without(&self, i: usize) -> Position {
        let mut out = self.clone();
        out.0.remove(i);
        out
    }

    /// The partner of `x` on the other side, if `x` is pebbled on `side`.
    pub fn partner(&self, side: Side, x: usize) -> Option<usize> {
        self.pairs().find_map(|(u, v)| match side {
            Side::G if u == x => Some(v),
            Side::H if v == x => Some(u),
            _ => None,
        })
    }

    /// Both projections injective; adjacency and equality preserved.
    pub fn is_partial_iso(&self, g: &Graph, h: &Graph) -> bool {
        let p: SmallVec<[(usize, usize); 8]> = self.pairs().collect();
        for (i, &(a, b)) in p.iter().enumerate() {
            if a >= g.n() || b >= h.n() {
                return false;
            }
            for &(c, d) in &p[..i] {
                if (a == c) != (b == d) || g.has_edge(a, c) != h.has_edge(b, d) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// The two graphs of a game.
#[derive(Clone, Copy)]
pub struct Arena<'a> {
    pub g: &'a Graph,
    pub h: &'a Graph,
}

impl<'a> Arena<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Self {
        Arena { g, h }
    }

    pub fn graph(&self, side: Side) -> &'a Graph {
        match side {
            Side::G => self.g,
            Side::H => self.h,
        }
    }

    pub fn order(&self, side: Side) -> usize {
        self.graph(side).n()
    }

    /// The pair formed by a vertex `x` chosen on `side` and a reply `y`.
    #[inline]
    pub fn pair(side: Side, x: usize, y: usize) -> (usize, usize) {
        match side {
            Side::G => (x, y),
            Side::H => (y, x),
        }
    }

    /// Replies `y` such that `base + pair(side, x, y)` is a partial
    /// isomorphism, assuming `base` is one. Increasing order.
    pub fn replies(&self, base: &Position, side: Side, x: usize) -> Vec<usize> {
        if let Some(y) = base.partner(side, x) {
            return vec![y];
        }
        let (this, other) = (self.graph(side), self.graph(side.other()));
        let mut cand = bits::full(other.n());
        cand.resize(other.words(), 0);
        for (u, v) in base.pairs() {
            let (a, b) = match side {
                Side::G => (u, v),
                Side::H => (v, u),
            };
            let row = other.row(b);
            if this.has_edge(x, a) {
                cand.iter_mut().zip(row).for_each(|(c, r)| *c &= r);
            } else {
                cand.iter_mut().zip(row).for_each(|(c, r)| *c &= !r);
                bits::clear(&mut cand, b);
            }
        }
        bits::iter(&cand).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let a = Position::from_pairs([(2, 1), (0, 3)]);
        let b = Position::empty().with(0, 3).with(2, 1);
        assert_eq!(a, b);
        assert_eq!(a.pair(0), (0, 3));
        assert_eq!(a.with(0, 3), a);
        assert_eq!(a.without(0), Position::from_pairs([(2, 1)]));
        assert_eq!(a.partner(Side::H, 1), Some(2));
    }

    #[test]
    fn partial_isomorphism() {
        let (g, h) = (Graph::path(3), Graph::complete(3));
        assert!(Position::from_pairs([(0, 0), (1, 1)]).is_partial_iso(&g, &h));
        assert!(!Position::from_pairs([(0, 0), (2, 1)]).is_partial_iso(&g, &h));
        assert!(!Position::from_pairs([(0, 0), (1, 0)]).is_partial_iso(&g, &h));
        assert!(!Position::from_pairs([(0, 5)]).is_partial_iso(&g, &h));
    }

    #[test]
    fn replies_match_the_predicate() {
        let g = Graph::petersen();
        let h = Graph::cycle(7).unwrap();
        let arena = Arena::new(&g, &h);
        let base = Position::from_pairs([(0, 0), (2, 2)]);
        for side in [Side::G, Side::H] {
            for x in 0..arena.order(side) {
                let expect: Vec<usize> = (0..arena.order(side.other()))
                    .filter(|&y| {
                        let (u, v) = Arena::pair(side, x, y);
                        base.with(u, v).is_partial_iso(&g, &h)
                    })
                    .collect();
                assert_eq!(arena.replies(&base, side, x), expect, "{side:?} {x}");
            }
        }
    }
}
