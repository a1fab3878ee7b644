//! Naive reference implementations shared by the integration tests. They
//! work on plain adjacency matrices and share no code with the engine.

#![allow(dead_code)]

use efgraph::graph::connected_graphs;
use efgraph::Graph;
use proptest::prelude::*;
use std::collections::HashMap;

pub type Pairs = Vec<(usize, usize)>;

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// A pair of graphs as adjacency matrices.
pub struct Board {
    pub a: Vec<Vec<bool>>,
    pub b: Vec<Vec<bool>>,
}

impl Board {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        Board {
            a: matrix(g),
            b: matrix(h),
        }
    }

    pub fn partial_iso(&self, ps: &[(usize, usize)]) -> bool {
        ps.iter().all(|&(x, y)| {
            ps.iter()
                .all(|&(u, v)| (x == u) == (y == v) && self.a[x][u] == self.b[y][v])
        })
    }

    fn with(ps: &[(usize, usize)], p: (usize, usize)) -> Pairs {
        let mut out = ps.to_vec();
        out.push(p);
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The `d`-round back-and-forth relation, by direct recursion with a memo.
pub struct BackAndForth {
    board: Board,
    memo: HashMap<(Pairs, usize), bool>,
}

impl BackAndForth {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        BackAndForth {
            board: Board::new(g, h),
            memo: HashMap::new(),
        }
    }

    pub fn equivalent(&mut self, ps: &Pairs, d: usize) -> bool {
        if !self.board.partial_iso(ps) {
            return false;
        }
        if d == 0 {
            return true;
        }
        if let Some(&known) = self.memo.get(&(ps.clone(), d)) {
            return known;
        }
        let (na, nb) = (self.board.a.len(), self.board.b.len());
        let forth =
            (0..na).all(|x| (0..nb).any(|y| self.equivalent(&Board::with(ps, (x, y)), d - 1)));
        let back = forth
            && (0..nb).all(|y| (0..na).any(|x| self.equivalent(&Board::with(ps, (x, y)), d - 1)));
        self.memo.insert((ps.clone(), d), back);
        back
    }

    /// Least `d` at which the graphs are told apart.
    pub fn depth(&mut self) -> usize {
        (0..).find(|&d| !self.equivalent(&Vec::new(), d)).unwrap()
    }
}

/// Whether Duplicator wins the unbounded `k`-pebble game, by iterating the
/// greatest fixpoint over all pair sets of size at most `k`.
pub fn pebble_survives(g: &Graph, h: &Graph, k: usize) -> bool {
    let board = Board::new(g, h);
    let (na, nb) = (g.n(), h.n());
    let mut positions: Vec<Pairs> = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for ps in &frontier {
            let last = ps.last().map_or(0, |p: &(usize, usize)| p.0 + 1);
            for x in last..na {
                for y in 0..nb {
                    let q = Board::with(ps, (x, y));
                    if board.partial_iso(&q) {
                        next.push(q);
                    }
                }
            }
        }
        positions.extend(next.iter().cloned());
        frontier = next;
    }
    let mut alive: HashMap<Pairs, bool> = positions.iter().map(|p| (p.clone(), true)).collect();
    let holds = |alive: &HashMap<Pairs, bool>, q: &Pairs| alive.get(q).copied().unwrap_or(false);
    loop {
        let mut changed = false;
        for p in &positions {
            if !alive[p] {
                continue;
            }
            // a free pebble, or any placed one lifted first
            let mut bases: Vec<Pairs> = Vec::new();
            if p.len() < k {
                bases.push(p.clone());
            }
            for i in 0..p.len() {
                let mut q = p.clone();
                q.remove(i);
                bases.push(q);
            }
            let ok = bases.iter().all(|q| {
                (0..na).all(|x| (0..nb).any(|y| holds(&alive, &Board::with(q, (x, y)))))
                    && (0..nb).all(|y| (0..na).any(|x| holds(&alive, &Board::with(q, (x, y)))))
            });
            if !ok {
                alive.insert(p.clone(), false);
                changed = true;
            }
        }
        if !changed || !alive[&Vec::new()] {
            return alive[&Vec::new()];
        }
    }
}

/// All connected graphs on `1..=nmax` vertices.
pub fn connected_up_to(nmax: usize) -> Vec<Graph> {
    (1..=nmax)
        .flat_map(|n| {
            connected_graphs(n)
                .unwrap()
                .iter()
                .cloned()
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Graphs on `1..=nmax` vertices with arbitrary edge sets.
pub fn graph_strategy(nmax: usize) -> impl Strategy<Value = Graph> {
    (1..=nmax).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}
