//! Exact treewidth by branch and bound over elimination orderings.
//!
//! A state is the set of vertices eliminated so far together with the fill
//! graph on the rest. Simplicial vertices, and almost simplicial ones whose
//! degree does not exceed the current lower bound, are eliminated without
//! branching. The lower bound is the degeneracy of the remaining fill graph;
//! states already reached at no larger width are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

pub const TREEWIDTH_CEILING: usize = 16;

fn degree(adj: &[u64], v: usize, alive: u64) -> u32 {
    (adj[v] & alive).count_ones()
}

fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Largest minimum degree over the subgraphs obtained by repeatedly deleting
/// a minimum-degree vertex.
fn degeneracy(adj: &[u64], mut alive: u64) -> usize {
    let mut best = 0;
    while alive != 0 {
        let v = ones(alive).min_by_key(|&v| degree(adj, v, alive)).unwrap();
        best = best.max(degree(adj, v, alive) as usize);
        alive &= !(1 << v);
    }
    best
}

fn eliminate(adj: &mut [u64], v: usize, alive: u64) {
    let nb = adj[v] & alive;
    for u in ones(nb) {
        adj[u] |= nb & !(1 << u);
    }
}

fn is_clique(adj: &[u64], set: u64) -> bool {
    ones(set).all(|u| adj[u] & set == set & !(1 << u))
}

/// A vertex that may be eliminated first without losing optimality, given
/// that the answer is known to be at least `lb`.
fn safe_vertex(adj: &[u64], alive: u64, lb: usize) -> Option<usize> {
    ones(alive).find(|&v| {
        let nb = adj[v] & alive;
        if is_clique(adj, nb) {
            return true;
        }
        nb.count_ones() as usize <= lb && ones(nb).any(|u| is_clique(adj, nb & !(1 << u)))
    })
}

struct Search {
    best: usize,
    seen: HashMap<u64, usize>,
}

impl Search {
    fn go(&mut self, adj: &mut Vec<u64>, alive: u64, width: usize) {
        let left = alive.count_ones() as usize;
        if left == 0 || left - 1 <= width {
            self.best = self.best.min(width.max(left.saturating_sub(1)));
            return;
        }
        let lb = width.max(degeneracy(adj, alive));
        if lb >= self.best {
            return;
        }
        match self.seen.get(&alive) {
            Some(&w) if w <= width => return,
            _ => {
                self.seen.insert(alive, width);
            }
        }
        if let Some(v) = safe_vertex(adj, alive, lb) {
            let d = degree(adj, v, alive) as usize;
            let saved = adj.clone();
            eliminate(adj, v, alive);
            self.go(adj, alive & !(1 << v), width.max(d));
            *adj = saved;
            return;
        }
        let mut order: Vec<usize> = ones(alive).collect();
        order.sort_by_key(|&v| degree(adj, v, alive));
        for v in order {
            let d = degree(adj, v, alive) as usize;
            if d.max(width) >= self.best {
                continue;
            }
            let saved = adj.clone();
            eliminate(adj, v, alive);
            self.go(adj, alive & !(1 << v), width.max(d));
            *adj = saved;
        }
    }
}

/// Width of the greedy min-degree elimination ordering.
fn greedy_width(adj: &[u64], mut alive: u64) -> usize {
    let mut adj = adj.to_vec();
    let mut w = 0;
    while alive != 0 {
        let v = ones(alive).min_by_key(|&v| degree(&adj, v, alive)).unwrap();
        w = w.max(degree(&adj, v, alive) as usize);
        eliminate(&mut adj, v, alive);
        alive &= !(1 << v);
    }
    w
}

/// Exact treewidth for graphs with at most `limit` vertices (`limit <= 64`).
pub fn treewidth_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.n();
    if n > limit.min(64) {
        return Err(Error::Resource(format!(
            "exact treewidth is limited to {} vertices, got {n}",
            limit.min(64)
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let alive = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = Search {
        best: greedy_width(&adj, alive),
        seen: HashMap::new(),
    };
    s.go(&mut adj.clone(), alive, 0);
    Ok(s.best)
}

pub fn treewidth(g: &Graph) -> Result<usize> {
    treewidth_with_limit(g, TREEWIDTH_CEILING)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{antipodal_product, complete_multipartite, hypercube, lollipop};
    use crate::graph::enumerate_connected;

    /// `TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|)`, where
    /// `Q(S, v)` is the set of vertices outside `S + v` reachable from `v`
    /// through `S`.
    fn subset_dp(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        let adj: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).fold(0, |m, u| m | 1 << u))
            .collect();
        let q = |s: u32, v: usize| -> usize {
            let mut reach = 1u32 << v;
            let mut frontier = reach;
            let mut out = 0u32;
            while frontier != 0 {
                let x = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let nb = adj[x] & !reach;
                out |= nb & !s;
                let inner = nb & s;
                reach |= nb;
                frontier |= inner;
            }
            (out & !(1 << v)).count_ones() as usize
        };
        let full = (1u32 << n) - 1;
        let mut tw = vec![usize::MAX; 1 << n];
        tw[0] = 0;
        for s in 1..=full {
            for v in 0..n {
                if s >> v & 1 == 1 {
                    let rest = s & !(1 << v);
                    let c = tw[rest as usize].max(q(rest, v));
                    tw[s as usize] = tw[s as usize].min(c);
                }
            }
        }
        tw[full as usize]
    }

    #[test]
    fn matches_subset_dp_on_small_connected_graphs() {
        for n in 1..=7 {
            for g in enumerate_connected(n).unwrap() {
                assert_eq!(treewidth(&g).unwrap(), subset_dp(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn known_values() {
        for n in 1..=10 {
            assert_eq!(treewidth(&Graph::complete(n)).unwrap(), n - 1);
        }
        for n in 3..=10 {
            assert_eq!(treewidth(&Graph::cycle(n).unwrap()).unwrap(), 2);
        }
        for a in 3..=5 {
            for b in 0..=3 {
                assert_eq!(treewidth(&lollipop(a, b).unwrap()).unwrap(), a - 1);
            }
        }
        assert_eq!(treewidth(&Graph::petersen()).unwrap(), 4);
        assert_eq!(treewidth(&hypercube(3).unwrap()).unwrap(), 3);
        assert_eq!(treewidth(&Graph::path(9)).unwrap(), 1);
        assert_eq!(treewidth(&Graph::empty(5)).unwrap(), 0);
    }

    #[test]
    fn agrees_with_dp_on_denser_graphs() {
        for g in [
            complete_multipartite(3, 3).unwrap(),
            Graph::complete_bipartite(4, 5),
            hypercube(3)
                .unwrap()
                .disjoint_union(&Graph::cycle(5).unwrap()),
        ] {
            assert_eq!(treewidth(&g).unwrap(), subset_dp(&g));
        }
    }

    #[test]
    fn base_graph_is_a_minor_of_the_product() {
        let k4 = Graph::complete(4);
        let p = antipodal_product(&k4, &Graph::complete(2), 0, 1).unwrap();
        assert_eq!(p.n(), 16);
        assert!(treewidth(&p).unwrap() >= treewidth(&k4).unwrap());
        let k3 = Graph::complete(3);
        let q = antipodal_product(&k3, &Graph::path(3), 0, 2).unwrap();
        assert!(treewidth(&q).unwrap() >= 2);
    }

    #[test]
    fn ceiling() {
        assert!(matches!(
            treewidth(&Graph::path(17)),
            Err(Error::Resource(_))
        ));
        assert_eq!(
            treewidth_with_limit(&Graph::cycle(40).unwrap(), 64).unwrap(),
            2
        );
    }
}
